"""Text formats for machines and prefix-replacement tables.

Machine files are keyword/value lines followed by one block per state:

    arity 3
    states a b

    state a
    perm 1 3 2
    1 -> a
    2 -> a
    3 -> b a

    state b
    perm 2 3 1
    1 -> 1
    2 -> 1
    3 -> b

Words list state names separated by spaces, a trailing apostrophe marks an
inverse, and "1" is the empty word. Blank lines and "#" comments are ignored;
the canonical serializer emits states in declaration order and letters 1..d,
so parse(serialize(m)) == m and serialize(parse(text)) == text on canonical
files.

Table files have one "dom ran word" line per entry, prefixes as digit strings
over 1..d with "-" for the root.
"""

from __future__ import annotations

from .algebra import GroupWord, Permutation
from .automata import MealyMachine, Vertex
from .errors import FormatError
from .rn import RNElement


def serialize_machine(machine: MealyMachine) -> str:
    lines = [f"arity {machine.arity}", "states " + " ".join(machine.states)]
    for s in machine.states:
        lines.append("")
        lines.append(f"state {s}")
        lines.append("perm " + " ".join(map(str, machine.root_perm[s].images)))
        for i in range(1, machine.arity + 1):
            lines.append(f"{i} -> {machine.transitions[(s, i)]}")
    lines.append("")
    return "\n".join(lines)


def _meaningful_lines(text: str):
    for num, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield num, line.split()


def _parse_word(tokens: list[str], num: int) -> GroupWord:
    try:
        return GroupWord.parse(" ".join(tokens))
    except ValueError as exc:
        raise FormatError(str(exc), num) from None


def parse_machine(text: str) -> MealyMachine:
    lines = list(_meaningful_lines(text))
    if not lines:
        raise FormatError("empty machine file")
    pos = 0

    def expect(keyword: str) -> tuple[int, list[str]]:
        nonlocal pos
        if pos >= len(lines):
            raise FormatError(f"expected '{keyword}' line, got end of file")
        num, tokens = lines[pos]
        if tokens[0] != keyword:
            raise FormatError(f"expected '{keyword}', got {tokens[0]!r}", num)
        pos += 1
        return num, tokens

    num, tokens = expect("arity")
    if len(tokens) != 2 or not tokens[1].isdigit():
        raise FormatError("arity takes one integer", num)
    arity = int(tokens[1])
    if arity < 2:
        raise FormatError(f"arity must be >= 2, got {arity}", num)

    num, tokens = expect("states")
    names = tokens[1:]
    if not names:
        raise FormatError("states line lists no states", num)

    perms: dict[str, Permutation] = {}
    transitions: dict[tuple[str, int], GroupWord] = {}
    current: str | None = None
    while pos < len(lines):
        num, tokens = lines[pos]
        pos += 1
        if tokens[0] == "state":
            if len(tokens) != 2 or tokens[1] not in names:
                raise FormatError(f"unknown state {' '.join(tokens[1:])!r}", num)
            current = tokens[1]
            if current in perms:
                raise FormatError(f"duplicate block for state {current!r}", num)
        elif tokens[0] == "perm":
            if current is None:
                raise FormatError("perm line outside a state block", num)
            try:
                perms[current] = Permutation(int(t) for t in tokens[1:])
            except ValueError as exc:
                raise FormatError(str(exc), num) from None
        elif tokens[0].isdigit():
            if current is None:
                raise FormatError("transition line outside a state block", num)
            letter = int(tokens[0])
            if not 1 <= letter <= arity:
                raise FormatError(f"letter {letter} outside 1..{arity}", num)
            if len(tokens) < 3 or tokens[1] != "->":
                raise FormatError("transition lines look like 'i -> word'", num)
            if (current, letter) in transitions:
                raise FormatError(f"duplicate transition for ({current}, {letter})", num)
            transitions[(current, letter)] = _parse_word(tokens[2:], num)
        else:
            raise FormatError(f"unexpected {tokens[0]!r}", num)

    for s in names:
        if s not in perms:
            raise FormatError(f"state {s!r} has no perm line")
        for i in range(1, arity + 1):
            if (s, i) not in transitions:
                raise FormatError(f"state {s!r} has no transition for letter {i}")
    try:
        return MealyMachine(arity, names, perms, transitions)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def serialize_table(element: RNElement) -> str:
    lines = [f"{dom} {ran} {g}" for dom, ran, g in element.entries]
    return "\n".join(lines) + "\n"


def parse_table(text: str, machine: MealyMachine) -> RNElement:
    entries = []
    for num, tokens in _meaningful_lines(text):
        if len(tokens) < 3:
            raise FormatError("table lines look like 'dom ran word'", num)
        try:
            dom = Vertex.parse(machine.arity, tokens[0])
            ran = Vertex.parse(machine.arity, tokens[1])
        except ValueError as exc:
            raise FormatError(str(exc), num) from None
        entries.append((dom, ran, _parse_word(tokens[2:], num)))
    if not entries:
        raise FormatError("empty table file")
    try:
        return RNElement(machine, entries)
    except ValueError as exc:
        raise FormatError(str(exc)) from None
