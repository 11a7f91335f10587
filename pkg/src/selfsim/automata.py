"""Finite-state tree automorphisms presented by wreath recursion.

A machine lists named states, each with a root permutation of {1, ..., d} and,
per tree letter, a transition word over the states. Transition entries are
full words (not single states) so that composite first-level sections can be
written down directly. Elements are freely reduced words in the states;
sections, vertex actions, and the triviality search all operate on such words.

Inverse letters never materialize an inverse machine: the section of s' at i
is the inverse of the section of s at the preimage of i under s's root
permutation, computed on demand.
"""

from __future__ import annotations

import random
from collections import deque
from typing import Iterable, Mapping

from .algebra import GroupWord, Letter, Permutation
from .errors import LetterError, SearchBudgetExceeded

#: Default bound on the number of distinct section words the triviality
#: search may visit before it gives up with SearchBudgetExceeded.
DEFAULT_MAX_TUPLES = 10**6


class Vertex:
    """A vertex of the rooted d-ary tree: a finite string of letters from 1..d.

    The text form is the digit string of the letters, with "-" for the root.
    """

    __slots__ = ("arity", "letters")

    def __init__(self, arity: int, letters: Iterable[int] = ()):
        if arity < 2:
            raise ValueError(f"arity must be >= 2, got {arity}")
        lets = tuple(letters)
        for c in lets:
            if not 1 <= c <= arity:
                raise LetterError(f"letter {c} outside 1..{arity}")
        self.arity = arity
        self.letters = lets

    @classmethod
    def parse(cls, arity: int, text: str) -> "Vertex":
        if text == "-":
            return cls(arity)
        if arity > 9:
            raise ValueError("digit-string vertices require arity <= 9")
        if not text.isdigit():
            raise ValueError(f"bad vertex {text!r}")
        return cls(arity, (int(c) for c in text))

    def child(self, i: int) -> "Vertex":
        return Vertex(self.arity, self.letters + (i,))

    def cat(self, other: "Vertex") -> "Vertex":
        if self.arity != other.arity:
            raise ValueError("arity mismatch")
        return Vertex(self.arity, self.letters + other.letters)

    def is_prefix_of(self, other: "Vertex") -> bool:
        return other.letters[: len(self.letters)] == self.letters

    def suffix_after(self, prefix: "Vertex") -> tuple[int, ...]:
        if not prefix.is_prefix_of(self):
            raise ValueError(f"{prefix} is not a prefix of {self}")
        return self.letters[len(prefix.letters):]

    def __len__(self) -> int:
        return len(self.letters)

    def __getitem__(self, k: int) -> int:
        return self.letters[k]

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Vertex)
            and self.arity == other.arity
            and self.letters == other.letters
        )

    def __hash__(self) -> int:
        return hash((self.arity, self.letters))

    def __str__(self) -> str:
        if not self.letters:
            return "-"
        if self.arity <= 9:
            return "".join(map(str, self.letters))
        return ".".join(map(str, self.letters))

    def __repr__(self) -> str:
        return f"Vertex({self.arity}, {self.letters!r})"


class MealyMachine:
    """Arity, named states, root permutations, and per-letter transition words."""

    def __init__(
        self,
        arity: int,
        states: Iterable[str],
        root_perm: Mapping[str, Permutation],
        transitions: Mapping[tuple[str, int], GroupWord],
    ):
        if arity < 2:
            raise ValueError(f"arity must be >= 2, got {arity}")
        names = tuple(states)
        if len(set(names)) != len(names):
            raise ValueError("duplicate state names")
        for name in names:
            if not name.isidentifier():
                raise ValueError(f"bad state name {name!r}")
        self.arity = arity
        self.states = names
        self.root_perm = {s: root_perm[s] for s in names}
        self.transitions: dict[tuple[str, int], GroupWord] = {}
        for s in names:
            if self.root_perm[s].degree != arity:
                raise ValueError(f"root permutation of {s} has degree "
                                 f"{self.root_perm[s].degree}, expected {arity}")
            for i in range(1, arity + 1):
                w = transitions[(s, i)]
                for sym, _ in w:
                    if sym not in self.root_perm:
                        raise ValueError(f"transition of ({s}, {i}) uses undeclared state {sym!r}")
                self.transitions[(s, i)] = w
        self._inv_root = {s: ~p for s, p in self.root_perm.items()}

    def letter_perm(self, sym: str, sign: int) -> Permutation:
        return self.root_perm[sym] if sign == 1 else self._inv_root[sym]

    def letter_section(self, sym: str, sign: int, i: int) -> GroupWord:
        if sign == 1:
            return self.transitions[(sym, i)]
        return ~self.transitions[(sym, self._inv_root[sym](i))]

    def element(self, w: GroupWord | str) -> "Element":
        if isinstance(w, str):
            w = GroupWord.parse(w)
        return Element(self, w)

    def identity(self) -> "Element":
        return Element(self, GroupWord())

    def state(self, name: str) -> "Element":
        return Element(self, GroupWord([(name, 1)]))

    def generators(self) -> list["Element"]:
        return [self.state(s) for s in self.states]

    def extend_persistent(self) -> "MealyMachine":
        """Raise the arity by one; every state fixes the new letter and is its own last section.

        The restriction of the new action to vertices over the old letters
        equals the old action, and the set of states of any element is
        unchanged.
        """
        d = self.arity + 1
        perms = {s: Permutation(p.images + (d,)) for s, p in self.root_perm.items()}
        trans = dict(self.transitions)
        for s in self.states:
            trans[(s, d)] = GroupWord([(s, 1)])
        return MealyMachine(d, self.states, perms, trans)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, MealyMachine)
            and self.arity == other.arity
            and self.states == other.states
            and self.root_perm == other.root_perm
            and self.transitions == other.transitions
        )

    def __repr__(self) -> str:
        return f"MealyMachine(arity={self.arity}, states={list(self.states)})"


def _root_perm_of_word(machine: MealyMachine, w: GroupWord) -> Permutation:
    p = Permutation.identity(machine.arity)
    for sym, sign in w:
        p = p * machine.letter_perm(sym, sign)
    return p


def _section_word(machine: MealyMachine, w: GroupWord, i: int) -> GroupWord:
    """Section of the word at letter i: concatenate per-letter sections right to left."""
    if not 1 <= i <= machine.arity:
        raise LetterError(f"letter {i} outside 1..{machine.arity}")
    parts: list[GroupWord] = []
    j = i
    for sym, sign in reversed(w.letters):
        parts.append(machine.letter_section(sym, sign, j))
        j = machine.letter_perm(sym, sign)(j)
    letters: list[Letter] = []
    for part in reversed(parts):
        letters.extend(part.letters)
    return GroupWord(letters)


class Element:
    """A tree automorphism given as a freely reduced word in a machine's states."""

    __slots__ = ("machine", "word")

    def __init__(self, machine: MealyMachine, w: GroupWord):
        for sym, _ in w:
            if sym not in machine.root_perm:
                raise ValueError(f"word uses undeclared state {sym!r}")
        self.machine = machine
        self.word = w

    def _check_machine(self, other: "Element") -> None:
        if self.machine is not other.machine and self.machine != other.machine:
            raise ValueError("elements live over different machines")

    def __mul__(self, other: "Element") -> "Element":
        self._check_machine(other)
        return Element(self.machine, self.word * other.word)

    def __invert__(self) -> "Element":
        return Element(self.machine, ~self.word)

    def __pow__(self, k: int) -> "Element":
        return Element(self.machine, self.word ** k)

    def root_permutation(self) -> Permutation:
        return _root_perm_of_word(self.machine, self.word)

    def section(self, i: int) -> "Element":
        return Element(self.machine, _section_word(self.machine, self.word, i))

    def section_along(self, path: Iterable[int]) -> "Element":
        w = self.word
        for c in path:
            w = _section_word(self.machine, w, c)
        return Element(self.machine, w)

    def act(self, v: Vertex) -> Vertex:
        """Image of a vertex; depth is preserved."""
        if v.arity != self.machine.arity:
            raise ValueError(f"vertex arity {v.arity} does not match machine arity {self.machine.arity}")
        w = self.word
        out = []
        for c in v.letters:
            out.append(_root_perm_of_word(self.machine, w)(c))
            w = _section_word(self.machine, w, c)
        return Vertex(v.arity, out)

    def is_trivial(self, max_tuples: int = DEFAULT_MAX_TUPLES) -> bool:
        """Decide whether the element acts trivially on the whole tree.

        Breadth-first search over the freely reduced section words reachable
        from the element's word: the action is trivial iff every reachable
        word has identity root permutation. Visiting more than max_tuples
        distinct words raises SearchBudgetExceeded instead of answering.
        """
        machine = self.machine
        seen = {self.word.letters}
        queue = deque([self.word])
        while queue:
            w = queue.popleft()
            if not _root_perm_of_word(machine, w).is_identity():
                return False
            for i in range(1, machine.arity + 1):
                s = _section_word(machine, w, i)
                if s.letters not in seen:
                    if len(seen) >= max_tuples:
                        raise SearchBudgetExceeded(
                            f"triviality search visited {max_tuples} section words", max_tuples
                        )
                    seen.add(s.letters)
                    queue.append(s)
        return True

    def equals(self, other: "Element", max_tuples: int = DEFAULT_MAX_TUPLES) -> bool:
        self._check_machine(other)
        return (self * ~other).is_trivial(max_tuples)

    def __eq__(self, other: object) -> bool:
        # Literal word equality; use equals() for equality of tree actions.
        return (
            isinstance(other, Element)
            and self.machine == other.machine
            and self.word == other.word
        )

    def __hash__(self) -> int:
        return hash(self.word)

    def __repr__(self) -> str:
        return f"<Element {self.word}>"


def state_closure(
    seeds: Iterable[Element],
    max_states: int = 1000,
    max_tuples: int = DEFAULT_MAX_TUPLES,
) -> list[Element]:
    """Representatives of all states of the seeds, closed under sections.

    Returned elements are pairwise inequivalent under equals(); order is the
    deterministic breadth-first discovery order.
    """
    seeds = list(seeds)
    if not seeds:
        return []
    machine = seeds[0].machine
    reps: list[Element] = []
    queue = deque(seeds)
    while queue:
        g = queue.popleft()
        if any(g.equals(r, max_tuples) for r in reps):
            continue
        if len(reps) >= max_states:
            raise SearchBudgetExceeded(
                f"state closure exceeded {max_states} classes", max_states
            )
        reps.append(g)
        for i in range(1, machine.arity + 1):
            queue.append(g.section(i))
    return reps


def random_element(machine: MealyMachine, rng: random.Random, max_len: int, min_len: int = 0) -> Element:
    """A uniformly sign-mixed reduced word of length between min_len and max_len."""
    length = rng.randint(min_len, max_len)
    letters: list[Letter] = []
    while len(letters) < length:
        sym = rng.choice(machine.states)
        sign = rng.choice((1, -1))
        if letters and letters[-1] == (sym, -sign):
            continue
        letters.append((sym, sign))
    return Element(machine, GroupWord(letters))


def random_vertex(arity: int, rng: random.Random, depth: int) -> Vertex:
    return Vertex(arity, (rng.randint(1, arity) for _ in range(depth)))


def is_persistent(
    machine: MealyMachine,
    seed: int = 0,
    samples: int = 200,
    max_word_len: int = 6,
) -> bool:
    """Check that every element's last section is the element itself.

    The state-level check is exact: each state must fix the last letter and
    have itself as last transition. The word-level sample is a consequence of
    that and doubles as a self-test of the section machinery.
    """
    d = machine.arity
    for s in machine.states:
        if machine.root_perm[s](d) != d:
            return False
        if machine.transitions[(s, d)] != GroupWord([(s, 1)]):
            return False
    rng = random.Random(seed)
    for _ in range(samples):
        g = random_element(machine, rng, max_word_len)
        if _section_word(machine, g.word, d) != g.word:
            return False
    return True
