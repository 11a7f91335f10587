"""Relation area for the one-relator presentation <a, b | a b a' b^-n>.

Two routes to an area figure:

  * area_oracle: exact minimum number of relator applications, found by an
    A* search from the word toward the empty word. A move inserts a cyclic
    rotation of the relator or of its inverse at any position of the current
    reduced word; free reduction costs nothing. Minimal move counts equal the
    area as long as the intermediate-length cap never prunes a branch; when
    it does prune, the result is reported as an upper bound, never silently
    as exact. This is desk-scale machinery: keep words short and areas small.

  * area_strategy: the deterministic corridor count for the commutator
    witness words w_k = [a^k b a^-k, b], rewriting each a b^m a' block to
    b^(nm) at cost m from the inside out. The count is exactly
    2 (n^k - 1)/(n - 1); it is an upper bound on the true area and the
    ratio of consecutive counts tends to n.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction

from .algebra import GroupWord, Letter, word
from .baumslag import bs_equal
from .errors import AreaBudgetExceeded

DEFAULT_MAX_AREA = 6
DEFAULT_MAX_LEN = 20


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relators: tuple[GroupWord, ...]

    def __post_init__(self):
        for r in self.relators:
            if not r:
                raise ValueError("relators must be nonempty")


def relator(n: int) -> GroupWord:
    """The defining relator a b a' b^-n, of length n + 3."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    return word("a b a'") * word("b'") ** n


def bs_presentation(n: int) -> Presentation:
    return Presentation(("a", "b"), (relator(n),))


@dataclass(frozen=True)
class AreaResult:
    """An area figure; exact only for oracle results with no cap pruning."""

    word: GroupWord
    area: int
    method: str  # "oracle" | "strategy"
    exact: bool


def word_length(w: GroupWord) -> int:
    return len(w)


def is_relation(w: GroupWord, n: int) -> bool:
    return bs_equal(w, GroupWord(), n)


def witness_word(k: int, n: int) -> GroupWord:
    """The commutator [a^k b a^-k, b], a relation of length 4k + 4.

    It is trivial because a^k b a^-k and b are both translations in the
    affine model (by n^k and by 1), and translations commute.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    a, b = word("a"), word("b")
    x = a ** k * b * a ** -k
    return x * b * ~x * ~b


def area_strategy(k: int, n: int) -> AreaResult:
    """Corridor count for witness_word(k, n): exactly 2 (n^k - 1)/(n - 1) moves."""
    w = witness_word(k, n)
    count = 2 * (n ** k - 1) // (n - 1)
    return AreaResult(w, count, "strategy", False)


def _rotations(r: GroupWord) -> list[tuple[Letter, ...]]:
    out = []
    for w in (r, ~r):
        lets = w.letters
        for i in range(len(lets)):
            rot = lets[i:] + lets[:i]
            if rot not in out:
                out.append(rot)
    return out


def area_oracle(
    w: GroupWord,
    n: int,
    max_area: int = DEFAULT_MAX_AREA,
    max_len: int = DEFAULT_MAX_LEN,
) -> AreaResult:
    """Minimum number of relator applications trivializing w.

    A* over reduced words with unit move cost and the admissible heuristic
    ceil(len / relator length), since one move changes the length by at most
    the relator length. Raises AreaBudgetExceeded if no filling is found
    with at most max_area moves inside the length cap.
    """
    if not is_relation(w, n):
        raise ValueError(f"{w} is not a relation in BS(1,{n})")
    r = relator(n)
    rot_len = len(r)

    def h(letters: tuple[Letter, ...]) -> int:
        return -(-len(letters) // rot_len)

    start = w.letters
    if not start:
        return AreaResult(w, 0, "oracle", True)
    rotations = _rotations(r)
    capped = False
    best: dict[tuple[Letter, ...], int] = {start: 0}
    counter = 0
    heap: list[tuple[int, int, int, tuple[Letter, ...]]] = [(h(start), 0, counter, start)]
    while heap:
        f, g, _, u = heapq.heappop(heap)
        if f > max_area:
            break
        if g > best.get(u, g):
            continue
        if not u:
            return AreaResult(w, g, "oracle", not capped)
        for rot in rotations:
            for pos in range(len(u) + 1):
                v = GroupWord(u[:pos] + rot + u[pos:]).letters
                if len(v) > max_len:
                    capped = True
                    continue
                if g + 1 < best.get(v, max_area + 1):
                    best[v] = g + 1
                    counter += 1
                    heapq.heappush(heap, (g + 1 + h(v), g + 1, counter, v))
    raise AreaBudgetExceeded(
        f"no filling with at most {max_area} relator applications"
        f" (intermediate length cap {max_len}{', cap pruned branches' if capped else ''})",
        max_area,
    )


@dataclass(frozen=True)
class GrowthRow:
    k: int
    length: int
    area: int
    ratio: Fraction | None  # area divided by the previous row's area


def growth_table(n: int, k_max: int) -> list[GrowthRow]:
    """Strategy areas of the witness words for k = 1..k_max; ratios tend to n."""
    if k_max < 2:
        raise ValueError(f"k_max must be >= 2, got {k_max}")
    rows: list[GrowthRow] = []
    prev: int | None = None
    for k in range(1, k_max + 1):
        area = area_strategy(k, n).area
        ratio = None if prev is None else Fraction(area, prev)
        rows.append(GrowthRow(k, 4 * k + 4, area, ratio))
        prev = area
    return rows


def format_growth_table(rows: list[GrowthRow], fmt: str = "text") -> str:
    """Render rows as aligned text or CSV; ratios printed to 4 decimal places."""
    def ratio_str(row: GrowthRow) -> str:
        return "" if row.ratio is None else f"{float(row.ratio):.4f}"

    if fmt == "csv":
        lines = ["k,length,area,ratio"]
        lines += [f"{r.k},{r.length},{r.area},{ratio_str(r)}" for r in rows]
        return "\n".join(lines) + "\n"
    if fmt == "text":
        header = ("k", "length", "area", "ratio")
        table = [header] + [
            (str(r.k), str(r.length), str(r.area), ratio_str(r) or "-") for r in rows
        ]
        widths = [max(len(row[c]) for row in table) for c in range(4)]
        lines = ["  ".join(cell.rjust(w) for cell, w in zip(row, widths)) for row in table]
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}")
