"""The wreath-recursion representation of BS(1,n) on the (n+1)-ary tree.

BS(1,n) = <a, b | a b a' = b^n> acts on the tree via

    a -> alpha (a, a, b a, b^2 a, ..., b^(n-1) a)
    b -> beta  (1, ..., 1, b)

where beta is the full cycle (1 2 ... n+1) and alpha the product of the
transpositions (2 n+1)(3 n)(4 n-1)...; one checks alpha beta alpha' = beta^n.

Independently of the tree, the group acts faithfully on Z[1/n] by affine maps
with a as multiplication by n and b as adding one. AffineForm is that model;
it gives an exact equality oracle that never touches the automaton.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import GroupWord, NPowerRational, Permutation
from .automata import Element, MealyMachine


def build_alpha(n: int) -> Permutation:
    """The root permutation of a: swaps (k, n+3-k) for k = 2, 3, ... and fixes 1."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    images = list(range(1, n + 2))
    k, m = 2, n + 1
    while k < m:
        images[k - 1], images[m - 1] = images[m - 1], images[k - 1]
        k += 1
        m -= 1
    return Permutation(images)


def build_beta(n: int) -> Permutation:
    """The root permutation of b: the full cycle (1 2 ... n+1)."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    return Permutation.from_cycles(n + 1, [tuple(range(1, n + 2))])


def build_machine(n: int) -> MealyMachine:
    """The two-state machine realizing BS(1,n) on the (n+1)-ary tree."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    d = n + 1
    a_word = GroupWord([("a", 1)])
    b_word = GroupWord([("b", 1)])
    transitions: dict[tuple[str, int], GroupWord] = {("a", 1): a_word}
    for i in range(2, d + 1):
        transitions[("a", i)] = b_word ** (i - 2) * a_word
    for i in range(1, d):
        transitions[("b", i)] = GroupWord()
    transitions[("b", d)] = b_word
    return MealyMachine(
        d,
        ("a", "b"),
        {"a": build_alpha(n), "b": build_beta(n)},
        transitions,
    )


class AffineForm:
    """The map x -> base**p * x + offset on Z[1/base]."""

    __slots__ = ("p", "offset")

    def __init__(self, p: int, offset: NPowerRational):
        self.p = p
        self.offset = offset

    @property
    def base(self) -> int:
        return self.offset.base

    @classmethod
    def identity(cls, base: int) -> "AffineForm":
        return cls(0, NPowerRational(base, 0))

    def __mul__(self, other: "AffineForm") -> "AffineForm":
        # Composition, right factor applied first.
        return AffineForm(self.p + other.p, other.offset.shifted(self.p) + self.offset)

    def __invert__(self) -> "AffineForm":
        return AffineForm(-self.p, (-self.offset).shifted(-self.p))

    def is_identity(self) -> bool:
        return self.p == 0 and self.offset.is_zero()

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, AffineForm)
            and self.p == other.p
            and self.offset == other.offset
        )

    def __hash__(self) -> int:
        return hash((self.p, self.offset))

    def __repr__(self) -> str:
        return f"AffineForm(p={self.p}, offset={self.offset})"


def affine_of_word(w: GroupWord, n: int) -> AffineForm:
    """Homomorphic image of a word over {a, b} in the affine model."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    gen = {
        "a": AffineForm(1, NPowerRational(n, 0)),
        "b": AffineForm(0, NPowerRational(n, 1)),
    }
    out = AffineForm.identity(n)
    for sym, sign in w:
        if sym not in gen:
            raise ValueError(f"affine model only knows a and b, got {sym!r}")
        f = gen[sym]
        out = out * (f if sign == 1 else ~f)
    return out


def bs_equal(u: GroupWord, v: GroupWord, n: int) -> bool:
    """Equality in BS(1,n), decided in the faithful affine model."""
    return affine_of_word(u, n) == affine_of_word(v, n)


def normal_form(w: GroupWord, n: int) -> tuple[int, int, int]:
    """The (k, q, l) with w = a^-k b^q a^l; q is exact and may be astronomically large."""
    f = affine_of_word(w, n)
    k = max(f.offset.exp, -f.p)
    q = f.offset.num * n ** (k - f.offset.exp)
    l = f.p + k
    return k, q, l


def affine_of_powers(k: int, q: int, l: int, n: int) -> AffineForm:
    """The affine form of a^-k b^q a^l without materializing b^q as a word."""
    return AffineForm(l - k, NPowerRational(n, q, k))


@dataclass(frozen=True)
class AbelImage:
    """Image in the abelianization Z + Z/(n-1): a-exponent and b-exponent mod n-1."""

    a_exp: int
    b_exp: int

    @property
    def is_finite_order(self) -> bool:
        # The torsion subgroup is the b-part, so finite order means a_exp == 0.
        return self.a_exp == 0


def abelianize(w: GroupWord, n: int) -> AbelImage:
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    bad = w.symbols() - {"a", "b"}
    if bad:
        raise ValueError(f"abelianize expects a word over a, b; got {sorted(bad)}")
    return AbelImage(w.exponent_sum("a"), w.exponent_sum("b") % (n - 1))


@dataclass(frozen=True)
class WeakDiagonalRow:
    generator: str
    letter: int
    word: GroupWord
    finite_order: bool


@dataclass(frozen=True)
class WeakDiagonalReport:
    rows: tuple[WeakDiagonalRow, ...]

    @property
    def verdict(self) -> bool:
        return all(row.finite_order for row in self.rows)

    def render(self) -> str:
        lines = []
        for row in self.rows:
            state = "finite" if row.finite_order else "INFINITE"
            lines.append(
                f"section({row.generator}, {row.letter}) * ({row.generator})^-1"
                f" = {row.word}  [{state} order]"
            )
        lines.append(f"weakly diagonal: {'yes' if self.verdict else 'NO'}")
        return "\n".join(lines)


def _finite_in_abelianization(w: GroupWord) -> bool:
    # b maps into the torsion part; every other symbol must have exponent sum 0.
    return all(sym == "b" or w.exponent_sum(sym) == 0 for sym in w.symbols())


def check_weakly_diagonal(machine: MealyMachine, gens: list[Element], n: int) -> WeakDiagonalReport:
    """For each generator s and letter i, test whether s_i s^-1 is torsion in the abelianization."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    rows = []
    for g in gens:
        for i in range(1, machine.arity + 1):
            t = (g.section(i) * ~g).word
            rows.append(WeakDiagonalRow(str(g.word), i, t, _finite_in_abelianization(t)))
    return WeakDiagonalReport(tuple(rows))
