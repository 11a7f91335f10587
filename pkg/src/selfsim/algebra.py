"""Permutations, freely reduced words, and exact rationals with power-of-n denominators."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .errors import DegreeError

# A letter is a symbol together with a sign (+1 for the symbol, -1 for its inverse).
Letter = tuple[str, int]


class Permutation:
    """A permutation of {1, ..., d}.

    Values are applied on the left, and composition applies the right factor
    first: (p * q)(i) == p(q(i)).
    """

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]):
        imgs = tuple(images)
        if sorted(imgs) != list(range(1, len(imgs) + 1)):
            raise ValueError(f"not a bijection of 1..{len(imgs)}: {imgs!r}")
        self.images = imgs

    @property
    def degree(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(range(1, degree + 1))

    @classmethod
    def from_cycles(cls, degree: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        images = list(range(1, degree + 1))
        for cycle in cycles:
            for k, i in enumerate(cycle):
                images[i - 1] = cycle[(k + 1) % len(cycle)]
        return cls(images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.degree != other.degree:
            raise DegreeError(f"degree {self.degree} vs {other.degree}")
        return Permutation(self.images[j - 1] for j in other.images)

    def __invert__(self) -> "Permutation":
        images = [0] * self.degree
        for i, j in enumerate(self.images, start=1):
            images[j - 1] = i
        return Permutation(images)

    def inverse(self) -> "Permutation":
        return ~self

    def is_identity(self) -> bool:
        return all(j == i for i, j in enumerate(self.images, start=1))

    def cycles(self) -> list[tuple[int, ...]]:
        seen: set[int] = set()
        out = []
        for start in range(1, self.degree + 1):
            if start in seen or self(start) == start:
                continue
            cycle = [start]
            seen.add(start)
            j = self(start)
            while j != start:
                cycle.append(j)
                seen.add(j)
                j = self(j)
            out.append(tuple(cycle))
        return out

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __str__(self) -> str:
        body = "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles())
        return body or "()"

    def __repr__(self) -> str:
        return f"Permutation({list(self.images)!r})"


def _reduced(letters: Iterable[Letter]) -> tuple[Letter, ...]:
    stack: list[Letter] = []
    for sym, sign in letters:
        if sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {sign!r}")
        if stack and stack[-1][0] == sym and stack[-1][1] == -sign:
            stack.pop()
        else:
            stack.append((sym, sign))
    return tuple(stack)


class GroupWord:
    """A freely reduced word over an arbitrary symbol alphabet with formal inverses.

    The text form writes letters separated by spaces, marks an inverse with a
    trailing apostrophe, and writes the empty word as "1".
    """

    __slots__ = ("letters",)

    def __init__(self, letters: Iterable[Letter] = ()):
        self.letters = _reduced(letters)

    @classmethod
    def parse(cls, text: str) -> "GroupWord":
        letters: list[Letter] = []
        for token in text.split():
            if token == "1":
                continue
            sym, sign = (token[:-1], -1) if token.endswith("'") else (token, 1)
            if not sym.isidentifier():
                raise ValueError(f"bad letter {token!r}")
            letters.append((sym, sign))
        return cls(letters)

    def __mul__(self, other: "GroupWord") -> "GroupWord":
        return GroupWord(self.letters + other.letters)

    def __invert__(self) -> "GroupWord":
        return GroupWord((sym, -sign) for sym, sign in reversed(self.letters))

    def __pow__(self, k: int) -> "GroupWord":
        if k < 0:
            return (~self) ** (-k)
        out = GroupWord()
        for _ in range(k):
            out = out * self
        return out

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GroupWord) and self.letters == other.letters

    def __hash__(self) -> int:
        return hash(self.letters)

    def exponent_sum(self, symbol: str) -> int:
        return sum(sign for sym, sign in self.letters if sym == symbol)

    def symbols(self) -> set[str]:
        return {sym for sym, _ in self.letters}

    def __str__(self) -> str:
        return " ".join(s + ("" if g == 1 else "'") for s, g in self.letters) or "1"

    def __repr__(self) -> str:
        return f"GroupWord.parse({str(self)!r})"


def word(text: str) -> GroupWord:
    """Shorthand parser, e.g. word("b' a' b b a")."""
    return GroupWord.parse(text)


class NPowerRational:
    """Exact value num / base**exp for a fixed base >= 2.

    Canonical form: exp == 0, or base does not divide num.
    """

    __slots__ = ("base", "num", "exp")

    def __init__(self, base: int, num: int, exp: int = 0):
        if base < 2:
            raise ValueError(f"base must be >= 2, got {base}")
        if exp < 0:
            num *= base ** (-exp)
            exp = 0
        while exp > 0 and num % base == 0:
            num //= base
            exp -= 1
        if num == 0:
            exp = 0
        self.base = base
        self.num = num
        self.exp = exp

    def _check_base(self, other: "NPowerRational") -> None:
        if self.base != other.base:
            raise ValueError(f"base mismatch: {self.base} vs {other.base}")

    def __add__(self, other: "NPowerRational") -> "NPowerRational":
        self._check_base(other)
        e = max(self.exp, other.exp)
        num = self.num * self.base ** (e - self.exp) + other.num * self.base ** (e - other.exp)
        return NPowerRational(self.base, num, e)

    def __sub__(self, other: "NPowerRational") -> "NPowerRational":
        return self + (-other)

    def __neg__(self) -> "NPowerRational":
        return NPowerRational(self.base, -self.num, self.exp)

    def __mul__(self, other: "NPowerRational") -> "NPowerRational":
        self._check_base(other)
        return NPowerRational(self.base, self.num * other.num, self.exp + other.exp)

    def shifted(self, k: int) -> "NPowerRational":
        """Multiply by base**k (k may be negative)."""
        return NPowerRational(self.base, self.num, self.exp - k)

    def is_zero(self) -> bool:
        return self.num == 0

    def as_fraction(self) -> Fraction:
        return Fraction(self.num, self.base ** self.exp)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, NPowerRational)
            and (self.base, self.num, self.exp) == (other.base, other.num, other.exp)
        )

    def __hash__(self) -> int:
        return hash((self.base, self.num, self.exp))

    def __str__(self) -> str:
        return str(self.num) if self.exp == 0 else f"{self.num}/{self.base}^{self.exp}"

    def __repr__(self) -> str:
        return f"NPowerRational({self.base}, {self.num}, {self.exp})"
