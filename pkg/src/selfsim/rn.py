"""Röver–Nekrashevych elements: prefix-replacement tables with group labels.

An element of V_d(G) is a finite table of (domain prefix, range prefix, g)
triples whose domain prefixes and range prefixes each form a complete prefix
code of the d-ary Cantor set. The triple (u, v, g) sends the cone of u to the
cone of v by stripping u, acting by g, and prepending v.

Tables are never auto-reduced; equality is decided by composing with the
inverse and checking that every cone maps to itself by a trivial label. That
test is exact because both codes partition the boundary, so an identity map
forces each domain prefix to equal its range prefix.
"""

from __future__ import annotations

from typing import Iterable, Union

from .algebra import GroupWord
from .automata import DEFAULT_MAX_TUPLES, Element, MealyMachine, Vertex
from .errors import NeedDeeperPrefix

Entry = tuple[Vertex, Vertex, GroupWord]


def _code_diagnostic(vertices: list[Vertex], arity: int, side: str) -> str | None:
    """None if the vertices form a complete prefix code, else what is wrong."""
    if len(set(vertices)) != len(vertices):
        return f"{side} prefixes are not distinct"
    for u in vertices:
        for v in vertices:
            if u is not v and u.is_prefix_of(v):
                return f"{side} prefixes are not an antichain: {u} is a prefix of {v}"
    # An antichain is complete iff its cone measures sum to 1.
    depth = max((len(v) for v in vertices), default=0)
    total = sum(arity ** (depth - len(v)) for v in vertices)
    if total != arity ** depth:
        return f"{side} cones do not cover the boundary"
    return None


class RNElement:
    """A table of (dom, ran, g) triples over one machine."""

    __slots__ = ("machine", "entries")

    def __init__(self, machine: MealyMachine, entries: Iterable[Entry]):
        ents = []
        for dom, ran, g in entries:
            if dom.arity != machine.arity or ran.arity != machine.arity:
                raise ValueError("entry arity does not match machine arity")
            for sym, _ in g:
                if sym not in machine.root_perm:
                    raise ValueError(f"label uses undeclared state {sym!r}")
            ents.append((dom, ran, g))
        if not ents:
            raise ValueError("a table needs at least one entry")
        self.machine = machine
        self.entries = tuple(ents)

    @classmethod
    def identity(cls, machine: MealyMachine) -> "RNElement":
        root = Vertex(machine.arity)
        return cls(machine, [(root, root, GroupWord())])

    @classmethod
    def from_element(cls, g: Element) -> "RNElement":
        root = Vertex(g.machine.arity)
        return cls(g.machine, [(root, root, g.word)])

    def validate(self) -> tuple[bool, str | None]:
        """Check the prefix-code invariants; returns (ok, diagnostic)."""
        d = self.machine.arity
        for side, idx in (("domain", 0), ("range", 1)):
            diag = _code_diagnostic([e[idx] for e in self.entries], d, side)
            if diag is not None:
                return False, diag
        return True, None

    def apply(self, v: Vertex) -> Vertex:
        """Image of a vertex deep enough to be routed through the table."""
        for dom, ran, g in self.entries:
            if dom.is_prefix_of(v):
                tail = Vertex(v.arity, v.suffix_after(dom))
                return ran.cat(Element(self.machine, g).act(tail))
        raise NeedDeeperPrefix(f"vertex {v} is shallower than the domain code")

    def expand_entry(self, index: int) -> "RNElement":
        """Replace entry (u, v, g) by its d children (u i, v g(i), g_i)."""
        dom, ran, g = self.entries[index]
        elt = Element(self.machine, g)
        rho = elt.root_permutation()
        children = [
            (dom.child(i), ran.child(rho(i)), elt.section(i).word)
            for i in range(1, self.machine.arity + 1)
        ]
        entries = self.entries[:index] + tuple(children) + self.entries[index + 1:]
        return RNElement(self.machine, entries)

    def _check_machine(self, other: "RNElement") -> None:
        if self.machine is not other.machine and self.machine != other.machine:
            raise ValueError("tables live over different machines")

    def __mul__(self, other: "RNElement") -> "RNElement":
        """Composition: (self * other) acts as first other, then self.

        Entries of the right factor are expanded just until each of its range
        prefixes reaches into a single domain cone of the left factor (the
        coarsest common refinement); the left factor is routed through with
        path sections, so it never needs expanding.
        """
        self._check_machine(other)
        machine = self.machine
        out: list[Entry] = []
        stack = list(reversed(other.entries))
        while stack:
            dom, ran, g = stack.pop()
            target = next((e for e in self.entries if e[0].is_prefix_of(ran)), None)
            if target is None:
                # Too shallow: split this entry one level and retry.
                elt = Element(machine, g)
                rho = elt.root_permutation()
                for i in range(machine.arity, 0, -1):
                    stack.append((dom.child(i), ran.child(rho(i)), elt.section(i).word))
                continue
            u, u_img, f = target
            tail = Vertex(machine.arity, ran.suffix_after(u))
            f_elt = Element(machine, f)
            image = u_img.cat(f_elt.act(tail))
            label = f_elt.section_along(tail.letters).word * g
            out.append((dom, image, label))
        return RNElement(machine, out)

    def __invert__(self) -> "RNElement":
        return RNElement(self.machine, [(ran, dom, ~g) for dom, ran, g in self.entries])

    def is_identity(self, max_tuples: int = DEFAULT_MAX_TUPLES) -> bool:
        return all(
            dom == ran and Element(self.machine, g).is_trivial(max_tuples)
            for dom, ran, g in self.entries
        )

    def equals(self, other: "RNElement", max_tuples: int = DEFAULT_MAX_TUPLES) -> bool:
        self._check_machine(other)
        return (self * ~other).is_identity(max_tuples)

    def __eq__(self, other: object) -> bool:
        # Literal table equality; use equals() for equality as homeomorphisms.
        return (
            isinstance(other, RNElement)
            and self.machine == other.machine
            and self.entries == other.entries
        )

    def __repr__(self) -> str:
        body = ", ".join(f"{d}->{r}:{g}" for d, r, g in self.entries)
        return f"<RNElement {body}>"


def _complement_cones(w: Vertex) -> list[Vertex]:
    """The sibling cones at every level along w; together with w they partition the boundary."""
    out = []
    for depth in range(len(w)):
        for i in range(1, w.arity + 1):
            if i != w[depth]:
                out.append(Vertex(w.arity, w.letters[:depth] + (i,)))
    return out


def iota(w: Vertex, h: Union[Element, "RNElement"]) -> RNElement:
    """The element acting like h on the cone of w and trivially elsewhere."""
    table = RNElement.from_element(h) if isinstance(h, Element) else h
    if len(w) == 0:
        return table
    entries: list[Entry] = [
        (w.cat(dom), w.cat(ran), g) for dom, ran, g in table.entries
    ]
    empty = GroupWord()
    entries.extend((s, s, empty) for s in _complement_cones(w))
    return RNElement(table.machine, entries)


def conjugator(machine: MealyMachine, w: Vertex, w_prime: Vertex) -> RNElement:
    """A label-free table c with c iota_w(h) c^-1 = iota_{w'}(h) for every h.

    c sends the cone of w to the cone of w' by plain prefix replacement and
    matches up the complements, expanding sibling cones as needed to equalize
    the two code sizes (the difference is always divisible by d - 1).
    """
    if len(w) == 0 or len(w_prime) == 0:
        raise ValueError("conjugator needs non-empty prefixes")
    d = machine.arity
    left = _complement_cones(w)
    right = _complement_cones(w_prime)
    while len(left) < len(right):
        v = left.pop(0)
        left.extend(v.child(i) for i in range(1, d + 1))
    while len(right) < len(left):
        v = right.pop(0)
        right.extend(v.child(i) for i in range(1, d + 1))
    empty = GroupWord()
    entries = [(w, w_prime, empty)]
    entries.extend((u, v, empty) for u, v in zip(left, right))
    return RNElement(machine, entries)


def verify_sigma_identity(s: Element, max_tuples: int = DEFAULT_MAX_TUPLES) -> bool:
    """Check iota_1(s) == sigma iota_11(s_1) ... iota_1d(s_d).

    sigma is realized as the depth-2 table permuting the cones below letter 1
    by the root permutation of s and fixing everything else.
    """
    machine = s.machine
    d = machine.arity
    rho = s.root_permutation()
    one = Vertex(d, (1,))
    empty = GroupWord()
    sigma_entries: list[Entry] = [
        (one.child(i), one.child(rho(i)), empty) for i in range(1, d + 1)
    ]
    sigma_entries.extend(
        (Vertex(d, (j,)), Vertex(d, (j,)), empty) for j in range(2, d + 1)
    )
    rhs = RNElement(machine, sigma_entries)
    for i in range(1, d + 1):
        rhs = rhs * iota(one.child(i), s.section(i))
    return iota(one, s).equals(rhs, max_tuples)
