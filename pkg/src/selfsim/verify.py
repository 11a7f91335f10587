"""The property suite behind `selfsim verify`.

Runs the checks that pin down the BS(1,n) machine: the defining relation acts
trivially, the state closure has the right classes, no sampled power of b
acts trivially, the generating set is weakly diagonal, and the automaton
equality agrees with the affine oracle on seeded random word pairs. Machines
of arity n+2 are treated as persistent extensions and additionally checked
for persistence and for restriction agreement with the freshly built base
machine.

A search-budget overrun inside a check counts as a failure of that check
(the property could not be confirmed), never as a crash.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .algebra import word
from .automata import (
    MealyMachine,
    Vertex,
    is_persistent,
    random_element,
    random_vertex,
    state_closure,
)
from .baumslag import build_alpha, build_beta, build_machine, bs_equal, check_weakly_diagonal
from .errors import SearchBudgetExceeded

DEFAULT_PAIRS = 500
DEFAULT_VERIFY_TUPLES = 50_000


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


@dataclass
class RunReport:
    seed: int
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, detail: str) -> None:
        self.checks.append(CheckResult(name, passed, detail))

    def render(self) -> str:
        lines = [f"seed {self.seed}"]
        for c in self.checks:
            mark = "pass" if c.passed else "FAIL"
            lines.append(f"[{mark}] {c.name}: {c.detail}")
        lines.append("overall: " + ("pass" if self.passed else "FAIL"))
        return "\n".join(lines)


def _expected_closure_words(n: int):
    out = [word("1"), word("b")]
    out += [word("b") ** k * word("a") for k in range(n)]
    return out


def run_verification(
    machine: MealyMachine,
    n: int,
    seed: int = 0,
    pairs: int = DEFAULT_PAIRS,
    max_tuples: int = DEFAULT_VERIFY_TUPLES,
) -> RunReport:
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if set(machine.states) != {"a", "b"}:
        raise ValueError("verification expects a machine with states a and b")
    if machine.arity == n + 1:
        persistent = False
    elif machine.arity == n + 2:
        persistent = True
    else:
        raise ValueError(
            f"arity {machine.arity} matches neither n+1 nor n+2 for n={n}"
        )

    report = RunReport(seed=seed)
    a, b = machine.state("a"), machine.state("b")

    # Well defined: the defining relation acts trivially.
    rel = word("b'") * word("a'") * word("b") ** n * word("a")
    try:
        ok = machine.element(rel).is_trivial(max_tuples)
        detail = f"b' a' b^{n} a acts trivially" if ok else f"b' a' b^{n} a acts NONtrivially"
    except SearchBudgetExceeded as exc:
        ok, detail = False, f"unconfirmed: {exc}"
    report.add("relation", ok, detail)

    try:
        ok = (a * b).equals(machine.element(word("b") ** n * word("a")), max_tuples)
        detail = f"a b and b^{n} a have the same action" if ok else "a b differs from b^n a"
    except SearchBudgetExceeded as exc:
        ok, detail = False, f"unconfirmed: {exc}"
    report.add("equal-action", ok, detail)

    # Rational: the closure has n+2 classes and they are the expected elements,
    # with the b^k a rows carrying root beta^k alpha and the shifted sections.
    expected = _expected_closure_words(n)
    try:
        reps = state_closure([a, b], max_states=4 * (n + 2), max_tuples=max_tuples)
        ok = len(reps) == n + 2
        detail = f"{len(reps)} classes (expected {n + 2})"
        if ok:
            for w in expected:
                if sum(bs_equal(r.word, w, n) for r in reps) != 1:
                    ok, detail = False, f"closure misses or duplicates {w}"
                    break
        if ok:
            alpha, beta = build_alpha(n), build_beta(n)
            for k in range(n):
                g = machine.element(word("b") ** k * word("a"))
                expected_perm = alpha
                for _ in range(k):
                    expected_perm = beta * expected_perm
                got = g.root_permutation()
                # A persistent extension must fix the extra letters and agree below.
                if got.images[: n + 1] != expected_perm.images or any(
                    got(i) != i for i in range(n + 2, machine.arity + 1)
                ):
                    ok, detail = False, f"b^{k} a has wrong root permutation"
                    break
                for i in range(1, n + 2):
                    j = i - 1 if 2 <= i <= k + 1 else max(i - 2, 0)
                    if g.section(i).word != word("b") ** j * word("a"):
                        ok, detail = False, f"section of b^{k} a at {i} deviates"
                        break
                if not ok:
                    break
            else:
                detail += "; b^k a rows match"
    except SearchBudgetExceeded as exc:
        ok, detail = False, f"unconfirmed: {exc}"
    report.add("state-closure", ok, detail)

    # Faithful, part one: no sampled power of b acts trivially.
    ok, detail = True, "b^k nontrivial for k = 1..20"
    try:
        for k in range(1, 21):
            if (b ** k).is_trivial(max_tuples):
                ok, detail = False, f"b^{k} acts trivially"
                break
    except SearchBudgetExceeded as exc:
        ok, detail = False, f"unconfirmed: {exc}"
    report.add("b-powers", ok, detail)

    # Weakly diagonal generating set.
    wd = check_weakly_diagonal(machine, [a, b], n)
    report.add(
        "weakly-diagonal",
        wd.verdict,
        "all sections torsion over their generators" if wd.verdict else "a section escapes torsion",
    )

    # Faithful, part two: automaton equality agrees with the affine oracle.
    rng = random.Random(seed)
    ok, detail = True, f"oracle agreement on {pairs} pairs"
    for idx in range(pairs):
        u = random_element(machine, rng, 8)
        v = random_element(machine, rng, 8)
        expected_eq = bs_equal(u.word, v.word, n)
        try:
            got = u.equals(v, max_tuples)
        except SearchBudgetExceeded as exc:
            ok, detail = False, f"pair {idx} unconfirmed: {exc}"
            break
        if got != expected_eq:
            ok, detail = False, f"pair {idx} disagrees: {u.word} vs {v.word}"
            break
    report.add("oracle-agreement", ok, detail)

    if persistent:
        report.add(
            "persistent",
            is_persistent(machine, seed=seed),
            "every state fixes the last letter and is its own last section",
        )
        base = build_machine(n)
        ok, detail = True, "restriction agrees with the base machine on 100 vertices"
        rng = random.Random(seed + 1)
        for _ in range(100):
            g = random_element(base, rng, 5)
            v = random_vertex(base.arity, rng, rng.randint(0, 8))
            lifted = machine.element(g.word).act(Vertex(machine.arity, v.letters))
            if lifted.letters != g.act(v).letters:
                ok, detail = False, f"restriction differs at {v} for {g.word}"
                break
        report.add("restriction", ok, detail)

    return report
