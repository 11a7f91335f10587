import pytest

from selfsim.algebra import word
from selfsim.automata import MealyMachine
from selfsim.baumslag import build_machine
from selfsim.verify import run_verification


def mutated(machine, state, letter, replacement):
    transitions = dict(machine.transitions)
    transitions[(state, letter)] = word(replacement)
    return MealyMachine(machine.arity, machine.states, machine.root_perm, transitions)


class TestRunVerification:
    def test_base_machines_pass(self):
        for n in range(2, 7):
            report = run_verification(build_machine(n), n)
            assert report.passed, report.render()

    def test_persistent_machines_pass(self):
        for n in range(2, 7):
            report = run_verification(build_machine(n).extend_persistent(), n)
            assert report.passed, report.render()
            names = [c.name for c in report.checks]
            assert "persistent" in names and "restriction" in names

    def test_report_mentions_seed(self):
        report = run_verification(build_machine(2), 2, seed=7, pairs=20)
        assert "seed 7" in report.render()

    def test_deterministic_given_seed(self):
        a = run_verification(build_machine(2), 2, seed=3, pairs=50).render()
        b = run_verification(build_machine(2), 2, seed=3, pairs=50).render()
        assert a == b

    def test_broken_transition_fails_relation_check(self):
        bad = mutated(build_machine(2), "b", 1, "a")
        report = run_verification(bad, 2, pairs=50, max_tuples=20_000)
        assert not report.passed
        failed = {c.name for c in report.checks if not c.passed}
        assert failed, report.render()

    def test_arity_mismatch_rejected(self):
        with pytest.raises(ValueError):
            run_verification(build_machine(2), 3)

    def test_wrong_states_rejected(self):
        m = build_machine(2)
        renamed = MealyMachine(
            3,
            ("x", "b"),
            {"x": m.root_perm["a"], "b": m.root_perm["b"]},
            {
                ("x", i): word(str(m.transitions[("a", i)]).replace("a", "x"))
                for i in (1, 2, 3)
            }
            | {("b", i): word(str(m.transitions[("b", i)]).replace("a", "x")) for i in (1, 2, 3)},
        )
        with pytest.raises(ValueError):
            run_verification(renamed, 2)
