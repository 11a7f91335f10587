import pytest

from selfsim.baumslag import build_machine
from selfsim.cli import main
from selfsim.formats import parse_machine, parse_table, serialize_machine, serialize_table
from selfsim.rn import RNElement, iota
from selfsim.automata import Vertex


@pytest.fixture()
def bs2_file(tmp_path):
    path = tmp_path / "bs2.machine"
    path.write_text(serialize_machine(build_machine(2)))
    return str(path)


def table_file(tmp_path, name, element):
    path = tmp_path / name
    path.write_text(serialize_table(element))
    return str(path)


class TestGenBs:
    def test_stdout(self, capsys):
        assert main(["gen-bs", "2"]) == 0
        out = capsys.readouterr().out
        assert parse_machine(out) == build_machine(2)

    def test_persistent_flag(self, capsys):
        assert main(["gen-bs", "2", "--persistent"]) == 0
        machine = parse_machine(capsys.readouterr().out)
        assert machine.arity == 4
        assert str(machine.transitions[("a", 4)]) == "a"
        assert str(machine.transitions[("b", 4)]) == "b"

    def test_output_file(self, tmp_path, capsys):
        out = tmp_path / "m.machine"
        assert main(["gen-bs", "3", "-o", str(out)]) == 0
        assert parse_machine(out.read_text()) == build_machine(3)

    def test_n_too_small_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["gen-bs", "1"])
        assert exc.value.code == 2


class TestVerify:
    def test_good_machine(self, bs2_file, capsys):
        assert main(["verify", bs2_file, "--n", "2", "--pairs", "50"]) == 0
        out = capsys.readouterr().out
        assert "seed 0" in out
        assert "overall: pass" in out

    def test_persistent_machine(self, tmp_path, capsys):
        path = tmp_path / "p.machine"
        path.write_text(serialize_machine(build_machine(2).extend_persistent()))
        assert main(["verify", str(path), "--n", "2", "--pairs", "50"]) == 0
        assert "persistent" in capsys.readouterr().out

    def test_broken_machine_fails(self, bs2_file, tmp_path, capsys):
        text = open(bs2_file).read().replace("3 -> b a", "3 -> a")
        bad = tmp_path / "bad.machine"
        bad.write_text(text)
        assert main(["verify", str(bad), "--n", "2", "--pairs", "50",
                     "--max-tuples", "20000"]) == 1
        assert "[FAIL] relation" in capsys.readouterr().out

    def test_parse_error_exit_2(self, tmp_path, capsys):
        bad = tmp_path / "garbage.machine"
        bad.write_text("arity 3\nstates a\nstate a\nperm 9 9 9\n")
        assert main(["verify", str(bad), "--n", "2"]) == 2
        assert "line 4" in capsys.readouterr().err

    def test_missing_file_exit_2(self, capsys):
        assert main(["verify", "no-such-file", "--n", "2"]) == 2


class TestRn:
    def test_equal_defining_relation(self, bs2_file, tmp_path, capsys):
        m = build_machine(2)
        left = table_file(tmp_path, "ab.rn", RNElement.from_element(m.element("a b")))
        right = table_file(tmp_path, "bba.rn", RNElement.from_element(m.element("b b a")))
        assert main(["rn", "equal", left, right, "--machine", bs2_file]) == 0
        assert capsys.readouterr().out.strip() == "equal"

    def test_not_equal(self, bs2_file, tmp_path, capsys):
        m = build_machine(2)
        left = table_file(tmp_path, "a.rn", RNElement.from_element(m.state("a")))
        right = table_file(tmp_path, "b.rn", RNElement.from_element(m.state("b")))
        assert main(["rn", "equal", left, right, "--machine", bs2_file]) == 1
        assert capsys.readouterr().out.strip() == "not equal"

    def test_compose_swap_twice_is_identity(self, bs2_file, tmp_path, capsys):
        m = build_machine(2)
        swap = RNElement(
            m,
            [
                (Vertex.parse(3, "1"), Vertex.parse(3, "2"), m.identity().word),
                (Vertex.parse(3, "2"), Vertex.parse(3, "1"), m.identity().word),
                (Vertex.parse(3, "3"), Vertex.parse(3, "3"), m.identity().word),
            ],
        )
        swap_path = table_file(tmp_path, "swap.rn", swap)
        out_path = str(tmp_path / "square.rn")
        assert main(["rn", "compose", swap_path, swap_path,
                     "--machine", bs2_file, "-o", out_path]) == 0
        composed = parse_table(open(out_path).read(), m)
        assert composed.is_identity()

    def test_invert(self, bs2_file, tmp_path, capsys):
        m = build_machine(2)
        e = RNElement.from_element(m.state("b"))
        path = table_file(tmp_path, "b.rn", e)
        assert main(["rn", "invert", path, "--machine", bs2_file]) == 0
        assert capsys.readouterr().out == "- - b'\n"

    def test_iota(self, bs2_file, tmp_path, capsys):
        m = build_machine(2)
        path = table_file(tmp_path, "b.rn", RNElement.from_element(m.state("b")))
        assert main(["rn", "iota", path, "--machine", bs2_file, "--prefix", "1"]) == 0
        got = parse_table(capsys.readouterr().out, m)
        assert got == iota(Vertex.parse(3, "1"), m.state("b"))

    def test_sigma_check(self, bs2_file, capsys):
        assert main(["rn", "sigma-check", "--machine", bs2_file, "--state", "b"]) == 0
        assert "holds" in capsys.readouterr().out

    def test_equal_budget_exit_3(self, bs2_file, tmp_path, capsys):
        m = build_machine(2)
        left = table_file(tmp_path, "ab.rn", RNElement.from_element(m.element("a b")))
        right = table_file(tmp_path, "bba.rn", RNElement.from_element(m.element("b b a")))
        assert main(["rn", "equal", left, right, "--machine", bs2_file,
                     "--max-tuples", "1"]) == 3
        assert "budget" in capsys.readouterr().err

    def test_invalid_table_exit_2(self, bs2_file, tmp_path, capsys):
        bad = tmp_path / "bad.rn"
        bad.write_text("1 1 1\n11 2 1\n")
        assert main(["rn", "invert", str(bad), "--machine", bs2_file]) == 2
        assert "antichain" in capsys.readouterr().err

    def test_wrong_arity_usage(self, bs2_file, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["rn", "equal", "one.rn", "--machine", bs2_file])
        assert exc.value.code == 2


class TestDehn:
    def test_strategy(self, capsys):
        assert main(["dehn", "strategy", "--n", "2", "--k", "3"]) == 0
        assert capsys.readouterr().out.strip() == "14"

    def test_area_of_relator(self, capsys):
        assert main(["dehn", "area", "--n", "2", "--word", "a b a' b' b'"]) == 0
        assert capsys.readouterr().out.strip() == "1"

    def test_area_budget_exit_3(self, capsys):
        witness = "a b a' b a b' a' b'"
        assert main(["dehn", "area", "--n", "2", "--word", witness, "--max-area", "1"]) == 3

    def test_area_of_non_relation_exit_2(self, capsys):
        assert main(["dehn", "area", "--n", "2", "--word", "a"]) == 2

    def test_table_text(self, capsys):
        assert main(["dehn", "table", "--n", "2", "--k-max", "4"]) == 0
        out = capsys.readouterr().out
        assert [row.split()[2] for row in out.strip().splitlines()[1:]] == ["2", "6", "14", "30"]

    def test_table_csv(self, capsys):
        assert main(["dehn", "table", "--n", "2", "--k-max", "4", "--format", "csv"]) == 0
        out = capsys.readouterr().out
        assert out.splitlines()[0] == "k,length,area,ratio"
        assert out.splitlines()[4].startswith("4,20,30,")

    def test_missing_flag_usage_error(self):
        with pytest.raises(SystemExit) as exc:
            main(["dehn", "strategy", "--n", "2"])
        assert exc.value.code == 2
