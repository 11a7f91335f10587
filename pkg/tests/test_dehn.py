import random
from fractions import Fraction

import pytest

from selfsim.algebra import GroupWord, word
from selfsim.dehn import (
    AreaResult,
    area_oracle,
    area_strategy,
    bs_presentation,
    format_growth_table,
    growth_table,
    is_relation,
    relator,
    witness_word,
    word_length,
)
from selfsim.errors import AreaBudgetExceeded


def conjugated_relator(rng, n, max_conj=2):
    c = GroupWord(
        (rng.choice(("a", "b")), rng.choice((1, -1)))
        for _ in range(rng.randint(0, max_conj))
    )
    r = relator(n) if rng.random() < 0.5 else ~relator(n)
    return c * r * ~c


class TestBasics:
    def test_relator_shape(self):
        for n in (2, 3, 6):
            assert word_length(relator(n)) == n + 3
        assert relator(2) == word("a b a' b' b'")

    def test_presentation_guard(self):
        assert bs_presentation(3).generators == ("a", "b")
        with pytest.raises(ValueError):
            bs_presentation(1)

    def test_word_length(self):
        assert word_length(word("1")) == 0
        assert word_length(word("a b' a")) == 3

    def test_is_relation(self):
        for n in (2, 3):
            assert is_relation(relator(n), n)
            assert not is_relation(word("a"), n)


class TestWitness:
    def test_k1_shape(self):
        assert witness_word(1, 2) == word("a b a' b a b' a' b'")
        assert word_length(witness_word(1, 2)) == 8

    def test_lengths(self):
        for n in (2, 3, 4):
            for k in range(1, 11):
                assert word_length(witness_word(k, n)) == 4 * k + 4

    def test_all_relations(self):
        for n in (2, 3, 4):
            for k in range(1, 11):
                assert is_relation(witness_word(k, n), n)

    def test_k_guard(self):
        with pytest.raises(ValueError):
            witness_word(0, 2)

    def test_n_guard(self):
        with pytest.raises(ValueError):
            witness_word(1, 1)


class TestStrategy:
    def test_closed_form_examples(self):
        assert area_strategy(1, 2).area == 2
        assert area_strategy(3, 2).area == 14
        assert area_strategy(2, 3).area == 8

    def test_closed_form_sweep(self):
        for n in (2, 3):
            for k in range(1, 11):
                assert area_strategy(k, n).area == 2 * (n**k - 1) // (n - 1)

    def test_is_upper_bound_flag(self):
        res = area_strategy(2, 2)
        assert res.method == "strategy" and not res.exact

    def test_large_k_stays_exact(self):
        # Counts reach n^40; everything stays integral, no overflow anywhere.
        assert area_strategy(40, 3).area == 3**40 - 1
        rows = growth_table(2, 40)
        assert rows[-1].area == 2 * (2**40 - 1)
        assert rows[-1].ratio == Fraction(2**40 - 1, 2**39 - 1)


class TestOracle:
    def test_empty_word(self):
        res = area_oracle(word("1"), 2)
        assert res == AreaResult(word("1"), 0, "oracle", True)

    def test_relator_has_area_one(self):
        for n in (2, 3):
            res = area_oracle(relator(n), n)
            assert res.area == 1
            assert res.exact  # the cap never binds this low

    def test_rotated_relator_has_area_one(self):
        r = relator(2)
        rotated = GroupWord(r.letters[2:] + r.letters[:2])
        assert area_oracle(rotated, 2).area == 1

    def test_witness_k1(self):
        # Cyclically reduced of length 8, so not a conjugate of the length-5
        # relator: area is at least 2, and the corridor strategy gives 2.
        res = area_oracle(witness_word(1, 2), 2)
        assert res.area == 2
        assert res.area <= area_strategy(1, 2).area

    def test_not_a_relation_rejected(self):
        with pytest.raises(ValueError):
            area_oracle(word("a"), 2)

    def test_budget_exceeded(self):
        with pytest.raises(AreaBudgetExceeded):
            area_oracle(witness_word(1, 2), 2, max_area=1)

    def test_conjugation_invariance(self):
        rng = random.Random(40)
        for _ in range(8):
            w = conjugated_relator(rng, 2, max_conj=1)
            base = area_oracle(w, 2).area
            for g in ("a", "b", "a'", "b'"):
                conj = word(g) * w * ~word(g)
                assert area_oracle(conj, 2).area == base

    def test_inverse_invariance(self):
        rng = random.Random(41)
        for _ in range(10):
            w = conjugated_relator(rng, 2)
            assert area_oracle(~w, 2).area == area_oracle(w, 2).area

    def test_subadditivity(self):
        rng = random.Random(42)
        rels = [conjugated_relator(rng, 2) for _ in range(10)]
        for u in rels[:5]:
            for v in rels[5:]:
                try:
                    total = area_oracle(u * v, 2, max_area=4).area
                except AreaBudgetExceeded:
                    continue
                assert total <= area_oracle(u, 2).area + area_oracle(v, 2).area

    def test_oracle_never_beats_lower_length_bound(self):
        # One move changes the length by at most the relator length.
        for n in (2, 3):
            w = witness_word(1, n)
            res = area_oracle(w, n, max_area=6, max_len=24)
            assert res.area * (n + 3) >= word_length(w)

    def test_oracle_at_most_strategy_on_witness_k2(self):
        res = area_oracle(witness_word(2, 2), 2, max_area=6)
        assert 3 <= res.area <= area_strategy(2, 2).area
        # The cap prunes on this word, so the figure is flagged as a bound.
        assert not res.exact


class TestGrowthTable:
    def test_areas_n2(self):
        rows = growth_table(2, 4)
        assert [r.area for r in rows] == [2, 6, 14, 30]
        assert [r.length for r in rows] == [8, 12, 16, 20]

    def test_ratio_column(self):
        rows = growth_table(3, 8)
        assert rows[0].ratio is None
        for r in rows[1:]:
            assert isinstance(r.ratio, Fraction)
        assert abs(rows[5].ratio - 3) <= Fraction(3, 20)  # within 5% by k = 6

    def test_rows_are_relations(self):
        for n in (2, 3):
            for r in growth_table(n, 6):
                assert is_relation(witness_word(r.k, n), n)

    def test_k_max_guard(self):
        with pytest.raises(ValueError):
            growth_table(2, 1)

    def test_text_format(self):
        out = format_growth_table(growth_table(2, 4), "text")
        lines = out.strip().splitlines()
        assert lines[0].split() == ["k", "length", "area", "ratio"]
        assert lines[1].split() == ["1", "8", "2", "-"]
        assert lines[4].split() == ["4", "20", "30", "2.1429"]

    def test_csv_format(self):
        out = format_growth_table(growth_table(2, 3), "csv")
        assert out.splitlines()[0] == "k,length,area,ratio"
        assert out.splitlines()[1] == "1,8,2,"
        assert out.splitlines()[3] == "3,16,14,2.3333"

    def test_unknown_format(self):
        with pytest.raises(ValueError):
            format_growth_table(growth_table(2, 3), "json")
