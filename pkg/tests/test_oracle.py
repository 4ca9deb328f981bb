import random
import warnings

import pytest

from univoque.errors import PreconditionViolated, TooLargeError
from univoque.expansions import FloatBeta, is_unique_expansion
from univoque.oracle import (
    Necklace,
    exists_period_n_unique,
    extremal_rotation,
    lemma_report,
    min_beta_for_period,
    primitive_necklaces,
    verify_ordering,
)
from univoque.thresholds import sharkovskii_cmp, threshold_beta
from univoque.words import GREATER, LESS, PeriodicSeq, is_extremal, lex_cmp, mirror, shift
from util import SEED


def _mobius(n: int) -> int:
    res, d, m = 1, 2, n
    while d * d <= m:
        if m % d == 0:
            m //= d
            if m % d == 0:
                return 0
            res = -res
        d += 1
    if m > 1:
        res = -res
    return res


def _necklace_count(n: int) -> int:
    return sum(_mobius(d) * 2 ** (n // d) for d in range(1, n + 1) if n % d == 0) // n


class TestNecklaces:
    def test_small_cases(self):
        assert [str(x.representative) for x in primitive_necklaces(1)] == ["0", "1"]
        two = primitive_necklaces(2)
        assert len(two) == 1 and str(two[0].representative) == "10"
        assert len(primitive_necklaces(6)) == 9

    def test_counts_match_mobius_formula(self):
        for n in range(1, 17):
            assert len(primitive_necklaces(n)) == _necklace_count(n), n

    def test_representative_is_max_rotation_and_primitive(self):
        for n in (5, 8, 10):
            for neck in primitive_necklaces(n):
                bits = neck.representative.bits
                rots = {bits[i:] + bits[:i] for i in range(n)}
                assert len(rots) == n  # primitive
                assert bits == max(rots)

    def test_guard(self):
        with pytest.raises(TooLargeError):
            primitive_necklaces(25)


class TestExistence:
    def test_period_two_above_golden(self):
        assert exists_period_n_unique(FloatBeta(1.7), 2) is True

    def test_period_three_below_tribonacci(self):
        assert exists_period_n_unique(FloatBeta(1.8), 3) is False

    def test_period_three_above_tribonacci(self):
        assert exists_period_n_unique(FloatBeta(1.9), 3) is True

    def test_openness_at_thresholds(self):
        for n in range(2, 9):
            ref = float(threshold_beta(n, 1e-10))
            assert exists_period_n_unique(FloatBeta(ref - 1e-7), n) is False, n
            assert exists_period_n_unique(FloatBeta(ref + 1e-7), n) is True, n


class TestMinBeta:
    def test_golden_for_period_two(self):
        mb = min_beta_for_period(2, 1e-7)
        assert abs(mb.value - 1.6180339887) < 1e-6

    def test_matches_construction_for_small_periods(self):
        for n in range(2, 9):
            mb = min_beta_for_period(n, 1e-7)
            ref = float(threshold_beta(n, 1e-9))
            assert abs(mb.value - ref) < 1e-6, n

    def test_no_monotonicity_warnings(self):
        with warnings.catch_warnings():
            warnings.simplefilter("error")
            min_beta_for_period(5, 1e-6)

    def test_guards(self):
        with pytest.raises(PreconditionViolated):
            min_beta_for_period(1)
        with pytest.raises(TooLargeError):
            min_beta_for_period(17)


class TestExtremalReduction:
    def test_max_rotation_of_unique_cycles_is_extremal(self):
        beta = FloatBeta(1.95)
        tested = 0
        for n in range(1, 11):
            for neck in primitive_necklaces(n):
                s = PeriodicSeq((), neck.representative.bits)
                try:
                    member = is_unique_expansion(beta, s)
                except Exception:
                    continue
                if not member:
                    continue
                tested += 1
                a = extremal_rotation(s)
                assert is_extremal(a), s
        assert tested > 50

    def test_extremal_rotation_dominates(self):
        rng = random.Random(SEED)
        for _ in range(300):
            q = rng.randint(1, 10)
            s = PeriodicSeq((), tuple(rng.randint(0, 1) for _ in range(q)))
            a = extremal_rotation(s)
            for j in range(len(s.period)):
                assert lex_cmp(shift(s, j), a) != GREATER
                assert lex_cmp(shift(mirror(s), j), a) != GREATER


class TestVerifyOrdering:
    def test_no_violations_to_12(self):
        report = verify_ordering(12)
        assert report["violations"] == []
        assert report["n_max"] == 12

    def test_chain_fields_and_order(self):
        report = verify_ordering(10)
        chain = report["chain"]
        assert [c["chain_position"] for c in chain] == list(range(len(chain)))
        assert all(set(c) == {"n", "beta_lo", "beta_hi", "witness_sequence",
                              "chain_position"} for c in chain)
        values = [c["beta_lo"] for c in chain]
        assert values == sorted(values)
        # adjacent entries obey the Sharkovskii order reversed
        ns = [c["n"] for c in chain]
        for a, b in zip(ns, ns[1:]):
            assert sharkovskii_cmp(b, a) == LESS

    def test_guards(self):
        with pytest.raises(TooLargeError):
            verify_ordering(31)
        with pytest.raises(PreconditionViolated):
            verify_ordering(1)


def test_lemma_report_is_clean_and_seeded():
    rep1 = lemma_report(seed=11, cases=120)
    rep2 = lemma_report(seed=11, cases=120)
    assert rep1 == rep2
    assert rep1["ok"] is True
    assert set(rep1["checks"]) == {"lex-total-order", "doubling-monotone",
                                   "encode-order-isomorphism", "greedy-monotonicity"}
