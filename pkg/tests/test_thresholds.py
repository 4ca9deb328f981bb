import random
from fractions import Fraction

import pytest

from univoque.algebraic import IntPolynomial, poly_str
from univoque.errors import PreconditionViolated
from univoque.expansions import quasi_greedy, solve_base
from univoque.thresholds import (
    MINIMAL_POLYS,
    SharkovskiiKey,
    below_komornik_loreti,
    decompose,
    greedy_threshold,
    kl_bracket,
    komornik_loreti,
    min_extremal_explicit,
    min_extremal_recursive,
    reduced_poly,
    sharkovskii_cmp,
    threshold_beta,
    threshold_poly,
)
from univoque.words import EQUAL, GREATER, LESS, PeriodicSeq, is_extremal, lex_cmp
from util import SEED

TABLE_VALUES = {2: 1.61803, 3: 1.83929, 4: 1.75488, 5: 1.81240,
                6: 1.78854, 7: 1.80509, 8: 1.78460}
TABLE_EXPANSIONS = {2: "11", 3: "111", 4: "1101", 5: "11011",
                    6: "110101", 7: "1101011", 8: "11010011"}
TABLE_BELOW_KL = {2: True, 3: False, 4: True, 5: False,
                  6: False, 7: False, 8: True}


class TestSharkovskii:
    def test_decompose_examples(self):
        assert decompose(12) == SharkovskiiKey(2, 1)
        assert decompose(1) == SharkovskiiKey(0, 0)
        assert decompose(8) == SharkovskiiKey(3, 0)

    def test_decompose_is_a_bijection(self):
        seen = {}
        for k in range(1, 4097):
            key = decompose(k)
            assert key.k == k
            assert key not in seen
            seen[key] = k

    def test_cmp_examples(self):
        assert sharkovskii_cmp(3, 5) == LESS
        assert sharkovskii_cmp(8, 4) == LESS
        assert sharkovskii_cmp(6, 12) == LESS
        assert sharkovskii_cmp(7, 7) == EQUAL

    def test_canonical_chain_segments(self):
        chain = [3, 5, 7, 9, 2 * 3, 2 * 5, 2 * 7, 4 * 3, 4 * 5, 8 * 3, 16, 8, 4, 2, 1]
        for a, b in zip(chain, chain[1:]):
            assert sharkovskii_cmp(a, b) == LESS, (a, b)

    def test_total_order(self):
        ks = range(1, 61)
        for a in ks:
            for b in ks:
                ab = sharkovskii_cmp(a, b)
                assert ab == -sharkovskii_cmp(b, a)
                assert (ab == EQUAL) == (a == b)
        import functools
        ordered = sorted(ks, key=functools.cmp_to_key(sharkovskii_cmp))
        for a, b in zip(ordered, ordered[1:]):
            assert sharkovskii_cmp(a, b) == LESS


class TestExtremalSequences:
    def test_recursive_examples(self):
        assert str(min_extremal_recursive(1)) == "(1)^w"
        assert str(min_extremal_recursive(2)) == "(10)^w"
        assert str(min_extremal_recursive(4)) == "(1100)^w"
        assert str(min_extremal_recursive(6)) == "(110100)^w"

    def test_explicit_examples(self):
        assert str(min_extremal_explicit(4)) == "(1100)^w"
        assert str(min_extremal_explicit(3)) == "(110)^w"
        assert str(min_extremal_explicit(12)) == "(110100110010)^w"

    def test_constructions_agree_to_64(self):
        for k in range(1, 65):
            a = min_extremal_recursive(k)
            b = min_extremal_explicit(k)
            assert a == b, k
            if k >= 2:
                assert a.is_purely_periodic
                assert len(a.period) == k
            assert is_extremal(a), k

    def test_first_column_matches_quasi_greedy_rule(self):
        for n, digits in TABLE_EXPANSIONS.items():
            a = min_extremal_recursive(n)
            assert str(a.period) == digits[:-1] + "0"


class TestThresholdPolynomials:
    def test_examples(self):
        assert poly_str(threshold_poly(2)) == "x^2-x-1"
        assert poly_str(threshold_poly(3)) == "x^3-x^2-x-1"
        assert poly_str(threshold_poly(4)) == "x^4-x^3-x^2-1"

    def test_factorization_of_k4(self):
        assert IntPolynomial([1, 1]) * MINIMAL_POLYS[4] == threshold_poly(4)

    def test_known_minimal_polys_divide(self):
        for n, minimal in MINIMAL_POLYS.items():
            assert minimal.divides(threshold_poly(n)), n

    def test_matches_base_equation_of_extremal_sequence(self):
        for k in range(2, 20):
            direct = threshold_poly(k)
            via_equation = solve_base(min_extremal_recursive(k)).poly
            assert direct == via_equation, k

    def test_reduced_poly(self):
        assert poly_str(reduced_poly(4)) == "x^3-2x^2+x-1"
        assert poly_str(reduced_poly(7)) == "x^6-2x^5+x^4-x^3-1"
        for k in range(2, 16):
            red = threshold_beta(k, 1e-6)
            assert red.sign_at_root(reduced_poly(k)) == 0, k

    def test_requires_k_at_least_2(self):
        with pytest.raises(PreconditionViolated):
            threshold_poly(1)


class TestThresholdValues:
    def test_table_numerics(self):
        for n, value in TABLE_VALUES.items():
            beta = threshold_beta(n, 1e-8)
            assert abs(float(beta) - value) < 1e-5, n

    def test_expansion_of_one_matches_table(self):
        from univoque.expansions import d_of_beta
        for n, digits in TABLE_EXPANSIONS.items():
            exp = d_of_beta(threshold_beta(n, 1e-8))
            assert exp.finiteness == ("finite", n)
            assert str(exp.prefix(n)) == digits

    def test_quasi_greedy_identity(self):
        for k in range(2, 13):
            assert quasi_greedy(threshold_beta(k, 1e-8)) == min_extremal_recursive(k), k

    def test_interval_width_honors_eps(self):
        beta = threshold_beta(5, 1e-10)
        lo, hi = beta.interval
        assert hi - lo < Fraction(1, 10 ** 10)

    def test_extremal_chain_matches_sharkovskii(self):
        seqs = {k: min_extremal_recursive(k) for k in range(2, 31)}
        for k in range(2, 31):
            for m in range(2, 31):
                if k == m:
                    continue
                # earlier in the Sharkovskii order means larger sequence
                expected = GREATER if sharkovskii_cmp(k, m) == LESS else LESS
                assert lex_cmp(seqs[k], seqs[m]) == expected, (k, m)

    def test_power_of_two_thresholds_increase(self):
        prev = None
        for j in range(1, 5):
            beta = threshold_beta(2 ** j, 1e-8)
            if prev is not None:
                assert prev.root.compare(beta.root) == -1
            prev = beta


class TestKomornikLoreti:
    def test_value(self):
        kl = komornik_loreti(1e-5)
        assert abs(float(kl) - 1.78723) < 1e-5

    def test_brackets_nest(self):
        coarse = kl_bracket(Fraction(1, 100))
        fine = kl_bracket(Fraction(1, 10 ** 7))
        assert coarse[0] <= fine[0] <= fine[1] <= coarse[1]
        again = kl_bracket(Fraction(1, 100))
        assert fine[0] <= again[0] <= again[1] <= fine[1]

    def test_below_flags(self):
        for n, flag in TABLE_BELOW_KL.items():
            assert below_komornik_loreti(n) == flag, n

    def test_kl_sits_between_6_and_8(self):
        lo, hi = kl_bracket(Fraction(1, 10 ** 7))
        b6 = threshold_beta(6, 1e-8)
        b8 = threshold_beta(8, 1e-8)
        assert b8.interval[1] < lo
        assert hi < b6.interval[0]


class TestGreedyThreshold:
    def test_golden_for_period_2(self):
        assert abs(float(greedy_threshold(2)) - 1.61803) < 1e-5

    def test_supergolden_for_period_3(self):
        assert abs(float(greedy_threshold(3)) - 1.46557) < 1e-5

    def test_quasi_greedy_form(self):
        for n in range(2, 9):
            q = greedy_threshold(n)
            expected = PeriodicSeq((), (1,) + (0,) * (n - 1))
            assert quasi_greedy(q) == expected, n

    def test_strictly_decreasing_in_n(self):
        prev = None
        for n in range(2, 9):
            q = greedy_threshold(n)
            if prev is not None:
                assert q.root.compare(prev.root) == -1
            prev = q

    def test_requires_n_at_least_2(self):
        with pytest.raises(PreconditionViolated):
            greedy_threshold(1)
