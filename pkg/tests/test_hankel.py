"""Unit tests for Hankel determinants, rational-GF fits, and J-fractions."""

import math
from fractions import Fraction

import pytest

from riordan.gf import expand_gf, parse_gf
from riordan.hankel import (
    FitError,
    HankelError,
    JFraction,
    RationalGF,
    bareiss_determinant,
    fit_rational_gf,
    hankel_transform,
    jfraction_expand,
    naive_determinant,
    rational_determinant,
)

CATALAN = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796]


class TestDeterminants:
    def test_small_matrices(self):
        assert bareiss_determinant([]) == 1
        assert bareiss_determinant([[7]]) == 7
        assert bareiss_determinant([[1, 2], [3, 4]]) == -2

    def test_singular(self):
        m = [[1, 2, 3], [2, 4, 6], [1, 0, 1]]
        assert bareiss_determinant(m) == 0
        assert rational_determinant(m) == 0

    def test_pivoting(self):
        m = [[0, 1], [1, 0]]
        assert bareiss_determinant(m) == -1

    def test_three_methods_agree(self):
        m = [[3, -1, 2, 0], [1, 5, -2, 1], [0, 2, 2, -3], [4, -1, 1, 1]]
        d = naive_determinant(m)
        assert bareiss_determinant(m) == d
        assert rational_determinant(m) == d

    def test_rational_entries(self):
        m = [[Fraction(1, 2), 1], [1, Fraction(1, 2)]]
        assert rational_determinant(m) == Fraction(-3, 4)


class TestHankelTransform:
    def test_catalan_all_ones(self):
        assert hankel_transform(CATALAN, 6) == [1] * 6

    def test_shifted_catalan_all_ones(self):
        assert hankel_transform(CATALAN[1:], 5) == [1] * 5

    def test_central_binomial_powers_of_two(self):
        terms = [math.comb(2 * n, n) for n in range(11)]
        assert hankel_transform(terms, 6) == [2 ** n for n in range(6)]

    def test_insufficient_terms(self):
        with pytest.raises(HankelError):
            hankel_transform([1, 2, 3], 3)

    def test_rational_fallback(self):
        terms = [Fraction(1, 2), 1, 2, 4, 8]
        h = hankel_transform(terms, 3)
        assert h[0] == Fraction(1, 2)
        assert isinstance(h[1], Fraction)


class TestRationalGF:
    def test_normalization_reduces(self):
        gf = RationalGF.from_fractions([2, 2], [2, 0, -2])  # (2+2x)/(2-2x^2)
        assert gf.numerator == (1,)
        assert gf.denominator == (1, -1)

    def test_denominator_constant_must_be_nonzero(self):
        with pytest.raises(ValueError):
            RationalGF.from_fractions([1], [0, 1])

    def test_expand(self):
        gf = RationalGF.from_fractions([1], [1, -1])
        assert gf.expand(5).int_prefix() == [1] * 6

    def test_equivalent(self):
        a = RationalGF.from_fractions([1, 1], [1, -1])
        b = RationalGF.from_fractions([2, 2], [2, -2])
        assert a.equivalent(b)
        assert not a.equivalent(RationalGF.from_fractions([1], [1, -1]))

    def test_text_round_trips_through_parser(self):
        gf = RationalGF.from_fractions([1, -3, 0, 2], [1, 0, -4])
        text = gf.to_text()
        assert expand_gf(text, 8) == gf.expand(8)
        parse_gf(text)  # must be parseable

    def test_str_canonical(self):
        gf = RationalGF.from_fractions([1, -1], [1, 0, 4])
        assert str(gf) == "1 - x / 1 + 4*x^2"


class TestFit:
    def test_geometric(self):
        fitted = fit_rational_gf([2 ** n for n in range(10)], 3, 3)
        assert fitted == RationalGF.from_fractions([1], [1, -2])

    def test_printed_hankel_sequences(self):
        fitted = fit_rational_gf(
            [1, -1, -4, 4, 16, -16, -64, 64, 256, -256], 3, 3
        )
        assert fitted == RationalGF.from_fractions([1, -1], [1, 0, 4])
        fitted = fit_rational_gf(
            [1, 2, 0, -8, -16, 0, 64, 128, 0, -512], 3, 3
        )
        assert fitted == RationalGF.from_fractions([1], [1, -2, 4])

    def test_minimal_degree_preferred(self):
        # all-ones fits 1/(1-x); no smaller representation exists
        fitted = fit_rational_gf([1] * 10, 4, 4)
        assert fitted.numerator == (1,)
        assert fitted.denominator == (1, -1)

    def test_polynomial_sequence(self):
        # finitely supported sequence = polynomial numerator
        fitted = fit_rational_gf([1, 5, 0, 0, 0, 0, 0, 0, 0, 0], 3, 3)
        assert fitted == RationalGF.from_fractions([1, 5], [1])

    def test_holdout_rejects_overfit(self):
        # Catalan numbers are not rational; bounded degrees must fail
        with pytest.raises(FitError):
            fit_rational_gf(CATALAN, 3, 3)

    def test_needs_enough_terms(self):
        with pytest.raises(FitError):
            fit_rational_gf([1, 2, 3, 4], 3, 3)

    def test_validates_full_prefix(self):
        # agrees with 1/(1-x) early on, then deviates: no low-degree fit
        terms = [1, 1, 1, 1, 1, 1, 1, 1, 1, 99]
        with pytest.raises(FitError):
            fit_rational_gf(terms, 2, 2)


class TestJFraction:
    def test_depth_validation(self):
        with pytest.raises(ValueError):
            JFraction(linear=())
        with pytest.raises(ValueError):
            JFraction(linear=(1, 2), quadratic=())

    def test_depth_one(self):
        jf = JFraction(linear=(2,))
        assert jf.expand(5).int_prefix() == [2 ** n for n in range(6)]

    def test_plus_sign_convention(self):
        # 1/(1 - x + x^2/(1 - x)): the x^2 block is ADDED to the denominator
        jf = JFraction(linear=(1, 1), quadratic=(1,))
        direct = expand_gf("1/(1-x+x^2/(1-x))", 8)
        assert jf.expand(8) == direct

    def test_reliable_order(self):
        jf = JFraction(linear=(1, 1, 1), quadratic=(1, 1))
        assert jf.depth == 3
        assert jf.reliable_order() == 6

    def test_jfraction_expand_helper(self):
        jf = JFraction(linear=(0, 0, 0), quadratic=(-1, -1))
        assert jfraction_expand(jf, 6) == jf.expand(6)

    def test_motzkin_like(self):
        # all linear 1, all quadratic -1 gives the Motzkin numbers
        jf = JFraction(linear=(1,) * 8, quadratic=(-1,) * 7)
        assert jf.expand(16).int_prefix(9) == [
            1, 1, 2, 4, 9, 21, 51, 127, 323
        ]
