"""Unit tests for the generating-function expression parser and evaluator."""

import math

import pytest

from riordan.gf import (
    Add,
    Cgf,
    Div,
    Mul,
    Neg,
    Num,
    ParseError,
    Pow,
    Sqrt,
    Sub,
    Var,
    expand,
    expand_gf,
    parse_gf,
)
from riordan.series import PowerSeries, SeriesError


class TestParser:
    def test_atoms(self):
        assert parse_gf("7") == Num(7)
        assert parse_gf("x") == Var()
        assert parse_gf("(x)") == Var()

    def test_precedence(self):
        assert parse_gf("1+2*x") == Add(Num(1), Mul(Num(2), Var()))
        assert parse_gf("1-x/2") == Sub(Num(1), Div(Var(), Num(2)))
        assert parse_gf("2*x^3") == Mul(Num(2), Pow(Var(), 3))

    def test_leading_minus(self):
        assert parse_gf("-x+1") == Add(Neg(Var()), Num(1))

    def test_functions(self):
        assert parse_gf("sqrt(1-4*x)") == Sqrt(Sub(Num(1), Mul(Num(4), Var())))
        assert parse_gf("c(x)") == Cgf(Var())

    def test_whitespace_insensitive(self):
        assert parse_gf(" 1 + 2 * x ") == parse_gf("1+2*x")

    @pytest.mark.parametrize("text", [
        "", "1+", "(1", "1)", "2x", "x^-1", "x^(2)", "foo(x)", "1**2",
        "sqrt", "sqrt x", "--x",
    ])
    def test_rejects_malformed(self, text):
        with pytest.raises(ParseError):
            parse_gf(text)

    def test_parse_error_position(self):
        with pytest.raises(ParseError) as info:
            parse_gf("1+%")
        assert info.value.pos == 2


class TestExpand:
    def test_geometric(self):
        assert expand_gf("1/(1-x)", 5).int_prefix() == [1] * 6

    def test_catalan(self):
        assert expand_gf("c(x)", 7).int_prefix() == [1, 1, 2, 5, 14, 42, 132,
                                                     429]

    def test_catalan_closed_form_identity(self):
        assert expand_gf("c(x)", 12) == expand_gf("(1-sqrt(1-4*x))/(2*x)", 12)

    def test_catalan_functional_equation(self):
        c = expand_gf("c(x)", 12)
        x = PowerSeries.x(12)
        assert c == 1 + x * c * c

    def test_central_binomial(self):
        s = expand_gf("1/sqrt(1-4*x)", 8)
        assert s.int_prefix() == [math.comb(2 * n, n) for n in range(9)]

    def test_composed_catalan(self):
        # c(x^2) aerates the Catalan numbers
        assert expand_gf("c(x^2)", 6).int_prefix() == [1, 0, 1, 0, 2, 0, 5]

    def test_negative_powers_of_binomial(self):
        assert expand_gf("(1+x)^4", 6).int_prefix() == [1, 4, 6, 4, 1, 0, 0]

    def test_removable_division_keeps_order(self):
        # (c - 1)/x needs slack: the division by x loses one coefficient
        s = expand_gf("(c(x)-1)/x", 6)
        assert s.order >= 6
        assert s.int_prefix(7) == [1, 2, 5, 14, 42, 132, 429]

    def test_nested_removable_division(self):
        s = expand_gf("(1/(1-4*x)-1/sqrt(1-4*x))/(2*x)", 6)
        assert s.int_prefix(7) == [1, 5, 22, 93, 386, 1586, 6476]

    def test_division_error_propagates(self):
        with pytest.raises(SeriesError):
            expand_gf("1/(x-x)", 4)

    def test_expand_of_parsed_tree(self):
        tree = parse_gf("(1+x)/(1-x)")
        assert expand(tree, 4).int_prefix() == [1, 2, 2, 2, 2]

    def test_c_of_nonzero_constant_rejected(self):
        with pytest.raises(SeriesError):
            expand_gf("c(1+x)", 4)
