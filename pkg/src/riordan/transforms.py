"""The central transform of integer sequences, in its equivalent forms.

The transform sends a series g with g(0) = 1 to 1/(sqrt(1-4x) * g(x*c(x)^2)),
where c is the Catalan series.  Equivalently it is the matrix binom(2n, n-k)
applied to the reciprocal sequence of g, and also the central column of a
half construction; the alternative routes are kept for cross-validation.

Also here: the classical sequence transforms used throughout (binomial,
Catalan, INVERT(alpha), partial sums) and integer-sequence plumbing.
"""

from __future__ import annotations

import csv
import io
import json
import math
from fractions import Fraction

from .arrays import RiordanArray, pascal
from .gf import expand_gf
from .series import PowerSeries, SeriesError


def zero_pow(n: int) -> int:
    """0^n with the convention 0^0 = 1."""
    return 1 if n == 0 else 0


# -- integer sequence plumbing ------------------------------------------

def series_to_sequence(s: PowerSeries, count: int | None = None) -> list:
    """Integer prefix of a series; raises on fractional coefficients."""
    return s.int_prefix(count)


def sequence_to_series(terms, order: int | None = None) -> PowerSeries:
    terms = list(terms)
    if order is None:
        order = len(terms) - 1
    return PowerSeries.from_polynomial([Fraction(t) for t in terms], order)


def sequence_to_json(terms) -> str:
    return json.dumps([str(int(t)) for t in terms])


def sequence_from_json(text: str) -> list:
    return [int(t) for t in json.loads(text)]


def sequence_to_csv(terms) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for t in terms:
        writer.writerow([int(t)])
    return buf.getvalue()


# -- the central transform ----------------------------------------------

def _require_unit(s: PowerSeries, what: str):
    if s.coeffs[0] != 1:
        raise SeriesError(f"{what} must have constant term 1, got {s.coeffs[0]}")


def c_transform(g: PowerSeries) -> PowerSeries:
    """Closed-form route: 1 / (sqrt(1-4x) * g(x*c(x)^2))."""
    _require_unit(g, "transform input")
    n = g.order
    c = PowerSeries.catalan(n + 1)
    xc2 = (PowerSeries.x(n + 1) * c * c).truncate(n)
    root = expand_gf("sqrt(1-4*x)", n)
    return 1 / (root * g.compose(xc2))


def c_transform_constructive(g: PowerSeries) -> list:
    """Half-matrix route; returns floor(order/2) + 1 integer terms.

    Builds the Appell pair (g, x), inverts it, multiplies by the binomial
    matrix, and reads off the central elements t(2n, n).
    """
    _require_unit(g, "transform input")
    n = g.order
    appell_inv = RiordanArray(1 / g, PowerSeries.x(n))
    m = pascal(n).multiply(appell_inv)
    out = []
    for i in range(n // 2 + 1):
        e = m.element(2 * i, i)
        if e.denominator != 1:
            raise SeriesError(f"central element {i} is non-integral: {e}")
        out.append(e.numerator)
    return out


def c_transform_sequence(a) -> list:
    """Sequence route: b_n = sum_k binom(2n, n-k) a*_k."""
    a = list(a)
    if not a or a[0] != 1:
        raise SeriesError("sequence transform needs a_0 = 1")
    g = sequence_to_series(a)
    astar = (1 / g).int_prefix()
    return [
        sum(math.comb(2 * n, n - k) * astar[k] for k in range(n + 1))
        for n in range(len(a))
    ]


def c_inverse(h: PowerSeries) -> PowerSeries:
    """Pre-image of h: 1 / (((1-x)/(1+x)) * h(x/(1+x)^2))."""
    _require_unit(h, "inverse-transform input")
    n = h.order
    front = expand_gf("(1-x)/(1+x)", n)
    inner = expand_gf("x/(1+x)^2", n)
    return 1 / (front * h.compose(inner))


def reciprocal_preimage_sequence(b) -> list:
    """Reciprocal a*_n of the pre-image of the sequence b.

    a*_n = sum_k (-1)^(n-k) * (2n + 0^n)/(n + k + 0^(n+k)) * binom(n+k, 2k)
    * b_k; the pre-image itself is the reciprocal sequence of this one.
    """
    b = list(b)
    if not b or b[0] != 1:
        raise SeriesError("pre-image needs b_0 = 1")
    out = []
    for n in range(len(b)):
        s = Fraction(0)
        for k in range(n + 1):
            num = 2 * n + zero_pow(n)
            den = n + k + zero_pow(n + k)
            s += (
                Fraction((-1) ** (n - k) * num, den)
                * math.comb(n + k, 2 * k)
                * b[k]
            )
        if s.denominator != 1:
            raise SeriesError(f"term {n} is non-integral ({s}); inconsistent input")
        out.append(s.numerator)
    return out


def reciprocal_sequence(a) -> list:
    """Coefficients of 1/g for the generating function g of a (a_0 = +-1)."""
    g = sequence_to_series(a)
    return (1 / g).int_prefix()


# -- classical transforms -----------------------------------------------

def invert_alpha(f: PowerSeries, alpha: int) -> PowerSeries:
    """f -> f / (1 + alpha * x * f)."""
    x = PowerSeries.x(f.order)
    return f / (1 + alpha * x * f)


def binomial_transform(s: PowerSeries) -> PowerSeries:
    """s -> 1/(1-x) * s(x/(1-x))."""
    n = s.order
    return expand_gf("1/(1-x)", n) * s.compose(expand_gf("x/(1-x)", n))


def inverse_binomial_transform(s: PowerSeries, k: int = 1) -> PowerSeries:
    """The k-th inverse binomial transform 1/(1+kx) * s(x/(1+kx))."""
    n = s.order
    return expand_gf(f"1/(1+{k}*x)", n) * s.compose(expand_gf(f"x/(1+{k}*x)", n))


def catalan_transform(s: PowerSeries) -> PowerSeries:
    """s -> s(x*c(x))."""
    n = s.order
    xc = (PowerSeries.x(n + 1) * PowerSeries.catalan(n + 1)).truncate(n)
    return s.compose(xc)


def partial_sums(s: PowerSeries) -> PowerSeries:
    """s -> s/(1-x)."""
    return expand_gf("1/(1-x)", s.order) * s
