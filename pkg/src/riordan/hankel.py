"""Hankel transforms, rational generating-function fits, and J-fractions.

Hankel determinants are computed by fraction-free (Bareiss) elimination when
all entries are integers, falling back to exact rational Gaussian elimination
otherwise.  ``fit_rational_gf`` reconstructs a rational generating function
from a sequence prefix, holding out trailing terms to validate the fit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .series import PowerSeries


class HankelError(ValueError):
    pass


class FitError(ValueError):
    """No rational generating function validates within the degree bounds."""


# -- exact determinants -------------------------------------------------

def bareiss_determinant(matrix) -> int:
    """Fraction-free determinant of a square integer matrix."""
    m = [list(row) for row in matrix]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def rational_determinant(matrix) -> Fraction:
    """Exact determinant by Gaussian elimination over the rationals."""
    m = [[Fraction(v) for v in row] for row in matrix]
    n = len(m)
    if n == 0:
        return Fraction(1)
    det = Fraction(1)
    for k in range(n):
        pivot = None
        for i in range(k, n):
            if m[i][k] != 0:
                pivot = i
                break
        if pivot is None:
            return Fraction(0)
        if pivot != k:
            m[k], m[pivot] = m[pivot], m[k]
            det = -det
        det *= m[k][k]
        inv = 1 / m[k][k]
        for i in range(k + 1, n):
            factor = m[i][k] * inv
            if factor == 0:
                continue
            for j in range(k, n):
                m[i][j] -= factor * m[k][j]
    return det


def naive_determinant(matrix):
    """Cofactor expansion; the independent oracle for small matrices."""
    n = len(matrix)
    if n == 0:
        return 1
    if n == 1:
        return matrix[0][0]
    total = 0
    for j in range(n):
        if matrix[0][j] == 0:
            continue
        minor = [row[:j] + row[j + 1 :] for row in matrix[1:]]
        total += (-1) ** j * matrix[0][j] * naive_determinant(minor)
    return total


def hankel_transform(a, count: int) -> list:
    """First `count` Hankel determinants h_n = det[a_(i+j)], 0 <= i,j <= n."""
    a = list(a)
    if len(a) < 2 * count - 1:
        raise HankelError(
            f"need {2 * count - 1} terms for {count} determinants, got {len(a)}"
        )
    out = []
    integral = all(isinstance(t, int) or Fraction(t).denominator == 1 for t in a)
    for n in range(count):
        m = [[a[i + j] for j in range(n + 1)] for i in range(n + 1)]
        if integral:
            out.append(bareiss_determinant([[int(v) for v in row] for row in m]))
        else:
            out.append(rational_determinant(m))
    return out


# -- rational generating functions --------------------------------------

def _poly_trim(p):
    while len(p) > 1 and p[-1] == 0:
        p = p[:-1]
    return p


def _poly_mul(p, q):
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def _poly_divmod(p, q):
    p = [Fraction(v) for v in p]
    q = _poly_trim([Fraction(v) for v in q])
    if q == [Fraction(0)]:
        raise ZeroDivisionError("polynomial division by zero")
    quot = [Fraction(0)] * max(1, len(p) - len(q) + 1)
    rem = p[:]
    for i in range(len(p) - len(q), -1, -1):
        coeff = rem[i + len(q) - 1] / q[-1]
        quot[i] = coeff
        if coeff != 0:
            for j, b in enumerate(q):
                rem[i + j] -= coeff * b
    return _poly_trim(quot), _poly_trim(rem)


def _poly_gcd(p, q):
    p = _poly_trim([Fraction(v) for v in p])
    q = _poly_trim([Fraction(v) for v in q])
    while q != [Fraction(0)]:
        _, r = _poly_divmod(p, q)
        p, q = q, r
    # make monic
    if p[-1] != 0:
        p = [v / p[-1] for v in p]
    return p


@dataclass(frozen=True)
class RationalGF:
    """A rational generating function p(x)/q(x) in lowest terms, q(0) = 1."""

    numerator: tuple
    denominator: tuple

    @classmethod
    def from_fractions(cls, num, den) -> "RationalGF":
        num = _poly_trim([Fraction(v) for v in num])
        den = _poly_trim([Fraction(v) for v in den])
        g = _poly_gcd(num, den)
        if len(g) > 1:
            num, _ = _poly_divmod(num, g)
            den, _ = _poly_divmod(den, g)
        if den[0] == 0:
            raise ValueError("denominator constant term is zero")
        scale = den[0]
        num = [v / scale for v in num]
        den = [v / scale for v in den]
        for v in num + den:
            if v.denominator != 1:
                raise ValueError(f"non-integral coefficient {v} after reduction")
        return cls(tuple(v.numerator for v in num), tuple(v.numerator for v in den))

    @classmethod
    def from_ints(cls, num, den) -> "RationalGF":
        return cls.from_fractions(num, den)

    def expand(self, order: int) -> PowerSeries:
        p = PowerSeries.from_polynomial(self.numerator, order)
        q = PowerSeries.from_polynomial(self.denominator, order)
        return p / q

    def equivalent(self, other: "RationalGF") -> bool:
        """Equality as rational functions (cross multiplication)."""
        lhs = _poly_mul(
            [Fraction(v) for v in self.numerator],
            [Fraction(v) for v in other.denominator],
        )
        rhs = _poly_mul(
            [Fraction(v) for v in other.numerator],
            [Fraction(v) for v in self.denominator],
        )
        return _poly_trim(lhs) == _poly_trim(rhs)

    def __str__(self):
        return f"{_poly_text(self.numerator)} / {_poly_text(self.denominator)}"

    def to_text(self) -> str:
        """Canonical text round-trippable through the expression parser."""
        return f"({_poly_text(self.numerator)})/({_poly_text(self.denominator)})"


def _poly_text(coeffs) -> str:
    parts = []
    for i, v in enumerate(coeffs):
        if v == 0:
            continue
        if i == 0:
            parts.append(str(v))
            continue
        mag = abs(v)
        term = "x" if i == 1 else f"x^{i}"
        if mag != 1:
            term = f"{mag}*{term}"
        if not parts:
            parts.append(term if v > 0 else f"-{term}")
        else:
            parts.append(f"+ {term}" if v > 0 else f"- {term}")
    if not parts:
        return "0"
    return " ".join(parts)


def _solve_linear(rows, rhs):
    """Solve an exact linear system; returns one solution or None.

    rows: list of coefficient lists, rhs: list of Fractions.  Free variables
    are set to zero, which yields the smallest-degree representative given the
    ascending degree search in fit_rational_gf.
    """
    m = [list(map(Fraction, row)) + [Fraction(r)] for row, r in zip(rows, rhs)]
    nrows = len(m)
    ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, nrows):
            if m[i][c] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                factor = m[i][c]
                m[i] = [a - factor * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    for i in range(r, nrows):
        if m[i][ncols] != 0:
            return None  # inconsistent
    x = [Fraction(0)] * ncols
    for row_idx, c in enumerate(pivots):
        x[c] = m[row_idx][ncols]
    return x


def fit_rational_gf(h, max_num_deg: int, max_den_deg: int) -> RationalGF:
    """Reconstruct a rational generating function from a sequence prefix.

    Solves for the minimal-degree p/q (minimizing denominator degree first)
    whose expansion matches every supplied term, including holdout terms not
    used in the linear solve.  Holdout size is max(4, 25% of the terms).
    """
    h = [Fraction(t) for t in h]
    m = len(h)
    holdout = max(4, -(-m // 4))
    use = m - holdout
    if use < 1:
        raise FitError(f"need more than {holdout} terms, got {m}")
    for d2 in range(max_den_deg + 1):
        for d1 in range(max_num_deg + 1):
            if d1 + d2 + 1 > use:
                continue
            # unknowns: p_0..p_d1, q_1..q_d2 (q_0 = 1)
            rows, rhs = [], []
            for n in range(use):
                row = [Fraction(0)] * (d1 + 1 + d2)
                if n <= d1:
                    row[n] = Fraction(1)
                for j in range(1, min(n, d2) + 1):
                    row[d1 + j] = -h[n - j]
                rows.append(row)
                rhs.append(h[n])
            sol = _solve_linear(rows, rhs)
            if sol is None:
                continue
            num = sol[: d1 + 1]
            den = [Fraction(1)] + sol[d1 + 1 :]
            # validate against the full prefix, holdout included
            series = PowerSeries.from_polynomial(num, m - 1) / \
                PowerSeries.from_polynomial(den, m - 1)
            if list(series.coeffs[:m]) != h:
                continue
            try:
                return RationalGF.from_fractions(num, den)
            except ValueError:
                continue
    raise FitError(
        f"no rational fit of degrees <= ({max_num_deg},{max_den_deg}) "
        f"validates all {m} terms"
    )


# -- J-fractions ---------------------------------------------------------

@dataclass(frozen=True)
class JFraction:
    """A finite-depth continued fraction 1/(1 - b0*x + a1*x^2/(1 - b1*x + ...)).

    ``linear`` holds b0, b1, ...; ``quadratic`` holds the coefficients of the
    x^2 coupling terms, one fewer than the depth.  Note the plus sign before
    each x^2 block; this follows the source convention and differs from the
    common minus convention.
    """

    linear: tuple
    quadratic: tuple = field(default=())

    def __post_init__(self):
        if len(self.linear) < 1:
            raise ValueError("a J-fraction needs depth >= 1")
        if len(self.quadratic) != len(self.linear) - 1:
            raise ValueError(
                f"depth {len(self.linear)} needs {len(self.linear) - 1} "
                f"quadratic coefficients, got {len(self.quadratic)}"
            )

    @property
    def depth(self) -> int:
        return len(self.linear)

    def reliable_order(self) -> int:
        """Coefficients beyond 2*depth are affected by truncation."""
        return 2 * self.depth

    def expand(self, order: int) -> PowerSeries:
        x = PowerSeries.x(order)
        x2 = x * x
        denom = 1 - Fraction(self.linear[-1]) * x
        for i in range(self.depth - 2, -1, -1):
            denom = 1 - Fraction(self.linear[i]) * x + \
                Fraction(self.quadratic[i]) * x2 / denom
        return 1 / denom


def jfraction_expand(j: JFraction, order: int) -> PowerSeries:
    return j.expand(order)
