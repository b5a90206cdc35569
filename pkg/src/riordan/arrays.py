"""The integer Riordan group: validated (g, f) pairs and matrix views.

A Riordan pair (g, f) requires g(0) = 1, f(0) = 0 and [x^1]f = 1, and is
represented by the lower-triangular matrix with entry (n, k) equal to the
coefficient of x^n in g * f^k.  The group product is
(g, f) . (u, v) = (g * u(f), v(f)); in matrix terms this is ordinary matrix
multiplication.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .gf import expand_gf
from .series import PowerSeries


class RiordanError(ValueError):
    """Raised when a (g, f) pair violates the group normalization."""


class TriangularMatrix:
    """A lower-triangular number triangle; row n has n + 1 entries."""

    def __init__(self, rows):
        self.rows = [list(r) for r in rows]
        for n, row in enumerate(self.rows):
            if len(row) != n + 1:
                raise ValueError(f"row {n} has {len(row)} entries, expected {n + 1}")

    @property
    def size(self) -> int:
        return len(self.rows)

    def __getitem__(self, nk):
        n, k = nk
        return self.rows[n][k]

    def __eq__(self, other):
        if isinstance(other, TriangularMatrix):
            return self.rows == other.rows
        if isinstance(other, list):
            return self.rows == other
        return NotImplemented

    __hash__ = None

    def __repr__(self):
        return f"TriangularMatrix({self.size} rows)"

    def multiply(self, other: "TriangularMatrix") -> "TriangularMatrix":
        m = min(self.size, other.size)
        rows = []
        for n in range(m):
            rows.append(
                [
                    sum(self.rows[n][j] * other.rows[j][k] for j in range(k, n + 1))
                    for k in range(n + 1)
                ]
            )
        return TriangularMatrix(rows)

    def int_rows(self) -> list:
        """Rows as plain ints; a fractional entry is an error."""
        out = []
        for n, row in enumerate(self.rows):
            ints = []
            for k, v in enumerate(row):
                f = Fraction(v)
                if f.denominator != 1:
                    raise ValueError(f"entry ({n},{k}) is non-integral: {f}")
                ints.append(f.numerator)
            out.append(ints)
        return out

    def to_json(self) -> str:
        return json.dumps(self.int_rows())

    def to_text(self) -> str:
        rows = self.int_rows()
        width = max((len(str(v)) for r in rows for v in r), default=1)
        return "\n".join(
            " ".join(str(v).rjust(width) for v in row) for row in rows
        )


class RiordanArray:
    """A validated Riordan pair with a lazy lower-triangular matrix view."""

    def __init__(self, g: PowerSeries, f: PowerSeries):
        if g.coeffs[0] != 1:
            raise RiordanError(f"g(0) must be 1, got {g.coeffs[0]}")
        if f.coeffs[0] != 0:
            raise RiordanError(f"f(0) must be 0, got {f.coeffs[0]}")
        if f.order < 1 or f.coeffs[1] != 1:
            raise RiordanError(
                f"[x^1]f must be 1, got {f.coeffs[1] if f.order >= 1 else 'nothing'}"
            )
        order = min(g.order, f.order)
        self.g = g.truncate(order) if g.order > order else g
        self.f = f.truncate(order) if f.order > order else f
        # column k generating function g * f^k, filled on demand
        self._columns = [self.g]

    @classmethod
    def from_gf(cls, g_text: str, f_text: str, order: int) -> "RiordanArray":
        return cls(expand_gf(g_text, order), expand_gf(f_text, order))

    @property
    def order(self) -> int:
        return self.g.order

    def __repr__(self):
        return f"RiordanArray(order={self.order})"

    def _column(self, k: int) -> PowerSeries:
        while len(self._columns) <= k:
            self._columns.append(self._columns[-1] * self.f)
        return self._columns[k]

    def element(self, n: int, k: int) -> Fraction:
        """Entry (n, k) of the matrix view."""
        if not 0 <= k <= n <= self.order:
            raise IndexError(f"({n},{k}) outside triangle of order {self.order}")
        return self._column(k).coeffs[n]

    def matrix(self, size: int | None = None) -> TriangularMatrix:
        if size is None:
            size = self.order + 1
        if size > self.order + 1:
            raise IndexError(f"only {self.order + 1} rows are determined")
        return TriangularMatrix(
            [[self.element(n, k) for k in range(n + 1)] for n in range(size)]
        )

    # -- group structure ------------------------------------------------

    def multiply(self, other: "RiordanArray") -> "RiordanArray":
        g = self.g * other.g.compose(self.f)
        f = other.f.compose(self.f)
        return RiordanArray(g, f)

    def __mul__(self, other):
        if isinstance(other, RiordanArray):
            return self.multiply(other)
        return NotImplemented

    def inverse(self) -> "RiordanArray":
        fbar = self.f.reversion()
        g = 1 / self.g.compose(fbar)
        return RiordanArray(g, fbar)

    def apply(self, h: PowerSeries) -> PowerSeries:
        """Fundamental theorem: the image series g * h(f)."""
        return self.g * h.compose(self.f)

    def apply_sequence(self, terms) -> list:
        h = PowerSeries.from_polynomial([Fraction(t) for t in terms], self.order)
        image = self.apply(h)
        return image.prefix(min(len(list(terms)), image.order + 1))

    # -- halves ----------------------------------------------------------

    def _phi(self) -> PowerSeries:
        x2 = PowerSeries.x(self.order + 1) ** 2
        return (x2 / self.f).reversion()

    @staticmethod
    def _x_dlog(phi: PowerSeries) -> PowerSeries:
        # x * phi'(x), which has n-th coefficient n * phi_n
        return PowerSeries(n * phi.coeffs[n] for n in range(phi.order + 1))

    def vertical_half(self) -> "RiordanArray":
        """The array with entries t(2n - k, n) of self."""
        phi = self._phi()
        g = self._x_dlog(phi) * self.g.compose(phi) / phi
        n = min(g.order, phi.order, self.order // 2)
        return RiordanArray(g.truncate(n), phi.truncate(n))

    def horizontal_half(self) -> "RiordanArray":
        """The array with entries t(2n, n + k) of self."""
        phi = self._phi()
        u = self._x_dlog(phi) / phi
        left = RiordanArray(u, phi.truncate(u.order))
        h = left.multiply(self)
        n = min(h.order, self.order // 2)
        return RiordanArray(h.g.truncate(n), h.f.truncate(n))


# -- named arrays -------------------------------------------------------

def identity_array(order: int) -> RiordanArray:
    return RiordanArray(PowerSeries.one(order), PowerSeries.x(order))


def pascal(order: int) -> RiordanArray:
    """The binomial matrix (1/(1-x), x/(1-x))."""
    return RiordanArray.from_gf("1/(1-x)", "x/(1-x)", order)


def catalan_matrix(order: int) -> RiordanArray:
    """(1, x*c(x)): composition with the Catalan series."""
    return RiordanArray.from_gf("1", "x*c(x)", order)


def central_binomial_array(order: int) -> RiordanArray:
    """(1/sqrt(1-4x), x*c(x)^2), entries binom(2n, n-k)."""
    return RiordanArray.from_gf("1/sqrt(1-4*x)", "x*c(x)^2", order)


def central_binomial_inverse_array(order: int) -> RiordanArray:
    """((1-x)/(1+x), x/(1+x)^2), the inverse of the central binomial array."""
    return RiordanArray.from_gf("(1-x)/(1+x)", "x/(1+x)^2", order)


def catalan_triangle_array(order: int) -> RiordanArray:
    """(c(x), x*c(x)^2), entries (2k+1)/(n+k+1) * binom(2n, n-k)."""
    return RiordanArray.from_gf("c(x)", "x*c(x)^2", order)


def binomial_partial_sum_array(order: int) -> RiordanArray:
    """(1/(1-2x), x/(1-x)): binomial transform of partial sums."""
    return RiordanArray.from_gf("1/(1-2*x)", "x/(1-x)", order)
