"""Exact truncated formal power series over arbitrary-precision rationals.

A :class:`PowerSeries` stores coefficients 0..order as ``fractions.Fraction``
values.  All operations are pure and exact; binary operations truncate to the
minimum order of their inputs.  Composition and reversion preserve the full
order because the inner series has zero constant term.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence


class SeriesError(Exception):
    """Base class for power-series precondition violations."""


class DivisionError(SeriesError):
    """Division by a series whose constant term (after shift) is zero."""


class SqrtError(SeriesError):
    """Square root of a series whose constant term is not a rational square."""


class CompositionError(SeriesError):
    """Composition with a series whose constant term is nonzero."""


class ReversionError(SeriesError):
    """Reversion of a series that is not of the form x + O(x^2)."""


def _as_fraction(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, str):
        return Fraction(v)
    raise TypeError(f"cannot use {v!r} as a series coefficient")


def sqrt_fraction(q: Fraction) -> Fraction:
    """Exact positive square root of a rational, or raise SqrtError."""
    if q < 0:
        raise SqrtError(f"negative constant term {q} has no rational square root")
    np = math.isqrt(q.numerator)
    dp = math.isqrt(q.denominator)
    if np * np != q.numerator or dp * dp != q.denominator:
        raise SqrtError(f"constant term {q} is not the square of a rational")
    return Fraction(np, dp)


class PowerSeries:
    """A truncated formal power series with exact rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        cs = tuple(_as_fraction(c) for c in coeffs)
        if not cs:
            raise ValueError("a series needs at least its constant term")
        self.coeffs = cs

    # -- constructors ---------------------------------------------------

    @classmethod
    def constant(cls, value, order: int) -> "PowerSeries":
        c = [_as_fraction(value)] + [Fraction(0)] * order
        return cls(c)

    @classmethod
    def one(cls, order: int) -> "PowerSeries":
        return cls.constant(1, order)

    @classmethod
    def zero(cls, order: int) -> "PowerSeries":
        return cls.constant(0, order)

    @classmethod
    def x(cls, order: int) -> "PowerSeries":
        c = [Fraction(0)] * (order + 1)
        if order >= 1:
            c[1] = Fraction(1)
        return cls(c)

    @classmethod
    def from_polynomial(cls, coeffs: Sequence, order: int) -> "PowerSeries":
        c = [_as_fraction(v) for v in coeffs]
        if len(c) < order + 1:
            c += [Fraction(0)] * (order + 1 - len(c))
        return cls(c[: order + 1])

    @classmethod
    def catalan(cls, order: int) -> "PowerSeries":
        """The series with n-th coefficient binom(2n,n)/(n+1)."""
        return cls(Fraction(math.comb(2 * n, n), n + 1) for n in range(order + 1))

    # -- basics ---------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> Fraction:
        return self.coeffs[n]

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __repr__(self):
        shown = ", ".join(str(c) for c in self.coeffs[:8])
        if self.order >= 8:
            shown += ", ..."
        return f"PowerSeries([{shown}]; order={self.order})"

    def __eq__(self, other) -> bool:
        """Equality on the common known prefix."""
        if isinstance(other, (int, Fraction)):
            other = PowerSeries.constant(other, self.order)
        if not isinstance(other, PowerSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return self.coeffs[: n + 1] == other.coeffs[: n + 1]

    __hash__ = None

    def truncate(self, order: int) -> "PowerSeries":
        if order > self.order:
            raise ValueError(f"cannot extend order {self.order} series to {order}")
        return PowerSeries(self.coeffs[: order + 1])

    def prefix(self, count: int) -> list:
        return list(self.coeffs[:count])

    def int_prefix(self, count: int | None = None) -> list:
        """First coefficients as ints; raises if any is non-integral."""
        if count is None:
            count = self.order + 1
        out = []
        for i, c in enumerate(self.coeffs[:count]):
            if c.denominator != 1:
                raise ValueError(f"coefficient {i} is non-integral: {c}")
            out.append(c.numerator)
        return out

    def valuation(self) -> int | None:
        for i, c in enumerate(self.coeffs):
            if c != 0:
                return i
        return None

    def is_zero(self) -> bool:
        return self.valuation() is None

    # -- ring operations ------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, (int, Fraction, str)):
            return PowerSeries.constant(other, self.order)
        if isinstance(other, PowerSeries):
            return other
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = min(self.order, o.order)
        return PowerSeries(self.coeffs[i] + o.coeffs[i] for i in range(n + 1))

    __radd__ = __add__

    def __neg__(self):
        return PowerSeries(-c for c in self.coeffs)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = min(self.order, o.order)
        return PowerSeries(self.coeffs[i] - o.coeffs[i] for i in range(n + 1))

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return PowerSeries(c * other for c in self.coeffs)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = min(self.order, o.order)
        a, b = self.coeffs, o.coeffs
        out = [Fraction(0)] * (n + 1)
        for i in range(n + 1):
            ai = a[i]
            if ai == 0:
                continue
            for j in range(n + 1 - i):
                out[i + j] += ai * b[j]
        return PowerSeries(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.divide(o)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o.divide(self)

    def divide(self, b: "PowerSeries") -> "PowerSeries":
        """Exact quotient self/b.

        If b has valuation v > 0 the quotient exists only when the first v
        coefficients of self vanish (a removable factor of x^v); the result
        then loses v known coefficients.
        """
        v = b.valuation()
        if v is None:
            raise DivisionError("division by the zero series")
        if v > 0:
            if any(c != 0 for c in self.coeffs[:v]):
                raise DivisionError(
                    f"divisor has valuation {v} but numerator does not"
                )
            a = self.coeffs[v:] if self.order >= v else (Fraction(0),)
            b_ = b.coeffs[v:]
        else:
            a = self.coeffs
            b_ = b.coeffs
        n = min(len(a), len(b_)) - 1
        if n < 0:
            raise DivisionError("no coefficients left after removable shift")
        out = [Fraction(0)] * (n + 1)
        inv0 = 1 / b_[0]
        for k in range(n + 1):
            s = a[k]
            for j in range(1, k + 1):
                s -= b_[j] * out[k - j]
            out[k] = s * inv0
        return PowerSeries(out)

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("series powers must be non-negative integers")
        result = PowerSeries.one(self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # -- analytic operations --------------------------------------------

    def compose(self, inner: "PowerSeries") -> "PowerSeries":
        """self(inner(x)); inner must have zero constant term."""
        if inner.coeffs[0] != 0:
            raise CompositionError(
                f"inner series has constant term {inner.coeffs[0]}, expected 0"
            )
        n = min(self.order, inner.order)
        u = inner.truncate(n) if inner.order > n else inner
        result = PowerSeries.constant(self.coeffs[n], n)
        for k in range(n - 1, -1, -1):
            result = result * u + self.coeffs[k]
        return result

    def reversion(self) -> "PowerSeries":
        """Compositional inverse of x + f2 x^2 + ..., coefficient of x is 1."""
        if self.coeffs[0] != 0 or self.order < 1 or self.coeffs[1] != 1:
            raise ReversionError(
                "reversion needs f(0) = 0 and [x^1]f = 1, got "
                f"{self.coeffs[:2]}"
            )
        n = self.order
        g = [Fraction(0)] * (n + 1)
        if n >= 1:
            g[1] = Fraction(1)
        for m in range(2, n + 1):
            # g_m enters [x^m] f(g) linearly with unit coefficient.
            cand = PowerSeries(g[: m + 1])
            h = self.truncate(m).compose(cand)
            g[m] = -h.coeffs[m]
        return PowerSeries(g)

    def sqrt(self) -> "PowerSeries":
        """Principal square root; constant term must be a rational square."""
        a = self.coeffs
        if a[0] == 0:
            raise SqrtError("square root needs a nonzero constant term")
        r0 = sqrt_fraction(a[0])
        n = self.order
        out = [Fraction(0)] * (n + 1)
        out[0] = r0
        inv = 1 / (2 * r0)
        for k in range(1, n + 1):
            s = a[k]
            for j in range(1, k):
                s -= out[j] * out[k - j]
            out[k] = s * inv
        return PowerSeries(out)

    def derivative(self) -> "PowerSeries":
        if self.order == 0:
            return PowerSeries.zero(0)
        return PowerSeries(i * self.coeffs[i] for i in range(1, self.order + 1))

    def shift_down(self, k: int) -> "PowerSeries":
        """Divide by x^k; the first k coefficients must vanish."""
        if any(c != 0 for c in self.coeffs[:k]):
            raise DivisionError(f"series is not divisible by x^{k}")
        if self.order < k:
            raise DivisionError("no coefficients left after shift")
        return PowerSeries(self.coeffs[k:])

    def shift_up(self, k: int) -> "PowerSeries":
        return PowerSeries((Fraction(0),) * k + self.coeffs)

    def substitute_power(self, r: int) -> "PowerSeries":
        """x -> x^r (aeration); keeps the same order."""
        if r < 1:
            raise ValueError("power substitution needs r >= 1")
        out = [Fraction(0)] * (self.order + 1)
        for i, c in enumerate(self.coeffs):
            if i * r > self.order:
                break
            out[i * r] = c
        return PowerSeries(out)

    # -- serialization --------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "order": self.order,
            "coeffs": [format_fraction(c) for c in self.coeffs],
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "PowerSeries":
        s = cls(Fraction(c) for c in d["coeffs"])
        if s.order != d["order"]:
            raise ValueError("order field does not match coefficient count")
        return s


def format_fraction(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"
