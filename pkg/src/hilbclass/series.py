"""Truncated univariate formal power series over an exact coefficient ring.

A series carries an explicit truncation order N and a dense coefficient
tuple of length N + 1; every operation is exact to order N.  Operations on
series of different orders are rejected rather than silently truncated
(use :meth:`TruncatedSeries.truncate` to change order explicitly).

The coefficient ring is either :data:`hilbclass.exact.QQ` or a
:class:`hilbclass.exact.ParamRing`; the latter is what allows reversion of a
series whose linear coefficient is 1 + nilpotent.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .exact import QQ, format_rational


class TruncatedSeries:
    __slots__ = ("ring", "order", "coeffs")

    def __init__(self, ring, order: int, coeffs):
        coeffs = tuple(coeffs)
        if order < 0:
            raise ValueError("order must be nonnegative")
        if len(coeffs) != order + 1:
            raise ValueError(
                f"need {order + 1} coefficients for order {order}, got {len(coeffs)}"
            )
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    # -- constructors -----------------------------------------------------

    @classmethod
    def from_coeffs(cls, coeffs, order: int | None = None, ring=QQ):
        """Build from leading coefficients, zero-padded up to `order`."""
        coeffs = [ring.from_rational(c) if isinstance(c, (int, Fraction)) else c
                  for c in coeffs]
        if order is None:
            order = len(coeffs) - 1
        if len(coeffs) > order + 1:
            raise ValueError("more coefficients than the requested order admits")
        coeffs = coeffs + [ring.zero] * (order + 1 - len(coeffs))
        return cls(ring, order, coeffs)

    @classmethod
    def constant(cls, value, order: int, ring=QQ):
        return cls.from_coeffs([value], order, ring)

    @classmethod
    def zero(cls, order: int, ring=QQ):
        return cls.from_coeffs([], order, ring)

    @classmethod
    def one(cls, order: int, ring=QQ):
        return cls.from_coeffs([1], order, ring)

    @classmethod
    def identity(cls, order: int, ring=QQ):
        """The series x."""
        if order < 1:
            raise ValueError("identity needs order >= 1")
        return cls.from_coeffs([0, 1], order, ring)

    # -- basics -----------------------------------------------------------

    def __getitem__(self, k: int):
        return self.coeffs[k]

    def _check_compatible(self, other: "TruncatedSeries"):
        if not isinstance(other, TruncatedSeries):
            raise TypeError("expected a TruncatedSeries")
        if self.ring != other.ring:
            raise ValueError("mismatched coefficient rings")
        if self.order != other.order:
            raise ValueError(
                f"mismatched truncation orders {self.order} != {other.order}"
            )

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (
            self.ring == other.ring
            and self.order == other.order
            and all(a == b for a, b in zip(self.coeffs, other.coeffs))
        )

    __hash__ = None

    def __repr__(self):
        return f"TruncatedSeries(order={self.order}, coeffs={list(self.coeffs)})"

    def truncate(self, order: int) -> "TruncatedSeries":
        """Explicitly lower the truncation order."""
        if order > self.order:
            raise ValueError("cannot raise the truncation order")
        return TruncatedSeries(self.ring, order, self.coeffs[: order + 1])

    def __add__(self, other):
        self._check_compatible(other)
        return TruncatedSeries(
            self.ring, self.order,
            [a + b for a, b in zip(self.coeffs, other.coeffs)],
        )

    def __sub__(self, other):
        self._check_compatible(other)
        return TruncatedSeries(
            self.ring, self.order,
            [a - b for a, b in zip(self.coeffs, other.coeffs)],
        )

    def __neg__(self):
        return TruncatedSeries(self.ring, self.order, [-a for a in self.coeffs])

    def __mul__(self, other):
        self._check_compatible(other)
        n = self.order
        a, b = self.coeffs, other.coeffs
        zero = self.ring.zero
        out = [zero] * (n + 1)
        for i in range(n + 1):
            ai = a[i]
            if ai == zero:
                continue
            for j in range(n + 1 - i):
                bj = b[j]
                if bj == zero:
                    continue
                out[i + j] = out[i + j] + ai * bj
        return TruncatedSeries(self.ring, n, out)

    def scale(self, c) -> "TruncatedSeries":
        """Multiply every coefficient by the scalar c."""
        return TruncatedSeries(self.ring, self.order, [a * c for a in self.coeffs])

    def scale_arg(self, c) -> "TruncatedSeries":
        """Substitute x -> c*x for a rational constant c."""
        c = Fraction(c)
        out, p = [], Fraction(1)
        for a in self.coeffs:
            out.append(a * p)
            p *= c
        return TruncatedSeries(self.ring, self.order, out)

    def negate_arg(self) -> "TruncatedSeries":
        """Substitute x -> -x."""
        return TruncatedSeries(
            self.ring, self.order,
            [a if k % 2 == 0 else -a for k, a in enumerate(self.coeffs)],
        )

    def inverse(self) -> "TruncatedSeries":
        """Multiplicative inverse; needs a unit constant term."""
        ring = self.ring
        if not ring.is_unit(self.coeffs[0]):
            raise ValueError("inverse needs a unit constant term")
        inv0 = ring.inv(self.coeffs[0])
        out = [inv0] + [ring.zero] * self.order
        for k in range(1, self.order + 1):
            acc = ring.zero
            for j in range(1, k + 1):
                acc = acc + self.coeffs[j] * out[k - j]
            out[k] = -(acc * inv0)
        return TruncatedSeries(ring, self.order, out)

    def __truediv__(self, other):
        self._check_compatible(other)
        return self * other.inverse()

    def derivative(self) -> "TruncatedSeries":
        """d/dx; the result has order one less."""
        if self.order == 0:
            raise ValueError("cannot differentiate an order-0 series")
        return TruncatedSeries(
            self.ring, self.order - 1,
            [self.coeffs[k] * Fraction(k) for k in range(1, self.order + 1)],
        )

    def x_derivative(self) -> "TruncatedSeries":
        """x * d/dx, keeping the order."""
        return TruncatedSeries(
            self.ring, self.order,
            [a * Fraction(k) for k, a in enumerate(self.coeffs)],
        )

    # -- transcendental operations ---------------------------------------

    def exp(self) -> "TruncatedSeries":
        ring = self.ring
        if self.coeffs[0] != ring.zero:
            raise ValueError("exp needs constant term 0")
        out = [ring.one] + [ring.zero] * self.order
        for n in range(1, self.order + 1):
            acc = ring.zero
            for j in range(1, n + 1):
                acc = acc + self.coeffs[j] * out[n - j] * Fraction(j)
            out[n] = acc * Fraction(1, n)
        return TruncatedSeries(ring, self.order, out)

    def log(self) -> "TruncatedSeries":
        ring = self.ring
        if self.coeffs[0] != ring.one:
            raise ValueError("log needs constant term 1")
        out = [ring.zero] * (self.order + 1)
        for n in range(1, self.order + 1):
            acc = self.coeffs[n] * Fraction(n)
            for j in range(1, n):
                acc = acc - out[j] * self.coeffs[n - j] * Fraction(j)
            out[n] = acc * Fraction(1, n)
        return TruncatedSeries(ring, self.order, out)

    def sqrt_unit(self) -> "TruncatedSeries":
        """Square root with constant term 1."""
        ring = self.ring
        if self.coeffs[0] != ring.one:
            raise ValueError("sqrt_unit needs constant term 1")
        out = [ring.one] + [ring.zero] * self.order
        for n in range(1, self.order + 1):
            acc = self.coeffs[n]
            for j in range(1, n):
                acc = acc - out[j] * out[n - j]
            out[n] = acc * Fraction(1, 2)
        return TruncatedSeries(ring, self.order, out)

    # -- composition ------------------------------------------------------

    def compose(self, inner: "TruncatedSeries") -> "TruncatedSeries":
        """self(inner), by Horner evaluation; inner must kill the constant."""
        self._check_compatible(inner)
        if inner.coeffs[0] != self.ring.zero:
            raise ValueError("compose needs inner constant term 0")
        result = TruncatedSeries.constant(0, self.order, self.ring)
        for k in range(self.order, -1, -1):
            result = result * inner
            result = TruncatedSeries(
                self.ring, self.order,
                (result.coeffs[0] + self.coeffs[k],) + result.coeffs[1:],
            )
        return result

    def revert(self) -> "TruncatedSeries":
        """Compositional inverse, by term-by-term back-substitution.

        Needs constant term 0 and a unit linear coefficient (which may be of
        the shape rational-unit + nilpotent over a parameter ring).
        """
        ring = self.ring
        if self.coeffs[0] != ring.zero:
            raise ValueError("revert needs constant term 0")
        if self.order < 1 or not ring.is_unit(self.coeffs[1]):
            raise ValueError("revert needs a unit linear coefficient")
        inv_a1 = ring.inv(self.coeffs[1])
        out = [ring.zero] * (self.order + 1)
        out[1] = inv_a1
        for n in range(2, self.order + 1):
            partial = TruncatedSeries(ring, self.order, out)
            residual = self.compose(partial).coeffs[n]
            out[n] = -(residual * inv_a1)
        return TruncatedSeries(ring, self.order, out)

    # -- serialization ----------------------------------------------------

    def to_strings(self) -> list[str]:
        """JSON form: coefficient strings indexed by exponent (QQ only)."""
        if self.ring != QQ:
            raise ValueError("only rational-coefficient series serialize")
        return [format_rational(c) for c in self.coeffs]


def lagrange_g(F: TruncatedSeries, order: int) -> TruncatedSeries:
    """Solve dg/dt (x / F) = F for g, truncated at `order`.

    Coefficientwise this is g_n = [x^(n-1)] F^n / n^2; equivalently
    t * dg/dt is the compositional inverse of x / F.  F needs a unit
    constant term and order at least `order` - 1.
    """
    ring = F.ring
    if order < 0:
        raise ValueError("order must be nonnegative")
    work = max(order - 1, 0)
    if F.order < work:
        raise ValueError("F is truncated too low for the requested order")
    if not ring.is_unit(F.coeffs[0]):
        raise ValueError("lagrange_g needs a unit constant term")
    Ft = F.truncate(work)
    out = [ring.zero] * (order + 1)
    power = TruncatedSeries.one(work, ring)
    for m in range(1, order + 1):
        power = power * Ft
        out[m] = power.coeffs[m - 1] * Fraction(1, m * m)
    return TruncatedSeries(ring, order, out)


def lagrange_g_derivative_form(F: TruncatedSeries, order: int) -> TruncatedSeries:
    """Same series via iterated differentiation of F^n: the coefficient of
    t^n is (d/dx)^(n-1) F^n at 0, divided by n * n!.  Kept as an
    independently coded route for cross-checking.
    """
    ring = F.ring
    work = max(order - 1, 0)
    if F.order < work:
        raise ValueError("F is truncated too low for the requested order")
    out = [ring.zero] * (order + 1)
    power = TruncatedSeries.one(work, ring)
    Ft = F.truncate(work)
    for m in range(1, order + 1):
        power = power * Ft
        deriv = power
        for _ in range(m - 1):
            deriv = deriv.derivative()
        out[m] = deriv.coeffs[0] * Fraction(1, m * factorial(m))
    return TruncatedSeries(ring, order, out)
