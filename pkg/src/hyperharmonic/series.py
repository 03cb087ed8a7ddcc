"""Truncated formal power series over Q or Q[lambda].

A series of order ``N`` keeps the coefficients of ``t^0 .. t^N``. The
coefficient ring only needs addition, subtraction, multiplication, its
identities and exact division by a nonzero integer, so both
:class:`~fractions.Fraction` and :class:`~hyperharmonic.arith.LambdaPoly`
coefficients work through the same code.

Constructors that depend on lambda take ``lam=None`` for a symbolic
series (coefficients in Q[lambda]) or a rational value.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .arith import LAMBDA, LambdaPoly, degen_falling_factorial, format_rational

__all__ = [
    "LAMBDA_POLY",
    "RATIONAL",
    "OrderMismatchError",
    "Ring",
    "TruncatedSeries",
    "degen_exp_series",
    "degen_hyper_gf",
    "degen_log1p_series",
    "degen_log_series",
    "geom_pow",
    "one_minus_t_pow",
    "ring_for",
    "series_add",
    "series_compose",
    "series_derive",
    "series_mul",
]


class OrderMismatchError(ValueError):
    pass


@dataclass(frozen=True)
class Ring:
    name: str
    embed: Callable[[int | Fraction], object]

    @property
    def zero(self):
        return self.embed(0)

    @property
    def one(self):
        return self.embed(1)


RATIONAL = Ring("rational", Fraction)
LAMBDA_POLY = Ring("lambda-poly", LambdaPoly.constant)


def ring_for(lam: Fraction | int | None) -> Ring:
    return LAMBDA_POLY if lam is None else RATIONAL


def _lambda_value(lam):
    return LAMBDA if lam is None else Fraction(lam)


def _dump(c) -> object:
    if isinstance(c, LambdaPoly):
        return c.to_json()
    return format_rational(c)


class TruncatedSeries:
    """Coefficients of ``t^0 .. t^order`` over a fixed ring."""

    __slots__ = ("order", "coeffs", "ring")

    def __init__(self, coeffs: Sequence, ring: Ring, order: int | None = None):
        coeffs = tuple(coeffs)
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("series order must be nonnegative")
        if len(coeffs) != order + 1:
            raise ValueError(
                f"order {order} series needs {order + 1} coefficients, got {len(coeffs)}"
            )
        self.order = order
        self.coeffs = coeffs
        self.ring = ring

    @classmethod
    def from_function(cls, f: Callable[[int], object], order: int, ring: Ring):
        return cls([f(n) for n in range(order + 1)], ring)

    @classmethod
    def constant(cls, c, order: int, ring: Ring):
        return cls([c] + [ring.zero] * order, ring)

    @classmethod
    def variable(cls, order: int, ring: Ring):
        """The series ``t`` (or ``0`` at order 0)."""
        coeffs = [ring.zero] * (order + 1)
        if order >= 1:
            coeffs[1] = ring.one
        return cls(coeffs, ring)

    def __getitem__(self, n: int):
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        return f"TruncatedSeries(order={self.order}, ring={self.ring.name}, coeffs={[_dump(c) for c in self.coeffs]})"

    def _check(self, other: "TruncatedSeries") -> None:
        if self.order != other.order:
            raise OrderMismatchError(
                f"series orders differ: {self.order} vs {other.order}"
            )

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check(other)
        return TruncatedSeries([a + b for a, b in zip(self.coeffs, other.coeffs)], self.ring)

    def __sub__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check(other)
        return TruncatedSeries([a - b for a, b in zip(self.coeffs, other.coeffs)], self.ring)

    def __neg__(self):
        return TruncatedSeries([-a for a in self.coeffs], self.ring)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            self._check(other)
            a, b = self.coeffs, other.coeffs
            out = []
            for n in range(self.order + 1):
                acc = self.ring.zero
                for i in range(n + 1):
                    acc = acc + a[i] * b[n - i]
                out.append(acc)
            return TruncatedSeries(out, self.ring)
        if isinstance(other, (int, Fraction, LambdaPoly)):
            return TruncatedSeries([c * other for c in self.coeffs], self.ring)
        return NotImplemented

    __rmul__ = __mul__

    def derive(self, k: int = 1) -> "TruncatedSeries":
        return series_derive(self, k)

    def evaluate_lambda(self, lam) -> "TruncatedSeries":
        """Specialize a symbolic series at a rational lambda."""
        if self.ring is not LAMBDA_POLY:
            return self
        return TruncatedSeries([c.evaluate(lam) for c in self.coeffs], RATIONAL)

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "ring": self.ring.name,
            "coeffs": [_dump(c) for c in self.coeffs],
        }


def series_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a + b


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a * b


def series_derive(a: TruncatedSeries, k: int) -> TruncatedSeries:
    """k-th formal derivative; the result has order ``a.order - k``."""
    if k < 0:
        raise ValueError("derivative order must be nonnegative")
    if k > a.order:
        raise ValueError(f"cannot take {k} derivatives of an order-{a.order} series")
    out = []
    for n in range(a.order - k + 1):
        # (n+k)!/n!
        out.append(a.coeffs[n + k] * math.perm(n + k, k))
    return TruncatedSeries(out, a.ring)


def series_compose(outer: TruncatedSeries, inner: TruncatedSeries) -> TruncatedSeries:
    """outer(inner(t)) truncated at the common order, by Horner's rule."""
    outer._check(inner)
    if inner.coeffs[0] != 0:
        raise ValueError("inner series of a composition must have zero constant term")
    ring = outer.ring
    acc = TruncatedSeries.constant(outer.coeffs[-1], outer.order, ring)
    for c in reversed(outer.coeffs[:-1]):
        acc = acc * inner
        acc = TruncatedSeries((acc.coeffs[0] + c,) + acc.coeffs[1:], ring)
    return acc


def geom_pow(r: int, order: int, ring: Ring = RATIONAL) -> TruncatedSeries:
    """(1 - t)^(-r) = sum_n C(n+r-1, n) t^n."""
    if r < 1:
        raise ValueError("geom_pow needs r >= 1")
    return TruncatedSeries.from_function(
        lambda n: ring.embed(math.comb(n + r - 1, n)), order, ring
    )


def one_minus_t_pow(r: int, order: int, ring: Ring = RATIONAL) -> TruncatedSeries:
    """(1 - t)^r for r >= 0, a polynomial."""
    return TruncatedSeries.from_function(
        lambda n: ring.embed((-1) ** n * math.comb(r, n)), order, ring
    )


def degen_log1p_series(order: int, lam=None) -> TruncatedSeries:
    """log_lambda(1 + t) = ((1 + t)^lambda - 1) / lambda.

    The t^k coefficient is C(lambda, k)/lambda, expanded as
    (lambda-1)(lambda-2)...(lambda-k+1)/k! so lambda = 0 needs no special case.
    """
    x = _lambda_value(lam)
    ring = ring_for(lam)
    coeffs = [ring.zero]
    term = ring.one  # prod_{j<k}(x - j) / k!, without the leading x factor
    for k in range(1, order + 1):
        if k > 1:
            term = term * (x - (k - 1))
        term = term / k
        coeffs.append(term)
    return TruncatedSeries(coeffs, ring)


def degen_log_series(order: int, lam=None) -> TruncatedSeries:
    """log_lambda(1 - t); coefficient k is (-1)^k (lambda-1)...(lambda-k+1)/k!."""
    s = degen_log1p_series(order, lam)
    return TruncatedSeries(
        [c if n % 2 == 0 else -c for n, c in enumerate(s.coeffs)], s.ring
    )


def degen_exp_series(x, lam, order: int) -> TruncatedSeries:
    """e_lambda^x(t) = sum_n (x)_{n,lambda} t^n / n!. Defined for every lambda, 0 included."""
    return TruncatedSeries.from_function(
        lambda n: degen_falling_factorial(x, n, lam) / math.factorial(n), order, RATIONAL
    )


def degen_hyper_gf(r: int, order: int, lam=None) -> TruncatedSeries:
    """-log_lambda(1 - t) / (1 - t)^r, whose t^n coefficient is H_{n,lambda}^{(r)}."""
    log = degen_log_series(order, lam)
    return -log * geom_pow(r, order, log.ring)
