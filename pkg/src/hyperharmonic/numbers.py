"""Harmonic-type numbers, Stirling numbers and the q-polynomials.

Every degenerate family is a :class:`LambdaPoly`; evaluate it to get a
value at a particular lambda. The triangles are memoized in
:class:`NumberTriangle` caches that are safe to share between threads.
"""

from __future__ import annotations

import enum
import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable

from .arith import LAMBDA, LambdaPoly, binom_int, binom_poly, divide_by_lambda

__all__ = [
    "CacheBoundError",
    "DEFAULT_BOUND",
    "InternalConsistencyError",
    "NumberTriangle",
    "QPolyKey",
    "TriangleKind",
    "clear_caches",
    "degen_harmonic",
    "degen_hyperharmonic",
    "degen_hyperharmonic_order0",
    "harmonic",
    "hyperharmonic",
    "q_poly",
    "set_cache_bound",
    "stirling1",
]

DEFAULT_BOUND = 512


class CacheBoundError(ValueError):
    """An index exceeded the configured triangle bound."""


class InternalConsistencyError(RuntimeError):
    """Two computation routes that must agree did not."""


class TriangleKind(enum.Enum):
    CLASSICAL_HYPER = "classical-hyper"
    DEGEN_HYPER = "degen-hyper"
    STIRLING1 = "stirling1"


class NumberTriangle:
    """Two-index memo table filled on demand.

    ``fill(tri, n, j)`` computes cell ``(n, j)`` and may read any cell
    ``(n', j')`` with ``n' < n``, or ``n' == n`` and ``j' < j``; cells are
    filled in that order, so no recursion is needed. Writers hold a lock
    and a cell is published only once computed, so concurrent readers see
    either nothing or the final value.
    """

    def __init__(self, kind: TriangleKind, fill: Callable, first_col: int = 0,
                 bound: int = DEFAULT_BOUND, skip: Callable[[int, int], bool] | None = None):
        self.kind = kind
        self.bound = bound
        self._fill = fill
        self._first_col = first_col
        self._skip = skip or (lambda n, j: False)
        self._cells: dict[tuple[int, int], object] = {}
        self._lock = threading.RLock()

    def __contains__(self, key) -> bool:
        return key in self._cells

    def __len__(self) -> int:
        return len(self._cells)

    def cell(self, n: int, j: int):
        return self._cells[(n, j)]

    def get(self, n: int, j: int):
        if n > self.bound:
            raise CacheBoundError(
                f"{self.kind.value} index n={n} exceeds cache bound {self.bound}"
            )
        value = self._cells.get((n, j))
        if value is not None:
            return value
        with self._lock:
            for m in range(n + 1):
                for jj in range(self._first_col, j + 1):
                    if (m, jj) not in self._cells and not self._skip(m, jj):
                        self._cells[(m, jj)] = self._fill(self, m, jj)
            return self._cells[(n, j)]

    def clear(self) -> None:
        with self._lock:
            self._cells.clear()


def _fill_classical(tri: NumberTriangle, n: int, r: int) -> Fraction:
    if r == 0:
        return Fraction(1, n)
    if n == 0:
        return Fraction(0)
    # H_n^{(r)} = sum_{k<=n} H_k^{(r-1)}, telescoped
    return tri.cell(n - 1, r) + tri.cell(n, r - 1)


def _fill_degen(tri: NumberTriangle, n: int, r: int) -> LambdaPoly:
    if n == 0:
        return LambdaPoly.zero()
    if r == 1:
        return tri.cell(n - 1, 1) + degen_hyperharmonic_order0(n)
    return tri.cell(n - 1, r) + tri.cell(n, r - 1)


def _fill_stirling(tri: NumberTriangle, n: int, k: int) -> int:
    if n == 0:
        return 1 if k == 0 else 0
    if k == 0:
        return 0
    # S1(n, k) = S1(n-1, k-1) - (n-1) S1(n-1, k)
    return tri.cell(n - 1, k - 1) - (n - 1) * tri.cell(n - 1, k)


_CLASSICAL = NumberTriangle(TriangleKind.CLASSICAL_HYPER, _fill_classical,
                            skip=lambda n, r: n == 0 and r == 0)
_DEGEN = NumberTriangle(TriangleKind.DEGEN_HYPER, _fill_degen, first_col=1)
_STIRLING = NumberTriangle(TriangleKind.STIRLING1, _fill_stirling)
_TRIANGLES = (_CLASSICAL, _DEGEN, _STIRLING)


def set_cache_bound(bound: int) -> None:
    for tri in _TRIANGLES:
        tri.bound = bound


def clear_caches() -> None:
    for tri in _TRIANGLES:
        tri.clear()
    _order0.cache_clear()
    _q_poly_cached.cache_clear()


def harmonic(n: int) -> Fraction:
    if n < 0:
        raise ValueError("harmonic numbers need n >= 0")
    return _CLASSICAL.get(n, 1)


@lru_cache(maxsize=None)
def _order0(k: int) -> LambdaPoly:
    term = LambdaPoly.one()
    for j in range(1, k):
        term = term * (LAMBDA - j)
    return term * Fraction((-1) ** (k - 1), math.factorial(k))


def degen_hyperharmonic_order0(k: int) -> LambdaPoly:
    """H_{k,lambda}^{(0)} = (-1)^{k-1} (lambda-1)(lambda-2)...(lambda-k+1) / k!.

    Equal to (-1)^{k-1} C(lambda, k)/lambda; at lambda = 0 it is 1/k.
    """
    if k < 1:
        raise ValueError("order-0 degenerate hyperharmonic numbers need k >= 1")
    return _order0(k)


def degen_harmonic(n: int) -> LambdaPoly:
    """H_{n,lambda} = sum_{k=1}^n (-1)^{k-1} C(lambda, k)/lambda, a polynomial of degree n-1."""
    if n < 0:
        raise ValueError("degenerate harmonic numbers need n >= 0")
    return _DEGEN.get(n, 1)


def hyperharmonic(n: int, r: int, route: str = "recurrence") -> Fraction:
    """Classical hyperharmonic number H_n^{(r)}.

    ``route="recurrence"`` iterates partial sums; ``route="closed"`` uses
    C(n+r-1, r-1) (H_{n+r-1} - H_{r-1}) and needs r >= 1.
    """
    if n < 0 or r < 0:
        raise ValueError("hyperharmonic numbers need n, r >= 0")
    if r == 0:
        if n == 0:
            raise ZeroDivisionError("H_0^{(0)} = 1/0 is undefined")
        return Fraction(1, n)
    if route == "recurrence":
        return _CLASSICAL.get(n, r)
    if route == "closed":
        return binom_int(n + r - 1, r - 1) * (harmonic(n + r - 1) - harmonic(r - 1))
    raise ValueError(f"unknown route {route!r}")


def degen_hyperharmonic(n: int, r: int, route: str = "recurrence") -> LambdaPoly:
    """Degenerate hyperharmonic number H_{n,lambda}^{(r)} as a polynomial in lambda.

    Routes: ``"recurrence"`` (iterated partial sums of H_{n,lambda}),
    ``"gf"`` (t^n coefficient of -log_lambda(1-t)/(1-t)^r) and ``"closed"``
    (the Conway-Guy type quotient by C(lambda-1, r-1), done as exact
    polynomial division).
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if r < 1:
        raise ValueError("degenerate hyperharmonic numbers need r >= 1")
    if route == "recurrence":
        return _DEGEN.get(n, r)
    if route == "gf":
        from .series import degen_hyper_gf

        return degen_hyper_gf(r, n)[n]
    if route == "closed":
        k = r - 1
        numerator = (degen_harmonic(n + k) - degen_harmonic(k)) * ((-1) ** k * binom_int(n + k, n))
        quotient, remainder = divmod(numerator, binom_poly(1, k))
        if remainder:
            raise InternalConsistencyError(
                f"C(lambda-1, {k}) does not divide the closed-form numerator for "
                f"n={n}, r={r}: remainder {remainder.to_json()}"
            )
        return quotient
    raise ValueError(f"unknown route {route!r}")


def stirling1(n: int, k: int) -> int:
    """Signed Stirling number of the first kind; 0 outside the triangle."""
    if n < 0 or k < 0 or k > n:
        return 0
    return _STIRLING.get(n, k)


@dataclass(frozen=True)
class QPolyKey:
    """Index of q_n(lambda). The defining product starts at 1 - lambda/r, so r is part of the key."""

    n: int
    r: int

    def __post_init__(self):
        if self.n < 1 or self.r < 1:
            raise ValueError(f"q-polynomial needs n, r >= 1, got n={self.n}, r={self.r}")


def _q_product(n: int, r: int) -> LambdaPoly:
    prod = LambdaPoly.one()
    for i in range(n):
        prod = prod * LambdaPoly((1, Fraction(-1, r + i)))
    return divide_by_lambda(prod - 1)


def _q_closed(n: int, r: int) -> LambdaPoly:
    scaled = binom_poly(r, n) * Fraction((-1) ** n, binom_int(r + n - 1, n))
    return divide_by_lambda(scaled - 1)


def _q_stirling(n: int, r: int) -> LambdaPoly:
    falling = math.prod(-r - j for j in range(n))  # (-r)_n
    coeffs = []
    for k in range(1, n + 1):
        acc = 0
        for l in range(k, n + 1):
            acc += binom_int(l, k) * stirling1(n, l) * (-1) ** (l - k) * r ** (l - k)
        coeffs.append(Fraction(acc, falling))
    return LambdaPoly(coeffs)


_Q_ROUTES = {"product": _q_product, "closed": _q_closed, "stirling": _q_stirling}


@lru_cache(maxsize=None)
def _q_poly_cached(n: int, r: int, route: str) -> LambdaPoly:
    return _Q_ROUTES[route](n, r)


def q_poly(key: QPolyKey, route: str = "product") -> LambdaPoly:
    """q_n(lambda) for the product starting at 1 - lambda/r.

    ``route`` is ``"product"``, ``"closed"``, ``"stirling"``, or ``"all"``
    to compute all three and raise :class:`InternalConsistencyError` if
    they differ.
    """
    if route == "all":
        results = {name: _q_poly_cached(key.n, key.r, name) for name in _Q_ROUTES}
        if len(set(results.values())) != 1:
            detail = ", ".join(f"{k}={v.to_json()}" for k, v in results.items())
            raise InternalConsistencyError(f"q-polynomial routes disagree for {key}: {detail}")
        return results["product"]
    if route not in _Q_ROUTES:
        raise ValueError(f"unknown route {route!r}")
    return _q_poly_cached(key.n, key.r, route)
