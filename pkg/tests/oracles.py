"""Brute-force reference values built with sympy, independent of the package arithmetic."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

import sympy as sp

from hyperharmonic.arith import LambdaPoly

L = sp.Symbol("lam")


def to_poly(expr) -> LambdaPoly:
    expr = sp.expand(sp.expand_func(sp.sympify(expr)))
    if expr == 0:
        return LambdaPoly()
    coeffs = sp.Poly(expr, L).all_coeffs()[::-1]
    return LambdaPoly(Fraction(int(c.p), int(c.q)) for c in map(sp.Rational, coeffs))


def to_fraction(x) -> Fraction:
    x = sp.Rational(x)
    return Fraction(int(x.p), int(x.q))


@lru_cache(maxsize=None)
def degen_harmonic(n: int):
    """Sum of (1/lam) C(lam, k) (-1)^(k-1), expanded after cancelling lam."""
    total = sp.Integer(0)
    for k in range(1, n + 1):
        total += sp.cancel(sp.expand_func(sp.binomial(L, k)) / L) * (-1) ** (k - 1)
    return sp.expand(total)


@lru_cache(maxsize=None)
def degen_hyper(n: int, r: int):
    """Partial-sum definition, summed literally."""
    if n == 0:
        return sp.Integer(0)
    if r == 1:
        return degen_harmonic(n)
    return sp.expand(sum(degen_hyper(j, r - 1) for j in range(1, n + 1)))


def harmonic(n: int):
    return sum((sp.Rational(1, j) for j in range(1, n + 1)), sp.Integer(0))


@lru_cache(maxsize=None)
def hyper(n: int, r: int):
    if r == 0:
        return sp.Rational(1, n)
    if n == 0:
        return sp.Integer(0)
    return sum((hyper(j, r - 1) for j in range(1, n + 1)), sp.Integer(0))


def q_poly(n: int, r: int):
    prod = sp.Integer(1)
    for i in range(n):
        prod *= 1 - L / (r + i)
    return sp.expand(sp.cancel((sp.expand(prod) - 1) / L))


def series_coeffs(expr, order: int):
    """Taylor coefficients in t of a sympy expression, t^0..t^order."""
    t = sp.Symbol("t")
    s = sp.series(expr(t), t, 0, order + 1).removeO()
    return [sp.expand(s.coeff(t, n)) for n in range(order + 1)]
