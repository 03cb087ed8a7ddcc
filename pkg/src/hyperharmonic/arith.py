"""Exact scalars and the polynomial ring Q[lambda].

Scalars are :class:`fractions.Fraction` throughout. Polynomials in the
degeneracy parameter are :class:`LambdaPoly`, a dense immutable
coefficient tuple (constant term first).
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Union

__all__ = [
    "LAMBDA",
    "LambdaPoly",
    "NonzeroConstantTermError",
    "binom_int",
    "binom_poly",
    "degen_falling_factorial",
    "divide_by_lambda",
    "falling_factorial",
    "format_rational",
    "parse_rational",
    "rat_div",
]

Scalar = Union[int, Fraction]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


class NonzeroConstantTermError(ValueError):
    """Raised when dividing a polynomial with nonzero constant term by lambda."""


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or an integer literal into a normalized Fraction.

    >>> parse_rational("-6/4")
    Fraction(-3, 2)
    """
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ValueError(f"not a rational literal: {text!r}")
    num, den = m.group(1), m.group(2)
    if den is not None and int(den) == 0:
        raise ZeroDivisionError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den is not None else 1)


def format_rational(x: Scalar) -> str:
    """Canonical ``"p/q"`` string; the denominator is dropped when it is 1."""
    return str(Fraction(x))


def rat_div(a: Scalar, b: Scalar) -> Fraction:
    if b == 0:
        raise ZeroDivisionError(f"division of {format_rational(a)} by zero")
    return Fraction(a) / Fraction(b)


def _trim(coeffs: list) -> tuple:
    end = len(coeffs)
    while end and coeffs[end - 1] == 0:
        end -= 1
    return tuple(coeffs[:end])


class LambdaPoly:
    """Dense polynomial in lambda with rational coefficients.

    ``LambdaPoly([3, -1]) / 2`` is ``(3 - lambda)/2``. Instances are
    immutable and hashable; the zero polynomial has no coefficients.
    """

    __slots__ = ("coeffs",)

    coeffs: tuple

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        object.__setattr__(self, "coeffs", _trim([Fraction(c) for c in coeffs]))

    @classmethod
    def _from_trimmed(cls, coeffs: tuple) -> "LambdaPoly":
        p = object.__new__(cls)
        object.__setattr__(p, "coeffs", coeffs)
        return p

    @classmethod
    def _from_fractions(cls, coeffs: list) -> "LambdaPoly":
        return cls._from_trimmed(_trim(coeffs))

    @classmethod
    def constant(cls, c: Scalar) -> "LambdaPoly":
        return cls((c,))

    @classmethod
    def zero(cls) -> "LambdaPoly":
        return cls._from_trimmed(())

    @classmethod
    def one(cls) -> "LambdaPoly":
        return cls._from_trimmed((Fraction(1),))

    def __setattr__(self, name, value):
        raise AttributeError("LambdaPoly is immutable")

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def coefficient(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    # -- arithmetic -------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "LambdaPoly | None":
        if isinstance(other, LambdaPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return LambdaPoly.constant(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return LambdaPoly._from_fractions(out)

    __radd__ = __add__

    def __neg__(self) -> "LambdaPoly":
        return LambdaPoly._from_trimmed(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return LambdaPoly.zero()
            return LambdaPoly._from_trimmed(tuple(c * other for c in self.coeffs))
        if not isinstance(other, LambdaPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return LambdaPoly.zero()
        if len(self.coeffs) == 1:
            return other * self.coeffs[0]
        if len(other.coeffs) == 1:
            return self * other.coeffs[0]
        # Convolve integer numerators over a common denominator; one gcd per
        # output coefficient instead of one per term.
        da = math.lcm(*(c.denominator for c in self.coeffs))
        db = math.lcm(*(c.denominator for c in other.coeffs))
        ia = [c.numerator * (da // c.denominator) for c in self.coeffs]
        ib = [c.numerator * (db // c.denominator) for c in other.coeffs]
        out = [0] * (len(ia) + len(ib) - 1)
        for i, x in enumerate(ia):
            if x:
                for j, y in enumerate(ib):
                    out[i + j] += x * y
        d = da * db
        return LambdaPoly._from_fractions([Fraction(c, d) for c in out])

    __rmul__ = __mul__

    def __truediv__(self, other):
        """Division by a nonzero scalar; use :func:`divmod` for polynomials."""
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("LambdaPoly divided by zero scalar")
            return LambdaPoly._from_trimmed(tuple(c / other for c in self.coeffs))
        return NotImplemented

    def __pow__(self, e: int) -> "LambdaPoly":
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        result, base = LambdaPoly.one(), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, divisor):
        divisor = self._coerce(divisor)
        if divisor is None:
            return NotImplemented
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by the zero polynomial")
        rem = list(self.coeffs)
        dd = divisor.degree
        lead = divisor.coeffs[-1]
        if len(rem) - 1 < dd:
            return LambdaPoly.zero(), self
        quot = [Fraction(0)] * (len(rem) - dd)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i] / lead
            quot[i - dd] = c
            if c:
                for j, dc in enumerate(divisor.coeffs):
                    rem[i - dd + j] -= c * dc
        return LambdaPoly._from_fractions(quot), LambdaPoly._from_fractions(rem[:dd])

    def __floordiv__(self, divisor):
        return divmod(self, divisor)[0]

    def __mod__(self, divisor):
        return divmod(self, divisor)[1]

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self) -> int:
        if len(self.coeffs) <= 1:
            return hash(self.coefficient(0))
        return hash(self.coeffs)

    def __call__(self, x: Scalar) -> Fraction:
        return self.evaluate(x)

    def evaluate(self, x: Scalar) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # -- presentation -----------------------------------------------------

    def to_json(self) -> list:
        return [format_rational(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, items: Iterable[str]) -> "LambdaPoly":
        return cls(parse_rational(s) for s in items)

    def __repr__(self) -> str:
        return f"LambdaPoly({self.to_json()!r})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = format_rational(mag)
            else:
                mono = "lambda" if i == 1 else f"lambda^{i}"
                body = mono if mag == 1 else f"{format_rational(mag)}*{mono}"
            terms.append(("-" if c < 0 else "+", body))
        sign, body = terms[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


LAMBDA = LambdaPoly((0, 1))


def divide_by_lambda(p: LambdaPoly) -> LambdaPoly:
    """Return ``p / lambda``; the constant term of ``p`` must be exactly zero."""
    if p.coefficient(0) != 0:
        raise NonzeroConstantTermError(
            f"cannot divide by lambda: constant term is {format_rational(p.coeffs[0])}"
        )
    return LambdaPoly._from_trimmed(p.coeffs[1:])


def binom_int(n: int, k: int) -> int:
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


def binom_poly(r: int, k: int) -> LambdaPoly:
    """C(lambda - r, k) as a polynomial in lambda."""
    num = LambdaPoly.one()
    for j in range(k):
        num = num * LambdaPoly((-(r + j), 1))
    return num / math.factorial(k)


def falling_factorial(x, n: int):
    """(x)_n = x(x-1)...(x-n+1) for a rational or a LambdaPoly ``x``."""
    if isinstance(x, LambdaPoly):
        acc = LambdaPoly.one()
    else:
        acc = Fraction(1)
    for j in range(n):
        acc = acc * (x - j)
    return acc


def degen_falling_factorial(x: Scalar, n: int, lam: Scalar) -> Fraction:
    """(x)_{n,lambda} = x(x - lambda)...(x - (n-1)lambda)."""
    acc = Fraction(1)
    for j in range(n):
        acc *= x - j * lam
    return acc
