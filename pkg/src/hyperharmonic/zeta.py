"""Truncated degenerate Hurwitz zeta sums and the finite rearrangement report.

Only finite partial sums are computed. With an integer exponent m and
rational delta and lambda every term is rational, so results are exact.
Nothing here claims convergence; the last included term is returned so
callers can judge the truncation themselves.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import degen_falling_factorial, format_rational
from .numbers import degen_hyperharmonic

__all__ = [
    "Section3Report",
    "ZetaQuery",
    "ZetaResult",
    "render_decimal",
    "section3_report",
    "zeta_degen_partial",
    "zeta_partial",
]


@dataclass(frozen=True)
class ZetaQuery:
    """A truncated zeta evaluation: ``terms`` summands starting at n = 0."""

    m: int
    delta: Fraction = Fraction(1)
    lam: Fraction = Fraction(0)
    terms: int = 64
    digits: int = 10

    def __post_init__(self):
        if self.m < 2:
            raise ValueError(f"exponent m must be >= 2, got {self.m}")
        if Fraction(self.delta) <= 0:
            raise ValueError(f"delta must be positive, got {self.delta}")
        if self.terms < 1:
            raise ValueError(f"terms must be >= 1, got {self.terms}")
        if self.digits < 1:
            raise ValueError(f"digits must be >= 1, got {self.digits}")

    def evaluate(self) -> "ZetaResult":
        total, last = zeta_partial(self.m, self.delta, self.lam, self.terms - 1)
        return ZetaResult(total, last, self.terms, render_decimal(total, self.digits))


@dataclass(frozen=True)
class ZetaResult:
    partial_sum: Fraction
    last_term: Fraction
    terms: int
    decimal: str

    def to_dict(self) -> dict:
        return {
            "partial_sum": format_rational(self.partial_sum),
            "decimal": self.decimal,
            "last_term": format_rational(self.last_term),
            "terms": self.terms,
        }


def _check_exponent(m: int) -> None:
    if m < 2:
        raise ValueError(f"exponent m must be >= 2, got {m}")


def zeta_partial(m: int, delta, lam, N: int) -> tuple[Fraction, Fraction]:
    """sum_{n=0}^{N} (1)_{n,lambda} / (n + delta)^m.

    Returns ``(partial_sum, |term N|)``.
    """
    _check_exponent(m)
    delta, lam = Fraction(delta), Fraction(lam)
    if delta <= 0:
        raise ValueError("delta must be positive")
    if N < 0:
        raise ValueError("N must be >= 0")
    total = Fraction(0)
    fall = Fraction(1)  # (1)_{n,lambda}
    term = Fraction(0)
    for n in range(N + 1):
        if n:
            fall *= 1 - (n - 1) * lam
        term = fall / (n + delta) ** m
        total += term
    return total, abs(term)


def zeta_degen_partial(m: int, lam, N: int) -> Fraction:
    """sum_{n=1}^{N} (1)_{n-1,lambda} / n^m, the delta = 1 case."""
    _check_exponent(m)
    if N < 1:
        return Fraction(0)
    return zeta_partial(m, 1, lam, N - 1)[0]


@dataclass(frozen=True)
class Section3Report:
    r: int
    m: int
    lam: Fraction
    N: int
    direct: Fraction
    swapped: Fraction
    zeta_form: Fraction

    @property
    def passed(self) -> bool:
        return self.direct == self.swapped

    @property
    def residual(self) -> Fraction:
        """direct - zeta_form, reported without any assertion."""
        return self.direct - self.zeta_form

    def to_dict(self) -> dict:
        return {
            "r": self.r,
            "m": self.m,
            "lambda": format_rational(self.lam),
            "N": self.N,
            "A": format_rational(self.direct),
            "B": format_rational(self.swapped),
            "C": format_rational(self.zeta_form),
            "residual": format_rational(self.residual),
            "status": "pass" if self.passed else "fail",
        }


def section3_report(r: int, m: int, lam, N: int) -> Section3Report:
    """Both sides of the finite summation swap plus the zeta-factored form.

    A = sum_{n<=N} H_{n,lambda}^{(r)} (1)_{n-1,lambda}/n^m
    B = sum_{n<=N} H_{n,lambda}^{(r-1)} sum_{k=n}^{N} (1)_{k-1,lambda}/k^m
    C = zeta_lambda(m)|_N * sum_{n<=N} H_{n,lambda}^{(r-1)}
        - sum_{n<=N} H_{n,lambda}^{(r-1)} sum_{l<n} (1)_{l-1,lambda}/l^m

    A == B holds exactly. A - C is reported as the residual; when every sum
    is cut at the same N it comes out as 0.
    """
    if r < 2:
        raise ValueError(f"r must be >= 2, got {r}")
    _check_exponent(m)
    if N < 0:
        raise ValueError("N must be >= 0")
    lam = Fraction(lam)
    w = [Fraction(0)] + [degen_falling_factorial(1, k - 1, lam) / Fraction(k) ** m
                         for k in range(1, N + 1)]
    upper = [degen_hyperharmonic(n, r).evaluate(lam) for n in range(N + 1)]
    lower = [degen_hyperharmonic(n, r - 1).evaluate(lam) for n in range(N + 1)]

    direct = sum((upper[n] * w[n] for n in range(1, N + 1)), Fraction(0))

    swapped = Fraction(0)
    for n in range(1, N + 1):
        inner = Fraction(0)
        for k in range(n, N + 1):
            inner += w[k]
        swapped += lower[n] * inner

    zeta_n = zeta_degen_partial(m, lam, N)
    head = Fraction(0)
    zeta_form = Fraction(0)
    for n in range(1, N + 1):
        zeta_form += lower[n] * (zeta_n - head)
        head += w[n]
    return Section3Report(r, m, lam, N, direct, swapped, zeta_form)


def render_decimal(x, digits: int) -> str:
    """Round-half-even decimal string with exactly ``digits`` fractional digits."""
    if digits < 1:
        raise ValueError("digits must be >= 1")
    scaled = round(Fraction(x) * 10 ** digits)
    sign = "-" if scaled < 0 else ""
    whole, frac = divmod(abs(scaled), 10 ** digits)
    return f"{sign}{whole}.{frac:0{digits}d}"
