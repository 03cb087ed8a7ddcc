"""Exact verification of the degenerate hyperharmonic identities.

Each ``verify_*`` function checks one parameter tuple and returns a
:class:`VerificationReport`; the ``sweep_*`` functions run a verifier over
ranges and merge the results into one report per identity. Nothing here
takes a tolerance: sides are compared as elements of Q[lambda] or Q.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from functools import lru_cache
from fractions import Fraction
from typing import Iterable, Sequence

from .arith import (
    LAMBDA,
    LambdaPoly,
    binom_int,
    binom_poly,
    degen_falling_factorial,
    format_rational,
)
from .numbers import (
    QPolyKey,
    degen_harmonic,
    degen_hyperharmonic,
    hyperharmonic,
    q_poly,
)
from .series import degen_hyper_gf, series_derive

__all__ = [
    "DEFAULT_LAMBDAS",
    "Failure",
    "SingularParameterError",
    "VerificationReport",
    "VerifyConfig",
    "merge_reports",
    "sweep_derivative_identity",
    "sweep_gf_match",
    "sweep_lemma1",
    "sweep_rearrangement",
    "sweep_theorem2",
    "sweep_theorem3",
    "sweep_theorem3_evaluated",
    "theorem2_rhs",
    "verify_all",
    "verify_derivative_identity",
    "verify_gf_match",
    "verify_lemma1",
    "verify_rearrangement",
    "verify_theorem2",
    "verify_theorem3",
    "verify_theorem3_evaluated",
]

DEFAULT_LAMBDAS = (Fraction(1, 2), Fraction(-1, 3), Fraction(2), Fraction(7, 5))


class SingularParameterError(ValueError):
    """The identity divides by a quantity that vanishes at this lambda."""


def _dump(value):
    if isinstance(value, LambdaPoly):
        return value.to_json()
    if isinstance(value, (int, Fraction)):
        return format_rational(value)
    return value


def _dump_params(params: dict) -> dict:
    return {k: _dump(v) for k, v in params.items()}


@dataclass
class Failure:
    params: dict
    lhs: object
    rhs: object

    def sort_key(self):
        return tuple(
            (k, (0, v, "") if isinstance(v, (int, Fraction)) else (1, 0, str(v)))
            for k, v in self.params.items()
        )

    def to_dict(self) -> dict:
        return {"params": _dump_params(self.params), "lhs": _dump(self.lhs), "rhs": _dump(self.rhs)}


@dataclass
class VerificationReport:
    identity: str
    parameter_ranges: dict = field(default_factory=dict)
    cases: int = 0
    failures: list = field(default_factory=list)
    skipped: int = 0

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, params: dict, lhs, rhs) -> None:
        self.cases += 1
        if lhs != rhs:
            self.failures.append(Failure(dict(params), lhs, rhs))

    def to_dict(self) -> dict:
        return {
            "identity": self.identity,
            "status": "pass" if self.passed else "fail",
            "parameter_ranges": {k: [_dump(x) for x in v] for k, v in self.parameter_ranges.items()},
            "cases": self.cases,
            "skipped": self.skipped,
            "failures": [f.to_dict() for f in sorted(self.failures, key=Failure.sort_key)],
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)


def merge_reports(identity: str, reports: Iterable[VerificationReport],
                  parameter_ranges: dict | None = None) -> VerificationReport:
    """Combine single-case reports; failures come out sorted by parameters."""
    merged = VerificationReport(identity, dict(parameter_ranges or {}))
    for rep in reports:
        merged.cases += rep.cases
        merged.skipped += rep.skipped
        merged.failures.extend(rep.failures)
    merged.failures.sort(key=Failure.sort_key)
    return merged


def _require_positive(**params) -> None:
    for name, value in params.items():
        if value < 1:
            raise ValueError(f"{name} must be >= 1, got {value}")


# -- index-shift expansion -------------------------------------------------

def _q(n: int, r: int) -> LambdaPoly:
    # q_0 is the empty product: 1 + lambda*q_0 = 1
    return LambdaPoly.zero() if n == 0 else q_poly(QPolyKey(n, r))


def theorem2_rhs(n: int, k: int, r: int) -> LambdaPoly:
    """Right side of the index-shift expansion as a polynomial in lambda.

    Valid for k = 0 as well, where it reduces to H_{n,lambda}^{(r)}.
    """
    a = binom_int(n + r + k - 1, n)
    b = binom_int(r + k - 1, k)
    upper = degen_hyperharmonic(n, k + r)
    classical = hyperharmonic(k, r) if k >= 1 else Fraction(0)
    q_sum = LambdaPoly.zero()
    for l in range(2, k + 1):
        q_sum = q_sum + _q(l - 1, r) / (r + l - 1)
    bracket = q_sum * (a * b) + _q(k, r) * upper * b
    return upper * b + a * classical + LAMBDA * bracket


def verify_theorem2(n: int, k: int, r: int) -> VerificationReport:
    """C(n+k,k) H_{n+k,lambda}^{(r)} against the index-shift expansion, in Q[lambda]."""
    _require_positive(n=n, k=k, r=r)
    report = VerificationReport("theorem2", {"n": [n, n], "k": [k, k], "r": [r, r]})
    lhs = degen_hyperharmonic(n + k, r) * binom_int(n + k, k)
    report.check({"n": n, "k": k, "r": r}, lhs, theorem2_rhs(n, k, r))
    return report


# -- closed form for order k+1 -----------------------------------------------

def verify_theorem3(n: int, k: int) -> VerificationReport:
    """Division-free form: (-1)^k C(lambda-1,k) H_{n,lambda}^{(k+1)} = C(n+k,n)(H_{n+k,lambda} - H_{k,lambda})."""
    if n < 0 or k < 1:
        raise ValueError(f"theorem3 needs n >= 0 and k >= 1, got n={n}, k={k}")
    report = VerificationReport("theorem3", {"n": [n, n], "k": [k, k]})
    lhs = binom_poly(1, k) * degen_hyperharmonic(n, k + 1) * (-1) ** k
    rhs = (degen_harmonic(n + k) - degen_harmonic(k)) * binom_int(n + k, n)
    report.check({"n": n, "k": k}, lhs, rhs)
    return report


@lru_cache(maxsize=None)
def _degen_hyper_direct(n: int, r: int, lam: Fraction) -> Fraction:
    """H_{n,lambda}^{(r)} at a rational lambda, built from the (1/lambda) C(lambda, k) sum.

    Shares no code with the polynomial route.
    """
    if n == 0:
        return Fraction(0)
    if r > 1:
        return _degen_hyper_direct(n - 1, r, lam) + _degen_hyper_direct(n, r - 1, lam)
    if lam == 0:
        # limit of C(lambda, n)/lambda
        term = Fraction((-1) ** (n - 1), n)
    else:
        term = math.prod(lam - j for j in range(n)) / math.factorial(n) / lam
    return _degen_hyper_direct(n - 1, 1, lam) + term * (-1) ** (n - 1)


def verify_theorem3_evaluated(n: int, k: int, lam) -> VerificationReport:
    """Closed form for H^{(k+1)} in quotient form at a rational lambda outside {1, ..., k}."""
    lam = Fraction(lam)
    if n < 0 or k < 1:
        raise ValueError(f"theorem3 needs n >= 0 and k >= 1, got n={n}, k={k}")
    denominator = binom_poly(1, k).evaluate(lam)
    if denominator == 0:
        raise SingularParameterError(
            f"C(lambda-1, {k}) vanishes at lambda={format_rational(lam)} "
            f"(factor lambda-{int(lam)})"
        )
    report = VerificationReport(
        "theorem3-evaluated", {"n": [n, n], "k": [k, k], "lambda": [lam]}
    )
    lhs = _degen_hyper_direct(n, k + 1, lam)
    numer = (degen_harmonic(n + k).evaluate(lam) - degen_harmonic(k).evaluate(lam)) \
        * binom_int(n + k, n)
    rhs = (-1) ** k * numer / denominator
    report.check({"n": n, "k": k, "lambda": lam}, lhs, rhs)
    return report


# -- q-polynomials ----------------------------------------------------------

def verify_lemma1(n: int, r: int) -> VerificationReport:
    """Three routes to q_n(lambda), its degree, and 1 + lambda q = (-1)^n C(lambda-r, n)/C(r+n-1, n)."""
    _require_positive(n=n, r=r)
    key = QPolyKey(n, r)
    report = VerificationReport("lemma1", {"n": [n, n], "r": [r, r]})
    product = q_poly(key, "product")
    for route in ("closed", "stirling"):
        report.check({"n": n, "r": r, "check": f"product=={route}"}, product, q_poly(key, route))
    report.check({"n": n, "r": r, "check": "degree"}, product.degree, n - 1)
    reassembled = LAMBDA * product + 1
    target = binom_poly(r, n) * Fraction((-1) ** n, binom_int(r + n - 1, n))
    report.check({"n": n, "r": r, "check": "reassembly"}, reassembled, target)
    return report


# -- generating functions ---------------------------------------------------

def verify_gf_match(r: int, order: int) -> VerificationReport:
    """t^n coefficients of -log_lambda(1-t)/(1-t)^r against the partial-sum recurrence.

    Also compares the lambda = 0 specialization with the classical numbers.
    """
    _require_positive(r=r)
    if order < 0:
        raise ValueError("order must be >= 0")
    report = VerificationReport("gf", {"r": [r, r], "order": [order, order]})
    gf = degen_hyper_gf(r, order)
    classical = degen_hyper_gf(r, order, lam=0)
    for n in range(order + 1):
        report.check({"r": r, "n": n}, gf[n], degen_hyperharmonic(n, r))
        expected = hyperharmonic(n, r)
        report.check({"r": r, "n": n, "lambda": 0}, classical[n], expected)
    return report


def verify_derivative_identity(k: int, r: int, order: int) -> VerificationReport:
    """k-th derivative of the generating function, coefficientwise.

    Coefficient n must equal k! C(n+k, k) H_{n+k,lambda}^{(r)} and also
    k! times the index-shift expansion.
    """
    if k < 0 or k > order:
        raise ValueError(f"need 0 <= k <= order, got k={k}, order={order}")
    _require_positive(r=r)
    report = VerificationReport("derivative", {"k": [k, k], "r": [r, r], "order": [order, order]})
    deriv = series_derive(degen_hyper_gf(r, order), k)
    fact = math.factorial(k)
    for n in range(deriv.order + 1):
        params = {"k": k, "r": r, "n": n}
        shifted = degen_hyperharmonic(n + k, r) * (fact * binom_int(n + k, k))
        report.check({**params, "side": "shift"}, deriv[n], shifted)
        report.check({**params, "side": "expansion"}, deriv[n], theorem2_rhs(n, k, r) * fact)
    return report


# -- finite rearrangement ---------------------------------------------------

def verify_rearrangement(N: int, r: int, m: int, lam) -> VerificationReport:
    """Swap of summation order behind the degenerate zeta identity, at finite N."""
    if r < 2 or m < 2:
        raise ValueError(f"rearrangement needs r >= 2 and m >= 2, got r={r}, m={m}")
    if N < 0:
        raise ValueError("N must be >= 0")
    lam = Fraction(lam)
    report = VerificationReport(
        "rearrangement", {"N": [N, N], "r": [r, r], "m": [m, m], "lambda": [lam]}
    )
    weights = [None] + [degen_falling_factorial(1, j - 1, lam) / Fraction(j) ** m
                        for j in range(1, N + 1)]
    upper = [degen_hyperharmonic(n, r).evaluate(lam) for n in range(N + 1)]
    lower = [degen_hyperharmonic(n, r - 1).evaluate(lam) for n in range(N + 1)]
    lhs = sum((upper[n] * weights[n] for n in range(1, N + 1)), Fraction(0))
    rhs = Fraction(0)
    for n in range(1, N + 1):
        rhs += lower[n] * sum(weights[n:], Fraction(0))
    report.check({"N": N, "r": r, "m": m, "lambda": lam}, lhs, rhs)
    return report


# -- sweeps -----------------------------------------------------------------

def _span(lo_hi: Sequence[int]) -> range:
    lo, hi = lo_hi
    return range(lo, hi + 1)


def sweep_theorem2(n=(1, 10), k=(1, 10), r=(1, 10)) -> VerificationReport:
    return merge_reports(
        "theorem2",
        (verify_theorem2(a, b, c) for a in _span(n) for b in _span(k) for c in _span(r)),
        {"n": list(n), "k": list(k), "r": list(r)},
    )


def sweep_theorem3(n=(1, 40), k=(1, 40)) -> VerificationReport:
    return merge_reports(
        "theorem3",
        (verify_theorem3(a, b) for a in _span(n) for b in _span(k)),
        {"n": list(n), "k": list(k)},
    )


def sweep_theorem3_evaluated(n=(1, 10), k=(1, 10), lambdas=DEFAULT_LAMBDAS) -> VerificationReport:
    """Singular (k, lambda) pairs must be rejected; they count as skipped, not failures."""
    merged = VerificationReport(
        "theorem3-evaluated", {"n": list(n), "k": list(k), "lambda": list(lambdas)}
    )
    parts = []
    for lam in lambdas:
        for b in _span(k):
            singular = Fraction(lam).denominator == 1 and 1 <= lam <= b
            for a in _span(n):
                try:
                    parts.append(verify_theorem3_evaluated(a, b, lam))
                except SingularParameterError:
                    if singular:
                        merged.skipped += 1
                    else:
                        raise
                else:
                    if singular:
                        merged.failures.append(
                            Failure({"n": a, "k": b, "lambda": Fraction(lam)},
                                    "accepted", "singular")
                        )
    rest = merge_reports("theorem3-evaluated", parts)
    merged.cases = rest.cases + merged.skipped
    merged.failures.extend(rest.failures)
    merged.failures.sort(key=Failure.sort_key)
    return merged


def sweep_lemma1(n=(1, 30), r=(1, 8)) -> VerificationReport:
    return merge_reports(
        "lemma1",
        (verify_lemma1(a, c) for a in _span(n) for c in _span(r)),
        {"n": list(n), "r": list(r)},
    )


def sweep_gf_match(r=(1, 6), order: int = 64) -> VerificationReport:
    return merge_reports(
        "gf", (verify_gf_match(c, order) for c in _span(r)),
        {"r": list(r), "order": [order, order]},
    )


def sweep_derivative_identity(k=(1, 4), r=(1, 4), order: int = 32) -> VerificationReport:
    return merge_reports(
        "derivative",
        (verify_derivative_identity(b, c, order)
         for b in _span(k) if b <= order for c in _span(r)),
        {"k": list(k), "r": list(r), "order": [order, order]},
    )


def sweep_rearrangement(N: int = 50, r=(2, 3), m=(2, 3),
                        lambdas=(Fraction(1, 2), Fraction(-1, 4))) -> VerificationReport:
    """Values of r or m below 2 are outside the identity and are dropped from the sweep."""
    return merge_reports(
        "rearrangement",
        (verify_rearrangement(N, c, e, lam)
         for c in _span(r) if c >= 2 for e in _span(m) if e >= 2 for lam in lambdas),
        {"N": [N, N], "r": list(r), "m": list(m), "lambda": list(lambdas)},
    )


@dataclass
class VerifyConfig:
    """Parameter ranges (inclusive) for :func:`verify_all`."""

    n: tuple = (1, 8)
    k: tuple = (1, 8)
    r: tuple = (1, 5)
    m: tuple = (2, 3)
    order: int = 24
    terms: int = 30
    lambdas: tuple = DEFAULT_LAMBDAS

    @classmethod
    def uniform(cls, lo: int, hi: int, **overrides) -> "VerifyConfig":
        """Same range on every integer parameter."""
        base = dict(n=(lo, hi), k=(lo, hi), r=(lo, hi), m=(lo, hi), order=hi, terms=hi)
        base.update(overrides)
        return cls(**base)


def verify_all(config: VerifyConfig | None = None) -> list:
    """Run every verifier; returns seven reports in a fixed order."""
    c = config or VerifyConfig()
    return [
        sweep_theorem2(c.n, c.k, c.r),
        sweep_theorem3(c.n, c.k),
        sweep_theorem3_evaluated(c.n, c.k, c.lambdas),
        sweep_lemma1(c.n, c.r),
        sweep_gf_match(c.r, c.order),
        sweep_derivative_identity(c.k, c.r, c.order),
        sweep_rearrangement(c.terms, c.r, c.m, c.lambdas),
    ]
