"""Command-line interface.

Usage:
    hyperharmonic table harmonic --n 1..4
    hyperharmonic table degen-hyper --n 0..5 --r 1..3 --lambda symbolic
    hyperharmonic verify all
    hyperharmonic verify theorem3 --n 1..20 --k 1..20
    hyperharmonic series --r 2 --order 8 --lambda 1/2
    hyperharmonic zeta --m 2 --lambda 1 --terms 100 --digits 4

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import csv
import io
import json
import sys
from fractions import Fraction

import click

from . import identities
from .arith import LambdaPoly, format_rational, parse_rational
from .numbers import (
    QPolyKey,
    degen_harmonic,
    degen_hyperharmonic,
    harmonic,
    hyperharmonic,
    q_poly,
    stirling1,
)
from .series import degen_hyper_gf
from .zeta import ZetaQuery

__all__ = ["main"]

SYMBOLIC = "symbolic"
DEFAULT_ORDER = 64


class RangeType(click.ParamType):
    """``A..B`` (inclusive) or a single integer ``A``."""

    name = "range"

    def convert(self, value, param, ctx):
        if isinstance(value, tuple):
            return value
        text = str(value).strip()
        try:
            if ".." in text:
                lo, hi = text.split("..", 1)
                lo, hi = int(lo), int(hi)
            else:
                lo = hi = int(text)
        except ValueError:
            self.fail(f"{value!r} is not a range like 1..10", param, ctx)
        if lo > hi:
            self.fail(f"empty range {value!r}: min exceeds max", param, ctx)
        return lo, hi


class LambdaType(click.ParamType):
    """``symbolic`` or a rational ``p/q``; symbolic becomes None."""

    name = "lambda"

    def convert(self, value, param, ctx):
        if value is None or isinstance(value, Fraction):
            return value
        if value == SYMBOLIC:
            return None
        try:
            return parse_rational(value)
        except (ValueError, ZeroDivisionError) as exc:
            self.fail(f"{value!r}: {exc}", param, ctx)


class RationalType(LambdaType):
    name = "rational"

    def convert(self, value, param, ctx):
        if value == SYMBOLIC:
            self.fail("a rational value is required here", param, ctx)
        return super().convert(value, param, ctx)


RANGE = RangeType()
LAMBDA_OPT = LambdaType()
RATIONAL_OPT = RationalType()


def _cell(value):
    if isinstance(value, LambdaPoly):
        return value.to_json()
    if isinstance(value, (int, Fraction)):
        return format_rational(value)
    return value


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _dump_csv(header: list, rows: list) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, quoting=csv.QUOTE_NONNUMERIC, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(
            [json.dumps(v) if isinstance(v, list) else v for v in row]
        )
    return buf.getvalue()


def _span(rng):
    return range(rng[0], rng[1] + 1)


def _require(ctx, rng, flag, family, minimum=0):
    if rng is None:
        raise click.UsageError(f"table {family} needs {flag}", ctx)
    if rng[0] < minimum:
        raise click.UsageError(f"{flag} must start at >= {minimum} for {family}", ctx)
    return rng


def _at(value, lam):
    return value if lam is None else value.evaluate(lam)


format_option = click.option(
    "--format", "fmt", type=click.Choice(["json", "csv"]), default="json", show_default=True
)
out_option = click.option("--out", "out_path", type=click.Path(dir_okay=False), default=None,
                          help="Write output to a file instead of stdout.")


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
def main():
    """Exact degenerate harmonic and hyperharmonic numbers."""


@main.command()
@click.argument("family", type=click.Choice(
    ["harmonic", "degen-harmonic", "hyper", "degen-hyper", "stirling1", "qpoly"]))
@click.option("--n", "n_rng", type=RANGE)
@click.option("--r", "r_rng", type=RANGE)
@click.option("--k", "k_rng", type=RANGE)
@click.option("--lambda", "lam", type=LAMBDA_OPT, default=SYMBOLIC, show_default=True)
@format_option
@out_option
@click.pass_context
def table(ctx, family, n_rng, r_rng, k_rng, lam, fmt, out_path):
    """Tabulate one number family over index ranges."""
    n_rng = _require(ctx, n_rng, "--n", family,
                     minimum=1 if family in ("qpoly",) else 0)
    if family == "harmonic":
        header = ["n", "value"]
        rows = [[n, harmonic(n)] for n in _span(n_rng)]
    elif family == "degen-harmonic":
        header = ["n", "value"]
        rows = [[n, _at(degen_harmonic(n), lam)] for n in _span(n_rng)]
    elif family == "hyper":
        r_rng = _require(ctx, r_rng, "--r", family)
        if n_rng[0] == 0 and r_rng[0] == 0:
            raise click.UsageError("H_0^(0) is undefined; start --n or --r at 1", ctx)
        header = ["n", "r", "value"]
        rows = [[n, r, hyperharmonic(n, r)] for n in _span(n_rng) for r in _span(r_rng)]
    elif family == "degen-hyper":
        r_rng = _require(ctx, r_rng, "--r", family, minimum=1)
        header = ["n", "r", "value"]
        rows = [[n, r, _at(degen_hyperharmonic(n, r), lam)]
                for n in _span(n_rng) for r in _span(r_rng)]
    elif family == "stirling1":
        k_rng = _require(ctx, k_rng, "--k", family)
        header = ["n", "k", "value"]
        rows = [[n, k, stirling1(n, k)] for n in _span(n_rng) for k in _span(k_rng)]
    else:
        r_rng = _require(ctx, r_rng, "--r", family, minimum=1)
        header = ["n", "r", "value"]
        rows = [[n, r, _at(q_poly(QPolyKey(n, r)), lam)]
                for n in _span(n_rng) for r in _span(r_rng)]

    rows = [row[:-1] + [_cell(row[-1])] for row in rows]
    if fmt == "csv":
        text = _dump_csv(header, rows)
    else:
        text = _dump_json({"family": family,
                           "lambda": SYMBOLIC if lam is None else format_rational(lam),
                           "rows": [dict(zip(header, row)) for row in rows]})
    _emit(text, out_path)


VERIFY_NAMES = ["all", "theorem2", "theorem3", "lemma1", "gf", "derivative", "rearrangement"]


@main.command()
@click.argument("which", metavar="IDENTITY")
@click.option("--n", "n_rng", type=RANGE)
@click.option("--k", "k_rng", type=RANGE)
@click.option("--r", "r_rng", type=RANGE)
@click.option("--m", "m_rng", type=RANGE)
@click.option("--order", type=click.IntRange(min=0))
@click.option("--terms", type=click.IntRange(min=0))
@click.option("--lambda", "lam", type=RATIONAL_OPT, default=None,
              help="Single rational lambda for evaluated checks (default: a fixed set).")
@format_option
@out_option
@click.pass_context
def verify(ctx, which, n_rng, k_rng, r_rng, m_rng, order, terms, lam, fmt, out_path):
    """Verify identities exactly. IDENTITY is one of: all, theorem2, theorem3,
    lemma1, gf, derivative, rearrangement."""
    if which not in VERIFY_NAMES:
        raise click.UsageError(
            f"unknown identity {which!r}; choose from {', '.join(VERIFY_NAMES)}", ctx)
    base = identities.VerifyConfig()
    for flag, rng in (("--n", n_rng), ("--k", k_rng), ("--r", r_rng)):
        if rng is not None and rng[0] < 1:
            raise click.UsageError(f"{flag} must start at >= 1", ctx)
    if m_rng is not None and m_rng[0] < 2:
        raise click.UsageError("--m must start at >= 2", ctx)
    config = identities.VerifyConfig(
        n=n_rng or base.n,
        k=k_rng or base.k,
        r=r_rng or base.r,
        m=m_rng or base.m,
        order=base.order if order is None else order,
        terms=base.terms if terms is None else terms,
        lambdas=base.lambdas if lam is None else (lam,),
    )

    c = config
    runners = {
        "theorem2": lambda: [identities.sweep_theorem2(c.n, c.k, c.r)],
        "theorem3": lambda: [identities.sweep_theorem3(c.n, c.k),
                             identities.sweep_theorem3_evaluated(c.n, c.k, c.lambdas)],
        "lemma1": lambda: [identities.sweep_lemma1(c.n, c.r)],
        "gf": lambda: [identities.sweep_gf_match(c.r, c.order)],
        "derivative": lambda: [identities.sweep_derivative_identity(c.k, c.r, c.order)],
        "rearrangement": lambda: [identities.sweep_rearrangement(c.terms, c.r, c.m, c.lambdas)],
        "all": lambda: identities.verify_all(c),
    }
    reports = runners[which]()
    ok = all(rep.passed for rep in reports)

    if fmt == "csv":
        rows = [[rep.identity, rep.cases, rep.skipped, "pass" if rep.passed else "fail",
                 len(rep.failures)] for rep in reports]
        text = _dump_csv(["identity", "cases", "skipped", "status", "failures"], rows)
    else:
        text = _dump_json({"status": "pass" if ok else "fail",
                           "reports": [rep.to_dict() for rep in reports]})
    _emit(text, out_path)
    if not ok:
        for rep in reports:
            for failure in rep.failures:
                click.echo(f"FAIL {rep.identity} {json.dumps(failure.to_dict()['params'])}",
                           err=True)
        ctx.exit(1)


@main.command()
@click.option("--r", type=click.IntRange(min=1), required=True)
@click.option("--order", type=click.IntRange(min=0), default=DEFAULT_ORDER, show_default=True)
@click.option("--lambda", "lam", type=LAMBDA_OPT, default=SYMBOLIC, show_default=True)
@format_option
@out_option
def series(r, order, lam, fmt, out_path):
    """Coefficients of -log_lambda(1-t)/(1-t)^r."""
    s = degen_hyper_gf(r, order, lam)
    if fmt == "csv":
        text = _dump_csv(["n", "coeff"], [[n, _cell(c)] for n, c in enumerate(s.coeffs)])
    else:
        text = _dump_json(s.to_json())
    _emit(text, out_path)


@main.command()
@click.option("--m", type=int, required=True, help="Integer exponent, at least 2.")
@click.option("--delta", type=RATIONAL_OPT, default="1", show_default=True)
@click.option("--lambda", "lam", type=RATIONAL_OPT, default="0", show_default=True)
@click.option("--terms", type=int, default=DEFAULT_ORDER, show_default=True,
              help="Number of summands, n = 0 .. terms-1.")
@click.option("--digits", type=int, default=10, show_default=True)
@format_option
@out_option
@click.pass_context
def zeta(ctx, m, delta, lam, terms, digits, fmt, out_path):
    """Truncated degenerate Hurwitz zeta sum."""
    try:
        query = ZetaQuery(m=m, delta=delta, lam=lam, terms=terms, digits=digits)
    except ValueError as exc:
        raise click.UsageError(str(exc), ctx)
    result = query.evaluate().to_dict()
    if fmt == "csv":
        text = _dump_csv(list(result), [list(result.values())])
    else:
        text = _dump_json(result)
    _emit(text, out_path)


if __name__ == "__main__":
    sys.exit(main())
