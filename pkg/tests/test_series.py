import math
from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperharmonic.arith import LAMBDA, LambdaPoly, degen_falling_factorial
from hyperharmonic.numbers import degen_hyperharmonic, hyperharmonic
from hyperharmonic.series import (
    LAMBDA_POLY,
    RATIONAL,
    OrderMismatchError,
    TruncatedSeries,
    degen_exp_series,
    degen_hyper_gf,
    degen_log1p_series,
    degen_log_series,
    geom_pow,
    one_minus_t_pow,
    series_add,
    series_compose,
    series_derive,
    series_mul,
)

from oracles import L, series_coeffs, to_fraction, to_poly

F = Fraction


def rat_series(*coeffs):
    return TruncatedSeries([F(c) for c in coeffs], RATIONAL)


def geometric(order):
    return rat_series(*([1] * (order + 1)))


coeff_lists = st.lists(st.fractions(min_value=-1000, max_value=1000, max_denominator=20),
                       min_size=17, max_size=17)


# -- structure ---------------------------------------------------------------

def test_length_invariant():
    with pytest.raises(ValueError):
        TruncatedSeries([F(1)], RATIONAL, order=3)
    assert len(TruncatedSeries.constant(F(2), 5, RATIONAL)) == 6


def test_order_mismatch_is_an_error():
    with pytest.raises(OrderMismatchError):
        rat_series(1, 2) + rat_series(1, 2, 3)
    with pytest.raises(OrderMismatchError):
        series_mul(rat_series(1, 2), rat_series(1, 2, 3))


def test_mul_examples():
    assert series_mul(rat_series(1, 1, 0), rat_series(1, -1, 0)) == rat_series(1, 0, -1)
    a = rat_series(3, F(1, 2), -2, 7)
    assert a * TruncatedSeries.constant(F(1), 3, RATIONAL) == a
    assert geometric(5) * rat_series(1, -1, 0, 0, 0, 0) == rat_series(1, 0, 0, 0, 0, 0)


def test_add_is_coefficientwise():
    assert series_add(rat_series(1, 2), rat_series(3, -2)) == rat_series(4, 0)


@settings(max_examples=40)
@given(coeff_lists, coeff_lists, coeff_lists)
def test_ring_laws(a, b, c):
    a, b, c = (TruncatedSeries(x, RATIONAL) for x in (a, b, c))
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


def test_mul_coefficient_formula_symbolic():
    a = TruncatedSeries([LAMBDA, LambdaPoly([1]), LAMBDA * 2], LAMBDA_POLY)
    b = TruncatedSeries([LambdaPoly([1]), LAMBDA, LambdaPoly([0, 0, 1])], LAMBDA_POLY)
    prod = a * b
    for n in range(3):
        assert prod[n] == sum((a[i] * b[n - i] for i in range(n + 1)), LambdaPoly())


# -- derivatives -------------------------------------------------------------

def test_derive_examples():
    d = series_derive(rat_series(1, 1, 1), 1)
    assert d == rat_series(1, 2) and d.order == 1
    s = rat_series(5, 4, 3)
    assert series_derive(s, 0) == s
    assert series_derive(geometric(4), 2) == rat_series(2, 6, 12)


def test_derive_too_far():
    with pytest.raises(ValueError):
        series_derive(rat_series(1, 2), 3)


@pytest.mark.parametrize("k", range(5))
def test_derive_repeated_equals_single(k):
    s = degen_hyper_gf(2, 12)
    step = s
    for _ in range(k):
        step = series_derive(step, 1)
    assert step == series_derive(s, k)


@pytest.mark.parametrize("r", range(1, 5))
@pytest.mark.parametrize("k", range(0, 5))
def test_derivative_shift_identity(k, r):
    order = 32 + k
    deriv = series_derive(degen_hyper_gf(r, order), k)
    for n in range(33):
        expected = degen_hyperharmonic(n + k, r) * (math.factorial(n + k) // math.factorial(n))
        assert deriv[n] == expected


# -- constructors ------------------------------------------------------------

def test_geom_pow_examples():
    assert geom_pow(1, 6) == geometric(6)
    assert geom_pow(2, 3)[3] == 4
    assert geom_pow(1, 6) * one_minus_t_pow(1, 6) == TruncatedSeries.constant(F(1), 6, RATIONAL)


@pytest.mark.parametrize("r", [1, 2, 3, 5, 8])
@pytest.mark.parametrize("order", [0, 1, 16, 64])
def test_geom_pow_inverts_power(r, order):
    one = TruncatedSeries.constant(F(1), order, RATIONAL)
    assert geom_pow(r, order) * one_minus_t_pow(r, order) == one


def test_geom_pow_needs_positive_r():
    with pytest.raises(ValueError):
        geom_pow(0, 3)


def test_degen_log_classical_at_zero():
    s = degen_log_series(8, lam=0)
    assert list(-s) == [0] + [F(1, k) for k in range(1, 9)]


def test_degen_log_symbolic_t2():
    s = degen_log_series(4)
    assert (-s)[2] == (1 - LAMBDA) / 2
    assert s.ring is LAMBDA_POLY
    assert s[0] == 0


def test_degen_log_at_one_is_minus_t():
    assert degen_log_series(10, lam=1) == -TruncatedSeries.variable(10, RATIONAL)


@pytest.mark.parametrize("lam", [F(1, 2), F(-1, 3), F(2), F(7, 5), F(-3)])
def test_degen_log_matches_literal_coefficient_form(lam):
    # (-1)^k lambda^{k-1} (1)_{k,1/lambda} / k!
    s = degen_log_series(20, lam)
    for k in range(1, 21):
        literal = (-1) ** k * lam ** (k - 1) * degen_falling_factorial(1, k, 1 / lam) / math.factorial(k)
        assert s[k] == literal


def test_degen_log_symbolic_specializes():
    sym = degen_log_series(16)
    for lam in (F(0), F(1, 2), F(-5, 3)):
        assert sym.evaluate_lambda(lam) == degen_log_series(16, lam)


def test_degen_log_against_closed_form_taylor():
    lam = sp.Rational(1, 3)
    expected = series_coeffs(lambda t: ((1 - t) ** lam - 1) / lam, 10)
    assert [to_fraction(c) for c in expected] == list(degen_log_series(10, F(1, 3)))


def test_degen_exp_examples():
    x = F(3, 2)
    assert list(degen_exp_series(x, 0, 6)) == [x ** n / math.factorial(n) for n in range(7)]
    assert degen_exp_series(1, 1, 5) == rat_series(1, 1, 0, 0, 0, 0)
    assert degen_exp_series(2, 1, 2)[2] == 1


def test_degen_exp_against_closed_form_taylor():
    lam = sp.Rational(1, 2)
    expected = series_coeffs(lambda t: (1 + lam * t) ** (sp.Rational(3) / lam), 8)
    assert [to_fraction(c) for c in expected] == list(degen_exp_series(3, F(1, 2), 8))


def test_compose_examples():
    inner = rat_series(0, 2, F(1, 3), -1)
    assert series_compose(TruncatedSeries.variable(3, RATIONAL), inner) == inner
    zero = TruncatedSeries.constant(F(0), 3, RATIONAL)
    assert series_compose(rat_series(7, 1, 2, 3), zero) == rat_series(7, 0, 0, 0)


def test_compose_rejects_nonzero_constant():
    with pytest.raises(ValueError):
        series_compose(rat_series(1, 1), rat_series(1, 1))


def test_compose_geometric_with_double():
    # 1/(1-u) at u = 2t gives sum 2^n t^n
    inner = rat_series(0, 2, 0, 0, 0, 0)
    assert list(series_compose(geometric(5), inner)) == [2 ** n for n in range(6)]


@pytest.mark.parametrize("lam", [F(1, 2), F(-1, 3), F(2)])
def test_degen_log_inverts_degen_exp(lam):
    order = 64
    inner = degen_exp_series(1, lam, order) - TruncatedSeries.constant(F(1), order, RATIONAL)
    assert series_compose(degen_log1p_series(order, lam), inner) == TruncatedSeries.variable(order, RATIONAL)


def test_degen_exp_inverts_degen_log():
    lam, order = F(1, 2), 24
    composed = series_compose(degen_exp_series(1, lam, order), degen_log1p_series(order, lam))
    assert composed == TruncatedSeries.constant(F(1), order, RATIONAL) + TruncatedSeries.variable(order, RATIONAL)


def test_degen_hyper_gf_examples():
    assert degen_hyper_gf(1, 4)[1] == 1
    assert degen_hyper_gf(2, 4)[2] == (5 - LAMBDA) / 2
    for r in range(1, 6):
        assert degen_hyper_gf(r, 3)[0] == 0


@pytest.mark.parametrize("r", [1, 2, 3])
def test_degen_hyper_gf_against_sympy_taylor(r):
    t = sp.Symbol("t")
    expr = -((1 - t) ** L - 1) / L / (1 - t) ** r
    s = sp.series(expr, t, 0, 7).removeO()
    expected = [to_poly(sp.cancel(s.coeff(t, n))) for n in range(7)]
    assert list(degen_hyper_gf(r, 6)) == expected


@pytest.mark.parametrize("r", range(1, 6))
def test_degen_hyper_gf_classical_limit(r):
    s = degen_hyper_gf(r, 40).evaluate_lambda(0)
    assert list(s) == [hyperharmonic(n, r) for n in range(41)]
    assert degen_hyper_gf(r, 40, lam=0) == s


def test_series_json():
    doc = degen_hyper_gf(2, 2).to_json()
    assert doc == {"order": 2, "ring": "lambda-poly", "coeffs": [[], ["1"], ["5/2", "-1/2"]]}
    assert degen_hyper_gf(1, 1, lam=F(1, 2)).to_json() == {"order": 1, "ring": "rational", "coeffs": ["0", "1"]}
