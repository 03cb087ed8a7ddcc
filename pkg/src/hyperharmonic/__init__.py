"""Exact computation and identity checking for degenerate hyperharmonic numbers."""

from .arith import LAMBDA, LambdaPoly, binom_int, binom_poly, divide_by_lambda
from .identities import VerificationReport, VerifyConfig, verify_all
from .numbers import (
    QPolyKey,
    degen_harmonic,
    degen_hyperharmonic,
    degen_hyperharmonic_order0,
    harmonic,
    hyperharmonic,
    q_poly,
    stirling1,
)
from .series import TruncatedSeries, degen_hyper_gf
from .zeta import section3_report, zeta_degen_partial, zeta_partial

__version__ = "0.1.0"

__all__ = [
    "LAMBDA",
    "LambdaPoly",
    "QPolyKey",
    "TruncatedSeries",
    "VerificationReport",
    "VerifyConfig",
    "binom_int",
    "binom_poly",
    "degen_harmonic",
    "degen_hyper_gf",
    "degen_hyperharmonic",
    "degen_hyperharmonic_order0",
    "divide_by_lambda",
    "harmonic",
    "hyperharmonic",
    "q_poly",
    "section3_report",
    "stirling1",
    "verify_all",
    "zeta_degen_partial",
    "zeta_partial",
]
