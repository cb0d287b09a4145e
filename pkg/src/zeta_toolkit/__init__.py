"""Extremal bandlimited approximations to (x^2-a^2)/(x^2+a^2)^2 and
explicit-formula machinery bounding the log-derivative of zeta.

Modules
-------
special          digamma/trigamma, von Mangoldt, Euler-Maclaurin zeta, lambda0
extremal         minorant/majorant, coefficients, masses, transforms, nodes
explicit_formula Guinand-Weil right-hand side, M_t operator, bound assembly
zero_sums        zero-table ingestion and truncated sums over ordinates
interp           interpolation bound, B_sigma / C_sigma, theorem evaluators
cli              command-line front end (see `zeta-toolkit --help`)
"""

from .extremal import (
    ApproxParams,
    Branch,
    MajorantCoeffs,
    MinorantCoeffs,
    NodeKind,
    NodeSet,
    LAMBDA0,
)
from .special import solve_lambda0, ZetaEval
from .interp import BoundReport, b_sigma, c_sigma

__all__ = [
    "ApproxParams",
    "Branch",
    "MajorantCoeffs",
    "MinorantCoeffs",
    "NodeKind",
    "NodeSet",
    "LAMBDA0",
    "solve_lambda0",
    "ZetaEval",
    "BoundReport",
    "b_sigma",
    "c_sigma",
]

__version__ = "0.1.0"
