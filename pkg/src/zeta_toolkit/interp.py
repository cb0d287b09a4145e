"""Quantitative interpolation bound and the closed-form theorem constants.

Given a twice differentiable phi with -beta0 <= phi <= alpha0 and
-beta2 <= phi'' <= alpha2 on (t0, inf), all four envelopes positive and
differentiable with bounded derivatives, the averaging argument yields for
t > t0 + sqrt(3 L)

    |phi'(t)| <= sqrt(2 alpha2 beta2 (alpha0+beta0)/(alpha2+beta2))
                 + M0 + N0 + (M2+N2) L,

with L = sup 2(alpha2+beta2)(alpha0+beta0)/(3 alpha2 beta2) and M_i, N_i the
envelope-derivative sups.  Applied to phi = -log|zeta(sigma+it)| with the
second-derivative envelopes of the explicit-formula bounds and the known
log|zeta| bound, the optimization constant collapses to

    C_sigma = sqrt(2(-s^2+5s-2)(-s^2+3s-1)(-s^2+s+1) / (s(2-s))),

and combining with the real-part bound coefficient (-s^2+3s-1)/(s(1-s))
gives B_sigma, with B_sigma^2 = (-s^2+3s-1)^2 + C_sigma^2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, RangeError
from .special import solve_lambda0

__all__ = [
    "EnvelopeSet",
    "BoundReport",
    "make_envelope_set",
    "zeta_envelopes",
    "derivative_bound",
    "optimal_parameters",
    "c_sigma",
    "b_sigma",
    "realpart_coeff",
    "theorem1_bound",
    "theorem2_bound",
    "ell",
    "log_ell",
    "LAMBDA0",
]

LAMBDA0 = solve_lambda0()


@dataclass(frozen=True)
class EnvelopeSet:
    """Envelope data for the derivative bound.

    alpha0, beta0 bound phi from above/below; alpha2, beta2 bound phi''.
    M0, N0, M2, N2 are sups of the envelope derivatives (0 for constant or
    main-term-only envelopes).  L is a sup estimate; when produced by
    make_envelope_set it is a grid sup plus a 10% margin and therefore not
    a rigorous supremum (documented, and revalidated at every evaluation).
    """

    alpha0: object
    beta0: object
    alpha2: object
    beta2: object
    t0: float
    M0: float = 0.0
    N0: float = 0.0
    M2: float = 0.0
    N2: float = 0.0
    L: float = 0.0


def _l_ratio(env: EnvelopeSet, t: float) -> float:
    a0, b0 = env.alpha0(t), env.beta0(t)
    a2, b2 = env.alpha2(t), env.beta2(t)
    if min(a0, b0, a2, b2) <= 0:
        raise DomainError(f"envelopes must be positive at t = {t:g}")
    return 2 * (a2 + b2) * (a0 + b0) / (3 * a2 * b2)


def make_envelope_set(alpha0, beta0, alpha2, beta2, t0: float, *,
                      M0=0.0, N0=0.0, M2=0.0, N2=0.0,
                      grid_points: int = 2000, t_max: float | None = None) -> EnvelopeSet:
    """Build an EnvelopeSet, estimating L by a log-spaced grid sup + 10%."""
    env = EnvelopeSet(alpha0, beta0, alpha2, beta2, t0, M0, N0, M2, N2, 0.0)
    hi = t_max if t_max is not None else max(1e6, 100 * t0)
    ts = np.exp(np.linspace(math.log(t0 * (1 + 1e-9) + 1e-12), math.log(hi), grid_points))
    sup = max(_l_ratio(env, float(t)) for t in ts)
    return EnvelopeSet(alpha0, beta0, alpha2, beta2, t0, M0, N0, M2, N2, 1.1 * sup)


def derivative_bound(env: EnvelopeSet, t: float) -> float:
    """The full bound, valid for t > t0 + sqrt(3 L)."""
    if t <= env.t0 + math.sqrt(3 * env.L):
        raise RangeError(
            f"t > t0 + sqrt(3 L) violated: t = {t:g} <= {env.t0 + math.sqrt(3 * env.L):g}")
    if env.L < _l_ratio(env, t):
        raise DomainError(
            f"estimated L = {env.L:g} below the envelope ratio at t = {t:g}; "
            "the grid sup missed the supremum")
    a0, b0 = env.alpha0(t), env.beta0(t)
    a2, b2 = env.alpha2(t), env.beta2(t)
    main = math.sqrt(2 * a2 * b2 * (a0 + b0) / (a2 + b2))
    return main + env.M0 + env.N0 + (env.M2 + env.N2) * env.L


def optimal_parameters(env: EnvelopeSet, t: float) -> tuple[float, float]:
    """Optimal averaging length nu and asymmetry A.

    nu = sqrt(2(alpha2+beta2)(alpha0+beta0)/(alpha2 beta2)) and
    A = beta2/(alpha2+beta2); substituting back into
    (alpha0+beta0)/nu + nu (A^2 alpha2 + (1-A)^2 beta2)/2 reproduces the
    square-root main term of derivative_bound.
    """
    if t <= env.t0:
        raise RangeError(f"t > t0 violated: t = {t:g} <= {env.t0:g}")
    a0, b0 = env.alpha0(t), env.beta0(t)
    a2, b2 = env.alpha2(t), env.beta2(t)
    if min(a0, b0, a2, b2) <= 0:
        raise DomainError(f"envelopes must be positive at t = {t:g}")
    nu = math.sqrt(2 * (a2 + b2) * (a0 + b0) / (a2 * b2))
    return nu, b2 / (a2 + b2)


# ----------------------------------------------------------------------
# closed-form constants

def _check_sigma(sigma: float) -> None:
    if not (0.5 < sigma < 1.0):
        raise RangeError(f"1/2 < sigma < 1 violated: sigma = {sigma:g}")


def _quadratics(sigma: float) -> tuple[float, float, float]:
    q50 = -sigma * sigma + 5 * sigma - 2
    q31 = -sigma * sigma + 3 * sigma - 1
    q11 = -sigma * sigma + sigma + 1
    # all three are positive on (1/2, 1)
    if min(q50, q31, q11) <= 0:
        raise RangeError(f"quadratic positivity violated at sigma = {sigma:g}")
    return q50, q31, q11


def c_sigma(sigma: float) -> float:
    """C_sigma = sqrt(2(-s^2+5s-2)(-s^2+3s-1)(-s^2+s+1)/(s(2-s)))."""
    _check_sigma(sigma)
    q50, q31, q11 = _quadratics(sigma)
    return math.sqrt(2 * q50 * q31 * q11 / (sigma * (2 - sigma)))


def b_sigma(sigma: float) -> float:
    """B_sigma = sqrt((3s^4-17s^3+19s^2+4s-4)(-s^2+3s-1)/(s(2-s))).

    The quartic factors as (-s^2+3s-1) s(2-s) + 2(-s^2+5s-2)(-s^2+s+1), so
    B_sigma^2 = (-s^2+3s-1)^2 + C_sigma^2 identically.
    """
    _check_sigma(sigma)
    s = sigma
    quartic = 3 * s ** 4 - 17 * s ** 3 + 19 * s ** 2 + 4 * s - 4
    q31 = -s * s + 3 * s - 1
    return math.sqrt(quartic * q31 / (s * (2 - s)))


def realpart_coeff(sigma: float) -> float:
    """Coefficient (-s^2+3s-1)/(s(1-s)) of the real-part bound."""
    _check_sigma(sigma)
    return (-sigma * sigma + 3 * sigma - 1) / (sigma * (1 - sigma))


def ell(n: int, sigma: float, t: float) -> float:
    """ell_{n,sigma}(t) = (log t)^{2-2 sigma} (log log t)^{-n}."""
    return math.exp(log_ell(n, sigma, math.log(t)))


def log_ell(n: int, sigma: float, log_t: float) -> float:
    """log of ell_{n,sigma} from log t, safe for t far beyond float range."""
    if log_t <= 1:
        raise DomainError(f"log log t undefined or nonpositive: log t = {log_t:g}")
    return (2 - 2 * sigma) * math.log(log_t) - n * math.log(math.log(log_t))


# ----------------------------------------------------------------------
# theorem evaluators

@dataclass(frozen=True)
class BoundReport:
    """A main value with its unscaled error-term shape.

    main_value = main_coefficient * ell-factor as documented per theorem;
    error_shape_value carries no invented constant (the true error term is
    O(error_shape_value) with an unspecified constant).  log_main_value
    allows heights far beyond float range.
    """

    sigma: float
    t: float
    main_value: float
    main_coefficient: float
    error_shape_value: float
    range_ok: bool
    log_main_value: float = math.nan


def _theorem12_report(sigma: float, t, log_t, c: float, coefficient: float,
                      strict: bool) -> BoundReport:
    if log_t is None:
        if t is None:
            raise DomainError("provide t or log_t")
        log_t = math.log(t)
        t_val = float(t)
    else:
        t_val = math.exp(log_t) if log_t < 700 else math.inf
    if log_t < math.log(3):
        raise RangeError(f"t >= 3 violated: log t = {log_t:g}")
    if log_t <= 1:
        raise RangeError(f"log log t > 0 violated: log t = {log_t:g}")
    llt = math.log(log_t)
    lo = 0.5 + (LAMBDA0 + c) / llt
    hi = 1 - c / math.sqrt(llt)
    range_ok = lo <= sigma <= hi
    if strict and sigma < lo:
        raise RangeError(
            f"sigma >= 1/2 + (lambda0+c)/log log t violated: {sigma:g} < {lo:g}")
    if strict and sigma > hi:
        raise RangeError(
            f"sigma <= 1 - c/sqrt(log log t) violated: {sigma:g} > {hi:g}")
    coef = coefficient / (sigma * (1 - sigma))
    log_main = math.log(coef) + log_ell(0, sigma, log_t)
    err_shape = math.exp(log_ell(1, sigma, log_t)) / ((sigma - 0.5) * (1 - sigma) ** 2)
    return BoundReport(sigma=sigma, t=t_val,
                       main_value=math.exp(log_main) if log_main < 700 else math.inf,
                       main_coefficient=coef,
                       error_shape_value=err_shape,
                       range_ok=range_ok,
                       log_main_value=log_main)


def theorem1_bound(sigma: float, t: float | None = None, *,
                   log_t: float | None = None, c: float = 0.01,
                   strict: bool = True) -> BoundReport:
    """|zeta'/zeta(sigma+it)| <= B_sigma/(s(1-s)) (log t)^{2-2s} + O(err shape).

    With strict=True (default) a (sigma, t) outside the admissible window
    raises RangeError naming the failed inequality; with strict=False the
    closed form is still evaluated and range_ok is set False.
    """
    return _theorem12_report(sigma, t, log_t, c, b_sigma(sigma), strict)


def theorem2_bound(sigma: float, t: float | None = None, *,
                   log_t: float | None = None, c: float = 0.01,
                   strict: bool = True) -> BoundReport:
    """|Im zeta'/zeta(sigma+it)| <= C_sigma/(s(1-s)) (log t)^{2-2s} + O(err shape)."""
    return _theorem12_report(sigma, t, log_t, c, c_sigma(sigma), strict)


# ----------------------------------------------------------------------
# the zeta envelopes (main terms only)

def second_deriv_coeffs(sigma: float) -> tuple[float, float]:
    """Main-term coefficients of the two-sided (zeta'/zeta)' bounds:
    a2 = (-2s^2+2s+2)/(s(1-s)) above, b2 = (-2s^2+6s-2)/(s(1-s)) below."""
    _check_sigma(sigma)
    den = sigma * (1 - sigma)
    return ((-2 * sigma ** 2 + 2 * sigma + 2) / den,
            (-2 * sigma ** 2 + 6 * sigma - 2) / den)


def log_modulus_coeff(sigma: float) -> float:
    """Main-term coefficient of the two-sided log|zeta| bound,
    (-s^2+5s-2)/(2s(1-s))."""
    _check_sigma(sigma)
    return (-sigma ** 2 + 5 * sigma - 2) / (2 * sigma * (1 - sigma))


def zeta_envelopes(sigma: float, *, t0: float = 16.0, t_max: float = 1e300) -> EnvelopeSet:
    """Main-term envelope set for phi(t) = -log|zeta(sigma+it)| at fixed sigma.

    alpha2/beta2 carry ell_{-1,sigma}, alpha0 = beta0 carry ell_{1,sigma};
    the O-shape corrections and the derivative sups are dropped (main-term
    composition), so derivative_bound divided by ell_{0,sigma}(t) equals
    c_sigma/(sigma(1-sigma)) identically.  t0 defaults to 16 (just past
    e^e, where the ell factors are defined); admissibility of the underlying
    zeta bounds is a separate constraint on (sigma, t), not enforced here.
    """
    _check_sigma(sigma)
    a2c, b2c = second_deriv_coeffs(sigma)
    a0c = log_modulus_coeff(sigma)
    alpha2 = lambda t: a2c * ell(-1, sigma, t)
    beta2 = lambda t: b2c * ell(-1, sigma, t)
    alpha0 = lambda t: a0c * ell(1, sigma, t)
    return make_envelope_set(alpha0, alpha0, alpha2, beta2, t0, t_max=t_max)
