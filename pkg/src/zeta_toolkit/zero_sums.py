"""Zero-ordinate tables, truncated sums over zeros, and the empirical checks
of the partial-fraction representation and the explicit formula.

Tables are plain text, one positive ordinate per line, ascending; lines
starting with '#' are comments.  Truncation tails use |f_a(x)| <= 1/x^2 and
the zero-count increment bound (1/2pi) log((x+2)/2pi) + 2 per unit interval;
the additive constant 2 is a conservative stand-in for the O(log T) term of
the Riemann-von Mangoldt formula (heuristic-conservative, and marked as such
wherever it is surfaced).
"""

from __future__ import annotations

import io
import math
from dataclasses import dataclass

import numpy as np

from .errors import CoverageError, ZeroTableError
from .explicit_formula import TestFunctionBundle
from .extremal import eval_f
from .special import log_deriv_prime, trigamma

__all__ = [
    "ZeroOrdinates",
    "center_correction",
    "FIRST_100_ORDINATES",
    "parse_zeros",
    "serialize_zeros",
    "rvm_count",
    "sum_f_over_zeros",
    "representation_residual",
    "gw_lhs",
    "DENSITY_SLACK",
]

DENSITY_SLACK = 2.0   # added to (1/2pi) log(T/2pi) as a per-unit zero count


@dataclass(frozen=True)
class ZeroOrdinates:
    """Sorted positive ordinates; every zero with 0 < gamma <= height present."""

    gammas: np.ndarray
    height: float
    count: int


def rvm_count(height: float) -> float:
    """Riemann-von Mangoldt main term (T/2pi) log(T/2pi) - T/2pi + 7/8."""
    x = height / (2 * math.pi)
    return x * math.log(x) - x + 7.0 / 8.0


def parse_zeros(source) -> ZeroOrdinates:
    """Parse a zero table from a path, text, or file-like stream.

    Validates strict ascent and positivity, reports offending lines by
    number, and sanity-checks the count against the Riemann-von Mangoldt
    estimate at the final height (within +-2).
    """
    if isinstance(source, str) and "\n" not in source:
        with open(source, "r") as fh:
            lines = fh.readlines()
    elif isinstance(source, str):
        lines = source.splitlines()
    elif isinstance(source, io.IOBase) or hasattr(source, "readlines"):
        lines = source.readlines()
    else:
        raise TypeError("parse_zeros: expected path, text or stream")
    vals = []
    prev = 0.0
    for i, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            g = float(line)
        except ValueError:
            raise ZeroTableError(f"line {i}: unparsable ordinate {line!r}", i)
        if not math.isfinite(g) or g <= 0:
            raise ZeroTableError(f"line {i}: ordinate must be positive and finite", i)
        if g <= prev:
            raise ZeroTableError(
                f"line {i}: ordinates not strictly increasing ({g} after {prev})", i)
        vals.append(g)
        prev = g
    if not vals:
        raise ZeroTableError("no zeros in input")
    gam = np.asarray(vals)
    height = float(gam[-1])
    if height >= 15.0 and abs(gam[0] - 14.134725) > 0.01:
        raise ZeroTableError(
            f"first ordinate {gam[0]:.6f} is not the first zero (14.134725); "
            "the table must cover every zero up to its height")
    est = rvm_count(height) if height > 2 * math.pi else 0.0
    if abs(len(gam) - est) > 2.0:
        raise ZeroTableError(
            f"count {len(gam)} inconsistent with Riemann-von Mangoldt "
            f"estimate {est:.2f} at height {height:.3f}")
    return ZeroOrdinates(gammas=gam, height=height, count=len(gam))


def serialize_zeros(zeros: ZeroOrdinates) -> str:
    """Round-trip-exact text form (repr precision)."""
    return "\n".join(repr(float(g)) for g in zeros.gammas) + "\n"


def _tail_integral(X: float, t: float) -> float:
    """Certified integral_X^inf ((1/2pi) log((x+2)/2pi) + slack) / (x-t)^2 dx.

    Closed form by parts; requires X > t + 1.  Also used with t <= 0 for the
    (x+t)^2 and x^2 variants via sign flips.
    """
    alpha = 1.0 / (2 * math.pi)
    lg = math.log((X + 2) / (2 * math.pi))
    first = (alpha * lg + DENSITY_SLACK) / (X - t)
    if t > -2:
        # integral of 1/((x+2)(x-t)) from X to inf
        if abs(t + 2) > 1e-9:
            cross = math.log((X + 2) / (X - t)) / (t + 2)
        else:
            cross = 1.0 / (X + 2)
        return first + alpha * cross
    cross = math.log((X + 2) / (X - t)) / (t + 2)
    return first + alpha * cross


def _zero_sum_tail(height: float, t: float, shifts: tuple[float, ...]) -> float:
    """Bound on sum over gamma > height of sum_s 1/(gamma - s)^2, s in shifts.

    Conservative: counts zeros per unit interval with the density envelope,
    then integrates from one unit below the height.
    """
    X = height - 1.0
    return sum(_tail_integral(X, s) for s in shifts)


# the first 100 ordinates (12+ digits), enough for the O(1) center
# correction when no table is supplied
FIRST_100_ORDINATES = np.array([
    14.134725141735, 21.022039638772, 25.010857580146, 30.42487612586, 32.935061587739,
    37.586178158826, 40.918719012147, 43.327073280915, 48.005150881167, 49.773832477672,
    52.970321477714, 56.446247697063, 59.347044002602, 60.83177852461, 65.112544048082,
    67.079810529494, 69.546401711174, 72.067157674482, 75.704690699084, 77.144840068875,
    79.337375020249, 82.910380854086, 84.735492980517, 87.425274613125, 88.809111207634,
    92.491899270558, 94.65134404052, 95.870634228245, 98.831194218194, 101.31785100573,
    103.72553804048, 105.44662305233, 107.16861118428, 111.02953554317, 111.87465917699,
    114.32022091545, 116.22668032086, 118.79078286598, 121.37012500242, 122.94682929355,
    124.25681855435, 127.5166838796, 129.57870419996, 131.08768853093, 133.497737203,
    134.75650975337, 138.11604205453, 139.73620895212, 141.12370740402, 143.11184580762,
    146.00098248677, 147.42276534256, 150.05352042078, 150.92525761224, 153.0246938112,
    156.11290929424, 157.59759181759, 158.84998817142, 161.1889641376, 163.03070968718,
    165.5370691879, 167.18443997817, 169.09451541557, 169.91197647941, 173.41153651959,
    174.75419152337, 176.44143429771, 178.3774077761, 179.91648402026, 182.20707848437,
    184.87446784839, 185.59878367771, 187.2289225835, 189.41615865602, 192.02665636071,
    193.07972660385, 195.26539667953, 196.87648184096, 198.01530967625, 201.2647519437,
    202.49359451414, 204.1896718031, 205.39469720216, 207.90625888781, 209.57650971686,
    211.69086259537, 213.34791935971, 214.54704478349, 216.16953850826, 219.06759634902,
    220.71491883931, 221.43070555469, 224.0070002546, 224.98332466958, 227.42144427968,
    229.33741330553, 231.2501887005, 231.98723525318, 233.69340417891, 236.52422966582,
])


def center_correction(sigma: float, zeros: ZeroOrdinates | None = None) -> tuple[float, float]:
    """The O(1) correction sum over ordinates +-gamma of f_a(gamma), with
    its uncertainty half-width.

    With a table the half-width is the usual certified tail.  Without one, a
    built-in list of the first 100 ordinates is used and the rest is an
    unresolved symmetric interval from the density envelope (the sign of the
    discarded part is not determined, so it is all uncertainty).
    """
    a = sigma - 0.5
    if a <= 0:
        raise CoverageError(f"sigma > 1/2 required, got {sigma:g}")
    if zeros is not None:
        value, tail = sum_f_over_zeros(sigma, 0.0, zeros)
        return value, tail
    g = FIRST_100_ORDINATES
    value = 2.0 * float(np.sum(eval_f(a, g)))
    half = 2.0 * _tail_integral(float(g[-1]) - 1.0, 0.0)
    return value, half


def sum_f_over_zeros(sigma: float, t: float, zeros: ZeroOrdinates,
                     min_clearance: float = 10.0) -> tuple[float, float]:
    """sum over zero ordinates +-gamma of f_a(gamma - t), a = sigma - 1/2.

    Returns (value, tail_bound); the tail bound covers the ordinates above
    the table height via |f_a(x)| <= 1/x^2 and the density envelope.
    """
    a = sigma - 0.5
    if a <= 0:
        raise CoverageError(f"sigma > 1/2 required, got {sigma:g}")
    if t + min_clearance > zeros.height:
        raise CoverageError(
            f"t = {t:g} too close to table height {zeros.height:g} "
            f"(need clearance {min_clearance:g})")
    g = zeros.gammas
    value = float(np.sum(eval_f(a, g - t)) + np.sum(eval_f(a, g + t)))
    tail = _zero_sum_tail(zeros.height, t, (t, -t))
    return value, tail


def representation_residual(sigma: float, t: float, zeros: ZeroOrdinates) -> float:
    """Residual of the exact identity

        Re (zeta'/zeta)'(sigma+it) = sum_gamma f_a(gamma - t)
            - (1/4) Re psi'(sigma/2 + 1 + it/2) + Re 1/(s-1)^2,

    obtained by differentiating the partial-fraction form of zeta'/zeta and
    taking real parts (every zero contributes -Re (s-rho)^{-2} = f_a(gamma-t)
    under the half-line alignment).  |residual| should not exceed the zero
    sum's tail bound plus the zeta evaluation tolerance.
    """
    s = complex(sigma, t)
    lhs = log_deriv_prime(s).real
    zsum, _tail = sum_f_over_zeros(sigma, t, zeros)
    gamma_term = -0.25 * trigamma(sigma / 2 + 1 + 0.5j * t).real
    pole = (1.0 / (s - 1.0) ** 2).real
    return float(lhs - (zsum + gamma_term + pole))


def gw_lhs(h: TestFunctionBundle, t: float, zeros: ZeroOrdinates,
           min_clearance: float = 10.0) -> tuple[float, float]:
    """Truncated sum over zeros of (M_t h), with a certified tail bound.

    Summing over rho = 1/2 +- i gamma and using evenness of h, each positive
    ordinate contributes h(gamma-t) + h(gamma+t) + 2 h(gamma).
    """
    if t + min_clearance > zeros.height:
        raise CoverageError(
            f"t = {t:g} too close to table height {zeros.height:g} "
            f"(need clearance {min_clearance:g})")
    g = zeros.gammas
    value = float(np.sum(h.eval_real(g - t)) + np.sum(h.eval_real(g + t))
                  + 2 * np.sum(h.eval_real(g)))
    k = h.decay_constant
    tail = k * _zero_sum_tail(zeros.height, t, (t, -t, 0.0, 0.0))
    return value, tail
