"""Extremal bandlimited minorant and majorant of f_a(x) = (x^2-a^2)/(x^2+a^2)^2.

With lam = pi*a*Delta, the minorant and its coefficients are

    L(z) = (z^2 - a^2 - (A z^2 + B a^2) sin^2(pi Delta z)) / (z^2 + a^2)^2,
    A = (2 lam coth lam - 1)/sinh^2 lam,   B = (2 lam coth lam + 1)/sinh^2 lam,

and the majorant is

    U(z) = (z^2 - a^2 + (C z^2 + D a^2) G(z)^2) / (z^2 + a^2)^2,
    G(z) = cos(pi Delta z) - E pi Delta z sin(pi Delta z),

where (C, D, E) switch branches at lam0 (the root of 2 lam tanh lam = 1):
for lam >= lam0, C = (2 lam tanh lam - 1)/cosh^2 lam,
D = (2 lam tanh lam + 1)/cosh^2 lam, E = 0; for lam < lam0, C = 0,
D = ((2 lam + tanh lam)/(sinh lam + lam sech lam))^2 / 2 and
E = (1 - 2 lam tanh lam)/(2 lam^2 + lam tanh lam).

Both functions are entire (the numerators vanish doubly at z = +-ia), have
Fourier transforms supported in [-Delta, Delta], and satisfy
L <= f_a <= U on the real line.  L interpolates f_a in second order on the
lattice n/Delta, U on the half-lattice (k+1/2)/Delta when E = 0 and on the
scaled zeros of B(z) = cos(pi z) - E pi z sin(pi z) when E > 0, where the
weighted summation formula

    Fhat(0) = (1/Delta) sum_{B(t)=0} (1 - pi E/(pi(pi^2 E^2 t^2+1)+pi E)) F(t/Delta)

holds for even integrable F of exponential type at most 2 pi Delta.

Closed-form transforms are assembled from

    FT[1/(x^2+a^2)](y)       = (pi/a) e^{-2 pi a |y|},
    FT[a^2/(x^2+a^2)^2](y)   = pi^2 (|y| + 1/(2 pi a)) e^{-2 pi a |y|},

via the translation rule for sin^2/cos^2 factors and, on the E > 0 branch,
the derivative rules FT[x g] = (i/2pi) FT[g]' and FT[x^2 g] = -FT[g]''/4pi^2.

Everything here is pure and safe for concurrent use.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np
from scipy.integrate import quad
from scipy.optimize import brentq
from scipy.special import polygamma

from .errors import BracketingError, DomainError, QuadratureError, TailBoundError
from .special import solve_lambda0

__all__ = [
    "ApproxParams",
    "Branch",
    "MinorantCoeffs",
    "MajorantCoeffs",
    "NodeKind",
    "NodeSet",
    "ViolationReport",
    "eval_f",
    "f_deriv",
    "f_hat",
    "poisson_kernel_hats",
    "minorant_coeffs",
    "majorant_coeffs",
    "minorant_eval",
    "majorant_eval",
    "minorant_real",
    "majorant_real",
    "minorant_deriv_real",
    "majorant_deriv_real",
    "minorant_mass",
    "majorant_mass",
    "minorant_hat",
    "majorant_hat",
    "majorant_hat_quadrature",
    "mass_quadrature",
    "nodes",
    "weighted_node_sum",
    "verify_extremal",
]

LAMBDA0 = solve_lambda0()

_SING_EPS = 1e-4       # switch to series when |z^2+a^2| < eps * a^2
_TAYLOR_ORDER = 26


@dataclass(frozen=True)
class ApproxParams:
    """Approximation parameters (a, Delta); lam = pi*a*Delta is derived.

    In the zeta application a = sigma - 1/2 and pi*Delta = log log t.
    """

    a: float
    delta: float
    lam: float = field(init=False)

    def __post_init__(self):
        if not (self.a > 0 and math.isfinite(self.a)):
            raise DomainError("ApproxParams: a must be positive and finite")
        if not (self.delta > 0 and math.isfinite(self.delta)):
            raise DomainError("ApproxParams: delta must be positive and finite")
        object.__setattr__(self, "lam", math.pi * self.a * self.delta)


class Branch(enum.Enum):
    ABOVE_LAMBDA0 = "above_lambda0"
    BELOW_LAMBDA0 = "below_lambda0"


@dataclass(frozen=True)
class MinorantCoeffs:
    A: float
    B: float


@dataclass(frozen=True)
class MajorantCoeffs:
    C: float
    D: float
    E: float
    branch: Branch


class NodeKind(enum.Enum):
    LATTICE = "lattice"
    HALF_LATTICE = "half_lattice"
    B_FUNCTION_ZEROS = "b_function_zeros"


@dataclass(frozen=True)
class NodeSet:
    """Interpolation nodes (already scaled by 1/Delta) and their weights."""

    nodes: np.ndarray
    weights: np.ndarray
    kind: NodeKind
    e_coeff: float = 0.0   # E of the generating majorant (0 for lattices)

    def __post_init__(self):
        if len(self.nodes) != len(self.weights):
            raise DomainError("NodeSet: nodes and weights must align")
        if len(self.nodes) and np.any(np.diff(self.nodes) <= 0):
            raise DomainError("NodeSet: nodes must be strictly increasing")
        if len(self.weights) and not np.all((self.weights > 0) & (self.weights <= 1)):
            raise DomainError("NodeSet: weights must lie in (0, 1]")


@dataclass(frozen=True)
class ViolationReport:
    """Grid check of one-sidedness; max_violation is scale-normalized."""

    max_violation: float
    argmax: float
    max_violation_raw: float


# ----------------------------------------------------------------------
# target and elementary transforms

def eval_f(a: float, x):
    """f_a(x) = (x^2 - a^2)/(x^2 + a^2)^2."""
    if a <= 0:
        raise DomainError("eval_f: a must be positive")
    x = np.asarray(x, dtype=float)
    v = (x * x - a * a) / (x * x + a * a) ** 2
    return float(v) if v.ndim == 0 else v


def f_deriv(a: float, x):
    """f_a'(x) = 2x (3a^2 - x^2)/(x^2 + a^2)^3."""
    x = np.asarray(x, dtype=float)
    v = 2 * x * (3 * a * a - x * x) / (x * x + a * a) ** 3
    return float(v) if v.ndim == 0 else v


def f_hat(a: float, y):
    """FT of f_a: -2 pi^2 |y| e^{-2 pi a |y|}; total mass is zero."""
    if a <= 0:
        raise DomainError("f_hat: a must be positive")
    y = np.asarray(y, dtype=float)
    v = -2 * np.pi ** 2 * np.abs(y) * np.exp(-2 * np.pi * a * np.abs(y))
    return float(v) if v.ndim == 0 else v


def poisson_kernel_hats(a: float, y: float) -> tuple[float, float]:
    """Transforms of 1/(x^2+a^2) and a^2/(x^2+a^2)^2 at y."""
    if a <= 0:
        raise DomainError("poisson_kernel_hats: a must be positive")
    e = math.exp(-2 * math.pi * a * abs(y))
    return (math.pi / a * e,
            math.pi ** 2 * (abs(y) + 1 / (2 * math.pi * a)) * e)


# ----------------------------------------------------------------------
# coefficients

def _inv_sinh_sq(lam: float) -> float:
    # 1/sinh^2, exponential form for large lam to dodge overflow
    if lam > 30:
        e = math.exp(-2 * lam)
        return 4 * e / (1 - e) ** 2
    return 1.0 / math.sinh(lam) ** 2


def _inv_cosh_sq(lam: float) -> float:
    if lam > 30:
        e = math.exp(-2 * lam)
        return 4 * e / (1 + e) ** 2
    return 1.0 / math.cosh(lam) ** 2


def minorant_coeffs(p: ApproxParams) -> MinorantCoeffs:
    """A, B of the minorant; B > A > 0 for every lam > 0.

    Stabilized with a Laurent series for lam < 1e-4 and exponential
    rewrites for lam > 30 (lam spans (0, inf) in applications).
    """
    lam = p.lam
    if lam <= 0:
        raise DomainError("minorant_coeffs: lam must be positive")
    if lam < 1e-4:
        l2 = lam * lam
        a_ = 1 / l2 + 1.0 / 3.0 - l2 / 5.0
        b_ = 3 / l2 - 1.0 / 3.0 - l2 / 15.0
        return MinorantCoeffs(A=a_, B=b_)
    inv_sh2 = _inv_sinh_sq(lam)
    coth = 1.0 / math.tanh(lam) if lam <= 30 else (1 + math.exp(-2 * lam)) / (1 - math.exp(-2 * lam))
    return MinorantCoeffs(A=(2 * lam * coth - 1) * inv_sh2,
                          B=(2 * lam * coth + 1) * inv_sh2)


def majorant_coeffs(p: ApproxParams, lambda0: float = LAMBDA0) -> MajorantCoeffs:
    """(C, D, E) with the branch cut at lam0; both formulas meet there."""
    lam = p.lam
    if lam <= 0:
        raise DomainError("majorant_coeffs: lam must be positive")
    if lam >= lambda0:
        inv_ch2 = _inv_cosh_sq(lam)
        th = math.tanh(lam)
        return MajorantCoeffs(C=(2 * lam * th - 1) * inv_ch2,
                              D=(2 * lam * th + 1) * inv_ch2,
                              E=0.0, branch=Branch.ABOVE_LAMBDA0)
    th = math.tanh(lam)
    d = 0.5 * ((2 * lam + th) / (math.sinh(lam) + lam / math.cosh(lam))) ** 2
    e = (1 - 2 * lam * th) / (2 * lam * lam + lam * th)
    return MajorantCoeffs(C=0.0, D=d, E=e, branch=Branch.BELOW_LAMBDA0)


# ----------------------------------------------------------------------
# pointwise evaluation (entire functions; series across z = +-ia)

def _taylor_eval(p: ApproxParams, kind: str, z: complex) -> complex:
    """Evaluate L or U near z0 = ia via the numerator's Taylor expansion.

    The numerator vanishes doubly at ia; the first two Taylor coefficients
    are dropped analytically, which is what makes this path stable where the
    direct formula loses all significance.
    """
    a, d = p.a, p.delta
    if abs(z - 1j * a) > abs(z + 1j * a):
        z = -z  # both functions are even
    z0 = 1j * a
    w = z - z0
    k = _TAYLOR_ORDER
    om = math.pi * d
    theta = om * z0
    # Taylor coefficients of cos(om z), sin(om z) around z0
    ks = np.arange(k + 1)
    ang_c = np.cos(theta + ks * (np.pi / 2) * (1 + 0j))
    ang_s = np.sin(theta + ks * (np.pi / 2) * (1 + 0j))
    pw = np.empty(k + 1)
    pw[0] = 1.0
    for i in range(1, k + 1):
        pw[i] = pw[i - 1] * om / i
    cosc = ang_c * pw
    sinc = ang_s * pw

    def mul(u, v):
        return np.convolve(u, v)[: k + 1]

    zpoly = np.zeros(k + 1, dtype=complex)
    zpoly[0] = z0
    zpoly[1] = 1.0
    z2 = mul(zpoly, zpoly)
    if kind == "minorant":
        c = minorant_coeffs(p)
        s2 = mul(sinc, sinc)
        poly = c.A * z2.copy()
        poly[0] += c.B * a * a
        num = -mul(poly, s2)
        num += z2
        num[0] -= a * a
    else:
        c = majorant_coeffs(p)
        g = cosc - c.E * om * mul(zpoly, sinc)
        g2 = mul(g, g)
        poly = c.C * z2.copy()
        poly[0] += c.D * a * a
        num = mul(poly, g2)
        num += z2
        num[0] -= a * a
    # leading coefficients vanish analytically; discard the roundoff residue
    num[0] = 0.0
    num[1] = 0.0
    val = 0.0 + 0.0j
    for i in range(k, 1, -1):
        val = val * w + num[i]
    return val / (z + z0) ** 2


def _eval_entire(p: ApproxParams, kind: str, z) -> complex:
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError("evaluation at non-finite point")
    a, d = p.a, p.delta
    den = z * z + a * a
    if abs(den) < _SING_EPS * a * a:
        return _taylor_eval(p, kind, z)
    if kind == "minorant":
        c = minorant_coeffs(p)
        s = np.sin(np.pi * d * z)
        num = z * z - a * a - (c.A * z * z + c.B * a * a) * s * s
    else:
        c = majorant_coeffs(p)
        g = np.cos(np.pi * d * z) - c.E * np.pi * d * z * np.sin(np.pi * d * z)
        num = z * z - a * a + (c.C * z * z + c.D * a * a) * g * g
    return complex(num / (den * den))


def minorant_eval(p: ApproxParams, z) -> complex:
    """L(z) anywhere in the plane (entire; series across z = +-ia)."""
    return _eval_entire(p, "minorant", z)


def majorant_eval(p: ApproxParams, z) -> complex:
    """U(z) anywhere in the plane (entire; series across z = +-ia)."""
    return _eval_entire(p, "majorant", z)


def minorant_real(p: ApproxParams, x):
    """L on the real axis, vectorized (no singularity there)."""
    c = minorant_coeffs(p)
    a = p.a
    x = np.asarray(x, dtype=float)
    s2 = np.sin(np.pi * p.delta * x) ** 2
    v = (x * x - a * a - (c.A * x * x + c.B * a * a) * s2) / (x * x + a * a) ** 2
    return float(v) if v.ndim == 0 else v


def majorant_real(p: ApproxParams, x):
    """U on the real axis, vectorized."""
    c = majorant_coeffs(p)
    a = p.a
    x = np.asarray(x, dtype=float)
    g = np.cos(np.pi * p.delta * x) - c.E * np.pi * p.delta * x * np.sin(np.pi * p.delta * x)
    v = (x * x - a * a + (c.C * x * x + c.D * a * a) * g * g) / (x * x + a * a) ** 2
    return float(v) if v.ndim == 0 else v


def minorant_deriv_real(p: ApproxParams, x):
    """dL/dx on the real axis (closed form)."""
    c = minorant_coeffs(p)
    a, d = p.a, p.delta
    x = np.asarray(x, dtype=float)
    den = x * x + a * a
    s2 = np.sin(np.pi * d * x) ** 2
    num = x * x - a * a - (c.A * x * x + c.B * a * a) * s2
    dnum = 2 * x - 2 * c.A * x * s2 - (c.A * x * x + c.B * a * a) * np.pi * d * np.sin(2 * np.pi * d * x)
    v = dnum / den ** 2 - 4 * x * num / den ** 3
    return float(v) if v.ndim == 0 else v


def majorant_deriv_real(p: ApproxParams, x):
    """dU/dx on the real axis (closed form)."""
    c = majorant_coeffs(p)
    a, d = p.a, p.delta
    x = np.asarray(x, dtype=float)
    den = x * x + a * a
    pdx = np.pi * d * x
    g = np.cos(pdx) - c.E * pdx * np.sin(pdx)
    gp = -np.pi * d * ((1 + c.E) * np.sin(pdx) + c.E * pdx * np.cos(pdx))
    num = x * x - a * a + (c.C * x * x + c.D * a * a) * g * g
    dnum = 2 * x + 2 * c.C * x * g * g + (c.C * x * x + c.D * a * a) * 2 * g * gp
    v = dnum / den ** 2 - 4 * x * num / den ** 3
    return float(v) if v.ndim == 0 else v


# ----------------------------------------------------------------------
# masses and transforms

def minorant_mass(p: ApproxParams) -> float:
    """Integral of L over R: -pi^2 Delta / sinh^2(lam)."""
    if p.lam <= 0:
        raise DomainError("minorant_mass: lam must be positive")
    return -math.pi ** 2 * p.delta * _inv_sinh_sq(p.lam)


def majorant_mass(p: ApproxParams) -> float:
    """Integral of U over R, piecewise in lam and continuous at lam0."""
    lam = p.lam
    if lam <= 0:
        raise DomainError("majorant_mass: lam must be positive")
    if lam >= LAMBDA0:
        return math.pi ** 2 * p.delta * _inv_cosh_sq(lam)
    ratio = (2 * lam + math.tanh(lam)) / (math.sinh(lam) + lam / math.cosh(lam))
    return (math.pi ** 2 * p.delta * _inv_sinh_sq(lam)
            * ((2 * lam + math.sinh(2 * lam)) / (8 * lam) * ratio ** 2 - 1.0))


def _g_hat(a: float, A: float, B: float, u):
    """FT of (A x^2 + B a^2)/(x^2+a^2)^2 (combination of the two kernels)."""
    u = np.abs(np.asarray(u, dtype=float))
    return np.pi ** 2 * np.exp(-2 * np.pi * a * u) * ((A + B) / (2 * np.pi * a) + (B - A) * u)


def minorant_hat(p: ApproxParams, y):
    """FT of L; identically zero for |y| >= Delta, negative inside.

    Lhat(y) = fhat(y) - (2 Id - T_Delta - T_-Delta)/4 applied to the
    transform of (A x^2 + B a^2)/(x^2+a^2)^2.  Outside the support the
    pieces cancel exactly, so 0 is returned directly.
    """
    c = minorant_coeffs(p)
    a, d = p.a, p.delta
    y = np.asarray(y, dtype=float)
    inside = np.abs(y) < d
    yy = np.where(inside, np.abs(y), 0.0)   # even by construction
    val = (f_hat(a, yy)
           - (0.5 * _g_hat(a, c.A, c.B, yy)
              - 0.25 * _g_hat(a, c.A, c.B, yy - d)
              - 0.25 * _g_hat(a, c.A, c.B, yy + d)))
    val = np.where(inside, val, 0.0)
    return float(val) if val.ndim == 0 else val


def majorant_hat(p: ApproxParams, y):
    """FT of U, supported in [-Delta, Delta].

    For E = 0 this is the cos^2 analogue of minorant_hat.  For E > 0 the
    transform is still closed-form: expanding G^2 and applying the shift and
    derivative rules to h = 1/(x^2+a^2)^2 gives, with w = 2 pi Delta,

      Uhat - fhat = D a^2 [ h^(y)/2 + (h^(y-D)+h^(y+D))/4
                    - (E D/4)(h^'(y-D) - h^'(y+D))
                    - (E^2 D^2/8) h^''(y) + (E^2 D^2/16)(h^''(y-D)+h^''(y+D)) ].
    """
    c = majorant_coeffs(p)
    a, d = p.a, p.delta
    y = np.asarray(y, dtype=float)
    inside = np.abs(y) < d
    yy = np.where(inside, np.abs(y), 0.0)   # even by construction
    if c.E == 0.0:
        val = (f_hat(a, yy)
               + 0.5 * _g_hat(a, c.C, c.D, yy)
               + 0.25 * _g_hat(a, c.C, c.D, yy - d)
               + 0.25 * _g_hat(a, c.C, c.D, yy + d))
    else:
        def h0(u):
            u = np.abs(u)
            return (np.pi ** 2 / a ** 2) * (u + 1 / (2 * np.pi * a)) * np.exp(-2 * np.pi * a * u)

        def h1(u):
            return -(2 * np.pi ** 3 / a) * u * np.exp(-2 * np.pi * a * np.abs(u))

        def h2(u):
            u = np.abs(u)
            return -(2 * np.pi ** 3 / a) * (1 - 2 * np.pi * a * u) * np.exp(-2 * np.pi * a * u)

        e, dd = c.E, d
        t = c.D * a * a * (0.5 * h0(yy) + 0.25 * h0(yy - dd) + 0.25 * h0(yy + dd)
                           - (e * dd / 4) * (h1(yy - dd) - h1(yy + dd))
                           - (e * e * dd * dd / 8) * h2(yy)
                           + (e * e * dd * dd / 16) * (h2(yy - dd) + h2(yy + dd)))
        val = f_hat(a, yy) + t
    val = np.where(inside, val, 0.0)
    return float(val) if val.ndim == 0 else val


def majorant_hat_quadrature(p: ApproxParams, y: float, tol: float = 1e-8) -> float:
    """FT of U at y by adaptive quadrature with a certified oscillatory tail.

    Independent of :func:`majorant_hat`; used to cross-check it.  Splits
    [0, X] into period-aligned panels and bounds the tail by integration by
    parts against the surviving frequencies, raising QuadratureError when the
    certificate cannot reach tol.
    """
    a, d = p.a, p.delta
    y = abs(float(y))
    if y >= d:
        return 0.0
    c = majorant_coeffs(p)
    # envelope |U(x)| <= K2/x^2 for large x, measured with a safety factor
    xs = np.linspace(30 / d, 60 / d, 2001)
    k2 = 2.0 * float(np.max(np.abs(majorant_real(p, xs)) * xs * xs))
    freqs = [f for f in (y, abs(y - d), y + d) if f > 1e-9]
    if not freqs:
        raise QuadratureError("majorant_hat_quadrature: no oscillation to exploit")
    fmin = min(freqs)
    x_cut = max(50 / d, 20 / a)
    tail = lambda X: 3 * k2 / (X * X * 2 * np.pi * fmin) + 2 * a * a * k2 / X ** 3
    while tail(x_cut) > 0.25 * tol and x_cut < 1e7:
        x_cut *= 2
    if tail(x_cut) > 0.25 * tol:
        raise QuadratureError("majorant_hat_quadrature: tail certificate exceeds tol")
    total = 0.0
    err = 0.0
    edges = np.arange(0.0, x_cut + 1 / d, 0.5 / d)
    for lo, hi in zip(edges[:-1], edges[1:]):
        v, e = quad(lambda x: majorant_real(p, x) * math.cos(2 * math.pi * x * y),
                    lo, hi, epsabs=tol / (8 * len(edges)), limit=80)
        total += v
        err += e
    if err > tol:
        raise QuadratureError("majorant_hat_quadrature: accumulated error exceeds tol")
    return 2 * total


_GL16 = np.polynomial.legendre.leggauss(16)
_GL8 = np.polynomial.legendre.leggauss(8)


def _panel_integrate(func, edges) -> tuple[float, float]:
    """Composite Gauss-Legendre over the panels defined by edges.

    func must accept ndarrays.  Returns (value, error_estimate); the
    estimate is the difference between the 16- and 8-point rules.
    """
    lo = edges[:-1]
    half = 0.5 * np.diff(edges)
    mid = lo + half

    def rule(nodes_weights):
        xg, wg = nodes_weights
        pts = (mid[:, None] + half[:, None] * xg[None, :]).ravel()
        vals = func(pts).reshape(len(mid), len(xg))
        return float(np.sum(half * (vals @ wg)))

    v16 = rule(_GL16)
    v8 = rule(_GL8)
    return v16, abs(v16 - v8)


def _tail_int_inv_sq(a: float, X: float) -> float:
    """integral_X^inf dx/(x^2+a^2)^2, closed form."""
    return (0.5 / a ** 3) * (np.pi / 2 - math.atan(X / a)) - X / (2 * a * a * (X * X + a * a))


def _tail_int_inv(a: float, X: float) -> float:
    """integral_X^inf dx/(x^2+a^2), closed form."""
    return (np.pi / 2 - math.atan(X / a)) / a


def mass_quadrature(p: ApproxParams, kind: str, tol: float = 1e-9) -> tuple[float, float]:
    """Integral over R of L or U by panel quadrature plus certified tails.

    Returns (value, certificate).  The tail beyond X splits into the exact
    integral of f_a, the exact DC part of the trigonometric factor, and an
    integration-by-parts bound on the oscillatory remainder, so the
    certificate reaches ~1e-9 without integrating to astronomical X.
    """
    a, d = p.a, p.delta
    omega = 2 * np.pi * d
    if kind == "minorant":
        c = minorant_coeffs(p)
        func = lambda x: minorant_real(p, x)
        # L = f - (A/(x^2+a^2) + (B-A)a^2/(x^2+a^2)^2) sin^2(pi Delta x)
        dc_tail = lambda X: -0.5 * (c.A * _tail_int_inv(a, X)
                                    + (c.B - c.A) * a * a * _tail_int_inv_sq(a, X))
        osc_bound = lambda X: (c.A / (X * X + a * a)
                               + (c.B - c.A) * a * a / (X * X + a * a) ** 2) / omega
    elif kind == "majorant":
        c = majorant_coeffs(p)
        func = lambda x: majorant_real(p, x)
        if c.E == 0.0:
            dc_tail = lambda X: 0.5 * (c.C * _tail_int_inv(a, X)
                                       + (c.D - c.C) * a * a * _tail_int_inv_sq(a, X))
            osc_bound = lambda X: (c.C / (X * X + a * a)
                                   + (c.D - c.C) * a * a / (X * X + a * a) ** 2) / omega
        else:
            # U - f = D a^2 G^2/(x^2+a^2)^2 with
            # G^2 = 1/2 + (E w/2... expanded) ; DC part integrates exactly
            q = c.D * a * a
            e = c.E

            def dc_tail(X):
                i2 = _tail_int_inv_sq(a, X)
                i2x = _tail_int_inv(a, X) - a * a * i2   # integral x^2/(x^2+a^2)^2
                return q * (0.5 * i2 + (e * e * omega * omega / 8) * i2x)

            def osc_bound(X):
                den2 = (X * X + a * a) ** 2
                return (2 * q / omega) * (0.5 / den2
                                          + (e * omega / 2) * X / den2
                                          + (e * e * omega * omega / 8) / (X * X + a * a))
    else:
        raise ValueError("mass_quadrature: kind must be 'minorant' or 'majorant'")
    target = max(tol, 1e-13)
    x_cut = max(40 / d, 20 / a, 200.0)
    while osc_bound(x_cut) > 0.2 * target and x_cut < 3e7:
        x_cut *= 1.6
    n_panels = int(x_cut * d / 0.5) + 1
    edges = np.linspace(0.0, n_panels * 0.5 / d, n_panels + 1)
    total, err = _panel_integrate(func, edges)
    x_end = float(edges[-1])
    f_tail = x_end / (x_end * x_end + a * a)   # exact integral of f_a over [X, inf)
    value = 2 * (total + f_tail + dc_tail(x_end))
    return value, 2 * (err + osc_bound(x_end))


# ----------------------------------------------------------------------
# nodes and the weighted summation formula

def _b_function(e: float, t):
    t = np.asarray(t, dtype=float)
    return np.cos(np.pi * t) - e * np.pi * t * np.sin(np.pi * t)


def _littmann_weight(e: float, t):
    t = np.asarray(t, dtype=float)
    return 1.0 - np.pi * e / (np.pi * (np.pi ** 2 * e ** 2 * t * t + 1.0) + np.pi * e)


def nodes(p: ApproxParams, coeffs, window: float) -> NodeSet:
    """Interpolation nodes in [-window, window], scaled by 1/Delta.

    MinorantCoeffs -> lattice n/Delta; MajorantCoeffs with E = 0 ->
    half-lattice (k+1/2)/Delta; MajorantCoeffs with E > 0 -> zeros of
    B(z) = cos(pi z) - E pi z sin(pi z), one per unit interval (verified by
    a sign-change count, not assumed), with the positive weights
    1 - pi E/(pi(pi^2 E^2 t^2 + 1) + pi E).
    """
    if window <= 0:
        raise DomainError("nodes: window must be positive")
    d = p.delta
    if isinstance(coeffs, MinorantCoeffs):
        nmax = int(math.floor(window * d))
        pos = np.arange(0, nmax + 1) / d
        xs = np.concatenate([-pos[:0:-1], pos])
        return NodeSet(nodes=xs, weights=np.ones_like(xs), kind=NodeKind.LATTICE)
    if not isinstance(coeffs, MajorantCoeffs):
        raise TypeError("nodes: coeffs must be MinorantCoeffs or MajorantCoeffs")
    if coeffs.E == 0.0:
        kmax = int(math.floor(window * d - 0.5))
        pos = (np.arange(0, max(kmax, 0) + 1) + 0.5) / d
        pos = pos[pos <= window]
        xs = np.concatenate([-pos[::-1], pos])
        return NodeSet(nodes=xs, weights=np.ones_like(xs), kind=NodeKind.HALF_LATTICE)
    e = coeffs.E
    kmax = int(math.floor(window * d))
    roots = []
    for k in range(kmax + 1):
        lo, hi = k + 1e-12, k + 1 - 1e-12
        grid = np.linspace(lo, hi, 33)
        vals = _b_function(e, grid)
        sgn = np.sign(vals)
        changes = np.nonzero(sgn[:-1] * sgn[1:] < 0)[0]
        if len(changes) != 1:
            raise BracketingError(
                f"nodes: interval ({k}, {k + 1}) holds {len(changes)} zeros of B, expected 1")
        i = changes[0]
        r = brentq(lambda t: float(_b_function(e, t)), grid[i], grid[i + 1],
                   xtol=1e-14, rtol=8.9e-16)
        roots.append(r)
    pos = np.array(roots) / d
    pos = pos[pos <= window]
    w = _littmann_weight(e, pos * d)
    xs = np.concatenate([-pos[::-1], pos])
    ws = np.concatenate([w[::-1], w])
    return NodeSet(nodes=xs, weights=ws, kind=NodeKind.B_FUNCTION_ZEROS, e_coeff=e)


def weighted_node_sum(F, ns: NodeSet, delta: float, *, decay=None, tol: float = 1e-8) -> float:
    """(1/Delta) sum of weight * F over the node set, equal to Fhat(0).

    F must be even, integrable and of exponential type at most 2 pi Delta.
    decay = (q2, q4) optionally describes F at the nodes far out,
    F(x) = q2/x^2 + q4/x^4 + O(x^-6); the discarded tail is then summed in
    closed form (trigamma/pentagamma of the first discarded index, with the
    node asymptote t_k = k + s + beta/k, beta = 1/(pi^2 E)).  Without a decay
    model the tail is only bounded, and TailBoundError is raised if that
    bound exceeds tol.
    """
    xs, ws = ns.nodes, ns.weights
    head = float(np.sum(ws * np.asarray([F(x) for x in xs], dtype=float))) / delta
    pos = xs[xs > 0]
    if len(pos) == 0:
        return head
    if ns.kind == NodeKind.LATTICE:
        s_off, beta = 0.0, 0.0
        k0 = len(pos) + 1   # discarded indices start at n_max + 1
    elif ns.kind == NodeKind.HALF_LATTICE:
        s_off, beta = 0.5, 0.0
        k0 = len(pos)       # nodes were (k+1/2), k = 0..len-1
    else:
        s_off, beta = 0.0, 1.0 / (np.pi ** 2 * ns.e_coeff)
        k0 = len(pos)       # k-th root lives in (k, k+1), k = 0..len-1
    if decay is not None:
        q2, q4 = decay[0], decay[1]
        psi1 = float(polygamma(1, k0 + s_off))
        psi3 = float(polygamma(3, k0 + s_off))
        tail = 2 * (q2 * delta * psi1 + (q4 * delta ** 3 - 3 * beta * q2 * delta) * psi3 / 6)
        psi5 = float(polygamma(5, k0 + s_off))
        remainder = 10 * (abs(q2) * delta * (1 + beta) ** 2
                          + abs(q4) * delta ** 3 * (1 + beta)) * abs(psi5) / 120
        if remainder > tol:
            raise TailBoundError(
                f"weighted_node_sum: tail remainder {remainder:.2e} > tol {tol:.2e}")
        return head + tail
    outer = pos[-min(10, len(pos)):]
    k2 = 2.0 * max(abs(F(x)) * x * x for x in outer) if len(outer) else 0.0
    bound = 2 * k2 * delta * float(polygamma(1, k0 + s_off))
    if bound > tol:
        raise TailBoundError(
            f"weighted_node_sum: tail bound {bound:.2e} > tol {tol:.2e}; "
            "enlarge the window or pass a decay model")
    return head


def verify_extremal(p: ApproxParams, kind: str, window: float | None = None,
                    num_points: int = 100001) -> ViolationReport:
    """Grid check of L <= f_a (kind='minorant') or f_a <= U ('majorant').

    max_violation is normalized by the local evaluation scale
    (1 + sum of coefficient magnitudes) * (1 + (E pi Delta x)^2) / (x^2+a^2),
    which tracks the roundoff of the defining formulas; values <= 1e-12 mean
    the inequality holds to working precision.
    """
    a = p.a
    w = window if window is not None else 20.0 / a
    x = np.linspace(-w, w, num_points)
    if kind == "minorant":
        c = minorant_coeffs(p)
        diff = minorant_real(p, x) - eval_f(a, x)
        scale = (1 + c.A + c.B) / (x * x + a * a)
    elif kind == "majorant":
        c = majorant_coeffs(p)
        diff = eval_f(a, x) - majorant_real(p, x)
        scale = (1 + c.C + c.D) * (1 + (c.E * np.pi * p.delta * x) ** 2) / (x * x + a * a)
    else:
        raise ValueError("verify_extremal: kind must be 'minorant' or 'majorant'")
    rel = diff / scale
    i = int(np.argmax(rel))
    return ViolationReport(max_violation=float(rel[i]), argmax=float(x[i]),
                           max_violation_raw=float(diff[i]))
