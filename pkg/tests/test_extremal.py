"""Extremal minorant/majorant: coefficients, inequalities, interpolation,
masses, transforms, nodes and the weighted summation formula."""

import math

import numpy as np
import pytest

from zeta_toolkit import extremal
from zeta_toolkit.errors import DomainError, TailBoundError
from zeta_toolkit.extremal import (
    LAMBDA0,
    ApproxParams,
    Branch,
    NodeKind,
    eval_f,
    f_deriv,
    f_hat,
    majorant_coeffs,
    majorant_eval,
    majorant_hat,
    majorant_hat_quadrature,
    majorant_mass,
    majorant_real,
    mass_quadrature,
    minorant_coeffs,
    minorant_eval,
    minorant_hat,
    minorant_mass,
    minorant_real,
    nodes,
    poisson_kernel_hats,
    verify_extremal,
    weighted_node_sum,
)


def params_for_lambda(lam, a=0.25):
    return ApproxParams(a=a, delta=lam / (math.pi * a))


LAMBDA_GRID = [0.1, 0.3, LAMBDA0 - 1e-6, LAMBDA0, LAMBDA0 + 1e-6, 1.0, 3.0, 10.0]


class TestTarget:
    def test_at_zero(self):
        assert eval_f(1.0, 0.0) == -1.0

    def test_root_at_a(self):
        assert eval_f(1.0, 1.0) == 0.0

    def test_local_max_at_sqrt3a(self):
        x0 = math.sqrt(3)
        assert eval_f(1.0, x0) == pytest.approx(0.125, rel=1e-15)
        assert abs(f_deriv(1.0, x0)) < 1e-15
        eps = 1e-4
        assert eval_f(1.0, x0 - eps) < 0.125
        assert eval_f(1.0, x0 + eps) < 0.125

    def test_fhat_zero_mass(self):
        assert f_hat(2.0, 0.0) == 0.0

    def test_fhat_spot(self):
        assert f_hat(1.0, 1.0) == pytest.approx(-2 * math.pi ** 2 * math.exp(-2 * math.pi),
                                                rel=1e-15)

    def test_fhat_quadrature_oracle(self):
        # mpmath quadosc of f_a(x) cos(2 pi x y) at (a, y) = (0.5, 0.3)
        assert f_hat(0.5, 0.3) == pytest.approx(-2.3074807658239247, abs=1e-9)

    def test_poisson_kernels_at_zero(self):
        k1, k2 = poisson_kernel_hats(0.7, 0.0)
        assert k1 == pytest.approx(math.pi / 0.7, rel=1e-15)
        assert k2 == pytest.approx(math.pi / 1.4, rel=1e-15)

    def test_poisson_kernels_quadrature_oracle(self):
        k1, k2 = poisson_kernel_hats(0.7, 0.4)
        assert k1 == pytest.approx(0.77268249685910244, abs=1e-9)
        assert k2 == pytest.approx(1.0660282720227441, abs=1e-9)


class TestCoefficients:
    def test_minorant_at_lambda_one(self):
        p = ApproxParams(a=1.0, delta=1 / math.pi)
        c = minorant_coeffs(p)
        assert c.A == pytest.approx(1.1773753584857285171, rel=1e-14)
        assert c.B == pytest.approx(2.6254986804183494499, rel=1e-14)

    def test_b_minus_a(self):
        for lam in (0.05, 0.7, 2.0, 12.0):
            p = params_for_lambda(lam)
            c = minorant_coeffs(p)
            assert c.B - c.A == pytest.approx(2 / math.sinh(lam) ** 2, rel=1e-12)
            assert c.B > c.A > 0

    def test_large_lambda_asymptotics(self):
        # A, B ~ 8 lam e^{-2 lam} (1 + O(1/lam))
        for lam in (30.0, 60.0):
            c = minorant_coeffs(params_for_lambda(lam))
            lead = 8 * lam * math.exp(-2 * lam)
            assert c.A / lead == pytest.approx(1.0, abs=2 / lam)
            assert c.B / lead == pytest.approx(1.0, abs=2 / lam)

    def test_small_lambda_series_consistency(self):
        # the series branch takes over below 1e-4; both paths agree nearby
        for lam in (9e-5, 2e-4):
            c = minorant_coeffs(params_for_lambda(lam))
            direct_a = (2 * lam / math.tanh(lam) - 1) / math.sinh(lam) ** 2
            direct_b = (2 * lam / math.tanh(lam) + 1) / math.sinh(lam) ** 2
            assert c.A == pytest.approx(direct_a, rel=1e-10)
            assert c.B == pytest.approx(direct_b, rel=1e-10)

    def test_majorant_above(self):
        p = ApproxParams(a=1.0, delta=1 / math.pi)
        c = majorant_coeffs(p)
        assert c.branch is Branch.ABOVE_LAMBDA0
        assert c.C == pytest.approx(0.21972566683519843079, rel=1e-13)
        assert c.D == pytest.approx(1.0596743500632505696, rel=1e-13)
        assert c.E == 0.0

    def test_majorant_below(self):
        c = majorant_coeffs(params_for_lambda(0.5))
        assert c.branch is Branch.BELOW_LAMBDA0
        assert c.C == 0.0
        assert c.D == pytest.approx(1.1490147710860507885, rel=1e-13)
        assert c.E == pytest.approx(0.73575888234288464319, rel=1e-13)
        assert c.E > 0

    def test_branch_agreement_at_lambda0(self):
        p = params_for_lambda(LAMBDA0)
        above = majorant_coeffs(p, lambda0=LAMBDA0 * (1 - 1e-12))
        below = majorant_coeffs(p, lambda0=LAMBDA0 * (1 + 1e-12))
        assert above.branch is Branch.ABOVE_LAMBDA0
        assert below.branch is Branch.BELOW_LAMBDA0
        # D(lam0) = 2 - 1/(2 lam0^2) ~ 1.1604039369822865 from both formulas
        assert above.D == pytest.approx(1.160403936982286, abs=1e-12)
        assert below.D == pytest.approx(above.D, abs=1e-12)
        assert abs(above.C) < 1e-12 and abs(below.E) < 1e-12

    def test_d_dominates_c(self):
        for lam in LAMBDA_GRID:
            c = majorant_coeffs(params_for_lambda(lam))
            assert c.D >= c.C >= 0


class TestEvaluation:
    def test_lattice_interpolation(self):
        p = ApproxParams(a=0.25, delta=1.0)
        for n in (-7, -1, 0, 1, 2, 30):
            x = n / p.delta
            assert minorant_real(p, x) == pytest.approx(eval_f(p.a, x), abs=1e-14)

    def test_half_lattice_interpolation(self):
        p = params_for_lambda(1.0)   # E = 0 branch
        for k in (-3, 0, 1, 11):
            x = (k + 0.5) / p.delta
            assert majorant_real(p, x) == pytest.approx(eval_f(p.a, x), abs=1e-13)

    def test_minorant_finite_at_i_half(self):
        p = ApproxParams(a=0.25, delta=1.0)
        v = minorant_eval(p, 0.5j)
        assert v.real == pytest.approx(-36.160964786691657, rel=1e-12)
        assert abs(v.imag) < 1e-12

    def test_minorant_series_near_ia(self):
        # mpmath 30-dps oracle values right at the removable singularity
        p = ApproxParams(a=0.25, delta=1.0)
        w = 1e-6 * (1 + 1j) / math.sqrt(2)
        v = minorant_eval(p, 0.25j + w)
        assert v.real == pytest.approx(-19.907755716764702, rel=1e-11)
        assert v.imag == pytest.approx(2.3972249826740422e-5, rel=1e-8)
        v2 = minorant_eval(p, -0.25j + 2e-7j)
        assert v2.real == pytest.approx(-19.907724964257575, rel=1e-11)
        assert abs(v2.imag) < 1e-12

    def test_majorant_series_near_ia(self):
        p = params_for_lambda(0.5)
        w = 1e-6 * (1 + 1j) / math.sqrt(2)
        v = majorant_eval(p, 0.25j + w)
        assert v.real == pytest.approx(2.515408431144182, rel=1e-11)
        assert v.imag == pytest.approx(-7.6188167147132991e-7, rel=1e-7)

    def test_majorant_series_near_ia_e_zero(self):
        # mpmath oracle on the E = 0 branch (lam = 1)
        p = ApproxParams(a=0.25, delta=1 / (math.pi * 0.25))
        w = 1e-6 * (1 + 1j) / math.sqrt(2)
        v = majorant_eval(p, 0.25j + w)
        assert v.real == pytest.approx(0.17213221568367316, rel=1e-11)
        assert v.imag == pytest.approx(5.2307236655141007e-6, rel=1e-7)

    def test_even_and_real_on_reals(self):
        p = params_for_lambda(0.4)
        for x in (0.3, 1.7, 9.2):
            assert minorant_eval(p, x).imag == 0.0
            assert minorant_eval(p, -x) == minorant_eval(p, x)
            assert majorant_eval(p, -x) == majorant_eval(p, x)

    @pytest.mark.parametrize("lam", LAMBDA_GRID)
    def test_one_sidedness(self, lam):
        p = params_for_lambda(lam)
        rep_min = verify_extremal(p, "minorant")
        rep_maj = verify_extremal(p, "majorant")
        assert rep_min.max_violation <= 1e-12
        assert rep_maj.max_violation <= 1e-12

    def test_degenerate_grid(self):
        p = params_for_lambda(1.0)
        rep = verify_extremal(p, "minorant", window=1e-9, num_points=1)
        assert rep.max_violation_raw <= 0.0
        assert rep.argmax == pytest.approx(0.0, abs=1e-9)


class TestInterpolationSecondOrder:
    @pytest.mark.parametrize("lam", [0.3, 0.5, LAMBDA0, 1.0, 3.0])
    def test_value_and_derivative_at_nodes(self, lam):
        p = params_for_lambda(lam)
        mc = minorant_coeffs(p)
        uc = majorant_coeffs(p)
        ns_min = nodes(p, mc, window=40.0)
        ns_maj = nodes(p, uc, window=40.0)
        for x in ns_min.nodes:
            assert abs(minorant_real(p, x) - eval_f(p.a, x)) < 1e-12
            assert abs(extremal.minorant_deriv_real(p, x) - f_deriv(p.a, x)) < 1e-9
        for x in ns_maj.nodes:
            assert abs(majorant_real(p, x) - eval_f(p.a, x)) < 1e-12
            assert abs(extremal.majorant_deriv_real(p, x) - f_deriv(p.a, x)) < 1e-9


class TestMasses:
    def test_minorant_closed_form(self):
        p = ApproxParams(a=1.0, delta=1 / math.pi)
        assert minorant_mass(p) == pytest.approx(-math.pi / math.sinh(1) ** 2, rel=1e-14)
        assert minorant_mass(p) == pytest.approx(-2.2747067948377845137, rel=1e-13)

    def test_majorant_closed_form(self):
        p = ApproxParams(a=1.0, delta=1 / math.pi)
        assert majorant_mass(p) == pytest.approx(math.pi / math.cosh(1) ** 2, rel=1e-14)
        assert majorant_mass(p) == pytest.approx(1.3193883063108344884, rel=1e-13)

    def test_mass_ordering(self):
        for lam in LAMBDA_GRID:
            p = params_for_lambda(lam)
            assert minorant_mass(p) < 0 < majorant_mass(p)

    def test_branch_continuity_at_lambda0(self):
        a = 0.25
        d0 = LAMBDA0 / (math.pi * a)
        lo = majorant_mass(ApproxParams(a=a, delta=d0 * (1 - 1e-13)))
        hi = majorant_mass(ApproxParams(a=a, delta=d0 * (1 + 1e-13)))
        assert lo == pytest.approx(hi, abs=1e-12)

    def test_lattice_sum_converges_to_minorant_mass(self):
        # Poisson summation: (1/Delta) sum f_a(n/Delta) = mass; the tail of
        # the lattice sum is corrected by the same trigamma closed form.
        p = ApproxParams(a=1.0, delta=1 / math.pi)
        ns = nodes(p, minorant_coeffs(p), window=4000.0)
        val = weighted_node_sum(lambda x: eval_f(p.a, x), ns, p.delta,
                                decay=(1.0, -3 * p.a ** 2), tol=1e-9)
        assert val == pytest.approx(minorant_mass(p), abs=1e-9)

    @pytest.mark.parametrize("a,lam", [(0.25, 0.3), (0.25, 1.0), (0.4, 0.6),
                                       (0.4, 2.0), (1.0, 0.5), (1.0, 5.0)])
    def test_quadrature_cross_check(self, a, lam):
        p = params_for_lambda(lam, a=a)
        vmin, cmin = mass_quadrature(p, "minorant", tol=1e-9)
        vmaj, cmaj = mass_quadrature(p, "majorant", tol=1e-9)
        assert vmin == pytest.approx(minorant_mass(p),
                                     abs=max(cmin, 1e-8 * abs(minorant_mass(p))))
        assert vmaj == pytest.approx(majorant_mass(p),
                                     abs=max(cmaj, 1e-8 * abs(majorant_mass(p))))


class TestTransforms:
    def test_minorant_hat_support_and_mass(self):
        p = params_for_lambda(1.0)
        assert minorant_hat(p, p.delta) == 0.0
        assert minorant_hat(p, 1.2 * p.delta) == 0.0
        assert minorant_hat(p, 0.0) == pytest.approx(minorant_mass(p), rel=1e-13)

    def test_minorant_hat_oracle(self):
        # mpmath quadosc of L(x) cos(2 pi x y) at a=0.25, lam=1, y=0.37
        p = ApproxParams(a=0.25, delta=1 / (math.pi * 0.25))
        assert minorant_hat(p, 0.37) == pytest.approx(-9.121043060351, abs=1e-9)

    @pytest.mark.parametrize("lam", [0.3, 1.0, 3.0])
    def test_minorant_hat_negative_inside(self, lam):
        p = params_for_lambda(lam)
        y = np.linspace(-p.delta, p.delta, 10001)[1:-1]
        assert np.all(minorant_hat(p, y) < 0)

    def test_minorant_hat_evenness(self):
        p = params_for_lambda(0.7)
        y = np.linspace(0, p.delta, 100)
        assert np.allclose(minorant_hat(p, y), minorant_hat(p, -y), rtol=0, atol=0)

    def test_convexity_surrogate(self):
        # e^{2 pi a y} Lhat(y) has nonnegative second differences on (0, Delta)
        for lam in (0.3, 1.0, 3.0):
            p = params_for_lambda(lam)
            y = np.linspace(0, p.delta, 1002)[1:-1]
            g = np.exp(2 * np.pi * p.a * y) * minorant_hat(p, y)
            d2 = g[2:] - 2 * g[1:-1] + g[:-2]
            assert np.min(d2) > -1e-12 * np.max(np.abs(g))

    def test_majorant_hat_mass_both_branches(self):
        for lam in (0.5, 1.0):
            p = params_for_lambda(lam)
            assert majorant_hat(p, 0.0) == pytest.approx(majorant_mass(p), rel=1e-12)
            assert majorant_hat(p, p.delta) == 0.0

    def test_majorant_hat_oracle_above(self):
        # quadosc oracle at a=0.25, lam=1, y=0.5
        p = ApproxParams(a=0.25, delta=1 / (math.pi * 0.25))
        assert majorant_hat(p, 0.5) == pytest.approx(-0.299448223903, abs=1e-9)

    def test_majorant_hat_oracle_below(self):
        # quadosc oracle at a=0.25, lam=0.5, y=0.2
        p = params_for_lambda(0.5)
        assert majorant_hat(p, 0.2) == pytest.approx(2.53521066161, abs=1e-9)

    def test_majorant_hat_dominates_fhat_above_lambda0(self):
        for lam in (LAMBDA0, 1.0, 3.0):
            p = params_for_lambda(lam)
            y = np.linspace(-p.delta, p.delta, 10001)[1:-1]
            assert np.all(majorant_hat(p, y) > f_hat(p.a, y))

    @pytest.mark.parametrize("lam", [0.3, 0.5, 1.0, 3.0])
    def test_fourier_inversion_at_zero(self, lam):
        # integral of the transform over its support recovers the value at 0
        # (independent consistency check of both closed forms)
        p = params_for_lambda(lam)
        y = np.linspace(-p.delta, p.delta, 40001)
        for hat, val in ((minorant_hat, minorant_real), (majorant_hat, majorant_real)):
            integral = np.trapezoid(hat(p, y), y)
            assert integral == pytest.approx(val(p, 0.0), rel=2e-8)

    def test_majorant_hat_quadrature_cross_check(self):
        p = params_for_lambda(0.5)
        for y in (0.15, 0.45):
            q = majorant_hat_quadrature(p, y, tol=1e-8)
            assert q == pytest.approx(majorant_hat(p, y), abs=2e-8)


class TestNodes:
    def test_half_lattice(self):
        p = params_for_lambda(1.0)
        ns = nodes(p, majorant_coeffs(p), window=10.0)
        assert ns.kind is NodeKind.HALF_LATTICE
        assert np.all(ns.weights == 1.0)
        k = np.round(np.abs(ns.nodes) * p.delta - 0.5)
        assert np.allclose(np.abs(ns.nodes), (k + 0.5) / p.delta, rtol=0, atol=1e-12)

    def test_lattice_includes_zero(self):
        p = params_for_lambda(1.0)
        ns = nodes(p, minorant_coeffs(p), window=5.0)
        assert ns.kind is NodeKind.LATTICE
        assert 0.0 in ns.nodes
        assert np.all(ns.weights == 1.0)

    def test_b_zeros_satisfy_equation(self):
        p = params_for_lambda(0.3)
        c = majorant_coeffs(p)
        ns = nodes(p, c, window=30.0)
        assert ns.kind is NodeKind.B_FUNCTION_ZEROS
        t = ns.nodes * p.delta
        bvals = np.cos(np.pi * t) - c.E * np.pi * t * np.sin(np.pi * t)
        assert np.max(np.abs(bvals)) < 1e-12
        assert np.all((ns.weights > 0) & (ns.weights <= 1))

    def test_small_e_limit(self):
        # as E -> 0+, the first positive zero of B tends to 1/2
        p = params_for_lambda(0.5)
        c = majorant_coeffs(p)
        tiny = type(c)(C=0.0, D=c.D, E=1e-6, branch=c.branch)
        ns = nodes(p, tiny, window=3.0)
        first = np.min(ns.nodes[ns.nodes > 0]) * p.delta
        assert first == pytest.approx(0.5, abs=1e-5)


class TestWeightedNodeSum:
    def test_zero_function(self):
        p = params_for_lambda(0.5)
        ns = nodes(p, majorant_coeffs(p), window=50.0)
        assert weighted_node_sum(lambda x: 0.0, ns, p.delta, decay=(0.0, 0.0)) == 0.0

    @pytest.mark.parametrize("lam", [0.3, 0.5])
    def test_majorant_recovers_mass(self, lam):
        p = params_for_lambda(lam)
        ns = nodes(p, majorant_coeffs(p), window=400.0 / p.delta)
        val = weighted_node_sum(lambda x: majorant_real(p, x), ns, p.delta,
                                decay=(1.0, -3 * p.a ** 2), tol=1e-8)
        assert val == pytest.approx(majorant_mass(p), abs=1e-8)

    def test_fejer_kernel_poisson(self):
        # classical Poisson summation over the half-lattice: Fhat(0) = 1/Delta
        p = params_for_lambda(1.0)
        d = p.delta

        def fejer(x):
            u = math.pi * d * x
            return (math.sin(u) / u) ** 2 if u != 0 else 1.0

        ns = nodes(p, majorant_coeffs(p), window=800.0 / d)
        val = weighted_node_sum(fejer, ns, d, decay=(1 / (math.pi * d) ** 2, 0.0),
                                tol=1e-9)
        assert val == pytest.approx(1.0 / d, abs=1e-9)

    def test_tail_error_without_decay_model(self):
        p = params_for_lambda(0.5)
        ns = nodes(p, majorant_coeffs(p), window=20.0)
        with pytest.raises(TailBoundError):
            weighted_node_sum(lambda x: majorant_real(p, x), ns, p.delta, tol=1e-10)


class TestConcurrency:
    def test_parallel_evaluations_agree(self):
        # all operations are pure; concurrent calls must match serial ones
        from concurrent.futures import ThreadPoolExecutor
        lams = [0.1, 0.3, 0.5, 0.9, 1.5, 2.5, 4.0, 8.0]
        serial = [verify_extremal(params_for_lambda(lam), "majorant",
                                  num_points=2001).max_violation for lam in lams]
        with ThreadPoolExecutor(max_workers=4) as ex:
            parallel = list(ex.map(
                lambda lam: verify_extremal(params_for_lambda(lam), "majorant",
                                            num_points=2001).max_violation, lams))
        assert serial == parallel


class TestParamValidation:
    def test_bad_params(self):
        with pytest.raises(DomainError):
            ApproxParams(a=0.0, delta=1.0)
        with pytest.raises(DomainError):
            ApproxParams(a=1.0, delta=-2.0)

    def test_lambda_derivation(self):
        p = ApproxParams(a=0.3, delta=0.7)
        assert p.lam == math.pi * 0.3 * 0.7
