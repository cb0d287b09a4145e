"""Interpolation bound, optimal averaging parameters, theorem constants."""

import math

import numpy as np
import pytest

from zeta_toolkit import interp
from zeta_toolkit.errors import DomainError, RangeError
from zeta_toolkit.interp import (
    EnvelopeSet,
    b_sigma,
    c_sigma,
    derivative_bound,
    ell,
    log_ell,
    make_envelope_set,
    optimal_parameters,
    realpart_coeff,
    theorem1_bound,
    theorem2_bound,
    zeta_envelopes,
)


def constant_envelopes(a0=1.0, b0=1.0, a2=1.0, b2=1.0, t0=0.0):
    return make_envelope_set(lambda t: a0, lambda t: b0,
                             lambda t: a2, lambda t: b2, t0, t_max=1e3)


class TestDerivativeBound:
    def test_constant_envelopes_sqrt2(self):
        env = constant_envelopes()
        # L = 8/3, bound applies for t > sqrt(8) and equals sqrt(2)
        assert env.L == pytest.approx(8 / 3 * 1.1, rel=1e-12)
        t = 4.0
        assert derivative_bound(env, t) == pytest.approx(math.sqrt(2), rel=1e-12)

    def test_sine_satisfies_bound(self):
        # phi = sin has |phi| <= 1, |phi''| <= 1, |phi'| <= 1 <= sqrt(2)
        env = constant_envelopes()
        bound = derivative_bound(env, 5.0)
        ts = np.linspace(5, 20, 500)
        assert np.max(np.abs(np.cos(ts))) <= bound

    def test_range_error(self):
        env = constant_envelopes()
        with pytest.raises(RangeError):
            derivative_bound(env, 1.0)

    def test_positivity_enforced(self):
        env = EnvelopeSet(lambda t: -1.0, lambda t: 1.0, lambda t: 1.0,
                          lambda t: 1.0, 0.0, L=10.0)
        with pytest.raises(DomainError):
            derivative_bound(env, 9.0)

    def test_underestimated_l_detected(self):
        env = EnvelopeSet(lambda t: 1.0, lambda t: 1.0, lambda t: 1.0,
                          lambda t: 1.0, 0.0, L=1.0)   # true ratio is 8/3
        with pytest.raises(DomainError):
            derivative_bound(env, 5.0)


class TestOptimalParameters:
    def test_symmetric_a_half(self):
        env = constant_envelopes(a2=3.0, b2=3.0)
        _, asym = optimal_parameters(env, 5.0)
        assert asym == 0.5

    def test_constant_nu(self):
        env = constant_envelopes()
        nu, _ = optimal_parameters(env, 5.0)
        assert nu == pytest.approx(2 * math.sqrt(2), rel=1e-14)

    def test_leading_term_identity_random(self):
        # (a0+b0)/nu + nu (A^2 a2 + (1-A)^2 b2)/2 equals the sqrt main term
        rng = np.random.default_rng(5)
        for _ in range(25):
            a0, b0, a2, b2 = rng.uniform(0.1, 10, 4)
            env = make_envelope_set(lambda t, v=a0: v, lambda t, v=b0: v,
                                    lambda t, v=a2: v, lambda t, v=b2: v,
                                    0.0, t_max=100.0)
            nu, asym = optimal_parameters(env, 50.0)
            obj = (a0 + b0) / nu + nu * (asym ** 2 * a2 + (1 - asym) ** 2 * b2) / 2
            main = math.sqrt(2 * a2 * b2 * (a0 + b0) / (a2 + b2))
            assert obj == pytest.approx(main, rel=1e-12)

    def test_minimality_brute_force(self):
        rng = np.random.default_rng(17)
        for _ in range(5):
            a0, b0, a2, b2 = rng.uniform(0.2, 5, 4)
            env = make_envelope_set(lambda t, v=a0: v, lambda t, v=b0: v,
                                    lambda t, v=a2: v, lambda t, v=b2: v,
                                    0.0, t_max=100.0)
            nu_opt, a_opt = optimal_parameters(env, 50.0)
            obj = lambda nu, asym: ((a0 + b0) / nu
                                    + nu * (asym ** 2 * a2 + (1 - asym) ** 2 * b2) / 2)
            best = obj(nu_opt, a_opt)
            nus = np.linspace(0.5 * nu_opt, 2 * nu_opt, 301)
            asyms = np.linspace(0.01, 0.99, 201)
            grid = np.min([[obj(n, s) for s in asyms] for n in nus])
            assert best <= grid + 1e-6 * abs(best)


class TestConstants:
    def test_c_sigma_spot(self):
        assert c_sigma(0.75) == pytest.approx(1.4381339181963085411, rel=1e-13)

    def test_b_sigma_spot(self):
        assert b_sigma(0.75) == pytest.approx(1.5940155007611019674, rel=1e-13)

    def test_pythagorean_identity(self):
        # (-s^2+3s-1) s(2-s) + 2(-s^2+5s-2)(-s^2+s+1) = 3s^4-17s^3+19s^2+4s-4
        # was checked symbolically; numerically on a 100-point grid:
        for s in np.linspace(0.505, 0.995, 100):
            q31 = -s * s + 3 * s - 1
            assert b_sigma(s) ** 2 == pytest.approx(q31 ** 2 + c_sigma(s) ** 2,
                                                    rel=1e-12)

    def test_realpart_coeff_definition(self):
        for s in (0.6, 0.75, 0.9):
            assert realpart_coeff(s) * s * (1 - s) == pytest.approx(
                -s * s + 3 * s - 1, rel=1e-15)

    def test_positive_and_finite_near_endpoints(self):
        for s in (0.5 + 1e-9, 1 - 1e-9):
            assert 0 < c_sigma(s) < 10
            assert 0 < b_sigma(s) < 10

    def test_range_errors(self):
        for fn in (c_sigma, b_sigma, realpart_coeff):
            with pytest.raises(RangeError):
                fn(0.5)
            with pytest.raises(RangeError):
                fn(1.0)

    def test_lemma_consistency_identity(self):
        # C_sigma/(s(1-s)) = sqrt(2 a2 b2 (2 alpha0)/(a2+b2)) with the
        # second-derivative and log-modulus main-term coefficients
        for s in np.linspace(0.55, 0.95, 41):
            a2, b2 = interp.second_deriv_coeffs(s)
            alpha0 = interp.log_modulus_coeff(s)
            rhs = math.sqrt(2 * a2 * b2 * 2 * alpha0 / (a2 + b2))
            assert c_sigma(s) / (s * (1 - s)) == pytest.approx(rhs, rel=1e-12)


class TestEllFactors:
    def test_direct_vs_log_space(self):
        for (n, s, t) in [(0, 0.75, 1e6), (1, 0.6, 1e4), (-1, 0.9, 1e10)]:
            assert ell(n, s, t) == pytest.approx(
                math.exp(log_ell(n, s, math.log(t))), rel=1e-13)

    def test_huge_height(self):
        # t = e^(e^10): only representable through log_t
        v = log_ell(0, 0.75, math.exp(10.0))
        assert v == pytest.approx(0.5 * 10.0, rel=1e-13)


class TestTheoremBounds:
    def test_arithmetic_example(self):
        # (0.75, 1e6) sits below the admissible sigma window, so the closed
        # form is evaluated non-strictly and flagged
        r = theorem1_bound(0.75, 1e6, strict=False)
        expect = b_sigma(0.75) / 0.1875 * math.log(1e6) ** 0.5
        assert r.main_value == pytest.approx(expect, rel=1e-13)
        assert r.error_shape_value == pytest.approx(
            math.log(1e6) ** 0.5 / (0.25 * 0.0625 * math.log(math.log(1e6))),
            rel=1e-13)
        assert not r.range_ok
        with pytest.raises(RangeError):
            theorem1_bound(0.75, 1e6)
        assert theorem1_bound(0.85, 1e6).range_ok

    def test_boundary_equality_accepted(self):
        t = 1e6
        llt = math.log(math.log(t))
        sigma = 0.5 + (interp.LAMBDA0 + 0.01) / llt
        assert theorem1_bound(sigma, t).range_ok
        with pytest.raises(RangeError, match="lambda0"):
            theorem1_bound(sigma - 1e-12, t)

    def test_upper_boundary(self):
        t = 1e6
        llt = math.log(math.log(t))
        sigma = 1 - 0.01 / math.sqrt(llt)
        assert theorem2_bound(sigma, t).range_ok
        with pytest.raises(RangeError, match="sqrt"):
            theorem2_bound(sigma + 1e-12, t)

    def test_log_space_path_consistency(self):
        r1 = theorem2_bound(0.75, 1e100)
        r2 = theorem2_bound(0.75, log_t=100 * math.log(10))
        assert r1.main_value == pytest.approx(r2.main_value, rel=1e-12)
        assert r1.log_main_value == pytest.approx(r2.log_main_value, abs=1e-12)

    def test_log_main_value_tracks(self):
        r = theorem1_bound(0.8, 1e8)
        assert r.log_main_value == pytest.approx(math.log(r.main_value), rel=1e-12)


class TestZetaEnvelopeComposition:
    @pytest.mark.parametrize("sigma", [0.6, 0.7, 0.75, 0.8, 0.9])
    def test_coefficient_extraction(self, sigma):
        # main-term envelopes: derivative_bound / ell_0 = C_sigma/(s(1-s)),
        # exactly (the ell factors cancel as sqrt(ell_-1 ell_1) = ell_0)
        env = zeta_envelopes(sigma)
        t = 1e100
        ratio = derivative_bound(env, t) / ell(0, sigma, t)
        assert ratio == pytest.approx(c_sigma(sigma) / (sigma * (1 - sigma)),
                                      rel=1e-10)


class TestLemmaOracle:
    def test_trig_polynomials(self):
        # 50 random trig polynomials scaled to meet constant envelopes:
        # max |phi'| on the window must respect the bound everywhere past
        # t0 + sqrt(3L)
        rng = np.random.default_rng(20260810)
        for trial in range(50):
            n_modes = rng.integers(1, 6)
            amps = rng.uniform(0.1, 1.0, n_modes)
            freqs = rng.uniform(0.1, 3.0, n_modes)
            phases = rng.uniform(0, 2 * np.pi, n_modes)
            alpha0 = float(np.sum(amps))
            alpha2 = float(np.sum(amps * freqs ** 2))
            env = make_envelope_set(
                lambda t, v=alpha0: v, lambda t, v=alpha0: v,
                lambda t, v=alpha2: v, lambda t, v=alpha2: v, 0.0, t_max=50.0)
            t_min = env.t0 + math.sqrt(3 * env.L)
            ts = np.linspace(t_min * 1.01 + 0.1, t_min + 30, 2000)
            phi_prime = sum(a * f * np.cos(f * ts + ph)
                            for a, f, ph in zip(amps, freqs, phases))
            bound = derivative_bound(env, float(ts[0]))
            assert np.max(np.abs(phi_prime)) <= bound + 1e-12
