#!/usr/bin/env python3
"""Tour of the extremal minorant/majorant machinery.

Walks through the target f_a(x) = (x^2-a^2)/(x^2+a^2)^2, the bandlimited
minorant L and majorant U that touch it tangentially, what happens at the
branch point lambda0, and the mass identities that Poisson summation turns
into closed forms.
"""

import math

import numpy as np

from zeta_toolkit import extremal
from zeta_toolkit.extremal import LAMBDA0, ApproxParams

print("The breakpoint lambda0 solves 2*lam*tanh(lam) = 1:")
print(f"  lambda0 = {LAMBDA0:.16f}")
print(f"  residual {2*LAMBDA0*math.tanh(LAMBDA0)-1:+.2e}\n")

a = 0.25
for lam in (0.3, LAMBDA0, 2.0):
    p = ApproxParams(a=a, delta=lam / (math.pi * a))
    mc = extremal.minorant_coeffs(p)
    uc = extremal.majorant_coeffs(p)
    print(f"lam = {lam:.4f}  (a = {a}, Delta = {p.delta:.4f}, branch {uc.branch.value})")
    print(f"  minorant coefficients  A = {mc.A:.6f}  B = {mc.B:.6f}")
    print(f"  majorant coefficients  C = {uc.C:.6f}  D = {uc.D:.6f}  E = {uc.E:.6f}")

    # one-sidedness on a dense grid
    rep_lo = extremal.verify_extremal(p, "minorant")
    rep_hi = extremal.verify_extremal(p, "majorant")
    print(f"  max normalized violation: L-f {rep_lo.max_violation:.1e}, "
          f"f-U {rep_hi.max_violation:.1e}")

    # interpolation nodes: lattice for L; half-lattice or B-zeros for U
    ns = extremal.nodes(p, uc, window=4.0)
    pos = ns.nodes[ns.nodes > 0][:4]
    print(f"  first majorant nodes ({ns.kind.value}): "
          + ", ".join(f"{x:.4f}" for x in pos))

    # the masses have closed forms; quadrature agrees
    m_lo, m_hi = extremal.minorant_mass(p), extremal.majorant_mass(p)
    q_lo, c_lo = extremal.mass_quadrature(p, "minorant")
    q_hi, c_hi = extremal.mass_quadrature(p, "majorant")
    print(f"  masses: integral L = {m_lo:.8f} (quadrature {q_lo:.8f})")
    print(f"          integral U = {m_hi:+.8f} (quadrature {q_hi:+.8f})\n")

print("Transforms are supported in [-Delta, Delta]; inside, the minorant's")
print("is strictly negative (that is what lets the prime sum be discarded):")
p = ApproxParams(a=a, delta=1.0)
ys = np.linspace(0, p.delta, 6)[:-1]
for y in ys:
    print(f"  Lhat({y:.3f}) = {extremal.minorant_hat(p, y):+.6f}    "
          f"Uhat({y:.3f}) = {extremal.majorant_hat(p, y):+.6f}")
print(f"  Lhat(Delta)  = {extremal.minorant_hat(p, p.delta):+.6f} (support edge)")

print("\nOn the E > 0 branch the majorant interpolates f_a at the zeros of")
print("B(z) = cos(pi z) - E pi z sin(pi z); the weighted node sum recovers")
print("the mass (generalized Poisson summation):")
p = ApproxParams(a=a, delta=0.5 / (math.pi * a))
ns = extremal.nodes(p, extremal.majorant_coeffs(p), window=400.0 / p.delta)
val = extremal.weighted_node_sum(lambda x: extremal.majorant_real(p, x), ns,
                                 p.delta, decay=(1.0, -3 * a * a))
print(f"  weighted sum = {val:.12f}")
print(f"  closed form  = {extremal.majorant_mass(p):.12f}")
