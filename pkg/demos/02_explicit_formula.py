#!/usr/bin/env python3
"""The explicit formula in action against a table of zero ordinates.

Both sides of the identity are computed independently: the left side sums
the averaged test function over tabulated zeros (truncated, with a certified
tail), the right side assembles the archimedean integral, the pole term, the
log pi term and the prime sum.  Also demonstrates the exact partial-fraction
identity for Re (zeta'/zeta)'.

Usage: python demos/02_explicit_formula.py [ZEROS_PATH]
       (defaults to tests/fixtures/zeros_100k.txt)
"""

import math
import sys

from zeta_toolkit import explicit_formula as ef
from zeta_toolkit import special, zero_sums
from zeta_toolkit.extremal import ApproxParams

path = sys.argv[1] if len(sys.argv) > 1 else "tests/fixtures/zeros_100k.txt"
zeros = zero_sums.parse_zeros(path)
print(f"zero table: {zeros.count} ordinates up to height {zeros.height:.3f}\n")

sigma, t = 0.75, 500.0
a = sigma - 0.5
delta = math.log(math.log(t)) / math.pi   # the optimal bandwidth choice
p = ApproxParams(a=a, delta=delta)
print(f"sigma = {sigma}, t = {t}:  a = {a}, pi*Delta = log log t = "
      f"{math.pi*delta:.4f}, lam = {p.lam:.4f}\n")

for label, mk in (("minorant", ef.minorant_bundle), ("majorant", ef.majorant_bundle)):
    h = mk(p)
    lhs, tail = zero_sums.gw_lhs(h, t, zeros)
    rhs = ef.gw_rhs(h, t)
    print(f"{label}:")
    print(f"  sum over zeros (truncated) = {lhs:+.8f}  tail bound {tail:.1e}")
    print(f"  archimedean  {rhs.archimedean:+.8f}")
    print(f"  pole         {rhs.pole:+.8f}")
    print(f"  log pi       {rhs.log_pi:+.8f}")
    print(f"  prime sum    {rhs.prime_sum:+.8f}")
    print(f"  total        {rhs.total:+.8f}  (quadrature certificate "
          f"{rhs.certificate:.1e})")
    print(f"  |lhs - rhs| = {abs(lhs-rhs.total):.2e}\n")

print("Exact representation of Re (zeta'/zeta)' through the zeros:")
for (s_, t_) in ((0.75, 500.0), (0.9, 1000.0)):
    r = zero_sums.representation_residual(s_, t_, zeros)
    v, tail = zero_sums.sum_f_over_zeros(s_, t_, zeros)
    ld = special.log_deriv_prime(complex(s_, t_)).real
    print(f"  sigma={s_}, t={t_}: Re (zeta'/zeta)' = {ld:+.8f}, "
          f"zero sum = {v:+.8f}, residual {r:+.2e} (tail bound {tail:.1e})")

print("\nNumeric two-sided assembly (pi*Delta = log log t):")
lo = ef.assemble_bound_numeric(sigma, 1e4, "lower")
hi = ef.assemble_bound_numeric(sigma, 1e4, "upper")
print(f"  at (0.75, 1e4): {lo:+.6f} <= averaged zero sum <= {hi:+.6f}")
