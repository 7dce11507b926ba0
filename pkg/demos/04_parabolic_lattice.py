#!/usr/bin/env python3
"""Walkthrough: the relative parabolic lattice and its exponents.

The parabolics of GL(n+1) containing the standard Borel of the embedded
GL(n) are flags of the ambient space with one distinguished-line insertion
point.  Each carries a coweight system, an affine exponent rho_{Q,s}, the
block exponent s_Q, and two volume constants (theta-hat normalization and
the standard-part Jacobian), all exact.
"""

from fractions import Fraction as F

from glpair import enumerate_rel_std, delta_hat, jacobian_sq, rho_Q_s, \
    s_sub, theta_hat
from glpair.parabolics import varpi_minus

for n in (1, 2, 3):
    print("n = %d: %d relative parabolics" % (n, len(enumerate_rel_std(n))))

print("\nthe n = 2 lattice:")
for Q in enumerate_rel_std(2):
    weights, _ = delta_hat(Q)
    c0, c1 = s_sub(Q)
    print("  %-14s corank %d  s_Q = %s + %s s  j^2 = %s"
          % (Q, Q.corank, c0, c1, jacobian_sq(Q)))

Q = enumerate_rel_std(2)[4]
print("\nexponent data for", Q)
rho = rho_Q_s(Q)
print("  rho const:", rho.const)
print("  rho slope:", rho.slope)
poly, vsq = theta_hat(Q, rho)
print("  theta-hat pairing polynomial in s:", poly, " (v^2 = %s)" % vsq)
print("  pairing with the first-kind coweight at index 1:",
      rho.pair(varpi_minus(1, 2)), "(= i_a * (1+s) with i_a = 1)")
