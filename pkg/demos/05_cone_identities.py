#!/usr/bin/env python3
"""Walkthrough: truncation cone functions and their alternating sums.

tau / tau-hat are the sharp and obtuse cone indicators of a nested pair;
tau-bar is the closed negative cone.  Their signed sums satisfy exact
combinatorial identities, checked here at random rational points with no
tolerance: the lattice partition-of-unity, the sigma decomposition, and
the recurrence satisfied by the compactly supported combination gamma'.
"""

from fractions import Fraction as F

from glpair import gamma_prime, tau, tau_bar, tau_hat, \
    verify_basic_identity, verify_gamma_recurrence, verify_langlands, \
    verify_sigma_decomposition
from glpair.cones import verify_gamma_support
from glpair.parabolics import RelStdParabolic, full_group

n = 2
G = full_group(n)
Q = RelStdParabolic(n, (0, 1, 2), 1)
H = (F(3), F(5), F(-2))
print("sample point H =", H)
print("tau(Q, G, H) =", tau(Q, G, H),
      " tau_hat(Q, G, H) =", tau_hat(Q, G, H),
      " tau_bar(Q, H) =", tau_bar(Q, H))
print("gamma'(Q, H, X=2H) =", gamma_prime(Q, H, tuple(2 * h for h in H)))

for fn, label in [(verify_basic_identity, None),
                  (lambda n: verify_langlands(n, 100, 7), "langlands"),
                  (lambda n: verify_gamma_recurrence(n, 100, 7), "gamma"),
                  (lambda n: verify_sigma_decomposition(n, 25, 7), "sigma"),
                  (lambda n: verify_gamma_support(n, 100, 7), "support")]:
    rep = fn(3)
    print("%-28s cases %-5d failures %d"
          % (rep["identity"], rep["cases"], rep["failures"]))
