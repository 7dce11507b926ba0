#!/usr/bin/env python3
"""Walkthrough: orbits inside a separable class.

When the corner matrix B has separable characteristic polynomial, a class
splits into finitely many orbits parametrized by signed subsets of the set
I0 of components where the pairing invariant alpha vanishes: each index of
I0 can stay off, switch on the column side, or switch on the row side,
giving 3^#I0 orbits.  The brute-force census over a finite field counts
the same orbits from scratch and confirms both the count and the
stabilizer orders.
"""

from fractions import Fraction as F

from glpair import Matrix, Polynomial, QQ, build_rrss_class, invariants, \
    orbit_representative
from glpair.census import class_orbit_count, expected_stabilizer_orders
from glpair.exact import scalar_to_str
from glpair.rrss import enumerate_eps_subsets


def fmt(xs):
    return "(" + ", ".join(scalar_to_str(x) for x in xs) + ")"


B = Matrix(QQ, [[1, 0], [0, 2]])
factors = [Polynomial(QQ, [-1, 1]), Polynomial(QQ, [-2, 1])]  # t-1, t-2

cls = build_rrss_class(B, factors, [F(0), F(4)], F(1))
print("degenerate indices I0 =", sorted(cls.I0))
print("expected orbit count = 3^%d = %d" % (len(cls.I0), 3 ** len(cls.I0)))

print("\norbit representatives (all in one class):")
for sub in enumerate_eps_subsets(cls.I0):
    rep = orbit_representative(cls, sub)
    label = sorted(sub) if sub else "base"
    print("  %-8s u = %s  v = %s  ->  A = %s"
          % (label, fmt(rep.u), fmt(rep.v), fmt(invariants(rep).a)))

for p in (3, 5):
    count, stabs = class_orbit_count(cls, p)
    print("\ncensus over F_%d: %d orbits, stabilizer orders %s"
          % (p, count, stabs))
    print("predicted stabilizer orders:", expected_stabilizer_orders(cls, p))

# a factor that stays irreducible mod 3 contributes a stabilizer of order
# p^deg - 1 = 8 for the orbit with that component switched off
quad = build_rrss_class(Matrix(QQ, [[0, -1], [1, 0]]),
                        [Polynomial(QQ, [1, 0, 1])], [F(0)], F(2))
count, stabs = class_orbit_count(quad, 3)
print("\ninert quadratic factor over F_3: %d orbits, stabilizers %s"
      % (count, stabs))
