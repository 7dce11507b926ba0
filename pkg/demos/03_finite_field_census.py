#!/usr/bin/env python3
"""Walkthrough: the exhaustive finite-field oracle.

Everything the library claims about invariants is checked against a
brute-force enumeration: all of gl(n+1, F_p) is partitioned into orbits by
a union-find over generator edges, and within each invariant fingerprint
the regular semisimple elements must form a single free orbit.
"""

from glpair.census import group_order, orbit_of, stabilizer_order, \
    verify_separation

print("orbit of the n=1 element (B,u,v,d) = (1,1,1,0) over F_3:")
print(" ", sorted(orbit_of((1, 1, 1, 0), 1, 3)))
print("stabilizer of 0 has order |GL_1(F_3)| =", stabilizer_order((0,) * 4, 1, 3))

rep = verify_separation(1, 3)
print("\nexhaustive sweep of gl_2(F_3): %d elements, %d orbits, %d violations"
      % (sum(s for e in rep.class_table.values() for s, _ in e),
         rep.orbit_count, len(rep.violations)))

rep = verify_separation(2, 3)
print("exhaustive sweep of gl_3(F_3): %d elements, %d orbits, %d violations"
      % (3 ** 9, rep.orbit_count, len(rep.violations)))
print("|GL_2(F_3)| =", group_order(2, 3))

sizes = sorted({size for entries in rep.class_table.values()
                for size, _ in entries})
print("orbit sizes seen:", sizes, "(each divides the group order)")

rep = verify_separation(2, 5, sample=3000, seed=0)
print("\nsampled sweep over F_5: %d pairs checked, %d violations"
      % (rep.samples, len(rep.violations)))
