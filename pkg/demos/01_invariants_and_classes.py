#!/usr/bin/env python3
"""Walkthrough: conjugation invariants of gl(n+1) under GL(n).

A square matrix of side n+1 splits into blocks (B, u, v, d); the functions
A_0 = d, A_i = v B^{i-1} u, and the exterior traces of B generate the ring
of GL(n)-invariant polynomials, so their joint level sets are the
geometric classes.  This script computes the invariants of a sample
element, confirms they are conjugation-invariant, and tests the regular
semisimplicity criterion det(v B^{i+j} u) != 0.
"""

from glpair import (Matrix, QQ, act, decompose, invariants,
                    is_regular_semisimple, same_class)
from glpair.exact import scalar_to_str


def fmt(xs):
    return "(" + ", ".join(scalar_to_str(x) for x in xs) + ")"


def fmt_mat(M):
    return "[" + "; ".join(fmt(row) for row in M.rows) + "]"


X = Matrix(QQ, [[1, 0, 1],
                [0, 2, 1],
                [1, 1, 0]])
E = decompose(X)
print("element blocks:")
print("  B =", fmt_mat(E.B))
print("  u =", fmt(E.u), " v =", fmt(E.v), " d =", scalar_to_str(E.d))

inv = invariants(E)
print("invariants: A =", fmt(inv.a), " exterior traces =", fmt(inv.b))
print("regular semisimple:", is_regular_semisimple(E))

g = Matrix(QQ, [[2, 1], [1, 1]])
print("\nconjugating by g =", fmt_mat(g))
Y = act(g, E)
print("transformed blocks: u =", fmt(Y.u), " v =", fmt(Y.v))
print("invariants unchanged:", same_class(E, Y))

# degenerate example: u = 0 kills every A_i with i >= 1
Z = decompose(Matrix(QQ, [[1, 0, 0], [0, 2, 0], [3, 4, 5]]))
print("\nwith a zero column block:")
print("invariants:", fmt(invariants(Z).a), fmt(invariants(Z).b))
print("regular semisimple:", is_regular_semisimple(Z))
