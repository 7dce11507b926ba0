"""Cross-module checks tying the parabolic flags to the invariants: the
Levi and radical of a relative parabolic are recognized blockwise on the
(B, u, v, d) decomposition, and perturbing an element of the Levi by any
element of the radical preserves every class invariant."""

import random
from fractions import Fraction as F

from glpair.exact import Matrix, QQ
from glpair.invariants import decompose, invariants, same_class
from glpair.parabolics import enumerate_rel_std


def _mat_index(coord, n):
    "Coordinate labels 0..n (0 = distinguished line) to matrix indices."
    return n if coord == 0 else coord - 1


def levi_mask(P):
    "(n+1) x (n+1) 0/1 mask of the Levi of P in matrix indices."
    n = P.n
    pos = {}
    for j, blk in enumerate(P.blocks()):
        for c in blk:
            pos[c] = j
    mask = [[0] * (n + 1) for _ in range(n + 1)]
    for r in range(n + 1):
        for c in range(n + 1):
            if pos[r] == pos[c]:
                mask[_mat_index(r, n)][_mat_index(c, n)] = 1
    return mask


def radical_mask(P):
    "Mask of the unipotent radical: strictly earlier block acts on later."
    n = P.n
    pos = {}
    for j, blk in enumerate(P.blocks()):
        for c in blk:
            pos[c] = j
    mask = [[0] * (n + 1) for _ in range(n + 1)]
    for r in range(n + 1):
        for c in range(n + 1):
            if pos[r] < pos[c]:
                mask[_mat_index(r, n)][_mat_index(c, n)] = 1
    return mask


def _random_masked(rng, mask, n):
    return Matrix(QQ, [[rng.randint(-4, 4) * mask[i][j]
                        for j in range(n + 1)] for i in range(n + 1)])


def test_levi_membership_is_blockwise():
    """An element lies in the Levi iff its corner block is in the Levi of
    the intersected parabolic and (u, v) are supported on the distinguished
    block's flag coordinates."""
    rng = random.Random(20)
    for n in (1, 2, 3):
        for P in enumerate_rel_std(n):
            mask = levi_mask(P)
            idx, k = P.indices, P.k
            z_coords = set(range(idx[k - 1] + 1, idx[k] + 1))
            for _ in range(5):
                M = _random_masked(rng, mask, n)
                X = decompose(M)
                for i in range(n):
                    coord = i + 1
                    if coord not in z_coords:
                        assert X.u[i] == 0 and X.v[i] == 0
                # corner block is block diagonal for the intersected flag
                vpos = {}
                for j, blk in enumerate(P.blocks()):
                    for c in blk:
                        if c != 0:
                            vpos[c] = j
                for r in range(n):
                    for c in range(n):
                        if vpos[r + 1] != vpos[c + 1]:
                            assert X.B[r, c] == 0


def test_radical_membership_is_blockwise():
    """An element lies in the radical iff its corner block does and u is
    supported below the insertion point while v annihilates the flag up to
    and including it."""
    rng = random.Random(21)
    for n in (1, 2, 3):
        for P in enumerate_rel_std(n):
            mask = radical_mask(P)
            idx, k = P.indices, P.k
            for _ in range(5):
                M = _random_masked(rng, mask, n)
                X = decompose(M)
                for i in range(n):
                    coord = i + 1
                    if not coord <= idx[k - 1]:
                        assert X.u[i] == 0
                    if not coord > idx[k]:
                        assert X.v[i] == 0


def test_radical_perturbation_preserves_class():
    "Adding a radical element to a Levi element never changes the class."
    rng = random.Random(22)
    cases = 0
    for n in (1, 2, 3):
        for P in enumerate_rel_std(n):
            lmask, rmask = levi_mask(P), radical_mask(P)
            for _ in range(10):
                M = _random_masked(rng, lmask, n)
                N = _random_masked(rng, rmask, n)
                X, XN = decompose(M), decompose(M + N)
                assert same_class(X, XN)
                cases += 1
    assert cases >= 300
