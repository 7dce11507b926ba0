"""Truncation cone functions on a_0 and their alternating-sum identities.

All indicator evaluations are exact (Fraction arithmetic); the verify_*
sweeps check each identity by exact integer comparison at generic rational
points (no pairing exactly zero), resampling degenerate draws.  Identity
sweeps are embarrassingly parallel over sample points; the report merge is
a plain sum of per-sample counters.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

from .exact import QQ, Matrix
from .parabolics import (contains, coweights, dot, enumerate_rel_std,
                         full_group, parabolics_above, parabolics_between,
                         simple_roots)


def tau(P, Q, H):
    "1 iff every simple root of the pair is positive on H (via a_P averages)."
    if not contains(Q, P):
        raise ValueError("pair is not nested")
    return int(all(dot(a, H) > 0 for a in simple_roots(P, Q)))


def tau_hat(P, Q, H):
    "1 iff every coweight of the pair is positive on H."
    if not contains(Q, P):
        raise ValueError("pair is not nested")
    return int(all(dot(w, H) > 0 for w in coweights(P, Q)))


def tau_bar(Q, H):
    "1 iff every simple root of Q (in the full group) is <= 0 on H."
    G = full_group(Q.n)
    return int(all(dot(a, H) <= 0 for a in simple_roots(Q, G)))


def sigma(P1, P2, H):
    "Signed sum over Q >= P2 of (-1)^(d_{P2} - d_Q) tau(P1,Q,H) tau_hat(Q,G,H)."
    if not contains(P2, P1):
        raise ValueError("pair is not nested")
    G = full_group(P1.n)
    total = 0
    for Q in parabolics_above(P2):
        sign = -1 if (P2.num_blocks - Q.num_blocks) % 2 else 1
        t = tau(P1, Q, H)
        if t:
            total += sign * t * tau_hat(Q, G, H)
    return total


def gamma_prime(Q, H, X):
    """Sum over R >= Q of (-1)^(d_Q - d_R) tau_hat(R,G,H-X) tau(Q,R,H);
    the projections onto a_R are implicit in the pairings (every functional
    vector already lies in the relevant subspace)."""
    G = full_group(Q.n)
    HX = tuple(Fraction(h) - Fraction(x) for h, x in zip(H, X))
    total = 0
    for R in parabolics_above(Q):
        t = tau(Q, R, H)
        if t:
            sign = -1 if (Q.num_blocks - R.num_blocks) % 2 else 1
            total += sign * tau_hat(R, G, HX) * t
    return total


# ---------------------------------------------------------------------------
# support of gamma_prime(., X)


def _gamma_walls(Q, X):
    """Affine walls (vector, offset) with wall = {H : <vector,H> = offset}
    across which gamma_prime(Q, ., X) can jump."""
    G = full_group(Q.n)
    walls = []
    for R in parabolics_above(Q):
        for a in simple_roots(Q, R):
            walls.append((a, Fraction(0)))
        for w in coweights(R, G):
            walls.append((w, dot(w, X)))
    return walls


def support_box(Q, X, basis):
    """A box [lo_i, hi_i] in the coordinates of `basis` (a basis of the
    integration space) containing the support of gamma_prime(Q, ., X).

    The function is piecewise constant on the cells of the wall arrangement
    and vanishes on every unbounded cell (its support is compact), so the
    bounding box of the arrangement vertices, padded by 1, suffices.
    """
    walls = _gamma_walls(Q, X)
    d = len(basis)
    if d == 0:
        return []
    rows = [[dot(w, b) for b in basis] for w, _ in walls]
    offs = [off for _, off in walls]
    verts = []
    for sel in combinations(range(len(walls)), d):
        A = Matrix(QQ, [rows[i] for i in sel])
        if A.rank() < d:
            continue
        verts.append(A.solve([offs[i] for i in sel]))
    if not verts:
        return [(Fraction(-1), Fraction(1))] * d
    los = [min(v[i] for v in verts) - 1 for i in range(d)]
    his = [max(v[i] for v in verts) + 1 for i in range(d)]
    return list(zip(los, his))


# ---------------------------------------------------------------------------
# verification sweeps


def _sample_in_a(P, rng, span=40):
    "A random integer point of a_P (constant on blocks)."
    vals = [rng.randint(-span, span) for _ in P.blocks()]
    out = [Fraction(0)] * (P.n + 1)
    for v, blk in zip(vals, P.blocks()):
        for i in blk:
            out[i] = Fraction(v)
    return tuple(out)


def _generic_for(P, H):
    "No root or coweight pairing relevant to P vanishes at H."
    G = full_group(P.n)
    for Q in parabolics_above(P):
        if any(dot(w, H) == 0 for w in coweights(P, Q)):
            return False
        if any(dot(w, H) == 0 for w in coweights(Q, G)):
            return False
        if any(dot(a, H) == 0 for a in simple_roots(P, Q)):
            return False
    return True


def verify_basic_identity(n):
    """For every nested pair R <= P2, the signed count of intermediate
    parabolics sum_{R <= P <= P2} (-1)^(d_P - d_{P2}) is 1 if R = P2 and
    0 otherwise."""
    cases = failures = 0
    for P2 in enumerate_rel_std(n):
        for R in enumerate_rel_std(n):
            if not contains(P2, R):
                continue
            cases += 1
            total = 0
            for P in parabolics_between(R, P2):
                total += -1 if (P.num_blocks - P2.num_blocks) % 2 else 1
            if total != (1 if R == P2 else 0):
                failures += 1
    return {"identity": "cones.basic-identity", "n": n,
            "cases": cases, "failures": failures}


def verify_langlands(n, sample_count, seed):
    """sum over Q >= P of tau_hat(P,Q,H) tau_bar(Q,H) = 1 at generic
    rational H in a_P, for every P."""
    rng = random.Random(seed)
    cases = failures = degenerate = 0
    fail_list = []
    for P in enumerate_rel_std(n):
        above = parabolics_above(P)
        G = full_group(n)
        for _ in range(sample_count):
            while True:
                H = _sample_in_a(P, rng)
                ok = all(dot(w, H) != 0
                         for Q in above for w in coweights(P, Q)) and \
                     all(dot(a, H) != 0
                         for Q in above for a in simple_roots(Q, G))
                if ok:
                    break
                degenerate += 1
            cases += 1
            total = sum(tau_hat(P, Q, H) * tau_bar(Q, H) for Q in above)
            if total != 1:
                failures += 1
                if len(fail_list) < 5:
                    fail_list.append({"P": repr(P), "H": [str(h) for h in H]})
    return {"identity": "cones.langlands-partition", "n": n, "seed": seed,
            "cases": cases, "failures": failures, "degenerate": degenerate,
            "failure_samples": fail_list}


def verify_gamma_recurrence(n, sample_count, seed):
    """tau_hat(P, G, H - X) = sum over Q >= P of tau_hat(P,Q,H) gamma_prime(Q,H,X)
    at generic rational (H, X) in a_P x a_P.

    The alternating sign on the right is already inside gamma_prime as
    defined here (its leading term is tau_hat(Q, G, H - X) with sign +1),
    so no extra (-1)-power appears.
    """
    rng = random.Random(seed)
    G = full_group(n)
    cases = failures = degenerate = 0
    fail_list = []
    for P in enumerate_rel_std(n):
        above = parabolics_above(P)
        for _ in range(sample_count):
            while True:
                H = _sample_in_a(P, rng)
                X = _sample_in_a(P, rng)
                HX = tuple(h - x for h, x in zip(H, X))
                ok = all(dot(w, H) != 0 and dot(w, HX) != 0
                         for Q in above for w in coweights(Q, G)) and \
                     all(dot(w, H) != 0
                         for Q in above for w in coweights(P, Q)) and \
                     all(dot(a, H) != 0
                         for Q in above for R in parabolics_above(Q)
                         for a in simple_roots(Q, R))
                if ok:
                    break
                degenerate += 1
            cases += 1
            lhs = tau_hat(P, G, HX)
            rhs = sum(tau_hat(P, Q, H) * gamma_prime(Q, H, X) for Q in above)
            if lhs != rhs:
                failures += 1
                if len(fail_list) < 5:
                    fail_list.append({"P": repr(P),
                                      "H": [str(h) for h in H],
                                      "X": [str(x) for x in X]})
    return {"identity": "cones.gamma-recurrence", "n": n, "seed": seed,
            "cases": cases, "failures": failures, "degenerate": degenerate,
            "failure_samples": fail_list}


def verify_sigma_decomposition(n, sample_count, seed):
    """tau(P1,P,H) tau_hat(P,G,H) = sum over P2 >= P of sigma(P1,P2,H), and
    sigma(P,P,.) vanishes at every generic sample unless P is the full group."""
    rng = random.Random(seed)
    G = full_group(n)
    cases = failures = 0
    for P1 in enumerate_rel_std(n):
        for P in parabolics_above(P1):
            for _ in range(sample_count):
                H = _sample_in_a(P1, rng)
                while not _generic_for(P1, H):
                    H = _sample_in_a(P1, rng)
                cases += 1
                lhs = tau(P1, P, H) * tau_hat(P, G, H)
                rhs = sum(sigma(P1, P2, H) for P2 in parabolics_above(P))
                if lhs != rhs:
                    failures += 1
    for P in enumerate_rel_std(n):
        expected = 1 if P.is_full_group() else 0
        for _ in range(sample_count):
            H = _sample_in_a(P, rng)
            while not _generic_for(P, H):
                H = _sample_in_a(P, rng)
            cases += 1
            if sigma(P, P, H) != expected:
                failures += 1
    return {"identity": "cones.sigma-decomposition", "n": n, "seed": seed,
            "cases": cases, "failures": failures}


def verify_gamma_support(n, sample_count, seed):
    """gamma_prime(Q, ., X) vanishes at sampled points outside its support
    box, and takes values in {-1, 0, 1} at points inside, for every Q."""
    rng = random.Random(seed)
    cases = failures = 0
    value_range_ok = True
    for Q in enumerate_rel_std(n):
        basis = [tuple(v) for v in _centered_block_basis(Q)]
        if not basis:
            continue
        X = _sample_in_a(Q, rng)
        box = support_box(Q, X, basis)
        for _ in range(sample_count):
            t = [Fraction(rng.randint(-20, 20)) for _ in basis]
            j = rng.randrange(len(basis))
            lo, hi = box[j]
            t[j] = hi + rng.randint(1, 30) if rng.random() < 0.5 \
                else lo - rng.randint(1, 30)
            H = [Fraction(0)] * (Q.n + 1)
            for c, b in zip(t, basis):
                H = [h + c * x for h, x in zip(H, b)]
            cases += 1
            if gamma_prime(Q, tuple(H), X) != 0:
                failures += 1
        for _ in range(sample_count):
            H = _sample_in_a(Q, rng)
            if gamma_prime(Q, H, X) not in (-1, 0, 1):
                value_range_ok = False
    return {"identity": "cones.gamma-support", "n": n, "seed": seed,
            "cases": cases, "failures": failures,
            "values_in_unit_range": value_range_ok}


def _centered_block_basis(Q):
    "Basis of the centered part of a_Q: differences of block indicators."
    from .parabolics import block_indicator
    blks = Q.blocks()
    return [tuple(x - y for x, y in
                  zip(block_indicator(blks[j], Q.n),
                      block_indicator(blks[j + 1], Q.n)))
            for j in range(len(blks) - 1)]
