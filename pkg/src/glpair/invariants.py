"""Invariant theory of the conjugation action of GL(n) on gl(n+1).

An element is stored by its blocks (B, u, v, d): the n x n corner, the last
column, the last row, and the scalar corner.  The group acts by
(B, u, v, d) -> (g^{-1} B g, g^{-1} u, v g, d); the polynomial invariants
A_0 = d, A_i = v B^{i-1} u and the exterior traces of B generate the
invariant ring, and their joint level sets are the geometric classes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exact import Matrix, Polynomial, exterior_trace, is_separable, krylov_basis
from .rrss import EtaleAlgebra, EtaleElement, iota


@dataclass(frozen=True)
class BlockElement:
    B: Matrix
    u: tuple
    v: tuple
    d: object

    @property
    def n(self):
        return self.B.nrows

    @property
    def field(self):
        return self.B.field


@dataclass(frozen=True)
class ClassInvariants:
    a: tuple  # A_0 .. A_n
    b: tuple  # B_1 .. B_n


def decompose(X):
    "Split a square matrix of side >= 2 into its (B, u, v, d) blocks."
    if not X.is_square() or X.nrows < 2:
        raise ValueError("need a square matrix of side at least 2")
    n = X.nrows - 1
    B = Matrix(X.field, [row[:n] for row in X.rows[:n]])
    u = tuple(X.rows[i][n] for i in range(n))
    v = tuple(X.rows[n][:n])
    return BlockElement(B, u, v, X.rows[n][n])


def assemble(X):
    "Inverse of decompose."
    rows = [list(r) + [X.u[i]] for i, r in enumerate(X.B.rows)]
    rows.append(list(X.v) + [X.d])
    return Matrix(X.field, rows)


def act(g, X):
    "(g^{-1} B g, g^{-1} u, v g, d)."
    gi = g.inverse()
    return BlockElement(gi * X.B * g, gi.apply(X.u),
                        tuple(g.transpose().apply(X.v)), X.d)


def invariants(X):
    "A_0 = d, A_i = v B^{i-1} u for 1 <= i <= n, and the exterior traces of B."
    n = X.n
    a = [X.d]
    w = X.u
    for _ in range(n):
        a.append(_row_dot(X.v, w))
        w = X.B.apply(w)
    b = tuple(exterior_trace(X.B, j) for j in range(1, n + 1))
    return ClassInvariants(tuple(a), b)


def _row_dot(v, u):
    acc = None
    for x, y in zip(v, u):
        acc = x * y if acc is None else acc + x * y
    return acc


def is_regular_semisimple(X):
    "det(v B^{i+j} u)_{0 <= i,j < n} != 0."
    n = X.n
    powers = []
    w = X.u
    for _ in range(2 * n - 1):
        powers.append(w)
        w = X.B.apply(w)
    rows = [[_row_dot(X.v, powers[i + j]) for j in range(n)] for i in range(n)]
    return Matrix(X.field, rows).det() != X.field.zero


def same_class(X, Y):
    if X.n != Y.n or X.field != Y.field:
        raise ValueError("elements of different shapes or fields")
    return invariants(X) == invariants(Y)


def cyclic_module_iso(B):
    """An invertible Krylov matrix P = [w, Bw, ..., B^{n-1}w] for a cyclic
    vector w, found by a deterministic sweep: standard basis vectors, then
    partial sums, then small dense vectors.  P^{-1} B P is the companion
    matrix of the characteristic polynomial.  Requires B separable."""
    f = B.charpoly()
    if not is_separable(f):
        raise ValueError("matrix is not regular semisimple")
    n = B.nrows
    field = B.field
    zero, one = field.zero, field.one
    candidates = []
    for i in range(n):
        candidates.append(tuple(one if j == i else zero for j in range(n)))
    for i in range(2, n + 1):
        candidates.append(tuple(one if j < i else zero for j in range(n)))
    for w in candidates:
        K, rank = krylov_basis(B, w)
        if rank == n:
            return K
    # exhaustive fallback over small coefficient vectors; a separable
    # matrix always has a cyclic vector so this terminates at desk sizes
    from itertools import product as _product
    for coeffs in _product(range(3), repeat=n):
        if not any(coeffs):
            continue
        w = tuple(field(c) for c in coeffs)
        K, rank = krylov_basis(B, w)
        if rank == n:
            return K
    raise AssertionError("no cyclic vector found for a separable matrix")


def _to_algebra(algebra, P, vec):
    "Pull a column vector of V back to the algebra through the Krylov basis."
    coeffs = P.solve(vec)
    return algebra.from_coeffs(coeffs)


def _from_algebra(P, elem):
    "Push an algebra element to V: P times its coefficient column."
    return P.apply(elem.coeffs())


def _covector_to_dual(algebra, P, v):
    """The element y of the reflected algebra with v(x-realized) =
    trace(x * reflected-pullback(y)) for every x; solves the Hankel system
    built from traces of powers of the generator."""
    field = algebra.field
    n = algebra.dim
    pw = algebra.one()
    tr = []
    gen = algebra.generator()
    for _ in range(2 * n - 1):
        tr.append(pw.trace())
        pw = pw * gen
    rows = [[tr[j + k] if (k % 2 == 0) else -tr[j + k] for k in range(n)]
            for j in range(n)]
    rhs = [_row_dot(v, P.column(j)) for j in range(n)]
    coeffs = Matrix(field, rows).solve(rhs)
    return algebra.dual().from_coeffs(coeffs)


def _dual_to_covector(algebra, P, y):
    "Inverse of _covector_to_dual: the row vector of V* realizing y."
    n = algebra.dim
    iy = iota(y)  # back in the base algebra
    gen = algebra.generator()
    pw = algebra.one()
    vals = []
    for _ in range(n):
        vals.append((pw * iy).trace())
        pw = pw * gen
    return tuple(P.inverse().transpose().apply(vals))


def alpha_invariant(B, factors, u, v):
    """The product u * iota(v) in the etale algebra of the supplied
    factorization, after transporting u through a Krylov basis and v
    through the trace pairing; independent of the cyclic vector chosen."""
    algebra = EtaleAlgebra(B.field, factors)
    if algebra.modulus != B.charpoly():
        raise ValueError("factorization does not multiply to the "
                         "characteristic polynomial")
    P = cyclic_module_iso(B)
    return _alpha_from_basis(algebra, P, u, v)


def _alpha_from_basis(algebra, P, u, v):
    ut = _to_algebra(algebra, P, u)
    vt = _covector_to_dual(algebra, P, v)
    return ut * iota(vt)


@dataclass(frozen=True)
class SeparableClass:
    """A geometric class whose corner matrix is regular semisimple: the
    matrix, its factored characteristic polynomial, the pairing invariant
    alpha (one component per factor), the set I0 of components where alpha
    vanishes, the class constant d, and a base point (u, v) realizing the
    closed orbit."""
    B: Matrix
    algebra: EtaleAlgebra
    alpha: EtaleElement
    I0: frozenset
    d: object
    xi_u: EtaleElement   # column part of the base point, in the algebra
    xi_v: EtaleElement   # row part, in the reflected algebra
    basis: Matrix        # Krylov basis used for the coordinate transport

    @property
    def n(self):
        return self.B.nrows


def build_rrss_class(B, factors, alpha, d):
    """Assemble class data from a separable corner matrix, a factorization
    of its characteristic polynomial, the target pairing invariant, and the
    class constant.  alpha may be an algebra element, a polynomial, or a
    list of per-factor values.  The base point takes u = 1 on components
    where alpha does not vanish and v = the reflected alpha there."""
    field = B.field
    algebra = EtaleAlgebra(field, factors)
    if algebra.modulus != B.charpoly():
        raise ValueError("factorization does not multiply to the "
                         "characteristic polynomial")
    alpha = _coerce_alpha(algebra, alpha)
    I0 = frozenset(i for i in algebra.index_set if alpha.component_is_zero(i))
    live = algebra.zero()
    for i in algebra.index_set:
        if i not in I0:
            live = live + algebra.idempotent(i)
    xi_u = live
    xi_v = iota(alpha)  # vanishes on I0 components automatically
    return SeparableClass(B, algebra, alpha, I0, field(d), xi_u, xi_v,
                          cyclic_module_iso(B))


def _coerce_alpha(algebra, alpha):
    if isinstance(alpha, EtaleElement):
        if alpha.algebra != algebra:
            raise ValueError("alpha belongs to a different algebra")
        return alpha
    if isinstance(alpha, Polynomial):
        return algebra.element(alpha)
    # per-factor values, each a scalar or a coefficient list
    vals = list(alpha)
    if len(vals) != len(algebra.factors):
        raise ValueError("one alpha component per factor required")
    out = algebra.zero()
    for i, val in enumerate(vals, start=1):
        e = algebra.idempotent(i)
        if isinstance(val, (list, tuple)):
            comp = algebra.from_coeffs(val)
        else:
            comp = algebra.element(algebra.field(val))
        out = out + e * comp
    return out


def orbit_representative(cls, eps):
    """The matrix-coordinate representative attached to an eps-subset of
    I0: the base point with the selected column components (positive signs)
    or row components (negative signs) switched on."""
    from .rrss import is_eps_subset
    if not is_eps_subset(eps, cls.I0):
        raise ValueError("not an eps-subset of the degenerate index set")
    u_alg = cls.xi_u
    v_alg = cls.xi_v
    for i in eps:
        if i > 0:
            u_alg = u_alg + cls.algebra.idempotent(i)
        else:
            v_alg = v_alg + iota(cls.algebra.idempotent(-i))
    u = _from_algebra(cls.basis, u_alg)
    v = _dual_to_covector(cls.algebra, cls.basis, v_alg)
    return BlockElement(cls.B, u, v, cls.d)


def class_invariants(cls):
    "Invariants shared by every representative: A_k = trace(b^k alpha)."
    n = cls.n
    a = [cls.d]
    pw = cls.alpha
    gen = cls.algebra.generator()
    for _ in range(n):
        a.append(pw.trace())
        pw = pw * gen
    b = tuple(exterior_trace(cls.B, j) for j in range(1, n + 1))
    return ClassInvariants(tuple(a), b)
