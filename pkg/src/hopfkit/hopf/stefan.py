"""Comatrix bases diagonalizing a finite-order automorphism of a simple subcoalgebra."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from ..algebra import StructAlgebra, simple_modules
from ..cyclo import CycPoly, roots_of_unity_order, verified_roots
from ..exactla import Mat, kernel_sparse, vec_comb
from .core import HopfError, in_tensor_square, tensor_map


@dataclass(frozen=True, eq=False)
class ComatrixBasis:
    basis: dict  # (i, j) -> element vector, 0-based indices
    omega: object
    order: int
    n: int

    def e(self, i, j):
        """1-based access as in e_{ij}."""
        return self.basis[(i - 1, j - 1)]


def restricted_coalgebra_dual(H, C):
    """The algebra C* in the dual of the RREF basis of C."""
    F = H.field
    pos = {p: a for a, p in enumerate(C.pivots)}
    entries = []
    for a, c in enumerate(C.basis):
        t = H.delta(c)
        if not in_tensor_square(t, C, H.dim, F):
            raise HopfError("subspace is not a subcoalgebra")
        for (i, j), v in t.items():
            if i in pos and j in pos:
                entries.append((pos[i], pos[j], a, v))
    unit = tuple(H.eps(c) for c in C.basis)
    return StructAlgebra.from_entries(F, C.dim, entries, unit)


def comatrix_from_module(H, C, rho):
    """e_ij = sum_a rho(phi_a)_ij c_a for the dual basis phi_a of C."""
    n = rho.dim
    F = H.field
    return {
        (i, j): vec_comb(((rho.matrices[a][i, j], c) for a, c in enumerate(C.basis)), H.dim, F)
        for i in range(n)
        for j in range(n)
    }


def comatrix_problems(H, E, n):
    out = []
    F = H.field
    for i in range(n):
        for j in range(n):
            want = {}
            for l in range(n):
                for k, v in tensor_of_vecs(E[(i, l)], E[(l, j)]).items():
                    want[k] = want.get(k, F.zero()) + v
            want = {k: v for k, v in want.items() if v}
            if H.delta(E[(i, j)]) != want:
                out.append(f"Delta(e_{i + 1}{j + 1}) is not comatrix-shaped")
            eps = H.eps(E[(i, j)])
            if eps != (F.one() if i == j else F.zero()):
                out.append(f"eps(e_{i + 1}{j + 1}) wrong")
    return out


def tensor_of_vecs(u, v):
    out = {}
    for i, a in enumerate(u):
        if a:
            for j, b in enumerate(v):
                if b:
                    out[(i, j)] = a * b
    return out


def _charpoly(M, F):
    """Characteristic polynomial by Faddeev-LeVerrier (characteristic zero)."""
    n = M.nrows
    I = Mat.identity(F, n)
    coeffs = [F.zero()] * (n + 1)
    coeffs[n] = F.one()
    Mk = Mat.zeros(F, n, n)
    c = F.one()
    for k in range(1, n + 1):
        Mk = M @ (Mk + I.scale(c))
        tr = sum((Mk[i, i] for i in range(n)), F.zero())
        c = -tr / k
        coeffs[n - k] = c
    return CycPoly(coeffs, F.degree)


def matrix_order(M, F, limit=64):
    P = M
    for k in range(1, limit + 1):
        if P.is_identity():
            return k
        P = M @ P
    return None


def stefan_comatrix_basis(H, C, f):
    """Comatrix basis of C with f(e_ij) = omega^(i-j) e_ij and ord omega = ord f|C."""
    F = H.field
    n = math.isqrt(C.dim)
    if n * n != C.dim or n < 2:
        raise HopfError("C must be a simple subcoalgebra of dimension n^2, n >= 2")
    # f restricted to C
    cols = []
    for c in C.basis:
        fc = f.apply(c)
        if not C.contains(fc):
            raise HopfError("f does not preserve C")
        cols.append(C.coords(fc))
    fC = Mat.from_columns(cols, C.dim)
    if fC.is_identity():
        raise HopfError("identity automorphism: f restricts to the identity on C")
    for c in C.basis:
        if H.delta(f.apply(c)) != tensor_map(H.delta(c), f):
            raise HopfError("f is not a coalgebra map on C")
    order = matrix_order(fC, F)
    if order is None:
        raise HopfError("f does not have finite order on C")

    Cstar = restricted_coalgebra_dual(H, C)
    mods = [m for m in simple_modules(Cstar) if m.dim == n]
    if not mods:
        raise HopfError("C is not a simple coalgebra over this field")
    E = comatrix_from_module(H, C, mods[0])
    bad = comatrix_problems(H, E, n)
    if bad:
        raise HopfError(bad[0])

    # solve f(E) P = P E, P an n x n scalar matrix
    fE = {k: f.apply(v) for k, v in E.items()}
    rows = []
    for i in range(n):
        for j in range(n):
            for comp in range(H.dim):
                row = {}
                for l in range(n):
                    a = fE[(i, l)][comp]
                    if a:
                        row[l * n + j] = row.get(l * n + j, F.zero()) + a
                    b = E[(l, j)][comp]
                    if b:
                        row[i * n + l] = row.get(i * n + l, F.zero()) - b
                row = {k: v for k, v in row.items() if v}
                if row:
                    rows.append(row)
    ker = kernel_sparse(rows, n * n, F)
    if ker.dim != 1:
        raise HopfError(f"intertwiner space has dimension {ker.dim}, expected 1")
    p = ker.basis[0]
    P = Mat.from_rows([[p[i * n + j] for j in range(n)] for i in range(n)], n)

    roots, complete = verified_roots(_charpoly(P, F))
    if not complete:
        raise HopfError("eigenvalues of f are not in the field; enlarge HOPFKIT_FIELD")
    if any(m != 1 for m in roots.values()):
        raise HopfError("f is not diagonalizable on C")
    lams = list(roots)
    if n == 2:
        order_lams = lams
    else:
        order_lams = _geometric_order(lams)
        if order_lams is None:
            raise HopfError("eigenvalues are not in geometric progression")
    vecs = []
    for lam in order_lams:
        K = (P - Mat.identity(F, n).scale(lam)).kernel(F)
        vecs.append(K.basis[0])
    Q = Mat.from_columns(vecs, n)
    Qi = Q.inverse(F)
    Ep = {}
    for i in range(n):
        for j in range(n):
            pairs = []
            for k in range(n):
                for l in range(n):
                    c = Qi[i, k] * Q[l, j]
                    if c:
                        pairs.append((c, E[(k, l)]))
            Ep[(i, j)] = vec_comb(pairs, H.dim, F)
    omega = order_lams[1] / order_lams[0]
    bad = comatrix_problems(H, Ep, n)
    if bad:
        raise HopfError(bad[0])
    for (i, j), v in Ep.items():
        if f.apply(v) != tuple((omega ** (i - j)) * a for a in v):
            raise HopfError(f"f(e_{i + 1}{j + 1}) is not an omega-eigenvector")
    if roots_of_unity_order(omega) != order:
        raise HopfError(f"ord omega differs from ord f|C = {order}")
    return ComatrixBasis(Ep, omega, order, n)


def _geometric_order(lams):
    for perm in itertools.permutations(lams):
        r = perm[1] / perm[0]
        if all(perm[k + 1] == perm[k] * r for k in range(len(perm) - 1)):
            return list(perm)
    return None


__all__ = ["ComatrixBasis", "stefan_comatrix_basis", "restricted_coalgebra_dual", "comatrix_from_module", "matrix_order"]
