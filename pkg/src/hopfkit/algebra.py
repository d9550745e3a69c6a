"""Finite-dimensional algebras given by structure constants."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field as dc_field
from functools import cached_property

from .cyclo import CycPoly, FieldSpec, verified_roots
from .exactla import (
    Mat,
    RowReducer,
    Subspace,
    kernel_sparse,
    to_sparse,
    unit_vec,
    vec_comb,
    zero_vec,
)

MAX_SPLIT_ATTEMPTS = 64
MAX_COEFF = 4


class AlgebraError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class StructAlgebra:
    """e_i e_j = sum_k mult[i][j][k] e_k, with mult stored sparsely."""

    field: FieldSpec
    dim: int
    mult: tuple  # mult[i][j] is a dict k -> scalar
    unit: tuple
    labels: tuple = None

    @classmethod
    def from_dense(cls, field, tensor, unit, labels=None):
        d = len(tensor)
        mult = tuple(tuple(to_sparse(tensor[i][j]) for j in range(d)) for i in range(d))
        return cls(field, d, mult, tuple(unit), labels)

    @classmethod
    def from_entries(cls, field, dim, entries, unit, labels=None):
        """entries: iterable of (i, j, k, scalar)."""
        table = [[{} for _ in range(dim)] for _ in range(dim)]
        for i, j, k, c in entries:
            c = field(c)
            cur = table[i][j].get(k)
            new = c if cur is None else cur + c
            if new:
                table[i][j][k] = new
            else:
                table[i][j].pop(k, None)
        return cls(field, dim, tuple(tuple(r) for r in table), tuple(unit), labels)

    def basis_vec(self, i):
        return unit_vec(self.field, self.dim, i)

    def zero(self):
        return zero_vec(self.field, self.dim)

    def mul(self, u, v):
        acc = {}
        nv = [(j, b) for j, b in enumerate(v) if b]
        for i, a in enumerate(u):
            if not a:
                continue
            row = self.mult[i]
            for j, b in nv:
                ab = None
                for k, c in row[j].items():
                    if ab is None:
                        ab = a * b
                    t = ab * c
                    cur = acc.get(k)
                    acc[k] = t if cur is None else cur + t
        z = self.field.zero()
        return tuple(acc.get(k, z) for k in range(self.dim))

    def mul_basis(self, i, j):
        z = self.field.zero()
        row = self.mult[i][j]
        return tuple(row.get(k, z) for k in range(self.dim))

    def power(self, u, n):
        out = self.unit
        for _ in range(n):
            out = self.mul(out, u)
        return out

    def left_matrix(self, u):
        """Matrix of v -> u v."""
        return Mat.from_columns([self.mul(u, self.basis_vec(j)) for j in range(self.dim)], self.dim)

    def right_matrix(self, u):
        return Mat.from_columns([self.mul(self.basis_vec(j), u) for j in range(self.dim)], self.dim)

    @cached_property
    def left_traces(self):
        """Tr(L_{e_k}) for each basis element."""
        out = []
        for k in range(self.dim):
            t = self.field.zero()
            for j in range(self.dim):
                c = self.mult[k][j].get(j)
                if c:
                    t = t + c
            out.append(t)
        return tuple(out)

    def dense(self):
        z = self.field.zero()
        return [[[self.mult[i][j].get(k, z) for k in range(self.dim)] for j in range(self.dim)] for i in range(self.dim)]

    def label(self, i):
        return self.labels[i] if self.labels else f"e{i}"

    def is_commutative(self):
        return all(self.mult[i][j] == self.mult[j][i] for i in range(self.dim) for j in range(i))


def _sparse_mul(A, row_u, row_v):
    acc = {}
    for i, a in row_u.items():
        for j, b in row_v.items():
            for k, c in A.mult[i][j].items():
                t = a * b * c
                cur = acc.get(k)
                acc[k] = t if cur is None else cur + t
    return {k: v for k, v in acc.items() if v}


def algebra_verify(A):
    """List of violated axioms with witnesses; empty means valid."""
    problems = []
    d = A.dim
    if len(A.unit) != d:
        return [f"unit has length {len(A.unit)}, expected {d}"]
    # associativity on basis triples
    for i in range(d):
        for j in range(d):
            ij = A.mult[i][j]
            for l in range(d):
                left = _sparse_mul(A, ij, {l: A.field.one()})
                right = _sparse_mul(A, {i: A.field.one()}, A.mult[j][l])
                if left != right:
                    problems.append(
                        f"associativity fails on ({A.label(i)}, {A.label(j)}, {A.label(l)})"
                    )
                    if len(problems) > 20:
                        return problems
    for i in range(d):
        e = A.basis_vec(i)
        if A.mul(A.unit, e) != e:
            problems.append(f"unit fails on the left at {A.label(i)}")
        if A.mul(e, A.unit) != e:
            problems.append(f"unit fails on the right at {A.label(i)}")
    return problems


def span_products(A, U, V):
    """Subspace spanned by u v for u in U, v in V."""
    red = RowReducer(A.dim)
    for u in U.basis:
        for v in V.basis:
            red.add(A.mul(u, v))
    return Subspace._from_reducer(red, A.field)


def ideal_closure(A, gens):
    """Smallest two-sided ideal containing gens."""
    red = RowReducer(A.dim)
    todo = [tuple(g) for g in gens if red.add(g)]
    basis = [A.basis_vec(i) for i in range(A.dim)]
    while todo:
        v = todo.pop()
        for e in basis:
            for w in (A.mul(e, v), A.mul(v, e)):
                if red.add(w):
                    todo.append(w)
    return Subspace._from_reducer(red, A.field)


def nilpotency_index(A, I):
    """Least k with I^k = 0, or None when I is not nilpotent."""
    if I.dim == 0:
        return 1
    power = I
    k = 1
    while power.dim:
        nxt = span_products(A, power, I)
        if nxt == power:
            return None
        power = nxt
        k += 1
    return k


def is_two_sided_ideal(A, I):
    for v in I.basis:
        for i in range(A.dim):
            e = A.basis_vec(i)
            if not I.contains(A.mul(e, v)) or not I.contains(A.mul(v, e)):
                return False
    return True


def trace_form_kernel(A):
    t = A.left_traces
    rows = []
    for x in range(A.dim):
        row = {}
        for y in range(A.dim):
            acc = None
            for k, c in A.mult[x][y].items():
                if t[k]:
                    acc = c * t[k] if acc is None else acc + c * t[k]
            if acc:
                row[y] = acc
        rows.append(row)
    return kernel_sparse(rows, A.dim, A.field)


def radical(A):
    """Jacobson radical via the trace form (characteristic zero)."""
    R = trace_form_kernel(A)
    if not is_two_sided_ideal(A, R):
        raise AlgebraError("trace-form kernel is not an ideal; input is not associative")
    if nilpotency_index(A, R) is None:
        raise AlgebraError("trace-form kernel is not nilpotent")
    return R


@dataclass(frozen=True, eq=False)
class Quotient:
    """A / I with basis the images of the non-pivot basis vectors of I."""

    parent: StructAlgebra
    ideal: Subspace
    algebra: StructAlgebra
    columns: tuple

    def project(self, v):
        red = self.ideal.reduce(v, self.parent.field)
        return tuple(red[c] for c in self.columns)

    def lift(self, w):
        out = list(self.parent.zero())
        for c, a in zip(self.columns, w):
            out[c] = a
        return tuple(out)


def quotient(A, I):
    cols = tuple(I.complement_columns())
    F = A.field
    entries = []
    for a, ca in enumerate(cols):
        for b, cb in enumerate(cols):
            red = I.reduce(A.mul_basis(ca, cb), F)
            for k, c in enumerate(cols):
                if red[c]:
                    entries.append((a, b, k, red[c]))
    unit_red = I.reduce(A.unit, F)
    unit = tuple(unit_red[c] for c in cols)
    labels = tuple(A.label(c) for c in cols) if A.labels else None
    Q = StructAlgebra.from_entries(F, len(cols), entries, unit, labels)
    return Quotient(A, I, Q, cols)


def center(A):
    rows = []
    for j in range(A.dim):
        # coefficient equations for x e_j - e_j x = 0
        eq = [dict() for _ in range(A.dim)]
        for i in range(A.dim):
            for k, c in A.mult[i][j].items():
                eq[k][i] = eq[k].get(i, A.field.zero()) + c
            for k, c in A.mult[j][i].items():
                eq[k][i] = eq[k].get(i, A.field.zero()) - c
        rows.extend({i: c for i, c in r.items() if c} for r in eq)
    return kernel_sparse([r for r in rows if r], A.dim, A.field)


def minimal_polynomial(A, z, unit=None):
    """Minimal polynomial of z inside the algebra with the given unit.

    Also returns the list of powers unit, z, z^2, ...
    """
    unit = A.unit if unit is None else unit
    F = A.field
    n = A.dim
    # columns n + k tag the power z^k, so a row that reduces to tags only
    # is a linear relation among the powers
    red = RowReducer(2 * n + 2)
    powers = []
    cur = tuple(unit)
    while True:
        k = len(powers)
        if k > n:
            raise AlgebraError("minimal polynomial degree exceeds dimension")
        row = to_sparse(cur)
        row[n + k] = F.one()
        row = red.reduce(row)
        if min(row) >= n:
            lead = row[n + k]
            coeffs = [row.get(n + j, F.zero()) / lead for j in range(k + 1)]
            return CycPoly(coeffs, F.degree), powers
        red.add(row)
        powers.append(cur)
        cur = A.mul(cur, z)


def _eval_on_powers(poly, powers, F, n):
    return vec_comb(zip(poly.coeffs, powers), n, F)


def lagrange_idempotents(A, z, unit=None):
    """Split unit along the eigenvalues of z.

    Returns (idempotents, certified). certified is False when the minimal
    polynomial has roots outside the field or repeated roots.
    """
    F = A.field
    p, powers = minimal_polynomial(A, z, unit)
    roots, complete = verified_roots(p)
    if not complete or any(m != 1 for m in roots.values()):
        return [], False
    rs = list(roots)
    out = []
    for i, r in enumerate(rs):
        L = CycPoly([1], F.degree)
        for j, s in enumerate(rs):
            if j != i:
                L = L * CycPoly([-s / (r - s), (r - s).inv()], F.degree)
        out.append(_eval_on_powers(L, powers, F, A.dim))
    return out, True


def _candidate_elements(space, F, seed, n):
    """One generic combination, the basis elements, then more random combinations.

    A generic element usually separates every primitive idempotent at once.
    """
    rng = random.Random(seed)

    def mix():
        coeffs = [F(rng.randint(-MAX_COEFF, MAX_COEFF)) for _ in space.basis]
        return vec_comb(zip(coeffs, space.basis), n, F)

    yield mix()
    for v in space.basis:
        yield v
    for _ in range(MAX_SPLIT_ATTEMPTS):
        yield mix()


def _corner(A, e, space):
    """Subspace e * space, for e an idempotent of the commutative subalgebra space."""
    red = RowReducer(A.dim)
    for v in space.basis:
        red.add(A.mul(e, v))
    return Subspace._from_reducer(red, A.field)


def split_commutative(A, Z, seed=0):
    """Primitive idempotents of a commutative semisimple subalgebra Z.

    Returns (idempotents, split_ok).
    """
    F = A.field
    done = []
    todo = [A.unit]
    ok = True
    while todo:
        if len(done) + len(todo) == Z.dim:
            # Z has at most dim Z orthogonal idempotents, so these are primitive
            done.extend(todo)
            break
        e = todo.pop()
        eZ = _corner(A, e, Z)
        if eZ.dim <= 1:
            done.append(e)
            continue
        pieces = None
        for z in _candidate_elements(eZ, F, seed, A.dim):
            idems, cert = lagrange_idempotents(A, z, e)
            if cert and len(idems) > 1:
                pieces = idems
                break
        if pieces is None:
            ok = False
            done.append(e)
        else:
            todo.extend(pieces)
    done.sort(key=lambda v: tuple(a.sort_key() for a in v))
    return done, ok


@dataclass(frozen=True, eq=False)
class WedderburnData:
    radical: Subspace
    block_sizes: tuple
    central_idempotents: list  # in the semisimple quotient
    split: bool
    quotient: Quotient = None
    diagnostic: str = ""
    block_dims: tuple = dc_field(default=())

    @property
    def semisimple(self):
        return self.radical.dim == 0

    def lifted_idempotents(self):
        return [self.quotient.lift(e) for e in self.central_idempotents]


def wedderburn(A, seed=0):
    cached = A.__dict__.get("_wedderburn")
    if cached is not None and seed == 0:
        return cached
    R = radical(A)
    Q = quotient(A, R)
    B = Q.algebra
    Z = center(B)
    idems, ok = split_commutative(B, Z, seed)
    sizes = []
    dims = []
    diag = "" if ok else "center did not split over the field"
    for e in idems:
        eB = Subspace.from_vectors(B.dim, [B.mul(e, B.basis_vec(j)) for j in range(B.dim)], B.field)
        dims.append(eB.dim)
        n = math.isqrt(eB.dim)
        if n * n != eB.dim:
            ok = False
            diag = diag or f"block of dimension {eB.dim} is not a full matrix algebra"
        sizes.append(n)
    order = sorted(range(len(idems)), key=lambda i: sizes[i])
    W = WedderburnData(
        R,
        tuple(sizes[i] for i in order),
        [idems[i] for i in order],
        ok,
        Q,
        diag,
        tuple(dims[i] for i in order),
    )
    if seed == 0:
        object.__setattr__(A, "_wedderburn", W)
    return W


class CharacterList(list):
    """List of characters with a completeness flag."""

    complete = True


def commutator_ideal(A):
    gens = []
    for i in range(A.dim):
        for j in range(i):
            if A.mult[i][j] != A.mult[j][i]:
                gens.append(tuple(a - b for a, b in zip(A.mul_basis(i, j), A.mul_basis(j, i))))
    return ideal_closure(A, gens)


def is_character(A, chi):
    F = A.field
    if sum((c * u for c, u in zip(chi, A.unit)), F.zero()) != F.one():
        return False
    for i in range(A.dim):
        for j in range(A.dim):
            lhs = chi[i] * chi[j]
            rhs = F.zero()
            for k, c in A.mult[i][j].items():
                rhs = rhs + c * chi[k]
            if lhs != rhs:
                return False
    return True


def characters(A, seed=0):
    """All algebra maps A -> k, as value vectors on the basis."""
    cached = A.__dict__.get("_characters")
    if cached is not None and seed == 0:
        out = CharacterList(cached)
        out.complete = cached.complete
        return out
    F = A.field
    comm = commutator_ideal(A)
    if comm.dim == 0:
        # commutative: the Wedderburn idempotents are the character idempotents
        W = wedderburn(A, seed)
        ss, idems, ok = W.quotient, W.central_idempotents, W.split
        project = ss.project
    else:
        ab = quotient(A, comm)
        C = ab.algebra
        ss = quotient(C, radical(C))
        idems, ok = split_commutative(ss.algebra, Subspace.full(ss.algebra.dim, F), seed)

        def project(v):
            return ss.project(ab.project(v))

    S = ss.algebra
    out = CharacterList()
    for e in idems:
        # chi(s) is the scalar with s e = chi(s) e
        p = next(k for k, a in enumerate(e) if a)
        values = []
        for k in range(A.dim):
            s = project(A.basis_vec(k))
            se = S.mul(s, e)
            values.append(se[p] / e[p])
        chi = tuple(values)
        if not is_character(A, chi):
            ok = False
            continue
        out.append(chi)
    out.sort(key=lambda v: tuple(a.sort_key() for a in v))
    out.complete = ok
    if seed == 0:
        keep = CharacterList(out)
        keep.complete = ok
        object.__setattr__(A, "_characters", keep)
    return out


@dataclass(frozen=True, eq=False)
class Representation:
    """rho[k] is the matrix of the basis element e_k."""

    dim: int
    matrices: tuple

    def __call__(self, v, field):
        acc = Mat.zeros(field, self.dim, self.dim)
        for c, M in zip(v, self.matrices):
            if c:
                acc = acc + M.scale(c)
        return acc


def is_representation(A, rho):
    for i in range(A.dim):
        for j in range(A.dim):
            lhs = rho.matrices[i] @ rho.matrices[j]
            if lhs != rho(A.mul_basis(i, j), A.field):
                return False
    return rho(A.unit, A.field).is_identity()


def is_irreducible(A, rho):
    """Burnside: irreducible over a split field iff rho(A) is all of M_n."""
    n = rho.dim
    red = RowReducer(n * n)
    for M in rho.matrices:
        red.add(tuple(a for row in M.rows for a in row))
    return red.dim == n * n


def _left_ideal(B, v):
    red = RowReducer(B.dim)
    for j in range(B.dim):
        red.add(B.mul(B.basis_vec(j), v))
    return Subspace._from_reducer(red, B.field)


def _two_sided_corner(B, f):
    """Subspace f B f."""
    red = RowReducer(B.dim)
    for j in range(B.dim):
        red.add(B.mul(B.mul(f, B.basis_vec(j)), f))
    return Subspace._from_reducer(red, B.field)


def _primitive_in_block(B, e, n, seed):
    """An idempotent f <= e with dim(B f) = n, by repeated splitting."""
    F = B.field
    f = e
    while True:
        corner = _two_sided_corner(B, f)
        if corner.dim <= 1:
            return f
        found = None
        for z in _candidate_elements(corner, F, seed, B.dim):
            idems, cert = lagrange_idempotents(B, z, f)
            if cert and len(idems) > 1:
                found = min(idems, key=lambda g: _left_ideal(B, g).dim)
                break
        if found is None:
            return None
        f = found


def simple_modules(A, seed=0, wd=None):
    wd = wedderburn(A, seed) if wd is None else wd
    if not wd.split:
        raise AlgebraError(f"algebra is not split: {wd.diagnostic}")
    Q = wd.quotient
    B = Q.algebra
    F = A.field
    mods = []
    for e, n in zip(wd.central_idempotents, wd.block_sizes):
        eB = Subspace.from_vectors(B.dim, [B.mul(e, B.basis_vec(j)) for j in range(B.dim)], F)
        best = None
        for v in eB.basis:
            L = _left_ideal(B, v)
            if L.dim and (best is None or L.dim < best.dim):
                best = L
        if best is None or best.dim != n:
            f = _primitive_in_block(B, e, n, seed)
            if f is None:
                raise AlgebraError("could not find a minimal left ideal")
            best = _left_ideal(B, f)
        mats = []
        for k in range(A.dim):
            s = Q.project(A.basis_vec(k))
            cols = [best.coords(B.mul(s, u)) for u in best.basis]
            mats.append(Mat.from_columns(cols, best.dim))
        rho = Representation(best.dim, tuple(mats))
        if not is_irreducible(A, rho):
            raise AlgebraError("constructed module is reducible")
        mods.append(rho)
    return mods


def subalgebra_generated(A, gens):
    red = RowReducer(A.dim)
    red.add(A.unit)
    todo = [A.unit]
    gens = [tuple(g) for g in gens]
    while todo:
        v = todo.pop()
        for g in gens:
            w = A.mul(v, g)
            if red.add(w):
                todo.append(w)
    return Subspace._from_reducer(red, A.field)


def restrict_algebra(A, U):
    """Structure constants of a subalgebra U in its RREF basis."""
    entries = []
    for a, u in enumerate(U.basis):
        for b, v in enumerate(U.basis):
            for k, c in enumerate(U.coords(A.mul(u, v))):
                if c:
                    entries.append((a, b, k, c))
    return StructAlgebra.from_entries(A.field, U.dim, entries, U.coords(A.unit))


__all__ = [
    "StructAlgebra",
    "WedderburnData",
    "Representation",
    "AlgebraError",
    "algebra_verify",
    "radical",
    "quotient",
    "wedderburn",
    "characters",
    "simple_modules",
    "ideal_closure",
    "nilpotency_index",
    "center",
    "minimal_polynomial",
    "subalgebra_generated",
]
