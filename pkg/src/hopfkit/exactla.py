"""Exact linear algebra over Q(zeta_N): RREF, solving, canonical subspaces.

Vectors are tuples of CycScalar. Elimination works on sparse rows
(dicts column -> scalar) since structure-constant systems are very sparse;
the public types are dense.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cyclo import CycScalar

_ZERO = CycScalar.rational(0, 1)


class ShapeError(ValueError):
    pass


def zero_vec(field, n):
    z = field.zero()
    return (z,) * n


def unit_vec(field, n, i):
    z, o = field.zero(), field.one()
    return tuple(o if k == i else z for k in range(n))


def vec_add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c, u):
    return tuple(c * a for a in u)


def vec_comb(pairs, n, field):
    """Sum of c * v over (c, v) pairs."""
    acc = [field.zero()] * n
    for c, v in pairs:
        if not c:
            continue
        for k, a in enumerate(v):
            if a:
                acc[k] = acc[k] + c * a
    return tuple(acc)


def is_zero_vec(v):
    return not any(v)


def to_sparse(v):
    return {k: a for k, a in enumerate(v) if a}


def to_dense(row, n, field):
    z = field.zero()
    return tuple(row.get(k, z) for k in range(n))


def _axpy(row, c, other):
    """row += c * other (in place, sparse)."""
    for k, a in other.items():
        val = row.get(k)
        new = c * a if val is None else val + c * a
        if new:
            row[k] = new
        elif val is not None:
            del row[k]


class RowReducer:
    """Incrementally maintained reduced row-echelon basis of a span."""

    def __init__(self, ncols):
        self.ncols = ncols
        self.rows = {}  # pivot column -> sparse row with 1 at pivot

    def reduce(self, row):
        row = dict(row)
        for p in [k for k in row if k in self.rows]:
            c = row.get(p)
            if c:
                _axpy(row, -c, self.rows[p])
        return row

    def add(self, vec_or_row):
        """Add a vector; return True if it enlarged the span."""
        row = vec_or_row if isinstance(vec_or_row, dict) else to_sparse(vec_or_row)
        row = self.reduce(row)
        if not row:
            return False
        p = min(row)
        inv = row[p].inv()
        row = {k: a * inv for k, a in row.items()}
        for q, other in self.rows.items():
            c = other.get(p)
            if c:
                _axpy(other, -c, row)
        self.rows[p] = row
        return True

    def contains(self, vec):
        return not self.reduce(to_sparse(vec))

    @property
    def dim(self):
        return len(self.rows)

    def pivots(self):
        return sorted(self.rows)

    def basis(self, field):
        return tuple(to_dense(self.rows[p], self.ncols, field) for p in sorted(self.rows))


def rref_sparse(rows, ncols):
    red = RowReducer(ncols)
    for r in rows:
        red.add(r)
    return red


def kernel_sparse(rows, ncols, field):
    """Basis (RREF) of {x : r . x = 0 for all rows r}."""
    red = rref_sparse(rows, ncols)
    pivots = set(red.rows)
    basis = []
    for f in range(ncols):
        if f in pivots:
            continue
        v = [field.zero()] * ncols
        v[f] = field.one()
        for p, row in red.rows.items():
            c = row.get(f)
            if c:
                v[p] = -c
        basis.append(tuple(v))
    return Subspace.from_vectors(ncols, basis, field)


def solve_sparse(rows, rhs, ncols, field):
    """Solve rows . x = rhs. Returns (particular or None, kernel Subspace)."""
    aug = []
    for r, b in zip(rows, rhs):
        row = dict(r)
        if b:
            row[ncols] = b
        aug.append(row)
    red = rref_sparse(aug, ncols + 1)
    kernel = kernel_sparse(rows, ncols, field)
    if ncols in red.rows:
        return None, kernel
    x = [field.zero()] * ncols
    for p, row in red.rows.items():
        x[p] = row.get(ncols, field.zero())
    return tuple(x), kernel


@dataclass(frozen=True)
class Mat:
    """Dense matrix; acts on column vectors."""

    rows: tuple
    nrows: int
    ncols: int

    @classmethod
    def from_rows(cls, rows, ncols=None):
        rows = tuple(tuple(r) for r in rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ShapeError("ragged matrix")
        return cls(rows, len(rows), ncols)

    @classmethod
    def from_columns(cls, cols, nrows):
        cols = list(cols)
        return cls.from_rows([tuple(c[i] for c in cols) for i in range(nrows)], len(cols))

    @classmethod
    def identity(cls, field, n):
        return cls.from_rows([unit_vec(field, n, i) for i in range(n)], n)

    @classmethod
    def zeros(cls, field, m, n):
        return cls.from_rows([zero_vec(field, n) for _ in range(m)], n)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j):
        return tuple(r[j] for r in self.rows)

    def columns(self):
        return [self.column(j) for j in range(self.ncols)]

    def transpose(self):
        return Mat.from_rows(self.columns(), self.nrows)

    def apply(self, v):
        if len(v) != self.ncols:
            raise ShapeError(f"vector of length {len(v)} for matrix with {self.ncols} columns")
        sv = [(k, a) for k, a in enumerate(v) if a]
        zero = v[0] * 0 if v else _ZERO
        out = []
        for r in self.rows:
            acc = None
            for k, a in sv:
                b = r[k]
                if b:
                    acc = a * b if acc is None else acc + a * b
            out.append(zero if acc is None else acc)
        return tuple(out)

    def __matmul__(self, other):
        if isinstance(other, Mat):
            if self.ncols != other.nrows:
                raise ShapeError(f"cannot multiply {self.shape} by {other.shape}")
            cols = [self.apply(c) for c in other.columns()]
            return Mat.from_columns(cols, self.nrows)
        return self.apply(other)

    def __add__(self, other):
        return Mat.from_rows([vec_add(a, b) for a, b in zip(self.rows, other.rows)], self.ncols)

    def __sub__(self, other):
        return Mat.from_rows([vec_sub(a, b) for a, b in zip(self.rows, other.rows)], self.ncols)

    def scale(self, c):
        return Mat.from_rows([vec_scale(c, r) for r in self.rows], self.ncols)

    def rank(self):
        return rref_sparse([to_sparse(r) for r in self.rows], self.ncols).dim

    def kernel(self, field):
        return kernel_sparse([to_sparse(r) for r in self.rows], self.ncols, field)

    def image(self, field):
        return Subspace.from_vectors(self.nrows, self.columns(), field)

    def inverse(self, field):
        if self.nrows != self.ncols:
            raise ShapeError("inverse of a non-square matrix")
        n = self.nrows
        cols = []
        rows = [to_sparse(r) for r in self.rows]
        for j in range(n):
            e = unit_vec(field, n, j)
            x, ker = solve_sparse(rows, e, n, field)
            if x is None or ker.dim:
                raise ZeroDivisionError("singular matrix")
            cols.append(x)
        return Mat.from_columns(cols, n)

    def is_identity(self):
        return all(
            (a.is_one() if i == j else not a) for i, r in enumerate(self.rows) for j, a in enumerate(r)
        )

    def power(self, k, field):
        out = Mat.identity(field, self.nrows)
        for _ in range(k):
            out = self @ out
        return out

    def to_text(self):
        return [[a.to_text() for a in r] for r in self.rows]

    @classmethod
    def from_text(cls, rows, field):
        return cls.from_rows([[field.from_text(a) for a in r] for r in rows])


def linear_solve(A, b, field):
    """Solve A x = b. b is a vector or a one-column Mat."""
    if isinstance(b, Mat):
        if b.ncols != 1:
            raise ShapeError("right-hand side must be a single column")
        b = b.column(0)
    if len(b) != A.nrows:
        raise ShapeError(f"right-hand side has {len(b)} entries, matrix has {A.nrows} rows")
    return solve_sparse([to_sparse(r) for r in A.rows], b, A.ncols, field)


@dataclass(frozen=True)
class Subspace:
    """Subspace of k^n, stored by its canonical RREF basis."""

    ambient_dim: int
    basis: tuple
    pivots: tuple

    @classmethod
    def from_vectors(cls, n, vectors, field):
        red = RowReducer(n)
        for v in vectors:
            if len(v) != n:
                raise ShapeError(f"vector of length {len(v)} in ambient dimension {n}")
            red.add(v)
        return cls._from_reducer(red, field)

    @classmethod
    def _from_reducer(cls, red, field):
        return cls(red.ncols, red.basis(field), tuple(red.pivots()))

    @classmethod
    def zero(cls, n):
        return cls(n, (), ())

    @classmethod
    def full(cls, n, field):
        return cls.from_vectors(n, [unit_vec(field, n, i) for i in range(n)], field)

    @property
    def dim(self):
        return len(self.basis)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def reducer(self):
        red = RowReducer(self.ambient_dim)
        for p, v in zip(self.pivots, self.basis):
            red.rows[p] = to_sparse(v)
        return red

    def contains(self, v):
        return self.reducer().contains(v)

    def contains_space(self, other):
        red = self.reducer()
        return all(red.contains(v) for v in other.basis)

    def coords(self, v):
        """Coordinates of v (assumed in the subspace) in the RREF basis."""
        return tuple(v[p] for p in self.pivots)

    def from_coords(self, c, field):
        return vec_comb(zip(c, self.basis), self.ambient_dim, field)

    def _check(self, other):
        if self.ambient_dim != other.ambient_dim:
            raise ShapeError(f"ambient dimensions differ: {self.ambient_dim} vs {other.ambient_dim}")

    def sum(self, other, field):
        self._check(other)
        red = self.reducer()
        for v in other.basis:
            red.add(v)
        return Subspace._from_reducer(red, field)

    def annihilator(self, field, pairing=None):
        """{f : <f, u> = 0 for u in self}; pairing[i][j] = <e_i*, e_j>."""
        n = self.ambient_dim
        rows = []
        for u in self.basis:
            w = u if pairing is None else pairing.apply(u)
            rows.append(to_sparse(w))
        if pairing is not None:
            return kernel_sparse(rows, pairing.nrows, field)
        return kernel_sparse(rows, n, field)

    def intersect(self, other, field):
        self._check(other)
        if not self.dim or not other.dim:
            return Subspace.zero(self.ambient_dim)
        eqs = other.annihilator(field)
        # coefficients a with sum a_i u_i in other
        rows = []
        for f in eqs.basis:
            rows.append(to_sparse(tuple(sum_dot(f, u, field) for u in self.basis)))
        coeff = kernel_sparse(rows, self.dim, field)
        return Subspace.from_vectors(
            self.ambient_dim, [self.from_coords(c, field) for c in coeff.basis], field
        )

    def image_under(self, M, field):
        if M.ncols != self.ambient_dim:
            raise ShapeError("matrix does not act on this space")
        return Subspace.from_vectors(M.nrows, [M.apply(u) for u in self.basis], field)

    def preimage_under(self, M, field):
        if M.nrows != self.ambient_dim:
            raise ShapeError("matrix does not map into this space")
        eqs = self.annihilator(field)
        rows = []
        for f in eqs.basis:
            rows.append(to_sparse(tuple(sum_dot(f, M.column(j), field) for j in range(M.ncols))))
        return kernel_sparse(rows, M.ncols, field)

    def complement_columns(self):
        """Standard basis indices spanning a complement (the non-pivot columns)."""
        piv = set(self.pivots)
        return [k for k in range(self.ambient_dim) if k not in piv]

    def reduce(self, v, field):
        """Normal form of v modulo the subspace (zero on pivot columns)."""
        return to_dense(self.reducer().reduce(to_sparse(v)), self.ambient_dim, field)


def sum_dot(u, v, field):
    acc = field.zero()
    for a, b in zip(u, v):
        if a and b:
            acc = acc + a * b
    return acc


def subspace_calculus(U, V, op, field, matrix=None):
    """Dispatch helper for the documented subspace operations."""
    if op == "sum":
        return U.sum(V, field)
    if op == "intersect":
        return U.intersect(V, field)
    if op == "image_under":
        return U.image_under(matrix, field)
    if op == "preimage_under":
        return U.preimage_under(matrix, field)
    if op == "annihilator":
        return U.annihilator(field, pairing=matrix)
    raise ValueError(f"unknown subspace op {op!r}")


__all__ = [
    "Mat",
    "Subspace",
    "RowReducer",
    "ShapeError",
    "linear_solve",
    "solve_sparse",
    "kernel_sparse",
    "subspace_calculus",
    "CycScalar",
]
