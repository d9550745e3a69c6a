"""Hopf algebras by structure constants: axioms, antipode, duals, tensor products."""

from __future__ import annotations

from dataclasses import dataclass

from ..algebra import StructAlgebra, algebra_verify
from ..exactla import Mat, solve_sparse, unit_vec, zero_vec


class HopfError(ValueError):
    pass


def _acc(d, key, val):
    cur = d.get(key)
    new = val if cur is None else cur + val
    if new:
        d[key] = new
    else:
        d.pop(key, None)


@dataclass(frozen=True, eq=False)
class HopfAlgebra:
    """comult[k] is a dict (i, j) -> c with Delta(e_k) = sum c e_i (x) e_j."""

    alg: StructAlgebra
    comult: tuple
    counit: tuple
    antipode: Mat
    name: str = ""

    @property
    def field(self):
        return self.alg.field

    @property
    def dim(self):
        return self.alg.dim

    @property
    def labels(self):
        return self.alg.labels or tuple(f"e{i}" for i in range(self.dim))

    @property
    def unit(self):
        return self.alg.unit

    def mul(self, u, v):
        return self.alg.mul(u, v)

    def basis_vec(self, i):
        return unit_vec(self.field, self.dim, i)

    def zero(self):
        return zero_vec(self.field, self.dim)

    def delta(self, v):
        out = {}
        for k, a in enumerate(v):
            if a:
                for ij, c in self.comult[k].items():
                    _acc(out, ij, a * c)
        return out

    def eps(self, v):
        acc = self.field.zero()
        for a, e in zip(v, self.counit):
            if a and e:
                acc = acc + a * e
        return acc

    def S(self, v):
        return self.antipode.apply(v)

    def tensor_dense(self, t):
        """Sparse tensor as a dim x dim coefficient matrix."""
        rows = [list(self.zero()) for _ in range(self.dim)]
        for (i, j), c in t.items():
            rows[i][j] = c
        return Mat.from_rows(rows, self.dim)

    def element_text(self, v):
        parts = []
        for a, lab in zip(v, self.labels):
            if a.is_one():
                parts.append(lab)
            elif (-a).is_one():
                parts.append(f"-{lab}")
            elif a:
                parts.append(f"({a.pretty()})*{lab}")
        return " + ".join(parts).replace("+ -", "- ") or "0"


def tensor_of(u, v):
    out = {}
    for i, a in enumerate(u):
        if a:
            for j, b in enumerate(v):
                if b:
                    out[(i, j)] = a * b
    return out


def tensor_add(s, t, c=1):
    out = dict(s)
    for k, v in t.items():
        _acc(out, k, c * v)
    return out


def tensor_mul(A, s, t):
    """Product in A (x) A of sparse tensors."""
    out = {}
    for (i1, j1), a in s.items():
        for (i2, j2), b in t.items():
            ab = a * b
            left = A.mult[i1][i2]
            right = A.mult[j1][j2]
            for k, c in left.items():
                abc = ab * c
                for l, e in right.items():
                    _acc(out, (k, l), abc * e)
    return out


def tensor_map(t, M, N=None):
    """(M (x) N) applied to a sparse tensor."""
    N = M if N is None else N
    out = {}
    colsM = {}
    colsN = {}
    for (i, j), c in t.items():
        if i not in colsM:
            colsM[i] = [(a, x) for a, x in enumerate(M.column(i)) if x]
        if j not in colsN:
            colsN[j] = [(b, y) for b, y in enumerate(N.column(j)) if y]
        for a, x in colsM[i]:
            cx = c * x
            for b, y in colsN[j]:
                _acc(out, (a, b), cx * y)
    return out


def verify_bialgebra(alg, comult, counit):
    """Violations of the bialgebra axioms, with witnesses."""
    F = alg.field
    d = alg.dim
    one = F.one()
    problems = []

    # coassociativity
    for k in range(d):
        left = {}
        right = {}
        for (i, j), c in comult[k].items():
            for (a, b), e in comult[i].items():
                _acc(left, (a, b, j), c * e)
            for (a, b), e in comult[j].items():
                _acc(right, (i, a, b), c * e)
        if left != right:
            problems.append(f"coassociativity fails at {alg.label(k)}")
    # counit
    for k in range(d):
        l = [F.zero()] * d
        r = [F.zero()] * d
        for (i, j), c in comult[k].items():
            if counit[i]:
                l[j] = l[j] + c * counit[i]
            if counit[j]:
                r[i] = r[i] + c * counit[j]
        e = unit_vec(F, d, k)
        if tuple(l) != e or tuple(r) != e:
            problems.append(f"counit axiom fails at {alg.label(k)}")
    # Delta and eps multiplicative
    unit_t = {}
    for i, a in enumerate(alg.unit):
        if a:
            for ij, c in comult[i].items():
                _acc(unit_t, ij, a * c)
    u = {}
    for i, a in enumerate(alg.unit):
        for j, b in enumerate(alg.unit):
            if a and b:
                u[(i, j)] = a * b
    if unit_t != u:
        problems.append("Delta(1) != 1 (x) 1")
    if sum((a * e for a, e in zip(alg.unit, counit)), F.zero()) != one:
        problems.append("eps(1) != 1")
    for i in range(d):
        for j in range(d):
            prod = {}
            eps_prod = F.zero()
            for k, c in alg.mult[i][j].items():
                for ab, e in comult[k].items():
                    _acc(prod, ab, c * e)
                eps_prod = eps_prod + c * counit[k]
            if prod != tensor_mul(alg, comult[i], comult[j]):
                problems.append(f"Delta not multiplicative on ({alg.label(i)}, {alg.label(j)})")
            if eps_prod != counit[i] * counit[j]:
                problems.append(f"eps not multiplicative on ({alg.label(i)}, {alg.label(j)})")
            if len(problems) > 20:
                return problems
    return problems


def _convolution_id(alg, comult, S, side):
    """m(S (x) id)Delta (side='left') or m(id (x) S)Delta applied to each basis element."""
    out = []
    for k in range(alg.dim):
        acc = alg.zero()
        for (i, j), c in comult[k].items():
            if side == "left":
                p = alg.mul(S.column(i), alg.basis_vec(j))
            else:
                p = alg.mul(alg.basis_vec(i), S.column(j))
            acc = tuple(x + c * y for x, y in zip(acc, p))
        out.append(acc)
    return out


def solve_antipode(alg, comult, counit):
    """Solve m(S (x) id)Delta = u eps for S; None when no solution."""
    F = alg.field
    d = alg.dim
    # unknown s[a][i] at index a*d + i, meaning S(e_i) has coefficient s[a][i] on e_a
    rows = {}
    for k in range(d):
        for (i, j), c in comult[k].items():
            for a in range(d):
                for l, m in alg.mult[a][j].items():
                    row = rows.setdefault((k, l), {})
                    _acc(row, a * d + i, c * m)
    keys = [(k, l) for k in range(d) for l in range(d)]
    rhs = [counit[k] * alg.unit[l] for k, l in keys]
    sol, ker = solve_sparse([rows.get(key, {}) for key in keys], rhs, d * d, F)
    if sol is None:
        return None
    return Mat.from_rows([[sol[a * d + i] for i in range(d)] for a in range(d)], d)


def antipode_problems(alg, comult, counit, S):
    problems = []
    for side in ("left", "right"):
        vals = _convolution_id(alg, comult, S, side)
        for k, v in enumerate(vals):
            want = tuple(counit[k] * u for u in alg.unit)
            if v != want:
                problems.append(f"{side} antipode equation fails at {alg.label(k)}")
                break
    if S.rank() != alg.dim:
        problems.append("antipode is not bijective")
    return problems


def hopf_problems(H):
    """Axiom failures of an already constructed HopfAlgebra."""
    return (
        algebra_verify(H.alg)
        + verify_bialgebra(H.alg, H.comult, H.counit)
        + antipode_problems(H.alg, H.comult, H.counit, H.antipode)
    )


def make_hopf(alg, comult, counit, antipode=None, name="", check=True):
    """Build a HopfAlgebra, verifying every axiom unless check is False.

    check=False is for constructions that preserve the axioms (duals, tensor
    products of verified inputs); hopf_problems re-verifies on demand.
    """
    if not check:
        comult = tuple(dict(t) for t in comult)
        counit = tuple(alg.field(c) for c in counit)
        return HopfAlgebra(alg, comult, counit, antipode, name)
    problems = algebra_verify(alg)
    if problems:
        raise HopfError("algebra axioms fail: " + problems[0])
    comult = tuple(dict(t) for t in comult)
    counit = tuple(alg.field(c) for c in counit)
    problems = verify_bialgebra(alg, comult, counit)
    if problems:
        raise HopfError("bialgebra axioms fail: " + problems[0])
    if antipode is None:
        antipode = solve_antipode(alg, comult, counit)
        if antipode is None:
            raise HopfError("no antipode: the bialgebra is not a Hopf algebra")
    problems = antipode_problems(alg, comult, counit, antipode)
    if problems:
        raise HopfError(problems[0])
    return HopfAlgebra(alg, comult, counit, antipode, name)


def dual(H):
    """Dual Hopf algebra in the dual basis (tensors transposed)."""
    cached = H.__dict__.get("_dual")
    if cached is not None:
        return cached
    d = H.dim
    F = H.field
    entries = []
    for k in range(d):
        for (i, j), c in H.comult[k].items():
            entries.append((i, j, k, c))
    labels = tuple(f"{lab}*" if not lab.endswith("*") else lab[:-1] for lab in H.labels)
    alg = StructAlgebra.from_entries(F, d, entries, H.counit, labels)
    comult = [dict() for _ in range(d)]
    for i in range(d):
        for j in range(d):
            for k, c in H.alg.mult[i][j].items():
                comult[k][(i, j)] = c
    name = H.name[:-1] if H.name.endswith("*") else (H.name + "*" if H.name else "")
    D = make_hopf(alg, comult, H.unit, H.antipode.transpose(), name, check=False)
    object.__setattr__(H, "_dual", D)
    return D


def tensor_product(H, K):
    """H (x) K on the H-major basis e_i (x) f_j -> index i*dim K + j."""
    F = H.field
    dk = K.dim
    d = H.dim * dk
    entries = []
    for i1 in range(H.dim):
        for j1 in range(dk):
            for i2 in range(H.dim):
                for j2 in range(dk):
                    for k, a in H.alg.mult[i1][i2].items():
                        for l, b in K.alg.mult[j1][j2].items():
                            entries.append((i1 * dk + j1, i2 * dk + j2, k * dk + l, a * b))
    unit = tuple(a * b for a in H.unit for b in K.unit)
    labels = tuple(f"{a}|{b}" for a in H.labels for b in K.labels)
    alg = StructAlgebra.from_entries(F, d, entries, unit, labels)
    comult = []
    for i in range(H.dim):
        for j in range(dk):
            t = {}
            for (a, b), c in H.comult[i].items():
                for (p, q), e in K.comult[j].items():
                    _acc(t, (a * dk + p, b * dk + q), c * e)
            comult.append(t)
    counit = tuple(a * b for a in H.counit for b in K.counit)
    S = Mat.from_rows(
        [
            [H.antipode[a, i] * K.antipode[p, j] for i in range(H.dim) for j in range(dk)]
            for a in range(H.dim)
            for p in range(dk)
        ],
        d,
    )
    name = f"{H.name}(x){K.name}" if H.name and K.name else ""
    return make_hopf(alg, comult, counit, S, name)


def tensors_equal(H, K):
    return (
        H.dim == K.dim
        and all(H.alg.mult[i][j] == K.alg.mult[i][j] for i in range(H.dim) for j in range(H.dim))
        and H.unit == K.unit
        and all(H.comult[k] == K.comult[k] for k in range(H.dim))
        and H.counit == K.counit
        and H.antipode == K.antipode
    )


def in_tensor_square(t, U, d, field):
    """Whether the sparse tensor t lies in U (x) U."""
    rows = {}
    cols = {}
    for (i, j), c in t.items():
        rows.setdefault(i, {})[j] = c
        cols.setdefault(j, {})[i] = c
    z = field.zero()
    for part in (rows, cols):
        for vec in part.values():
            if not U.contains(tuple(vec.get(k, z) for k in range(d))):
                return False
    return True


def restrict_hopf(H, U, name=""):
    """Structure of a Hopf subalgebra U in its RREF basis."""
    F = H.field
    piv = U.pivots
    entries = []
    for a, u in enumerate(U.basis):
        for b, v in enumerate(U.basis):
            for k, c in enumerate(U.coords(H.mul(u, v))):
                if c:
                    entries.append((a, b, k, c))
    labels = tuple(_short_label(H, u) for u in U.basis)
    alg = StructAlgebra.from_entries(F, U.dim, entries, U.coords(H.unit), labels)
    pos = {p: a for a, p in enumerate(piv)}
    comult = []
    for u in U.basis:
        t = H.delta(u)
        if not in_tensor_square(t, U, H.dim, F):
            raise HopfError("subspace is not a subcoalgebra")
        comult.append({(pos[i], pos[j]): c for (i, j), c in t.items() if i in pos and j in pos})
    counit = tuple(H.eps(u) for u in U.basis)
    S = Mat.from_columns([U.coords(H.S(u)) for u in U.basis], U.dim)
    return make_hopf(alg, comult, counit, S, name)


def _short_label(H, v):
    nz = [(a, lab) for a, lab in zip(v, H.labels) if a]
    if len(nz) == 1 and nz[0][0].is_one():
        return nz[0][1]
    return "+".join(f"{a!r}{lab}" for a, lab in nz)


__all__ = [
    "HopfAlgebra",
    "HopfError",
    "make_hopf",
    "hopf_problems",
    "dual",
    "tensor_product",
    "tensors_equal",
    "restrict_hopf",
    "tensor_mul",
    "tensor_map",
    "tensor_of",
    "tensor_add",
    "in_tensor_square",
]
