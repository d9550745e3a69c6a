"""Group-likes, skew-primitives, coradical filtration, fingerprints, morphisms."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field as dc_field

from ..algebra import (
    characters,
    radical,
    span_products,
    subalgebra_generated,
    wedderburn,
)
from ..exactla import Mat, RowReducer, Subspace, kernel_sparse, to_sparse
from .core import HopfError, _acc, dual, in_tensor_square, tensor_map, tensor_of


def _key(v):
    return tuple(a.sort_key() for a in v)


# -- group-likes --------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class GroupLikes:
    elements: list  # element vectors, unit first
    table: list  # table[a][b] = index of elements[a] * elements[b]
    complete: bool

    def __len__(self):
        return len(self.elements)

    def index(self, v):
        return self.elements.index(tuple(v))

    def order(self, a):
        n, x = 1, a
        while x != 0:
            x = self.table[x][a]
            n += 1
        return n

    def orders(self):
        return sorted(self.order(a) for a in range(len(self)))

    def inverse(self, a):
        return next(b for b in range(len(self)) if self.table[a][b] == 0)

    def is_abelian(self):
        n = len(self)
        return all(self.table[a][b] == self.table[b][a] for a in range(n) for b in range(n))

    def structure(self):
        return {"order": len(self), "element_orders": self.orders(), "abelian": self.is_abelian()}


def is_grouplike(H, g):
    return H.eps(g).is_one() and H.delta(g) == tensor_of(g, g)


def grouplikes(H):
    cached = H.__dict__.get("_grouplikes")
    if cached is not None:
        return cached
    D = dual(H)
    chars = characters(D.alg)
    elems = [tuple(c) for c in chars]
    for g in elems:
        if not is_grouplike(H, g):
            raise HopfError("character of the dual is not group-like")
    elems.sort(key=lambda v: (v != tuple(H.unit), _key(v)))
    table = []
    for a in elems:
        row = []
        for b in elems:
            p = H.mul(a, b)
            if p not in elems:
                raise HopfError("group-likes not closed under multiplication")
            row.append(elems.index(p))
        table.append(row)
    G = GroupLikes(elems, table, chars.complete)
    object.__setattr__(H, "_grouplikes", G)
    return G


# -- skew-primitives ----------------------------------------------------------


def skew_primitives(H, g, h):
    """P_{g,h}(H) and the dimension of its nontrivial part."""
    g, h = tuple(g), tuple(h)
    if not is_grouplike(H, g) or not is_grouplike(H, h):
        raise HopfError("skew_primitives needs group-like inputs")
    d = H.dim
    rows = {}
    for k in range(d):
        for ij, c in H.comult[k].items():
            _acc(rows.setdefault(ij, {}), k, c)
    for i in range(d):
        for j in range(d):
            if h[j]:
                _acc(rows.setdefault((i, j), {}), i, -h[j])
            if g[i]:
                _acc(rows.setdefault((i, j), {}), j, -g[i])
    P = kernel_sparse([r for r in rows.values() if r], d, H.field)
    trivial = 0 if g == h else 1
    return P, P.dim - trivial


def skew_primitive_table(H):
    cached = H.__dict__.get("_skew_table")
    if cached is not None:
        return cached
    G = grouplikes(H)
    # skew-primitives live in H_1, so a cosemisimple H has only the trivial ones
    cosemisimple = len(coradical_filtration(H).filtration) == 1
    table = {}
    for a, g in enumerate(G.elements):
        for b, h in enumerate(G.elements):
            table[(a, b)] = 0 if cosemisimple else skew_primitives(H, g, h)[1]
    object.__setattr__(H, "_skew_table", table)
    return table


# -- coradical ----------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class Coradical:
    filtration: list
    type: tuple
    simple_subcoalgebras: list
    block_sizes: tuple
    split: bool


def coradical_type_from_blocks(sizes):
    if not sizes:
        return ()
    counts = Counter(sizes)
    return tuple(counts.get(n, 0) for n in range(1, max(sizes) + 1))


def _wedge_step(H, H0perp, prevperp):
    """{x : (f (x) f') Delta x = 0 for f in H0perp, f' in prevperp}."""
    d = H.dim
    rows = []
    for f in H0perp.basis:
        for fp in prevperp.basis:
            row = {}
            for k in range(d):
                acc = None
                for (i, j), c in H.comult[k].items():
                    a = f[i]
                    b = fp[j]
                    if a and b:
                        acc = c * a * b if acc is None else acc + c * a * b
                if acc:
                    row[k] = acc
            if row:
                rows.append(row)
    return kernel_sparse(rows, d, H.field)


def coradical_filtration(H):
    cached = H.__dict__.get("_coradical")
    if cached is not None:
        return cached
    D = dual(H)
    W = wedderburn(D.alg)
    if not W.split:
        raise HopfError(
            f"dual algebra does not split over Q(zeta_{H.field.conductor}): {W.diagnostic}; "
            "try a larger conductor (HOPFKIT_FIELD)"
        )
    F = H.field
    R = W.radical
    H0 = R.annihilator(F)
    filt = [H0]
    cur = H0
    while cur.dim < H.dim:
        nxt = _wedge_step(H, R, cur.annihilator(F))
        if nxt.dim <= cur.dim:
            raise HopfError("coradical filtration stalled")
        filt.append(nxt)
        cur = nxt
    # simple subcoalgebras: annihilators of the radical plus the other blocks
    Q = W.quotient
    B = Q.algebra
    simples = []
    for e in W.central_idempotents:
        # the other blocks together are (1 - e) B
        rest = tuple(u - a for u, a in zip(B.unit, e))
        red = R.reducer()
        for j in range(B.dim):
            red.add(Q.lift(B.mul(rest, B.basis_vec(j))))
        U = Subspace._from_reducer(red, F)
        simples.append(U.annihilator(F))
    order = sorted(range(len(simples)), key=lambda i: (W.block_sizes[i], _key(simples[i].basis[0])))
    result = Coradical(
        filt,
        coradical_type_from_blocks(W.block_sizes),
        [simples[i] for i in order],
        tuple(W.block_sizes[i] for i in order),
        W.split,
    )
    object.__setattr__(H, "_coradical", result)
    return result


def coradical(H):
    return coradical_filtration(H).filtration[0]


# -- antipode order, Chevalley, fingerprint ----------------------------------


def antipode_order(H):
    bound = 2 * H.dim
    S = H.antipode
    P = S
    for n in range(1, bound + 1):
        if P.is_identity():
            return n
        P = S @ P
    raise HopfError(f"antipode order exceeds {bound}")


def is_subalgebra(H, U):
    if not U.contains(H.unit):
        return False
    return U.contains_space(span_products(H.alg, U, U))


def has_chevalley(H):
    return is_subalgebra(H, coradical(H))


@dataclass(frozen=True)
class Fingerprint:
    dim: int
    coradical_type: tuple
    block_sizes: tuple
    grouplike_order: int
    group: dict = dc_field(hash=False, compare=False)
    antipode_order: int = 0
    skew_primitive_dims: dict = dc_field(default_factory=dict, hash=False, compare=False)
    semisimple: bool = False
    cosemisimple: bool = False
    pointed: bool = False
    chevalley: bool = False
    filtration_dims: tuple = ()
    bd_bound_report: dict = dc_field(default=None, hash=False, compare=False)
    grouplikes_complete: bool = True

    def invariants(self):
        """Basis-independent data used to refute isomorphism."""
        skew = tuple(sorted(Counter(self.skew_primitive_dims.values()).items()))
        return (
            self.dim,
            self.semisimple,
            self.cosemisimple,
            self.pointed,
            self.chevalley,
            self.coradical_type,
            self.grouplike_order,
            tuple(self.group.get("element_orders", ())),
            self.group.get("abelian"),
            self.antipode_order,
            skew,
            self.filtration_dims,
        )

    def to_json(self):
        return {
            "dim": self.dim,
            "coradical_type": list(self.coradical_type),
            "block_sizes": list(self.block_sizes),
            "grouplike_order": self.grouplike_order,
            "group": self.group,
            "antipode_order": self.antipode_order,
            "skew_primitive_dims": {f"{a},{b}": v for (a, b), v in sorted(self.skew_primitive_dims.items())},
            "semisimple": self.semisimple,
            "cosemisimple": self.cosemisimple,
            "pointed": self.pointed,
            "chevalley": self.chevalley,
            "filtration_dims": list(self.filtration_dims),
            "bd_bound_report": self.bd_bound_report,
            "grouplikes_complete": self.grouplikes_complete,
        }


def bound_report(H, cor, G, skew):
    """Necessary inequality for non-cosemisimple H without nontrivial skew-primitives."""
    if any(v for v in skew.values()):
        return None
    big = sorted(n for n in cor.block_sizes if n >= 2)
    if not big or len(cor.filtration) == 1:
        return None
    h1 = cor.filtration[1].dim
    bound = (1 + 2 * big[0]) * len(G) + sum(n * n for n in big)
    return {
        "dim": H.dim,
        "dim_H1": h1,
        "bound": bound,
        "holds": H.dim > h1 >= bound,
    }


def fingerprint(H):
    cached = H.__dict__.get("_fingerprint")
    if cached is not None:
        return cached
    cor = coradical_filtration(H)
    G = grouplikes(H)
    skew = skew_primitive_table(H)
    cosemisimple = len(cor.filtration) == 1
    fp = Fingerprint(
        dim=H.dim,
        coradical_type=cor.type,
        block_sizes=cor.block_sizes,
        grouplike_order=len(G),
        group=G.structure(),
        antipode_order=antipode_order(H),
        skew_primitive_dims=skew,
        semisimple=radical(H.alg).dim == 0,
        cosemisimple=cosemisimple,
        pointed=all(n == 1 for n in cor.block_sizes),
        chevalley=has_chevalley(H),
        filtration_dims=tuple(U.dim for U in cor.filtration),
        bd_bound_report=None if cosemisimple else bound_report(H, cor, G, skew),
        grouplikes_complete=G.complete,
    )
    object.__setattr__(H, "_fingerprint", fp)
    return fp


# -- subalgebras, actions -----------------------------------------------------


def is_subcoalgebra(H, U):
    return all(in_tensor_square(H.delta(u), U, H.dim, H.field) for u in U.basis)


@dataclass(frozen=True, eq=False)
class GeneratedSubalgebra:
    subspace: Subspace
    is_subbialgebra: bool
    is_hopf_subalgebra: bool


def generated_subalgebra(H, gens):
    vecs = gens.basis if isinstance(gens, Subspace) else [tuple(g) for g in gens]
    U = subalgebra_generated(H.alg, vecs)
    bi = is_subcoalgebra(H, U)
    hopf = bi and all(U.contains(H.S(u)) for u in U.basis)
    return GeneratedSubalgebra(U, bi, hopf)


def translation_matrix(H, g, kind):
    g = tuple(g)
    if not is_grouplike(H, g):
        raise HopfError("translation needs a group-like element")
    ginv = H.S(g)
    cols = []
    for j in range(H.dim):
        e = H.basis_vec(j)
        if kind == "left":
            v = H.mul(g, e)
        elif kind == "right":
            v = H.mul(e, g)
        elif kind == "ad_left":
            v = H.mul(H.mul(g, e), ginv)
        elif kind == "ad_right":
            v = H.mul(H.mul(ginv, e), g)
        else:
            raise ValueError(f"unknown action kind {kind!r}")
        cols.append(v)
    return Mat.from_columns(cols, H.dim)


@dataclass(frozen=True, eq=False)
class TranslationReport:
    matrix: Mat
    is_identity: bool
    permutation: list  # permutation[i] = j when the action maps C_i onto C_j


def translation_action(H, g, kind="left"):
    M = translation_matrix(H, g, kind)
    simples = coradical_filtration(H).simple_subcoalgebras
    perm = []
    for C in simples:
        img = C.image_under(M, H.field)
        perm.append(next((j for j, D in enumerate(simples) if D == img), None))
    return TranslationReport(M, M.is_identity(), perm)


# -- morphisms ----------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class HopfMorphism:
    source: object
    target: object
    matrix: Mat

    def __call__(self, v):
        return self.matrix.apply(v)

    def problems(self):
        H, K, M = self.source, self.target, self.matrix
        if M.shape != (K.dim, H.dim):
            return [f"matrix has shape {M.shape}, expected {(K.dim, H.dim)}"]
        out = []
        cols = M.columns()
        if M.apply(H.unit) != tuple(K.unit):
            out.append("not unital")
        for i in range(H.dim):
            for j in range(H.dim):
                if M.apply(H.alg.mul_basis(i, j)) != K.mul(cols[i], cols[j]):
                    out.append(f"not multiplicative on ({H.labels[i]}, {H.labels[j]})")
                    break
            if out:
                break
        for k in range(H.dim):
            if K.delta(cols[k]) != tensor_map(H.comult[k], M):
                out.append(f"not comultiplicative at {H.labels[k]}")
                break
        for k in range(H.dim):
            if K.eps(cols[k]) != H.counit[k]:
                out.append(f"not counital at {H.labels[k]}")
                break
        return out

    def is_valid(self):
        return not self.problems()

    def is_bijective(self):
        return self.matrix.nrows == self.matrix.ncols and self.matrix.rank() == self.matrix.ncols

    def to_json(self):
        return {
            "source": self.source.name,
            "target": self.target.name,
            "matrix": self.matrix.to_text(),
        }


def coinvariants(H, pi):
    """{x : (id (x) pi) Delta x = x (x) 1}."""
    if not isinstance(pi, HopfMorphism) or pi.source is not H:
        raise HopfError("coinvariants needs a morphism out of H")
    bad = pi.problems()
    if bad:
        raise HopfError("invalid morphism: " + bad[0])
    B = pi.target
    M = pi.matrix
    d = H.dim
    rows = {}
    for k in range(d):
        for (i, j), c in H.comult[k].items():
            for b, m in enumerate(M.column(j)):
                if m:
                    _acc(rows.setdefault((i, b), {}), k, c * m)
    for i in range(d):
        for b, u in enumerate(B.unit):
            if u:
                _acc(rows.setdefault((i, b), {}), i, -u)
    return kernel_sparse([r for r in rows.values() if r], d, H.field)


@dataclass
class ExactSequenceReport:
    conditions: dict  # name -> (ok, detail)

    @property
    def ok(self):
        return all(ok for ok, _ in self.conditions.values())

    def lines(self):
        return [f"{'PASS' if ok else 'FAIL'} {name}: {detail}" for name, (ok, detail) in self.conditions.items()]


def check_exact_sequence(iota, pi):
    A, C, B = iota.source, iota.target, pi.target
    F = C.field
    cond = {}
    if pi.source is not C:
        cond["composable"] = (False, "iota target is not pi source")
        return ExactSequenceReport(cond)
    for name, m in (("iota", iota), ("pi", pi)):
        bad = m.problems()
        if bad:
            cond[f"{name} is a Hopf map"] = (False, bad[0])
    r_iota = iota.matrix.rank()
    cond["(i) iota injective"] = (r_iota == A.dim, f"rank {r_iota} of {A.dim}")
    r_pi = pi.matrix.rank()
    if r_pi == B.dim:
        cond["(ii) pi surjective"] = (True, f"rank {r_pi} = dim {B.dim}")
    else:
        img = pi.matrix.image(F)
        witness = next(
            (B.labels[k] for k in range(B.dim) if not img.contains(B.basis_vec(k))), "?"
        )
        cond["(ii) pi surjective"] = (False, f"rank {r_pi} < {B.dim}; {witness} not in the image")
    comp = pi.matrix @ iota.matrix
    ok3 = all(comp.column(a) == tuple(A.counit[a] * u for u in B.unit) for a in range(A.dim))
    cond["(iii) pi iota = u eps"] = (ok3, "checked on the basis of A")
    # A^+ C, spanned by iota(a) c with eps(a) = 0
    aplus = kernel_sparse([to_sparse(A.counit)], A.dim, F)
    red = RowReducer(C.dim)
    for a in aplus.basis:
        ia = iota(a)
        for k in range(C.dim):
            red.add(C.mul(ia, C.basis_vec(k)))
    apc = Subspace._from_reducer(red, F)
    kerpi = pi.matrix.kernel(F)
    cond["(iv) ker pi = A+ C"] = (kerpi == apc, f"dim ker pi {kerpi.dim}, dim A+C {apc.dim}")
    co = coinvariants(C, pi)
    ia_space = iota.matrix.image(F)
    cond["(v) iota(A) = C^co pi"] = (co == ia_space, f"dim C^co pi {co.dim}, dim A {ia_space.dim}")
    cond["dim C = dim C^co pi * dim B"] = (
        C.dim == co.dim * B.dim,
        f"{C.dim} = {co.dim}*{B.dim}",
    )
    return ExactSequenceReport(cond)


# -- properties ---------------------------------------------------------------


def antipode_property_problems(H):
    """Independent checks of standard antipode identities."""
    out = []
    S = H.antipode
    F = H.field
    for i in range(H.dim):
        for j in range(H.dim):
            lhs = H.S(H.alg.mul_basis(i, j))
            rhs = H.mul(S.column(j), S.column(i))
            if lhs != rhs:
                out.append(f"S(ab) != S(b)S(a) at ({H.labels[i]}, {H.labels[j]})")
                break
    for k in range(H.dim):
        if H.eps(S.column(k)) != H.counit[k]:
            out.append(f"eps S != eps at {H.labels[k]}")
        lhs = H.delta(S.column(k))
        flipped = {(j, i): c for (i, j), c in H.comult[k].items()}
        if lhs != tensor_map(flipped, S):
            out.append(f"Delta S != (S (x) S) flip Delta at {H.labels[k]}")
    H0 = coradical(H)
    if H0.image_under(S, F) != H0:
        out.append("S(H0) != H0")
    return out


def filtration_problems(H):
    cor = coradical_filtration(H)
    filt = cor.filtration
    out = []
    for a, b in zip(filt, filt[1:]):
        if not (b.contains_space(a) and b.dim > a.dim):
            out.append("filtration not strictly increasing")
    if filt[-1].dim != H.dim or len(filt) > H.dim:
        out.append("filtration does not terminate at H")
    zero = H.field.zero()
    d = H.dim
    for n in range(min(3, len(filt))):
        allowed = _filtered_tensor_space(H, filt, n)
        for u in filt[n].basis:
            t = H.delta(u)
            vec = tuple(t.get((i, j), zero) for i in range(d) for j in range(d))
            if not allowed.contains(vec):
                out.append(f"Delta(H_{n}) not in sum H_i (x) H_(n-i)")
                break
    return out


def _filtered_tensor_space(H, filt, n):
    d = H.dim
    red = RowReducer(d * d)
    for i in range(n + 1):
        for u in filt[i].basis:
            for v in filt[n - i].basis:
                row = {}
                for a, x in enumerate(u):
                    if x:
                        for b, y in enumerate(v):
                            if y:
                                row[a * d + b] = x * y
                red.add(row)
    return Subspace._from_reducer(red, H.field)


__all__ = [
    "GroupLikes",
    "grouplikes",
    "is_grouplike",
    "skew_primitives",
    "skew_primitive_table",
    "Coradical",
    "coradical_filtration",
    "coradical",
    "coradical_type_from_blocks",
    "antipode_order",
    "has_chevalley",
    "Fingerprint",
    "fingerprint",
    "GeneratedSubalgebra",
    "generated_subalgebra",
    "translation_action",
    "translation_matrix",
    "HopfMorphism",
    "coinvariants",
    "check_exact_sequence",
    "ExactSequenceReport",
    "antipode_property_problems",
    "filtration_problems",
    "is_subcoalgebra",
    "is_subalgebra",
]
