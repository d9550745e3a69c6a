"""Best-effort Hopf isomorphism search by generator images.

Generators are group-likes plus skew-primitives. A group isomorphism is fixed
first; each skew-primitive generator is sent to lambda * y with y from a
candidate list, and the lambdas are solved from the multiplication-table
relations with verified_roots. Any returned map is a verified bijective Hopf
morphism.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from ..cyclo import CycPoly, verified_roots
from ..exactla import Mat, RowReducer, linear_solve, vec_sub
from .structure import HopfMorphism, fingerprint, grouplikes, skew_primitives

DEFAULT_BUDGET = 20000

_FP_FIELDS = (
    "dimension",
    "semisimplicity",
    "cosemisimplicity",
    "pointedness",
    "Chevalley property",
    "coradical type",
    "number of group-likes",
    "group element orders",
    "group commutativity",
    "antipode order",
    "skew-primitive dimensions",
    "coradical filtration",
)


@dataclass
class IsoResult:
    morphism: HopfMorphism
    status: str  # found, refuted, exhausted
    reason: str = ""


# -- generators ----------------------------------------------------------------


def _group_generators(G):
    """Greedy generating set, preferring elements of large order."""
    n = len(G)
    order = sorted(range(1, n), key=lambda a: (-G.order(a), a))
    gens = []
    sub = {0}
    for a in order:
        if len(sub) == n:
            break
        if a in sub:
            continue
        gens.append(a)
        sub = _closure(G, gens)
    return gens


def _closure(G, gens):
    sub = {0}
    todo = [0]
    while todo:
        x = todo.pop()
        for s in gens:
            y = G.table[x][s]
            if y not in sub:
                sub.add(y)
                todo.append(y)
    return sub


def _nontrivial_part(H, G, a, b):
    """Vectors of P_{a,b} spanning a complement of k(b - a)."""
    P, nt = skew_primitives(H, G.elements[a], G.elements[b])
    if nt <= 0:
        return []
    red = RowReducer(H.dim)
    if a != b:
        red.add(vec_sub(G.elements[b], G.elements[a]))
    out = []
    for v in P.basis:
        if red.add(v):
            out.append(v)
    return out


def _subalgebra(H, gens):
    red = RowReducer(H.dim)
    red.add(H.unit)
    todo = [H.unit]
    while todo:
        v = todo.pop()
        for g in gens:
            w = H.mul(v, g)
            if red.add(w):
                todo.append(w)
    return red.dim


def choose_generators(H):
    """(group generator indices, skew generators as (a, b, vector)) or None."""
    G = grouplikes(H)
    ggens = _group_generators(G)
    vecs = [G.elements[a] for a in ggens]
    skew = []
    if _subalgebra(H, vecs) == H.dim:
        return ggens, skew
    n = len(G)
    pairs = sorted(((a, b) for a in range(n) for b in range(n)), key=lambda p: (p[0] != 0, p))
    for a, b in pairs:
        for y in _nontrivial_part(H, G, a, b):
            if _subalgebra(H, vecs + [y]) > _subalgebra(H, vecs):
                vecs.append(y)
                skew.append((a, b, y))
                if _subalgebra(H, vecs) == H.dim:
                    return ggens, skew
    return None


# -- word basis and relations --------------------------------------------------


def word_basis(H, gens):
    """Words (tuples of generator indices) whose values form a basis."""
    red = RowReducer(H.dim)
    red.add(H.unit)
    words = [()]
    values = [tuple(H.unit)]
    k = 0
    while k < len(words):
        for s, g in enumerate(gens):
            v = H.mul(values[k], g)
            if red.add(v):
                words.append(words[k] + (s,))
                values.append(v)
        k += 1
    if len(words) != H.dim:
        return None
    return words, values


def relation_table(H, gens, words, values):
    """For each basis word w and generator s, coordinates of w s in the word basis."""
    W = Mat.from_columns(values, H.dim)
    rels = []
    for a, w in enumerate(words):
        for s, g in enumerate(gens):
            coeffs, _ = linear_solve(W, H.mul(values[a], g), H.field)
            rels.append((a, s, coeffs))
    return W, rels


# -- polynomial bookkeeping: {exponent tuple: value} ---------------------------


def _vp_mul(K, P, Q):
    out = {}
    for e1, v1 in P.items():
        for e2, v2 in Q.items():
            e = tuple(x + y for x, y in zip(e1, e2))
            w = K.mul(v1, v2)
            if e in out:
                w = tuple(x + y for x, y in zip(out[e], w))
            out[e] = w
    return {e: v for e, v in out.items() if any(v)}


def _scalar_polys(vp, dim):
    """Coordinate polynomials of a vector polynomial."""
    polys = []
    for k in range(dim):
        p = {e: v[k] for e, v in vp.items() if v[k]}
        if p:
            polys.append(p)
    return polys


def _substitute(p, r, value):
    out = {}
    for e, c in p.items():
        c2 = c * value ** e[r] if e[r] else c
        e2 = e[:r] + (0,) + e[r + 1 :]
        cur = out.get(e2)
        c2 = c2 if cur is None else cur + c2
        if c2:
            out[e2] = c2
        else:
            out.pop(e2, None)
    return out


def _variables(p):
    vs = set()
    for e in p:
        vs.update(i for i, x in enumerate(e) if x)
    return vs


def _solve_lambdas(polys, nvars, F, assignment=None):
    """Yield assignments of nonzero values solving all polynomial equations."""
    assignment = dict(assignment or {})
    polys = [p for p in polys if p]
    for p in polys:
        if not _variables(p):
            return  # nonzero constant
    if not polys:
        full = dict(assignment)
        for r in range(nvars):
            full.setdefault(r, F.one())
        yield full
        return
    uni = [p for p in polys if len(_variables(p)) == 1]
    if uni:
        p = min(uni, key=lambda q: max(sum(e) for e in q))
        (r,) = _variables(p)
        deg = max(e[r] for e in p)
        coeffs = [F.zero()] * (deg + 1)
        for e, c in p.items():
            coeffs[e[r]] = coeffs[e[r]] + c
        roots, _ = verified_roots(CycPoly(coeffs, F.degree))
        candidates = [x for x in roots if x]
    else:
        # no univariate equation: fix the first free variable to 1
        r = min(set().union(*(_variables(p) for p in polys)))
        candidates = [F.one()]
    for x in candidates:
        sub = [_substitute(p, r, x) for p in polys]
        yield from _solve_lambdas(sub, nvars, F, {**assignment, r: x})


def _group_isos(GH, GK, ggens):
    """Group isomorphisms given by images of the generators."""
    n = len(GH)
    if n != len(GK):
        return
    orders = [GH.order(a) for a in ggens]
    choices = [[b for b in range(len(GK)) if GK.order(b) == o] for o in orders]
    for imgs in itertools.product(*choices):
        phi = {0: 0}
        todo = [0]
        ok = True
        while todo and ok:
            x = todo.pop()
            for s, t in zip(ggens, imgs):
                y = GH.table[x][s]
                fy = GK.table[phi[x]][t]
                if y in phi:
                    if phi[y] != fy:
                        ok = False
                        break
                else:
                    phi[y] = fy
                    todo.append(y)
        if ok and len(phi) == n and len(set(phi.values())) == n:
            yield phi


def _skew_candidates(K, GK, a, b):
    base = _nontrivial_part(K, GK, a, b)
    out = list(base)
    for u, v in itertools.combinations(base, 2):
        out.append(tuple(x + y for x, y in zip(u, v)))
    return out


def refute(H, K):
    """Reason string when cheap invariants differ, else None."""
    if H.dim != K.dim:
        return f"dimensions differ ({H.dim} vs {K.dim})"
    if H.field.conductor != K.field.conductor:
        return "different fields"
    a, b = fingerprint(H).invariants(), fingerprint(K).invariants()
    for name, x, y in zip(_FP_FIELDS, a, b):
        if x != y:
            return f"{name} differs: {x} vs {y}"
    return None


def iso_search(H, K, budget=DEFAULT_BUDGET, seed=0):
    """Search a Hopf isomorphism H -> K. The search order is deterministic."""
    reason = refute(H, K)
    if reason:
        return IsoResult(None, "refuted", reason)
    F = H.field
    choice = choose_generators(H)
    if choice is None:
        return IsoResult(None, "exhausted", "not generated by group-likes and skew-primitives")
    ggens, skew = choice
    GH, GK = grouplikes(H), grouplikes(K)
    gens = [GH.elements[a] for a in ggens] + [y for _, _, y in skew]
    wb = word_basis(H, gens)
    if wb is None:
        return IsoResult(None, "exhausted", "generators do not span")
    words, values = wb
    W, rels = relation_table(H, gens, words, values)
    nvars = len(skew)
    zero_e = (0,) * nvars
    tried = 0
    for phi in _group_isos(GH, GK, ggens):
        cand_lists = [_skew_candidates(K, GK, phi[a], phi[b]) for a, b, _ in skew]
        if any(not c for c in cand_lists):
            continue
        for ys in itertools.product(*cand_lists):
            tried += 1
            if tried > budget:
                return IsoResult(None, "exhausted", f"budget of {budget} assignments used")
            gen_imgs = [{zero_e: GK.elements[phi[a]]} for a in ggens]
            for r, y in enumerate(ys):
                e = tuple(1 if q == r else 0 for q in range(nvars))
                gen_imgs.append({e: y})
            imgs = [{zero_e: tuple(K.unit)}]
            for w in words[1:]:
                imgs.append(_vp_mul(K, imgs[words.index(w[:-1])], gen_imgs[w[-1]]))
            polys = []
            for a, s, coeffs in rels:
                lhs = _vp_mul(K, imgs[a], gen_imgs[s])
                for c, img in zip(coeffs, imgs):
                    if c:
                        for e, v in img.items():
                            cur = lhs.get(e)
                            neg = tuple(-c * x for x in v)
                            lhs[e] = neg if cur is None else tuple(x + y for x, y in zip(cur, neg))
                polys.extend(_scalar_polys(lhs, K.dim))
            for lam in _solve_lambdas(polys, nvars, F):
                cols = []
                for img in imgs:
                    acc = K.zero()
                    for e, v in img.items():
                        c = F.one()
                        for r, x in enumerate(e):
                            if x:
                                c = c * lam[r] ** x
                        acc = tuple(p + c * q for p, q in zip(acc, v))
                    cols.append(acc)
                Img = Mat.from_columns(cols, K.dim)
                try:
                    M = Img @ W.inverse(F)
                except ZeroDivisionError:
                    continue
                mor = HopfMorphism(H, K, M)
                if mor.is_bijective() and mor.is_valid():
                    return IsoResult(mor, "found")
    return IsoResult(None, "exhausted", f"no assignment among {tried} candidates")


__all__ = ["IsoResult", "iso_search", "refute", "choose_generators", "word_basis", "DEFAULT_BUDGET"]
