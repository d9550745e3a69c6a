"""Named Hopf algebras and the verification suites built on them.

Names: the bundled presentations in data/, "A" (the dual of A4pp), "TT"
(T tensor T), and any of these with a trailing "*" for the dual.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from importlib import resources

from .algebra import characters, simple_modules
from .cyclo import FieldSpec
from .exactla import Mat, Subspace, vec_add
from .hopf import (
    HopfError,
    HopfMorphism,
    check_exact_sequence,
    dual,
    fingerprint,
    generated_subalgebra,
    grouplikes,
    iso_search,
    make_hopf,
    restrict_hopf,
    skew_primitives,
    tensor_product,
)
from .present import complete_rewriting, parse_presentation

_CACHE = {}


class CatalogError(KeyError):
    def __str__(self):
        return self.args[0] if self.args else "catalog error"


def bundled_names():
    files = resources.files("hopfkit") / "data"
    return sorted(p.name[: -len(".hpf")] for p in files.iterdir() if p.name.endswith(".hpf"))


def catalog_names():
    return bundled_names() + ["A", "TT"]


def presentation_text(name):
    path = resources.files("hopfkit") / "data" / f"{name}.hpf"
    return path.read_text()


def build_presentation(text, field=None, name=None):
    P = parse_presentation(text, field)
    cp = complete_rewriting(P)
    return make_hopf(cp.algebra, cp.comult, cp.counit, name=name or P.name)


def catalog_get(name, field=None):
    if isinstance(field, int):
        field = FieldSpec(field)
    key = (name, field.conductor if field else None)
    if key in _CACHE:
        return _CACHE[key]
    if name.endswith("*"):
        H = dual(catalog_get(name[:-1], field))
    elif name == "A":
        H = dual(catalog_get("A4pp", field))
        object.__setattr__(H, "name", "A")
    elif name == "TT":
        T = catalog_get("T", field)
        H = tensor_product(T, T)
        object.__setattr__(H, "name", "TT")
    elif name in bundled_names():
        H = build_presentation(presentation_text(name), field, name)
    else:
        raise CatalogError(f"unknown catalog entry {name!r}")
    _CACHE[key] = H
    return H


# -- reports --------------------------------------------------------------------


@dataclass
class SuiteReport:
    suite: str
    checks: list = dc_field(default_factory=list)  # (name, ok, detail)
    data: dict = dc_field(default_factory=dict)

    def check(self, name, ok, detail=""):
        self.checks.append((name, bool(ok), str(detail)))
        return bool(ok)

    @property
    def ok(self):
        return all(ok for _, ok, _ in self.checks)

    def failures(self):
        return [(n, d) for n, ok, d in self.checks if not ok]

    def lines(self):
        return [f"{'PASS' if ok else 'FAIL'} {n}" + (f": {d}" if d else "") for n, ok, d in self.checks]

    def to_json(self):
        doc = {
            "suite": self.suite,
            "ok": self.ok,
            "checks": [{"name": n, "ok": ok, "detail": d} for n, ok, d in self.checks],
        }
        doc.update(self.data)
        return doc


# -- the algebra A ----------------------------------------------------------------


def two_dim_normal_form(H, rho):
    """Conjugate a 2-dim simple module of A4pp to g -> diag(i, -i), x[0,1] = 2."""
    F = H.field
    gi, xi = H.labels.index("g"), H.labels.index("x")
    Rg, Rx = rho.matrices[gi], rho.matrices[xi]
    i = F.i()
    I2 = Mat.identity(F, 2)
    vecs = []
    for lam in (i, -i):
        K = (Rg - I2.scale(lam)).kernel(F)
        if K.dim != 1:
            raise HopfError("rho(g) does not have eigenvalues i and -i")
        vecs.append(K.basis[0])
    Q = Mat.from_columns(vecs, 2)
    m = (Q.inverse(F) @ Rx @ Q)[0, 1]
    if not m:
        raise HopfError("rho(x) has zero corner entry")
    Q = Mat.from_columns([vecs[0], tuple(F(2) / m * a for a in vecs[1])], 2)
    Qi = Q.inverse(F)
    return [Qi @ M @ Q for M in rho.matrices]


def a4pp_representations():
    """Characters and the normalized 2-dim simple module of A4pp."""
    H = catalog_get("A4pp")
    chars = characters(H.alg)
    mods = [m for m in simple_modules(H.alg) if m.dim == 2]
    return H, chars, mods


def comatrix_basis_of_A():
    """e_ij = E_ij o rho in A, with rho the normalized 2-dim module of A4pp."""
    H, chars, mods = a4pp_representations()
    if len(mods) != 1:
        raise HopfError(f"expected one 2-dim simple module, found {len(mods)}")
    mats = two_dim_normal_form(H, mods[0])
    e = {(i, j): tuple(M[i - 1, j - 1] for M in mats) for i in (1, 2) for j in (1, 2)}
    return H, chars, mats, e


def verify_unique_A():
    R = SuiteReport("unique-A")
    H = catalog_get("A4pp")
    A = catalog_get("A")
    F = A.field
    gi, xi = H.labels.index("g"), H.labels.index("x")

    # representations of A4pp
    chars = characters(H.alg)
    R.check("A4pp has exactly two characters", len(chars) == 2 and chars.complete, f"{len(chars)} found")
    alpha = next((tuple(c) for c in chars if c[gi] == F(-1)), None)
    R.check("character alpha with alpha(g) = -1, alpha(x) = 0", alpha is not None and not alpha[xi])
    mods = [m for m in simple_modules(H.alg) if m.dim == 2]
    R.check("exactly one 2-dim simple module", len(mods) == 1, f"{len(mods)} found")
    if alpha is None or len(mods) != 1:
        return R
    mats = two_dim_normal_form(H, mods[0])
    i = F.i()
    want_g = Mat.from_rows([[i, F.zero()], [F.zero(), -i]], 2)
    want_x = Mat.from_rows([[F.zero(), F(2)], [F(-1), F.zero()]], 2)
    R.check("rho(g) = diag(i, -i), rho(x) = [[0, 2], [-1, 0]]", mats[gi] == want_g and mats[xi] == want_x)

    e = {(a, b): tuple(M[a - 1, b - 1] for M in mats) for a in (1, 2) for b in (1, 2)}
    xi_ = mats[gi][0, 0]
    eps = tuple(A.unit)
    m = A.mul
    sc = lambda c, v: tuple(c * a for a in v)  # noqa: E731
    zero = A.zero()
    e11, e12, e21, e22 = e[1, 1], e[1, 2], e[2, 1], e[2, 2]
    R.check("xi^2 = -1", xi_ * xi_ == F(-1))
    rels = [
        ("le1", "S(e11) = e22", A.S(e11), e22),
        ("le1", "S(e22) = e11", A.S(e22), e11),
        ("le1", "S(e12) = -xi e12", A.S(e12), sc(-xi_, e12)),
        ("le1", "S(e21) = xi e21", A.S(e21), sc(xi_, e21)),
        ("le2", "e11^2 = alpha", m(e11, e11), alpha),
        ("le2", "e22^2 = alpha", m(e22, e22), alpha),
        ("le2", "e12^2 = 0", m(e12, e12), zero),
        ("le2", "e21^2 = 0", m(e21, e21), zero),
        ("le3", "e11 e22 = eps", m(e11, e22), eps),
        ("le3", "e22 e11 = eps", m(e22, e11), eps),
        ("le3", "e12 e21 = 0", m(e12, e21), zero),
        ("le3", "e21 e12 = 0", m(e21, e12), zero),
        ("le4", "e12 e11 = xi e11 e12", m(e12, e11), sc(xi_, m(e11, e12))),
        ("le4", "e21 e11 = xi e11 e21", m(e21, e11), sc(xi_, m(e11, e21))),
        ("le5", "e12 e22 = -xi e22 e12", m(e12, e22), sc(-xi_, m(e22, e12))),
        ("le5", "e21 e22 = -xi e22 e21", m(e21, e22), sc(-xi_, m(e22, e21))),
    ]
    for tag, text, lhs, rhs in rels:
        R.check(f"{tag}: {text}", tuple(lhs) == tuple(rhs))
    for a in (1, 2):
        for b in (1, 2):
            want = {}
            for l in (1, 2):
                for k, v in _tensor(e[a, l], e[l, b]).items():
                    want[k] = want.get(k, F.zero()) + v
            want = {k: v for k, v in want.items() if v}
            R.check(f"Delta(e{a}{b}) = sum_l e{a}l (x) el{b}", A.delta(e[a, b]) == want)

    y12, y21 = m(e11, e12), m(e11, e21)
    d12 = _tensor_sum(_tensor(y12, eps), _tensor(alpha, y12))
    d21 = _tensor_sum(_tensor(y21, alpha), _tensor(eps, y21))
    R.check("Delta(e11 e12) = e11 e12 (x) eps + alpha (x) e11 e12", A.delta(y12) == d12)
    R.check("Delta(e11 e21) = e11 e21 (x) alpha + eps (x) e11 e21", A.delta(y21) == d21)
    R.check("e11 e12 and e11 e21 are nonzero", any(y12) and any(y21))

    # exact sequence T -> A -> k[C2]
    gen = generated_subalgebra(A, [alpha, y21])
    R.check("T = <alpha, e11 e21> is a 4-dim Hopf subalgebra", gen.is_hopf_subalgebra and gen.subspace.dim == 4)
    T = restrict_hopf(A, gen.subspace, "T")
    found = iso_search(T, catalog_get("T"))
    R.check("T is isomorphic to T_{-1}", found.status == "found", found.reason)
    g2 = H.mul(H.basis_vec(gi), H.basis_vec(gi))
    K = Subspace.from_vectors(H.dim, [H.unit, g2], F)
    Kh = restrict_hopf(H, K, "k[g^2]")
    R.check("g^2 is a central group-like of A4pp", all(H.mul(g2, H.basis_vec(k)) == H.mul(H.basis_vec(k), g2) for k in range(H.dim)))
    B = dual(Kh)
    iota = HopfMorphism(T, A, Mat.from_columns(list(gen.subspace.basis), A.dim))
    psi = HopfMorphism(A, B, Mat.from_rows([list(u) for u in K.basis], A.dim))
    rep = check_exact_sequence(iota, psi)
    for name, (ok, det) in rep.conditions.items():
        R.check(f"exact sequence {name}", ok, det)

    fp = fingerprint(A)
    R.check("A is not Chevalley", not fp.chevalley)
    R.check("coradical type of A is (2,1)", fp.coradical_type == (2, 1), fp.coradical_type)
    R.check("|G(A)| = 2", fp.grouplike_order == 2)
    R.check("ord S = 4", fp.antipode_order == 4, fp.antipode_order)
    R.check("A is neither semisimple nor pointed", not fp.semisimple and not fp.pointed)
    R.data["coradical_type"] = list(fp.coradical_type)
    R.data["xi"] = xi_.to_text()
    return R


def _tensor(u, v):
    out = {}
    for i, a in enumerate(u):
        if a:
            for j, b in enumerate(v):
                if b:
                    out[(i, j)] = a * b
    return out


def _tensor_sum(s, t):
    out = dict(s)
    for k, v in t.items():
        w = out[k] + v if k in out else v
        if w:
            out[k] = w
        else:
            out.pop(k, None)
    return out


# -- dimension 8 ------------------------------------------------------------------


REMARK_ISOS = [("A2", "A2*"), ("A4ppp_i", "A4ppp_-i"), ("A4ppp_i", "A4p*"), ("A22", "A22*")]
SECTION_ALGEBRAS = ["A2", "A4p", "A4pp", "A4ppp_i", "A22"]


@dataclass
class TaftLocation:
    c: tuple
    y: tuple
    subspace: Subspace
    morphism: HopfMorphism


def find_taft_subalgebra(H):
    """A Hopf subalgebra of H isomorphic to T_{-1}, generated by an order-2
    group-like c and a skew-primitive y, or None after an exhaustive scan."""
    G = grouplikes(H)
    T = catalog_get("T", H.field)
    ys = []
    for a, b in itertools.product(range(len(G)), repeat=2):
        P, nt = skew_primitives(H, G.elements[a], G.elements[b])
        if nt <= 0:
            continue
        ys.extend(P.basis)
        ys.extend(vec_add(u, v) for u, v in itertools.combinations(P.basis, 2))
    seen = set()
    for c in (k for k in range(len(G)) if G.order(k) == 2):
        cv = G.elements[c]
        for y in ys:
            gen = generated_subalgebra(H, [cv, y])
            U = gen.subspace
            if U.dim != 4 or not gen.is_hopf_subalgebra or U.basis in seen:
                continue
            seen.add(U.basis)
            K = restrict_hopf(H, U)
            res = iso_search(K, T)
            if res.status == "found":
                return TaftLocation(cv, y, U, res.morphism)
    return None


def verify_dim8_remark():
    R = SuiteReport("dim8")
    found = {}
    for a, b in REMARK_ISOS:
        res = iso_search(catalog_get(a), catalog_get(b))
        ok = res.status == "found" and res.morphism.is_valid() and res.morphism.is_bijective()
        R.check(f"{a} ~ {b}", ok, res.status if ok else f"{res.status}: {res.reason}")
        found[f"{a}~{b}"] = res.status
    res = iso_search(catalog_get("T"), catalog_get("kC4"))
    R.check("T not ~ kC4", res.status == "refuted", res.reason)
    located = {}
    for name in SECTION_ALGEBRAS:
        H = catalog_get(name)
        loc = find_taft_subalgebra(H)
        located[name] = loc is not None
        detail = "no order-2 group-like with a skew-primitive generating T_{-1}"
        if loc is not None:
            detail = f"c = {H.element_text(loc.c)}, y = {H.element_text(loc.y)}"
        R.check(f"T_-1 inside {name}", loc is not None, detail)
    R.data["isomorphisms"] = found
    R.data["taft_subalgebra"] = located
    return R


# -- T tensor T ---------------------------------------------------------------------


def verify_taft_square(rounds=25, seed=0):
    from . import cleft

    R = SuiteReport("taft-square")
    canon = {"D0": cleft.trivial_datum(), "twist": cleft.twist_datum()}
    for name, d in canon.items():
        probs = cleft.datum_problems(d)
        R.check(f"{name} satisfies the datum conditions", not probs, "; ".join(sorted(probs)))
        rep = cleft.radical_bound_check(d)
        for line, (ok, det) in rep.checks.items():
            R.check(f"{name}: {line}", ok, det)
    trips = 0
    for name, d in canon.items():
        for r in range(rounds):
            tau = cleft.random_transform(seed * 1000 + r + (0 if name == "D0" else 500))
            res = cleft.datum_transform(d, tau)
            try:
                if not all(res.flags.values()):
                    raise cleft.CleftError("transform breaks the epsilon conditions")
                if cleft.datum_problems(res.datum):
                    raise cleft.CleftError("perturbed datum is invalid")
                norm = cleft.normalize_taft_datum(res.datum)
                ok = norm.canonical == name and norm.datum == d
                detail = norm.canonical
            except (cleft.CleftError, HopfError) as exc:
                ok, detail = False, str(exc)
            if ok:
                trips += 1
            else:
                R.check(f"{name} round trip {r}", False, detail)
    R.check("perturb-and-normalize round trips", trips == 2 * rounds, f"{trips}/{2 * rounds}")
    fp = fingerprint(catalog_get("TT"))
    R.check("T(x)T has dimension 16", fp.dim == 16)
    R.check("T(x)T is pointed", fp.pointed)
    R.check(
        "G(T(x)T) = C2 x C2",
        fp.grouplike_order == 4 and fp.group.get("element_orders") == [1, 2, 2, 2],
        fp.group,
    )
    R.check("ord S(T(x)T) = 4", fp.antipode_order == 4, fp.antipode_order)
    R.data["round_trips"] = trips
    return R


SUITES = {
    "unique-A": verify_unique_A,
    "dim8": verify_dim8_remark,
    "taft-square": verify_taft_square,
}


__all__ = [
    "CatalogError",
    "SuiteReport",
    "catalog_get",
    "catalog_names",
    "bundled_names",
    "build_presentation",
    "comatrix_basis_of_A",
    "find_taft_subalgebra",
    "two_dim_normal_form",
    "verify_unique_A",
    "verify_dim8_remark",
    "verify_taft_square",
    "SUITES",
]
