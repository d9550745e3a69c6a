"""Cleft data over the Sweedler algebra T, crossed products and their normal forms.

T has basis 1, g, x, gx with g^2 = 1, x^2 = 0, xg = -gx,
Delta(g) = g (x) g and Delta(x) = x (x) g + 1 (x) x.

A datum (F, D, alpha, beta, gamma) over an algebra A gives the algebra C_D on
A (x) T (basis index a*4 + b) generated by A, G = 1#g and X = 1#x with

    G a = F(a) G,   X a = a X + D(a) G,   G^2 = alpha,   X^2 = beta,   GX + XG = gamma.

The cocycle is read from the table below as sigma(row, column), with the
convention 1#gx = GX.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field

from .algebra import StructAlgebra, algebra_verify, is_two_sided_ideal, nilpotency_index, radical
from .cyclo import FieldSpec, verified_roots, CycPoly
from .exactla import Mat, Subspace, linear_solve, vec_add, vec_scale, vec_sub

ONE, G, X, GX = 0, 1, 2, 3
TAFT_LABELS = ("1", "g", "x", "gx")


class CleftError(ValueError):
    pass


def taft():
    from .catalog import catalog_get

    return catalog_get("T")


# -- data ---------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class CleftDatum:
    base: StructAlgebra
    F: Mat
    D: Mat
    alpha: tuple
    beta: tuple
    gamma: tuple
    counit: tuple = None  # counit of the base when it is a Hopf algebra

    @property
    def field(self):
        return self.base.field

    def key(self):
        return (self.F.rows, self.D.rows, self.alpha, self.beta, self.gamma)

    def __eq__(self, other):
        return isinstance(other, CleftDatum) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def to_json(self):
        return {
            "base": "T",
            "F": self.F.to_text(),
            "D": self.D.to_text(),
            "alpha": [a.to_text() for a in self.alpha],
            "beta": [a.to_text() for a in self.beta],
            "gamma": [a.to_text() for a in self.gamma],
        }

    @classmethod
    def from_json(cls, doc, field=None):
        if doc.get("base", "T") != "T":
            raise CleftError("only data over T are supported")
        T = taft()
        field = field or T.field
        vec = lambda items: tuple(field.from_text(a) for a in items)  # noqa: E731
        return cls(
            T.alg,
            Mat.from_text(doc["F"], field),
            Mat.from_text(doc["D"], field),
            vec(doc["alpha"]),
            vec(doc["beta"]),
            vec(doc["gamma"]),
            T.counit,
        )


def taft_datum(F=None, D=None, alpha=None, beta=None, gamma=None):
    """A datum over T; missing pieces default to those of the trivial datum."""
    T = taft()
    A = T.alg
    f = A.field
    return CleftDatum(
        A,
        F if F is not None else Mat.identity(f, 4),
        D if D is not None else Mat.zeros(f, 4, 4),
        tuple(alpha) if alpha is not None else A.unit,
        tuple(beta) if beta is not None else A.zero(),
        tuple(gamma) if gamma is not None else A.zero(),
        T.counit,
    )


def algebra_map_matrix(A, images):
    """Matrix of the algebra endomorphism of T with g -> images[0], x -> images[1]."""
    g, x = images
    cols = [A.unit, tuple(g), tuple(x), A.mul(g, x)]
    return Mat.from_columns(cols, A.dim)


def trivial_datum():
    return taft_datum()


def twist_datum():
    T = taft()
    A = T.alg
    Ftw = algebra_map_matrix(A, (A.basis_vec(G), A.basis_vec(GX)))
    return taft_datum(F=Ftw)


# -- validation ---------------------------------------------------------------


def datum_problems(d):
    """Violations of the nine datum conditions, by name, with witnesses."""
    A = d.base
    F, D = d.F, d.D
    al, be, ga = d.alpha, d.beta, d.gamma
    mul = A.mul
    out = {}

    def bad(name, what):
        out.setdefault(name, []).append(what)

    basis = [A.basis_vec(i) for i in range(A.dim)]
    lab = A.label
    if F.apply(A.unit) != A.unit:
        bad("D1", "F(1) != 1")
    for i, a in enumerate(basis):
        Fa, Da = F.apply(a), D.apply(a)
        for j, b in enumerate(basis):
            ab = mul(a, b)
            if F.apply(ab) != mul(Fa, F.apply(b)):
                bad("D1", f"F not multiplicative at ({lab(i)}, {lab(j)})")
            if D.apply(ab) != vec_add(mul(a, D.apply(b)), mul(Da, F.apply(b))):
                bad("D2", f"at ({lab(i)}, {lab(j)})")
        if mul(F.apply(Fa), al) != mul(al, a):
            bad("D3", f"at a = {lab(i)}")
        lhs = mul(vec_add(F.apply(Da), D.apply(Fa)), al)
        if lhs != vec_sub(mul(ga, a), mul(Fa, ga)):
            bad("D4", f"at a = {lab(i)}")
        lhs = vec_add(mul(Da, ga), mul(D.apply(Da), al))
        if lhs != vec_sub(mul(be, a), mul(a, be)):
            bad("D5", f"at a = {lab(i)}")
    if F.apply(al) != al:
        bad("D6", "F(alpha) != alpha")
    if any(D.apply(be)):
        bad("D7", "D(beta) != 0")
    if D.apply(al) != vec_sub(ga, F.apply(ga)):
        bad("D8", "D(alpha) != gamma - F(gamma)")
    if D.apply(ga) != vec_sub(be, F.apply(be)):
        bad("D9", "D(gamma) != beta - F(beta)")
    if A.left_matrix(al).rank() != A.dim:
        bad("alpha", "alpha is not a unit")
    if F.rank() != A.dim:
        bad("F", "F is not invertible")
    return out


@dataclass
class ValidationReport:
    problems: dict

    @property
    def ok(self):
        return not self.problems

    def lines(self):
        names = [f"D{k}" for k in range(1, 10)]
        out = []
        for n in names:
            w = self.problems.get(n)
            out.append(f"{'PASS' if not w else 'FAIL'} {n}" + (f": {w[0]}" if w else ""))
        for n, w in self.problems.items():
            if n not in names:
                out.append(f"FAIL {n}: {w[0]}")
        return out


def datum_validate(d):
    return ValidationReport(datum_problems(d))


# -- crossed product ------------------------------------------------------------


def _taft_coproducts():
    T = taft()
    d1 = [list(T.comult[b].items()) for b in range(4)]
    d2 = []
    for b in range(4):
        terms = []
        for (i, j), c in T.comult[b].items():
            for (k, l), e in T.comult[i].items():
                terms.append((k, l, j, c * e))
        d2.append(terms)
    return T, d1, d2


def weak_action(d):
    """Matrices of b -> (a -> b . a) for b in 1, g, x, gx."""
    A = d.base
    Ral = A.right_matrix(d.alpha)
    return [Mat.identity(A.field, A.dim), d.F, d.D, Ral @ d.F @ d.D]


def cocycle_table(d):
    A = d.base
    one, z = A.unit, A.zero()
    al, be, ga = d.alpha, d.beta, d.gamma
    Fb, Fg = d.F.apply(be), d.F.apply(ga)
    neg = lambda v: vec_scale(A.field(-1), v)  # noqa: E731
    return [
        [one, one, z, z],
        [one, al, z, z],
        [z, ga, be, neg(Fb)],
        [z, Fg, Fb, neg(A.mul(al, be))],
    ]


def crossed_product(d, check=True):
    """C_D on A (x) T; raises CleftError when the result is not associative."""
    if check:
        probs = datum_problems(d)
        if probs:
            name = sorted(probs)[0]
            raise CleftError(f"invalid datum: {name} {probs[name][0]}")
    A = d.base
    F = A.field
    T, d1, d2 = _taft_coproducts()
    W = weak_action(d)
    sig = cocycle_table(d)
    n = A.dim
    entries = []
    # (e_a # t_b)(e_a' # t_b') = sum e_a (b1 . e_a') sigma(b2, p) # t_b3 t_q
    for a in range(n):
        ea = A.basis_vec(a)
        for b in range(4):
            for a2 in range(n):
                for b2 in range(4):
                    acc = {}
                    for (b1, bb, b3, c) in d2[b]:
                        act = W[b1].column(a2)
                        if not any(act):
                            continue
                        left = A.mul(ea, act)
                        for (p, q), e in d1[b2]:
                            s = sig[bb][p]
                            if not any(s):
                                continue
                            coef = c * e
                            aval = A.mul(left, s)
                            for r, tv in T.alg.mult[b3][q].items():
                                for k, av in enumerate(aval):
                                    if av:
                                        key = k * 4 + r
                                        acc[key] = acc.get(key, F.zero()) + coef * tv * av
                    for key, v in acc.items():
                        if v:
                            entries.append((a * 4 + b, a2 * 4 + b2, key, v))
    unit = tuple(u * (F.one() if r == 0 else F.zero()) for u in A.unit for r in range(4))
    labels = tuple(f"{A.label(a)}#{TAFT_LABELS[b]}" for a in range(n) for b in range(4))
    C = StructAlgebra.from_entries(F, 4 * n, entries, unit, labels)
    if check:
        bad = algebra_verify(C)
        if bad:
            raise CleftError("crossed product is not associative: " + bad[0])
    return C


def embed_base(d, a):
    """a # 1 in C_D."""
    F = d.field
    return tuple(x * (F.one() if r == 0 else F.zero()) for x in a for r in range(4))


def element(d, a, b):
    """a # t_b for a vector a of A and a basis index b of T."""
    F = d.field
    return tuple(x if r == b else F.zero() for x in a for r in range(4))


# -- equivalence transforms ---------------------------------------------------


@dataclass(frozen=True, eq=False)
class DatumTransform:
    s: tuple
    t: tuple


@dataclass
class TransformResult:
    datum: CleftDatum
    phi: list  # phi(1), phi(g), phi(x), phi(gx)
    flags: dict = dc_field(default_factory=dict)


def inverse(A, s):
    L = A.left_matrix(s)
    if L.rank() != A.dim:
        raise CleftError("s is not a unit")
    sol, _ = linear_solve(L, A.unit, A.field)
    return sol


def datum_transform(d, tau):
    A = d.base
    s, t = tuple(tau.s), tuple(tau.t)
    sinv = inverse(A, s)
    mul = A.mul
    F, D = d.F, d.D
    cols_F, cols_D = [], []
    for i in range(A.dim):
        a = A.basis_vec(i)
        Fa = F.apply(a)
        cols_F.append(mul(mul(s, Fa), sinv))
        inner = vec_sub(vec_add(mul(t, Fa), D.apply(a)), mul(a, t))
        cols_D.append(mul(inner, sinv))
    Fp = Mat.from_columns(cols_F, A.dim)
    Dp = Mat.from_columns(cols_D, A.dim)
    al, be, ga = d.alpha, d.beta, d.gamma
    alp = mul(mul(s, F.apply(s)), al)
    bep = vec_add(vec_add(be, mul(t, ga)), mul(vec_add(mul(t, F.apply(t)), D.apply(t)), al))
    inner = vec_add(vec_add(mul(t, F.apply(s)), D.apply(s)), mul(s, F.apply(t)))
    gap = vec_add(mul(s, ga), mul(inner, al))
    new = CleftDatum(A, Fp, Dp, alp, bep, gap, d.counit)
    phi = [A.unit, s, t, mul(mul(s, F.apply(t)), al)]
    flags = {}
    if d.counit is not None:
        eps = lambda v: sum((x * e for x, e in zip(v, d.counit)), A.field.zero())  # noqa: E731
        flags = {
            "eps(s)=1": eps(s).is_one(),
            "eps(t)=0": not eps(t),
            "eps(F(t))=0": not eps(F.apply(t)),
        }
    return TransformResult(new, phi, flags)


def transform_iso(d, tau):
    """Matrix of C_{D'} -> C_D, a #' b -> sum a phi(b1) # b2."""
    res = datum_transform(d, tau)
    A = d.base
    F = A.field
    T, d1, _ = _taft_coproducts()
    cols = []
    for a in range(A.dim):
        ea = A.basis_vec(a)
        for b in range(4):
            acc = [F.zero()] * (4 * A.dim)
            for (b1, b2), c in d1[b]:
                v = A.mul(ea, res.phi[b1])
                for k, x in enumerate(v):
                    if x:
                        acc[k * 4 + b2] = acc[k * 4 + b2] + c * x
            cols.append(tuple(acc))
    return res, Mat.from_columns(cols, 4 * A.dim)


def compose_transforms(A, tau1, tau2):
    """The transform equal to applying tau1 then tau2."""
    return DatumTransform(A.mul(tau2.s, tau1.s), vec_add(A.mul(tau2.t, tau1.s), tau1.t))


# -- T utilities ----------------------------------------------------------------


def taft_radical():
    T = taft()
    return radical(T.alg)


def is_unit_taft(v):
    """a + bg + h is a unit iff a^2 - b^2 != 0."""
    a, b = v[ONE], v[G]
    return bool(a * a - b * b)


def is_involution_taft(v):
    T = taft()
    return T.mul(v, v) == T.unit


def _preferred_root(roots):
    def key(r):
        z = r.embed(0)
        return (round(z.real, 9), round(z.imag, 9))

    return max(roots, key=key)


def _field_hint(value):
    for n in (4, 8, 16, 32):
        if n <= value.conductor:
            continue
        F = FieldSpec(n)
        roots, _ = verified_roots(CycPoly([-F(value), 0, 1], F.degree))
        if roots:
            return f"a square root exists in Q(zeta_{n})"
    return "no square root in the supported cyclotomic fields"


def sqrt_scalar(value, field):
    roots, _ = verified_roots(CycPoly([-value, field.zero(), field.one()], field.degree))
    if not roots:
        raise CleftError(f"{value!r} has no square root in Q(zeta_{field.conductor}); {_field_hint(value)}")
    return _preferred_root(list(roots))


def sqrt_group_part(h, counit_one=False):
    """s in k[G] with s^2 = h for h = a + b g; with counit_one, eps(s) = 1."""
    T = taft()
    F = T.field
    if any(h[k] for k in (X, GX)):
        raise CleftError("sqrt_group_part needs an element of k[G]")
    a, b = h[ONE], h[G]
    plus, minus = a + b, a - b  # values on e+ = (1+g)/2 and e- = (1-g)/2
    if counit_one:
        if not plus.is_one():
            raise CleftError("eps(h) must be 1 to get eps(s) = 1")
        rp = F.one()
    else:
        rp = sqrt_scalar(plus, F) if plus else F.zero()
    rm = sqrt_scalar(minus, F) if minus else F.zero()
    half = F(1) / 2
    s = (half * (rp + rm), half * (rp - rm), F.zero(), F.zero())
    if T.mul(s, s) != tuple(h):
        raise CleftError("square root verification failed")
    return s


def taft_utilities(query, *args):
    """Dispatch for the T utilities: radical, unit, involution, sqrt."""
    if query == "radical":
        return taft_radical()
    if query == "unit":
        return is_unit_taft(*args)
    if query == "involution":
        return is_involution_taft(*args)
    if query == "sqrt":
        return sqrt_group_part(*args)
    raise ValueError(f"unknown query {query!r}")


# -- normalization ----------------------------------------------------------------


def exactness_problems(d):
    """Conditions making a # b -> eps(a) b an algebra map C_D -> T."""
    A = d.base
    eps = lambda v: sum((x * e for x, e in zip(v, d.counit)), A.field.zero())  # noqa: E731
    out = []
    for i in range(A.dim):
        a = A.basis_vec(i)
        if eps(d.F.apply(a)) != eps(a):
            out.append(f"eps(F({A.label(i)})) != eps({A.label(i)})")
        if eps(d.D.apply(a)):
            out.append(f"eps(D({A.label(i)})) != 0")
    if not eps(d.alpha).is_one():
        out.append("eps(alpha) != 1")
    if eps(d.beta):
        out.append("eps(beta) != 0")
    if eps(d.gamma):
        out.append("eps(gamma) != 0")
    return out


@dataclass
class NormalizationStep:
    name: str
    transform: DatumTransform
    datum: CleftDatum
    flags: dict


@dataclass
class Normalization:
    canonical: str  # "D0" or "twist"
    datum: CleftDatum
    transcript: list


def _in_rad(v):
    return not v[ONE] and not v[G]


def _in_group_part(v):
    return not v[X] and not v[GX]


def normalize_taft_datum(d):
    probs = datum_problems(d)
    if probs:
        name = sorted(probs)[0]
        raise CleftError(f"invalid datum: {name} {probs[name][0]}")
    pre = exactness_problems(d)
    if pre:
        raise CleftError("datum not compatible with a Hopf projection: " + pre[0])
    A = d.base
    F = A.field
    half = F(1) / 2
    one, zero = A.unit, A.zero()
    gvec = A.basis_vec(G)
    steps = []

    def apply(name, s, t, cur):
        tau = DatumTransform(s, t)
        res = datum_transform(cur, tau)
        if not all(res.flags.values()):
            raise CleftError(f"step {name} breaks the epsilon conditions")
        vr = datum_problems(res.datum)
        if vr:
            raise CleftError(f"step {name} produced an invalid datum")
        steps.append(NormalizationStep(name, tau, res.datum, res.flags))
        return res.datum

    cur = d
    # 1. F(g) = g + h with h in Rad; s = g + h/2
    h = vec_sub(cur.F.apply(gvec), gvec)
    if not _in_rad(h):
        raise CleftError("F(g) - g is not in the radical")
    cur = apply("straighten F(g)", vec_add(gvec, vec_scale(half, h)), zero, cur)
    if cur.F.apply(gvec) != gvec:
        raise CleftError("F(g) = g not reached")
    # 2. alpha in k[G]; s^2 = alpha^{-1}, eps(s) = 1
    if not _in_group_part(cur.alpha):
        raise CleftError("alpha not in k[G]")
    s = sqrt_group_part(inverse(A, cur.alpha), counit_one=True)
    cur = apply("alpha to 1", s, zero, cur)
    if cur.alpha != one:
        raise CleftError("alpha = 1 not reached")
    # 3. t = (g/2) D(g)
    t = vec_scale(half, A.mul(gvec, cur.D.apply(gvec)))
    cur = apply("kill D(g)", one, t, cur)
    if any(cur.D.apply(gvec)):
        raise CleftError("D(g) = 0 not reached")
    # 4. t = -gamma/2
    if not _in_group_part(cur.gamma):
        raise CleftError("gamma not in k[G]")
    cur = apply("kill gamma", one, vec_scale(-half, cur.gamma), cur)
    if any(cur.gamma):
        raise CleftError("gamma = 0 not reached")
    # 5. F on Rad is +-id or +-twist; conjugating by g fixes the sign
    fx = cur.F.apply(A.basis_vec(X))
    if fx == A.basis_vec(X) or fx == A.basis_vec(GX):
        s = one
    elif fx == vec_scale(F(-1), A.basis_vec(X)) or fx == vec_scale(F(-1), A.basis_vec(GX)):
        s = gvec
    else:
        raise CleftError("F on the radical is neither +-id nor +-twist")
    cur = apply("fix sign on Rad", s, zero, cur)
    if any(any(r) for r in cur.D.rows):
        raise CleftError("D = 0 not reached")
    if any(cur.beta):
        raise CleftError("beta = 0 not reached")
    if cur == trivial_datum():
        kind = "D0"
    elif cur == twist_datum():
        kind = "twist"
    else:
        raise CleftError("normal form is not one of the two canonical data")
    return Normalization(kind, cur, steps)


def replay(d, transcript):
    cur = d
    for step in transcript:
        cur = datum_transform(cur, step.transform).datum
    return cur


def random_transform(seed_or_rng, field=None):
    """Seeded transform respecting the epsilon conditions, entries of height <= 2."""
    rng = seed_or_rng if isinstance(seed_or_rng, random.Random) else random.Random(seed_or_rng)
    T = taft()
    F = field or T.field
    vals = [F(c) / q for c in range(-2, 3) for q in (1, 2)]
    while True:
        a = rng.choice(vals)
        b = F.one() - a
        if a * a != b * b:
            break
    s = (a, b, rng.choice(vals), rng.choice(vals))
    c = rng.choice(vals)
    t = (c, -c, rng.choice(vals), rng.choice(vals))
    return DatumTransform(s, t)


# -- radical bound --------------------------------------------------------------


@dataclass
class RadicalBoundReport:
    checks: dict  # name -> (ok, detail)
    iso_matrix: Mat = None

    @property
    def ok(self):
        return all(ok for ok, _ in self.checks.values())

    def lines(self):
        return [f"{'PASS' if ok else 'FAIL'} {n}: {det}" for n, (ok, det) in self.checks.items()]


def radical_bound_check(d):
    if d == trivial_datum():
        kind = "D0"
    elif d == twist_datum():
        kind = "twist"
    else:
        raise CleftError("non-canonical datum: expected the trivial or the twisted datum")
    A = d.base
    F = A.field
    C = crossed_product(d)
    rad_idx = [X, GX]
    I1 = Subspace.from_vectors(C.dim, [C.basis_vec(a * 4 + b) for a in rad_idx for b in range(4)], F)
    I2 = Subspace.from_vectors(C.dim, [C.basis_vec(a * 4 + b) for a in range(4) for b in rad_idx], F)
    checks = {}
    for name, I in (("Rad(T)(x)T", I1), ("T(x)Rad(T)", I2)):
        ideal = is_two_sided_ideal(C, I)
        nil = nilpotency_index(C, I) if ideal else None
        checks[f"{name} is a nilpotent ideal"] = (ideal and nil is not None, f"ideal={ideal}, index={nil}")
    S = I1.sum(I2, F)
    R = radical(C)
    checks["sum inside Rad C"] = (R.contains_space(S), f"dim sum {S.dim}, dim Rad {R.dim}")
    checks["dim C / sum = 4"] = (C.dim - S.dim == 4, f"{C.dim} - {S.dim} = {C.dim - S.dim}")
    checks["semisimple quotient <= 4"] = (C.dim - R.dim <= 4, f"{C.dim} - {R.dim} = {C.dim - R.dim}")
    iso = None
    if kind == "D0":
        from .catalog import catalog_get

        TT = catalog_get("TT").alg
        iso = Mat.identity(F, C.dim)
        ok = all(
            iso.apply(C.mul_basis(i, j)) == TT.mul(iso.column(i), iso.column(j))
            for i in range(C.dim)
            for j in range(C.dim)
        ) and iso.apply(C.unit) == TT.unit
        checks["C_D0 isomorphic to T(x)T as algebras"] = (ok, "identity on the tensor basis")
    else:
        W = weak_action(d)
        act_ok = not any(any(r) for r in W[X].rows) and not any(any(r) for r in W[GX].rows)
        g_ok = all(W[G].column(k) == A.basis_vec(k) for k in (ONE, G)) and all(
            W[G].column(k) == A.mul(A.basis_vec(G), A.basis_vec(k)) for k in (X, GX)
        )
        checks["weak action: x, gx act by 0; g fixes k[G], multiplies Rad by g"] = (act_ok and g_ok, "")
        sig = cocycle_table(d)
        eps = taft().counit
        coc = all(sig[p][q] == vec_scale(eps[p] * eps[q], A.unit) for p in range(4) for q in range(4))
        checks["cocycle is eps (x) eps"] = (coc, "")
    return RadicalBoundReport(checks, iso)


__all__ = [
    "CleftDatum",
    "CleftError",
    "DatumTransform",
    "TransformResult",
    "Normalization",
    "taft_datum",
    "trivial_datum",
    "twist_datum",
    "datum_validate",
    "datum_problems",
    "crossed_product",
    "datum_transform",
    "transform_iso",
    "compose_transforms",
    "normalize_taft_datum",
    "replay",
    "random_transform",
    "radical_bound_check",
    "taft_utilities",
    "sqrt_group_part",
    "exactness_problems",
    "algebra_map_matrix",
    "element",
    "embed_base",
]
