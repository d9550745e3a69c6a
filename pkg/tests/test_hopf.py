import pytest

from hopfkit.algebra import StructAlgebra, wedderburn
from hopfkit.catalog import catalog_get, comatrix_basis_of_A
from hopfkit.cyclo import FieldSpec
from hopfkit.exactla import Mat, Subspace, vec_sub
from hopfkit.hopf import (
    hopf_problems,
    HopfError,
    HopfMorphism,
    antipode_property_problems,
    check_exact_sequence,
    coinvariants,
    coradical_filtration,
    dual,
    filtration_problems,
    fingerprint,
    generated_subalgebra,
    grouplikes,
    iso_search,
    make_hopf,
    restrict_hopf,
    skew_primitives,
    stefan_comatrix_basis,
    tensor_product,
    tensors_equal,
    translation_action,
)

F = FieldSpec(8)
ALL = ["T", "A2", "A4p", "A4pp", "A4ppp_i", "A4ppp_-i", "A22", "A", "TT",
       "kC2", "kC4", "kC2xC2", "kC8", "kC16", "kC8xC2", "kC4xC4", "kC4xC2xC2", "kC2xC2xC2xC2"]


def ground_field():
    alg = StructAlgebra.from_entries(F, 1, [(0, 0, 0, F(1))], (F(1),), ("1",))
    return make_hopf(alg, [{(0, 0): F(1)}], [F(1)])


def vec(H, **coeffs):
    v = [F.zero()] * H.dim
    for lab, c in coeffs.items():
        v[H.labels.index(lab.replace("_", "^"))] = F(c)
    return tuple(v)


# -- construction ---------------------------------------------------------------


def test_taft_antipode():
    T = catalog_get("T")
    x, g = T.basis_vec(2), T.basis_vec(1)
    assert T.S(x) == tuple(-a for a in T.mul(x, g))
    assert T.S(g) == g


def test_group_algebra_antipode():
    H = catalog_get("kC2")
    assert H.S(H.basis_vec(1)) == H.basis_vec(1)


def test_idempotent_grouplike_has_no_antipode():
    alg = StructAlgebra.from_entries(F, 2, [(0, 0, 0, F(1)), (0, 1, 1, F(1)), (1, 0, 1, F(1)), (1, 1, 1, F(1))], (F(1), F(0)))
    with pytest.raises(HopfError, match="antipode"):
        make_hopf(alg, [{(0, 0): F(1)}, {(1, 1): F(1)}], [F(1), F(1)])


def test_dual_examples():
    T = catalog_get("T")
    assert iso_search(dual(T), T).status == "found"
    D = dual(catalog_get("kC2"))
    assert len(grouplikes(D)) == 2 and fingerprint(D).semisimple
    assert fingerprint(dual(catalog_get("A4pp"))).coradical_type == (2, 1)


def test_tensor_examples():
    TT = catalog_get("TT")
    assert TT.dim == 16 and len(grouplikes(TT)) == 4 and fingerprint(TT).pointed
    T = catalog_get("T")
    assert iso_search(tensor_product(T, ground_field()), T).status == "found"


def test_grouplikes():
    T = catalog_get("T")
    G = grouplikes(T)
    assert G.elements == [T.unit, T.basis_vec(1)]
    assert len(grouplikes(catalog_get("A"))) == 2
    Gd = grouplikes(dual(catalog_get("kC4")))
    assert Gd.orders() == [1, 2, 4, 4]


def test_skew_primitives():
    T = catalog_get("T")
    P, nt = skew_primitives(T, T.unit, T.basis_vec(1))
    assert P.dim == 2 and nt == 1
    assert P.contains(vec_sub(T.unit, T.basis_vec(1))) and P.contains(T.basis_vec(2))
    K = catalog_get("kC2xC2")
    P, nt = skew_primitives(K, K.unit, K.unit)
    assert P.dim == 0 and nt == 0


def test_skew_primitive_in_A():
    _, chars, _, e = comatrix_basis_of_A()
    A = catalog_get("A")
    gi = catalog_get("A4pp").labels.index("g")
    alpha = next(tuple(c) for c in chars if c[gi] == F(-1))
    y = A.mul(e[1, 1], e[2, 1])
    P, nt = skew_primitives(A, A.unit, alpha)
    assert P.contains(y) and nt == 1


def test_coradical_filtrations():
    cor = coradical_filtration(catalog_get("T"))
    assert [U.dim for U in cor.filtration] == [2, 4] and cor.type == (2,)
    cor = coradical_filtration(catalog_get("A"))
    assert cor.filtration[0].dim == 6 and cor.type == (2, 1)
    K = catalog_get("kC4")
    assert [U.dim for U in coradical_filtration(K).filtration] == [4]


def test_fingerprints():
    fp = fingerprint(catalog_get("A"))
    assert (fp.dim, fp.coradical_type, fp.grouplike_order, fp.antipode_order) == (8, (2, 1), 2, 4)
    assert not fp.semisimple and not fp.pointed and not fp.chevalley
    fp = fingerprint(catalog_get("kC2xC2"))
    assert fp.semisimple and fp.pointed and fp.chevalley
    # S(g) = g^-1 = g for every g in C2 x C2, so S is the identity
    assert fp.antipode_order == 1
    assert fingerprint(catalog_get("kC4")).antipode_order == 2
    assert fingerprint(catalog_get("T")).antipode_order == 4


def test_generated_subalgebras():
    A = catalog_get("A")
    C = next(C for C in coradical_filtration(A).simple_subcoalgebras if C.dim == 4)
    gen = generated_subalgebra(A, C)
    assert gen.subspace.dim == 8 and gen.is_hopf_subalgebra
    T = catalog_get("T")
    gen = generated_subalgebra(T, [T.basis_vec(1)])
    assert gen.subspace.dim == 2 and gen.is_hopf_subalgebra
    gen = generated_subalgebra(T, [T.basis_vec(2)])
    assert gen.subspace == Subspace.from_vectors(4, [T.unit, T.basis_vec(2)], F)
    assert not gen.is_subbialgebra


def test_translations():
    T = catalog_get("T")
    rep = translation_action(T, T.basis_vec(1), "ad_left")
    assert rep.matrix == Mat.from_rows([[F(a) if i == j else F(0) for j in range(4)] for i, a in enumerate([1, 1, -1, -1])])
    assert translation_action(T, T.unit, "left").is_identity
    A = catalog_get("A")
    alpha = grouplikes(A).elements[1]
    rep = translation_action(A, alpha, "left")
    simples = coradical_filtration(A).simple_subcoalgebras
    k = next(k for k, C in enumerate(simples) if C.dim == 4)
    assert rep.permutation[k] == k


# -- Stefan comatrix bases ---------------------------------------------------------


def _four_dim(A):
    return next(C for C in coradical_filtration(A).simple_subcoalgebras if C.dim == 4)


def test_stefan_square_of_antipode():
    A = catalog_get("A")
    C = _four_dim(A)
    S2 = A.antipode @ A.antipode
    cb = stefan_comatrix_basis(A, C, S2)
    assert cb.omega == F(-1) and cb.order == 2
    e12 = cb.e(1, 2)
    assert S2.apply(e12) == tuple(-a for a in e12)


def test_stefan_identity_rejected():
    A = catalog_get("A")
    with pytest.raises(HopfError, match="identity automorphism"):
        stefan_comatrix_basis(A, _four_dim(A), Mat.identity(F, 8))


def test_stefan_left_translation():
    A = catalog_get("A")
    C = _four_dim(A)
    alpha = grouplikes(A).elements[1]
    L = A.alg.left_matrix(alpha)
    cb = stefan_comatrix_basis(A, C, L)
    from hopfkit.hopf.stefan import matrix_order

    cols = [C.coords(L.apply(c)) for c in C.basis]
    assert cb.order == matrix_order(Mat.from_columns(cols, 4), F)
    for (i, j), v in cb.basis.items():
        assert L.apply(v) == tuple(cb.omega ** (i - j) * a for a in v)


# -- coinvariants and exact sequences --------------------------------------------------


def _projection_second(TT, T):
    cols = []
    for i in range(4):
        for j in range(4):
            cols.append(tuple(T.counit[i] * a for a in T.basis_vec(j)))
    return HopfMorphism(TT, T, Mat.from_columns(cols, 4))


def _inclusion_first(T, TT):
    return HopfMorphism(T, TT, Mat.from_columns([TT.basis_vec(4 * a) for a in range(4)], 16))


def test_coinvariants_of_tensor_projection():
    T, TT = catalog_get("T"), catalog_get("TT")
    co = coinvariants(TT, _projection_second(TT, T))
    assert co == Subspace.from_vectors(16, [TT.basis_vec(4 * a) for a in range(4)], F)


def test_coinvariants_of_counit():
    T = catalog_get("T")
    k = ground_field()
    eps = HopfMorphism(T, k, Mat.from_rows([list(T.counit)]))
    assert coinvariants(T, eps).dim == 4


def test_exact_sequence_tensor():
    T, TT = catalog_get("T"), catalog_get("TT")
    rep = check_exact_sequence(_inclusion_first(T, TT), _projection_second(TT, T))
    assert rep.ok, rep.lines()


def test_exact_sequence_of_A():
    A, H = catalog_get("A"), catalog_get("A4pp")
    alpha = grouplikes(A).elements[1]
    _, _, _, e = comatrix_basis_of_A()
    gen = generated_subalgebra(A, [alpha, A.mul(e[1, 1], e[2, 1])])
    T = restrict_hopf(A, gen.subspace)
    g = H.basis_vec(H.labels.index("g"))
    K = Subspace.from_vectors(8, [H.unit, H.mul(g, g)], F)
    B = dual(restrict_hopf(H, K))
    psi = HopfMorphism(A, B, Mat.from_rows([list(u) for u in K.basis], 8))
    assert coinvariants(A, psi) == gen.subspace
    rep = check_exact_sequence(HopfMorphism(T, A, Mat.from_columns(list(gen.subspace.basis), 8)), psi)
    assert rep.ok, rep.lines()
    assert rep.conditions["dim C = dim C^co pi * dim B"][1] == "8 = 4*2"


def test_non_surjective_projection():
    T = catalog_get("T")
    ue = Mat.from_columns([tuple(c * a for a in T.unit) for c in T.counit], 4)
    rep = check_exact_sequence(HopfMorphism(T, T, Mat.identity(F, 4)), HopfMorphism(T, T, ue))
    ok, detail = rep.conditions["(ii) pi surjective"]
    assert not ok and "not in the image" in detail


# -- isomorphisms -----------------------------------------------------------------


@pytest.mark.parametrize("a,b", [("A2", "A2*"), ("A4ppp_i", "A4p*"), ("T", "T*")])
def test_iso_found(a, b):
    res = iso_search(catalog_get(a), catalog_get(b))
    assert res.status == "found"
    m = res.morphism
    assert m.problems() == [] and m.is_bijective()
    assert (m.matrix @ m.matrix.inverse(F)).is_identity()


def test_iso_refuted():
    res = iso_search(catalog_get("T"), catalog_get("kC4"))
    assert res.status == "refuted" and "semisimplicity" in res.reason


# -- properties over the catalog ------------------------------------------------------


@pytest.mark.parametrize("name", ALL)
def test_catalog_properties(name):
    H = catalog_get(name)
    assert antipode_property_problems(H) == []
    assert filtration_problems(H) == []
    assert tensors_equal(dual(dual(H)), H)
    sizes = sorted(wedderburn(dual(H).alg).block_sizes)
    assert sorted(coradical_filtration(H).block_sizes) == sizes


@pytest.mark.parametrize("a,b", [("T", "kC2"), ("T", "T"), ("kC4", "A"), ("A2", "kC2")])
def test_grouplikes_of_tensor(a, b):
    H, K = catalog_get(a), catalog_get(b)
    assert len(grouplikes(tensor_product(H, K))) == len(grouplikes(H)) * len(grouplikes(K))


@pytest.mark.parametrize("name", ["T", "A2", "A4pp", "kC2xC2", "kC8", "TT"])
def test_unchecked_dual_satisfies_axioms(name):
    H = catalog_get(name)
    assert hopf_problems(H) == []
    assert hopf_problems(dual(H)) == []
