import pytest

from hopfkit.algebra import wedderburn
from hopfkit.catalog import (
    CatalogError,
    build_presentation,
    bundled_names,
    catalog_get,
    catalog_names,
    find_taft_subalgebra,
    presentation_text,
    verify_dim8_remark,
    verify_taft_square,
    verify_unique_A,
)
from hopfkit.hopf import coradical_filtration, dual, grouplikes, iso_search


def test_known_entries():
    assert catalog_get("A4pp").dim == 8
    assert catalog_get("T").dim == 4
    assert catalog_get("TT").dim == 16
    assert catalog_get("A").dim == 8
    assert catalog_get("kC4*").dim == 4
    assert {"A", "TT", "T", "kC16"} <= set(catalog_names())


def test_unknown_entry():
    with pytest.raises(CatalogError, match="unknown"):
        catalog_get("Zorro")


def test_a4pp_relations():
    H = catalog_get("A4pp")
    g, x = (H.basis_vec(H.labels.index(s)) for s in ("g", "x"))
    m = H.mul
    g2 = m(g, g)
    assert m(g2, g2) == H.unit
    assert tuple(a - b + c for a, b, c in zip(m(x, x), g2, H.unit)) == H.zero()
    assert tuple(a + b for a, b in zip(m(g, x), m(x, g))) == H.zero()


@pytest.mark.parametrize("name", bundled_names())
def test_builds_are_deterministic(name):
    a = build_presentation(presentation_text(name))
    b = build_presentation(presentation_text(name))
    assert a.alg.mult == b.alg.mult and a.comult == b.comult
    assert a.counit == b.counit and a.antipode == b.antipode


@pytest.mark.parametrize("name", ["T", "A2", "A4p", "A4pp", "A4ppp_i", "A22", "kC4", "kC2xC2"])
def test_fingerprint_duality(name):
    H = catalog_get(name)
    assert sorted(coradical_filtration(dual(H)).block_sizes) == sorted(wedderburn(H.alg).block_sizes)


def test_unique_A_suite():
    rep = verify_unique_A()
    assert rep.ok, rep.failures()
    doc = rep.to_json()
    assert doc["coradical_type"] == [2, 1]
    names = [n for n, _, _ in rep.checks]
    assert "le2: e11^2 = alpha" in names and "le1: S(e12) = -xi e12" in names
    assert "exact sequence dim C = dim C^co pi * dim B" in names


def test_taft_square_suite():
    rep = verify_taft_square()
    assert rep.ok, rep.failures()
    assert rep.data["round_trips"] == 50


def test_dim8_suite_isomorphisms():
    rep = verify_dim8_remark()
    status = {n: ok for n, ok, _ in rep.checks}
    for key in ("A2 ~ A2*", "A4ppp_i ~ A4ppp_-i", "A4ppp_i ~ A4p*", "A22 ~ A22*", "T not ~ kC4"):
        assert status[key], key
    for name in ("A2", "A4ppp_i", "A22"):
        assert status[f"T_-1 inside {name}"]


@pytest.mark.parametrize("name", ["A2", "A4ppp_i", "A4ppp_-i", "A4p*", "A22"])
def test_remark_algebras_contain_taft(name):
    H = catalog_get(name)
    loc = find_taft_subalgebra(H)
    assert loc is not None
    assert loc.subspace.dim == 4 and loc.morphism.is_valid() and loc.morphism.is_bijective()


def test_a4pp_has_no_taft_subalgebra():
    H = catalog_get("A4pp")
    G = grouplikes(H)
    order_two = [G.elements[k] for k in range(len(G)) if G.order(k) == 2]
    # its only group-like of order two is central
    assert len(order_two) == 1
    c = order_two[0]
    assert all(H.mul(c, H.basis_vec(k)) == H.mul(H.basis_vec(k), c) for k in range(H.dim))
    assert find_taft_subalgebra(H) is None


def test_a4p_has_no_taft_subalgebra():
    assert find_taft_subalgebra(catalog_get("A4p")) is None


def test_twin_isomorphism_is_verified():
    res = iso_search(catalog_get("A4ppp_i"), catalog_get("A4ppp_-i"))
    assert res.status == "found" and res.morphism.problems() == []
