from hypothesis import given, settings, strategies as st

from hopfkit.algebra import (
    StructAlgebra,
    algebra_verify,
    characters,
    ideal_closure,
    is_representation,
    is_two_sided_ideal,
    nilpotency_index,
    radical,
    simple_modules,
    wedderburn,
)
from hopfkit.catalog import catalog_get
from hopfkit.cyclo import FieldSpec
from hopfkit.exactla import Mat, Subspace

F = FieldSpec(8)

# T_{-1} on 1, g, x, gx, written out by hand: g^2 = 1, x^2 = 0, xg = -gx
T_TABLE = {
    (0, 0): (0, 1), (0, 1): (1, 1), (0, 2): (2, 1), (0, 3): (3, 1),
    (1, 0): (1, 1), (1, 1): (0, 1), (1, 2): (3, 1), (1, 3): (2, 1),
    (2, 0): (2, 1), (2, 1): (3, -1), (2, 2): None, (2, 3): None,
    (3, 0): (3, 1), (3, 1): (2, -1), (3, 2): None, (3, 3): None,
}


def taft_by_hand():
    entries = [(i, j, k, F(c)) for (i, j), v in T_TABLE.items() if v for k, c in [v]]
    return StructAlgebra.from_entries(F, 4, entries, (F(1), F(0), F(0), F(0)), ("1", "g", "x", "gx"))


def group_algebra_c2():
    entries = [(0, 0, 0, F(1)), (0, 1, 1, F(1)), (1, 0, 1, F(1)), (1, 1, 0, F(1))]
    return StructAlgebra.from_entries(F, 2, entries, (F(1), F(0)))


def span(n, *vs):
    return Subspace.from_vectors(n, [tuple(F(a) for a in v) for v in vs], F)


def test_parser_matches_hand_table():
    T = taft_by_hand()
    assert catalog_get("T").alg.mult == T.mult


def test_verify_valid():
    assert algebra_verify(taft_by_hand()) == []
    assert algebra_verify(group_algebra_c2()) == []


def test_verify_perturbed():
    T = taft_by_hand()
    mult = [list(r) for r in T.mult]
    row = dict(mult[2][2])
    row[0] = F(1)
    mult[2][2] = row
    bad = StructAlgebra(F, 4, tuple(tuple(r) for r in mult), T.unit, T.labels)
    report = algebra_verify(bad)
    assert report and any("associativity" in w for w in report)


def test_radicals():
    assert radical(taft_by_hand()) == span(4, (0, 0, 1, 0), (0, 0, 0, 1))
    assert radical(catalog_get("kC4").alg).dim == 0
    A = catalog_get("A4pp").alg
    R = radical(A)
    assert R.dim == 2 and A.dim - R.dim == 1 + 1 + 4


def test_wedderburn_blocks():
    assert wedderburn(group_algebra_c2()).block_sizes == (1, 1)
    assert wedderburn(catalog_get("A4pp").alg).block_sizes == (1, 1, 2)
    assert wedderburn(taft_by_hand()).block_sizes == (1, 1)


def test_characters():
    A4pp = catalog_get("A4pp")
    chars = characters(A4pp.alg)
    gi, xi = A4pp.labels.index("g"), A4pp.labels.index("x")
    assert chars.complete and len(chars) == 2
    assert sorted(c[gi].to_text() for c in chars) == sorted([F(1).to_text(), F(-1).to_text()])
    assert all(not c[xi] for c in chars)
    kC4 = catalog_get("kC4")
    vals = {c[1] for c in characters(kC4.alg)}
    assert vals == {F(1), F.i(), F(-1), -F.i()}
    tc = characters(taft_by_hand())
    assert {c[1] for c in tc} == {F(1), F(-1)} and all(not c[2] and not c[3] for c in tc)


def test_simple_modules():
    A4pp = catalog_get("A4pp")
    mods = simple_modules(A4pp.alg)
    two = [m for m in mods if m.dim == 2]
    assert len(two) == 1
    rho = two[0]
    g = rho.matrices[A4pp.labels.index("g")]
    x = rho.matrices[A4pp.labels.index("x")]
    g2 = g @ g
    assert g[0, 0] + g[1, 1] == 0
    assert g2[0, 0] + g2[1, 1] == F(-2)
    assert x @ x == g2 - Mat.identity(F, 2)
    assert [m.dim for m in simple_modules(group_algebra_c2())] == [1, 1]
    assert all(m.dim == 1 for m in simple_modules(catalog_get("A4p").alg))
    assert len(simple_modules(catalog_get("A4p").alg)) == 4


def test_ideal_closure():
    T = taft_by_hand()
    I = ideal_closure(T, [T.basis_vec(2)])
    assert I == span(4, (0, 0, 1, 0), (0, 0, 0, 1))
    assert nilpotency_index(T, I) == 2
    assert ideal_closure(T, [T.unit]).dim == 4
    C2 = group_algebra_c2()
    J = ideal_closure(C2, [(F(-1), F(1))])
    assert J.dim == 1 and nilpotency_index(C2, J) is None
    assert is_two_sided_ideal(C2, J)


CATALOG = ["T", "A2", "A4p", "A4pp", "A4ppp_i", "A22", "kC4", "kC2xC2", "A"]


def test_block_dimension_count():
    for name in CATALOG:
        A = catalog_get(name).alg
        wd = wedderburn(A)
        if wd.split:
            assert sum(n * n for n in wd.block_sizes) + wd.radical.dim == A.dim, name
        chars = characters(A)
        if chars.complete and wd.split:
            assert len(chars) == list(wd.block_sizes).count(1), name


def test_modules_are_representations():
    for name in CATALOG:
        A = catalog_get(name).alg
        for rho in simple_modules(A):
            assert is_representation(A, rho), name


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(-2, 2), min_size=4, max_size=4), st.lists(st.integers(-2, 2), min_size=4, max_size=4))
def test_radical_is_nilpotent_ideal_of_subalgebra_products(a, b):
    T = taft_by_hand()
    u = tuple(F(v) for v in a)
    w = tuple(F(v) for v in b)
    R = radical(T)
    # the radical absorbs products and squares to zero in T
    for r in R.basis:
        assert R.contains(T.mul(u, r)) and R.contains(T.mul(r, w))
        for s in R.basis:
            assert not any(T.mul(r, s))
