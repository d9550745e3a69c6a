import random

import pytest
from hypothesis import given, settings, strategies as st

from hopfkit import cleft
from hopfkit.algebra import algebra_verify
from hopfkit.cleft import (
    CleftDatum,
    CleftError,
    DatumTransform,
    compose_transforms,
    crossed_product,
    datum_problems,
    datum_transform,
    element,
    embed_base,
    normalize_taft_datum,
    radical_bound_check,
    random_transform,
    taft_datum,
    taft_utilities,
    transform_iso,
    trivial_datum,
    twist_datum,
)
from hopfkit.cyclo import FieldSpec
from hopfkit.exactla import vec_scale

F = FieldSpec(8)
T = cleft.taft()
A = T.alg
ONE, G, X, GX = (A.basis_vec(k) for k in range(4))


def v(a=0, b=0, c=0, d=0):
    return tuple(F(t) for t in (a, b, c, d))


# -- T utilities ------------------------------------------------------------------


def test_unit_test():
    assert not taft_utilities("unit", v(1, 1))
    assert taft_utilities("unit", v(1, 0, 5, 3))
    assert taft_utilities("unit", v(2, 1, 1))


def test_involution():
    assert taft_utilities("involution", v(0, 1, 1))
    assert not taft_utilities("involution", v(0, 0, 1))


def test_sqrt_of_g():
    s = taft_utilities("sqrt", G)
    half = F(1) / 2
    assert s == (half + half * F.i(), half - half * F.i(), F(0), F(0))
    assert A.mul(s, s) == G


def test_sqrt_needs_bigger_field():
    with pytest.raises(CleftError, match="Q\\(zeta_16\\)"):
        taft_utilities("sqrt", v(0, F.zeta()))


def test_radical():
    assert taft_utilities("radical").basis == (X, GX)


# -- validation -------------------------------------------------------------------


def test_canonical_data_validate():
    assert datum_problems(trivial_datum()) == {}
    assert datum_problems(twist_datum()) == {}
    assert twist_datum().F.apply(X) == GX


def test_alpha_g_violates_d3():
    probs = datum_problems(taft_datum(alpha=G))
    assert list(probs) == ["D3"] and "a = x" in probs["D3"][0]


def test_non_unit_alpha():
    probs = datum_problems(taft_datum(alpha=X))
    assert "alpha" in probs


# -- crossed products -------------------------------------------------------------


def gx_datum(seed=3):
    """A valid datum with gamma != 0, from a transform of the twist datum."""
    d = datum_transform(twist_datum(), random_transform(seed)).datum
    assert any(d.gamma) and datum_problems(d) == {}
    return d


@pytest.mark.parametrize("d", [trivial_datum(), twist_datum(), gx_datum()], ids=["D0", "twist", "perturbed"])
def test_crossed_product_relations(d):
    C = crossed_product(d)
    assert algebra_verify(C) == []
    g, x, gx = element(d, ONE, 1), element(d, ONE, 2), element(d, ONE, 3)
    assert C.mul(g, g) == embed_base(d, d.alpha)
    assert C.mul(x, x) == embed_base(d, d.beta)
    assert C.mul(g, x) == gx
    # GX + XG = gamma
    s = tuple(a + b for a, b in zip(C.mul(g, x), C.mul(x, g)))
    assert s == embed_base(d, d.gamma)
    for k in range(4):
        a = embed_base(d, A.basis_vec(k))
        assert C.mul(g, a) == C.mul(embed_base(d, d.F.apply(A.basis_vec(k))), g)
        rhs = tuple(p + q for p, q in zip(C.mul(a, x), C.mul(embed_base(d, d.D.apply(A.basis_vec(k))), g)))
        assert C.mul(x, a) == rhs


def test_transposed_cocycle_is_not_associative(monkeypatch):
    d = gx_datum(0)
    orig = cleft.cocycle_table
    monkeypatch.setattr(cleft, "cocycle_table", lambda dd: [list(r) for r in zip(*orig(dd))])
    C = crossed_product(d, check=False)
    assert any("associativity" in w for w in algebra_verify(C))


# -- transforms -------------------------------------------------------------------


def test_identity_transform():
    d = twist_datum()
    assert datum_transform(d, DatumTransform(ONE, A.zero())).datum == d


def test_conjugation_by_g():
    res = datum_transform(trivial_datum(), DatumTransform(G, A.zero()))
    assert res.datum.alpha == ONE
    for k in range(4):
        a = A.basis_vec(k)
        assert res.datum.F.apply(a) == A.mul(A.mul(G, a), G)
    res = datum_transform(twist_datum(), DatumTransform(G, A.zero()))
    assert res.datum.F.apply(X) == vec_scale(F(-1), GX)


def _random_pair(seed):
    rng = random.Random(seed)
    return random_transform(rng), random_transform(rng)


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from(["D0", "twist"]))
def test_transforms_compose(seed, which):
    d = trivial_datum() if which == "D0" else twist_datum()
    t1, t2 = _random_pair(seed)
    stepwise = datum_transform(datum_transform(d, t1).datum, t2).datum
    assert datum_transform(d, compose_transforms(A, t1, t2)).datum == stepwise


@settings(max_examples=10, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from(["D0", "twist"]))
def test_transform_gives_algebra_isomorphism(seed, which):
    d = trivial_datum() if which == "D0" else twist_datum()
    d = datum_transform(d, random_transform(seed)).datum
    tau = random_transform(seed + 1)
    res, M = transform_iso(d, tau)
    assert all(res.flags.values())
    Cp, C = crossed_product(res.datum), crossed_product(d)
    assert M.rank() == 16
    assert M.apply(Cp.unit) == C.unit
    for i in range(16):
        for j in range(16):
            assert M.apply(Cp.mul_basis(i, j)) == C.mul(M.column(i), M.column(j))


# -- normalization ----------------------------------------------------------------


@pytest.mark.parametrize("d,name", [(trivial_datum(), "D0"), (twist_datum(), "twist")])
def test_normalize_is_idempotent(d, name):
    n = normalize_taft_datum(d)
    assert n.canonical == name and n.datum == d
    assert len(n.transcript) == 5


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from(["D0", "twist"]))
def test_normalize_round_trip(seed, which):
    d = trivial_datum() if which == "D0" else twist_datum()
    res = datum_transform(d, random_transform(seed))
    assert all(res.flags.values())
    n = normalize_taft_datum(res.datum)
    assert n.canonical == which and n.datum == d
    for step in n.transcript:
        assert datum_problems(step.datum) == {}
    assert cleft.replay(res.datum, n.transcript) == d


def test_normalize_rejects_invalid():
    with pytest.raises(CleftError, match="invalid datum"):
        normalize_taft_datum(taft_datum(alpha=G))


def test_normalize_rejects_bad_counit():
    d = taft_datum(alpha=vec_scale(F(2), ONE))
    with pytest.raises(CleftError, match="eps\\(alpha\\)"):
        normalize_taft_datum(d)


# -- radical bound ----------------------------------------------------------------


def test_radical_bound_twist():
    rep = radical_bound_check(twist_datum())
    assert rep.ok, rep.lines()
    assert rep.checks["dim C / sum = 4"][1] == "16 - 12 = 4"


def test_radical_bound_trivial():
    rep = radical_bound_check(trivial_datum())
    assert rep.ok and rep.iso_matrix is not None


def test_radical_bound_noncanonical():
    with pytest.raises(CleftError, match="non-canonical"):
        radical_bound_check(taft_datum(alpha=G))


def test_json_round_trip():
    d = gx_datum()
    assert CleftDatum.from_json(d.to_json()) == d
