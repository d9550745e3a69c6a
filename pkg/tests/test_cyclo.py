import cmath
from fractions import Fraction

from hypothesis import given, settings, strategies as st

from hopfkit.cyclo import CycPoly, CycScalar, FieldSpec, poly_arithmetic, roots_of_unity_order, scalar_arithmetic, verified_roots

F8 = FieldSpec(8)
z = F8.zeta()

small = st.fractions(min_value=-5, max_value=5, max_denominator=6)
scalars = st.lists(small, min_size=4, max_size=4).map(CycScalar.from_coords)


def test_zeta_squared_is_i():
    assert (z * z).coords == (0, 0, 1, 0)
    assert z * z == F8.i()


def test_inverse_of_zeta():
    assert z.inv() == -(z**3)
    assert scalar_arithmetic(z, op="inv") == -(z**3)


def test_embed_one_plus_sqrt2():
    v = F8.one() + (z - z**3)
    assert abs(v.embed(0) - 2.414213562) < 1e-9
    assert abs(scalar_arithmetic(v, op="embed", index=0) - (1 + 2**0.5)) < 1e-12


def test_roots_x2_plus_1():
    roots, complete = verified_roots(CycPoly([1, 0, 1], 4))
    assert complete
    assert set(roots) == {z**2, -(z**2)}


def test_roots_x2_minus_2():
    roots, complete = verified_roots(CycPoly([-2, 0, 1], 4))
    s = z - z**3
    assert complete and set(roots) == {s, -s}
    assert s * s == F8(2)


def test_cube_roots_not_in_q_zeta8():
    roots, complete = verified_roots(CycPoly([1, 1, 1], 4))
    assert roots == {} and not complete


def test_poly_examples():
    x = CycPoly.x(4)
    one = CycPoly([1], 4)
    assert poly_arithmetic(x * x - one, x - one, "gcd") == x - one
    q, r = poly_arithmetic(x * x * x, x * x, "divmod")
    assert q == x and r.is_zero()
    assert not poly_arithmetic(x * x + one, z**2, "eval")


def test_roots_have_multiplicity():
    p = CycPoly.from_roots([F8.i(), F8.i(), F8(3)], 4)
    roots, complete = verified_roots(p)
    assert complete and roots == {F8(3): 1, F8.i(): 2}


def test_roots_of_unity_order():
    assert roots_of_unity_order(z) == 8
    assert roots_of_unity_order(F8(-1)) == 2
    assert roots_of_unity_order(F8(2)) is None


def test_text_round_trip():
    a = CycScalar.from_coords([Fraction(1, 2), 0, Fraction(-3, 7), 5])
    assert F8.from_text(a.to_text()) == a


def test_sixteenth_roots():
    F = FieldSpec(16)
    w = F.zeta()
    assert roots_of_unity_order(w) == 16
    assert F.i() == w**4


@settings(max_examples=60, deadline=None)
@given(scalars, scalars, scalars)
def test_field_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    if a:
        assert a * a.inv() == F8.one()


@settings(max_examples=40, deadline=None)
@given(scalars)
def test_norm_is_rational(a):
    prod = F8.one()
    for j in F8.galois_indices():
        prod = prod * a.conj(j)
    assert prod.is_rational()
    assert prod == a.norm()


@settings(max_examples=40, deadline=None)
@given(scalars, scalars)
def test_embed_is_ring_map(a, b):
    for k in range(4):
        assert cmath.isclose((a * b).embed(k), a.embed(k) * b.embed(k), abs_tol=1e-9)
        assert cmath.isclose((a + b).embed(k), a.embed(k) + b.embed(k), abs_tol=1e-9)


@settings(max_examples=30, deadline=None)
@given(st.lists(scalars, min_size=1, max_size=3), scalars)
def test_verified_roots_are_roots(rs, c):
    p = CycPoly.from_roots(rs, 4) + CycPoly([c], 4)
    if p.degree < 1:
        return
    roots, _ = verified_roots(p)
    for r in roots:
        assert not p(r)
    if not c:
        assert set(rs) <= set(roots)
