import random

import pytest

from hopfkit.catalog import bundled_names, presentation_text
from hopfkit.algebra import algebra_verify
from hopfkit.hopf import make_hopf
from hopfkit.present import (
    InfiniteBasis,
    PresentationError,
    complete,
    complete_rewriting,
    parse_presentation,
)


def test_taft_source():
    P = parse_presentation(presentation_text("T"))
    assert P.gens == ["g", "x"] and len(P.relations) == 3


def test_a22_source():
    P = parse_presentation(presentation_text("A22"))
    assert len(P.gens) == 3 and len(P.relations) == 6


def test_syntax_error_position():
    with pytest.raises(PresentationError) as exc:
        parse_presentation("algebra Q over cyclotomic(8)\ngens g | rels")
    assert "'|'" in str(exc.value)
    assert "line 2" in str(exc.value)


def test_missing_counit():
    text = "algebra Q over cyclotomic(8)\ngens g\nrels g^2 - 1\ndelta g = g # g\n"
    with pytest.raises(PresentationError):
        parse_presentation(text)


def test_a4pp_basis():
    cp = complete_rewriting(parse_presentation(presentation_text("A4pp")), 8)
    assert len(cp.basis) == 8
    assert set(cp.labels) == {"1", "g", "g^2", "g^3", "x", "gx", "g^2x", "g^3x"}


def test_taft_cap4():
    cp = complete_rewriting(parse_presentation(presentation_text("T")), 4)
    assert cp.labels == ("1", "g", "x", "gx")


def test_free_algebra_is_infinite():
    text = "algebra free over cyclotomic(8)\ngens x\nrels\ndelta x = x # 1 + 1 # x\ncounit x = 0\n"
    with pytest.raises(InfiniteBasis) as exc:
        complete_rewriting(parse_presentation(text), 5)
    assert "dimension >= 6 at cap 5" in str(exc.value)


def test_i_is_a_scalar():
    P = parse_presentation(presentation_text("A4ppp_i"))
    assert "i" not in P.gens


@pytest.mark.parametrize("name", bundled_names())
def test_catalog_presentations_verify(name):
    cp = complete_rewriting(parse_presentation(presentation_text(name)))
    assert algebra_verify(cp.algebra) == []
    make_hopf(cp.algebra, cp.comult, cp.counit, name=name)
    if name in ("A2", "A4p", "A4pp", "A4ppp_i", "A4ppp_-i", "A22"):
        assert len(cp.basis) == 8
    if name == "T":
        assert len(cp.basis) == 4


def random_order_reduce(R, p, rng):
    """Reduce by rewriting a randomly chosen redex each time."""
    p = dict(p)
    while True:
        redexes = []
        for w in p:
            for lead in R.rules:
                n = len(lead)
                for s in range(len(w) - n + 1):
                    if w[s : s + n] == lead:
                        redexes.append((w, lead, s))
        if not redexes:
            return p
        w, lead, s = rng.choice(redexes)
        c = p.pop(w)
        for u, a in R.rules[lead].items():
            key = w[:s] + u + w[s + len(lead) :]
            v = p.get(key)
            v = c * a if v is None else v + c * a
            if v:
                p[key] = v
            else:
                p.pop(key, None)


@pytest.mark.parametrize("name", ["T", "A2", "A4p", "A4pp", "A4ppp_i", "A4ppp_-i", "A22", "kC2xC2"])
def test_reduction_is_confluent(name):
    P = parse_presentation(presentation_text(name))
    R = complete(P)
    F = P.field
    rng = random.Random(7)
    n = len(P.gens)
    for _ in range(1000):
        w = tuple(rng.randrange(n) for _ in range(rng.randint(0, 6)))
        assert random_order_reduce(R, {w: F.one()}, rng) == R.reduce({w: F.one()})
