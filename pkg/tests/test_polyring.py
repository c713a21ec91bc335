import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from sl2orbit.polyring import (
    HomPoly2,
    MPoly,
    Poly4,
    multiply,
    newton_points,
    normal_form,
    total_degree_components,
)

a, b, c, d = (MPoly.var(v) for v in "abcd")
P = HomPoly2.parse


def test_relation_rewrites():
    assert normal_form(a * d) == normal_form(1 + b * c)
    assert normal_form(a * d - b * c) == Poly4.const(1)
    assert normal_form(a * a * d) == normal_form(a + a * b * c)


def test_normal_form_has_no_ad_terms():
    p = normal_form((a * d) ** 4 + a**3 * d**2 * b)
    assert all(e[0] == 0 or e[3] == 0 for e in p.terms)


def test_multiply_examples():
    B, D = normal_form(b), normal_form(d)
    assert multiply(B, D) == normal_form(b * d)
    assert multiply(multiply(B, D), multiply(B, D)) == multiply(normal_form(b * b), normal_form(d * d))
    assert multiply(normal_form(b * b), normal_form(1 + b * c)) == normal_form(b * b * a * d)


exps = st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3), st.integers(0, 3))
coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=4)
raw_polys = st.dictionaries(exps, coeffs, max_size=5).map(MPoly)


@given(raw_polys, raw_polys)
def test_normal_form_is_a_ring_map(x, y):
    assert normal_form(x * y) == multiply(normal_form(x), normal_form(y))
    assert normal_form(x + y) == normal_form(x) + normal_form(y)


@given(raw_polys)
def test_normal_form_idempotent(x):
    once = normal_form(x)
    assert normal_form(MPoly(once.terms)) == once


basis_exps = exps.filter(lambda e: e[0] == 0 or e[3] == 0)


@given(st.dictionaries(basis_exps, coeffs, max_size=6))
def test_normal_monomials_are_independent(terms):
    # a combination of normal monomials is already reduced
    p = MPoly(terms)
    assert normal_form(p).terms == p.terms


big = st.integers(-(2**128), 2**128)
big_terms = st.dictionaries(exps, st.builds(Fraction, big, st.integers(1, 2**128)), max_size=6)


@given(big_terms)
def test_json_round_trip_large_coefficients(terms):
    p = MPoly(terms)
    text = json.dumps(p.to_json())
    assert MPoly.from_json(json.loads(text)).terms == p.terms


def test_json_format():
    p = MPoly.from_json({"vars": ["a", "b", "c", "d"], "terms": [{"c": "1/3", "e": [2, 2, 0, 0]}]})
    assert p == a**2 * b**2 * Fraction(1, 3)
    assert p.to_json() == {"vars": ["a", "b", "c", "d"], "terms": [{"c": "1/3", "e": [2, 2, 0, 0]}]}
    two = MPoly.from_json({"vars": ["a", "b"], "terms": [{"c": "2", "e": [0, 3]}]})
    assert two == b**3 * 2


@pytest.mark.parametrize(
    "bad",
    [{"terms": [{"c": "1", "e": [1, 2]}]}, {"vars": ["x"], "terms": []}, {"terms": [{"c": "q", "e": [0, 0, 0, 0]}]}, 5],
)
def test_json_rejects_malformed(bad):
    with pytest.raises((ValueError, KeyError, TypeError)):
        MPoly.from_json(bad)


def test_string_parser():
    assert MPoly.from_json("a^2*b^2 + 1/3 b^4") == a**2 * b**2 + b**4 * Fraction(1, 3)
    with pytest.raises(ValueError):
        MPoly.from_json("a + x")
    with pytest.raises(ValueError):
        MPoly.from_json("1/a")


def test_total_degree_components():
    parts = total_degree_components(MPoly.from_json("a*b^2 + b^3 + a"))
    assert [p.degree for p in parts] == [1, 3]
    assert parts[0] == P("a") and parts[1] == P("a b^2 + b^3")
    assert total_degree_components(MPoly()) == []
    assert len(total_degree_components(P("a b^2 + b^3").to_mpoly())) == 1


@given(st.dictionaries(st.tuples(st.integers(0, 4), st.integers(0, 4)), coeffs, max_size=6))
def test_components_reconstruct(terms):
    p = MPoly({(i, j, 0, 0): x for (i, j), x in terms.items()})
    total = MPoly()
    for comp in total_degree_components(p):
        total = total + comp.to_mpoly()
    assert total == p


def test_newton_points():
    assert newton_points(P("a b^2 + b^3")) == [(1, 2), (0, 3)]
    assert newton_points(P("b^4")) == [(0, 4)]
    assert newton_points(P("a^2b^2 + a b^3 + b^4")) == [(2, 2), (1, 3), (0, 4)]
    with pytest.raises(ValueError, match="empty support"):
        newton_points(HomPoly2.zero(3))


def test_hompoly_zero_flag():
    z = HomPoly2.zero(4)
    assert z.is_zero and z == HomPoly2.zero(1)
    with pytest.raises(ValueError):
        z.degree
    with pytest.raises(ValueError):
        HomPoly2.from_mpoly(a + b * b)
    assert P("a b") * P("b") == P("a b^2")
