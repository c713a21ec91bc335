from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from sl2orbit.hwproduct import (
    coefficient_image,
    decompose_product,
    pair_weight,
    tensor_image,
    verify_cg_embedding,
    w_vector,
    y_coeff,
)
from sl2orbit.polyring import HomPoly2

P = HomPoly2.parse

# frozen oracle values (hand-derived from the lowering formula)
FROZEN = {
    ("a^2 b^2 + b^4", "a^2 b^2 + b^4", 2, 2): Fraction(1, 3),
    ("a^2 b^2 + b^4", "a^2 b^2 + b^4", 4, 2): Fraction(-1, 6),
    ("a^3 b^3", "a^3 b^3", 6, 2): Fraction(-1, 10),
    ("a", "b", 1, 1): Fraction(1),
    ("b", "a", 1, 1): Fraction(-1),
}


@pytest.mark.parametrize("key", list(FROZEN))
def test_frozen_y_values(key):
    p1, p2, alpha, s = key
    assert y_coeff(P(p1), P(p2), alpha, s) == FROZEN[key]


def test_w_vector_examples():
    p = P("a^2 b^2 + b^4")
    assert w_vector(p, p, 2) == P("-1/6 a^2 b^2 + 1/3 b^4")
    q = P("a^3 b^3")
    assert w_vector(q, q, 2) == P("-1/10 a^4 b^4")
    # two pure b-powers never produce anything new
    for s in range(1, 4):
        assert w_vector(P("b^3"), P("b^5"), s).is_zero


def test_s_zero_is_product():
    p1, p2 = P("a b^2 + b^3"), P("a^2 b^2 + a b^3 + b^4")
    assert w_vector(p1, p2, 0) == p1 * p2


def test_range_errors():
    with pytest.raises(ValueError):
        y_coeff(P("b^2"), P("b"), 1, 2)
    with pytest.raises(ValueError):
        y_coeff(P("b^2"), P("b^2"), 0, 1)
    with pytest.raises(ValueError):
        w_vector(P("b"), P("b"), 2)
    with pytest.raises(ValueError):
        decompose_product(HomPoly2.zero(2), P("b"))


def test_three_term_pair_decomposition():
    dec = decompose_product(P("a b^2 + b^3"), P("a^2 b^2 + a b^3 + b^4"))
    assert len(dec.components) == 4
    w3 = dec.w(3)
    assert w3.slots == 1 and w3.support() == [0]
    js = dec.to_json()
    assert [c["s"] for c in js["components"]] == [0, 1, 2, 3]


def test_pair_weight_monomial_rule():
    # a^i b^(n1-i) times a^j b^(n2-j): closed form at s = 1
    for n1, n2, i, j in [(3, 2, 1, 0), (4, 4, 2, 3), (2, 5, 0, 5)]:
        expect = Fraction(n2 - j, n2) - Fraction(n1 - i, n1)
        assert pair_weight(n1, n2, i, j, 1) == expect


@pytest.mark.parametrize("n1", range(0, 5))
@pytest.mark.parametrize("n2", range(0, 5))
def test_cg_on_pure_powers(n1, n2):
    assert verify_cg_embedding(P(f"a^{n1}") if n1 else P("1"), P(f"b^{n2}") if n2 else P("1"))


forms = st.integers(1, 5).flatmap(
    lambda n: st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=4), min_size=n + 1, max_size=n + 1)
).filter(lambda z: any(z)).map(HomPoly2)


@given(forms, forms)
def test_cg_embedding_random(p1, p2):
    assert verify_cg_embedding(p1, p2)


@given(forms, forms, st.integers(0, 5))
def test_tensor_and_coefficient_agree(p1, p2, s):
    s = min(s, p1.degree, p2.degree)
    assert tensor_image(p1, p2, s) == coefficient_image(p1, p2, s)


@given(forms, forms, st.integers(1, 5))
def test_antisymmetry_in_s(p1, p2, s):
    # swapping factors introduces the sign (-1)^s
    if p1.slots != p1.degree or p2.slots != p2.degree:
        return
    s = min(s, p1.degree, p2.degree)
    assert w_vector(p2, p1, s) == w_vector(p1, p2, s) * (-1) ** s


@given(forms, forms, st.fractions(min_value=-4, max_value=4, max_denominator=3).filter(bool))
def test_bilinear(p1, p2, t):
    s = min(p1.degree, p2.degree)
    assert w_vector(p1 * t, p2, s) == w_vector(p1, p2, s) * t


def test_top_component_of_opposite_powers():
    # a^n against b^n at s = n is the bare determinant power
    for n in range(1, 6):
        assert y_coeff(P(f"a^{n}"), P(f"b^{n}"), n, n) == 1
