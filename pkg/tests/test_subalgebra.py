from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from sl2orbit.polyring import HomPoly2, Poly4, normal_form
from sl2orbit.subalgebra import (
    AdmissibilityReport,
    GradedAlgebraPresentation,
    check_admissible,
    contains,
    graded_piece,
    multiplicity_free,
    piece_dimension,
    sl2_span_generators,
)
from sl2orbit.toricmonoid import Semigroup2D, monomial_admissible

P = HomPoly2.parse
G = GradedAlgebraPresentation.of


def test_presentation_dedupes_and_drops_constants():
    A = G("b^2", "2 b^2", "1", "a b")
    assert len(A.generators) == 2
    assert G().generators == ()
    with pytest.raises(ValueError):
        GradedAlgebraPresentation((P("b"),), degree_bound=0)


def test_json_round_trip():
    A = G("a b + 3 b^2", "b^3", degree_bound=10)
    B = GradedAlgebraPresentation.from_json(A.to_json())
    assert B == A and B.degree_bound == 10
    assert GradedAlgebraPresentation.from_json(["b^2"]).generators == (P("b^2"),)
    with pytest.raises(ValueError):
        GradedAlgebraPresentation.from_json({"gens": []})


def test_membership_examples():
    A = G("b^2", "a b", degree_bound=12)
    assert contains(A, P("a^2 b^2 + 5 b^4"))
    assert not contains(A, P("b^3"))
    assert not contains(A, P("a^2"))
    with pytest.raises(ValueError, match="raise degree_bound"):
        contains(A, P("b^14"))


def test_graded_pieces():
    A = G("b^2", "a b", degree_bound=8)
    assert [piece_dimension(A, d) for d in range(7)] == [1, 0, 2, 0, 3, 0, 4]
    assert graded_piece(A, 2) == [P("a b"), P("b^2")]
    assert graded_piece(A, -1) == []
    assert multiplicity_free(G("b^3"))
    assert not multiplicity_free(A)


mono_sets = st.lists(st.tuples(st.integers(0, 3), st.integers(0, 4)).filter(lambda p: p != (0, 0)), min_size=1, max_size=3)


@settings(max_examples=40)
@given(mono_sets, st.tuples(st.integers(0, 6), st.integers(0, 6)))
def test_membership_matches_semigroup(gens, pt):
    A = G(*[HomPoly2.monomial(i, j) for i, j in gens], degree_bound=12)
    S = Semigroup2D.from_generators(gens)
    assert contains(A, HomPoly2.monomial(*pt)) == S.contains(pt)


def test_admissible_verdicts():
    for f in (1, 2, 3):
        assert check_admissible(G(f"b^{f}", degree_bound=16)).passed
    assert check_admissible(G("a b", degree_bound=16)).passed
    assert check_admissible(G("b", "a b", degree_bound=10)).passed
    rep = check_admissible(G("a^2 b^2 + b^4", degree_bound=12))
    assert rep.verdict == "fail"
    assert rep.witness.s == 2
    assert rep.witness.w == P("-1/6 a^2 b^2 + 1/3 b^4")


def test_report_invariants():
    with pytest.raises(ValueError):
        AdmissibilityReport("fail", 3)
    with pytest.raises(ValueError):
        AdmissibilityReport("maybe", 0)
    assert check_admissible(G(degree_bound=4)).verdict == "inconclusive"


def test_parallel_matches_serial():
    A = G("a^2 b^2 + b^4", degree_bound=12)
    assert check_admissible(A, workers=2) == check_admissible(A, workers=1)


small = st.lists(st.tuples(st.integers(0, 2), st.integers(0, 3)).filter(lambda p: p != (0, 0)), min_size=1, max_size=2)


@settings(max_examples=25)
@given(small)
def test_check_matches_enumeration_oracle(gens):
    bound = 10
    A = G(*[HomPoly2.monomial(i, j) for i, j in gens], degree_bound=bound)
    S = Semigroup2D.from_generators(gens)
    oracle = monomial_admissible(S, bound, use_certificate=False)
    assert check_admissible(A).verdict == oracle.verdict


def test_span_generators_of_veronese():
    x, y, z = sl2_span_generators(G("b^2"))
    assert y * y == x * z
    assert x == P("b^2").to_poly4()
    assert z == normal_form({(0, 0, 0, 2): Fraction(1)})


def test_span_generators_non_monomial_warns():
    with pytest.warns(UserWarning):
        vs = sl2_span_generators(G("a b + b^2"))
    assert len(vs) == 3 and all(isinstance(v, Poly4) for v in vs)
