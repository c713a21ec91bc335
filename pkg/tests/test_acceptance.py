"""Acceptance suite: one pass/fail line per criterion in the terminal summary.

Run directly (``python tests/test_acceptance.py``) or through pytest.
"""

import random
import time
from fractions import Fraction

import pytest

from sl2orbit.classify import ClassLabel, classify, weight_component_closure
from sl2orbit.exactmath import verify_lemma_A1, verify_lemma_A2, verify_lemma_A3
from sl2orbit.finitegroups import catalog, molien_coefficients, reynolds_table
from sl2orbit.hwproduct import verify_cg_embedding, w_vector, y_coeff
from sl2orbit.polyring import HomPoly2
from sl2orbit.subalgebra import GradedAlgebraPresentation, check_admissible, sl2_span_generators
from sl2orbit.toricmonoid import hilbert_basis, in_cone_lattice

P = HomPoly2.parse
G = GradedAlgebraPresentation.of
QS = [Fraction(1), Fraction(3, 2), Fraction(2), Fraction(5, 2), Fraction(5, 3)]
FS = [1, 2, 3]


# 1. binomial-sum identities


def test_c1_identity_grid():
    t0 = time.perf_counter()
    for j in range(13):
        for i in range(j + 1):
            chk = verify_lemma_A1(i, j)
            assert chk.equal and chk.lhs != 0, (i, j)
    for m in range(1, 13):
        for i in range(m + 1):
            assert verify_lemma_A2(m, i).equal, (m, i)
    for n in range(1, 16):
        for m in range(1, n + 1):
            for f in range(1, m + 1):
                chk = verify_lemma_A3(f, m, n)
                assert chk.equal and chk.rhs != 0, (f, m, n)
    assert time.perf_counter() - t0 < 5


# 2. constants


def test_c2_y22_for_z0_case():
    # alpha = 2 is the a-exponent of the a^2 b^2 summand of p
    p = P("a^2 b^2 + b^4")
    assert y_coeff(p, p, 2, 2) == Fraction(1, 3)


def test_c2_top_slot_for_cube():
    # stated value -1/5; the computed value is -1/10 (see test_c2_top_slot_computed)
    p = P("a^3 b^3")
    assert y_coeff(p, p, 6, 2) == Fraction(-1, 5)


def test_c2_top_slot_computed():
    p = P("a^3 b^3")
    assert y_coeff(p, p, 6, 2) == Fraction(-1, 10)


# 3. admissibility verdicts


@pytest.mark.parametrize("gen", [f"b^{f}" for f in range(1, 7)] + ["a b", "a^2 b^2"])
def test_c3_passes(gen):
    assert check_admissible(G(gen, degree_bound=24)).passed


def test_c3_z0_case_fails():
    rep = check_admissible(G("a^2 b^2 + b^4", degree_bound=24))
    assert rep.verdict == "fail" and rep.witness.s == 2


def test_c3_z0_case_stated_witness():
    # stated witness a^2 b^2 / 3; the w_2 vector is -a^2 b^2/6 + b^4/3
    rep = check_admissible(G("a^2 b^2 + b^4", degree_bound=24))
    assert rep.witness.w == P("1/3 a^2 b^2")


def test_c3_cube_fails_in_degree_8():
    rep = check_admissible(G("a^3 b^3", degree_bound=24))
    assert rep.verdict == "fail"
    assert rep.witness.s == 2 and rep.witness.w.degree == 8


def test_c3_runtime():
    t0 = time.perf_counter()
    for gen in [f"b^{f}" for f in range(1, 7)] + ["a b", "a^2 b^2", "a^2 b^2 + b^4", "a^3 b^3"]:
        check_admissible(G(gen, degree_bound=24))
    assert time.perf_counter() - t0 < 60


# 4. coefficient formula against the lowering oracle


def test_c4_pure_powers():
    for n1 in range(7):
        for n2 in range(7):
            assert verify_cg_embedding(HomPoly2.monomial(n1, 0), HomPoly2.monomial(0, n2)), (n1, n2)


def test_c4_random_pairs():
    rng = random.Random(2024)

    def form():
        n = rng.randint(0, 6)
        z = [Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(n + 1)]
        if not any(z):
            z[-1] = Fraction(1)
        return HomPoly2(z)

    for _ in range(50):
        assert verify_cg_embedding(form(), form())


# 5. toric round trip


@pytest.mark.parametrize("f", FS)
@pytest.mark.parametrize("q", QS, ids=str)
def test_c5_round_trip(q, f):
    S = hilbert_basis(q, f)
    assert classify(S) == ClassLabel.qf(q, f)
    want = {(i, d - i) for d in range(1, 21) for i in range(d + 1) if in_cone_lattice(q, f, (i, d - i))}
    assert set(S.points(20)) - {(0, 0)} == want


# 6. spherical cases


def test_c6_spherical_cone():
    assert classify(G("b^3")) == ClassLabel.spherical_cone(3)


def test_c6_torus():
    assert classify(G("a b + 3 b^2")) == ClassLabel.homogeneous("T")


def test_c6_normalizer():
    assert classify(G("a^2 b^2")) == ClassLabel.homogeneous("N_T")


# 7. Veronese cone


def test_c7_veronese_relation():
    x, y, z = sl2_span_generators(G("b^2"))
    assert y * y == x * z


# 8. finite groups


def test_c8_orders():
    for f in range(1, 9):
        assert catalog("A", f).order == f
    assert [catalog(lab).order for lab in ("E6", "E7", "E8")] == [24, 48, 120]


def test_c8_e8_first_degree():
    c = molien_coefficients(catalog("E8"), 16)
    assert next(d for d in range(1, 17) if c[d]) == 12


def test_c8_reynolds_matches_molien():
    t0 = time.perf_counter()
    groups = [("A", f) for f in range(1, 7)] + [("D", f) for f in range(1, 5)] + [("E6", None), ("E7", None), ("E8", None)]
    for lab, f in groups:
        H = catalog(lab, f)
        assert [len(b) for b in reynolds_table(H, 16)] == molien_coefficients(H, 16), H.name
    assert time.perf_counter() - t0 < 120


# 9. weight-component extraction


def test_c9_extraction():
    B = weight_component_closure(G("a^2 b^2 + b^4", "b^2"))
    assert sorted(B.exponents()) == [(0, 2), (1, 1)]
    assert classify(B) == ClassLabel.qf(1, 2)


def test_c9_descent_vector():
    # one descent step against b^2 lowers the top monomial from a^2 b^2 to a b^3
    q1 = w_vector(P("a^2 b^2 + b^4"), P("b^2"), 1)
    assert q1.top_index == 1 and q1.is_monomial()


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
