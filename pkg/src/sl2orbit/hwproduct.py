"""Highest-weight decomposition of products p1 * p2 of highest-weight vectors.

For p1, p2 in k[a, b] of degrees n1, n2 the product of the SL2-modules they
generate contains, for each 0 <= s <= min(n1, n2), a highest-weight vector of
weight n1 + n2 - 2s whose image under multiplication is

    sum_alpha y_{alpha,s} (ad - bc)^s a^(alpha-s) b^(n1+n2-alpha-s),

i.e. ``w_s = sum_alpha y_{alpha,s} a^(alpha-s) b^(n1+n2-alpha-s)`` in k[a, b].
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exactmath import binom
from .polyring import HomPoly2, MPoly
from .sl2action import lower_raw


@lru_cache(maxsize=200_000)
def pair_weight(n1: int, n2: int, i: int, j: int, s: int) -> Fraction:
    """Contribution of z_{1,i} z_{2,j} to y_{i+j,s}."""
    acc = Fraction(0)
    for e in range(s + 1):
        t = binom(n1 - i, e) * binom(n2 - j, s - e)
        if t:
            term = binom(s, e) * t / (binom(n1, e) * binom(n2, s - e))
            acc += -term if e & 1 else term
    return acc


def _degrees(p1: HomPoly2, p2: HomPoly2) -> tuple[int, int]:
    return p1.degree, p2.degree


def y_coeff(p1: HomPoly2, p2: HomPoly2, alpha: int, s: int) -> Fraction:
    """y^{p1,p2}_{alpha,s}; requires 0 <= s <= min(n1, n2) and s <= alpha <= n1 + n2 - s."""
    n1, n2 = _degrees(p1, p2)
    if not 0 <= s <= min(n1, n2):
        raise ValueError(f"s={s} outside 0..{min(n1, n2)}")
    if not s <= alpha <= n1 + n2 - s:
        raise ValueError(f"alpha={alpha} outside {s}..{n1 + n2 - s}")
    acc = Fraction(0)
    for i in p1.support():
        j = alpha - i
        if 0 <= j <= n2 and p2.z[j]:
            acc += pair_weight(n1, n2, i, j, s) * p1.z[i] * p2.z[j]
    return acc


def w_vector(p1: HomPoly2, p2: HomPoly2, s: int) -> HomPoly2:
    """w_s^{p1,p2}; may be the zero form (laid out in degree n1 + n2 - 2s)."""
    n1, n2 = _degrees(p1, p2)
    if not 0 <= s <= min(n1, n2):
        raise ValueError(f"s={s} outside 0..{min(n1, n2)}")
    deg = n1 + n2 - 2 * s
    z = [Fraction(0)] * (deg + 1)
    s2 = p2.support()
    for i in p1.support():
        for j in s2:
            alpha = i + j
            if s <= alpha <= n1 + n2 - s:
                z[alpha - s] += pair_weight(n1, n2, i, j, s) * p1.z[i] * p2.z[j]
    return HomPoly2(z)


@dataclass(frozen=True)
class ProductDecomposition:
    p1: HomPoly2
    p2: HomPoly2
    components: tuple[tuple[int, HomPoly2], ...]

    @property
    def nonzero(self) -> list[int]:
        return [s for s, w in self.components if not w.is_zero]

    def w(self, s: int) -> HomPoly2:
        return self.components[s][1]

    def to_json(self) -> dict:
        return {
            "p1": self.p1.to_json(),
            "p2": self.p2.to_json(),
            "components": [
                {"s": s, "degree": w.slots, "zero": w.is_zero, "w": w.to_json()} for s, w in self.components
            ],
        }


def decompose_product(p1: HomPoly2, p2: HomPoly2) -> ProductDecomposition:
    if p1.is_zero or p2.is_zero:
        raise ValueError("inputs must be nonzero")
    k = min(p1.degree, p2.degree)
    return ProductDecomposition(p1, p2, tuple((s, w_vector(p1, p2, s)) for s in range(k + 1)))


def tensor_image(p1: HomPoly2, p2: HomPoly2, s: int) -> MPoly:
    """m(v_s) from the tensor formula sum_e (-1)^e C(s,e) <-e>p1 * <-(s-e)>p2, in the free ring."""
    n1, n2 = _degrees(p1, p2)
    acc = MPoly()
    for e in range(s + 1):
        term = lower_raw(p1.to_mpoly(), e, n1) * lower_raw(p2.to_mpoly(), s - e, n2)
        acc = acc + term * (binom(s, e) * (-1) ** e)
    return acc


def coefficient_image(p1: HomPoly2, p2: HomPoly2, s: int) -> MPoly:
    """sum_alpha y_{alpha,s} (ad - bc)^s a^(alpha-s) b^(n1+n2-alpha-s), in the free ring."""
    w = w_vector(p1, p2, s)
    det = MPoly.monomial(1, 0, 0, 1) - MPoly.monomial(0, 1, 1, 0)
    return w.to_mpoly() * det**s


def verify_cg_embedding(p1: HomPoly2, p2: HomPoly2) -> bool:
    """Check the coefficient formula against the lowering-operator tensor formula for every s.

    The comparison is made in Q[a, b, c, d] before imposing ad - bc = 1,
    which is strictly stronger than comparing normal forms.
    """
    if p1.is_zero or p2.is_zero:
        raise ValueError("inputs must be nonzero")
    for s in range(min(p1.degree, p2.degree) + 1):
        if tensor_image(p1, p2, s) != coefficient_image(p1, p2, s):
            return False
    return True
