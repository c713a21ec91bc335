"""Left and right regular actions of SL2 on k[SL2].

Conventions (pinned by tests):

* left action ``(g.F)(X) = F(g^-1 X)``; the unipotent ``[[1,-x],[0,1]]``
  therefore sends ``a -> a + x c`` and ``b -> b + x d``.
* right translation ``R_g F(X) = F(X g)``, so ``R_h R_g = R_{hg}``.
* left torus weights: a, b -> +1 and c, d -> -1; right weights:
  b, d -> +1 and a, c -> -1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence, Union

from .exactmath import Cyclotomic, binom, fmt_scalar, parse_scalar
from .polyring import Exp, HomPoly2, MPoly, Poly4, normal_form

Scalar = Union[Fraction, Cyclotomic]


def _scalar(x) -> Scalar:
    if isinstance(x, Cyclotomic):
        return x
    if isinstance(x, str):
        return parse_scalar(x)
    return Fraction(x)


class GroupElement2:
    """An element of SL2 with exact entries (rationals or cyclotomics)."""

    __slots__ = ("m",)

    def __init__(self, m: Sequence[Sequence], check: bool = True):
        rows = tuple(tuple(_scalar(x) for x in row) for row in m)
        if len(rows) != 2 or any(len(r) != 2 for r in rows):
            raise ValueError("expected a 2x2 matrix")
        object.__setattr__(self, "m", rows)
        if check and self.det() != 1:
            raise ValueError(f"determinant is {self.det()}, not 1")

    def __setattr__(self, key, value):
        raise AttributeError("GroupElement2 is immutable")

    @classmethod
    def identity(cls) -> "GroupElement2":
        return cls([[1, 0], [0, 1]])

    @classmethod
    def lower_unipotent(cls, z) -> "GroupElement2":
        return cls([[1, 0], [z, 1]])

    @classmethod
    def upper_unipotent(cls, x) -> "GroupElement2":
        return cls([[1, x], [0, 1]])

    @classmethod
    def torus(cls, t) -> "GroupElement2":
        t = _scalar(t)
        return cls([[t, 0], [0, 1 / t]])

    @classmethod
    def weyl(cls) -> "GroupElement2":
        return cls([[0, -1], [1, 0]])

    def det(self):
        (p, q), (r, s) = self.m
        return p * s - q * r

    def __mul__(self, other: "GroupElement2") -> "GroupElement2":
        (p, q), (r, s) = self.m
        (P, Q), (R, S) = other.m
        return GroupElement2([[p * P + q * R, p * Q + q * S], [r * P + s * R, r * Q + s * S]], check=False)

    def inverse(self) -> "GroupElement2":
        (p, q), (r, s) = self.m
        return GroupElement2([[s, -q], [-r, p]], check=False)

    def trace(self):
        return self.m[0][0] + self.m[1][1]

    def is_rational(self) -> bool:
        return all(not isinstance(x, Cyclotomic) or x.is_rational() for row in self.m for x in row)

    def rational_entries(self) -> tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]:
        if not self.is_rational():
            raise ValueError("matrix has irrational entries")
        conv = lambda x: x.to_fraction() if isinstance(x, Cyclotomic) else x  # noqa: E731
        return tuple(tuple(conv(x) for x in row) for row in self.m)

    def __eq__(self, other):
        return isinstance(other, GroupElement2) and self.m == other.m

    def __hash__(self):
        return hash(self.m)

    def __repr__(self):
        return f"GroupElement2({self.m!r})"

    def to_json(self) -> dict:
        def enc(x):
            return x.to_json() if isinstance(x, Cyclotomic) else fmt_scalar(x)

        return {"m": [[enc(x) for x in row] for row in self.m]}

    @classmethod
    def from_json(cls, data: dict) -> "GroupElement2":
        def dec(x):
            return Cyclotomic.from_json(x) if isinstance(x, dict) else parse_scalar(x)

        try:
            rows = data["m"]
            return cls([[dec(x) for x in row] for row in rows])
        except (KeyError, TypeError) as exc:
            raise ValueError(f"bad group element: {data!r}") from exc


# ---------------------------------------------------------------------------
# weights


def left_weight(e: Exp) -> int:
    return e[0] + e[1] - e[2] - e[3]


def right_weight(e: Exp) -> int:
    return -e[0] + e[1] - e[2] + e[3]


@dataclass(frozen=True)
class WeightVector:
    """A Poly4 homogeneous for both torus actions."""

    value: Poly4
    left: int
    right: int

    @classmethod
    def of(cls, p) -> "WeightVector":
        if isinstance(p, HomPoly2):
            p = p.to_poly4()
        p = normal_form(p)
        if p.is_zero():
            raise ValueError("the zero vector has no weight")
        lw = {left_weight(e) for e in p.terms}
        rw = {right_weight(e) for e in p.terms}
        if len(lw) != 1 or len(rw) != 1:
            raise ValueError("polynomial is not a weight vector")
        return cls(p, lw.pop(), rw.pop())


def _unipotent_coeff(terms, e: int) -> dict[Exp, Fraction]:
    """x^e coefficient of p(a + x c, b + x d, c, d) on raw terms."""
    out: dict[Exp, Fraction] = {}
    for (i, j, k, l), c in terms.items():
        for r in range(max(0, e - j), min(i, e) + 1):
            t = e - r
            key = (i - r, j - t, k + r, l + t)
            out[key] = out.get(key, 0) + c * comb(i, r) * comb(j, t)
    return out


def lower_raw(p: MPoly, e: int, n: int) -> MPoly:
    """<-e>p in the free polynomial ring W, for p of left weight n."""
    if e < 0:
        raise ValueError("e must be nonnegative")
    if e > n:
        return MPoly()
    coeff = MPoly(_unipotent_coeff(p.terms, e))
    return coeff * (1 / binom(n, e))


def lower(v: Union[WeightVector, HomPoly2, Poly4], e: int) -> WeightVector | Poly4:
    """The lowering operator <-e>: x^e coefficient of the unipotent orbit, over binom(n, e).

    Input needs a single left weight n.  Weight vectors map to weight
    vectors; other input (mixed right weights) gives a plain Poly4, and so
    does a zero result (e > n in particular).
    """
    if e < 0:
        raise ValueError("e must be nonnegative")
    if isinstance(v, WeightVector):
        value, n, right = v.value, v.left, v.right
    else:
        value = v.to_poly4() if isinstance(v, HomPoly2) else normal_form(v)
        if value.is_zero():
            raise ValueError("cannot lower the zero vector")
        lw = {left_weight(t) for t in value.terms}
        if len(lw) != 1:
            raise ValueError("input has no single left weight")
        n = lw.pop()
        rw = {right_weight(t) for t in value.terms}
        right = rw.pop() if len(rw) == 1 else None
    if e > n:
        return Poly4()
    raw = normal_form(MPoly(_unipotent_coeff(value.terms, e)))
    if raw.is_zero():
        return Poly4()
    scale = binom(n, e)
    if scale == 0:
        raise ArithmeticError(f"binom({n}, {e}) vanishes on a nonzero coefficient")
    out = raw * (1 / scale)
    return out if right is None else WeightVector(out, n - 2 * e, right)


# ---------------------------------------------------------------------------
# right translation


def _subst(terms, images: Sequence[MPoly]) -> dict[Exp, Fraction]:
    cache: dict[tuple[int, int], MPoly] = {}

    def power(var: int, k: int) -> MPoly:
        key = (var, k)
        if key not in cache:
            cache[key] = MPoly.const(1) if k == 0 else power(var, k - 1) * images[var]
        return cache[key]

    acc: dict[Exp, Fraction] = {}
    for e, c in terms.items():
        term = MPoly.const(c)
        for var, k in enumerate(e):
            if k:
                term = term * power(var, k)
        for key, val in term.terms.items():
            acc[key] = acc.get(key, 0) + val
    return acc


def right_translate(p, g: GroupElement2):
    """p(X) -> p(X g).  HomPoly2 input stays a HomPoly2; anything else gives a Poly4."""
    (g11, g12), (g21, g22) = g.rational_entries()
    if isinstance(p, HomPoly2):
        return right_translate_hom(p, g)
    a, b, c, d = (MPoly.var(v) for v in "abcd")
    images = [a * g11 + b * g21, a * g12 + b * g22, c * g11 + d * g21, c * g12 + d * g22]
    return normal_form(_subst(normal_form(p).terms, images))


def right_translate_hom(p: HomPoly2, g: GroupElement2) -> HomPoly2:
    (g11, g12), (g21, g22) = g.rational_entries()
    n = p.slots
    # a -> g11 a + g21 b, b -> g12 a + g22 b, as dense forms z[0] = b-coefficient
    l1 = HomPoly2([g21, g11])
    l2 = HomPoly2([g22, g12])
    out = HomPoly2.zero(n)
    p1 = [HomPoly2([1])]
    p2 = [HomPoly2([1])]
    for _ in range(n):
        p1.append(p1[-1] * l1)
        p2.append(p2[-1] * l2)
    for i, z in enumerate(p.z):
        if z:
            out = out + p1[i] * p2[n - i] * z
    return out if not out.is_zero else HomPoly2.zero(n)


def right_weight_components(p: HomPoly2) -> list[tuple[int, HomPoly2]]:
    """Monomial summands of p keyed by right weight n - 2i, ascending."""
    n = p.slots
    return [(n - 2 * i, HomPoly2.monomial(i, n - i, p.z[i])) for i in reversed(p.support())]


def is_dominant(p: HomPoly2) -> bool:
    """Support on or above the diagonal: every a^i b^(n-i) has i <= n - i."""
    n = p.slots
    return all(2 * i <= n for i in p.support())


def module_basis(i_m: int, j_m: int) -> list[Poly4]:
    """v_s = sum_{i+j=s} C(i_m,i) C(j_m,j) a^(i_m-i) c^i b^(j_m-j) d^j for s = 0..i_m+j_m."""
    out = []
    for s in range(i_m + j_m + 1):
        terms = {}
        for i in range(max(0, s - j_m), min(i_m, s) + 1):
            j = s - i
            terms[(i_m - i, j_m - j, i, j)] = Fraction(comb(i_m, i) * comb(j_m, j))
        out.append(normal_form(terms))
    return out


def span_basis(p: HomPoly2) -> list[Poly4]:
    """<-s>p for s = 0..n, the lowering-operator basis of the module generated by p."""
    out = []
    for s in range(p.degree + 1):
        v = lower(p, s)
        out.append(v.value if isinstance(v, WeightVector) else v)
    return out
