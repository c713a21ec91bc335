"""Exact scalars: rationals, generalized binomials and cyclotomic field elements.

Rationals are plain :class:`fractions.Fraction`.  Elements of Q(zeta_n) are
stored in the power basis 1, zeta, ..., zeta^(phi(n)-1), reduced modulo the
n-th cyclotomic polynomial, as an integer numerator vector over a common
positive denominator.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, gcd
from typing import NamedTuple, Union

Rational = Union[int, Fraction]


def binom(n: int, k: int) -> Fraction:
    """Generalized binomial coefficient with the falling-factorial convention.

    Zero when ``k < 0`` or when ``0 <= n < k``.
    """
    if k < 0:
        return Fraction(0)
    if n >= 0:
        return Fraction(comb(n, k)) if k <= n else Fraction(0)
    num = 1
    for t in range(k):
        num *= n - t
    den = 1
    for t in range(2, k + 1):
        den *= t
    return Fraction(num, den)


def cbinom(n: int, k: int) -> int:
    """Integer binomial for the hot loops; same vanishing rules as :func:`binom`
    for ``n >= 0``."""
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


def fmt_scalar(x: Rational) -> str:
    """Serialize a rational as ``"p/q"`` (or ``"p"`` when ``q == 1``)."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_scalar(s: Union[str, int]) -> Fraction:
    if isinstance(s, bool):
        raise ValueError(f"not a rational: {s!r}")
    if isinstance(s, int):
        return Fraction(s)
    if not isinstance(s, str):
        raise ValueError(f"not a rational: {s!r}")
    try:
        return Fraction(s.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational: {s!r}") from exc


# ---------------------------------------------------------------------------
# Appendix binomial-sum identities


class IdentityCheck(NamedTuple):
    lhs: Fraction
    rhs: Fraction
    equal: bool


def verify_lemma_A1(i: int, j: int) -> IdentityCheck:
    r"""Alternating sum over e = 0..2i against (-1)^i C(2i,i) / C(i+j,i)^2.

    Terms whose binomials C(j, 2i-e) vanish (2i - e > j) simply contribute 0.
    """
    if not 0 <= i <= j:
        raise ValueError("need 0 <= i <= j")
    n = i + j
    lhs = Fraction(0)
    for e in range(2 * i + 1):
        t = Fraction(comb(2 * i, e), comb(n, e) * comb(n, 2 * i - e))
        lhs += (-1) ** e * t * cbinom(j, e) * cbinom(j, 2 * i - e)
    rhs = Fraction((-1) ** i * comb(2 * i, i), comb(n, i) ** 2)
    return IdentityCheck(lhs, rhs, lhs == rhs)


def verify_lemma_A2(m: int, i: int) -> IdentityCheck:
    """Three-term sum against (m i^2 - m^2) / (2 m^2 (2m - 1))."""
    if m < 1 or not 0 <= i <= m:
        raise ValueError("need m >= 1 and 0 <= i <= m")
    lhs = Fraction(0)
    for e in range(3):
        t = Fraction(comb(2, e), comb(2 * m, e) * comb(2 * m, 2 - e))
        lhs += (-1) ** e * t * cbinom(m, e) * cbinom(m + i, 2 - e)
    rhs = Fraction(m * i * i - m * m, 2 * m * m * (2 * m - 1))
    return IdentityCheck(lhs, rhs, lhs == rhs)


def verify_lemma_A3(f: int, m: int, n: int) -> IdentityCheck:
    """Chu-Vandermonde form: sum_e (-1)^e C(f,e) C(n-m,e) / C(n,e) = C(m,f) / C(n,f)."""
    if not 1 <= f <= m <= n:
        raise ValueError("need 1 <= f <= m <= n")
    lhs = sum(
        (Fraction((-1) ** e * comb(f, e) * cbinom(n - m, e), comb(n, e)) for e in range(f + 1)),
        Fraction(0),
    )
    rhs = Fraction(comb(m, f), comb(n, f))
    return IdentityCheck(lhs, rhs, lhs == rhs)


# ---------------------------------------------------------------------------
# Cyclotomic fields


def _pdiv_exact(num: list[int], den: list[int]) -> list[int]:
    # coefficient lists, lowest degree first; den monic
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        c = num[k + len(den) - 1]
        out[k] = c
        if c:
            for t, d in enumerate(den):
                num[k + t] -= c * d
    if any(num[: len(den) - 1]):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, lowest degree first."""
    if n < 1:
        raise ValueError("conductor must be positive")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _pdiv_exact(poly, list(cyclotomic_poly(d)))
    return tuple(poly)


@lru_cache(maxsize=None)
def _power_table(n: int) -> tuple[tuple[int, ...], ...]:
    """x^k mod Phi_n for 0 <= k < max(n, 2 phi(n) - 1)."""
    phi_poly = cyclotomic_poly(n)
    deg = len(phi_poly) - 1
    rows = []
    cur = [1] + [0] * (deg - 1) if deg > 0 else []
    for _ in range(max(n, 2 * deg - 1)):
        rows.append(tuple(cur))
        # multiply by x and reduce
        top = cur[-1] if deg else 0
        nxt = [0] + cur[:-1]
        if top:
            nxt = [c - top * p for c, p in zip(nxt, phi_poly[:-1])]
        cur = nxt
    return tuple(rows)


def _reduce_ints(n: int, coeffs: list[int]) -> list[int]:
    table = _power_table(n)
    deg = len(cyclotomic_poly(n)) - 1
    out = list(coeffs[:deg]) + [0] * max(0, deg - len(coeffs))
    for k in range(deg, len(coeffs)):
        c = coeffs[k]
        if c:
            for t, v in enumerate(table[k]):
                if v:
                    out[t] += c * v
    return out


class Cyclotomic:
    """An element of Q(zeta_n); immutable and hashable.

    Equality with ints and Fractions works when the element is rational, and
    the hash of a rational element agrees with the hash of the Fraction.
    """

    __slots__ = ("n", "num", "den")

    def __init__(self, n: int, num, den: int = 1):
        deg = len(cyclotomic_poly(n)) - 1
        num = [int(c) for c in num]
        if len(num) != deg:
            num = _reduce_ints(n, num)
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            num, den = [-c for c in num], -den
        g = den
        for c in num:
            g = gcd(g, c)
        if g > 1:
            num = [c // g for c in num]
            den //= g
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "num", tuple(num))
        object.__setattr__(self, "den", den)

    def __setattr__(self, key, value):
        raise AttributeError("Cyclotomic is immutable")

    # construction -----------------------------------------------------------
    @classmethod
    def rational(cls, n: int, x: Rational) -> "Cyclotomic":
        x = Fraction(x)
        deg = len(cyclotomic_poly(n)) - 1
        return cls(n, [x.numerator] + [0] * (deg - 1), x.denominator)

    @classmethod
    def zeta(cls, n: int, e: int = 1) -> "Cyclotomic":
        """zeta_n ** e with zeta_n = exp(2 pi i / n) under the standard embedding."""
        return cls(n, _power_table(n)[e % n])

    @classmethod
    def from_coeffs(cls, n: int, coeffs: dict[int, Rational]) -> "Cyclotomic":
        """Build sum_e c_e zeta_n^e from an exponent -> coefficient map."""
        acc = cls.rational(n, 0)
        for e, c in coeffs.items():
            acc = acc + cls.zeta(n, int(e)) * Fraction(c)
        return acc

    # queries ----------------------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.num)

    def is_zero(self) -> bool:
        return not any(self.num)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return Fraction(self.num[0] if self.num else 0, self.den)

    def coeffs(self) -> dict[int, Fraction]:
        return {e: Fraction(c, self.den) for e, c in enumerate(self.num) if c}

    # arithmetic -------------------------------------------------------------
    def _coerce(self, other) -> "Cyclotomic":
        if isinstance(other, Cyclotomic):
            return other
        if isinstance(other, (int, Fraction)):
            return Cyclotomic.rational(self.n, other)
        return NotImplemented

    def _align(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented, NotImplemented
        if other.n == self.n:
            return self, other
        m = self.n * other.n // gcd(self.n, other.n)
        return self.promote(m), other.promote(m)

    def promote(self, m: int) -> "Cyclotomic":
        """The same number viewed in Q(zeta_m); requires n | m."""
        if m == self.n:
            return self
        if m % self.n:
            raise ValueError(f"conductor {self.n} does not divide {m}")
        step = m // self.n
        acc = [0] * (len(self.num) * step)
        for e, c in enumerate(self.num):
            acc[e * step] = c
        return Cyclotomic(m, _reduce_ints(m, acc), self.den)

    def __add__(self, other):
        a, b = self._align(other)
        if a is NotImplemented:
            return NotImplemented
        return Cyclotomic(a.n, [x * b.den + y * a.den for x, y in zip(a.num, b.num)], a.den * b.den)

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.n, [-c for c in self.num], self.den)

    def __sub__(self, other):
        a, b = self._align(other)
        if a is NotImplemented:
            return NotImplemented
        return a + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            return Cyclotomic(self.n, [c * other.numerator for c in self.num], self.den * other.denominator)
        a, b = self._align(other)
        if a is NotImplemented:
            return NotImplemented
        prod = [0] * (2 * len(a.num) - 1)
        for s, x in enumerate(a.num):
            if x:
                for t, y in enumerate(b.num):
                    if y:
                        prod[s + t] += x * y
        return Cyclotomic(a.n, _reduce_ints(a.n, prod), a.den * b.den)

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        if self.is_rational():
            return Cyclotomic.rational(self.n, 1 / self.to_fraction())
        # solve (self * y) = 1 through the multiplication matrix
        deg = self.degree
        cols = [(self * Cyclotomic.zeta(self.n, k)).coeffs() for k in range(deg)]
        mat = [[cols[k].get(r, Fraction(0)) for k in range(deg)] + [Fraction(int(r == 0))] for r in range(deg)]
        sol = _solve(mat, deg)
        return Cyclotomic.from_coeffs(self.n, dict(enumerate(sol)))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        a, b = self._align(other)
        if a is NotImplemented:
            return NotImplemented
        return a * b.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = Cyclotomic.rational(self.n, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.to_fraction() == other
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        a, b = self._align(other)
        return a.num == b.num and a.den == b.den

    def __hash__(self):
        if self.is_rational():
            return hash(self.to_fraction())
        return hash((self.n, self.num, self.den))

    def __repr__(self):
        terms = [f"{fmt_scalar(c)}*z{self.n}^{e}" for e, c in self.coeffs().items()]
        return "Cyclotomic(" + (" + ".join(terms) or "0") + ")"

    # serialization ----------------------------------------------------------
    def to_json(self) -> dict:
        return {"n": self.n, "coeffs": {str(e): fmt_scalar(c) for e, c in self.coeffs().items()}}

    @classmethod
    def from_json(cls, data: dict) -> "Cyclotomic":
        return cls.from_coeffs(int(data["n"]), {int(e): parse_scalar(c) for e, c in data["coeffs"].items()})


def _solve(mat: list[list[Fraction]], n: int) -> list[Fraction]:
    """Gauss-Jordan on an n x (n+1) augmented system with a unique solution."""
    for col in range(n):
        piv = next(r for r in range(col, n) if mat[r][col] != 0)
        mat[col], mat[piv] = mat[piv], mat[col]
        inv = 1 / mat[col][col]
        mat[col] = [x * inv for x in mat[col]]
        for r in range(n):
            if r != col and mat[r][col] != 0:
                c = mat[r][col]
                mat[r] = [x - c * y for x, y in zip(mat[r], mat[col])]
    return [mat[r][n] for r in range(n)]
