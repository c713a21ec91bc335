"""Polynomials in a, b, c, d over Q and the normal form of k[SL2].

Three representations:

* :class:`MPoly` -- a sparse polynomial of W = Q[a, b, c, d] with no relation.
* :class:`Poly4` -- an element of k[SL2] = W / (ad - bc - 1), kept in the
  normal form where no monomial contains both ``a`` and ``d``.
* :class:`HomPoly2` -- a dense homogeneous form ``sum_i z_i a^i b^(n-i)``.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Mapping, Optional, Sequence, Union

from .exactmath import Rational, fmt_scalar, parse_scalar

VARS = ("a", "b", "c", "d")
Exp = tuple[int, int, int, int]


class MPoly:
    """Sparse polynomial with exponent 4-tuples (a, b, c, d) as keys."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Mapping[Exp, Rational]] = None):
        clean: dict[Exp, Fraction] = {}
        for e, c in (terms or {}).items():
            if c:
                e = tuple(int(x) for x in e)
                if len(e) != 4 or min(e) < 0:
                    raise ValueError(f"bad exponent {e}")
                clean[e] = clean.get(e, Fraction(0)) + Fraction(c)
                if not clean[e]:
                    del clean[e]
        self.terms = clean

    # constructors ------------------------------------------------------------
    @classmethod
    def _raw(cls, terms: dict[Exp, Fraction]):
        obj = object.__new__(cls)
        obj.terms = {e: c for e, c in terms.items() if c}
        return obj

    @classmethod
    def const(cls, c: Rational):
        return cls({(0, 0, 0, 0): c})

    @classmethod
    def var(cls, name: str):
        e = [0, 0, 0, 0]
        e[VARS.index(name)] = 1
        return cls({tuple(e): 1})

    @classmethod
    def monomial(cls, i=0, j=0, k=0, l=0, c: Rational = 1):
        return cls({(i, j, k, l): c})

    # ring operations ---------------------------------------------------------
    def _wrap(self, terms: dict[Exp, Fraction]):
        return type(self)._raw(terms)

    def _coerce(self, other):
        if isinstance(other, MPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return MPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return self._wrap(out)

    __radd__ = __add__

    def __neg__(self):
        return self._wrap({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self._wrap({e: c * other for e, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[Exp, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3])
                out[e] = out.get(e, 0) + c1 * c2
        return self._wrap(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = self._wrap({(0, 0, 0, 0): Fraction(1)})
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MPoly.const(other)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def total_degrees(self) -> set[int]:
        return {sum(e) for e in self.terms}

    def only_ab(self) -> bool:
        return all(e[2] == 0 and e[3] == 0 for e in self.terms)

    def __repr__(self):
        return f"{type(self).__name__}({self})"

    def __str__(self):
        return format_terms(self.terms)

    # JSON --------------------------------------------------------------------
    def to_json(self) -> dict:
        return {
            "vars": list(VARS),
            "terms": [{"c": fmt_scalar(c), "e": list(e)} for e, c in sorted(self.terms.items(), reverse=True)],
        }

    @classmethod
    def from_json(cls, data) -> "MPoly":
        """Accepts the JSON term format or a string such as ``"a^2*b^2 + 1/3*b^4"``."""
        if isinstance(data, str):
            return cls(parse_poly_string(data).terms)
        if not isinstance(data, dict) or "terms" not in data:
            raise ValueError("polynomial must be an object with 'terms' or a string")
        names = list(data.get("vars", VARS))
        if any(v not in VARS for v in names) or len(set(names)) != len(names):
            raise ValueError(f"unsupported variables {names}")
        terms: dict[Exp, Fraction] = {}
        for t in data["terms"]:
            exps = list(t["e"])
            if len(exps) != len(names) or any((not isinstance(x, int)) or x < 0 for x in exps):
                raise ValueError(f"bad exponent list {exps}")
            full = [0, 0, 0, 0]
            for name, x in zip(names, exps):
                full[VARS.index(name)] = x
            key = tuple(full)
            terms[key] = terms.get(key, Fraction(0)) + parse_scalar(t["c"])
        return cls(terms)


def format_terms(terms: Mapping[Exp, Fraction]) -> str:
    if not terms:
        return "0"
    parts = []
    for e, c in sorted(terms.items(), reverse=True):
        mono = "*".join(
            (v if x == 1 else f"{v}^{x}") for v, x in zip(VARS, e) if x
        )
        if not mono:
            parts.append(fmt_scalar(c))
        elif c == 1:
            parts.append(mono)
        elif c == -1:
            parts.append("-" + mono)
        else:
            parts.append(f"{fmt_scalar(c)}*{mono}")
    return " + ".join(parts).replace("+ -", "- ")


def parse_poly_string(text: str) -> MPoly:
    """Parse a polynomial in a, b, c, d written in ordinary notation."""
    import sympy
    from sympy.parsing.sympy_parser import (
        convert_xor,
        implicit_multiplication_application,
        parse_expr,
        standard_transformations,
    )

    syms = sympy.symbols(VARS)
    local = dict(zip(VARS, syms))
    try:
        expr = parse_expr(
            text,
            local_dict=local,
            transformations=standard_transformations + (convert_xor, implicit_multiplication_application),
            evaluate=True,
        )
    except Exception as exc:  # sympy raises a zoo of exception types
        raise ValueError(f"cannot parse polynomial {text!r}: {exc}") from exc
    if not expr.free_symbols <= set(syms):
        raise ValueError(f"unknown symbols in {text!r}")
    try:
        poly = sympy.Poly(expr, *syms, domain="QQ")
    except Exception as exc:
        raise ValueError(f"not a polynomial: {text!r}") from exc
    return MPoly({e: Fraction(int(c.p), int(c.q)) for e, c in poly.terms()})


# ---------------------------------------------------------------------------
# k[SL2]


def _normalize_terms(terms: Mapping[Exp, Fraction]) -> dict[Exp, Fraction]:
    out: dict[Exp, Fraction] = {}
    for (i, j, k, l), c in terms.items():
        t = min(i, l)
        if t == 0:
            key = (i, j, k, l)
            out[key] = out.get(key, 0) + c
            continue
        # a^t d^t = (1 + bc)^t
        for r in range(t + 1):
            key = (i - t, j + r, k + r, l - t)
            out[key] = out.get(key, 0) + c * comb(t, r)
    return {e: c for e, c in out.items() if c}


class Poly4(MPoly):
    """Element of k[SL2] in normal form: no stored monomial has both a and d."""

    __slots__ = ()

    def __init__(self, terms: Optional[Mapping[Exp, Rational]] = None):
        super().__init__(terms)
        self.terms = _normalize_terms(self.terms)

    @classmethod
    def _raw(cls, terms):
        obj = object.__new__(cls)
        obj.terms = _normalize_terms(terms)
        return obj

    def _coerce(self, other):
        if isinstance(other, Poly4):
            return other
        if isinstance(other, MPoly):
            return normal_form(other)
        if isinstance(other, (int, Fraction)):
            return Poly4.const(other)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, MPoly) and not isinstance(other, Poly4):
            other = normal_form(other)
        return super().__eq__(other)

    __hash__ = MPoly.__hash__


def normal_form(raw: Union[MPoly, Mapping[Exp, Rational]]) -> Poly4:
    """Rewrite ad -> 1 + bc until no monomial is divisible by ad."""
    if isinstance(raw, Poly4):
        return raw
    terms = raw.terms if isinstance(raw, MPoly) else MPoly(raw).terms
    return Poly4._raw(terms)


def multiply(x: Poly4, y: Poly4) -> Poly4:
    return normal_form(x) * normal_form(y)


# ---------------------------------------------------------------------------
# Homogeneous forms in a, b


class HomPoly2:
    """Homogeneous form ``sum_i z[i] a^i b^(n-i)``.

    The zero form keeps its coefficient slots (so callers know where it came
    from) but reports ``is_zero`` and has no degree.
    """

    __slots__ = ("z",)

    def __init__(self, z: Sequence[Rational]):
        if len(z) == 0:
            raise ValueError("need at least one coefficient slot")
        self.z = tuple(Fraction(c) for c in z)

    @classmethod
    def monomial(cls, i: int, j: int, c: Rational = 1) -> "HomPoly2":
        z = [0] * (i + j + 1)
        z[i] = c
        return cls(z)

    @classmethod
    def zero(cls, n: int = 0) -> "HomPoly2":
        return cls([0] * (n + 1))

    @classmethod
    def from_mpoly(cls, p: MPoly) -> "HomPoly2":
        if not p.only_ab():
            raise ValueError("polynomial involves c or d")
        degs = p.total_degrees()
        if len(degs) > 1:
            raise ValueError("polynomial is not homogeneous")
        if not degs:
            return cls.zero()
        n = degs.pop()
        z = [Fraction(0)] * (n + 1)
        for (i, _j, _k, _l), c in p.terms.items():
            z[i] = c
        return cls(z)

    @classmethod
    def parse(cls, data) -> "HomPoly2":
        return cls.from_mpoly(MPoly.from_json(data))

    # queries -----------------------------------------------------------------
    @property
    def slots(self) -> int:
        """Degree the coefficient vector is laid out for (valid even when zero)."""
        return len(self.z) - 1

    @property
    def is_zero(self) -> bool:
        return not any(self.z)

    @property
    def degree(self) -> int:
        if self.is_zero:
            raise ValueError("the zero polynomial has no degree")
        return len(self.z) - 1

    @property
    def top_index(self) -> int:
        """Largest i with z_i != 0."""
        if self.is_zero:
            raise ValueError("empty support")
        return max(i for i, c in enumerate(self.z) if c)

    def support(self) -> list[int]:
        return [i for i, c in enumerate(self.z) if c]

    def is_monomial(self) -> bool:
        return len(self.support()) == 1

    def coeff(self, i: int) -> Fraction:
        return self.z[i] if 0 <= i < len(self.z) else Fraction(0)

    def monic(self) -> "HomPoly2":
        """Scale so the top coefficient is 1."""
        return self * (1 / self.z[self.top_index])

    # arithmetic --------------------------------------------------------------
    def __add__(self, other: "HomPoly2") -> "HomPoly2":
        if other.is_zero:
            return self
        if self.is_zero:
            return other
        if len(self.z) != len(other.z):
            raise ValueError("adding forms of different degrees")
        return HomPoly2([x + y for x, y in zip(self.z, other.z)])

    def __neg__(self):
        return HomPoly2([-c for c in self.z])

    def __sub__(self, other: "HomPoly2") -> "HomPoly2":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return HomPoly2([c * other for c in self.z])
        if not isinstance(other, HomPoly2):
            return NotImplemented
        out = [Fraction(0)] * (len(self.z) + len(other.z) - 1)
        for i, x in enumerate(self.z):
            if x:
                for j, y in enumerate(other.z):
                    if y:
                        out[i + j] += x * y
        return HomPoly2(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "HomPoly2":
        out = HomPoly2([1])
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, HomPoly2):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return self.is_zero and other.is_zero
        return self.z == other.z

    def __hash__(self):
        return hash(None) if self.is_zero else hash(self.z)

    # conversions -------------------------------------------------------------
    def to_mpoly(self) -> MPoly:
        n = len(self.z) - 1
        return MPoly({(i, n - i, 0, 0): c for i, c in enumerate(self.z) if c})

    def to_poly4(self) -> Poly4:
        return normal_form(self.to_mpoly())

    def to_json(self) -> dict:
        return self.to_mpoly().to_json()

    def __str__(self):
        return str(self.to_mpoly())

    def __repr__(self):
        return f"HomPoly2({self})"


def total_degree_components(p: MPoly) -> list[HomPoly2]:
    """Split a polynomial in a, b into its homogeneous components, by degree."""
    if not p.only_ab():
        raise ValueError("polynomial involves c or d")
    by_deg: dict[int, dict[Exp, Fraction]] = {}
    for e, c in p.terms.items():
        by_deg.setdefault(sum(e), {})[e] = c
    return [HomPoly2.from_mpoly(MPoly(by_deg[d])) for d in sorted(by_deg)]


def newton_points(p: HomPoly2) -> list[tuple[int, int]]:
    """Lattice points (u, v) of the monomials a^u b^v in the support, top a-power first."""
    if p.is_zero:
        raise ValueError("empty support")
    n = p.degree
    return [(i, n - i) for i in reversed(p.support())]


def homs(polys: Iterable) -> list[HomPoly2]:
    """Coerce strings, JSON objects or MPolys to HomPoly2."""
    out = []
    for p in polys:
        if isinstance(p, HomPoly2):
            out.append(p)
        elif isinstance(p, MPoly):
            out.append(HomPoly2.from_mpoly(p))
        else:
            out.append(HomPoly2.parse(p))
    return out
