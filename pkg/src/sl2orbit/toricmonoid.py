"""Rank-2 affine semigroups in N^2: Hilbert bases, saturation, extremal rays.

A point (i, j) stands for the monomial a^i b^j.  The cone algebras are

    S_q^(f) = span{a^i b^j : j >= q i, f | (j - i)},

whose exponent semigroup is cone((0,1), (n1,n2)) intersected with the
sublattice {f | j - i}, for q = n2/n1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable, Optional, Sequence

from .hwproduct import pair_weight
from .polyring import HomPoly2
from .subalgebra import AdmissibilityReport, Witness

Point = tuple[int, int]


def _cross(u: Point, v: Point) -> int:
    return u[0] * v[1] - u[1] * v[0]


def _primitive(v: Point) -> Point:
    g = gcd(v[0], v[1])
    return (v[0] // g, v[1] // g)


def _egcd(x: int, y: int) -> tuple[int, int, int]:
    s0, s1, t0, t1 = 1, 0, 0, 1
    while y:
        k = x // y
        x, y = y, x - k * y
        s0, s1 = s1, s0 - k * s1
        t0, t1 = t1, t0 - k * t1
    return x, s0, t0


def lattice_hnf(vectors: Iterable[Point]) -> tuple[Optional[Point], int]:
    """Hermite basis of the lattice spanned by ``vectors``: rows (x1, y1) and (0, y2).

    Returns ``(b1, y2)`` with b1 = None when every first coordinate vanishes.
    """
    b1: Optional[list[int]] = None
    y2 = 0
    for v in vectors:
        v = list(v)
        if b1 is None:
            if v[0] == 0:
                y2 = gcd(y2, v[1])
            else:
                b1 = v
            continue
        g, s, t = _egcd(b1[0], v[0])
        kill = (v[0] // g) * b1[1] - (b1[0] // g) * v[1]
        b1 = [g, s * b1[1] + t * v[1]]
        y2 = gcd(y2, kill)
    if b1 is None:
        return None, y2
    if b1[0] < 0:
        b1 = [-b1[0], -b1[1]]
    if y2:
        b1[1] %= y2
    return (b1[0], b1[1]), y2


def lattice_contains(hnf: tuple[Optional[Point], int], pt: Point) -> bool:
    b1, y2 = hnf
    i, j = pt
    if b1 is None:
        return i == 0 and (j == 0 if y2 == 0 else j % y2 == 0)
    if i % b1[0]:
        return False
    r = j - (i // b1[0]) * b1[1]
    return r == 0 if y2 == 0 else r % y2 == 0


def lattice_index(points: Iterable[Point]) -> int:
    """Index of the lattice spanned by ``points`` in Z^2 (0 when rank < 2)."""
    b1, y2 = lattice_hnf(points)
    return 0 if b1 is None else b1[0] * y2


def _rays_of(points: Sequence[Point]) -> tuple[Point, ...]:
    """Primitive extremal rays; by increasing i/j (the vertical-most first)."""
    nonzero = [p for p in points if p != (0, 0)]
    if not nonzero:
        return ()
    lo = hi = nonzero[0]
    for p in nonzero[1:]:
        if _cross(p, lo) < 0:
            lo = p  # p is more vertical than lo
        if _cross(p, hi) > 0:
            hi = p
    lo, hi = _primitive(lo), _primitive(hi)
    return (lo,) if lo == hi else (lo, hi)


@dataclass(frozen=True)
class Semigroup2D:
    """Submonoid of N^2 given by an irredundant generator list.

    ``rays`` are the primitive cone rays ordered by increasing i/j, and ``f``
    is the gcd of j - i over the generators (so the monoid lies in the
    sublattice f | j - i); f = 1 is stored when every generator is diagonal.
    """

    gens: tuple[Point, ...]
    f: int
    rays: tuple[Point, ...]
    _memo: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    def __post_init__(self):
        for p in self.gens:
            if min(p) < 0 or p == (0, 0):
                raise ValueError(f"bad generator {p}")
            if (p[1] - p[0]) % self.f:
                raise ValueError(f"generator {p} is outside the sublattice f={self.f}")

    @classmethod
    def from_generators(cls, gens: Iterable[Sequence[int]]) -> "Semigroup2D":
        pts = sorted({(int(p[0]), int(p[1])) for p in gens} - {(0, 0)})
        if not pts:
            raise ValueError("need at least one nonzero generator")
        if any(min(p) < 0 for p in pts):
            raise ValueError("generators must lie in N^2")
        # drop generators that are sums of the others
        keep = []
        for p in sorted(pts, key=lambda p: (p[0] + p[1], p)):
            if not _generated(p, keep, {}):
                keep.append(p)
        g = 0
        for p in keep:
            g = gcd(g, p[1] - p[0])
        return cls(tuple(sorted(keep)), g or 1, _rays_of(keep))

    @property
    def rank(self) -> int:
        if any(_cross(p, q) for p in self.gens for q in self.gens):
            return 2
        return 1

    def contains(self, pt: Point) -> bool:
        return _generated(tuple(pt), self.gens, self._memo)

    def points(self, max_degree: int) -> list[Point]:
        """All elements with i + j <= max_degree, by degree then i."""
        return [
            (i, d - i)
            for d in range(max_degree + 1)
            for i in range(d + 1)
            if self.contains((i, d - i))
        ]

    def lattice(self):
        return lattice_hnf(self.gens)

    def to_json(self) -> dict:
        return {"gens": [list(p) for p in self.gens], "f": self.f, "rays": [list(r) for r in self.rays]}

    @classmethod
    def from_json(cls, data) -> "Semigroup2D":
        if isinstance(data, list):
            data = {"gens": data}
        try:
            gens = [tuple(int(x) for x in p) for p in data["gens"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError("semigroup must be an object with 'gens'") from exc
        if any(len(p) != 2 for p in gens):
            raise ValueError("generators must be pairs")
        return cls.from_generators(gens)


def _generated(pt: Point, gens: Sequence[Point], memo: dict) -> bool:
    if pt == (0, 0):
        return True
    if pt[0] < 0 or pt[1] < 0:
        return False
    hit = memo.get(pt)
    if hit is not None:
        return hit
    # iterative DFS to avoid deep recursion on long chains
    stack = [pt]
    while stack:
        cur = stack[-1]
        if cur in memo:
            stack.pop()
            continue
        pending = False
        found = False
        for g in gens:
            nxt = (cur[0] - g[0], cur[1] - g[1])
            if nxt[0] < 0 or nxt[1] < 0:
                continue
            if nxt == (0, 0):
                found = True
                break
            val = memo.get(nxt)
            if val is None:
                stack.append(nxt)
                pending = True
            elif val:
                found = True
                break
        if found:
            memo[cur] = True
            stack.pop()
        elif not pending:
            memo[cur] = False
            stack.pop()
    return memo[pt]


# ---------------------------------------------------------------------------
# the cone algebras


def in_cone_lattice(q: Fraction, f: int, pt: Point) -> bool:
    i, j = pt
    return i >= 0 and j >= 0 and j * q.denominator >= q.numerator * i and (j - i) % f == 0


def hilbert_basis(q, f: int) -> Semigroup2D:
    """Hilbert basis of cone((0,1),(n1,n2)) intersected with {f | j - i}, q = n2/n1.

    Candidates are u1 = (0, f), u2 = k(n1, n2) with k the least multiple
    putting (n1, n2) into the sublattice, and the sublattice points of the
    half-open parallelogram they span; reducible candidates are discarded.
    """
    q = Fraction(q)
    if q < 1:
        raise ValueError("q must be at least 1")
    if f < 1:
        raise ValueError("f must be positive")
    n1, n2 = q.denominator, q.numerator
    k = f // gcd(f, n2 - n1)
    u2 = (k * n1, k * n2)
    cands = {(0, f), u2}
    for i in range(u2[0]):
        lo = -(-n2 * i // n1)  # ceil(q i)
        for j in range(lo, lo + f + 1):
            # half-open in the u1 direction: q i <= j < q i + f
            if n1 * j < n2 * i + f * n1 and (j - i) % f == 0 and (i, j) != (0, 0):
                cands.add((i, j))
    irreducible = [p for p in cands if not _reducible(q, f, p)]
    return Semigroup2D(tuple(sorted(irreducible)), _gcd_diff(irreducible), ((0, 1), _primitive((n1, n2))))


def _gcd_diff(points: Iterable[Point]) -> int:
    g = 0
    for p in points:
        g = gcd(g, p[1] - p[0])
    return g or 1


def _reducible(q: Fraction, f: int, pt: Point) -> bool:
    for i in range(pt[0] + 1):
        for j in range(pt[1] + 1):
            y = (i, j)
            if y in ((0, 0), pt):
                continue
            if in_cone_lattice(q, f, y) and in_cone_lattice(q, f, (pt[0] - i, pt[1] - j)):
                return True
    return False


def extremal_rays(S: Semigroup2D) -> tuple[Point, Point]:
    """The two primitive extremal rays, the one of smaller slope j/i first."""
    if S.rank < 2 or len(S.rays) < 2:
        raise ValueError("extremal rays need a rank-2 semigroup (wrong rank)")
    vert, horiz = S.rays
    return horiz, vert


def cone_lattice_points(rays: Sequence[Point], hnf) -> list[Point]:
    """Multiples u1, u2 of the rays in the lattice, plus the lattice points of their half-open parallelogram.

    Every point of the cone in the lattice is an N-combination of these.
    """
    us = []
    for r in rays:
        t = 1
        while not lattice_contains(hnf, (t * r[0], t * r[1])):
            t += 1
        us.append((t * r[0], t * r[1]))
    u1, u2 = us
    det = _cross(u1, u2)
    out = [u1, u2]
    for i in range(u1[0] + u2[0] + 1):
        for j in range(u1[1] + u2[1] + 1):
            pt = (i, j)
            if pt == (0, 0) or not lattice_contains(hnf, pt):
                continue
            # pt = (l1 u1 + l2 u2) / det; keep 0 <= l < 1
            l1 = _cross(pt, u2)
            l2 = _cross(u1, pt)
            if det > 0 and 0 <= l1 < det and 0 <= l2 < det:
                out.append(pt)
            elif det < 0 and det < l1 <= 0 and det < l2 <= 0:
                out.append(pt)
    return out


def sublattice_hnf(f: int):
    """Hermite data of {(i, j) : f | j - i}, basis (1, 1) and (0, f)."""
    return (1, 1), f


def _cone_lattice_candidates(S: Semigroup2D) -> list[Point]:
    return cone_lattice_points(S.rays, S.lattice())


def saturate_in_sublattice(S: Semigroup2D, f: int) -> Semigroup2D:
    """Hilbert basis of cone(S) meet {f | j - i}."""
    if S.rank < 2:
        r = S.rays[0]
        t = 1
        while (t * (r[1] - r[0])) % f:
            t += 1
        return Semigroup2D.from_generators([(t * r[0], t * r[1])])
    return Semigroup2D.from_generators(cone_lattice_points(S.rays, sublattice_hnf(f)))


def is_saturated(S: Semigroup2D) -> bool:
    """Whether S contains every point of Z S inside its cone."""
    if S.rank == 1:
        r = S.rays[0]
        mult = [max(p) // max(r) for p in S.gens]
        g = 0
        for m in mult:
            g = gcd(g, m)
        return min(mult) == g
    return all(S.contains(p) for p in _cone_lattice_candidates(S))


def cone_hilbert_basis(S: Semigroup2D) -> Semigroup2D:
    """Hilbert basis of cone(S) intersected with Z S (the saturation of S)."""
    if S.rank < 2:
        r = S.rays[0]
        g = 0
        for p in S.gens:
            g = gcd(g, max(p) // max(r))
        return Semigroup2D.from_generators([(g * r[0], g * r[1])])
    return Semigroup2D.from_generators(_cone_lattice_candidates(S))


def cone_parameters(S: Semigroup2D) -> Optional[tuple[Fraction, int]]:
    """(q, f) when S is exactly cone((0,1),(n1,n2)) meet {f | j - i} with q >= 1, else None."""
    if S.rank < 2 or S.rays[0] != (0, 1):
        return None
    n1, n2 = S.rays[1]
    if n1 == 0 or n2 < n1:
        return None
    f = S.f
    if lattice_index(S.gens) != f or not is_saturated(S):
        return None
    return Fraction(n2, n1), f


def monomial_admissible(S: Semigroup2D, degree_bound: int = 24, use_certificate: bool = True) -> AdmissibilityReport:
    """Admissibility of the monomial algebra of S.

    For w_s(a^i b^j, a^l b^m) = y a^(i+l-s) b^(j+m-s) the point is demanded
    only when y != 0.  For cone algebras with q >= 1, the inequalities
    j >= q i, m >= q l and -s >= -q s put the point in the cone, and the
    lattice condition is additive, so no enumeration is needed.
    """
    if use_certificate:
        params = cone_parameters(S)
        if params is not None:
            q, f = params
            return AdmissibilityReport(
                "pass", 0, None, degree_bound,
                f"certified: cone with q={q} >= 1 and sublattice f={f}; j+m-s >= q(i+l-s) for every pair",
            )
    pts = [p for p in S.points(degree_bound) if p != (0, 0)]
    checked = 0
    for x, p1 in enumerate(pts):
        n1 = p1[0] + p1[1]
        for p2 in pts[x:]:
            n2 = p2[0] + p2[1]
            if n1 + n2 > degree_bound:
                continue
            for s in range(1, min(n1, n2) + 1):
                checked += 1
                alpha = p1[0] + p2[0]
                if alpha < s or pair_weight(n1, n2, p1[0], p2[0], s) == 0:
                    continue
                target = (alpha - s, p1[1] + p2[1] - s)
                if not S.contains(target):
                    h1 = HomPoly2.monomial(*p1)
                    h2 = HomPoly2.monomial(*p2)
                    w = HomPoly2.monomial(*target, c=pair_weight(n1, n2, p1[0], p2[0], s))
                    return AdmissibilityReport(
                        "fail", checked, Witness(h1, h2, s, w), degree_bound,
                        f"w_{s} demands {target}, which is not in the semigroup",
                    )
    if checked == 0:
        return AdmissibilityReport("inconclusive", 0, None, degree_bound, "no pairs within the degree bound")
    return AdmissibilityReport("pass", checked, None, degree_bound, f"enumerated all monomial pairs up to degree {degree_bound}")
