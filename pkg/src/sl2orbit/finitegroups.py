"""Finite subgroups of SL2 with cyclotomic matrices, Molien series and invariants.

The catalog: cyclic mu_f (TypeA), mu_f together with the Weyl element
(TypeD), and the binary tetrahedral, octahedral and icosahedral groups
(E6, E7, E8).  Invariants are taken for the right action on k[a, b],
``a^i b^(n-i) -> (g11 a + g21 b)^i (g12 a + g22 b)^(n-i)``.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .exactmath import Cyclotomic
from .linalg import RowSpace
from .polyring import HomPoly2
from .sl2action import GroupElement2
from .subalgebra import worker_count

MAX_ORDER = 10_000
LABELS = ("A", "D", "E6", "E7", "E8")


@dataclass(frozen=True)
class FiniteSubgroup:
    label: str
    f: Optional[int]
    conductor: int
    generators: tuple[GroupElement2, ...]
    elements: tuple[GroupElement2, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def name(self) -> str:
        return f"Type{self.label}({self.f})" if self.label in ("A", "D") else self.label

    def to_json(self) -> dict:
        return {"label": self.name, "order": self.order, "generators": [g.to_json() for g in self.generators]}


def _cyc(n: int, x) -> Cyclotomic:
    return x if isinstance(x, Cyclotomic) else Cyclotomic.rational(n, x)


def _mat(n: int, rows) -> GroupElement2:
    return GroupElement2([[_cyc(n, x) for x in r] for r in rows])


def closure(gens: tuple[GroupElement2, ...], cap: int = MAX_ORDER) -> tuple[GroupElement2, ...]:
    """Breadth-first closure under right multiplication by the generators."""
    ident = gens[0] * gens[0].inverse()
    seen = {ident: None}
    order = [ident]
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y not in seen:
                    seen[y] = None
                    order.append(y)
                    nxt.append(y)
                    if len(order) > cap:
                        raise ValueError(f"closure exceeds {cap} elements; generators do not span a finite group")
        frontier = nxt
    return tuple(order)


def _normalize_label(label: str) -> str:
    lab = label.strip()
    for prefix in ("Type", "type"):
        if lab.startswith(prefix):
            lab = lab[len(prefix):]
    lab = lab.split("(")[0].upper()
    if lab not in LABELS:
        raise ValueError(f"unknown group label {label!r}")
    return lab


def catalog(label: str, f: Optional[int] = None) -> FiniteSubgroup:
    lab = _normalize_label(label)
    if lab in ("A", "D"):
        if f is None:
            raise ValueError(f"Type{lab} needs f")
        if f < 1:
            raise ValueError("f must be at least 1")
        n = f
        z = Cyclotomic.zeta(n, 1)
        gens = [_mat(n, [[z.inverse(), 0], [0, z]])]
        if lab == "D":
            gens.append(_mat(n, [[0, -1], [1, 0]]))
    elif lab in ("E6", "E7"):
        n = 8
        eps = lambda e: Cyclotomic.zeta(8, e)  # noqa: E731
        inv_sqrt2 = (eps(1) + eps(7)) * Fraction(1, 2)
        gens = [
            _mat(n, [[0, -1], [1, 0]]),
            _mat(n, [[-1, 0], [0, -1]]),
            _mat(n, [[eps(7) * inv_sqrt2, eps(7) * inv_sqrt2], [eps(5) * inv_sqrt2, eps(1) * inv_sqrt2]]),
        ]
        if lab == "E7":
            gens.append(_mat(n, [[eps(1), 0], [0, eps(7)]]))
        f = None
    else:
        n = 5
        eta = lambda e: Cyclotomic.zeta(5, e)  # noqa: E731
        scale = (eta(2) - eta(3)).inverse()
        u = eta(1) + eta(4)
        gens = [
            _mat(n, [[-eta(3), 0], [0, -eta(2)]]),
            _mat(n, [[u * scale, scale], [scale, -u * scale]]),
        ]
        f = None
    gens_t = tuple(gens)
    return FiniteSubgroup(lab, f, n, gens_t, closure(gens_t))


def trivial_group() -> FiniteSubgroup:
    return catalog("A", 1)


# ---------------------------------------------------------------------------
# Molien series


def molien_coefficients(H: FiniteSubgroup, degree_bound: int) -> list[int]:
    """dim of degree-d invariants for d = 0..degree_bound.

    With det g = 1, 1/det(1 - t g) = sum_d c_d t^d where c_0 = 1,
    c_1 = tr g and c_d = tr(g) c_(d-1) - c_(d-2); the series is averaged
    over conjugacy-by-trace buckets.
    """
    buckets: dict[Cyclotomic, int] = {}
    for g in H.elements:
        tau = _cyc(H.conductor, g.trace())
        buckets[tau] = buckets.get(tau, 0) + 1
    total = [Cyclotomic.rational(H.conductor, 0)] * (degree_bound + 1)
    for tau, mult in buckets.items():
        prev, cur = Cyclotomic.rational(H.conductor, 0), Cyclotomic.rational(H.conductor, 1)
        for d in range(degree_bound + 1):
            total[d] = total[d] + cur * mult
            prev, cur = cur, tau * cur - prev
    out = []
    for d, c in enumerate(total):
        val = (c * Fraction(1, H.order))
        if not val.is_rational() or val.to_fraction().denominator != 1:
            raise ArithmeticError(f"Molien coefficient in degree {d} is not an integer: {val!r}")
        out.append(int(val.to_fraction()))
    return out


# ---------------------------------------------------------------------------
# Reynolds operator


def _sym_columns(g: GroupElement2, n: int, max_degree: int):
    """Yield, for d = 0..max_degree, the right action of g on degree-d forms.

    Column i holds the coefficients (index k <-> a^k b^(d-k)) of
    (g11 a + g21 b)^i (g12 a + g22 b)^(d-i).
    """
    (g11, g12), (g21, g22) = (tuple(_cyc(n, x) for x in row) for row in g.m)
    zero = Cyclotomic.rational(n, 0)
    cols = [[Cyclotomic.rational(n, 1)]]
    yield cols
    for d in range(1, max_degree + 1):
        new = []
        # i = 0: multiply the previous i = 0 column by L2 = g22 b + g12 a
        for i in range(d + 1):
            if i == 0:
                src, lb, la = cols[0], g22, g12
            else:
                src, lb, la = cols[i - 1], g21, g11
            col = [zero] * (d + 1)
            for k, c in enumerate(src):
                if not c.is_zero():
                    col[k] = col[k] + c * lb
                    col[k + 1] = col[k + 1] + c * la
            new.append(col)
        cols = new
        yield cols


def _average_matrices(H: FiniteSubgroup, max_degree: int, elements) -> list[list[list[Cyclotomic]]]:
    n = H.conductor
    acc = [[[Cyclotomic.rational(n, 0)] * (d + 1) for _ in range(d + 1)] for d in range(max_degree + 1)]
    for g in elements:
        for d, cols in enumerate(_sym_columns(g, n, max_degree)):
            for i, col in enumerate(cols):
                row = acc[d][i]
                for k, c in enumerate(col):
                    if not c.is_zero():
                        row[k] = row[k] + c
    return acc


def _average_chunk(args):
    H, max_degree, lo, hi = args
    return _average_matrices(H, max_degree, H.elements[lo:hi])


def reynolds_columns(H: FiniteSubgroup, max_degree: int) -> list[list[list[Cyclotomic]]]:
    """For each degree d, the averaged images of a^i b^(d-i) as coefficient lists."""
    workers = worker_count()
    if workers > 1 and H.order > 1:
        step = -(-H.order // workers)
        chunks = [(H, max_degree, lo, min(lo + step, H.order)) for lo in range(0, H.order, step)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_average_chunk, chunks))
        acc = parts[0]
        for part in parts[1:]:
            for d in range(max_degree + 1):
                for i in range(d + 1):
                    acc[d][i] = [x + y for x, y in zip(acc[d][i], part[d][i])]
    else:
        acc = _average_matrices(H, max_degree, H.elements)
    inv = Fraction(1, H.order)
    return [[[c * inv for c in col] for col in cols] for cols in acc]


def _cyclotomic_rank(vectors: list[list[Cyclotomic]]) -> int:
    rows = [list(v) for v in vectors if any(not c.is_zero() for c in v)]
    if not rows:
        return 0
    width = len(rows[0])
    rank = 0
    for col in range(width):
        piv = next((r for r in range(rank, len(rows)) if not rows[r][col].is_zero()), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = rows[rank][col].inverse()
        prow = [c * inv for c in rows[rank]]
        rows[rank] = prow
        for r in range(len(rows)):
            if r != rank and not rows[r][col].is_zero():
                factor = rows[r][col]
                rows[r] = [x - factor * y for x, y in zip(rows[r], prow)]
        rank += 1
    return rank


def _rational_basis(cols: list[list[Cyclotomic]], d: int) -> list[HomPoly2]:
    k_rank = _cyclotomic_rank(cols)
    space = RowSpace(d + 1)
    for col in cols:
        comps: dict[int, list[Fraction]] = {}
        for k, c in enumerate(col):
            for e, x in c.coeffs().items():
                comps.setdefault(e, [Fraction(0)] * (d + 1))[d - k] = x
        for vec in comps.values():
            space.add(vec)
    if space.rank != k_rank:
        raise ArithmeticError(
            f"invariants of degree {d} are not spanned by rational forms (ranks {space.rank} vs {k_rank})"
        )
    return [HomPoly2(list(reversed(v))) for v in space.reduced_basis()]


def reynolds_invariants(H: FiniteSubgroup, d: int) -> list[HomPoly2]:
    """Rational basis of the degree-d right invariants, via the averaging operator."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    return _rational_basis(reynolds_columns(H, d)[d], d)


def reynolds_table(H: FiniteSubgroup, max_degree: int) -> list[list[HomPoly2]]:
    """reynolds_invariants for every d = 0..max_degree, sharing one pass over the group."""
    cols = reynolds_columns(H, max_degree)
    return [_rational_basis(cols[d], d) for d in range(max_degree + 1)]


def apply_reynolds(H: FiniteSubgroup, p: HomPoly2) -> HomPoly2:
    """Average a rational form over H; raises if the result leaves Q."""
    d = p.slots
    cols = reynolds_columns(H, d)[d]
    out = []
    for k in range(d + 1):
        acc = Cyclotomic.rational(H.conductor, 0)
        for i, z in enumerate(p.z):
            if z:
                acc = acc + cols[i][k] * z
        out.append(acc.to_fraction())
    return HomPoly2(out)
