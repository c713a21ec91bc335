"""Graded subalgebras of k[a, b] given by homogeneous generators.

Membership is decided degree by degree with exact row reduction; the
admissibility check closes every pair of graded basis elements under the
w-vectors of :mod:`hwproduct` up to a degree horizon.
"""

from __future__ import annotations

import os
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .hwproduct import w_vector
from .linalg import RowSpace
from .polyring import HomPoly2, Poly4, homs
from .sl2action import span_basis


def _vec(p: HomPoly2) -> list[Fraction]:
    # top a-power first, so row-echelon leads are the highest a-exponents
    return list(reversed(p.z))


def _from_vec(v: Sequence[Fraction]) -> HomPoly2:
    return HomPoly2(list(reversed(v)))


def _canonical(p: HomPoly2) -> HomPoly2:
    return p.monic()


@dataclass(frozen=True)
class GradedAlgebraPresentation:
    """Subalgebra of k[a, b] generated by nonconstant homogeneous forms.

    An empty generator list stands for the constants k.
    """

    generators: tuple[HomPoly2, ...]
    degree_bound: int = 24
    _pieces: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    def __post_init__(self):
        seen = []
        for g in homs(self.generators):
            if g.is_zero:
                raise ValueError("generators must be nonzero")
            if g.degree == 0:
                continue
            if _canonical(g) not in (_canonical(h) for h in seen):
                seen.append(g)
        object.__setattr__(self, "generators", tuple(seen))
        if self.degree_bound < 1:
            raise ValueError("degree_bound must be positive")

    @classmethod
    def of(cls, *gens, degree_bound: int = 24) -> "GradedAlgebraPresentation":
        return cls(tuple(homs(gens)), degree_bound)

    def with_bound(self, degree_bound: int) -> "GradedAlgebraPresentation":
        return GradedAlgebraPresentation(self.generators, degree_bound)

    def with_generators(self, gens: Iterable[HomPoly2]) -> "GradedAlgebraPresentation":
        return GradedAlgebraPresentation(tuple(gens), self.degree_bound)

    @property
    def is_monomial(self) -> bool:
        return all(g.is_monomial() for g in self.generators)

    def exponents(self) -> list[tuple[int, int]]:
        """(i, j) for each generator a^i b^j; only for monomial presentations."""
        if not self.is_monomial:
            raise ValueError("presentation is not monomial")
        return [(g.top_index, g.degree - g.top_index) for g in self.generators]

    def space(self, d: int) -> RowSpace:
        if d in self._pieces:
            return self._pieces[d]
        rs = RowSpace(d + 1)
        if d == 0:
            rs.add([1])
        else:
            for g in self.generators:
                r = d - g.degree
                if r < 0:
                    continue
                for v in self.space(r).rows.values():
                    rs.add(_vec(g * _from_vec(v)))
        self._pieces[d] = rs
        return rs

    def to_json(self) -> dict:
        return {"generators": [g.to_json() for g in self.generators], "degree_bound": self.degree_bound}

    @classmethod
    def from_json(cls, data) -> "GradedAlgebraPresentation":
        if isinstance(data, list):
            data = {"generators": data}
        if not isinstance(data, dict) or "generators" not in data:
            raise ValueError("algebra must be an object with 'generators'")
        bound = data.get("degree_bound", 24)
        if not isinstance(bound, int):
            raise ValueError("degree_bound must be an integer")
        return cls(tuple(homs(data["generators"])), bound)


def graded_piece(A: GradedAlgebraPresentation, d: int) -> list[HomPoly2]:
    """Reduced basis of A_d, top a-power leading."""
    if d < 0:
        return []
    if d > A.degree_bound:
        raise ValueError(f"degree {d} exceeds degree_bound {A.degree_bound}; raise degree_bound")
    return [_from_vec(v) for v in A.space(d).reduced_basis()]


def piece_dimension(A: GradedAlgebraPresentation, d: int) -> int:
    return A.space(d).rank


def contains(A: GradedAlgebraPresentation, p: HomPoly2) -> bool:
    if p.is_zero:
        return True
    d = p.degree
    if d > A.degree_bound:
        raise ValueError(f"degree {d} exceeds degree_bound {A.degree_bound}; raise degree_bound")
    return _vec(p) in A.space(d)


def multiplicity_free(A: GradedAlgebraPresentation) -> bool:
    """Every graded piece up to the bound has dimension at most one."""
    return all(A.space(d).rank <= 1 for d in range(A.degree_bound + 1))


@dataclass(frozen=True)
class Witness:
    p1: HomPoly2
    p2: HomPoly2
    s: int
    w: HomPoly2

    def to_json(self) -> dict:
        return {"p1": self.p1.to_json(), "p2": self.p2.to_json(), "s": self.s, "w": self.w.to_json(), "w_str": str(self.w)}


@dataclass(frozen=True)
class AdmissibilityReport:
    verdict: str  # "pass" | "fail" | "inconclusive"
    pairs_checked: int
    witness: Optional[Witness] = None
    bound: int = 0
    note: str = ""

    def __post_init__(self):
        if self.verdict not in ("pass", "fail", "inconclusive"):
            raise ValueError(f"bad verdict {self.verdict}")
        if self.verdict == "fail" and (self.witness is None or self.witness.w.is_zero):
            raise ValueError("a failing report needs a nonzero witness")

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "pairs_checked": self.pairs_checked,
            "bound": self.bound,
            "note": self.note,
            "witness": self.witness.to_json() if self.witness else None,
        }


def worker_count() -> int:
    try:
        return max(1, int(os.environ.get("SL2_ORBIT_THREADS", "1")))
    except ValueError:
        return 1


def _check_block(args):
    A, d1, d2 = args
    b1 = graded_piece(A, d1)
    b2 = b1 if d1 == d2 else graded_piece(A, d2)
    count = 0
    for x, p1 in enumerate(b1):
        for y, p2 in enumerate(b2):
            if d1 == d2 and y < x:
                continue
            for s in range(1, d1 + 1):
                count += 1
                w = w_vector(p1, p2, s)
                if not contains(A, w):
                    return count, Witness(p1, p2, s, w)
    return count, None


def check_admissible(A: GradedAlgebraPresentation, workers: Optional[int] = None) -> AdmissibilityReport:
    """Close graded basis pairs (p1, p2), deg p1 + deg p2 <= bound, under w_s for s >= 1.

    s = 0 is the plain product and always lies in A.  By bilinearity in each
    argument, checking basis pairs covers every pair of homogeneous elements
    in the horizon.  The first failure in (d1, d2, p1, p2, s) order is
    reported whatever the worker count.
    """
    bound = A.degree_bound
    blocks = [(A, d1, d2) for d1 in range(1, bound + 1) for d2 in range(d1, bound - d1 + 1)]
    for _, d1, d2 in blocks:  # fill the cache before fanning out
        A.space(d1), A.space(d2)
    workers = worker_count() if workers is None else workers
    total = 0
    if workers > 1 and len(blocks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = pool.map(_check_block, blocks, chunksize=4)
            for count, wit in results:
                total += count
                if wit is not None:
                    pool.shutdown(wait=False, cancel_futures=True)
                    return _fail(total, wit, bound)
    else:
        for blk in blocks:
            count, wit = _check_block(blk)
            total += count
            if wit is not None:
                return _fail(total, wit, bound)
    if total == 0:
        return AdmissibilityReport("inconclusive", 0, None, bound, "no pairs within the degree bound")
    return AdmissibilityReport("pass", total, None, bound, f"closed under all w-vectors up to degree {bound}")


def _fail(total: int, wit: Witness, bound: int) -> AdmissibilityReport:
    return AdmissibilityReport(
        "fail", total, wit, bound, f"w_{wit.s} of degree {wit.w.degree} is not in the algebra"
    )


def sl2_span_generators(A: GradedAlgebraPresentation) -> list[Poly4]:
    """Algebra generators of the SL2-span of A inside k[SL2].

    Each generator p of degree n contributes <-s>p for s = 0..n; for a
    monomial a^i b^j these are the module_basis vectors divided by C(n, s).
    """
    out: list[Poly4] = []
    for g in A.generators:
        if not g.is_monomial():
            warnings.warn("non-monomial generator: emitting its full lowering-operator span", stacklevel=2)
        for v in span_basis(g):
            if v not in out:
                out.append(v)
    return out


__all__ = [
    "AdmissibilityReport",
    "GradedAlgebraPresentation",
    "Witness",
    "check_admissible",
    "contains",
    "graded_piece",
    "multiplicity_free",
    "piece_dimension",
    "sl2_span_generators",
]
