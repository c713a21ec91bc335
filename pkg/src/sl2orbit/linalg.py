"""Fraction-free row echelon over Q, used for graded-piece membership."""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence


def _integral(vec: Sequence) -> list[int]:
    den = 1
    for x in vec:
        if isinstance(x, Fraction):
            den = lcm(den, x.denominator)
    return [int(x * den) for x in vec]


def _primitive(vec: list[int]) -> list[int]:
    g = 0
    for x in vec:
        g = gcd(g, x)
    if g > 1:
        vec = [x // g for x in vec]
    return vec


class RowSpace:
    """Span of rational vectors of a fixed length, kept as primitive integer rows.

    Each stored row is keyed by its leading (first nonzero) column, with a
    positive leading entry.  Elimination cross-multiplies and strips content,
    so no fractions appear during reduction.
    """

    def __init__(self, width: int, vectors: Iterable[Sequence] = ()):
        self.width = width
        self.rows: dict[int, list[int]] = {}
        for v in vectors:
            self.add(v)

    def __len__(self) -> int:
        return len(self.rows)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def _residual(self, vec: Sequence) -> list[int]:
        if len(vec) != self.width:
            raise ValueError(f"expected length {self.width}, got {len(vec)}")
        v = _primitive(_integral(vec))
        while True:
            lead = next((k for k, x in enumerate(v) if x), None)
            if lead is None or lead not in self.rows:
                return v
            r = self.rows[lead]
            p, q = r[lead], v[lead]
            v = _primitive([p * x - q * y for x, y in zip(v, r)])

    def add(self, vec: Sequence) -> bool:
        """Insert ``vec``; return True when it enlarged the span."""
        v = self._residual(vec)
        lead = next((k for k, x in enumerate(v) if x), None)
        if lead is None:
            return False
        if v[lead] < 0:
            v = [-x for x in v]
        self.rows[lead] = v
        return True

    def __contains__(self, vec: Sequence) -> bool:
        return not any(self._residual(vec))

    def reduced_basis(self) -> list[list[Fraction]]:
        """The reduced row echelon basis (leading entries 1), ordered by pivot."""
        pivots = sorted(self.rows)
        rows = {k: [Fraction(x, self.rows[k][k]) for x in self.rows[k]] for k in pivots}
        for k in reversed(pivots):
            for j in pivots:
                if j < k and rows[j][k] != 0:
                    c = rows[j][k]
                    rows[j] = [x - c * y for x, y in zip(rows[j], rows[k])]
        return [rows[k] for k in pivots]


def rank(vectors: Iterable[Sequence], width: int) -> int:
    return RowSpace(width, vectors).rank
