"""From a presentation of A = k[X]^U to the isomorphism class of X.

The outcome is one of

* ``Homogeneous(H)`` -- X = SL2/H (H = SL2, T, N_T, mu_f, ...),
* ``SphericalCone(f)`` -- the cone over the degree-f rational normal curve,
* ``QF(q, f)`` -- the two-dimensional algebras S_q^(f).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional, Union

from .exactmath import fmt_scalar
from .finitegroups import catalog, molien_coefficients
from .hwproduct import pair_weight, w_vector
from .linalg import RowSpace
from .polyring import HomPoly2
from .sl2action import GroupElement2, is_dominant, right_translate_hom
from .subalgebra import (
    AdmissibilityReport,
    GradedAlgebraPresentation,
    Witness,
    check_admissible,
    contains,
    piece_dimension,
)
from .toricmonoid import (
    Semigroup2D,
    cone_parameters,
    extremal_rays,
    is_saturated,
    lattice_index,
    monomial_admissible,
    saturate_in_sublattice,
)


class ClassificationError(ValueError):
    """Raised when an input cannot be classified; ``witness`` explains why when available."""

    def __init__(self, message: str, witness: Optional[Witness] = None, report: Optional[AdmissibilityReport] = None):
        super().__init__(message)
        self.witness = witness
        self.report = report


class NotAdmissibleError(ClassificationError):
    pass


class NotNormalError(ClassificationError):
    pass


class NotDominantError(ClassificationError):
    pass


class NeedsExtractionError(ClassificationError):
    pass


@dataclass(frozen=True)
class ClassifyConfig:
    degree_bound: int = 24
    seed: int = 0
    extract: bool = False
    fingerprint_max_f: int = 12
    jacobian_points: int = 3


@dataclass(frozen=True)
class ClassLabel:
    variant: str  # "Homogeneous" | "SphericalCone" | "QF"
    stabilizer: str
    group: Optional[str] = None
    q: Optional[Fraction] = None
    f: Optional[int] = None

    def __post_init__(self):
        if self.variant == "QF":
            if self.q is None or self.f is None or self.q < 1 or self.f < 1:
                raise ValueError("QF needs q >= 1 and f >= 1")
        elif self.variant == "SphericalCone":
            if self.f is None or self.f < 1:
                raise ValueError("SphericalCone needs f >= 1")
        elif self.variant == "Homogeneous":
            if not self.group:
                raise ValueError("Homogeneous needs a group label")
        else:
            raise ValueError(f"unknown variant {self.variant}")

    @classmethod
    def homogeneous(cls, group: str, stabilizer: Optional[str] = None) -> "ClassLabel":
        return cls("Homogeneous", stabilizer or group, group=group)

    @classmethod
    def spherical_cone(cls, f: int) -> "ClassLabel":
        return cls("SphericalCone", f"mu_{f} x U-", f=f)

    @classmethod
    def qf(cls, q, f: int) -> "ClassLabel":
        return cls("QF", f"mu_{f}", q=Fraction(q), f=f)

    def to_json(self) -> dict:
        out: dict = {"variant": self.variant}
        if self.group is not None:
            out["group"] = self.group
        if self.q is not None:
            out["q"] = fmt_scalar(self.q)
        if self.f is not None:
            out["f"] = self.f
        out["stabilizer"] = self.stabilizer
        return out

    @classmethod
    def from_json(cls, data: dict) -> "ClassLabel":
        q = data.get("q")
        return cls(
            data["variant"],
            data["stabilizer"],
            data.get("group"),
            Fraction(q) if q is not None else None,
            data.get("f"),
        )

    def __str__(self):
        if self.variant == "QF":
            return f"QF(q={fmt_scalar(self.q)}, f={self.f})"
        if self.variant == "SphericalCone":
            return f"SphericalCone(f={self.f})"
        return f"Homogeneous(SL2/{self.group})"


# ---------------------------------------------------------------------------
# dimension


def _partial(p: HomPoly2, var: int) -> HomPoly2:
    n = p.slots
    if n == 0:
        return HomPoly2.zero(0)
    if var == 0:  # d/da
        return HomPoly2([i * p.z[i] for i in range(1, n + 1)])
    return HomPoly2([(n - i) * p.z[i] for i in range(n)])


def _evaluate(p: HomPoly2, a: int, b: int) -> Fraction:
    n = p.slots
    return sum((c * a**i * b ** (n - i) for i, c in enumerate(p.z) if c), Fraction(0))


def krull_dimension(A: GradedAlgebraPresentation, seed: int = 0, points: int = 3) -> int:
    """Transcendence degree of A over k: 0, 1 or 2."""
    if not A.generators:
        return 0
    if A.is_monomial:
        rs = RowSpace(2, [list(e) for e in A.exponents()])
        return rs.rank
    rng = random.Random(seed)
    grads = [(_partial(g, 0), _partial(g, 1)) for g in A.generators]
    best = 0
    for _ in range(points):
        a, b = rng.randint(-(10**9), 10**9), rng.randint(-(10**9), 10**9)
        rows = [[_evaluate(da, a, b), _evaluate(db, a, b)] for da, db in grads]
        best = max(best, RowSpace(2, rows).rank)
        if best == 2:
            break
    return best


# ---------------------------------------------------------------------------
# dimension one


def normalize_dominant(A: GradedAlgebraPresentation, notices: Optional[list] = None) -> GradedAlgebraPresentation:
    """Kill the subleading coefficient of a middle-weight generator by right translation.

    For p = z_m a^m b^m + z_(m-1) a^(m-1) b^(m+1) + ... (n = 2m) the lower
    unipotent [[1, 0], [-t, 1]] with t = z_(m-1) / (m z_m) removes the
    a^(m-1) b^(m+1) term.  The generator is then scaled to be monic.
    Other shapes pass through (with a note appended to ``notices``).
    """
    if len(A.generators) != 1:
        _note(notices, "normalization applies to single-generator presentations; unchanged")
        return A
    p = A.generators[0]
    n, m = p.degree, p.top_index
    if 2 * m != n:
        _note(notices, f"top index {m} is not n/2 = {Fraction(n, 2)}; unchanged")
        return A.with_generators([p.monic()])
    t = p.z[m - 1] / (m * p.z[m])
    if t:
        p = right_translate_hom(p, GroupElement2.lower_unipotent(-t))
        _note(notices, f"right translated by [[1,0],[{fmt_scalar(-t)},1]]")
    return A.with_generators([p.monic()])


def _note(notices, msg):
    if notices is not None:
        notices.append(msg)


def _power_of(g: HomPoly2, p: HomPoly2) -> bool:
    if g.degree % p.degree:
        return False
    k = g.degree // p.degree
    pk = p**k
    return pk.monic() == g.monic()


def _flip(p: HomPoly2) -> HomPoly2:
    return right_translate_hom(p, GroupElement2.weyl())


def _classify_dim1(A: GradedAlgebraPresentation, notices: list) -> ClassLabel:
    gens = sorted(A.generators, key=lambda g: g.degree)
    p = gens[0]
    if any(not _power_of(g, p) for g in gens[1:]):
        raise NotNormalError("dimension-1 algebra is not a polynomial ring in one form (not normal)")
    if not is_dominant(p):
        flipped = _flip(p)
        if not is_dominant(flipped):
            raise NotDominantError(f"{p} is not dominant, even after the Weyl flip; normalize first")
        notices.append("applied the Weyl flip a -> b, b -> -a")
        p = flipped
    B = normalize_dominant(A.with_generators([p]), notices)
    report = check_admissible(B)
    if report.verdict == "fail":
        raise NotAdmissibleError(f"not admissible: {report.note}", report.witness, report)
    q = B.generators[0]
    n, m = q.degree, q.top_index
    if q.is_monomial():
        if m == 0:
            return ClassLabel.spherical_cone(n)
        if (m, n) == (1, 2):
            return ClassLabel.homogeneous("T")
        if (m, n) == (2, 4):
            return ClassLabel.homogeneous("N_T")
    raise NotAdmissibleError(f"normalized generator {q} is none of b^f, ab, (ab)^2 (bound {A.degree_bound} too small?)")


# ---------------------------------------------------------------------------
# dimension two


def extract_f(S: Semigroup2D) -> int:
    """gcd of j - i over the Hilbert basis; requires rank 2 and a pure b-power."""
    if S.rank < 2:
        raise ValueError("extract_f needs a rank-2 semigroup (wrong rank)")
    if not any(p[0] == 0 for p in S.gens):
        raise ValueError("b-power missing; not dominance-normalized")
    g = 0
    for i, j in S.gens:
        g = gcd(g, j - i)
    return g


def _graded_counts(S: Semigroup2D, bound: int) -> list[int]:
    counts = [0] * (bound + 1)
    for i, j in S.points(bound):
        counts[i + j] += 1
    return counts


def _classify_semigroup(S: Semigroup2D, cfg: ClassifyConfig) -> ClassLabel:
    if S.rank < 2:
        gens = [HomPoly2.monomial(*p) for p in S.gens]
        return _classify_dim1(GradedAlgebraPresentation(tuple(gens), cfg.degree_bound), [])
    if not is_saturated(S):
        raise NotNormalError("semigroup is not saturated (not normal)")
    if S.rays == ((0, 1), (1, 0)):
        f = S.f
        if lattice_index(S.gens) != f:
            raise NotNormalError("full-quadrant semigroup whose lattice is not {f | j - i}")
        H = catalog("A", f)
        if _graded_counts(S, cfg.degree_bound) != molien_coefficients(H, cfg.degree_bound):
            raise ClassificationError("Hilbert series does not match the mu_f invariants")
        return ClassLabel.homogeneous(f"mu_{f}")
    if any(i > j for i, j in S.gens):
        raise NotDominantError("a generator lies below the diagonal; dominance-normalize first")
    report = monomial_admissible(S, cfg.degree_bound)
    if report.verdict == "fail":
        raise NotAdmissibleError(f"not admissible: {report.note}", report.witness, report)
    v1, v2 = extremal_rays(S)
    if v2 != (0, 1):
        raise NotDominantError("b-power missing; not dominance-normalized")
    f = extract_f(S)
    params = cone_parameters(S)
    if params is None or params[1] != f:
        raise NotNormalError(f"lattice of the semigroup is not {{f | j - i}} for f = {f}")
    return ClassLabel.qf(Fraction(v1[1], v1[0]), f)


def _fingerprint(A: GradedAlgebraPresentation, cfg: ClassifyConfig) -> Optional[ClassLabel]:
    bound = A.degree_bound
    dims = [piece_dimension(A, d) for d in range(bound + 1)]
    candidates = [("A", f) for f in range(1, cfg.fingerprint_max_f + 1)]
    candidates += [("D", f) for f in range(3, cfg.fingerprint_max_f + 1)]
    candidates += [("E6", None), ("E7", None), ("E8", None)]
    for lab, f in candidates:
        H = catalog(lab, f)
        if molien_coefficients(H, bound) == dims:
            if lab == "A":
                return ClassLabel.homogeneous(f"mu_{f}")
            return ClassLabel.homogeneous(H.name)
    return None


def classify(
    A: Union[GradedAlgebraPresentation, Semigroup2D],
    config: Optional[ClassifyConfig] = None,
    notices: Optional[list] = None,
) -> ClassLabel:
    cfg = config or ClassifyConfig()
    notices = notices if notices is not None else []
    if isinstance(A, Semigroup2D):
        return _classify_semigroup(A, cfg)
    if A.degree_bound != cfg.degree_bound and config is not None:
        A = A.with_bound(cfg.degree_bound)
    dim = krull_dimension(A, cfg.seed, cfg.jacobian_points)
    if dim == 0:
        return ClassLabel.homogeneous("SL2")
    if dim == 1:
        return _classify_dim1(A, notices)
    if not A.is_monomial and cfg.extract:
        A = weight_component_closure(A)
        notices.append("replaced the presentation by its weight components")
    if A.is_monomial:
        return _classify_semigroup(Semigroup2D.from_generators(A.exponents()), cfg)
    label = _fingerprint(A, cfg)
    if label is not None:
        notices.append("matched by Hilbert-series fingerprint")
        return label
    raise NeedsExtractionError("non-monomial dimension-2 presentation: apply weight-component extraction first")


# ---------------------------------------------------------------------------
# weight components


def _min_b_power(A: GradedAlgebraPresentation) -> int:
    for d in range(1, A.degree_bound + 1):
        if contains(A, HomPoly2.monomial(0, d)):
            return d
    raise ValueError("b-power missing below the degree bound; not dominance-normalized")


def _descend(A: GradedAlgebraPresentation, p: HomPoly2, g: int, strict: bool) -> list[HomPoly2]:
    """q_0 = p, q_j = w_g(q_(j-1), b^(2g)) / y; returns the monomials a^(m-jg) b^(n-m+jg).

    With ``strict`` every q_j must already lie in A (true when A is admissible).
    """
    p2 = HomPoly2.monomial(0, 2 * g)
    q = p.monic()
    n = q.degree
    qs = [q]
    while qs[-1].top_index >= g:
        cur = qs[-1]
        top = cur.top_index
        lead = pair_weight(n, 2 * g, top, 0, g)
        if lead == 0:
            raise ArithmeticError(f"leading coefficient y_{{{top},{g}}} vanishes")
        nxt = w_vector(cur, p2, g) * (1 / lead)
        if nxt.is_zero or nxt.top_index != top - g:
            raise ArithmeticError("descent did not lower the top monomial by g")
        if strict and not contains(A, nxt):
            raise NotAdmissibleError(
                f"w_{g}({cur}, b^{2 * g}) is not in the algebra", Witness(cur, p2, g, nxt * lead)
            )
        qs.append(nxt)
    # back substitution: monomials from the bottom up
    monos: dict[int, HomPoly2] = {}
    for qj in reversed(qs):
        top = qj.top_index
        rest = qj - HomPoly2.monomial(top, n - top)
        for i in rest.support():
            if i not in monos:
                raise ArithmeticError(f"support position {i} not reached by the descent")
            rest = rest - monos[i] * rest.z[i]
        if not rest.is_zero:
            raise ArithmeticError("back substitution left a remainder")
        monos[top] = HomPoly2.monomial(top, n - top)
    return [monos[i] for i in sorted(monos, reverse=True)]


def weight_component_closure(A: GradedAlgebraPresentation, strict: bool = False) -> GradedAlgebraPresentation:
    """Replace each generator by its right-weight monomials, then saturate in {f | j - i}.

    f is the least degree with b^f in A; descent through w-vectors against
    b^(2g), g = f (f odd) or f/2 (f even), isolates every monomial of every
    generator.  For admissible A the descent stays inside A and the output
    has the same graded pieces; otherwise the output is the normal monomial
    algebra the w-vectors force (``strict=True`` raises instead).
    Monomial presentations are returned unchanged.
    """
    if A.is_monomial:
        return A
    f = _min_b_power(A)
    for gen in A.generators:
        n = gen.degree
        if any((n - 2 * i) % f for i in gen.support()):
            raise ValueError(f"generator {gen} is not in k[a^{f}, b^{f}, ab]")
    g = f if f % 2 else f // 2
    monos: list[tuple[int, int]] = []
    for gen in A.generators:
        for mono in _descend(A, gen, g, strict):
            pt = (mono.top_index, mono.degree - mono.top_index)
            if pt not in monos:
                monos.append(pt)
    S = saturate_in_sublattice(Semigroup2D.from_generators(monos), f)
    return A.with_generators([HomPoly2.monomial(*pt) for pt in S.gens])
