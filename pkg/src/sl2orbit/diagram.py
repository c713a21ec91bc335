"""Newton-polygon lattice diagrams as deterministic SVG (and a plain-text fallback)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .hwproduct import ProductDecomposition
from .polyring import HomPoly2, newton_points

UNIT = 40
MARGIN = 30
PALETTE = ("#1f4e79", "#b03a2e", "#1e8449", "#7d3c98", "#b9770e", "#2e4053", "#c0392b", "#117a65")
DASHES = {"solid": None, "dashed": "6,4", "dotted": "2,3"}


@dataclass(frozen=True)
class Polygon:
    label: str
    points: tuple[tuple[int, int], ...]
    style: str = "solid"


@dataclass(frozen=True)
class DiagramSpec:
    polygons: tuple[Polygon, ...] = ()
    extent: Optional[tuple[int, int]] = None
    diagonal: bool = False
    f: Optional[int] = None

    def __post_init__(self):
        for poly in self.polygons:
            if any(min(p) < 0 for p in poly.points):
                raise ValueError("diagram points must be nonnegative")
            if poly.style not in DASHES:
                raise ValueError(f"unknown style {poly.style}")
        ext = self.size()
        for poly in self.polygons:
            for u, v in poly.points:
                if u > ext[0] or v > ext[1]:
                    raise ValueError("extent does not cover every point")

    def size(self) -> tuple[int, int]:
        if self.extent is not None:
            return self.extent
        us = [u for poly in self.polygons for u, _ in poly.points] or [0]
        vs = [v for poly in self.polygons for _, v in poly.points] or [0]
        return max(4, max(us) + 1), max(4, max(vs) + 1)


def _xy(u: float, v: float, height: int) -> tuple[str, str]:
    return f"{MARGIN + u * UNIT:.1f}", f"{MARGIN + (height - v) * UNIT:.1f}"


def render_svg(spec: DiagramSpec) -> str:
    w, h = spec.size()
    width, height = 2 * MARGIN + w * UNIT, 2 * MARGIN + h * UNIT
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        '<g id="grid" stroke="#dddddd" stroke-width="1">',
    ]
    for u in range(w + 1):
        x0, y0 = _xy(u, 0, h)
        x1, y1 = _xy(u, h, h)
        out.append(f'<line x1="{x0}" y1="{y0}" x2="{x1}" y2="{y1}"/>')
    for v in range(h + 1):
        x0, y0 = _xy(0, v, h)
        x1, y1 = _xy(w, v, h)
        out.append(f'<line x1="{x0}" y1="{y0}" x2="{x1}" y2="{y1}"/>')
    out.append("</g>")
    if spec.f and spec.f > 1:
        # the sublattice f | (v - u): points (t, t + k f)
        out.append(f'<g id="sublattice" fill="#777777" data-f="{spec.f}">')
        for u in range(w + 1):
            for v in range(h + 1):
                if (v - u) % spec.f == 0:
                    x, y = _xy(u, v, h)
                    out.append(f'<circle cx="{x}" cy="{y}" r="2.5"/>')
        out.append("</g>")
    ox, oy = _xy(0, 0, h)
    ux, _ = _xy(w, 0, h)
    _, vy = _xy(0, h, h)
    out.append('<g id="axes" stroke="#000000" stroke-width="1.5">')
    out.append(f'<line x1="{ox}" y1="{oy}" x2="{ux}" y2="{oy}"/>')
    out.append(f'<line x1="{ox}" y1="{oy}" x2="{ox}" y2="{vy}"/>')
    out.append("</g>")
    out.append(f'<text x="{ux}" y="{float(oy) + 18:.1f}" font-size="12">u</text>')
    out.append(f'<text x="{float(ox) - 16:.1f}" y="{vy}" font-size="12">v</text>')
    if spec.diagonal:
        m = min(w, h)
        x1, y1 = _xy(m, m, h)
        out.append(f'<line id="diagonal" x1="{ox}" y1="{oy}" x2="{x1}" y2="{y1}" stroke="#999999" stroke-dasharray="4,4"/>')
    for k, poly in enumerate(spec.polygons):
        color = PALETTE[k % len(PALETTE)]
        pts = sorted(poly.points, key=lambda p: (-p[0], p[1]))
        dash = DASHES[poly.style]
        dash_attr = f' stroke-dasharray="{dash}"' if dash else ""
        out.append(f'<g id="poly{k}" stroke="{color}" fill="{color}">')
        if len(pts) > 1:
            coords = " ".join(",".join(_xy(u, v, h)) for u, v in pts)
            out.append(f'<polyline points="{coords}" fill="none" stroke-width="2"{dash_attr}/>')
        for u, v in pts:
            x, y = _xy(u, v, h)
            out.append(f'<circle cx="{x}" cy="{y}" r="4"/>')
        lx, ly = _xy(*pts[0], h) if pts else (ox, oy)
        out.append(f'<text x="{float(lx) + 8:.1f}" y="{float(ly) - 8:.1f}" font-size="13" stroke="none">{_escape(poly.label)}</text>')
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _escape(text: str) -> str:
    return text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")


def render_ascii(spec: DiagramSpec) -> str:
    """Character grid: digits mark polygon points (by polygon index), '/' the diagonal."""
    w, h = spec.size()
    rows = [["." for _ in range(w + 1)] for _ in range(h + 1)]
    if spec.diagonal:
        for t in range(min(w, h) + 1):
            rows[t][t] = "/"
    for k, poly in enumerate(spec.polygons):
        for u, v in poly.points:
            rows[v][u] = str(k % 10)
    lines = ["".join(r) for r in reversed(rows)]
    legend = [f"{k % 10}: {poly.label}" for k, poly in enumerate(spec.polygons)]
    return "\n".join(lines + legend) + "\n"


def polygon_for(label: str, p: HomPoly2, style: str = "solid") -> Polygon:
    return Polygon(label, tuple(newton_points(p)), style)


def decomposition_diagram(dec: ProductDecomposition, f: Optional[int] = None) -> DiagramSpec:
    """p1, p2 solid, each nonzero w_s dashed, the usual admissibility picture."""
    polys = [polygon_for("p1", dec.p1), polygon_for("p2", dec.p2)]
    for s, w in dec.components:
        if not w.is_zero:
            polys.append(polygon_for(f"w{s}", w, "dashed"))
    return DiagramSpec(tuple(polys), diagonal=True, f=f)


def forms_diagram(forms: Sequence[tuple[str, HomPoly2]], f: Optional[int] = None, diagonal: bool = True) -> DiagramSpec:
    return DiagramSpec(tuple(polygon_for(lbl, p) for lbl, p in forms if not p.is_zero), diagonal=diagonal, f=f)
