"""Newton-polygon diagram for p1 = ab^2 + b^3, p2 = a^2b^2 + ab^3 + b^4 and their w-vectors."""

import argparse

from sl2orbit.diagram import decomposition_diagram, render_ascii, render_svg
from sl2orbit.hwproduct import decompose_product
from sl2orbit.polyring import HomPoly2


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--p1", default="a*b^2 + b^3")
    ap.add_argument("--p2", default="a^2*b^2 + a*b^3 + b^4")
    ap.add_argument("--f", type=int, default=None, help="shade the sublattice f | (v - u)")
    ap.add_argument("--out", default="admissibility.svg")
    args = ap.parse_args()
    dec = decompose_product(HomPoly2.parse(args.p1), HomPoly2.parse(args.p2))
    for s, w in dec.components:
        print(f"w_{s} = {w}")
    spec = decomposition_diagram(dec, args.f)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(render_svg(spec))
    print(render_ascii(spec), end="")
    print(f"wrote {args.out}")


if __name__ == "__main__":
    main()
