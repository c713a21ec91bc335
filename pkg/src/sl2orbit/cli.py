"""Command-line front end.  Exit codes: 0 ok, 1 check failed, 2 malformed input."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .classify import ClassificationError, ClassifyConfig, classify, weight_component_closure
from .diagram import decomposition_diagram, render_ascii, render_svg
from .exactmath import parse_scalar, verify_lemma_A1, verify_lemma_A2, verify_lemma_A3
from .finitegroups import catalog, molien_coefficients, reynolds_invariants
from .hwproduct import decompose_product
from .polyring import HomPoly2
from .subalgebra import GradedAlgebraPresentation, check_admissible, sl2_span_generators
from .toricmonoid import Semigroup2D, hilbert_basis


class InputError(Exception):
    pass


def _read_json(path: Optional[str]):
    try:
        if path in (None, "-"):
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON: {exc}") from exc


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2, sort_keys=False) + "\n")


def _algebra(data, bound: Optional[int]) -> GradedAlgebraPresentation:
    try:
        A = GradedAlgebraPresentation.from_json(data)
    except (ValueError, TypeError, KeyError) as exc:
        raise InputError(f"bad algebra: {exc}") from exc
    return A.with_bound(bound) if bound is not None else A


def _pair(args) -> tuple[HomPoly2, HomPoly2]:
    try:
        if args.p1 is not None and args.p2 is not None:
            p1, p2 = HomPoly2.parse(args.p1), HomPoly2.parse(args.p2)
        else:
            data = _read_json(args.input)
            if not isinstance(data, dict) or "p1" not in data or "p2" not in data:
                raise InputError("expected an object with 'p1' and 'p2'")
            p1, p2 = HomPoly2.parse(data["p1"]), HomPoly2.parse(data["p2"])
    except (ValueError, TypeError, KeyError) as exc:
        raise InputError(f"bad polynomial pair: {exc}") from exc
    if p1.is_zero or p2.is_zero:
        raise InputError("polynomials must be nonzero")
    return p1, p2


def _write_diagram(spec, path: str) -> None:
    text = render_svg(spec)
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


# ---------------------------------------------------------------------------
# subcommands


def cmd_decompose(args) -> int:
    p1, p2 = _pair(args)
    dec = decompose_product(p1, p2)
    _emit(dec.to_json())
    if args.svg:
        _write_diagram(decomposition_diagram(dec, args.f), args.svg)
    return 0


def cmd_admissible(args) -> int:
    A = _algebra(_read_json(args.input), args.bound)
    report = check_admissible(A)
    _emit(report.to_json())
    return 1 if report.verdict == "fail" else 0


def cmd_classify(args) -> int:
    data = _read_json(args.input)
    cfg = ClassifyConfig(degree_bound=args.bound or 24, seed=args.seed, extract=args.extract)
    try:
        if isinstance(data, dict) and "gens" in data:
            target = Semigroup2D.from_json(data)
        else:
            target = _algebra(data, cfg.degree_bound)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    notices: list[str] = []
    try:
        label = classify(target, cfg, notices)
    except ClassificationError as exc:
        out = {"error": str(exc), "kind": type(exc).__name__}
        if exc.witness is not None:
            out["witness"] = exc.witness.to_json()
        _emit(out)
        return 1
    except ValueError as exc:
        _emit({"error": str(exc), "kind": "ValueError"})
        return 1
    out = label.to_json()
    if args.verbose:
        out = {"label": out, "notices": notices}
    _emit(out)
    return 0


def cmd_extract(args) -> int:
    A = _algebra(_read_json(args.input), args.bound)
    try:
        B = weight_component_closure(A, strict=args.strict)
    except ClassificationError as exc:
        _emit({"error": str(exc), "witness": exc.witness.to_json() if exc.witness else None})
        return 1
    except ValueError as exc:
        _emit({"error": str(exc)})
        return 1
    _emit(B.to_json())
    return 0


def cmd_hilbert(args) -> int:
    try:
        q = parse_scalar(args.q)
        S = hilbert_basis(q, args.f)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    _emit(S.to_json())
    return 0


def cmd_gens(args) -> int:
    A = _algebra(_read_json(args.input), args.bound)
    _emit([p.to_json() for p in sl2_span_generators(A)])
    return 0


def _group(args):
    try:
        return catalog(args.group, args.f)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def cmd_molien(args) -> int:
    H = _group(args)
    _emit({"group": H.name, "order": H.order, "coefficients": molien_coefficients(H, args.degree)})
    return 0


def cmd_invariants(args) -> int:
    H = _group(args)
    basis = reynolds_invariants(H, args.degree)
    _emit({"group": H.name, "degree": args.degree, "basis": [p.to_json() for p in basis], "strings": [str(p) for p in basis]})
    return 0


def cmd_verify_sums(args) -> int:
    top = args.max
    bad = []
    counts = {"A1": 0, "A2": 0, "A3": 0}
    for j in range(top + 1):
        for i in range(j + 1):
            chk = verify_lemma_A1(i, j)
            counts["A1"] += 1
            if not chk.equal or chk.lhs == 0:
                bad.append(("A1", i, j))
    for m in range(1, top + 1):
        for i in range(m + 1):
            counts["A2"] += 1
            if not verify_lemma_A2(m, i).equal:
                bad.append(("A2", m, i))
    for n in range(1, args.max_n + 1):
        for m in range(1, n + 1):
            for f in range(1, m + 1):
                chk = verify_lemma_A3(f, m, n)
                counts["A3"] += 1
                if not chk.equal or chk.rhs == 0:
                    bad.append(("A3", f, m, n))
    _emit({"checked": counts, "failures": [list(b) for b in bad], "ok": not bad})
    return 1 if bad else 0


def cmd_diagram(args) -> int:
    p1, p2 = _pair(args)
    spec = decomposition_diagram(decompose_product(p1, p2), args.f)
    if args.ascii:
        sys.stdout.write(render_ascii(spec))
    else:
        _write_diagram(spec, args.svg or "-")
    return 0


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sl2orbit", description="Affine SL2-varieties with a dense orbit: exact computations.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_in(p):
        p.add_argument("--in", dest="input", default=None, help="input JSON file (default: standard input)")

    def add_bound(p):
        p.add_argument("--bound", type=int, default=None, help="degree_bound for graded computations")

    def add_pair(p):
        add_in(p)
        p.add_argument("--p1", default=None, help="first form, e.g. 'a*b^2 + b^3'")
        p.add_argument("--p2", default=None, help="second form")
        p.add_argument("--f", type=int, default=None, help="draw the sublattice f | (v - u)")

    p = sub.add_parser("decompose", help="w-vectors of a product p1 * p2")
    add_pair(p)
    p.add_argument("--svg", default=None, help="also write the Newton-polygon diagram here")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("admissible", help="bounded admissibility check; exit 1 with a witness on failure")
    add_in(p)
    add_bound(p)
    p.set_defaults(func=cmd_admissible)

    p = sub.add_parser("classify", help="classify an algebra or semigroup")
    add_in(p)
    add_bound(p)
    p.add_argument("--seed", type=int, default=0, help="seed for the random Jacobian points")
    p.add_argument("--extract", action="store_true", help="run weight-component extraction first")
    p.add_argument("--verbose", action="store_true", help="include normalization notices")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("extract", help="weight-component closure of a dimension-2 presentation")
    add_in(p)
    add_bound(p)
    p.add_argument("--strict", action="store_true", help="fail if a descent step leaves the algebra")
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("hilbert", help="Hilbert basis of S_q^(f)")
    p.add_argument("--q", required=True, help="rational q >= 1, e.g. 3/2")
    p.add_argument("--f", type=int, default=1)
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("gens", help="algebra generators of the SL2-span in k[SL2]")
    add_in(p)
    add_bound(p)
    p.set_defaults(func=cmd_gens)

    for name, func, hlp in (
        ("molien", cmd_molien, "Molien series coefficients"),
        ("invariants", cmd_invariants, "Reynolds-operator invariant basis in one degree"),
    ):
        p = sub.add_parser(name, help=hlp)
        p.add_argument("--group", required=True, help="A, D, E6, E7 or E8")
        p.add_argument("--f", type=int, default=None, help="f for types A and D")
        p.add_argument("--degree", type=int, required=True)
        p.set_defaults(func=func)

    p = sub.add_parser("verify-sums", help="check the three binomial-sum identities on a grid")
    p.add_argument("--max", type=int, default=12, help="bound on i, j and m for the first two identities")
    p.add_argument("--max-n", type=int, default=15, help="bound on n for the third identity")
    p.set_defaults(func=cmd_verify_sums)

    p = sub.add_parser("diagram", help="Newton-polygon diagram of p1, p2 and their w-vectors")
    add_pair(p)
    p.add_argument("--svg", default=None, help="output path (default: standard output)")
    p.add_argument("--ascii", action="store_true", help="plain-text grid instead of SVG")
    p.set_defaults(func=cmd_diagram)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except InputError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


dispatch = main

__all__ = ["build_parser", "dispatch", "main"]
