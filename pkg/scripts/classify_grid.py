"""Classify the Hilbert bases of S_q^(f) over a (q, f) grid and print a table."""

import argparse
import time
from fractions import Fraction

from sl2orbit.classify import ClassifyConfig, classify
from sl2orbit.toricmonoid import hilbert_basis


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--q", nargs="+", default=["1", "3/2", "2", "5/2", "5/3"])
    ap.add_argument("--f", nargs="+", type=int, default=[1, 2, 3])
    ap.add_argument("--bound", type=int, default=24)
    args = ap.parse_args()
    cfg = ClassifyConfig(degree_bound=args.bound)
    print(f"{'q':>5} {'f':>3}  {'generators':<40} label")
    for q in map(Fraction, args.q):
        for f in args.f:
            t0 = time.perf_counter()
            S = hilbert_basis(q, f)
            label = classify(S, cfg)
            gens = " ".join(f"({i},{j})" for i, j in S.gens)
            print(f"{str(q):>5} {f:>3}  {gens:<40} {label}  [{time.perf_counter() - t0:.2f}s]")


if __name__ == "__main__":
    main()
