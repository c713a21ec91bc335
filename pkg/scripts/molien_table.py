"""Molien coefficients next to Reynolds-operator dimensions for the catalog groups."""

import argparse
import time

from sl2orbit.finitegroups import catalog, molien_coefficients, reynolds_table


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--degree", type=int, default=16)
    ap.add_argument("--max-f", type=int, default=4)
    args = ap.parse_args()
    groups = [("A", f) for f in range(1, args.max_f + 1)] + [("D", f) for f in range(1, args.max_f + 1)]
    groups += [("E6", None), ("E7", None), ("E8", None)]
    bad = 0
    for lab, f in groups:
        t0 = time.perf_counter()
        H = catalog(lab, f)
        mol = molien_coefficients(H, args.degree)
        rey = [len(b) for b in reynolds_table(H, args.degree)]
        ok = mol == rey
        bad += not ok
        print(f"{H.name:<10} order {H.order:>4}  {' '.join(map(str, mol))}  {'ok' if ok else 'MISMATCH'} [{time.perf_counter() - t0:.1f}s]")
    raise SystemExit(1 if bad else 0)


if __name__ == "__main__":
    main()
