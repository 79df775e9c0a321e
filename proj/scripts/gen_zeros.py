#!/usr/bin/env python3
"""Regenerate the Riemann zeta zero fixtures under fixtures/.

Computes the imaginary parts of the first N nontrivial zeros with mpmath
(20 significant digits, then rounded to the nearest IEEE double) and writes
them one per line, ascending.  Lines starting with '#' are comments.

Usage: gen_zeros.py N OUTFILE [--jobs J]
"""

import argparse
import multiprocessing as mp
import sys


def _zero(n: int) -> float:
    import mpmath

    mpmath.mp.dps = 20
    return float(mpmath.zetazero(n).imag)


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("count", type=int)
    ap.add_argument("outfile")
    ap.add_argument("--jobs", type=int, default=mp.cpu_count())
    args = ap.parse_args()

    with mp.Pool(args.jobs) as pool:
        gammas = pool.map(_zero, range(1, args.count + 1), chunksize=50)

    for prev, cur in zip(gammas, gammas[1:]):
        if not prev < cur:
            raise SystemExit(f"zeros not strictly ascending near {prev}")

    with open(args.outfile, "w") as f:
        f.write("# imaginary parts of the first %d nontrivial zeros of the\n"
                "# Riemann zeta function, one per line, ascending.\n"
                "# generated by scripts/gen_zeros.py (mpmath, 20 digits,\n"
                "# rounded to nearest double).\n" % args.count)
        for g in gammas:
            f.write(repr(g) + "\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
