#!/usr/bin/env python3
"""Search monic cubics x^3 + a*x^2 + b*x + c for fields of a target discriminant.

The discriminant here is computed from first principles (the explicit cubic
formula, not the library's resultant code), so hits double as an independent
check on the analysis pipeline. For each hit the script prints the field
discriminant, the maximal-order index, and the splitting shapes at a few
small primes; distinct shape columns certify that two generators present
non-isomorphic fields even though their discriminants agree.

Example:

    python scripts/find_disc_siblings.py --target 32009
    python scripts/find_disc_siblings.py --target -23 --b-bound 20 --c-bound 40
"""

import argparse
import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from tracegenus.errors import ReducibleInputError
from tracegenus.polys import IntPoly, poly_to_string
from tracegenus.splitting import split_prime
from tracegenus.traceform import analyze_field

SHAPE_PRIMES = (2, 3, 5, 7, 11, 13)


def cubic_disc(a, b, c):
    # disc(x^3 + a x^2 + b x + c) expanded by hand
    return 18 * a * b * c - 4 * a**3 * c + a**2 * b**2 - 4 * b**3 - 27 * c**2


def shape_word(analysis, p):
    sp = split_prime(analysis.max_order, p)
    return ",".join("%d^%d" % (f, e) for e, f in sp.pairs)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--target", type=int, default=32009,
                    help="field discriminant to search for (default 32009)")
    ap.add_argument("--a-bound", type=int, default=1, help="|a| bound (default 1)")
    ap.add_argument("--b-bound", type=int, default=60, help="|b| bound (default 60)")
    ap.add_argument("--c-bound", type=int, default=200, help="|c| bound (default 200)")
    args = ap.parse_args(argv)

    hits = []
    seen = set()
    for a in range(-args.a_bound, args.a_bound + 1):
        for b in range(-args.b_bound, args.b_bound + 1):
            for c in range(-args.c_bound, args.c_bound + 1):
                d = cubic_disc(a, b, c)
                # disc(f) = index^2 * disc(K): keep every square multiple
                if d == 0 or d % args.target != 0:
                    continue
                q, r = divmod(d, args.target)
                if r != 0 or q < 0:
                    continue
                s = int(round(q ** 0.5))
                if s * s != q:
                    continue
                f = IntPoly((c, b, a, 1))
                try:
                    analysis = analyze_field(f)
                except ReducibleInputError:
                    continue
                if analysis.disc != args.target:
                    continue
                key = (analysis.disc, tuple(analysis.max_order.order.basis_num),
                       analysis.max_order.order.denom, analysis.poly.coeffs)
                if key in seen:
                    continue
                seen.add(key)
                hits.append(analysis)

    if not hits:
        print("no cubic fields of discriminant %d in this box" % args.target)
        return 1

    header = ["polynomial", "disc", "index"] + ["q=%d" % p for p in SHAPE_PRIMES]
    rows = [header]
    for analysis in hits:
        rows.append([poly_to_string(analysis.poly), str(analysis.disc),
                     str(analysis.max_order.index)]
                    + [shape_word(analysis, p) for p in SHAPE_PRIMES])
    widths = [max(len(r[i]) for r in rows) for i in range(len(header))]
    for r in rows:
        print("  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip())

    shapes = {}
    for analysis in hits:
        word = tuple(shape_word(analysis, p) for p in SHAPE_PRIMES)
        shapes.setdefault(word, []).append(poly_to_string(analysis.poly))
    distinct = [v for v in shapes.values()]
    print()
    print("%d generators, %d distinct splitting fingerprints" % (len(hits), len(distinct)))
    if len(distinct) > 1:
        print("non-isomorphic pair witness: %s | %s" % (distinct[0][0], distinct[1][0]))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
