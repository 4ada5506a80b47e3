#!/usr/bin/env python3
"""Survey how far the certificate threshold sits above the largest root.

For random polynomials a_0 * prod(x - r_i) with rational roots, record
the largest positive root a, the optimal shift b*, the minimal integer
shift, the number of Laguerre stages and the Lagrange bound, then print
summary statistics (and optionally write every row to CSV).
"""
import argparse
import csv
import random
import statistics
from fractions import Fraction

from polycert import from_roots, lagrange_bound, minimal_integer_shift, optimal_threshold
from polycert.search import laguerre_stages


def sample(rng, max_degree, root_range):
    n = rng.randint(1, max_degree)
    roots = [Fraction(rng.randint(-root_range * 4, root_range * 4), 4) for _ in range(n)]
    if not any(r > 0 for r in roots):
        roots[0] = Fraction(rng.randint(1, root_range * 4), 4)
    return roots, from_roots(roots, rng.randint(1, 10))


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=300)
    ap.add_argument("--max-degree", type=int, default=8)
    ap.add_argument("--root-range", type=int, default=10)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--csv", help="write per-polynomial rows here")
    args = ap.parse_args(argv)

    rng = random.Random(args.seed)
    rows = []
    for _ in range(args.count):
        roots, f = sample(rng, args.max_degree, args.root_range)
        t = optimal_threshold(f)
        a = max(roots)
        rows.append(
            dict(
                degree=f.degree(),
                largest_root=float(a),
                b_star=float(t.hi),
                exact=t.exact is not None,
                binding_index=t.witness_index_p,
                binds_at_f=t.witness_index_p == f.degree(),
                minimal_integer=minimal_integer_shift(f),
                stages=len(laguerre_stages(f)),
                lagrange=float(lagrange_bound(f).bound_overestimate),
            )
        )

    gap = [r["b_star"] - r["largest_root"] for r in rows]
    print(f"{len(rows)} polynomials, degree <= {args.max_degree}, roots in [-{args.root_range}, {args.root_range}]")
    print(f"b* - a:               mean {statistics.mean(gap):.3f}  max {max(gap):.3f}")
    print(f"b* equals a (f binds): {sum(r['binds_at_f'] for r in rows)}")
    print(f"b* exact rational:     {sum(r['exact'] for r in rows)}")
    lag = [r["lagrange"] - r["b_star"] for r in rows]
    print(f"Lagrange - b*:        mean {statistics.mean(lag):.3f}  min {min(lag):.3f}")
    print(f"Laguerre stages:      mean {statistics.mean(r['stages'] for r in rows):.2f}  max {max(r['stages'] for r in rows)}")
    by_index = {}
    for r in rows:
        by_index[r["binding_index"]] = by_index.get(r["binding_index"], 0) + 1
    print("binding index counts:", dict(sorted(by_index.items())))

    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            w = csv.DictWriter(fh, fieldnames=list(rows[0]))
            w.writeheader()
            w.writerows(rows)


if __name__ == "__main__":
    main()
