#!/usr/bin/env python3
"""Print the two worked examples: the quintic certified at n = 5 and the
quartic (x-1)(x-2)(x-3)(x-4), whose first working integer shift is 10."""
from polycert import (
    certify_at,
    evaluate,
    lagrange_bound,
    minimal_integer_shift,
    optimal_threshold,
    parse,
)
from polycert.report import render_identity, render_latex, verdict_label
from polycert.search import laguerre_stages

QUINTIC = "2842*n^5 - 7821*n^4 - 16884*n^3 + 10428*n^2 + 5082*n - 2607"
QUARTIC = "(x-1)(x-2)(x-3)(x-4)"


def main():
    f = parse(QUINTIC).poly
    print("quintic f(n) =", f)
    print("f(4) =", evaluate(f, 4))
    print("Laguerre stages (index, b):", laguerre_stages(f))
    print(render_latex(certify_at(f, minimal_integer_shift(f))))
    t = optimal_threshold(f)
    print(f"optimal shift in ({t.lo}, {t.hi}] ~ {float(t.hi):.6f}, binding f_{t.witness_index_p}")
    print("Lagrange bound:", lagrange_bound(f).bound_overestimate)
    print()

    g = parse(QUARTIC).poly
    print("quartic f(x) =", g)
    for b in range(5, 11):
        cert = certify_at(g, b)
        print(f"  b = {b:2d}: {render_identity(cert):40s} {verdict_label(cert.verdict)}")
    t = optimal_threshold(g)
    print("optimal shift:", t.exact, "(exact), binding f_%d" % t.witness_index_p)
    print("Lagrange bound:", lagrange_bound(g).bound_overestimate)


if __name__ == "__main__":
    main()
