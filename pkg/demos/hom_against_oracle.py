"""Compare closed-form graded Hom dimensions with exact linear algebra over GF(p)."""

import sys

from punctured.homology import hom_module
from punctured.oracle import oracle_hom_graded
from punctured.order import graded_dim
from punctured.polygon import PolygonCtx, all_edges

n = int(sys.argv[1]) if len(sys.argv) > 1 else 3
ctx = PolygonCtx(n)
edges = all_edges(ctx)
bad = 0
for a in edges:
    for b in edges:
        h = hom_module(ctx, a, b)
        dims = oracle_hom_graded(ctx, a, b, deg_bound=8 * n - 1)
        row = [dims[d] for d in range(0, 4 * n)]
        bad += any(dims[d] != graded_dim(h, d, n) for d in dims)
        if a.at_puncture and b.at_puncture:
            print(f"{str(a):>7} -> {str(b):<7} {str(h):<7} {''.join(map(str, row))}")
print(f"{len(edges) ** 2} pairs, {bad} mismatches")
