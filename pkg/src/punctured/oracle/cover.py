"""Crossing numbers from the universal cover, and a brute-force clique count.

The universal cover of the punctured disk is a strip whose boundary line is
Z (vertex P_i lifts to i + kn).  A winding arc (P_r, P_s) lifts to the chords
[r, r + d(r,s)] + kn and a puncture arc at P_r to the vertical rays at r + kn.
Geodesic representatives realise minimal intersection, so crossings are
counted by strict interleaving of lifts.
"""

from __future__ import annotations

from ..polygon import Kind, PolygonCtx, TaggedEdge


def _lift(ctx: PolygonCtx, e: TaggedEdge):
    if e.at_puncture:
        return ("ray", e.a1, None)
    return ("chord", e.a1, e.a1 + (e.a2 - e.a1) % ctx.n)


def cover_crossing(ctx: PolygonCtx, a: TaggedEdge, b: TaggedEdge) -> int:
    if a.is_side or b.is_side:
        raise ValueError("crossing numbers are defined for tagged arcs only")
    n = ctx.n
    ka, xa, ya = _lift(ctx, a)
    kb, xb, yb = _lift(ctx, b)
    if ka == "ray" and kb == "ray":
        # rays never meet in the cover; opposite tags at distinct vertices
        # count as one crossing by convention
        return int(a.kind is not b.kind and a.a1 != b.a1)
    if ka == "ray":
        ka, xa, ya, kb, xb, yb = kb, xb, yb, ka, xa, ya
    count = 0
    # translates of b that can possibly meet the fixed lift [xa, ya] of a
    for k in range(-3, 4):
        if kb == "ray":
            z = xb + k * n
            count += xa < z < ya
        else:
            x, y = xb + k * n, yb + k * n
            count += (xa < x < ya < y) or (x < xa < y < ya)
    return count


def compatibility_graph(ctx: PolygonCtx, arcs: list[TaggedEdge]) -> dict[int, set[int]]:
    """Adjacency over arc indices: i ~ j iff the arcs may coexist."""
    adj: dict[int, set[int]] = {i: set() for i in range(len(arcs))}
    for i, a in enumerate(arcs):
        for j in range(i + 1, len(arcs)):
            b = arcs[j]
            if a.at_puncture and b.at_puncture and a.kind is not b.kind and a.a1 != b.a1:
                continue
            if cover_crossing(ctx, a, b) == 0:
                adj[i].add(j)
                adj[j].add(i)
    return adj


def maximal_compatible_sets(ctx: PolygonCtx) -> list[frozenset[TaggedEdge]]:
    """All maximal cliques of the compatibility graph (Bron-Kerbosch with pivot)."""
    arcs = [
        TaggedEdge(Kind.ARC, i, (i + d - 1) % ctx.n + 1)
        for i in range(1, ctx.n + 1)
        for d in range(2, ctx.n)
    ]
    arcs += [TaggedEdge(k, i, i) for k in (Kind.PLAIN, Kind.NOTCHED) for i in range(1, ctx.n + 1)]
    adj = compatibility_graph(ctx, arcs)
    out: list[frozenset[TaggedEdge]] = []

    def expand(r: set[int], p: set[int], x: set[int]) -> None:
        if not p and not x:
            out.append(frozenset(arcs[i] for i in r))
            return
        pivot = max(p | x, key=lambda u: len(adj[u] & p))
        for v in list(p - adj[pivot]):
            expand(r | {v}, p & adj[v], x & adj[v])
            p.discard(v)
            x.add(v)

    expand(set(), set(adj), set())
    return out


def oracle_enumerate_maximal_compatible(ctx: PolygonCtx) -> int:
    if ctx.n > 6:
        raise ValueError("the clique oracle is meant for n <= 6")
    return len(maximal_compatible_sets(ctx))
