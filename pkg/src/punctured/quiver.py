"""Ice quivers with potential of a tagged triangulation, graded by theta-length.

Around a polygon vertex v the edges of the triangulation are met, turning
anticlockwise, in this order: the side (v, v+1), the arcs leaving v by
increasing span, the puncture arcs at v, the arcs arriving at v by decreasing
span, and the side (v-1, v).  Consecutive edges in that order bound a face
and get an internal arrow; the external arrow at v closes the circle from
(v-1, v) back to (v, v+1).  Around the puncture, consecutive puncture arcs
with the same tag are joined anticlockwise.

A pair of puncture arcs with different tags sits at a single vertex k; then
the puncture lies in a digon bounded by (j, k) and (k, j), and both puncture
arcs sit between them in the order at P_k.
"""

from __future__ import annotations

import heapq
import json
from dataclasses import dataclass, field

from .polygon import Kind, TaggedEdge, cyclic_distance, edge_to_json, theta_length
from .triangulation import TaggedTriangulation


@dataclass(frozen=True)
class Arrow:
    id: int
    source: TaggedEdge
    target: TaggedEdge
    kind: str  # "internal" | "external"
    theta: int
    vertex: int | None = None  # polygon vertex the arrow turns around; None at the puncture


@dataclass(frozen=True)
class PotentialTerm:
    sign: int
    cycle: tuple[int, ...]  # arrow ids, canonical rotation
    label: str = ""


def _canonical(cycle) -> tuple[int, ...]:
    cycle = tuple(cycle)
    k = min(range(len(cycle)), key=lambda r: cycle[r:] + cycle[:r])
    return cycle[k:] + cycle[:k]


@dataclass
class IceQuiverWithPotential:
    n: int
    vertices: list[TaggedEdge]
    arrows: list[Arrow]
    potential: list[PotentialTerm]
    frozen: frozenset[TaggedEdge]
    _by_id: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self._by_id = {a.id: a for a in self.arrows}

    def arrow(self, i: int) -> Arrow:
        return self._by_id[i]

    def term_theta(self, term: PotentialTerm) -> int:
        return sum(self.arrow(i).theta for i in term.cycle)

    def term_arrows(self, term: PotentialTerm) -> list[Arrow]:
        return [self.arrow(i) for i in term.cycle]

    def with_theta(self, arrow_id: int, theta: int) -> "IceQuiverWithPotential":
        """Copy with one arrow's theta replaced (for detector tests)."""
        arrows = [Arrow(a.id, a.source, a.target, a.kind, theta, a.vertex) if a.id == arrow_id else a
                  for a in self.arrows]
        return IceQuiverWithPotential(self.n, self.vertices, arrows, self.potential, self.frozen)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "vertices": [edge_to_json(v) for v in self.vertices],
            "arrows": [{"id": a.id, "source": edge_to_json(a.source), "target": edge_to_json(a.target),
                        "kind": a.kind, "theta": a.theta} for a in self.arrows],
            "potential": [{"sign": t.sign, "cycle": list(t.cycle)} for t in self.potential],
            "frozen": [edge_to_json(v) for v in self.vertices if v in self.frozen],
        }

    def to_dot(self) -> str:
        name = {v: f"v{k}" for k, v in enumerate(self.vertices)}
        lines = ["digraph Q {"]
        for v in self.vertices:
            shape = "box" if v in self.frozen else "ellipse"
            label = json.dumps(edge_to_json(v)).replace('"', '\\"')
            lines.append(f'  {name[v]} [label="{label}", shape={shape}];')
        for a in self.arrows:
            style = ", style=dashed" if a.kind == "external" else ""
            lines.append(f'  {name[a.source]} -> {name[a.target]} [label="theta={a.theta}"{style}];')
        lines.append("  /* potential")
        for t in self.potential:
            lines.append(f"     {'+' if t.sign > 0 else '-'} {' '.join(f'a{i}' for i in t.cycle)}")
        lines.append("  */")
        lines.append("}")
        return "\n".join(lines) + "\n"


# ---------------------------------------------------------------- local orders

def _local_order(tri: TaggedTriangulation, v: int) -> list[list[TaggedEdge]]:
    """Groups of edges at P_v in anticlockwise order; only the puncture group can hold two."""
    ctx = tri.ctx
    leaving, arriving, rays = [], [], []
    for e in tri.edges():
        if e.at_puncture:
            if e.a1 == v:
                rays.append(e)
            continue
        if e.a1 == v:
            leaving.append(e)
        if e.a2 == v:
            arriving.append(e)
    leaving.sort(key=lambda e: cyclic_distance(ctx, e.a1, e.a2))
    arriving.sort(key=lambda e: -cyclic_distance(ctx, e.a1, e.a2))
    groups = [[e] for e in leaving]
    if rays:
        groups.append(sorted(rays, key=lambda e: e.kind is Kind.NOTCHED))
    groups += [[e] for e in arriving]
    return groups


def _rays(tri: TaggedTriangulation, kind: Kind) -> list[TaggedEdge]:
    return sorted((e for e in tri.arcs if e.kind is kind), key=lambda e: e.a1)


def digon(tri: TaggedTriangulation):
    """(k, a, b) if the puncture arcs are one plain and one notched arc at P_k, else None.

    a = (j, k) and b = (k, j) are the two arcs bounding the punctured digon.
    """
    punct = [e for e in tri.arcs if e.at_puncture]
    if len(punct) != 2 or punct[0].kind is punct[1].kind:
        return None
    k = punct[0].a1
    if punct[1].a1 != k:
        raise ValueError(f"{tri}: plain and notched arcs at different vertices")
    groups = _local_order(tri, k)
    pos = next(g for g, grp in enumerate(groups) if grp[0].at_puncture)
    b, a = groups[pos - 1][0], groups[pos + 1][0]
    return k, a, b


# ---------------------------------------------------------------- construction

class _Builder:
    def __init__(self, tri: TaggedTriangulation):
        self.tri = tri
        self.ctx = tri.ctx
        self.arrows: list[Arrow] = []
        self.index: dict[tuple, int] = {}

    def add(self, s: TaggedEdge, t: TaggedEdge, kind: str, vertex: int | None) -> int:
        key = (s, t, vertex)
        if key in self.index:
            return self.index[key]
        theta = theta_length(self.ctx, s, t) % (2 * self.ctx.n)
        a = Arrow(len(self.arrows), s, t, kind, theta, vertex)
        self.arrows.append(a)
        self.index[key] = a.id
        return a.id

    def get(self, s, t, vertex) -> int:
        return self.index[(s, t, vertex)]


def build_full_qp(tri: TaggedTriangulation) -> IceQuiverWithPotential:
    """The quiver Q' with every external arrow, and its potential W'."""
    ctx, n = tri.ctx, tri.n
    B = _Builder(tri)
    dg = digon(tri)
    chains: dict[int, list[int]] = {}

    for v in range(1, n + 1):
        groups = _local_order(tri, v)
        for g in range(len(groups) - 1):
            for s in groups[g]:
                for t in groups[g + 1]:
                    B.add(s, t, "internal", v)
        # path from (v, v+1) round to (v-1, v), through the plain ray in a digon
        path = [grp[0] for grp in groups]
        chains[v] = [B.get(path[g], path[g + 1], v) for g in range(len(path) - 1)]
    for v in range(1, n + 1):
        ext = B.add(ctx.side(v - 1), ctx.side(v), "external", v)
        chains[v] = [ext] + chains[v]

    punct_ids: list[int] = []
    if dg is None:
        for kind in (Kind.PLAIN, Kind.NOTCHED):
            rays = _rays(tri, kind)
            if len(rays) >= 2:
                for r in range(len(rays)):
                    punct_ids.append(B.add(rays[r], rays[(r + 1) % len(rays)], "internal", None))

    terms: list[PotentialTerm] = []
    for tri_ids in _clockwise_triangles(tri, B, dg):
        terms.append(PotentialTerm(1, _canonical(tri_ids), "triangle"))
    for v in range(1, n + 1):
        terms.append(PotentialTerm(-1, _canonical(chains[v]), f"external@{v}"))
    if punct_ids:
        terms.append(PotentialTerm(-1, _canonical(punct_ids), "puncture"))

    return IceQuiverWithPotential(n, tri.edges(), B.arrows, terms,
                                  frozenset(ctx.side(i) for i in range(1, n + 1)))


def _clockwise_triangles(tri: TaggedTriangulation, B: _Builder, dg) -> list[list[int]]:
    ctx, n = tri.ctx, tri.n
    edges = {e for e in tri.edges() if not e.at_puncture}
    out = []
    # triangles away from the puncture: p, q, r anticlockwise with (p, r) passing over q
    for p in range(1, n + 1):
        for dq in range(1, n - 1):
            for dr in range(dq + 1, n):
                q, r = ctx.normalize(p + dq), ctx.normalize(p + dr)
                pq, qr, pr = ctx.arc(p, q), ctx.arc(q, r), ctx.arc(p, r)
                if pq in edges and qr in edges and pr in edges:
                    out.append([B.get(qr, pq, q), B.get(pq, pr, p), B.get(pr, qr, r)])
    # triangles with a corner at the puncture
    if dg is None:
        for kind in (Kind.PLAIN, Kind.NOTCHED):
            rays = _rays(tri, kind)
            if len(rays) < 2:
                continue
            for r in range(len(rays)):
                s, t = rays[r], rays[(r + 1) % len(rays)]
                base = ctx.arc(s.a1, t.a1) if s.a1 != t.a1 else None
                if base is None or base not in edges:
                    raise ValueError(f"{tri}: no edge closes the triangle at {s}, {t}")
                out.append([B.get(base, s, s.a1), B.index[(s, t, None)], B.get(t, base, t.a1)])
    else:
        k, a, b = dg
        j = a.a1
        eta = B.get(a, b, j)
        for ray in (ctx.plain(k), ctx.notched(k)):
            out.append([eta, B.get(b, ray, k), B.get(ray, a, k)])
    return out


def build_ice_qp(tri: TaggedTriangulation) -> IceQuiverWithPotential:
    """Q drops the external arrows at vertices without a tagged arc; W keeps the surviving terms."""
    full = build_full_qp(tri)
    bare = {v for v in range(1, tri.n + 1)
            if not any(v in (e.a1, e.a2) for e in tri.arcs)}
    dropped = {a.id for a in full.arrows if a.kind == "external" and a.vertex in bare}
    arrows = [a for a in full.arrows if a.id not in dropped]
    terms = [t for t in full.potential if not dropped & set(t.cycle)]
    return IceQuiverWithPotential(full.n, full.vertices, arrows, terms, full.frozen)


# ---------------------------------------------------------------- checks

def check_potential_homogeneous(qp: IceQuiverWithPotential) -> bool:
    return all(qp.term_theta(t) == 2 * qp.n for t in qp.potential)


def is_closed_cycle(qp: IceQuiverWithPotential, term: PotentialTerm) -> bool:
    arr = qp.term_arrows(term)
    return all(arr[k].target == arr[(k + 1) % len(arr)].source for k in range(len(arr)))


def arrow_term_counts(qp: IceQuiverWithPotential) -> dict[int, list[int]]:
    """Arrow id -> signs of the potential terms it occurs in."""
    out: dict[int, list[int]] = {a.id: [] for a in qp.arrows}
    for t in qp.potential:
        for i in t.cycle:
            out[i].append(t.sign)
    return out


def min_path_theta(qp: IceQuiverWithPotential, a: TaggedEdge, b: TaggedEdge) -> float:
    """Least total theta of a directed path a -> b (0 if a = b, inf if none)."""
    adj: dict[TaggedEdge, list[tuple[TaggedEdge, int]]] = {}
    for arr in qp.arrows:
        adj.setdefault(arr.source, []).append((arr.target, arr.theta))
    dist = {a: 0}
    heap = [(0, 0, a)]
    tick = 1
    while heap:
        d, _, x = heapq.heappop(heap)
        if x == b:
            return d
        if d > dist.get(x, float("inf")):
            continue
        for y, w in adj.get(x, ()):
            if d + w < dist.get(y, float("inf")):
                dist[y] = d + w
                heapq.heappush(heap, (d + w, tick, y))
                tick += 1
    return float("inf")


def all_min_path_theta(qp: IceQuiverWithPotential) -> dict[tuple[TaggedEdge, TaggedEdge], float]:
    return {(a, b): min_path_theta(qp, a, b) for a in qp.vertices for b in qp.vertices}


def is_type_d(edges: list[tuple], nodes: list) -> bool:
    """Underlying simple graph is a Dynkin diagram of type D_m, m = len(nodes) (D_3 = A_3)."""
    import networkx as nx

    g = nx.Graph()
    g.add_nodes_from(nodes)
    g.add_edges_from((s, t) for s, t in edges if s != t)
    m = len(nodes)
    if not nx.is_tree(g):
        return False
    degs = sorted(d for _, d in g.degree)
    if m == 3:
        return degs == [1, 1, 2]
    if degs != [1] * 3 + [2] * (m - 4) + [3]:
        return False
    hub = next(x for x, d in g.degree if d == 3)
    arms = sorted(len(nx.node_connected_component(g.subgraph(set(g) - {hub}), y)) for y in g[hub])
    return arms == [1, 1, m - 3]
