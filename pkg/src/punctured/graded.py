"""The graded category: indecomposables (i,j), (i,*), (i,x) over the integers.

A graded indecomposable has coordinates (A1, A2): (i, j) for an arc and
(i, i+n) for (i,*) or (i,x).  Irreducible maps raise A1 + A2 by one, and both
coordinates weakly increase along any path of the AR quiver, which is what
keeps the mesh knitting finite inside a window.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import networkx as nx

from .polygon import Kind, PolygonCtx, TaggedEdge

ARC, STAR, NOTCH = "arc", "star", "notch"
_SWAP = {STAR: NOTCH, NOTCH: STAR}
DEFAULT_WINDOW = 4


class WindowExceeded(RuntimeError):
    pass


@dataclass(frozen=True, order=True)
class GradedIndec:
    n: int
    kind: str
    i: int
    j: int | None = None

    def __post_init__(self):
        if self.n < 3:
            raise ValueError("n must be at least 3")
        if self.kind == ARC:
            if self.j is None or not 0 < self.j - self.i < self.n:
                raise ValueError(f"arc ({self.i},{self.j}) needs 0 < j - i < {self.n}")
        elif self.kind in (STAR, NOTCH):
            if self.j is not None:
                raise ValueError(f"{self.kind} carries i only")
        else:
            raise ValueError(f"unknown kind {self.kind!r}")

    @property
    def a1(self) -> int:
        return self.i

    @property
    def a2(self) -> int:
        return self.j if self.kind == ARC else self.i + self.n

    @property
    def position(self) -> int:
        return self.a1 + self.a2

    @property
    def projective(self) -> bool:
        return self.kind == ARC and self.j == self.i + 1

    def __str__(self) -> str:
        if self.kind == ARC:
            return f"({self.i},{self.j})"
        return f"({self.i},{'*' if self.kind == STAR else 'x'})"

    def to_json(self) -> dict:
        d = {"kind": self.kind, "i": self.i}
        if self.kind == ARC:
            d["j"] = self.j
        return d


def from_json(n: int, obj: dict) -> GradedIndec:
    return GradedIndec(n, obj["kind"], obj["i"], obj.get("j"))


def arc(n: int, i: int, j: int) -> GradedIndec:
    return GradedIndec(n, ARC, i, j)


def star(n: int, i: int) -> GradedIndec:
    return GradedIndec(n, STAR, i)


def notch(n: int, i: int) -> GradedIndec:
    return GradedIndec(n, NOTCH, i)


def _pair(n: int, i: int, j: int) -> list[GradedIndec]:
    """(i, j) with the convention (i, i+n) = (i,*) + (i,x)."""
    if j - i == n:
        return [star(n, i), notch(n, i)]
    return [arc(n, i, j)]


def _translate(x: GradedIndec, step: int, swap: bool = False) -> GradedIndec:
    if x.kind == ARC:
        return arc(x.n, x.i + step, x.j + step)
    return GradedIndec(x.n, _SWAP[x.kind] if swap else x.kind, x.i + step)


def shift(x: GradedIndec, k: int) -> GradedIndec:
    return _translate(x, k * x.n)


def forget(x: GradedIndec) -> TaggedEdge:
    ctx = PolygonCtx(x.n)
    if x.kind == ARC:
        return ctx.arc(x.i, x.j)
    return ctx.plain(x.i) if x.kind == STAR else ctx.notched(x.i)


def omega_z(x: GradedIndec) -> GradedIndec:
    return _translate(x, 1 - x.n, swap=True)


def omega_inv_z(x: GradedIndec) -> GradedIndec:
    return _translate(x, x.n - 1, swap=True)


def omega_power(x: GradedIndec, k: int) -> GradedIndec:
    for _ in range(abs(k)):
        x = omega_z(x) if k > 0 else omega_inv_z(x)
    return x


def nu_z(x: GradedIndec) -> GradedIndec:
    return _translate(x, x.n - 2)


def tau_z(x: GradedIndec) -> GradedIndec:
    if x.projective:
        raise ValueError(f"{x} is projective-injective")
    return _translate(x, -1, swap=True)


def tau_inv_z(x: GradedIndec) -> GradedIndec:
    if x.projective:
        raise ValueError(f"{x} is projective-injective")
    return _translate(x, 1, swap=True)


# ------------------------------------------------------------------ meshes

def mesh_middle(y: GradedIndec) -> list[GradedIndec]:
    """Middle of the AR sequence ending at a non-projective y."""
    n = y.n
    if y.kind != ARC:
        return [arc(n, y.i, y.i + n - 1)]
    i, j = y.i, y.j
    out = _pair(n, i - 1, j)
    if j - 1 > i:
        out.append(arc(n, i, j - 1))
    return out


def predecessors(y: GradedIndec) -> list[GradedIndec]:
    """Sources of the irreducible maps into y."""
    if y.projective:
        return [arc(y.n, y.i - 1, y.i + 1)]
    return mesh_middle(y)


def successors(x: GradedIndec) -> list[GradedIndec]:
    n = x.n
    if x.kind != ARC:
        return [arc(n, x.i + 1, x.i + n)]
    out = _pair(n, x.i, x.j + 1)
    if x.j - x.i > 1:
        out.append(arc(n, x.i + 1, x.j))
    return out


# ------------------------------------------------------------------ Ext

def graded_ext1_dim(x: GradedIndec, y: GradedIndec) -> int:
    """Number of listed non-split sequences 0 -> x -> E -> y -> 0."""
    n = x.n
    if x.projective or y.projective:
        return 0
    i = x.i
    if x.kind == ARC:
        j = x.j
        if y.kind == ARC:
            k, L = y.i, y.j
            # L = i+n is allowed: the middle term (i, i+n) splits as (i,*) + (i,x)
            count = int(i < k < j < L <= i + n)
            l = L - n
            count += int(i < l < j <= k < i + n)
            count += 2 * int(i < l < k < j < i + n)
            return count
        return int(i < y.i < j < i + n)
    # x = (i,*) or (i,x)
    if y.kind == ARC:
        k, l = y.i, y.j - n
        return int(i < l < k < i + n)
    return int(y.kind != x.kind and i < y.i < i + n)


def graded_extension_list(x: GradedIndec, y: GradedIndec) -> list[tuple[GradedIndec, ...]]:
    """Middle terms of the listed sequences 0 -> x -> E -> y -> 0."""
    n = x.n
    if x.projective or y.projective:
        return []
    out = []
    i = x.i
    if x.kind == ARC:
        j = x.j
        if y.kind == ARC:
            k, L = y.i, y.j
            l = L - n
            if i < k < j < L <= i + n:
                out.append((*_pair(n, i, L), *_pair(n, k, j)))
            if i < l < j <= k < i + n:
                out.append((*_pair(n, k, i + n), *_pair(n, l, j)))
            if i < l < k < j < i + n:
                out.append((*_pair(n, k, i + n), *_pair(n, l, j)))
                out.append((*_pair(n, l, i + n), *_pair(n, k, j)))
        elif i < y.i < j < i + n:
            out.append((*_pair(n, y.i, j), GradedIndec(n, y.kind, i)))
        return [tuple(sorted(e)) for e in out]
    if y.kind == ARC:
        k, l = y.i, y.j - n
        if i < l < k < i + n:
            out.append((*_pair(n, k, i + n), GradedIndec(n, x.kind, l)))
    elif y.kind != x.kind and i < y.i < i + n:
        out.append(tuple(_pair(n, y.i, i + n)))
    return [tuple(sorted(e)) for e in out]


# ------------------------------------------------------------------ Hom by knitting

def _check_window(x: GradedIndec, y: GradedIndec, window: int) -> None:
    if y.position - x.position > 2 * window * x.n:
        raise WindowExceeded(f"{y} lies more than {window} periods after {x}")


@lru_cache(maxsize=4096)
def _knit(x: GradedIndec, top: int, stable: bool) -> dict[GradedIndec, int]:
    """Hom(x, -) on every vertex y with y >= x coordinatewise and position <= top."""
    n = x.n
    h: dict[GradedIndec, int] = {}
    for p in range(x.position, top + 1):
        for y in _level(n, p, x.a1, x.a2):
            if stable and y.projective:
                continue
            delta = int(y == x)
            if y.projective:
                h[y] = delta + sum(h.get(z, 0) for z in predecessors(y))
                continue
            if p == x.position:
                h[y] = delta
                continue
            total = sum(h.get(z, 0) for z in mesh_middle(y)) - h.get(tau_z(y), 0)
            if stable:
                total = max(total, 0)  # the triangle's connecting map eats the rest
            elif total < 0:
                raise ArithmeticError(f"negative knitting value at {y}")
            h[y] = total + delta
    return h


def _level(n: int, p: int, lo1: int, lo2: int) -> list[GradedIndec]:
    """Vertices at position p with A1 >= lo1 and A2 >= lo2."""
    out = []
    for i in range(lo1, p // 2 + 1):
        j = p - i
        if j < lo2:
            continue
        if 0 < j - i < n:
            out.append(arc(n, i, j))
        elif j - i == n:
            out += [star(n, i), notch(n, i)]
    return out


def graded_hom_dim(x: GradedIndec, y: GradedIndec, window: int = DEFAULT_WINDOW) -> int:
    """dim of degree-preserving maps x -> y, by knitting from x."""
    if not (x.a1 <= y.a1 and x.a2 <= y.a2):
        return 0
    _check_window(x, y, window)
    return _knit(x, y.position, False).get(y, 0)


def stable_graded_hom_dim(x: GradedIndec, y: GradedIndec) -> int:
    """Stable Hom(x, y) = D Ext^1(y, tau x), read off the extension families."""
    if x.projective or y.projective:
        return 0
    return graded_ext1_dim(x, tau_inv_z(y))


def stable_hom_knitted(x: GradedIndec, y: GradedIndec, window: int = DEFAULT_WINDOW) -> int:
    """Stable Hom by clipped knitting on the stable AR quiver (cross-check)."""
    if x.projective or y.projective:
        return 0
    if not (x.a1 <= y.a1 and x.a2 <= y.a2):
        return 0
    _check_window(x, y, window)
    return _knit(x, y.position, True).get(y, 0)


# ------------------------------------------------------------------ AR quiver

def indecomposables(n: int, lo: int, hi: int) -> list[GradedIndec]:
    """Every indecomposable with lo <= A1 < hi."""
    out = []
    for i in range(lo, hi):
        out += [arc(n, i, j) for j in range(i + 1, i + n)]
        out += [star(n, i), notch(n, i)]
    return out


def ar_quiver(n: int, window: int = DEFAULT_WINDOW, i0: int = 0) -> nx.DiGraph:
    """Irreducible maps among indecomposables with i0 <= A1 < i0 + window*n; tau as a node attribute."""
    nodes = indecomposables(n, i0, i0 + window * n)
    inside = set(nodes)
    g = nx.DiGraph()
    for x in nodes:
        tau = None if x.projective else tau_z(x)
        g.add_node(x, projective=x.projective, tau=tau if tau in inside else None)
    for x in nodes:
        for y in successors(x):
            if y in inside:
                g.add_edge(x, y)
    return g


def ar_quiver_dot(g: nx.DiGraph) -> str:
    lines = ["digraph AR {"]
    name = {x: f"v{k}" for k, x in enumerate(g.nodes)}
    for x in g.nodes:
        shape = "box" if g.nodes[x]["projective"] else "ellipse"
        lines.append(f'  {name[x]} [label="{x}", shape={shape}];')
    for x, y in g.edges:
        lines.append(f"  {name[x]} -> {name[y]};")
    for x in g.nodes:
        t = g.nodes[x]["tau"]
        if t is not None:
            lines.append(f"  {name[x]} -> {name[t]} [style=dotted, constraint=false];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _orbit_graph(g: nx.DiGraph, keep) -> tuple[nx.Graph, dict]:
    """Quotient of the kept part of g by index translation along tau."""
    orbit = nx.Graph()
    kept = [x for x in g.nodes if keep(x)]
    orbit.add_nodes_from(kept)
    for x in kept:
        t = g.nodes[x]["tau"]
        if t is None and x.projective:
            t = _translate(x, -1)
        if t is not None and t in g and keep(t):
            orbit.add_edge(x, t)
    comp = {x: k for k, c in enumerate(nx.connected_components(orbit)) for x in c}
    q = nx.Graph()
    q.add_nodes_from(set(comp.values()))
    q.add_edges_from((comp[x], comp[y]) for x, y in g.edges if x in comp and y in comp)
    return q, comp


def ar_shape(n: int, window: int = DEFAULT_WINDOW) -> dict:
    """Orbit counts, orbit graphs and mesh valencies of the windowed AR quiver."""
    from .quiver import is_type_d

    g = ar_quiver(n, window)
    stable_q, stable_comp = _orbit_graph(g, lambda x: not x.projective)
    full_q, _ = _orbit_graph(g, lambda x: True)
    valency_ok = True
    for x in g.nodes:
        if x.projective or g.nodes[x]["tau"] is None:
            continue
        mids = [z for z in mesh_middle(x) if not z.projective]
        if len(mids) != stable_q.degree(stable_comp[x]):
            valency_ok = False
        if any(not g.has_edge(z, x) or not g.has_edge(g.nodes[x]["tau"], z) for z in mesh_middle(x)):
            valency_ok = False
    return {
        "stable_orbits": stable_q.number_of_nodes(),
        "projective_orbits": full_q.number_of_nodes() - stable_q.number_of_nodes(),
        "stable_type_d": is_type_d(list(stable_q.edges), list(stable_q.nodes)),
        "full_type_d": is_type_d(list(full_q.edges), list(full_q.nodes)),
        "valency_ok": valency_ok,
    }


def ar_shape_ok(n: int, window: int = DEFAULT_WINDOW) -> bool:
    """Stable part is ZD_n, and the projective orbit extends the orbit graph to D_{n+1}."""
    s = ar_shape(n, window)
    return (s["stable_orbits"] == n and s["projective_orbits"] == 1
            and s["stable_type_d"] and s["full_type_d"] and s["valency_ok"])


# ------------------------------------------------------------------ tilting

def free_vertex(tri) -> int | None:
    """A polygon vertex with no incident arc, if there is one."""
    used = {v for a in tri.arcs for v in ((a.a1,) if a.at_puncture else (a.a1, a.a2))}
    return next((v for v in range(1, tri.n + 1) if v not in used), None)


def lift_edge(e: TaggedEdge, n: int, i0: int) -> GradedIndec:
    """The lift with i0 < A1 < i0 + n."""
    a1 = i0 + 1 + (e.a1 - i0 - 1) % n
    if e.at_puncture:
        return GradedIndec(n, STAR if e.kind is Kind.PLAIN else NOTCH, a1)
    return arc(n, a1, a1 + (e.a2 - e.a1) % n)


def lift_triangulation(tri, i0: int | None = None) -> list[GradedIndec]:
    n = tri.n
    if i0 is None:
        i0 = free_vertex(tri)
    if i0 is None:
        kinds = {a.kind for a in tri.arcs}
        if not all(a.at_puncture for a in tri.arcs) or len(kinds) != 1:
            raise ValueError(f"{tri}: every vertex carries an arc but it is not a puncture star")
        kind = STAR if kinds == {Kind.PLAIN} else NOTCH
        return [GradedIndec(n, kind, i) for i in range(1, n + 1)]
    if any(i0 in ((a.a1,) if a.at_puncture else (a.a1, a.a2)) for a in tri.arcs):
        raise ValueError(f"vertex {i0} has an incident arc")
    out = [lift_edge(a, n, i0) for a in tri.arcs]
    for x in out:
        if not (i0 < x.a1 < i0 + n and i0 + 1 < x.a2 < i0 + 2 * n):
            raise AssertionError(f"lift {x} leaves the admissible range")
    return sorted(out)


def is_tilting_window(objs, k_range=range(-4, 5)) -> bool:
    """No stable maps from objs to Omega^k objs for k != 0 in k_range."""
    return all(stable_graded_hom_dim(x, omega_power(y, k)) == 0
               for k in k_range if k != 0 for x in objs for y in objs)
