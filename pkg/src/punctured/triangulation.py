"""Tagged triangulations of the punctured polygon, flips and the exchange graph."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

import networkx as nx

from .polygon import Kind, PolygonCtx, TaggedEdge, all_arcs, edge_from_json, edge_to_json, is_compatible

DEFAULT_BOUND = 8


class TriangulationError(ValueError):
    pass


class Incompatible(TriangulationError):
    def __init__(self, a: TaggedEdge, b: TaggedEdge):
        super().__init__(f"{a} and {b} are not compatible")
        self.pair = (a, b)


class NotMaximal(TriangulationError):
    def __init__(self, witness: TaggedEdge):
        super().__init__(f"{witness} could still be added")
        self.witness = witness


class Duplicate(TriangulationError):
    def __init__(self, arc: TaggedEdge):
        super().__init__(f"{arc} listed twice")
        self.arc = arc


class NoReplacement(TriangulationError):
    pass


class NonUniqueReplacement(TriangulationError):
    pass


class BoundExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class TaggedTriangulation:
    ctx: PolygonCtx
    arcs: tuple[TaggedEdge, ...]

    @property
    def n(self) -> int:
        return self.ctx.n

    def edges(self) -> list[TaggedEdge]:
        """Sides first, then the arcs."""
        return [self.ctx.side(i) for i in range(1, self.n + 1)] + list(self.arcs)

    def __contains__(self, e: TaggedEdge) -> bool:
        return e.is_side or e in self.arcs

    def to_json(self) -> dict:
        return {"n": self.n, "arcs": [edge_to_json(a) for a in self.arcs]}

    def __str__(self) -> str:
        return "{" + ", ".join(map(str, self.arcs)) + "}"


def triangulation_from_json(obj: dict) -> TaggedTriangulation:
    ctx = PolygonCtx(obj["n"])
    return validate(ctx, [edge_from_json(ctx, e) for e in obj["arcs"]])


@lru_cache(maxsize=None)
def _table(ctx: PolygonCtx):
    """Canonical arcs, their positions, and compatibility bitmasks."""
    arcs = all_arcs(ctx)
    pos = {a: i for i, a in enumerate(arcs)}
    masks = []
    for a in arcs:
        m = 0
        for j, b in enumerate(arcs):
            if b != a and is_compatible(ctx, a, b):
                m |= 1 << j
        masks.append(m)
    return arcs, pos, masks


def validate(ctx: PolygonCtx, arcs: Iterable[TaggedEdge]) -> TaggedTriangulation:
    arcs = list(arcs)
    seen = set()
    for a in arcs:
        ctx.check_edge(a)
        if a.is_side:
            raise TriangulationError(f"{a} is a side; sides are implicit")
        if a in seen:
            raise Duplicate(a)
        seen.add(a)
    for x in range(len(arcs)):
        for y in range(x + 1, len(arcs)):
            if not is_compatible(ctx, arcs[x], arcs[y]):
                raise Incompatible(arcs[x], arcs[y])
    for c in all_arcs(ctx):
        if c not in seen and all(is_compatible(ctx, c, a) for a in arcs):
            raise NotMaximal(c)
    return TaggedTriangulation(ctx, tuple(ctx.sort_edges(arcs)))


def _check_bound(ctx: PolygonCtx, bound: int) -> None:
    if ctx.n > bound:
        raise BoundExceeded(f"n = {ctx.n} exceeds the enumeration bound {bound}")


def enumerate_all(ctx: PolygonCtx, bound: int = DEFAULT_BOUND) -> list[TaggedTriangulation]:
    """Every tagged triangulation, in lexicographic order of canonical arc positions."""
    _check_bound(ctx, bound)
    return list(_enumerate(ctx))


@lru_cache(maxsize=None)
def _enumerate(ctx: PolygonCtx) -> tuple[TaggedTriangulation, ...]:
    arcs, _, masks = _table(ctx)
    out: list[TaggedTriangulation] = []

    def grow(chosen: list[int], cand: int, skipped: int) -> None:
        # skipped: arcs compatible with everything chosen but passed over
        if not cand:
            if not skipped:
                out.append(TaggedTriangulation(ctx, tuple(arcs[i] for i in chosen)))
            return
        s = skipped
        while s:
            x = (s & -s).bit_length() - 1
            if cand & ~masks[x] == 0:
                return  # x stays addable whatever we pick next
            s &= s - 1
        c = cand
        while c:
            i = (c & -c).bit_length() - 1
            c &= c - 1
            grow(chosen + [i], c & masks[i], skipped & masks[i])
            skipped |= 1 << i

    grow([], (1 << len(arcs)) - 1, 0)
    return tuple(out)


def flip(tri: TaggedTriangulation, arc: TaggedEdge) -> tuple[TaggedTriangulation, TaggedEdge]:
    if arc not in tri.arcs:
        raise TriangulationError(f"{arc} is not an arc of {tri}")
    ctx = tri.ctx
    arcs, pos, masks = _table(ctx)
    rest = [a for a in tri.arcs if a != arc]
    free = (1 << len(arcs)) - 1
    for a in rest:
        free &= masks[pos[a]]
    free &= ~(1 << pos[arc])
    found = [arcs[i] for i in range(len(arcs)) if free >> i & 1]
    if not found:
        raise NoReplacement(f"no arc replaces {arc} in {tri}")
    if len(found) > 1:
        raise NonUniqueReplacement(f"{arc} in {tri} has replacements {', '.join(map(str, found))}")
    new = found[0]
    return TaggedTriangulation(ctx, tuple(ctx.sort_edges(rest + [new]))), new


def flip_kind(old: TaggedEdge, new: TaggedEdge) -> str:
    """Which of the three local flip pictures a flip is."""
    ends = sorted((old.at_puncture, new.at_puncture))
    return {(False, False): "square", (False, True): "puncture-arc", (True, True): "tag-change"}[tuple(ends)]


def exchange_graph(ctx: PolygonCtx, bound: int = DEFAULT_BOUND) -> nx.Graph:
    """Triangulations joined by flips; each edge carries the exchanged pair of arcs."""
    tris = enumerate_all(ctx, bound)
    g = nx.Graph()
    g.add_nodes_from(tris)
    for t in tris:
        for a in t.arcs:
            t2, b = flip(t, a)
            if not g.has_edge(t, t2):
                g.add_edge(t, t2, arcs=(a, b))
    return g


def puncture_pattern(tri: TaggedTriangulation) -> str:
    """How the puncture arcs of tri are tagged: plain, notched, pair (both tags at one vertex) or mixed."""
    punct = [a for a in tri.arcs if a.at_puncture]
    kinds = {a.kind for a in punct}
    if not punct:
        return "none"
    if kinds == {Kind.PLAIN}:
        return "plain"
    if kinds == {Kind.NOTCHED}:
        return "notched"
    if len(punct) == 2 and punct[0].a1 == punct[1].a1:
        return "pair"
    return "mixed"


def fan(ctx: PolygonCtx, base: int = 1, tags=(Kind.PLAIN, Kind.NOTCHED)) -> TaggedTriangulation:
    """All arcs from P_base plus the given puncture arcs at P_base."""
    arcs = [ctx.arc(base, base + d) for d in range(2, ctx.n)]
    arcs += [ctx.puncture(base, k) for k in tags]
    return TaggedTriangulation(ctx, tuple(ctx.sort_edges(arcs)))


def puncture_star(ctx: PolygonCtx, kind: Kind = Kind.PLAIN) -> TaggedTriangulation:
    """All n puncture arcs with the same tag."""
    return TaggedTriangulation(ctx, tuple(ctx.puncture(i, kind) for i in range(1, ctx.n + 1)))
