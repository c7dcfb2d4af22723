"""Cyclic combinatorics of a once-punctured polygon.

Vertices are labelled 1..n counter-clockwise.  An edge is a side
(P_i, P_{i+1}), an arc (P_r, P_s) turning counter-clockwise around the
puncture, or a tagged arc from P_r to the puncture (plain or notched).
For puncture arcs the second index is set equal to the first.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable


class Kind(str, Enum):
    SIDE = "side"
    ARC = "arc"
    PLAIN = "plain"
    NOTCHED = "notched"


_KIND_RANK = {Kind.SIDE: 0, Kind.ARC: 1, Kind.PLAIN: 2, Kind.NOTCHED: 3}


@dataclass(frozen=True)
class TaggedEdge:
    kind: Kind
    a1: int
    a2: int

    @property
    def is_side(self) -> bool:
        return self.kind is Kind.SIDE

    @property
    def is_arc(self) -> bool:
        """True for winding arcs (not sides, not puncture arcs)."""
        return self.kind is Kind.ARC

    @property
    def at_puncture(self) -> bool:
        return self.kind in (Kind.PLAIN, Kind.NOTCHED)

    @property
    def tag(self) -> Kind | None:
        return self.kind if self.at_puncture else None

    def __str__(self) -> str:
        if self.kind is Kind.PLAIN:
            return f"({self.a1},*)"
        if self.kind is Kind.NOTCHED:
            return f"({self.a1},x)"
        return f"({self.a1},{self.a2})"


@dataclass(frozen=True)
class PolygonCtx:
    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 3:
            raise ValueError(f"need an integer n >= 3, got {self.n!r}")

    def normalize(self, x: int) -> int:
        """Reduce any integer to its representative in [1, n]."""
        return (x - 1) % self.n + 1

    def check_vertex(self, x: int) -> int:
        if not isinstance(x, int) or not 1 <= x <= self.n:
            raise ValueError(f"vertex {x!r} outside [1, {self.n}]")
        return x

    def side(self, i: int) -> TaggedEdge:
        i = self.normalize(i)
        return TaggedEdge(Kind.SIDE, i, self.normalize(i + 1))

    def arc(self, i: int, j: int) -> TaggedEdge:
        """Edge (P_i, P_j); returns a side when j = i + 1."""
        i, j = self.normalize(i), self.normalize(j)
        if i == j:
            raise ValueError(f"({i},{i}) is not an arc; use plain/notched")
        if j == self.normalize(i + 1):
            return TaggedEdge(Kind.SIDE, i, j)
        return TaggedEdge(Kind.ARC, i, j)

    def plain(self, i: int) -> TaggedEdge:
        i = self.normalize(i)
        return TaggedEdge(Kind.PLAIN, i, i)

    def notched(self, i: int) -> TaggedEdge:
        i = self.normalize(i)
        return TaggedEdge(Kind.NOTCHED, i, i)

    def puncture(self, i: int, kind: Kind) -> TaggedEdge:
        return self.plain(i) if kind is Kind.PLAIN else self.notched(i)

    def check_edge(self, e: TaggedEdge) -> TaggedEdge:
        self.check_vertex(e.a1)
        self.check_vertex(e.a2)
        d = cyclic_distance(self, e.a1, e.a2)
        ok = {
            Kind.SIDE: d == 1,
            Kind.ARC: 2 <= d <= self.n - 1,
            Kind.PLAIN: d == 0,
            Kind.NOTCHED: d == 0,
        }[e.kind]
        if not ok:
            raise ValueError(f"malformed edge {e!r} for n={self.n}")
        return e

    def edge_key(self, e: TaggedEdge) -> tuple[int, int, int]:
        """Sort key of the canonical edge order."""
        return (_KIND_RANK[e.kind], e.a1, cyclic_distance(self, e.a1, e.a2))

    def sort_edges(self, edges: Iterable[TaggedEdge]) -> list[TaggedEdge]:
        return sorted(edges, key=self.edge_key)


def cyclic_distance(ctx: PolygonCtx, r: int, s: int) -> int:
    ctx.check_vertex(r)
    ctx.check_vertex(s)
    return s - r if s >= r else s - r + ctx.n


def _d(n: int, r: int, s: int) -> int:
    return (s - r) % n


INTERVAL_KINDS = ("closed", "open", "left_open", "right_open")


def interval_contains(ctx: PolygonCtx, kind: str, r: int, s: int, x: int) -> bool:
    """Membership of x in [r,s], ]r,s[, ]r,s] or [r,s[ (cyclic)."""
    for v in (r, s, x):
        ctx.check_vertex(v)
    n = ctx.n
    if kind == "closed":
        return _d(n, r, x) <= _d(n, r, s)
    if kind == "right_open":
        return _d(n, r, x) <= _d(n, r, s) and x != s
    if kind == "left_open":
        return _d(n, r, x) <= _d(n, r, s) and x != r
    if kind == "open":
        # ]r,s[ is the complement of [s,r]
        return _d(n, s, x) > _d(n, s, r)
    raise ValueError(f"unknown interval kind {kind!r}")


def _in_open(n: int, r: int, s: int, x: int) -> bool:
    r, s, x = (r - 1) % n + 1, (s - 1) % n + 1, (x - 1) % n + 1
    return _d(n, s, x) > _d(n, s, r)


def _in_closed(n: int, r: int, s: int, x: int) -> bool:
    return _d(n, r, x) <= _d(n, r, s)


def _in_left_open(n: int, r: int, s: int, x: int) -> bool:
    return (x - r) % n != 0 and _d(n, r, x) <= _d(n, r, s)


def _in_right_open(n: int, r: int, s: int, x: int) -> bool:
    return (x - s) % n != 0 and _d(n, r, x) <= _d(n, r, s)


def theta_length(ctx: PolygonCtx, a: TaggedEdge, b: TaggedEdge) -> int:
    """The theta-length from a to b: rotation from vec(a) to vec(b) in units of pi/n."""
    n = ctx.n
    jump = int(_in_open(n, b.a1, a.a2, a.a1)) - int(_in_open(n, b.a1, a.a2, b.a2))
    return _d(n, a.a1, b.a1) + _d(n, a.a2, b.a2) + n * abs(jump)


def edge_argument(ctx: PolygonCtx, a: TaggedEdge) -> int:
    """Argument of vec(a) in units of pi/n, minus the common offset n/2.

    vec(a) points from P_{a1} to P_{a2}, or along the clockwise tangent at
    P_{a1} for puncture arcs; its argument is (a1 + a2 + n/2 + n[a1 >= a2]) pi/n.
    """
    return a.a1 + a.a2 + ctx.n * int(a.a1 >= a.a2)


def angle_index(ctx: PolygonCtx, a: TaggedEdge, b: TaggedEdge) -> int:
    """Angle from vec(a) to vec(b) in units of pi/n, reduced mod 2n."""
    return (edge_argument(ctx, b) - edge_argument(ctx, a)) % (2 * ctx.n)


def theta_defect(ctx: PolygonCtx, a: TaggedEdge, b: TaggedEdge, c: TaggedEdge) -> int:
    total = theta_length(ctx, a, b) + theta_length(ctx, b, c) - theta_length(ctx, a, c)
    q, r = divmod(total, 2 * ctx.n)
    if r:
        raise ArithmeticError(f"defect of {a},{b},{c} is not a multiple of 2n")
    return q


def side_defect(ctx: PolygonCtx, a: TaggedEdge, b: TaggedEdge, c: TaggedEdge, where: str) -> int:
    """Closed form of theta_defect when the edge named by `where` is a side."""
    n = ctx.n
    if where == "a":
        if not a.is_side:
            raise ValueError("a is not a side")
        return (int(_in_open(n, c.a1, b.a2, c.a2)) * int(_in_closed(n, b.a2, c.a1, b.a1))
                + int(_in_left_open(n, b.a1, c.a1, a.a1)))
    if where == "b":
        if not b.is_side:
            raise ValueError("b is not a side")
        p = a.a2 - 1
        return (int(_in_left_open(n, p, c.a1, a.a1)) * int(_in_left_open(n, p, c.a1, c.a2))
                + int(_in_open(n, c.a1, p, b.a1)))
    if where == "c":
        if not c.is_side:
            raise ValueError("c is not a side")
        return (int(_in_open(n, b.a1, a.a2, a.a1)) * int(_in_closed(n, a.a2, b.a1, b.a2))
                + int(_in_right_open(n, a.a2, b.a2, c.a2)))
    raise ValueError(f"where must be 'a', 'b' or 'c', got {where!r}")


def vdash(ctx: PolygonCtx, a: TaggedEdge, b: TaggedEdge) -> bool:
    """The relation a |- b: a2 in ]b2,a1[ or b1 in ]b2,a1[."""
    if a.at_puncture or b.at_puncture:
        raise ValueError("vdash is only defined away from the puncture")
    n = ctx.n
    return _in_open(n, b.a2, a.a1, a.a2) or _in_open(n, b.a2, a.a1, b.a1)


def crossing_number(ctx: PolygonCtx, a: TaggedEdge, b: TaggedEdge) -> int:
    if a.is_side or b.is_side:
        raise ValueError("crossing numbers are defined for tagged arcs only")
    from .oracle import cover_crossing

    return cover_crossing(ctx, a, b)


def is_compatible(ctx: PolygonCtx, a: TaggedEdge, b: TaggedEdge) -> bool:
    if a.is_side or b.is_side:
        return True
    if a.at_puncture and b.at_puncture and a.kind is not b.kind and a.a1 != b.a1:
        return False
    return crossing_number(ctx, a, b) == 0


def all_edges(ctx: PolygonCtx) -> list[TaggedEdge]:
    n = ctx.n
    edges = [ctx.side(i) for i in range(1, n + 1)]
    for i in range(1, n + 1):
        for d in range(2, n):
            edges.append(TaggedEdge(Kind.ARC, i, ctx.normalize(i + d)))
    edges += [ctx.plain(i) for i in range(1, n + 1)]
    edges += [ctx.notched(i) for i in range(1, n + 1)]
    return edges


def all_arcs(ctx: PolygonCtx) -> list[TaggedEdge]:
    """Tagged arcs only (sides dropped), in canonical order."""
    return [e for e in all_edges(ctx) if not e.is_side]


def sides(ctx: PolygonCtx) -> list[TaggedEdge]:
    return [ctx.side(i) for i in range(1, ctx.n + 1)]


def edge_to_json(e: TaggedEdge) -> dict:
    if e.kind is Kind.ARC:
        return {"kind": "arc", "a1": e.a1, "a2": e.a2}
    return {"kind": e.kind.value, "a1": e.a1}


def edge_from_json(ctx: PolygonCtx, obj: dict) -> TaggedEdge:
    try:
        kind = Kind(obj["kind"])
        a1 = ctx.check_vertex(obj["a1"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"bad edge JSON {obj!r}: {exc}") from None
    if kind is Kind.SIDE:
        e = ctx.side(a1)
        if "a2" in obj and obj["a2"] != e.a2:
            raise ValueError(f"side {obj!r} must end at {e.a2}")
        return e
    if kind is Kind.PLAIN:
        return ctx.plain(a1)
    if kind is Kind.NOTCHED:
        return ctx.notched(a1)
    if "a2" not in obj:
        raise ValueError(f"arc JSON needs a2: {obj!r}")
    return ctx.check_edge(TaggedEdge(Kind.ARC, a1, ctx.check_vertex(obj["a2"])))
