"""Hom, stable Hom, Ext^1 and Auslander-Reiten data for the modules M_a.

Everything is indexed by tagged edges.  Ext^1 has two independent
implementations: Auslander-Reiten duality applied to the stable Hom formula
(the one exported), and the dimension table of the non-split extensions
(kept for cross-checking).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .order import Descriptor, descriptor_for, hom_descriptor, meet_all
from .polygon import Kind, PolygonCtx, TaggedEdge, all_edges, interval_contains, theta_length

_OTHER = {Kind.PLAIN: Kind.NOTCHED, Kind.NOTCHED: Kind.PLAIN}


def _open(ctx: PolygonCtx, r: int, s: int, x: int) -> int:
    """delta_{x in ]r,s[} with all indices read mod n."""
    nz = ctx.normalize
    return int(interval_contains(ctx, "open", nz(r), nz(s), nz(x)))


def _mixed_tags(a: TaggedEdge, b: TaggedEdge) -> bool:
    return a.at_puncture and b.at_puncture and a.kind is not b.kind


# ------------------------------------------------------------------ Hom

@lru_cache(maxsize=None)
def hom_module(ctx: PolygonCtx, a: TaggedEdge, b: TaggedEdge) -> Descriptor:
    """Hom(M_a, M_b) as a submodule of R'' acting by right multiplication.

    The closed form A_{a,b} is checked against the intersection over the
    rows i of the R'-module maps A_{i,a} -> A_{i,b}.
    """
    closed = descriptor_for(ctx, a, b)
    rows = [hom_descriptor(descriptor_for(ctx, i, a), descriptor_for(ctx, i, b), ctx.n)
            for i in range(1, ctx.n + 1)]
    if closed != meet_all(rows, ctx.n):
        raise AssertionError(f"Hom({a},{b}): closed form {closed} disagrees with the row meet")
    return closed


# ------------------------------------------------------------------ stable Hom

def _eps_terms(ctx: PolygonCtx, a: TaggedEdge, b: TaggedEdge) -> tuple[int, int]:
    first = _open(ctx, b.a1, b.a2, a.a1 - 1) * _open(ctx, a.a1, a.a2, b.a2 + 1)
    second = _open(ctx, b.a1, b.a2, a.a2 - 1) * _open(ctx, a.a1, a.a2, b.a1 + 1)
    return first, second


def stable_hom(ctx: PolygonCtx, a: TaggedEdge, b: TaggedEdge) -> tuple[int, int]:
    """(l, eps) with stable Hom(M_a, M_b) = u^l (R'/(X,Y))^eps."""
    ell = theta_length(ctx, a, b)
    if _mixed_tags(a, b):
        return ell, 0
    first, second = _eps_terms(ctx, a, b)
    if a.at_puncture or b.at_puncture:
        if first != second:
            raise AssertionError(f"the two expressions of eps differ for {a}, {b}")
        return ell, first
    return ell, first + second


# ------------------------------------------------------------------ tau, Omega, nu

def _need_arc(a: TaggedEdge) -> None:
    if a.is_side:
        raise ValueError(f"{a} is a side: projective-injective, no translate")


def _move(ctx: PolygonCtx, a: TaggedEdge, step: int, swap_tag: bool) -> TaggedEdge:
    if a.at_puncture:
        kind = _OTHER[a.kind] if swap_tag else a.kind
        return ctx.puncture(a.a1 + step, kind)
    return ctx.arc(a.a1 + step, a.a2 + step)


def tau(ctx: PolygonCtx, a: TaggedEdge) -> TaggedEdge:
    _need_arc(a)
    return _move(ctx, a, -1, True)


def tau_inv(ctx: PolygonCtx, a: TaggedEdge) -> TaggedEdge:
    _need_arc(a)
    return _move(ctx, a, 1, True)


def omega(ctx: PolygonCtx, a: TaggedEdge) -> TaggedEdge:
    """Syzygy: the graded formula (i+1-n, j+1-n) read mod n."""
    _need_arc(a)
    return _move(ctx, a, 1, True)


def nu(ctx: PolygonCtx, a: TaggedEdge) -> TaggedEdge:
    """Nakayama functor: rotation by 4 pi / n, tags kept."""
    _need_arc(a)
    return _move(ctx, a, -2, False)


# ------------------------------------------------------------------ Ext^1

def ext1_dim(ctx: PolygonCtx, a: TaggedEdge, b: TaggedEdge) -> int:
    """dim Ext^1(M_a, M_b) = dim of stable Hom(M_b, tau M_a)."""
    if a.is_side or b.is_side:
        return 0
    return stable_hom(ctx, b, tau(ctx, a))[1]


def ext1_table(ctx: PolygonCtx, a: TaggedEdge, b: TaggedEdge) -> int:
    """dim Ext^1(M_a, M_b) read from the extension table; a = (k,l), b = (i,j)."""
    if a.is_side or b.is_side:
        return 0
    k, l, i, j = a.a1, a.a2, b.a1, b.a2
    if a.at_puncture and b.at_puncture:
        return int(a.kind is not b.kind and i != k)
    if a.at_puncture:
        return _open(ctx, i, j, k)
    if b.at_puncture:
        return _open(ctx, k, l, i)
    return _open(ctx, k, l, i) * _open(ctx, i, j, l) + _open(ctx, k, l, j) * _open(ctx, i, j, k)


def ext1_matrix(ctx: PolygonCtx, edges: list[TaggedEdge] | None = None) -> list[list[int]]:
    edges = all_edges(ctx) if edges is None else edges
    return [[ext1_dim(ctx, a, b) for b in edges] for a in edges]


# ------------------------------------------------------------------ sequences

def edges_of_pair(ctx: PolygonCtx, x: int, y: int, tag: Kind | None = None) -> list[TaggedEdge]:
    """Summands named by an index pair; (x, x) means plain plus notched."""
    if tag is not None:
        return [ctx.puncture(x, tag)]
    if ctx.normalize(x) == ctx.normalize(y):
        return [ctx.plain(x), ctx.notched(x)]
    return [ctx.arc(x, y)]


def _middle(ctx: PolygonCtx, *parts) -> tuple[TaggedEdge, ...]:
    out: list[TaggedEdge] = []
    for part in parts:
        out += edges_of_pair(ctx, *part)
    return tuple(ctx.sort_edges(out))


@dataclass(frozen=True)
class ARSequence:
    left: TaggedEdge
    middle: tuple[TaggedEdge, ...]
    right: TaggedEdge


def ar_sequence(ctx: PolygonCtx, a: TaggedEdge) -> ARSequence:
    """The almost split sequence starting at M_a."""
    _need_arc(a)
    right = tau_inv(ctx, a)
    if a.at_puncture:
        middle = _middle(ctx, (a.a1 + 1, a.a1))
    else:
        i, j = a.a1, a.a2
        middle = _middle(ctx, (i + 1, j), (i, j + 1))
    return ARSequence(a, middle, right)


def extension_list(ctx: PolygonCtx, a: TaggedEdge, b: TaggedEdge) -> list[tuple[TaggedEdge, ...]]:
    """Middle terms of a basis of Ext^1(M_a, M_b): sequences 0 -> M_b -> E -> M_a -> 0."""
    if a.is_side or b.is_side:
        return []
    o = lambda r, s, x: _open(ctx, r, s, x)  # noqa: E731
    k, l, i, j = a.a1, a.a2, b.a1, b.a2
    out: list[tuple[TaggedEdge, ...]] = []
    if a.at_puncture and b.at_puncture:
        if a.kind is not b.kind and i != k:
            out.append(_middle(ctx, (k, i)))
        return out
    if a.at_puncture:
        if o(i, j, k):
            out.append(_middle(ctx, (k, j), (i, None, a.kind)))
        return out
    if b.at_puncture:
        if o(k, l, i):
            out.append(_middle(ctx, (k, i), (l, None, b.kind)))
        return out
    closed_ji = o(j, i, l) or ctx.normalize(l) == ctx.normalize(i)  # l in ]j,i]
    half_open_ji = o(j, i, k) or ctx.normalize(k) == ctx.normalize(j)  # k in [j,i[
    if o(i, j, k) and closed_ji:
        out.append(_middle(ctx, (i, l), (k, j)))
    if half_open_ji and o(i, j, l):
        out.append(_middle(ctx, (k, i), (l, j)))
    # i < l < k < j cyclically; k = i must be excluded since ]i,i[ is everything but i
    if o(i, j, k) and o(i, k, l) and o(k, i, j):
        out.append(_middle(ctx, (k, i), (l, j)))
        out.append(_middle(ctx, (l, i), (k, j)))
    return out
