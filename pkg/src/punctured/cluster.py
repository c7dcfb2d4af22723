"""Cluster tilting objects T_sigma and their consistency with triangulations."""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache

import networkx as nx

from .homology import ext1_dim, hom_module, stable_hom
from .polygon import PolygonCtx, TaggedEdge, all_arcs
from .quiver import IceQuiverWithPotential, build_ice_qp, min_path_theta
from .triangulation import DEFAULT_BOUND, TaggedTriangulation, enumerate_all, fan, flip


@dataclass(frozen=True)
class TiltingCandidate:
    edges: frozenset[TaggedEdge]

    @classmethod
    def of(cls, edges) -> "TiltingCandidate":
        return cls(frozenset(edges))

    def arcs(self) -> frozenset[TaggedEdge]:
        return frozenset(e for e in self.edges if not e.is_side)


@lru_cache(maxsize=None)
def _rigid_pairs(ctx: PolygonCtx) -> dict[TaggedEdge, frozenset[TaggedEdge]]:
    """Arc -> arcs it has no Ext^1 with, in either direction."""
    arcs = all_arcs(ctx)
    return {a: frozenset(b for b in arcs if ext1_dim(ctx, a, b) == 0 and ext1_dim(ctx, b, a) == 0)
            for a in arcs}


def is_rigid(ctx: PolygonCtx, edges) -> bool:
    arcs = [e for e in edges if not e.is_side]
    return all(ext1_dim(ctx, a, b) == 0 for a in arcs for b in arcs)


def is_cluster_tilting(ctx: PolygonCtx, cand: TiltingCandidate) -> bool:
    arcs = cand.arcs()
    if not is_rigid(ctx, arcs):
        return False
    ok = _rigid_pairs(ctx)
    return not any(x not in arcs and all(a in ok[x] for a in arcs) for x in all_arcs(ctx))


def t_sigma(tri: TaggedTriangulation) -> TiltingCandidate:
    return TiltingCandidate.of(tri.edges())


def maximal_rigid_sets(ctx: PolygonCtx) -> set[frozenset[TaggedEdge]]:
    """Maximal cliques of the Ext-orthogonality graph on arcs."""
    ok = _rigid_pairs(ctx)
    g = nx.Graph()
    g.add_nodes_from(a for a in ok if a in ok[a])
    g.add_edges_from((a, b) for a in g for b in ok[a] if b in g and a != b)
    return {frozenset(c) for c in nx.find_cliques(g)}


def endo_degree_check(tri: TaggedTriangulation, qp: IceQuiverWithPotential | None = None) -> bool:
    """Hom(M_a, M_b) starts in the degree of the cheapest path a -> b of Q_sigma.

    Mixed-tag pairs must have zero Hom; paths between them may exist in the
    quiver (through the digon) but vanish in the Jacobian algebra.
    """
    ctx = tri.ctx
    qp = build_ice_qp(tri) if qp is None else qp
    for a in qp.vertices:
        for b in qp.vertices:
            h = hom_module(ctx, a, b)
            if a.at_puncture and b.at_puncture and a.kind is not b.kind:
                if not h.is_zero:
                    return False
                continue
            if h.is_zero or h.degree != min_path_theta(qp, a, b):
                return False
    return True


def replacements(tri: TaggedTriangulation, arc: TaggedEdge) -> list[TaggedEdge]:
    """Arcs x != arc with (T_sigma without arc) + x still cluster tilting."""
    ctx = tri.ctx
    rest = [a for a in tri.arcs if a != arc]
    return [x for x in all_arcs(ctx) if x != arc and x not in rest
            and is_cluster_tilting(ctx, TiltingCandidate.of(rest + [x]))]


def exchange_vs_mutation(ctx: PolygonCtx, bound: int = DEFAULT_BOUND, sample: int | None = None,
                         seed: int = 0) -> bool:
    """Each flip replaces an arc by the only other arc keeping the set cluster tilting."""
    moves = [(t, a) for t in enumerate_all(ctx, bound) for a in t.arcs]
    if sample is not None and sample < len(moves):
        moves = random.Random(seed).sample(moves, sample)
    return all(replacements(t, a) == [flip(t, a)[1]] for t, a in moves)


def hereditary_check(ctx: PolygonCtx) -> bool:
    """For the fan with both tags at P_1: no stable maps of degree 0 between distinct summands."""
    arcs = fan(ctx).arcs
    for a in arcs:
        for b in arcs:
            if a != b:
                ell, eps = stable_hom(ctx, a, b)
                if eps and ell == 0:
                    return False
    return True
