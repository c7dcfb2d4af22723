"""Brute-force Hom, stable Hom, Ext^1 and syzygies from the concrete lattices.

None of this reads the closed formulas: every number is a rank over GF(p).
"""

from __future__ import annotations

from functools import lru_cache

from ..polygon import PolygonCtx, TaggedEdge
from . import gf
from .lattice import (
    LatticeModule,
    compose,
    degree_floor,
    hom_dim,
    hom_space,
    projective,
    span_rank,
    syzygy,
)
from .modules import graded_module, theta_module, theta_row_base


def _check_bound(ctx: PolygonCtx, t: int, deg_bound: int) -> None:
    if deg_bound >= 2 * ctx.n * (t - 2):
        raise ValueError(f"deg_bound {deg_bound} must stay below 2n(t-2) = {2 * ctx.n * (t - 2)}")


@lru_cache(maxsize=None)
def _theta(ctx: PolygonCtx, a: TaggedEdge, p: int, t: int) -> LatticeModule:
    return theta_module(ctx, a, p=p, t=t)


def oracle_hom_graded(ctx: PolygonCtx, a: TaggedEdge, b: TaggedEdge, t: int = 6,
                      deg_bound: int | None = None, p: int = gf.PRIMES[0]) -> dict[int, int]:
    """dim Hom(M_a, M_b)_d for every d <= deg_bound (theta-grading)."""
    deg_bound = 2 * ctx.n * (t - 2) - 1 if deg_bound is None else deg_bound
    _check_bound(ctx, t, deg_bound)
    M, N = _theta(ctx, a, p, t), _theta(ctx, b, p, t)
    lo = min(0, degree_floor(M, N))
    return {d: hom_dim(M, N, d) for d in range(lo, deg_bound + 1)}


def _top(M: LatticeModule, N: LatticeModule) -> int:
    """Above this degree every map is X times a map of lower degree."""
    hi = max((D for b in N.basis for D, _ in b), default=0)
    lo = min((D for b in M.basis for D, _ in b), default=0)
    return hi - lo + M.A


def _projectives(M: LatticeModule, t: int) -> list[LatticeModule]:
    return [projective(M.n, r, A=M.A, row_base=M.row_base, p=M.p, t=t, degree_of_idempotent=0)
            for r in range(M.n)]


def _maps_into_projectives(M: LatticeModule, projs: list[LatticeModule]):
    return {(r, e): hom_space(M, P, e)
            for r, P in enumerate(projs) for e in range(degree_floor(M, P), _top(M, P) + 1)}


def _maps_from_projectives(N: LatticeModule, projs: list[LatticeModule]):
    return {(r, f): hom_space(P, N, f)
            for r, P in enumerate(projs) for f in range(degree_floor(P, N), _top(P, N) + 1)}


def stable_dims(M: LatticeModule, N: LatticeModule, t: int = 6, into=None, out=None) -> dict[int, int]:
    """dim of Hom(M,N)_d modulo maps factoring through a projective, per degree."""
    projs = _projectives(M, t)
    into = _maps_into_projectives(M, projs) if into is None else into
    out = _maps_from_projectives(N, projs) if out is None else out
    dims = {}
    for d in range(degree_floor(M, N), _top(M, N) + 1):
        full = hom_space(M, N, d)
        if not full:
            dims[d] = 0
            continue
        through = []
        for (r, e), fs in into.items():
            gs = out.get((r, d - e), [])
            for f in fs:
                for g in gs:
                    through.append(compose(g, f))
        dims[d] = len(full) - span_rank(through, M.p)
    return dims


@lru_cache(maxsize=None)
def _theta_projectives(ctx: PolygonCtx, p: int, t: int) -> list[LatticeModule]:
    return [theta_projective(ctx, r, p, t) for r in range(1, ctx.n + 1)]


@lru_cache(maxsize=None)
def _theta_into(ctx, a, p, t):
    return _maps_into_projectives(_theta(ctx, a, p, t), _theta_projectives(ctx, p, t))


@lru_cache(maxsize=None)
def _theta_out(ctx, b, p, t):
    return _maps_from_projectives(_theta(ctx, b, p, t), _theta_projectives(ctx, p, t))


def ext1_dims(M: LatticeModule, N: LatticeModule, t: int = 6) -> dict[int, int]:
    """dim Ext^1(M, N)_d from 0 -> Omega M -> P0 -> M -> 0, per degree."""
    K, P0, incl, _ = syzygy(M, t)
    if not any(K.basis):
        return {0: 0}
    lo, hi = min(degree_floor(K, N), degree_floor(P0, N)), _top(K, N)
    dims = {}
    for d in range(lo, hi + 1):
        hk = hom_space(K, N, d)
        if not hk:
            dims[d] = 0
            continue
        restricted = [compose(g, incl) for g in hom_space(P0, N, d)]
        dims[d] = len(hk) - span_rank(restricted, M.p)
    return dims


def oracle_stable_and_ext(ctx: PolygonCtx, a: TaggedEdge, b: TaggedEdge, t: int = 6,
                          p: int = gf.PRIMES[0]) -> tuple[dict[int, int], int]:
    """(degree -> stable Hom(M_a, M_b) dimension, total dim Ext^1(M_a, M_b))."""
    M, N = _theta(ctx, a, p, t), _theta(ctx, b, p, t)
    dims = stable_dims(M, N, t, _theta_into(ctx, a, p, t), _theta_out(ctx, b, p, t))
    stable = {d: k for d, k in dims.items() if k}
    ext = ext1_dims(M, N, t)
    tail = sorted(ext)[-2 * ctx.n:] if len(ext) > 2 * ctx.n else []
    if any(ext[d] for d in tail):
        raise ArithmeticError(f"Ext^1({a},{b}) has not died out by degree {max(ext)}")
    return stable, sum(ext.values())


def oracle_omega_graded(n: int, kind: str, i: int, j: int | None, t: int = 6,
                        p: int = gf.PRIMES[0]) -> LatticeModule:
    """Kernel of the projective cover of the graded indecomposable (i,j), (i,*) or (i,x)."""
    K, _, _, _ = syzygy(graded_module(n, kind, i, j, p=p, t=t), t)
    return K


def theta_projective(ctx: PolygonCtx, r: int, p: int = gf.PRIMES[0], t: int = 6) -> LatticeModule:
    """M of the side (P_r, P_{r+1}), 1-based r, as a projective lattice."""
    n = ctx.n
    return projective(n, r - 1, A=2 * n, row_base=theta_row_base(n), p=p, t=t,
                      degree_of_idempotent=0)
