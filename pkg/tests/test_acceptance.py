"""The thirteen acceptance criteria, each checked exactly and reported as one PASS/FAIL line."""

import random
import time

import networkx as nx
import pytest

from punctured.cluster import endo_degree_check, maximal_rigid_sets
from punctured.graded import (
    ar_shape_ok,
    arc,
    forget,
    graded_hom_dim,
    indecomposables,
    is_tilting_window,
    lift_triangulation,
    notch,
    omega_z,
    shift,
    star,
)
from punctured.homology import (
    ar_sequence,
    ext1_dim,
    ext1_table,
    hom_module,
    nu,
    omega,
    stable_hom,
    tau,
    tau_inv,
)
from punctured.oracle import (
    PRIMES,
    are_isomorphic,
    cover_crossing,
    graded_module,
    oracle_enumerate_maximal_compatible,
    oracle_hom_graded,
    oracle_omega_graded,
    oracle_stable_and_ext,
)
from punctured.order import graded_dim, s_bracket_n
from punctured.polygon import PolygonCtx, all_arcs, all_edges
from punctured.quiver import all_min_path_theta, build_full_qp, build_ice_qp, check_potential_homogeneous
from punctured.triangulation import enumerate_all, exchange_graph, fan, flip


def _report(capsys, k, budget, check):
    t0 = time.perf_counter()
    ok = bool(check())
    dt = time.perf_counter() - t0
    in_time = dt < budget
    verdict = "PASS" if ok and in_time else "FAIL"
    note = "" if in_time else f", over the {budget:g} s budget"
    with capsys.disabled():
        print(f"\ncriterion {k}: {verdict} ({dt:.1f} s{note})")
    assert ok, f"criterion {k} check failed"
    assert in_time, f"criterion {k} took {dt:.1f} s, budget {budget} s"


def test_criterion_01_edge_census(capsys):
    _report(capsys, 1, 1, lambda: all(len(all_edges(PolygonCtx(n))) == n * n + n for n in range(3, 9)))


def test_criterion_02_triangulation_census(capsys):
    def check():
        counts = {n: len(enumerate_all(PolygonCtx(n))) for n in range(3, 7)}
        oracle = {n: oracle_enumerate_maximal_compatible(PolygonCtx(n)) for n in range(3, 7)}
        return counts == oracle and counts[3] == 14 and counts[4] == 50 and counts[5] == 182
    _report(capsys, 2, 30, check)


def test_criterion_03_exchange_graph(capsys):
    def check():
        for n in range(3, 7):
            ctx = PolygonCtx(n)
            g = exchange_graph(ctx)
            if not nx.is_connected(g) or any(d != n for _, d in g.degree):
                return False
            for t in enumerate_all(ctx):
                for a in t.arcs:
                    t2, b = flip(t, a)
                    if t2 == t or b == a or flip(t2, b) != (t, a):
                        return False
        return True
    _report(capsys, 3, 30, check)


def test_criterion_04_potential_homogeneity(capsys):
    def check():
        for n in range(3, 9):
            tris = enumerate_all(PolygonCtx(n))
            if n >= 7:
                tris = random.Random(0).sample(tris, 100)
            for t in tris:
                if not (check_potential_homogeneous(build_ice_qp(t))
                        and check_potential_homogeneous(build_full_qp(t))):
                    return False
        return True
    _report(capsys, 4, 60, check)


def test_criterion_05_flip_invariance(capsys):
    def check():
        for n in range(3, 6):
            ctx = PolygonCtx(n)
            dist = {t: all_min_path_theta(build_ice_qp(t)) for t in enumerate_all(ctx)}
            for t, d in dist.items():
                for a in t.arcs:
                    d2 = dist[flip(t, a)[0]]
                    if any(d[key] != d2[key] for key in d.keys() & d2.keys()):
                        return False
        return True
    _report(capsys, 5, 60, check)


def test_criterion_06_hom_oracle(capsys):
    def check():
        for n in (3, 4, 5):
            ctx = PolygonCtx(n)
            for a in all_edges(ctx):
                for b in all_edges(ctx):
                    h = hom_module(ctx, a, b)
                    for p in PRIMES:
                        dims = oracle_hom_graded(ctx, a, b, t=6, deg_bound=8 * n - 1, p=p)
                        if max(dims) != 8 * n - 1:
                            return False
                        if any(dims[d] != graded_dim(h, d, n) for d in dims):
                            return False
        return True
    _report(capsys, 6, 300, check)


def test_criterion_07_stable_and_ext_oracle(capsys):
    def check():
        for n in (3, 4):
            ctx = PolygonCtx(n)
            for a in all_edges(ctx):
                for b in all_edges(ctx):
                    stable, ext = oracle_stable_and_ext(ctx, a, b, t=6)
                    ell, eps = stable_hom(ctx, a, b)
                    if stable != ({ell: eps} if eps else {}) or ext != ext1_dim(ctx, a, b):
                        return False
        return True
    _report(capsys, 7, 300, check)


def test_criterion_08_three_way_ext(capsys):
    def check():
        for n in range(3, 9):
            ctx = PolygonCtx(n)
            arcs = all_arcs(ctx)
            for a in arcs:
                for b in arcs:
                    if not ext1_dim(ctx, a, b) == ext1_table(ctx, a, b) == cover_crossing(ctx, a, b):
                        return False
        return True
    _report(capsys, 8, 10, check)


def test_criterion_09_two_calabi_yau(capsys):
    def check():
        for n in range(3, 9):
            ctx = PolygonCtx(n)
            edges = all_edges(ctx)
            if any(ext1_dim(ctx, a, b) != ext1_dim(ctx, b, a) for a in edges for b in edges):
                return False
        return True
    _report(capsys, 9, 10, check)


def test_criterion_10_translations(capsys):
    def check():
        for n in range(3, 9):
            ctx = PolygonCtx(n)
            for a in all_arcs(ctx):
                if tau(ctx, a) != omega(ctx, nu(ctx, a)):
                    return False
                x = a
                for _ in range(n):
                    x = tau(ctx, x)
                if a.at_puncture:
                    if (x.kind is not a.kind) != (n % 2 == 1) or x.a1 != a.a1:
                        return False
                elif x != a:
                    return False
                for _ in range(n):
                    x = tau(ctx, x)
                if x != a:
                    return False
                s = ar_sequence(ctx, a)
                if s.right != tau_inv(ctx, a) or ext1_dim(ctx, tau_inv(ctx, a), a) != 1:
                    return False
        return True
    _report(capsys, 10, 10, check)


def test_criterion_11_cluster_tilting(capsys):
    def check():
        for n in range(3, 7):
            ctx = PolygonCtx(n)
            tris = enumerate_all(ctx)
            if maximal_rigid_sets(ctx) != {frozenset(t.arcs) for t in tris}:
                return False
            if not all(endo_degree_check(t) for t in tris):
                return False
        return True
    _report(capsys, 11, 120, check)


def test_criterion_12_s_bracket(capsys):
    _report(capsys, 12, 1, lambda: all(s_bracket_n(PolygonCtx(n))[1] for n in range(3, 9)))


def test_criterion_13_graded(capsys):
    def omega_matches_cover():
        for n in (3, 4):
            for x in indecomposables(n, 1, n + 1):
                if x.projective:
                    continue
                w = omega_z(x)
                K = oracle_omega_graded(n, x.kind, x.i, x.j)
                if are_isomorphic(K, graded_module(n, w.kind, w.i, w.j)) != 0:
                    return False
        return True

    def hom_windows_match():
        for n in (3, 4, 5):
            ctx = PolygonCtx(n)
            objs = indecomposables(n, 1, n + 1)
            for x in objs:
                for y in objs:
                    h = hom_module(ctx, forget(x), forget(y))
                    total = 0
                    for m in range(-2, 3):
                        ym = shift(y, m)
                        g = graded_hom_dim(x, ym)
                        if g != graded_dim(h, ym.position - x.position, n):
                            return False
                        total += g
                    # every ungraded map in the degree window sits in one of the five shifts
                    D = y.position - x.position
                    if total != sum(graded_dim(h, d, n) for d in range(D - 4 * n, D + 4 * n + 1)):
                        return False
        return True

    def fan_lift_tilting():
        for n in range(3, 7):
            lift = lift_triangulation(fan(PolygonCtx(n)), 2)
            want = [arc(n, n + 1, k) for k in range(n + 3, 2 * n + 1)] + [star(n, n + 1), notch(n, n + 1)]
            if lift != sorted(want) or not is_tilting_window(lift, range(-4, 5)):
                return False
        return True

    def ar_shape():
        return all(ar_shape_ok(n) for n in range(3, 7))

    _report(capsys, 13, 300, lambda: omega_matches_cover() and hom_windows_match()
            and fan_lift_tilting() and ar_shape())


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
