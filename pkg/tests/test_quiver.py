import json
import random

import pytest

from punctured.polygon import Kind, PolygonCtx, theta_length
from punctured.quiver import (
    all_min_path_theta,
    arrow_term_counts,
    build_full_qp,
    build_ice_qp,
    check_potential_homogeneous,
    digon,
    is_closed_cycle,
    is_type_d,
    min_path_theta,
)
from punctured.triangulation import enumerate_all, fan, flip, puncture_star, validate

INF = float("inf")


def _match_terms(qp, named):
    """Backtrack for a map letters -> arrow ids turning the named terms into qp's potential."""
    terms = [(t.sign, t.cycle) for t in qp.potential]
    if len(terms) != len(named):
        return None

    def go(k, used, assign):
        if k == len(named):
            return assign
        sign, word = named[k]
        for idx, (s, cyc) in enumerate(terms):
            if idx in used or s != sign or len(cyc) != len(word):
                continue
            for r in range(len(cyc)):
                rot = cyc[r:] + cyc[:r]
                new = dict(assign)
                if all(new.setdefault(ch, a) == a for ch, a in zip(word, rot)) and \
                        len(set(new.values())) == len(new):
                    out = go(k + 1, used | {idx}, new)
                    if out is not None:
                        return out
        return None

    return go(0, frozenset(), {})


def test_worked_example_potential():
    # the digon example on a triangle: W = fgh + abc + ade - (alpha)ag - (beta)fbc, W' = W - (gamma)h
    ctx = PolygonCtx(3)
    t = validate(ctx, [ctx.arc(1, 3), ctx.plain(1), ctx.notched(1)])
    full, ice = build_full_qp(t), build_ice_qp(t)
    W = [(1, "fgh"), (1, "abc"), (1, "ade"), (-1, "Aag"), (-1, "Bfbc")]
    m = _match_terms(ice, W)
    assert m is not None
    mf = _match_terms(full, W + [(-1, "Ch")])
    assert mf is not None
    assert {a.id for a in full.arrows} - {a.id for a in ice.arrows} == {mf["C"]}
    assert full.arrow(mf["C"]).kind == "external"
    # a is the arrow of the digon, shared by both triangles at the puncture
    eta = full.arrow(m["a"])
    k, a, b = digon(t)
    assert (eta.source, eta.target) == (a, b)


@pytest.mark.parametrize("n", range(3, 8))
def test_all_plain_star_is_the_initial_case(n):
    ctx = PolygonCtx(n)
    qp = build_ice_qp(puncture_star(ctx, Kind.PLAIN))
    got = {(a.source, a.target): a.theta for a in qp.arrows}
    want = {}
    for i in range(1, n + 1):
        side, ray, nxt = ctx.side(i), ctx.plain(i), ctx.plain(i + 1)
        want[(ray, nxt)] = 2                     # alpha_i
        want[(nxt, side)] = n - 1                # beta_i
        want[(side, ray)] = n - 1                # gamma_i
        want[(ctx.side(i - 1), side)] = 2        # delta_i
    assert got == want
    assert len(qp.arrows) == 4 * n


@pytest.mark.parametrize("n", range(3, 9))
def test_fan_non_frozen_part_is_type_d(n):
    ctx = PolygonCtx(n)
    t = fan(ctx)
    qp = build_ice_qp(t)
    inner = [v for v in qp.vertices if v not in qp.frozen]
    edges = [(a.source, a.target) for a in qp.arrows if a.source in inner and a.target in inner]
    assert is_type_d(edges, inner)
    assert len(build_full_qp(t).arrows) - len(qp.arrows) == 1  # only P_2 lacks an arc


def test_is_type_d_rejects_other_shapes():
    assert is_type_d([(1, 2), (2, 3)], [1, 2, 3])
    assert not is_type_d([(1, 2), (2, 3), (3, 4)], [1, 2, 3, 4])
    assert is_type_d([(1, 3), (2, 3), (3, 4)], [1, 2, 3, 4])
    assert not is_type_d([(1, 2), (2, 3), (3, 1)], [1, 2, 3])
    star = [(0, 1), (0, 2), (0, 3), (3, 4)]
    assert is_type_d(star, range(5))
    assert not is_type_d([(0, 1), (1, 2), (2, 3), (2, 4), (4, 5), (1, 6)], range(7))


def _bare(t):
    return {v for v in range(1, t.n + 1) if not any(v in (e.a1, e.a2) for e in t.arcs)}


@pytest.mark.parametrize("n", range(3, 7))
def test_structure_over_all_triangulations(n):
    ctx = PolygonCtx(n)
    for t in enumerate_all(ctx):
        full, ice = build_full_qp(t), build_ice_qp(t)
        assert check_potential_homogeneous(full) and check_potential_homogeneous(ice)
        assert full.frozen == {ctx.side(i) for i in range(1, n + 1)}
        assert len(full.arrows) - len(ice.arrows) == len(_bare(t))
        for qp in full, ice:
            for a in qp.arrows:
                assert a.source != a.target
                assert 1 <= a.theta < 2 * n
                assert a.theta == theta_length(ctx, a.source, a.target) % (2 * n)
            for term in qp.potential:
                assert is_closed_cycle(qp, term)
                if term.label == "triangle":
                    assert len(term.cycle) == 3


@pytest.mark.parametrize("n", [7, 8])
def test_homogeneity_sampled(n):
    tris = enumerate_all(PolygonCtx(n))
    for t in random.Random(n).sample(tris, 100):
        assert check_potential_homogeneous(build_full_qp(t))
        assert check_potential_homogeneous(build_ice_qp(t))


@pytest.mark.parametrize("n", range(3, 7))
def test_term_counts(n):
    # every arrow lies in at most two terms of opposite sign, except the digon
    # arrow, which closes both triangles at the puncture and one external cycle
    for t in enumerate_all(PolygonCtx(n)):
        qp = build_full_qp(t)
        dg = digon(t)
        for aid, signs in arrow_term_counts(qp).items():
            a = qp.arrow(aid)
            if dg is not None and (a.source, a.target) == (dg[1], dg[2]):
                assert sorted(signs) == [-1, 1, 1]
            else:
                assert len(signs) <= 2 and (len(signs) < 2 or sum(signs) == 0)


@pytest.mark.parametrize("n", range(3, 6))
def test_every_vertex_on_an_external_or_punctured_cycle(n):
    # the one exception is the notched arc of a digon: the external cycle runs through the plain one
    for t in enumerate_all(PolygonCtx(n)):
        qp = build_full_qp(t)
        covered = set()
        for term in qp.potential:
            if term.label != "triangle":
                covered |= {qp.arrow(i).source for i in term.cycle}
        missing = set(qp.vertices) - covered
        dg = digon(t)
        assert missing == (set() if dg is None else {t.ctx.notched(dg[0])})


def test_detector_catches_perturbation():
    ctx = PolygonCtx(5)
    for t in random.Random(1).sample(enumerate_all(ctx), 20):
        qp = build_ice_qp(t)
        for a in qp.arrows:
            if arrow_term_counts(qp)[a.id]:
                assert not check_potential_homogeneous(qp.with_theta(a.id, a.theta + 1))


def test_fan_triangle_sum():
    ctx = PolygonCtx(6)
    qp = build_ice_qp(puncture_star(ctx, Kind.PLAIN))
    for term in qp.potential:
        if term.label == "triangle":
            assert sorted(a.theta for a in qp.term_arrows(term)) == [2, 5, 5]


def _same_class(a, b):
    return not (a.at_puncture and b.at_puncture and a.kind is not b.kind)


@pytest.mark.parametrize("n", range(3, 6))
def test_min_path_is_theta_length(n):
    ctx = PolygonCtx(n)
    for t in enumerate_all(ctx):
        qp = build_ice_qp(t)
        d = all_min_path_theta(qp)
        for (a, b), v in d.items():
            if a == b:
                assert v == 0
            elif _same_class(a, b):
                assert v == theta_length(ctx, a, b)


@pytest.mark.parametrize("n", range(3, 6))
def test_min_path_flip_invariant(n):
    ctx = PolygonCtx(n)
    for t in enumerate_all(ctx):
        d = all_min_path_theta(build_ice_qp(t))
        for arc in t.arcs:
            t2, _ = flip(t, arc)
            d2 = all_min_path_theta(build_ice_qp(t2))
            for key in d.keys() & d2.keys():
                if _same_class(*key):
                    assert d[key] == d2[key]


@pytest.mark.parametrize("n", range(3, 6))
def test_min_path_triangle_inequality(n):
    for t in enumerate_all(PolygonCtx(n))[::7]:
        d = all_min_path_theta(build_ice_qp(t))
        vs = build_ice_qp(t).vertices
        for a in vs:
            for b in vs:
                for c in vs:
                    if d[a, b] < INF and d[b, c] < INF:
                        assert d[a, b] + d[b, c] >= d[a, c]


def test_mixed_pairs_in_the_fan():
    # plain and notched arcs at P_1 reach each other through the digon, at theta 2n
    ctx = PolygonCtx(5)
    qp = build_ice_qp(fan(ctx))
    p, x = ctx.plain(1), ctx.notched(1)
    assert min_path_theta(qp, p, x) == min_path_theta(qp, x, p) == 10


def test_exports():
    ctx = PolygonCtx(4)
    qp = build_ice_qp(fan(ctx))
    obj = json.loads(json.dumps(qp.to_json()))
    assert set(obj) == {"n", "vertices", "arrows", "potential", "frozen"}
    assert len(obj["frozen"]) == 4 and obj["n"] == 4
    assert all(set(a) == {"id", "source", "target", "kind", "theta"} for a in obj["arrows"])
    dot = qp.to_dot()
    assert dot.startswith("digraph") and "shape=box" in dot and "theta=" in dot
    assert "/* potential" in dot
