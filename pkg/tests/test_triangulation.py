import json
from math import comb

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from punctured.polygon import Kind, PolygonCtx, all_arcs, crossing_number
from punctured.triangulation import (
    BoundExceeded,
    Duplicate,
    Incompatible,
    NotMaximal,
    TriangulationError,
    enumerate_all,
    exchange_graph,
    fan,
    flip,
    flip_kind,
    puncture_pattern,
    puncture_star,
    triangulation_from_json,
    validate,
)


def brute_force_count(ctx):
    g = nx.Graph()
    arcs = all_arcs(ctx)
    g.add_nodes_from(arcs)
    from punctured.polygon import is_compatible
    g.add_edges_from((a, b) for a in arcs for b in arcs if a != b and is_compatible(ctx, a, b))
    return sum(1 for _ in nx.find_cliques(g))


@pytest.mark.parametrize("n,count", [(3, 14), (4, 50), (5, 182)])
def test_enumeration_counts(n, count):
    ctx = PolygonCtx(n)
    tris = enumerate_all(ctx)
    assert len(tris) == count == len(set(tris))
    assert count == (3 * n - 2) * comb(2 * n - 2, n - 1) // n
    assert count == brute_force_count(ctx)


def test_enumeration_deterministic():
    ctx = PolygonCtx(4)
    assert enumerate_all(ctx) == enumerate_all(PolygonCtx(4))


def test_bound_enforced():
    with pytest.raises(BoundExceeded):
        enumerate_all(PolygonCtx(9))
    with pytest.raises(BoundExceeded):
        exchange_graph(PolygonCtx(5), bound=4)


@pytest.mark.parametrize("n", range(3, 8))
def test_every_triangulation_has_n_compatible_arcs(n):
    ctx = PolygonCtx(n)
    for t in enumerate_all(ctx):
        assert len(t.arcs) == n
        for a in t.arcs:
            for b in t.arcs:
                if a.is_arc and b.is_arc:
                    assert crossing_number(ctx, a, b) == 0


def test_validate_fan():
    for n in range(3, 8):
        ctx = PolygonCtx(n)
        arcs = [ctx.arc(1, k) for k in range(3, n + 1)] + [ctx.plain(1), ctx.notched(1)]
        assert validate(ctx, reversed(arcs)) == fan(ctx)


def test_validate_errors():
    ctx = PolygonCtx(5)
    arcs = list(fan(ctx).arcs)
    with pytest.raises(NotMaximal):
        validate(ctx, arcs[1:])
    with pytest.raises(Incompatible):
        validate(ctx, [ctx.plain(1), ctx.notched(3)] + arcs[:3])
    with pytest.raises(Duplicate):
        validate(ctx, arcs + arcs[:1])
    with pytest.raises(TriangulationError):
        validate(ctx, arcs[1:] + [ctx.side(1)])


@pytest.mark.parametrize("n", range(3, 7))
def test_flip_involution(n):
    for t in enumerate_all(PolygonCtx(n)):
        for a in t.arcs:
            t2, b = flip(t, a)
            assert b != a and b in t2.arcs and a not in t2.arcs
            assert set(t.arcs) - {a} == set(t2.arcs) - {b}
            assert flip(t2, b) == (t, a)


def test_fan_flip_unique():
    ctx = PolygonCtx(4)
    t2, b = flip(fan(ctx), ctx.arc(1, 3))
    assert b == ctx.arc(2, 4)


def test_flip_of_foreign_arc_rejected():
    ctx = PolygonCtx(4)
    with pytest.raises(TriangulationError):
        flip(fan(ctx), ctx.arc(2, 4))


def test_three_flip_pictures_occur():
    ctx = PolygonCtx(4)
    kinds = {flip_kind(a, flip(t, a)[1]) for t in enumerate_all(ctx) for a in t.arcs}
    assert kinds == {"square", "puncture-arc", "tag-change"}


@pytest.mark.parametrize("n", range(3, 7))
def test_exchange_graph_regular_connected(n):
    g = exchange_graph(PolygonCtx(n))
    assert nx.is_connected(g)
    assert {d for _, d in g.degree} == {n}
    assert g.number_of_nodes() == len(enumerate_all(PolygonCtx(n)))


@pytest.mark.parametrize("n", range(3, 8))
def test_puncture_patterns(n):
    seen = {puncture_pattern(t) for t in enumerate_all(PolygonCtx(n))}
    # the puncture is never bare, and a plain and a notched arc always share their vertex
    assert seen == {"plain", "notched", "pair"}


def test_stars_are_triangulations():
    ctx = PolygonCtx(5)
    for kind in Kind.PLAIN, Kind.NOTCHED:
        s = puncture_star(ctx, kind)
        assert validate(ctx, s.arcs) == s


@given(st.integers(3, 6), st.data())
def test_json_round_trip(n, data):
    t = data.draw(st.sampled_from(enumerate_all(PolygonCtx(n))))
    assert triangulation_from_json(json.loads(json.dumps(t.to_json()))) == t
