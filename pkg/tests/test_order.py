import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from punctured.order import (
    U,
    UV,
    V,
    W,
    ZERO,
    Descriptor,
    acts_on,
    contains,
    descriptor_for,
    descriptor_mul,
    graded_dim,
    hom_descriptor,
    ideal_name,
    lambda_ideal_form,
    lambda_matrix,
    module_column,
    normalized_column,
    s_bracket_n,
    s_pieces,
)
from punctured.polygon import PolygonCtx, all_edges

SHAPES = [U, V, W, UV]


def descriptors(n):
    k = st.integers(-4 * n, 4 * n)
    return st.one_of(st.just(ZERO), st.builds(lambda f, d: f(d), st.sampled_from(SHAPES), k))


def test_descriptor_validation():
    with pytest.raises(ValueError):
        Descriptor("zero", 3)
    with pytest.raises(ValueError):
        Descriptor("U")
    with pytest.raises(ValueError):
        Descriptor("X", 1)
    assert Descriptor.from_json(UV(4).to_json()) == UV(4)
    assert Descriptor.from_json(ZERO.to_json()) == ZERO


@pytest.mark.parametrize("n", [3, 4, 7])
def test_hom_table(n):
    assert hom_descriptor(U(0), U(0), n) == U(0)
    assert hom_descriptor(V(3), W(5), n) == ZERO
    assert hom_descriptor(V(1), U(3), n) == V(2 + 2 * n)
    assert hom_descriptor(V(2), V(7), n) == V(5)
    assert hom_descriptor(U(2), V(7), n) == V(5)
    assert hom_descriptor(U(1), U(-3), n) == U(-4)


@pytest.mark.parametrize("n", [3, 5])
def test_mul_table(n):
    assert descriptor_mul(U(2), U(3), n) == U(5)
    assert descriptor_mul(V(2), V(3), n) == V(5)
    assert descriptor_mul(V(2), W(3), n) == ZERO
    assert descriptor_mul(ZERO, U(0), n) == ZERO


def test_graded_dim_examples():
    n = 4
    assert graded_dim(U(0), 0, n) == 1
    assert graded_dim(U(0), 2 * n, n) == 2
    assert graded_dim(U(0), 1, n) == 0
    assert graded_dim(V(3), 4, n) == 0
    assert graded_dim(V(3), 3, n) == graded_dim(W(3), 3 + 2 * n, n) == 1
    assert graded_dim(UV(2), 2, n) == 2
    assert graded_dim(ZERO, 0, n) == 0


@given(st.integers(3, 8), st.data())
def test_graded_dim_periodic(n, data):
    d = data.draw(descriptors(n))
    deg = data.draw(st.integers(-4 * n, 4 * n))
    if not d.is_zero and deg > d.degree:
        assert graded_dim(d, deg + 2 * n, n) == graded_dim(d, deg, n)


@given(st.integers(3, 6), st.data())
def test_mul_associative_and_commutative(n, data):
    a, b, c = (data.draw(descriptors(n)) for _ in range(3))
    mul = lambda x, y: descriptor_mul(x, y, n)  # noqa: E731
    assert mul(mul(a, b), c) == mul(a, mul(b, c))
    assert mul(a, b) == mul(b, a)


@given(st.integers(3, 6), st.data())
def test_hom_composition_contained(n, data):
    a, b, c = (data.draw(descriptors(n)) for _ in range(3))
    if a.is_zero:
        return
    comp = descriptor_mul(hom_descriptor(a, b, n), hom_descriptor(b, c, n), n)
    assert contains(hom_descriptor(a, c, n), comp, n)


@given(st.integers(3, 6), st.data())
def test_hom_evaluates_into_target(n, data):
    a, b = data.draw(descriptors(n)), data.draw(descriptors(n))
    assert contains(b, descriptor_mul(a, hom_descriptor(a, b, n), n), n)


def test_descriptor_for_examples():
    c = PolygonCtx(4)
    assert descriptor_for(c, c.arc(1, 3), c.arc(1, 3)) == U(0)
    assert descriptor_for(c, c.plain(1), c.notched(1)) == ZERO
    assert descriptor_for(c, c.plain(1), c.plain(2)) == V(2)
    assert descriptor_for(c, c.notched(1), c.notched(2)) == W(2)


@pytest.mark.parametrize("n", range(3, 9))
def test_lambda_closed_under_multiplication(n):
    c = PolygonCtx(n)
    lam = lambda_matrix(c)
    for i, j, k in itertools.product(range(1, n + 1), repeat=3):
        assert contains(lam[i, k], descriptor_mul(lam[i, j], lam[j, k], n), n)
    for i in range(1, n + 1):
        assert lam[i, i] == U(0)
        assert lam[i, c.normalize(i - 1)] == UV(2 * (n - 1))


@pytest.mark.parametrize("n", range(3, 8))
def test_lambda_acts_on_every_column(n):
    c = PolygonCtx(n)
    lam = lambda_matrix(c)
    for a in all_edges(c):
        assert acts_on(c, module_column(c, a))
    for i in range(1, n + 1):
        col = module_column(c, c.side(i))
        assert col.entries == tuple(lam[r, i] for r in range(1, n + 1))


@pytest.mark.parametrize("n", range(3, 8))
def test_identity_in_endomorphisms(n):
    c = PolygonCtx(n)
    for a in all_edges(c):
        for d in module_column(c, a).entries:
            end = hom_descriptor(d, d, n)
            assert contains(end, U(0), n) == (not a.at_puncture)
            if a.at_puncture:
                assert end in (V(0), W(0))


@pytest.mark.parametrize("n", [4, 5, 6])
def test_normalized_columns(n):
    c = PolygonCtx(n)
    names = lambda col: [ideal_name(d, n) for d in col]  # noqa: E731
    for a1 in range(1, n + 1):
        assert names(normalized_column(c, c.plain(a1))) == ["(Y)"] * a1 + ["(Y^2)"] * (n - a1)
        assert names(normalized_column(c, c.notched(a1))) == ["(X-Y)"] * a1 + ["(X^2-Y^2)"] * (n - a1)
    for a1 in range(1, n + 1):
        for a2 in range(a1 + 2, n + 1):
            col = names(normalized_column(c, c.arc(a1, a2)))
            assert col == ["R'"] * a1 + ["(X,Y)"] * (a2 - a1) + ["(X)"] * (n - a2)


@pytest.mark.parametrize("n", range(3, 8))
def test_lambda_ideal_form(n):
    form = [[ideal_name(d, n) for d in row] for row in lambda_ideal_form(PolygonCtx(n))]
    for i in range(n):
        for j in range(n):
            if (i, j) == (0, n - 1):
                want = "X^-1(X,Y)"
            elif j >= i:
                want = "R'"
            elif j == i - 1:
                want = "(X,Y)"
            else:
                want = "(X)"
            assert form[i][j] == want


@pytest.mark.parametrize("n", range(3, 9))
def test_s_bracket_certificate(n):
    assert s_bracket_n(PolygonCtx(n))[1]


@pytest.mark.parametrize("n", [3, 5, 8])
def test_s_bracket_tamper_detected(n):
    c = PolygonCtx(n)
    for e in range(n):
        pieces = list(s_pieces(c))
        pieces[e] = UV(0) if pieces[e] == U(0) else U(0)
        assert not s_bracket_n(c, pieces)[1]
