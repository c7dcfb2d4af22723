import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from punctured.polygon import PolygonCtx, all_arcs, all_edges

settings.register_profile("default", max_examples=200, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def ctx_and_edges(draw, k=2, n_min=3, n_max=8, arcs_only=False):
    n = draw(st.integers(n_min, n_max))
    ctx = PolygonCtx(n)
    pool = all_arcs(ctx) if arcs_only else all_edges(ctx)
    return (ctx, *[draw(st.sampled_from(pool)) for _ in range(k)])


@pytest.fixture(params=[3, 4, 5, 6])
def ctx(request):
    return PolygonCtx(request.param)
