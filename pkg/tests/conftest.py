from __future__ import annotations

from hypothesis import strategies as st

from circulant_transfer import GraphSpec, divisors


@st.composite
def graph_specs(draw, max_n: int = 64):
    """Random valid spec: order 4..max_n divisible by 4, any sign assignment."""
    n = 4 * draw(st.integers(1, max_n // 4))
    ds = divisors(n // 4)
    states = [draw(st.sampled_from((0, 1, -1))) for _ in ds]
    return GraphSpec(n, tuple((d, s) for d, s in zip(ds, states) if s))
