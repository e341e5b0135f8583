import itertools
import math

from hypothesis import strategies as st

from outerlink.graph import Graph


@st.composite
def graphs(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.build(n, chosen)


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def chords_cross(order, e1, e2):
    """Segment-intersection oracle with the vertices on the unit circle."""
    n = len(order)
    pt = {v: (math.cos(2 * math.pi * i / n), math.sin(2 * math.pi * i / n)) for i, v in enumerate(order)}
    p1, p2 = pt[e1[0]], pt[e1[1]]
    q1, q2 = pt[e2[0]], pt[e2[1]]
    d1, d2 = _cross(q1, q2, p1), _cross(q1, q2, p2)
    d3, d4 = _cross(p1, p2, q1), _cross(p1, p2, q2)
    return d1 * d2 < 0 and d3 * d4 < 0
