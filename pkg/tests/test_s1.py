import itertools
import math

import pytest
from hypothesis import given, settings, strategies as st

from outerlink.enumeration import enumerate_graphs
from outerlink.graph import (
    Graph,
    GraphError,
    delete_edge,
    iter_disjoint_edge_pairs,
    permute,
    standard_graph,
)
from outerlink.planarity import is_outerplanar
from outerlink.s1 import (
    CyclicOrder,
    EdgePairLink,
    NotOuterplanarError,
    enumerate_cyclic_orders,
    find_nonsplit_link,
    is_intrinsically_s1_linked_bruteforce,
    linkless_order_from_outerplanar,
    lk2_s1,
    parity_sum,
    s1_link_report,
)

from strategies import chords_cross, graphs


@st.composite
def order_and_link(draw):
    n = draw(st.integers(4, 9))
    seq = draw(st.permutations(range(n)))
    a, b, c, d = draw(st.permutations(range(n)))[:4]
    return CyclicOrder(tuple(seq)), EdgePairLink((a, b), (c, d))


def test_named_examples():
    k32 = standard_graph("K32")
    o = CyclicOrder.from_labels(k32, "abc12")
    link = find_nonsplit_link(o, k32)
    assert link.describe(k32) == "(a-1, b-2)"
    assert lk2_s1(o, link) == 1
    assert parity_sum(o, k32) == 1

    k4 = standard_graph("K4")
    o = CyclicOrder.from_labels(k4, "1234")
    assert find_nonsplit_link(o, k4).describe(k4) == "(1-3, 2-4)"
    assert parity_sum(o, k4) == 1


def test_c5_is_not_linked():
    c5 = standard_graph("C5")
    res = is_intrinsically_s1_linked_bruteforce(c5)
    assert not res.linked
    assert res.linkless_order.sequence == (0, 1, 2, 3, 4)


def test_cyclic_order_canonical_form():
    assert CyclicOrder((2, 0, 1, 3)).sequence == (0, 1, 3, 2)
    assert CyclicOrder((0, 3, 2, 1)) == CyclicOrder((0, 1, 2, 3))
    with pytest.raises(GraphError):
        CyclicOrder((0, 1, 1))


@pytest.mark.parametrize("n, count", [(3, 1), (4, 3), (5, 12), (6, 60), (7, 360)])
def test_order_counts(n, count):
    orders = list(enumerate_cyclic_orders(list(range(n))))
    assert len(orders) == count == math.factorial(n - 1) // 2
    assert len(set(orders)) == count


def test_disjoint_edges_required():
    with pytest.raises(GraphError):
        EdgePairLink((0, 1), (1, 2))


@settings(max_examples=300)
@given(order_and_link())
def test_lk2_matches_geometry(data):
    o, link = data
    assert lk2_s1(o, link) == int(chords_cross(o.sequence, link.first, link.second))


@given(order_and_link())
def test_lk2_symmetric(data):
    o, link = data
    assert lk2_s1(o, link) == lk2_s1(o, EdgePairLink(link.second, link.first))


@given(order_and_link(), st.integers(0, 20), st.booleans())
def test_lk2_rotation_and_reflection(data, shift, flip):
    o, link = data
    seq = list(o.sequence)
    seq = seq[shift % len(seq):] + seq[: shift % len(seq)]
    if flip:
        seq.reverse()
    # the raw sequence, not the canonical one, feeds the oracle
    assert int(chords_cross(seq, link.first, link.second)) == lk2_s1(o, link)


def test_every_k32_and_k4_order_has_odd_parity():
    for name in ("K4", "K32"):
        g = standard_graph(name)
        for o in enumerate_cyclic_orders(g):
            assert parity_sum(o, g) == 1


def test_k32_orders_fall_into_two_classes():
    k32 = standard_graph("K32")
    autos = [
        p for p in itertools.permutations(k32.vertices)
        if permute(k32, dict(zip(k32.vertices, p))).edges == k32.edges
    ]
    assert len(autos) == 12
    classes = set()
    for o in enumerate_cyclic_orders(k32):
        orbit = frozenset(CyclicOrder(tuple(p[v] for v in o.sequence)) for p in autos)
        classes.add(orbit)
    assert len(classes) == 2


@settings(max_examples=50)
@given(graphs(min_n=4, max_n=7), st.data())
def test_parity_changes_by_transposition_law(g, data):
    """Swapping two neighbouring positions flips exactly the pairs whose chords
    share the swapped arc, so the parity moves by the number of disjoint edge
    pairs (e, f) with e at u and f at w."""
    o = CyclicOrder(tuple(data.draw(st.permutations(g.vertices))))
    i = data.draw(st.integers(0, g.order - 1))
    u, w = o.sequence[i], o.sequence[(i + 1) % g.order]
    swapped = o.swap(u, w)
    expected = sum(
        1 for e, f in iter_disjoint_edge_pairs(g)
        if (u in e and w in f) or (w in e and u in f)
    )
    assert (parity_sum(o, g) + expected) % 2 == parity_sum(swapped, g)


@settings(max_examples=50)
@given(graphs(min_n=4, max_n=7), st.data())
def test_report_is_consistent(g, data):
    o = CyclicOrder(tuple(data.draw(st.permutations(g.vertices))))
    r = s1_link_report(o, g)
    assert r.parity == parity_sum(o, g)
    assert (r.witness is None) == (find_nonsplit_link(o, g) is None)
    for (e1, e2), v in r.linked.items():
        assert v == int(chords_cross(o.sequence, e1, e2))


@settings(max_examples=40)
@given(graphs(min_n=2, max_n=7))
def test_monotone_under_edge_deletion(g):
    """A linkless order for g is still linkless after deleting any edge."""
    res = is_intrinsically_s1_linked_bruteforce(g)
    if res.linked:
        return
    for e in g.sorted_edges:
        h = delete_edge(g, e)
        if h.order >= 4:
            assert find_nonsplit_link(res.linkless_order, h) is None


@pytest.mark.parametrize("n", [4, 5, 6])
def test_linked_iff_not_outerplanar(n):
    for g in enumerate_graphs(n):
        assert is_intrinsically_s1_linked_bruteforce(g).linked == (not is_outerplanar(g).outerplanar)


def test_linkless_order_from_outerplanar():
    c6 = standard_graph("C6")
    fan = Graph.build(5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4)])
    for g in (c6, fan):
        assert find_nonsplit_link(linkless_order_from_outerplanar(g), g) is None
    with pytest.raises(NotOuterplanarError):
        linkless_order_from_outerplanar(standard_graph("K4"))


def test_bruteforce_limit():
    with pytest.raises(GraphError):
        is_intrinsically_s1_linked_bruteforce(standard_graph("C11"))
