import math
import warnings
from dataclasses import replace

import pytest
from hypothesis import given, settings, strategies as st

from outerlink.diagram import (
    CycleEdgeLink,
    DiagramError,
    LinkingAsymmetryWarning,
    add_twist_crossing,
    apex_extension,
    cg_pairs,
    cg_sum,
    convex_diagram,
    crossing_change,
    cycle_edge_links,
    dump_diagram,
    find_nonsplit_outer_link,
    link_parity_sum,
    lk2_cycle_cycle,
    lk2_cycle_edge,
    load_diagram,
    simple_cycles,
    two_page_linkless_diagram,
    validate_diagram,
)
from outerlink.enumeration import is_isomorphic
from outerlink.graph import iter_disjoint_edge_pairs, standard_graph
from outerlink.s1 import CyclicOrder, enumerate_cyclic_orders

from strategies import chords_cross, graphs


def oracle_crossings(g, order):
    return sum(1 for e, f in iter_disjoint_edge_pairs(g) if chords_cross(order.sequence, e, f))


@st.composite
def random_diagram(draw, names=("K5", "K33")):
    g = standard_graph(draw(st.sampled_from(names)))
    order = CyclicOrder(tuple(draw(st.permutations(g.vertices))))
    return convex_diagram(g, order, "random", seed=draw(st.integers(0, 2**64 - 1)))


def test_convex_k5_has_pentagram_crossings():
    k5 = standard_graph("K5")
    d = convex_diagram(k5)
    assert validate_diagram(d) == []
    assert len(d.crossings) == 5 == oracle_crossings(k5, d.order)


def test_k33_alternating_order():
    k33 = standard_graph("K33")
    order = CyclicOrder.from_labels(k33, ["a", "1", "b", "2", "c", "3"])
    d = convex_diagram(k33, order)
    assert len(d.crossings) == oracle_crossings(k33, order) == 3
    assert validate_diagram(d) == []


def test_c5_diagram_is_empty():
    c5 = standard_graph("C5")
    d = convex_diagram(c5)
    assert d.crossings == ()
    assert cycle_edge_links(c5) == ()
    assert link_parity_sum(d) == 0
    assert find_nonsplit_outer_link(d) is None


def test_cycle_counts():
    assert len(simple_cycles(standard_graph("K4"))) == 7
    assert len(simple_cycles(standard_graph("K5"))) == 37
    assert len(cycle_edge_links(standard_graph("K5"))) == 10


def test_orphan_and_self_crossing_are_reported():
    d = convex_diagram(standard_graph("K5"))
    c = d.crossings[0]
    trav = dict(d.traversals)
    trav[c.under] = tuple(x for x in trav[c.under] if x != c.id)
    assert any("orphan crossing" in p for p in validate_diagram(replace(d, traversals=trav)))

    bad = replace(d, crossings=(replace(c, under=c.over),) + d.crossings[1:])
    assert any("self-crossing" in p for p in validate_diagram(bad))


def test_traversal_order_follows_geometry():
    k5 = standard_graph("K5")
    d = convex_diagram(k5)
    n = 5
    pt = {v: (math.cos(2 * math.pi * i / n), math.sin(2 * math.pi * i / n)) for i, v in enumerate(d.order)}
    for e, seq in d.traversals.items():
        def dist(cid):
            c = d.crossing(cid)
            other = c.under if c.over == e else c.over
            (x1, y1), (x2, y2) = pt[e[0]], pt[e[1]]
            (x3, y3), (x4, y4) = pt[other[0]], pt[other[1]]
            den = (x1 - x2) * (y3 - y4) - (y1 - y2) * (x3 - x4)
            t = ((x1 - x3) * (y3 - y4) - (y1 - y3) * (x3 - x4)) / den
            return t

        assert list(seq) == sorted(seq, key=dist)


def test_crossing_change_is_involution():
    d = convex_diagram(standard_graph("K5"))
    for c in d.crossings:
        flipped = crossing_change(d, c.id)
        assert flipped.crossing(c.id).over == c.under
        assert crossing_change(flipped, c.id) == d
    with pytest.raises(DiagramError):
        crossing_change(d, 99)


def test_adjacent_twist_crossings_do_not_change_parity():
    k5 = standard_graph("K5")
    d = convex_diagram(k5)
    t = add_twist_crossing(d, (0, 1), (0, 2))
    assert validate_diagram(t) == []
    assert len(t.crossings) == 6
    new = t.crossings[-1].id
    assert link_parity_sum(t) == link_parity_sum(crossing_change(t, new)) == link_parity_sum(d)
    with pytest.raises(DiagramError):
        add_twist_crossing(d, (0, 1), (2, 3))


def test_lk2_cycle_edge():
    k5 = standard_graph("K5")
    d = convex_diagram(k5)
    values = [lk2_cycle_edge(d, link) for link in cycle_edge_links(k5)]
    assert sum(values) % 2 == 1
    # an edge with no crossings cannot be linked
    quiet = CycleEdgeLink((0, 1, 2), (3, 4))
    assert not any((3, 4) in (c.over, c.under) for c in d.crossings)
    assert lk2_cycle_edge(d, quiet) == 0
    with pytest.raises(DiagramError):
        lk2_cycle_edge(d, CycleEdgeLink((0, 1, 2), (2, 3)))
    with pytest.raises(DiagramError):
        lk2_cycle_edge(convex_diagram(standard_graph("C6")), CycleEdgeLink((0, 1, 2), (3, 4)))


@settings(max_examples=200)
@given(random_diagram())
def test_every_diagram_has_odd_link_parity(d):
    assert validate_diagram(d) == []
    assert link_parity_sum(d) == 1
    link = find_nonsplit_outer_link(d)
    assert lk2_cycle_edge(d, link) == 1


@settings(max_examples=40)
@given(random_diagram())
def test_parity_invariant_under_every_crossing_change(d):
    for c in d.crossings:
        assert link_parity_sum(crossing_change(d, c.id)) == 1


@settings(max_examples=60)
@given(graphs(min_n=3, max_n=7), st.data())
def test_crossing_set_ignores_the_rule(g, data):
    order = CyclicOrder(tuple(data.draw(st.permutations(g.vertices))))
    a = convex_diagram(g, order)
    b = convex_diagram(g, order, "random", seed=data.draw(st.integers(0, 1000)))
    pairs = lambda d: {frozenset((c.over, c.under)) for c in d.crossings}
    assert pairs(a) == pairs(b)
    assert len(a.crossings) == oracle_crossings(g, order)


def test_apex_extension():
    d = convex_diagram(standard_graph("K5"))
    s = apex_extension(d)
    assert is_isomorphic(s.graph, standard_graph("K6"))
    assert s.crossings == d.crossings
    assert all(s.traversals[(v, s.apex)] == () for v in d.graph.vertices)
    k33 = apex_extension(convex_diagram(standard_graph("K33")))
    assert is_isomorphic(k33.graph, standard_graph("K331"))


def test_cg_pair_sets():
    assert len(cg_pairs(standard_graph("K6"))) == 10
    assert all(len(a) == len(b) == 3 for a, b in cg_pairs(standard_graph("K6")))
    assert len(cg_pairs(standard_graph("K331"))) > 0
    with pytest.raises(DiagramError):
        cg_pairs(standard_graph("K5"))


@settings(max_examples=100)
@given(random_diagram())
def test_cg_sum_and_symmetry(d):
    s = apex_extension(d)
    with warnings.catch_warnings():
        warnings.simplefilter("error", LinkingAsymmetryWarning)
        assert cg_sum(s) == 1
        for a, b in cg_pairs(s.graph)[:10]:
            assert lk2_cycle_cycle(s, a, b) == lk2_cycle_cycle(s, b, a)


def test_apex_triangle_realizes_k5_link():
    d = convex_diagram(standard_graph("K5"))
    s = apex_extension(d)
    link = find_nonsplit_outer_link(d)
    u, v = link.edge
    assert lk2_cycle_cycle(s, link.cycle, (u, v, s.apex)) == 1


def test_cycle_pair_without_crossings():
    s = apex_extension(convex_diagram(standard_graph("K5")))
    # triangles {0,1,2} and {3,4,apex}: 3-4 is a side of the pentagon and never crosses
    assert lk2_cycle_cycle(s, (0, 1, 2), (3, 4, s.apex)) == 0
    with pytest.raises(DiagramError):
        lk2_cycle_cycle(s, (0, 1, 2), (2, 3, 4))


def test_two_page_examples():
    c6 = standard_graph("C6")
    d = two_page_linkless_diagram(c6)
    assert d.crossings == ()
    k4 = standard_graph("K4")
    d = two_page_linkless_diagram(k4)
    assert validate_diagram(d) == []
    assert all(lk2_cycle_edge(d, link) == 0 for link in cycle_edge_links(k4))
    assert find_nonsplit_outer_link(d) is None
    assert two_page_linkless_diagram(standard_graph("K5")) is None


@settings(max_examples=60)
@given(graphs(min_n=3, max_n=7))
def test_two_page_output_is_linkless(g):
    d = two_page_linkless_diagram(g)
    if d is not None:
        assert validate_diagram(d) == []
        assert find_nonsplit_outer_link(d) is None


@settings(max_examples=60)
@given(random_diagram(("K5", "K33", "K4", "C6")))
def test_dump_load_round_trip(d):
    text = dump_diagram(d)
    back = load_diagram(text)
    assert dump_diagram(back) == text
    assert back.graph.edges == d.graph.edges
    assert back.order == d.order
    assert set(back.crossings) == set(d.crossings)
    assert back.traversals == d.traversals
    assert link_parity_sum(back) == link_parity_sum(d)


def test_load_errors():
    with pytest.raises(DiagramError, match="line 2"):
        load_diagram("order a b c\nbogus\n")
    with pytest.raises(DiagramError):
        load_diagram("order a b c d\nedge a b\nedge c d\nX 0 over=a-b under=a-c\n")
    # a-b and c-d are sides of the square; their chords do not meet
    with pytest.raises(DiagramError):
        load_diagram("order a b c d\nedge a b\nedge c d\nX 0 over=a-b under=c-d\n")
    d = load_diagram("order a b c d\nedge a c\nedge b d\nX 0 over=a-c under=b-d\n")
    assert validate_diagram(d) == []


def test_all_orders_of_k33_are_odd():
    k33 = standard_graph("K33")
    for o in enumerate_cyclic_orders(k33):
        assert link_parity_sum(convex_diagram(k33, o)) == 1
