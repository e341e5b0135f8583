"""Circle placements, ball diagrams and the two linking characterizations of graphs."""

from .classify import ClassificationReport, classify
from .diagram import (
    CycleEdgeLink,
    OuterDiagram,
    SpatialDiagram,
    apex_extension,
    cg_sum,
    convex_diagram,
    crossing_change,
    find_nonsplit_outer_link,
    link_parity_sum,
    lk2_cycle_cycle,
    lk2_cycle_edge,
    two_page_linkless_diagram,
    validate_diagram,
)
from .enumeration import canonical_form, enumerate_graphs
from .graph import (
    Graph,
    GraphError,
    NeighborPartition,
    contract_edge,
    delete_edge,
    enumerate_expansions,
    expand_vertex,
    join_apex,
    standard_graph,
)
from .graphio import parse_graph, to_edgelist, to_graph6
from .planarity import MinorWitness, has_minor, is_outerplanar, is_planar
from .s1 import (
    CyclicOrder,
    EdgePairLink,
    enumerate_cyclic_orders,
    find_nonsplit_link,
    is_intrinsically_s1_linked_bruteforce,
    linkless_order_from_outerplanar,
    lk2_s1,
    parity_sum,
)

__version__ = "0.1.0"
