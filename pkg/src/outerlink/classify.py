"""Five-way classification of a graph with attached certificates.

Outerplanarity settles intrinsic S^1-linking, planarity settles intrinsic
outer-linking and outer-flatness.  Both planarity questions are answered
on the whole graph; a graph is (outer)planar exactly when each component
is, so this agrees with a per-component check.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .diagram import (
    CycleEdgeLink,
    OuterDiagram,
    convex_diagram,
    dump_diagram,
    find_nonsplit_outer_link,
    two_page_linkless_diagram,
)
from .graph import Graph
from .graphio import to_graph6
from .planarity import OuterplanarityResult, PlanarityResult, is_outerplanar, is_planar
from .s1 import (
    MAX_BRUTEFORCE_ORDER,
    CyclicOrder,
    EdgePairLink,
    S1Decision,
    find_nonsplit_link,
    is_intrinsically_s1_linked_bruteforce,
)


class ClassificationMismatch(RuntimeError):
    """Brute force disagrees with the outerplanarity test: an implementation bug."""


@dataclass(frozen=True)
class ClassificationReport:
    outerplanar: bool
    planar: bool
    intrinsically_s1_linked: bool
    intrinsically_outer_linked: bool
    outer_flat_and_linkless: bool
    outerplanarity: OuterplanarityResult
    planarity: PlanarityResult
    brute_force: S1Decision | None = None
    linkless_order: CyclicOrder | None = None
    s1_link_example: tuple[CyclicOrder, EdgePairLink] | None = None
    linkless_diagram: OuterDiagram | None = None
    outer_link_example: tuple[OuterDiagram, CycleEdgeLink] | None = None


def classify(g: Graph, *, cross_check: bool = True, diagram_witness: bool = True) -> ClassificationReport:
    op = is_outerplanar(g)
    pl = is_planar(g)
    s1_linked = not op.outerplanar

    brute = None
    if cross_check and g.order <= MAX_BRUTEFORCE_ORDER:
        brute = is_intrinsically_s1_linked_bruteforce(g)
        if brute.linked != s1_linked:
            raise ClassificationMismatch(
                f"brute force says linked={brute.linked}, outerplanarity says {s1_linked}"
            )

    linkless_order = None
    s1_example = None
    if op.outerplanar:
        linkless_order = CyclicOrder(op.boundary_order)
    else:
        o = CyclicOrder(tuple(g.vertices))
        link = find_nonsplit_link(o, g)
        if link is None:
            raise ClassificationMismatch("a non-outerplanar graph has a linkless cyclic order")
        s1_example = (o, link)

    linkless_diagram = None
    outer_example = None
    if diagram_witness:
        if pl.planar:
            linkless_diagram = two_page_linkless_diagram(g)
        else:
            d = convex_diagram(g)
            link = find_nonsplit_outer_link(d)
            if link is None:
                raise ClassificationMismatch("a non-planar graph has a diagram without linking")
            outer_example = (d, link)

    return ClassificationReport(
        outerplanar=op.outerplanar,
        planar=pl.planar,
        intrinsically_s1_linked=s1_linked,
        intrinsically_outer_linked=not pl.planar,
        outer_flat_and_linkless=pl.planar,
        outerplanarity=op,
        planarity=pl,
        brute_force=brute,
        linkless_order=linkless_order,
        s1_link_example=s1_example,
        linkless_diagram=linkless_diagram,
        outer_link_example=outer_example,
    )


def report_dict(g: Graph, r: ClassificationReport) -> dict[str, Any]:
    """Plain, stably ordered structure for machine-readable output."""
    flags = {
        "outerplanar": r.outerplanar,
        "planar": r.planar,
        "intrinsically_s1_linked": r.intrinsically_s1_linked,
        "intrinsically_outer_linked": r.intrinsically_outer_linked,
        "outer_flat_and_linkless": r.outer_flat_and_linkless,
    }
    w: dict[str, Any] = {}
    if r.linkless_order is not None:
        w["linkless_order"] = r.linkless_order.labels(g)
    if r.s1_link_example is not None:
        o, link = r.s1_link_example
        w["s1_link"] = {
            "order": o.labels(g),
            "edges": [g.edge_label(link.first), g.edge_label(link.second)],
        }
    if r.outerplanarity.obstruction is not None:
        ob = r.outerplanarity.obstruction
        w["outerplanar_obstruction"] = {"minor": ob.pattern, "branch_sets": ob.describe(g)}
    if r.planarity.rotation_system is not None:
        w["rotation_system"] = {
            g.label(v): [g.label(u) for u in rot] for v, rot in r.planarity.rotation_system.items()
        }
        w["faces"] = r.planarity.faces
    if r.planarity.obstruction is not None:
        ob = r.planarity.obstruction
        w["planar_obstruction"] = {"minor": ob.pattern, "branch_sets": ob.describe(g)}
    if r.linkless_diagram is not None:
        w["linkless_diagram"] = _diagram_lines(r.linkless_diagram)
    if r.outer_link_example is not None:
        d, link = r.outer_link_example
        w["outer_link"] = {
            "cycle": [g.label(v) for v in link.cycle],
            "edge": g.edge_label(link.edge),
            "diagram": _diagram_lines(d),
        }
    out: dict[str, Any] = {
        "vertices": g.order,
        "edges": g.size,
        "graph6": to_graph6(g),
        "flags": flags,
    }
    if r.brute_force is not None:
        out["brute_force_s1_linked"] = r.brute_force.linked
    out["witnesses"] = w
    return out


def _diagram_lines(d: OuterDiagram) -> list[str]:
    try:
        return dump_diagram(d).splitlines()
    except ValueError:
        return [f"crossings: {len(d.crossings)}"]
