"""Calculable projections of graphs embedded in a ball with vertices on its boundary.

Vertices sit on the boundary circle of the projection, edges are chords,
and each crossing records which strand passes over.  Everything here is
combinatorial: boundary order, crossing roles, and the order in which each
edge meets its crossings.
"""

from __future__ import annotations

import itertools
import math
import random
import warnings
from dataclasses import dataclass, replace
from functools import lru_cache
from typing import Iterable, Mapping

from .enumeration import canonical_form
from .graph import Edge, Graph, GraphError, edge, join_apex, standard_graph
from .s1 import CyclicOrder, enumerate_cyclic_orders

MAX_TWO_PAGE_ORDER = 9


class DiagramError(GraphError):
    pass


class LinkingAsymmetryWarning(RuntimeWarning):
    """Over-counts of two disjoint cycles disagree mod 2 (should never happen)."""


@dataclass(frozen=True)
class Crossing:
    id: int
    over: Edge
    under: Edge


@dataclass(frozen=True)
class OuterDiagram:
    graph: Graph
    order: CyclicOrder
    crossings: tuple[Crossing, ...]
    # edge -> crossing ids met walking from its smaller to its larger endpoint
    traversals: Mapping[Edge, tuple[int, ...]]

    def crossing(self, cid: int) -> Crossing:
        for c in self.crossings:
            if c.id == cid:
                return c
        raise DiagramError(f"unknown crossing id {cid}")

    def positions(self, cid: int) -> tuple[int, int]:
        """Index of the crossing in the over strand's and the under strand's traversal."""
        c = self.crossing(cid)
        return self.traversals[c.over].index(cid), self.traversals[c.under].index(cid)


@dataclass(frozen=True)
class CycleEdgeLink:
    cycle: tuple[int, ...]
    edge: Edge

    def cycle_edges(self) -> set[Edge]:
        return _cycle_edges(self.cycle)

    def describe(self, g: Graph) -> str:
        return f"({''.join(g.label(v) for v in self.cycle)}, {g.edge_label(self.edge)})"


def _cycle_edges(cycle: tuple[int, ...]) -> set[Edge]:
    return {edge(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle))}


def _check_cycle(g: Graph, cycle: tuple[int, ...]) -> None:
    if len(cycle) < 3 or len(set(cycle)) != len(cycle):
        raise DiagramError(f"{cycle} is not a simple cycle")
    for e in _cycle_edges(cycle):
        if e not in g.edges:
            raise DiagramError(f"{cycle} uses the missing edge {e}")


# --------------------------------------------------------------------------
# cycles and links
# --------------------------------------------------------------------------


def canonical_cycle(cycle: Iterable[int]) -> tuple[int, ...]:
    c = tuple(cycle)
    i = c.index(min(c))
    c = c[i:] + c[:i]
    if c[1] > c[-1]:
        c = (c[0],) + tuple(reversed(c[1:]))
    return c


@lru_cache(maxsize=256)
def simple_cycles(g: Graph) -> tuple[tuple[int, ...], ...]:
    """All simple cycles, each rooted at its smallest vertex with one orientation."""
    out = []
    adj = g.adjacency
    for root in sorted(g.vertices):
        path = [root]
        on_path = {root}

        def extend(u: int) -> None:
            for w in sorted(adj[u]):
                if w == root and len(path) >= 3 and path[1] < path[-1]:
                    out.append(tuple(path))
                elif w > root and w not in on_path:
                    path.append(w)
                    on_path.add(w)
                    extend(w)
                    path.pop()
                    on_path.discard(w)

        extend(root)
    return tuple(sorted(out))


@lru_cache(maxsize=256)
def cycle_edge_links(g: Graph) -> tuple[CycleEdgeLink, ...]:
    """Every (simple cycle, vertex-disjoint edge) pair, lexicographically sorted."""
    links = []
    for cyc in simple_cycles(g):
        cs = set(cyc)
        for e in g.sorted_edges:
            if e[0] not in cs and e[1] not in cs:
                links.append(CycleEdgeLink(cyc, e))
    return tuple(links)


@lru_cache(maxsize=256)
def disjoint_cycle_pairs(g: Graph) -> tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]:
    cycles = simple_cycles(g)
    pairs = []
    for c1, c2 in itertools.combinations(cycles, 2):
        if not set(c1) & set(c2):
            pairs.append((c1, c2))
    return tuple(pairs)


# --------------------------------------------------------------------------
# construction and validation
# --------------------------------------------------------------------------


def _chords_interleave(pos: Mapping[int, int], e1: Edge, e2: Edge) -> bool:
    i, j = sorted((pos[e1[0]], pos[e1[1]]))
    return ((i < pos[e2[0]] < j) + (i < pos[e2[1]] < j)) == 1


def _chord_parameter(pts: Mapping[int, tuple[float, float]], e: Edge, f: Edge) -> float:
    """Where chord ``f`` meets chord ``e``, as a fraction of ``e`` from ``e[0]``."""
    (x1, y1), (x2, y2) = pts[e[0]], pts[e[1]]
    (x3, y3), (x4, y4) = pts[f[0]], pts[f[1]]
    den = (x1 - x2) * (y3 - y4) - (y1 - y2) * (x3 - x4)
    return ((x1 - x3) * (y3 - y4) - (y1 - y3) * (x3 - x4)) / den


def _geometric_traversals(
    g: Graph, order: CyclicOrder, crossings: Iterable[Crossing]
) -> dict[Edge, tuple[int, ...]]:
    """Order crossings along each chord with vertices evenly spaced on the circle.

    Crossings between edges that share a vertex are twists next to that
    vertex; any other crossing must join interleaving chords.
    """
    pos = order.positions()
    n = len(order)
    pts = {v: (math.cos(2 * math.pi * p / n), math.sin(2 * math.pi * p / n)) for v, p in pos.items()}
    spots: dict[Edge, list[tuple[float, int]]] = {e: [] for e in g.edges}
    for c in crossings:
        for e, f in ((c.over, c.under), (c.under, c.over)):
            shared = set(e) & set(f)
            if shared:
                t = -1.0 if e[0] in shared else 2.0
            elif _chords_interleave(pos, e, f):
                t = round(_chord_parameter(pts, e, f), 9)
            else:
                raise DiagramError(
                    f"crossing {c.id}: chords {g.edge_label(e)} and {g.edge_label(f)} do not meet"
                )
            spots[e].append((t, c.id))
    return {e: tuple(cid for _, cid in sorted(s)) for e, s in spots.items()}


def interleaving_pairs(g: Graph, order: CyclicOrder) -> list[tuple[Edge, Edge]]:
    pos = order.positions()
    es = g.sorted_edges
    return [
        (e1, e2)
        for i, e1 in enumerate(es)
        for e2 in es[i + 1 :]
        if not set(e1) & set(e2) and _chords_interleave(pos, e1, e2)
    ]


def convex_diagram(
    g: Graph,
    order: CyclicOrder | None = None,
    rule: str = "lexicographic",
    *,
    seed: int | None = None,
    over: Mapping[frozenset[Edge], Edge] | None = None,
) -> OuterDiagram:
    """Straight-chord diagram of ``g`` with vertices placed in ``order``.

    ``rule`` decides which strand is on top at each crossing:
    ``"lexicographic"`` puts the smaller edge over, ``"random"`` flips a
    coin from ``random.Random(seed)``, and ``"explicit"`` reads the
    ``over`` map (pairs it does not mention fall back to lexicographic).
    """
    order = order or CyclicOrder(tuple(g.vertices))
    if set(order) != set(g.vertices):
        raise DiagramError("order does not place exactly the graph's vertices")
    rng = random.Random(seed) if rule == "random" else None
    if rule not in ("lexicographic", "random", "explicit"):
        raise DiagramError(f"unknown over/under rule {rule!r}")
    crossings = []
    for cid, (e1, e2) in enumerate(interleaving_pairs(g, order)):
        top = e1
        if rng is not None:
            top = e1 if rng.random() < 0.5 else e2
        elif rule == "explicit" and over is not None:
            top = over.get(frozenset((e1, e2)), e1)
        crossings.append(Crossing(cid, top, e2 if top == e1 else e1))
    return OuterDiagram(g, order, tuple(crossings), _geometric_traversals(g, order, crossings))


def validate_diagram(d: OuterDiagram) -> list[str]:
    """All invariant violations of ``d``; an empty list means the diagram is sound."""
    problems = []
    g = d.graph
    if set(d.order) != set(g.vertices):
        problems.append("boundary order does not place exactly the graph's vertices")
    ids = [c.id for c in d.crossings]
    for cid in sorted({i for i in ids if ids.count(i) > 1}):
        problems.append(f"duplicate crossing id {cid}")
    for e in g.sorted_edges:
        if e not in d.traversals:
            problems.append(f"missing traversal for edge {g.edge_label(e)}")
    for e in d.traversals:
        if e not in g.edges:
            problems.append(f"traversal listed for non-edge {e}")
    seen_on: dict[int, list[Edge]] = {}
    for e, seq in d.traversals.items():
        for cid in seq:
            seen_on.setdefault(cid, []).append(e)
    for c in d.crossings:
        if c.over == c.under:
            problems.append(f"self-crossing: crossing {c.id} has edge {c.over} in both roles")
            continue
        for e in (c.over, c.under):
            if e not in g.edges:
                problems.append(f"crossing {c.id} uses non-edge {e}")
        hits = seen_on.get(c.id, [])
        if len(hits) < 2:
            problems.append(f"orphan crossing {c.id}: listed on {len(hits)} traversal(s)")
        elif sorted(hits) != sorted([c.over, c.under]):
            problems.append(f"crossing {c.id} is listed on the wrong traversals")
    for cid in sorted(set(seen_on) - set(ids)):
        problems.append(f"traversal mentions unknown crossing {cid}")
    return problems


def crossing_change(d: OuterDiagram, cid: int) -> OuterDiagram:
    c = d.crossing(cid)
    flipped = Crossing(c.id, c.under, c.over)
    return replace(d, crossings=tuple(flipped if x.id == cid else x for x in d.crossings))


def add_twist_crossing(d: OuterDiagram, over: Edge, under: Edge) -> OuterDiagram:
    """Add a crossing between two edges sharing a vertex, next to that vertex."""
    over, under = edge(*over), edge(*under)
    if over not in d.graph.edges or under not in d.graph.edges:
        raise DiagramError("twist crossings join two edges of the graph")
    if over == under or not set(over) & set(under):
        raise DiagramError("twist crossings join distinct edges that share a vertex")
    cid = max((c.id for c in d.crossings), default=-1) + 1
    crossings = d.crossings + (Crossing(cid, over, under),)
    return replace(d, crossings=crossings, traversals=_geometric_traversals(d.graph, d.order, crossings))


# --------------------------------------------------------------------------
# linking numbers
# --------------------------------------------------------------------------


def _check_link(g: Graph, link: CycleEdgeLink) -> None:
    _check_cycle(g, link.cycle)
    if link.edge not in g.edges:
        raise DiagramError(f"{link.edge} is not an edge")
    if set(link.edge) & set(link.cycle):
        raise DiagramError("the edge of a link must be disjoint from its cycle")


def lk2_cycle_edge(d: OuterDiagram, link: CycleEdgeLink) -> int:
    """Number of crossings where the edge passes over the cycle, mod 2."""
    _check_link(d.graph, link)
    ces = link.cycle_edges()
    return sum(1 for c in d.crossings if c.over == link.edge and c.under in ces) % 2


def _link_values(d: OuterDiagram) -> list[tuple[CycleEdgeLink, int]]:
    overs: dict[Edge, list[Edge]] = {}
    for c in d.crossings:
        overs.setdefault(c.over, []).append(c.under)
    out = []
    for link in cycle_edge_links(d.graph):
        unders = overs.get(link.edge)
        if not unders:
            out.append((link, 0))
            continue
        ces = link.cycle_edges()
        out.append((link, sum(1 for u in unders if u in ces) % 2))
    return out


def link_parity_sum(d: OuterDiagram) -> int:
    return sum(v for _, v in _link_values(d)) % 2


def find_nonsplit_outer_link(d: OuterDiagram) -> CycleEdgeLink | None:
    return next((link for link, v in _link_values(d) if v), None)


# --------------------------------------------------------------------------
# apex extension
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class SpatialDiagram:
    """An outer diagram plus an apex outside the circle whose edges never cross."""

    base: OuterDiagram
    graph: Graph
    apex: int

    @property
    def crossings(self) -> tuple[Crossing, ...]:
        return self.base.crossings

    @property
    def traversals(self) -> dict[Edge, tuple[int, ...]]:
        out = dict(self.base.traversals)
        for v in self.base.graph.vertices:
            out[edge(v, self.apex)] = ()
        return out


def apex_extension(d: OuterDiagram) -> SpatialDiagram:
    g = join_apex(d.graph)
    return SpatialDiagram(d, g, g.vertices[-1])


def _over_count(crossings: Iterable[Crossing], top: set[Edge], bottom: set[Edge]) -> int:
    return sum(1 for c in crossings if c.over in top and c.under in bottom)


def lk2_cycle_cycle(s: SpatialDiagram, c1: tuple[int, ...], c2: tuple[int, ...]) -> int:
    """Crossings with ``c1`` over ``c2``, mod 2."""
    _check_cycle(s.graph, c1)
    _check_cycle(s.graph, c2)
    if set(c1) & set(c2):
        raise DiagramError("cycles share a vertex")
    e1, e2 = _cycle_edges(tuple(c1)), _cycle_edges(tuple(c2))
    a = _over_count(s.crossings, e1, e2) % 2
    b = _over_count(s.crossings, e2, e1) % 2
    if a != b:
        warnings.warn(f"linking of {c1} and {c2} depends on which cycle is on top",
                      LinkingAsymmetryWarning, stacklevel=2)
    return a


@lru_cache(maxsize=4)
def _supported_apex_graphs() -> dict:
    return {canonical_form(standard_graph(n)): n for n in ("K6", "K331")}


@lru_cache(maxsize=64)
def cg_pairs(g: Graph) -> tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]:
    """Cycle pairs summed by :func:`cg_sum`: triangle partitions for K6, all disjoint pairs for K3,3,1."""
    kind = _supported_apex_graphs().get(canonical_form(g)) if g.order <= 7 else None
    if kind is None:
        raise DiagramError("cg_sum supports only K6 and K3,3,1")
    pairs = disjoint_cycle_pairs(g)
    if kind == "K6":
        pairs = tuple(p for p in pairs if len(p[0]) == 3 and len(p[1]) == 3)
    return pairs


def cg_sum(s: SpatialDiagram) -> int:
    return sum(lk2_cycle_cycle(s, a, b) for a, b in cg_pairs(s.graph)) % 2


# --------------------------------------------------------------------------
# two-page witnesses
# --------------------------------------------------------------------------


def two_page_coloring(g: Graph, order: CyclicOrder) -> dict[Edge, int] | None:
    """Page (0 or 1) for every edge so that chords on one page never interleave."""
    conflicts: dict[Edge, list[Edge]] = {e: [] for e in g.edges}
    for e1, e2 in interleaving_pairs(g, order):
        conflicts[e1].append(e2)
        conflicts[e2].append(e1)
    page: dict[Edge, int] = {}
    for start in g.sorted_edges:
        if start in page:
            continue
        page[start] = 0
        stack = [start]
        while stack:
            e = stack.pop()
            for f in conflicts[e]:
                if f not in page:
                    page[f] = 1 - page[e]
                    stack.append(f)
                elif page[f] == page[e]:
                    return None
    return page


def two_page_linkless_diagram(g: Graph, max_order: int = MAX_TWO_PAGE_ORDER) -> OuterDiagram | None:
    """Convex diagram from a 2-page book embedding, page 0 always over page 1.

    Every cycle meets a disjoint chord an even number of times, and a chord
    is either over all of its crossings or under all of them, so all
    cycle-edge linking numbers vanish.  Returns None when no book embedding
    is found among the cyclic orders (or the graph exceeds ``max_order``).
    """
    if g.order > max_order:
        return None
    orders = [CyclicOrder(tuple(g.vertices))]
    if g.order >= 3:
        orders = enumerate_cyclic_orders(g)
    for order in orders:
        page = two_page_coloring(g, order)
        if page is None:
            continue
        over = {}
        for e1, e2 in interleaving_pairs(g, order):
            over[frozenset((e1, e2))] = e1 if page[e1] == 0 else e2
        return convex_diagram(g, order, "explicit", over=over)
    return None


# --------------------------------------------------------------------------
# text format
# --------------------------------------------------------------------------


def dump_diagram(d: OuterDiagram) -> str:
    g = d.graph
    for v in g.vertices:
        lab = g.label(v)
        if not lab or any(ch.isspace() or ch in "-=#" for ch in lab):
            raise DiagramError(f"vertex label {lab!r} cannot be written in the diagram format")
    lines = [
        "vertices " + " ".join(g.label(v) for v in g.vertices),
        "order " + " ".join(g.label(v) for v in d.order),
    ]
    lines += [f"edge {g.label(u)} {g.label(v)}" for u, v in g.sorted_edges]
    for c in sorted(d.crossings, key=lambda c: c.id):
        lines.append(f"X {c.id} over={g.edge_label(c.over)} under={g.edge_label(c.under)}")
    return "\n".join(lines) + "\n"


def load_diagram(text: str) -> OuterDiagram:
    """Parse the text format; traversal orders are rebuilt from chord geometry.

    The optional ``vertices`` line fixes vertex ids; without it ids follow
    the ``order`` line.
    """
    names: list[str] = []
    declared: list[str] | None = None
    raw_edges: list[tuple[str, str]] = []
    raw_crossings: list[tuple[int, str, str, int]] = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            if parts[0] == "order":
                names = parts[1:]
            elif parts[0] == "vertices":
                declared = parts[1:]
            elif parts[0] == "edge" and len(parts) == 3:
                raw_edges.append((parts[1], parts[2]))
            elif parts[0] == "X" and len(parts) == 4:
                ov, un = parts[2], parts[3]
                if not ov.startswith("over=") or not un.startswith("under="):
                    raise ValueError
                raw_crossings.append((int(parts[1]), ov[5:], un[6:], lineno))
            else:
                raise ValueError
        except ValueError:
            raise DiagramError(f"line {lineno}: malformed diagram line {line!r}") from None
    if len(set(names)) != len(names) or not names:
        raise DiagramError("the order line must list every vertex exactly once")
    if declared is None:
        declared = names
    elif sorted(declared) != sorted(names) or len(set(declared)) != len(declared):
        raise DiagramError("the vertices line and the order line list different vertices")
    idx = {name: i for i, name in enumerate(declared)}
    try:
        g = Graph.build(len(names), ((idx[a], idx[b]) for a, b in raw_edges), declared)
    except KeyError as exc:
        raise DiagramError(f"edge uses vertex {exc.args[0]!r} missing from the order") from None
    order = CyclicOrder(tuple(idx[name] for name in names))

    def parse_edge(s: str, lineno: int) -> Edge:
        try:
            a, b = s.split("-")
            e = edge(idx[a], idx[b])
        except (ValueError, KeyError, GraphError):
            raise DiagramError(f"line {lineno}: bad edge {s!r}") from None
        if e not in g.edges:
            raise DiagramError(f"line {lineno}: {s} is not an edge")
        return e

    crossings = tuple(
        Crossing(cid, parse_edge(ov, ln), parse_edge(un, ln)) for cid, ov, un, ln in raw_crossings
    )
    d = OuterDiagram(g, order, crossings, _geometric_traversals(g, order, crossings))
    problems = validate_diagram(d)
    if problems:
        raise DiagramError("; ".join(problems))
    return d
