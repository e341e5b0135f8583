"""Finite simple graphs and the structural operations used on them.

Vertices are small integers; an optional label table keeps human names
(``a``, ``b``, ``1`` ...) around for reports.  Graph values are immutable:
every operation returns a new graph.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

Edge = tuple[int, int]


class GraphError(ValueError):
    """Raised when a graph or an operation on it violates a precondition."""


def edge(u: int, v: int) -> Edge:
    """Normalized undirected edge (smaller endpoint first)."""
    if u == v:
        raise GraphError(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    vertices: tuple[int, ...]
    edges: frozenset[Edge]
    labels: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if len(set(self.vertices)) != len(self.vertices):
            raise GraphError("duplicate vertex identifiers")
        vset = set(self.vertices)
        for u, v in self.edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if u > v:
                raise GraphError(f"edge ({u}, {v}) is not normalized")
            if u not in vset or v not in vset:
                raise GraphError(f"edge ({u}, {v}) uses an unknown vertex")
        if self.labels and len(self.labels) != len(self.vertices):
            raise GraphError("label table does not match vertex list")
        if self.labels and len(set(self.labels)) != len(self.labels):
            raise GraphError("duplicate vertex labels")

    @classmethod
    def build(
        cls,
        vertices: Iterable[int] | int,
        edges: Iterable[tuple[int, int]],
        labels: Sequence[str] | None = None,
    ) -> Graph:
        """Build a graph, normalizing edge orientation.

        ``vertices`` may be a count ``n`` (meaning ``0..n-1``).  Repeated
        edges are rejected rather than silently merged.
        """
        if isinstance(vertices, int):
            vertices = range(vertices)
        es: set[Edge] = set()
        for u, v in edges:
            e = edge(u, v)
            if e in es:
                raise GraphError(f"repeated edge {e}")
            es.add(e)
        return cls(tuple(vertices), frozenset(es), tuple(labels) if labels else ())

    @property
    def order(self) -> int:
        return len(self.vertices)

    @property
    def size(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> dict[int, frozenset[int]]:
        adj: dict[int, set[int]] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return {v: frozenset(ns) for v, ns in adj.items()}

    @cached_property
    def sorted_edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and (min(u, v), max(u, v)) in self.edges

    def label(self, v: int) -> str:
        if self.labels:
            return self.labels[self.vertices.index(v)]
        return str(v)

    def vertex(self, name: str | int) -> int:
        """Look up a vertex by label (or pass an integer id through)."""
        if isinstance(name, int):
            if name not in self.adjacency:
                raise GraphError(f"unknown vertex {name}")
            return name
        if self.labels:
            try:
                return self.vertices[self.labels.index(name)]
            except ValueError:
                pass
        raise GraphError(f"unknown vertex label {name!r}")

    def edge_label(self, e: Edge) -> str:
        return f"{self.label(e[0])}-{self.label(e[1])}"

    def relabel(self, mapping: dict[int, int]) -> Graph:
        """Rename vertex ids; labels follow their vertices."""
        verts = tuple(mapping[v] for v in self.vertices)
        return Graph.build(
            verts,
            ((mapping[u], mapping[v]) for u, v in self.edges),
            self.labels or None,
        )

    def without_labels(self) -> Graph:
        return Graph(self.vertices, self.edges)

    def components(self) -> list[list[int]]:
        seen: set[int] = set()
        comps = []
        for s in self.vertices:
            if s in seen:
                continue
            comp = [s]
            seen.add(s)
            stack = [s]
            while stack:
                u = stack.pop()
                for w in self.adjacency[u]:
                    if w not in seen:
                        seen.add(w)
                        comp.append(w)
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def induced(self, keep: Iterable[int]) -> Graph:
        keep = set(keep)
        verts = [v for v in self.vertices if v in keep]
        labels = [self.label(v) for v in verts] if self.labels else None
        return Graph.build(
            verts, (e for e in self.edges if e[0] in keep and e[1] in keep), labels
        )

    def add_edge(self, u: int, v: int) -> Graph:
        e = edge(u, v)
        if e in self.edges:
            raise GraphError(f"edge {e} already present")
        return Graph(self.vertices, self.edges | {e}, self.labels)

    def add_vertex(self, label: str | None = None) -> tuple[Graph, int]:
        new = max(self.vertices, default=-1) + 1
        labels: tuple[str, ...] = ()
        if self.labels:
            label = label or str(new)
            while label in self.labels:
                label += "'"
            labels = self.labels + (label,)
        return Graph(self.vertices + (new,), self.edges, labels), new

    def to_networkx(self):
        import networkx as nx

        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(self.edges)
        return g

    def __repr__(self) -> str:
        es = ", ".join(self.edge_label(e) for e in self.sorted_edges)
        return f"Graph(n={self.order}, m={self.size}: {es})"


@dataclass(frozen=True)
class NeighborPartition:
    """Split of a vertex's neighbors between the two ends of an expansion."""

    left: frozenset[int] = field(default_factory=frozenset)
    right: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        object.__setattr__(self, "left", frozenset(self.left))
        object.__setattr__(self, "right", frozenset(self.right))


# --------------------------------------------------------------------------
# minors and expansions
# --------------------------------------------------------------------------


def _require_edge(g: Graph, e: tuple[int, int]) -> Edge:
    e = edge(*e)
    if e not in g.edges:
        raise GraphError(f"edge {e} not in graph")
    return e


def delete_edge(g: Graph, e: tuple[int, int]) -> Graph:
    e = _require_edge(g, e)
    return Graph(g.vertices, g.edges - {e}, g.labels)


def contract_edge(g: Graph, e: tuple[int, int]) -> Graph:
    """Merge the endpoints of ``e`` into its smaller endpoint.

    Parallel edges created by the merge collapse and the loop disappears.
    """
    keep, gone = _require_edge(g, e)
    es = set()
    for u, v in g.edges:
        u = keep if u == gone else u
        v = keep if v == gone else v
        if u != v:
            es.add(edge(u, v))
    idx = g.vertices.index(gone)
    verts = g.vertices[:idx] + g.vertices[idx + 1 :]
    labels = g.labels[:idx] + g.labels[idx + 1 :] if g.labels else ()
    return Graph(verts, frozenset(es), labels)


def expand_vertex(g: Graph, v: int, p: NeighborPartition) -> Graph:
    """Replace ``v`` by an edge ``v' v''``.

    ``v'`` keeps the id of ``v`` and is joined to ``p.left``; ``v''`` gets a
    fresh id and is joined to ``p.right``.
    """
    if v not in g.adjacency:
        raise GraphError(f"unknown vertex {v}")
    nbrs = g.neighbors(v)
    if p.left & p.right or (p.left | p.right) != nbrs:
        raise GraphError(f"invalid neighbor partition for vertex {v}")
    g2, v2 = g.add_vertex(g.label(v) + "''" if g.labels else None)
    if g.labels:
        i = g.vertices.index(v)
        labels = list(g2.labels)
        labels[i] = g.label(v) + "'"
        g2 = Graph(g2.vertices, g2.edges, tuple(labels))
    es = {e for e in g2.edges if v not in e}
    es |= {edge(v, w) for w in p.left}
    es |= {edge(v2, w) for w in p.right}
    es.add(edge(v, v2))
    return Graph(g2.vertices, frozenset(es), g2.labels)


def neighbor_partitions(g: Graph, v: int) -> list[NeighborPartition]:
    """Unordered splits of N(v); the smallest neighbor always sits on the left."""
    nbrs = sorted(g.neighbors(v))
    if not nbrs:
        return [NeighborPartition()]
    first, rest = nbrs[0], nbrs[1:]
    parts = []
    for mask in range(1 << len(rest)):
        left = {first} | {w for i, w in enumerate(rest) if mask >> i & 1}
        parts.append(NeighborPartition(frozenset(left), frozenset(nbrs) - left))
    return parts


def enumerate_expansions(g: Graph, v: int) -> list[Graph]:
    if v not in g.adjacency:
        raise GraphError(f"unknown vertex {v}")
    return [expand_vertex(g, v, p) for p in neighbor_partitions(g, v)]


def join_apex(g: Graph, label: str = "v") -> Graph:
    """G * v: a new vertex adjacent to every vertex of ``g``."""
    g2, apex = g.add_vertex(label)
    return Graph(
        g2.vertices, g2.edges | {edge(u, apex) for u in g.vertices}, g2.labels
    )


def permute(g: Graph, perm: dict[int, int]) -> Graph:
    """Image of ``g`` under a bijection of its vertex set (labels dropped)."""
    return Graph.build(g.vertices, ((perm[u], perm[v]) for u, v in g.edges))


# --------------------------------------------------------------------------
# named graphs
# --------------------------------------------------------------------------


def complete_graph(n: int) -> Graph:
    return Graph.build(
        n, itertools.combinations(range(n), 2), [str(i + 1) for i in range(n)]
    )


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph.build(
        n, ((i, (i + 1) % n) for i in range(n)), [str(i + 1) for i in range(n)]
    )


def path_graph(n: int) -> Graph:
    return Graph.build(
        n, ((i, i + 1) for i in range(n - 1)), [str(i + 1) for i in range(n)]
    )


def complete_bipartite(left: Sequence[str], right: Sequence[str]) -> Graph:
    m = len(left)
    es = [(i, m + j) for i in range(m) for j in range(len(right))]
    return Graph.build(m + len(right), es, list(left) + list(right))


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.build(10, outer + spokes + inner)


_NAMED = {
    "K4": lambda: complete_graph(4),
    "K5": lambda: complete_graph(5),
    "K6": lambda: complete_graph(6),
    "K32": lambda: complete_bipartite("abc", "12"),
    "K33": lambda: complete_bipartite("abc", "123"),
    "K331": lambda: join_apex(complete_bipartite("abc", "123")),
    "PETERSEN": petersen_graph,
}


def standard_graph(name: str) -> Graph:
    """Named graph: K4, K32, K5, K33, K6, K331, Petersen, Kn / Cn / Pn for any n."""
    key = name.strip().upper().replace(",", "").replace("_", "")
    if key in _NAMED:
        return _NAMED[key]()
    m = re.fullmatch(r"([KCP])\(?(\d+)\)?", key)
    if m:
        kind, n = m.group(1), int(m.group(2))
        if kind == "K":
            return complete_graph(n)
        if kind == "C":
            return cycle_graph(n)
        return path_graph(n)
    raise GraphError(f"unknown graph name {name!r}")


def iter_disjoint_edge_pairs(g: Graph) -> Iterator[tuple[Edge, Edge]]:
    """Pairs of vertex-disjoint edges in lexicographic order."""
    es = g.sorted_edges
    for i, e1 in enumerate(es):
        for e2 in es[i + 1 :]:
            if e1[0] not in e2 and e1[1] not in e2:
                yield e1, e2
