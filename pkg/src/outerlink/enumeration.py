"""Isomorphism-reduced enumeration of small graphs.

The canonical label is the lexicographically least upper-triangle adjacency
string over vertex orderings.  Orderings are pruned by colour refinement
(degree, then multiset of neighbour colours, iterated) and the remaining
ties are broken by individualizing each vertex of the first non-trivial
cell in turn, so the minimum is taken only over refinement-compatible
orderings.  Within that cell only one vertex per twin class (equal
neighbourhoods up to each other) is tried: swapping two twins is an
automorphism that fixes the colouring, so both branches give the same leaves.  Refinement is isomorphism invariant, which makes the minimum a
true invariant.
"""

from __future__ import annotations

from functools import lru_cache

from .graph import Graph, GraphError

MAX_CANONICAL_ORDER = 10
MAX_ENUMERATION_ORDER = 7

CanonicalLabel = tuple[int, int]  # (n, packed adjacency bits)


def _refine(adj: list[list[int]], colors: list[int]) -> list[int]:
    n = len(adj)
    while True:
        sigs = [(colors[v], tuple(sorted(colors[w] for w in adj[v]))) for v in range(n)]
        ranks = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranks[s] for s in sigs]
        if len(ranks) == len(set(colors)):
            return new
        colors = new


def _encode(adj_sets: list[set[int]], order: list[int]) -> int:
    bits = 0
    n = len(order)
    for i in range(n):
        row = adj_sets[order[i]]
        for j in range(i + 1, n):
            bits = (bits << 1) | (order[j] in row)
    return bits


def canonical_form(g: Graph) -> CanonicalLabel:
    n = g.order
    if n > MAX_CANONICAL_ORDER:
        raise GraphError(f"canonical_form supports at most {MAX_CANONICAL_ORDER} vertices")
    index = {v: i for i, v in enumerate(g.vertices)}
    adj = [[index[w] for w in g.neighbors(v)] for v in g.vertices]
    adj_sets = [set(a) for a in adj]
    best: int | None = None

    def search(colors: list[int]) -> None:
        nonlocal best
        colors = _refine(adj, colors)
        if len(set(colors)) == n:
            order = sorted(range(n), key=colors.__getitem__)
            code = _encode(adj_sets, order)
            if best is None or code < best:
                best = code
            return
        counts: dict[int, int] = {}
        for c in colors:
            counts[c] = counts.get(c, 0) + 1
        target = min(c for c, k in counts.items() if k > 1)
        tried: list[int] = []
        for v in range(n):
            if colors[v] == target:
                if any(adj_sets[v] - {u} == adj_sets[u] - {v} for u in tried):
                    continue
                tried.append(v)
                split = [2 * c + (1 if c > target or (c == target and u != v) else 0)
                         for u, c in enumerate(colors)]
                search(split)

    search([0] * n)
    return (n, best or 0)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return g.order == h.order and g.size == h.size and canonical_form(g) == canonical_form(h)


def graph_from_label(label: CanonicalLabel) -> Graph:
    n, bits = label
    es = []
    k = n * (n - 1) // 2
    pos = k - 1
    for i in range(n):
        for j in range(i + 1, n):
            if bits >> pos & 1:
                es.append((i, j))
            pos -= 1
    return Graph.build(n, es)


@lru_cache(maxsize=None)
def _labels(n: int) -> tuple[CanonicalLabel, ...]:
    if n == 1:
        return (canonical_form(Graph.build(1, [])),)
    found: set[CanonicalLabel] = set()
    new = n - 1
    for lab in _labels(n - 1):
        h = graph_from_label(lab)
        # every graph is some smaller graph plus a vertex of minimum degree
        mindeg = min(h.degree(v) for v in h.vertices)
        for mask in range(1 << (n - 1)):
            nbrs = [v for v in range(n - 1) if mask >> v & 1]
            k = len(nbrs)
            if k > mindeg + 1:
                continue
            g = Graph.build(n, list(h.edges) + [(v, new) for v in nbrs])
            if any(g.degree(v) < k for v in range(n - 1)):
                continue
            found.add(canonical_form(g))
    return tuple(sorted(found))


def enumerate_graphs(n: int) -> list[Graph]:
    """One representative of every isomorphism class of simple graphs on n vertices."""
    if not 1 <= n <= MAX_ENUMERATION_ORDER:
        raise GraphError(f"enumerate_graphs needs 1 <= n <= {MAX_ENUMERATION_ORDER}")
    return [graph_from_label(lab) for lab in _labels(n)]


def enumerate_graphs_upto(n: int) -> list[Graph]:
    return [g for k in range(1, n + 1) for g in enumerate_graphs(k)]
