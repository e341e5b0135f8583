"""Vertex placements on a circle and the interleaving linking number.

A placement only matters up to rotation and reflection, so every
:class:`CyclicOrder` is stored in one canonical form: smallest vertex first,
read in the direction that makes the second entry smaller than the last.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .graph import Edge, Graph, GraphError, edge, iter_disjoint_edge_pairs
from .planarity import is_outerplanar

MAX_BRUTEFORCE_ORDER = 10


@dataclass(frozen=True)
class CyclicOrder:
    sequence: tuple[int, ...]

    def __post_init__(self) -> None:
        seq = tuple(self.sequence)
        if len(set(seq)) != len(seq):
            raise GraphError("a cyclic order lists every vertex exactly once")
        object.__setattr__(self, "sequence", _canonical_rotation(seq))

    @classmethod
    def from_labels(cls, g: Graph, labels: Iterable[str]) -> CyclicOrder:
        return cls(tuple(g.vertex(x) for x in labels))

    def __len__(self) -> int:
        return len(self.sequence)

    def __iter__(self) -> Iterator[int]:
        return iter(self.sequence)

    def positions(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.sequence)}

    def labels(self, g: Graph) -> list[str]:
        return [g.label(v) for v in self.sequence]

    def swap(self, u: int, v: int) -> CyclicOrder:
        """Exchange the positions of two vertices."""
        seq = [v if x == u else u if x == v else x for x in self.sequence]
        return CyclicOrder(tuple(seq))


def _canonical_rotation(seq: tuple[int, ...]) -> tuple[int, ...]:
    if len(seq) < 3:
        return tuple(sorted(seq))
    i = seq.index(min(seq))
    rot = seq[i:] + seq[:i]
    if rot[1] > rot[-1]:
        rot = (rot[0],) + tuple(reversed(rot[1:]))
    return rot


@dataclass(frozen=True)
class EdgePairLink:
    """Two vertex-disjoint edges, i.e. two copies of S^0 on the circle."""

    first: Edge
    second: Edge

    def __post_init__(self) -> None:
        a, b = edge(*self.first), edge(*self.second)
        if len({*a, *b}) != 4:
            raise GraphError(f"edges {a} and {b} are not disjoint")
        object.__setattr__(self, "first", a)
        object.__setattr__(self, "second", b)

    def describe(self, g: Graph) -> str:
        return f"({g.edge_label(self.first)}, {g.edge_label(self.second)})"


def enumerate_cyclic_orders(g: Graph | Sequence[int]) -> Iterator[CyclicOrder]:
    """Every placement of the vertices on a circle up to rotation and reflection."""
    verts = sorted(g.vertices if isinstance(g, Graph) else g)
    if len(verts) < 3:
        raise GraphError("cyclic orders need at least 3 vertices")
    first, rest = verts[0], verts[1:]
    for perm in itertools.permutations(rest):
        if perm[0] < perm[-1]:
            yield CyclicOrder((first,) + perm)


def _interleaved(pos: dict[int, int], e1: Edge, e2: Edge) -> bool:
    i, j = sorted((pos[e1[0]], pos[e1[1]]))
    inside = (i < pos[e2[0]] < j) + (i < pos[e2[1]] < j)
    return inside == 1


def lk2_s1(o: CyclicOrder, link: EdgePairLink) -> int:
    """Mod-2 linking number: 1 iff the two chords separate each other."""
    pos = o.positions()
    for v in (*link.first, *link.second):
        if v not in pos:
            raise GraphError(f"vertex {v} is not placed by the order")
    return int(_interleaved(pos, link.first, link.second))


def _check_order(o: CyclicOrder, g: Graph) -> dict[int, int]:
    pos = o.positions()
    if set(pos) != set(g.vertices):
        raise GraphError("the cyclic order does not place exactly the graph's vertices")
    return pos


def find_nonsplit_link(o: CyclicOrder, g: Graph) -> EdgePairLink | None:
    """Lexicographically first pair of disjoint edges whose chords interleave."""
    pos = _check_order(o, g)
    for e1, e2 in iter_disjoint_edge_pairs(g):
        if _interleaved(pos, e1, e2):
            return EdgePairLink(e1, e2)
    return None


def parity_sum(o: CyclicOrder, g: Graph) -> int:
    pos = _check_order(o, g)
    return sum(_interleaved(pos, e1, e2) for e1, e2 in iter_disjoint_edge_pairs(g)) % 2


@dataclass(frozen=True)
class S1LinkReport:
    order: CyclicOrder
    linked: dict[tuple[Edge, Edge], int]
    witness: EdgePairLink | None
    parity: int


def s1_link_report(o: CyclicOrder, g: Graph) -> S1LinkReport:
    pos = _check_order(o, g)
    linked = {(a, b): int(_interleaved(pos, a, b)) for a, b in iter_disjoint_edge_pairs(g)}
    witness = next((EdgePairLink(*p) for p, v in linked.items() if v), None)
    return S1LinkReport(o, linked, witness, sum(linked.values()) % 2)


@dataclass(frozen=True)
class S1Decision:
    linked: bool
    linkless_order: CyclicOrder | None = None


def is_intrinsically_s1_linked_bruteforce(g: Graph) -> S1Decision:
    """Try every cyclic order; a single linkless one refutes intrinsic linking."""
    if g.order > MAX_BRUTEFORCE_ORDER:
        raise GraphError(f"brute force is limited to {MAX_BRUTEFORCE_ORDER} vertices")
    if g.order < 4:
        return S1Decision(False, CyclicOrder(tuple(g.vertices)))
    pairs = list(iter_disjoint_edge_pairs(g))
    if not pairs:
        return S1Decision(False, CyclicOrder(tuple(sorted(g.vertices))))
    for o in enumerate_cyclic_orders(g):
        pos = o.positions()
        if not any(_interleaved(pos, a, b) for a, b in pairs):
            return S1Decision(False, o)
    return S1Decision(True)


class NotOuterplanarError(GraphError):
    pass


def linkless_order_from_outerplanar(g: Graph) -> CyclicOrder:
    """Boundary order of an outerplanar embedding; it never interleaves disjoint edges."""
    res = is_outerplanar(g)
    if not res.outerplanar:
        raise NotOuterplanarError(
            f"graph has a {res.obstruction.pattern} minor, so every cyclic order is linked"
        )
    o = CyclicOrder(res.boundary_order)
    if g.order >= 4 and find_nonsplit_link(o, g) is not None:
        raise RuntimeError("apex rotation produced a linked order")
    return o
