"""Planarity, outerplanarity and fixed-minor containment with certificates."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

import networkx as nx

from .graph import Graph, GraphError, join_apex, standard_graph

MAX_MINOR_HOST = 12


@dataclass(frozen=True)
class MinorWitness:
    """Branch sets exhibiting ``pattern`` as a minor of some host graph."""

    pattern: str
    branch_sets: Mapping[int, frozenset[int]]

    def describe(self, g: Graph, h: Graph | None = None) -> dict[str, list[str]]:
        h = h or standard_graph(self.pattern)
        return {
            h.label(x): sorted((g.label(v) for v in vs), key=_natural_key)
            for x, vs in sorted(self.branch_sets.items())
        }


def _natural_key(s: str):
    return (0, int(s), "") if s.isdigit() else (1, 0, s)


def check_minor_witness(g: Graph, h: Graph, w: MinorWitness) -> list[str]:
    """Violations of the branch-set invariants; empty when the witness is valid."""
    problems = []
    sets = w.branch_sets
    if set(sets) != set(h.vertices):
        problems.append("branch sets do not cover the pattern's vertices")
        return problems
    used: set[int] = set()
    for x, vs in sets.items():
        if not vs:
            problems.append(f"branch set {h.label(x)} is empty")
            continue
        if not vs <= set(g.vertices):
            problems.append(f"branch set {h.label(x)} has vertices outside the host")
            continue
        if used & vs:
            problems.append(f"branch set {h.label(x)} overlaps another")
        used |= vs
        if len(g.induced(vs).components()) != 1:
            problems.append(f"branch set {h.label(x)} is not connected")
    for x, y in h.edges:
        if not any(g.has_edge(a, b) for a in sets[x] for b in sets[y]):
            problems.append(f"no host edge joins {h.label(x)} and {h.label(y)}")
    return problems


def _twin_predecessors(h: Graph) -> list[int | None]:
    """For each pattern vertex, the previous vertex of its twin class.

    Twins (equal neighbourhoods up to each other) can be swapped by an
    automorphism, so branch sets of a twin class may be opened in index
    order without losing any witness.
    """
    k = h.order
    prev: list[int | None] = [None] * k
    for i in range(k):
        for j in range(i - 1, -1, -1):
            ni = h.neighbors(h.vertices[i]) - {h.vertices[j]}
            nj = h.neighbors(h.vertices[j]) - {h.vertices[i]}
            if ni == nj:
                prev[i] = j
                break
    return prev


def has_minor(
    g: Graph, h: Graph, *, pattern: str | None = None, max_host: int | None = MAX_MINOR_HOST
) -> MinorWitness | None:
    """Search for ``h`` as a minor of ``g`` by assigning host vertices to branch sets.

    Host vertices are visited in descending degree order; each goes into one
    of the branch sets (closest pattern degree first) or is left unused.  Partial assignments are cut when
    too few vertices remain to fill the empty sets, when a branch set can no
    longer become connected through undecided vertices, or when a required
    pattern edge can no longer be realized.
    """
    if max_host is not None and g.order > max_host:
        raise GraphError(f"has_minor supports hosts with at most {max_host} vertices")
    k = h.order
    name = pattern or "H"
    if k == 0:
        return MinorWitness(name, {})
    if k > g.order or h.size > g.size:
        return None

    hv = h.vertices
    hidx = {x: i for i, x in enumerate(hv)}
    hedges = [(hidx[x], hidx[y]) for x, y in h.edges]
    prev = _twin_predecessors(h)
    order = sorted(g.vertices, key=lambda v: (-g.degree(v), v))
    adj = g.adjacency
    sets: list[set[int]] = [set() for _ in range(k)]
    undecided = set(order)
    hdeg = [h.degree(x) for x in hv]
    adj_deg = {v: len(adj[v]) for v in g.vertices}

    def feasible(pos: int) -> bool:
        remaining = len(order) - pos
        if sum(1 for s in sets if not s) > remaining:
            return False
        for s in sets:
            if len(s) < 2:
                continue
            start = next(iter(s))
            allowed = s | undecided
            seen = {start}
            stack = [start]
            while stack:
                u = stack.pop()
                for w in adj[u]:
                    if w in allowed and w not in seen:
                        seen.add(w)
                        stack.append(w)
            if not s <= seen:
                return False
        for i, j in hedges:
            si, sj = sets[i], sets[j]
            if not si or not sj:
                continue
            if undecided:
                ai, aj = si | undecided, sj | undecided
            else:
                ai, aj = si, sj
            if not any(adj[a] & aj for a in ai):
                return False
        return True

    def search(pos: int) -> bool:
        if pos == len(order):
            return all(sets)
        v = order[pos]
        undecided.discard(v)
        for i in sorted(range(k), key=lambda i: (abs(hdeg[i] - adj_deg[v]), i)):
            if not sets[i] and prev[i] is not None and not sets[prev[i]]:
                continue
            sets[i].add(v)
            if feasible(pos + 1) and search(pos + 1):
                return True
            sets[i].remove(v)
        if feasible(pos + 1) and search(pos + 1):
            return True
        undecided.add(v)
        return False

    if not search(0):
        return None
    return MinorWitness(name, {hv[i]: frozenset(s) for i, s in enumerate(sets)})


def find_named_minor(g: Graph, name: str, **kw) -> MinorWitness | None:
    return has_minor(g, standard_graph(name), pattern=name, **kw)


# --------------------------------------------------------------------------
# planarity
# --------------------------------------------------------------------------

Rotation = dict[int, tuple[int, ...]]


def trace_faces(rotation: Rotation) -> list[list[tuple[int, int]]]:
    """Faces of a rotation system as cycles of darts.

    Arriving at ``w`` along ``(v, w)``, the walk leaves along the successor
    of ``v`` in the rotation at ``w``.
    """
    pos = {v: {u: i for i, u in enumerate(rot)} for v, rot in rotation.items()}
    seen: set[tuple[int, int]] = set()
    faces = []
    for v, rot in rotation.items():
        for w in rot:
            if (v, w) in seen:
                continue
            face = []
            dart = (v, w)
            while dart not in seen:
                seen.add(dart)
                face.append(dart)
                a, b = dart
                rb = rotation[b]
                dart = (b, rb[(pos[b][a] + 1) % len(rb)])
            faces.append(face)
    return faces


def euler_violations(g: Graph, rotation: Rotation) -> list[str]:
    """Check V - E + F = 2 on every component under the given rotation system."""
    problems = []
    faces = trace_faces(rotation)
    for comp in g.components():
        if len(comp) == 1:
            continue
        cset = set(comp)
        ne = sum(1 for u, v in g.edges if u in cset)
        nf = sum(1 for face in faces if face[0][0] in cset)
        if len(comp) - ne + nf != 2:
            problems.append(
                f"component containing {g.label(comp[0])}: V-E+F = {len(comp)}-{ne}+{nf}"
            )
    return problems


@dataclass(frozen=True)
class PlanarityResult:
    planar: bool
    rotation_system: Rotation | None = None
    obstruction: MinorWitness | None = None

    @property
    def faces(self) -> int | None:
        if self.rotation_system is None:
            return None
        return len(trace_faces(self.rotation_system))


def _smooth_kuratowski(g: Graph, sub: nx.Graph) -> MinorWitness | None:
    """Turn a subdivided K5 / K3,3 into branch sets by absorbing path interiors."""
    branch = sorted(v for v in sub.nodes if sub.degree(v) >= 3)
    if len(branch) not in (5, 6):
        return None
    bset = set(branch)
    owner = {b: b for b in branch}
    bgraph: dict[int, set[int]] = {b: set() for b in branch}
    for b in branch:
        for nxt in sub.neighbors(b):
            path = []
            prev, cur = b, nxt
            while cur not in bset:
                path.append(cur)
                step = [w for w in sub.neighbors(cur) if w != prev]
                if len(step) != 1:
                    return None
                prev, cur = cur, step[0]
            bgraph[b].add(cur)
            if b < cur:
                for p in path:
                    owner[p] = b
    if len(branch) == 5:
        pattern = "K5"
        slot = {b: i for i, b in enumerate(branch)}
    else:
        pattern = "K33"
        side_a = {branch[0]} | {c for c in branch if c not in bgraph[branch[0]] and c != branch[0]}
        side_b = [b for b in branch if b not in side_a]
        side_a_sorted = sorted(side_a)
        if len(side_a_sorted) != 3:
            return None
        slot = {b: i for i, b in enumerate(side_a_sorted)}
        slot.update({b: 3 + i for i, b in enumerate(side_b)})
    sets: dict[int, set[int]] = {i: set() for i in range(len(branch))}
    for v, b in owner.items():
        sets[slot[b]].add(v)
    w = MinorWitness(pattern, {i: frozenset(s) for i, s in sets.items()})
    if check_minor_witness(g, standard_graph(pattern), w):
        return None
    return w


def planar_rotation(g: Graph) -> Rotation | None:
    """Face-checked rotation system of a planar embedding, or None if non-planar."""
    planar, emb = nx.check_planarity(g.to_networkx())
    if not planar:
        return None
    rotation = {v: tuple(emb.neighbors_cw_order(v)) for v in g.vertices}
    problems = euler_violations(g, rotation)
    if problems:
        raise RuntimeError(f"planar embedding failed face check: {problems}")
    return rotation


def is_planar(g: Graph) -> PlanarityResult:
    """Planarity with a rotation system, or a K5 / K3,3 minor witness."""
    rotation = planar_rotation(g)
    if rotation is not None:
        return PlanarityResult(True, rotation_system=rotation)
    _, sub = nx.check_planarity(g.to_networkx(), counterexample=True)
    w = _smooth_kuratowski(g, sub)
    if w is None:
        w = find_named_minor(g, "K5", max_host=None) or find_named_minor(g, "K33", max_host=None)
    return PlanarityResult(False, obstruction=w)


@dataclass(frozen=True)
class OuterplanarityResult:
    outerplanar: bool
    boundary_order: tuple[int, ...] | None = None
    obstruction: MinorWitness | None = None


def outerplanar_boundary(g: Graph) -> tuple[int, ...] | None:
    """Rotation at the apex of a planar embedding of G * v, or None if G * v is non-planar."""
    if g.order == 0:
        return ()
    joined = join_apex(g)
    apex = joined.vertices[-1]
    rotation = planar_rotation(joined)
    if rotation is None:
        return None
    return rotation[apex]


def is_outerplanar(g: Graph) -> OuterplanarityResult:
    """Outerplanarity via the apex construction, certified either way.

    Outerplanar graphs get the boundary cyclic order; the rest get a K4 or
    K3,2 minor witness.
    """
    boundary = outerplanar_boundary(g)
    if boundary is not None:
        return OuterplanarityResult(True, boundary_order=tuple(boundary))
    w = find_named_minor(g, "K4", max_host=None) or find_named_minor(g, "K32", max_host=None)
    if w is None:
        raise RuntimeError("apex test and forbidden-minor search disagree")
    return OuterplanarityResult(False, obstruction=w)
