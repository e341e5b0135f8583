"""Exhaustive and seeded sweeps over the two characterizations.

Each sweep returns a :class:`SweepResult`; the first counterexample (if
any) is kept as a readable string.  Seeded sweeps derive one 64-bit seed
per trial from the base seed so any single trial can be replayed.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Sequence

from .diagram import (
    apex_extension,
    cg_sum,
    convex_diagram,
    crossing_change,
    cycle_edge_links,
    find_nonsplit_outer_link,
    link_parity_sum,
    lk2_cycle_cycle,
    lk2_cycle_edge,
    two_page_linkless_diagram,
    validate_diagram,
)
from .enumeration import enumerate_graphs_upto
from .graph import Graph, enumerate_expansions, standard_graph
from .graphio import to_graph6
from .planarity import find_named_minor, is_outerplanar, is_planar, outerplanar_boundary
from .s1 import (
    CyclicOrder,
    enumerate_cyclic_orders,
    find_nonsplit_link,
    is_intrinsically_s1_linked_bruteforce,
    linkless_order_from_outerplanar,
)

DEFAULT_N = 6
DEFAULT_TRIALS = 1000
DEFAULT_SEED = 42


@dataclass
class SweepResult:
    theorem: str
    passed: bool
    checked: int
    counterexample: str | None = None
    seed: int | None = None
    details: dict[str, Any] = field(default_factory=dict)

    def as_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"theorem": self.theorem, "passed": self.passed, "checked": self.checked}
        if self.seed is not None:
            out["seed"] = self.seed
        out["details"] = self.details
        out["counterexample"] = self.counterexample
        return out


def trial_seeds(seed: int, trials: int) -> list[int]:
    rng = random.Random(seed)
    return [rng.getrandbits(64) for _ in range(trials)]


def _map(fn: Callable, items: Sequence, jobs: int) -> list:
    if jobs <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))


def _first_failure(theorem: str, outcomes: Iterable[str | None], **kw) -> SweepResult:
    outcomes = list(outcomes)
    bad = next((o for o in outcomes if o is not None), None)
    return SweepResult(theorem, bad is None, len(outcomes), bad, **kw)


# --------------------------------------------------------------------------
# circle placements
# --------------------------------------------------------------------------


def _check_s1_equivalence(g: Graph) -> str | None:
    brute = is_intrinsically_s1_linked_bruteforce(g).linked
    outer = is_outerplanar(g).outerplanar
    if brute == outer:
        return f"{to_graph6(g)}: brute force linked={brute}, outerplanar={outer}"
    return None


def s1_equivalence(n: int = DEFAULT_N, jobs: int = 1) -> SweepResult:
    graphs = enumerate_graphs_upto(n)
    res = _first_failure("s1-equivalence", _map(_check_s1_equivalence, graphs, jobs))
    res.details = {"max_order": n, "graph_classes": len(graphs)}
    return res


def _check_minors(g: Graph) -> str | None:
    outer = is_outerplanar(g).outerplanar
    no_outer_minor = find_named_minor(g, "K4") is None and find_named_minor(g, "K32") is None
    if outer != no_outer_minor:
        return f"{to_graph6(g)}: outerplanar={outer}, K4/K32-minor-free={no_outer_minor}"
    planar = is_planar(g).planar
    no_kuratowski = find_named_minor(g, "K5") is None and find_named_minor(g, "K33") is None
    if planar != no_kuratowski:
        return f"{to_graph6(g)}: planar={planar}, K5/K33-minor-free={no_kuratowski}"
    return None


def forbidden_minors(n: int = DEFAULT_N, jobs: int = 1) -> SweepResult:
    graphs = enumerate_graphs_upto(n)
    res = _first_failure("forbidden-minors", _map(_check_minors, graphs, jobs))
    res.details = {"max_order": n, "graph_classes": len(graphs)}
    return res


def expansion_preservation(bases: Sequence[str] = ("K4", "K32")) -> SweepResult:
    outcomes = []
    per_base = {}
    for name in bases:
        g = standard_graph(name)
        count = 0
        for v in g.vertices:
            for h in enumerate_expansions(g, v):
                count += 1
                if not is_intrinsically_s1_linked_bruteforce(h).linked:
                    outcomes.append(f"expanding {name} at {g.label(v)} gives {h}, not linked")
                else:
                    outcomes.append(None)
        per_base[name] = count
    res = _first_failure("expansion-preservation", outcomes)
    res.details = {"expansions": per_base}
    return res


def _check_linkless_order(g: Graph) -> str | None:
    o = linkless_order_from_outerplanar(g)
    if g.order >= 4 and find_nonsplit_link(o, g) is not None:
        return f"{to_graph6(g)}: order {o.sequence} has a non-split link"
    return None


def linkless_orders(n: int = 7, jobs: int = 1) -> SweepResult:
    graphs = enumerate_graphs_upto(n)
    outer = [g for g in graphs if outerplanar_boundary(g) is not None]
    res = _first_failure("linkless-order", _map(_check_linkless_order, outer, jobs))
    res.details = {"max_order": n, "outerplanar_classes": len(outer)}
    return res


# --------------------------------------------------------------------------
# ball diagrams
# --------------------------------------------------------------------------


def _random_diagrams(name: str, trials: int, seed: int):
    g = standard_graph(name)
    orders = list(enumerate_cyclic_orders(g))
    for t, s in enumerate(trial_seeds(seed, trials)):
        yield t, s, convex_diagram(g, orders[t % len(orders)], "random", seed=s)


def outer_link_parity(name: str, trials: int = DEFAULT_TRIALS, seed: int = DEFAULT_SEED) -> SweepResult:
    """Every random diagram of ``name`` has link parity 1 and a non-split link."""
    outcomes = []
    for t, s, d in _random_diagrams(name, trials, seed):
        problems = validate_diagram(d)
        if problems:
            outcomes.append(f"trial {t} (seed {s}): invalid diagram {problems}")
        elif link_parity_sum(d) != 1:
            outcomes.append(f"trial {t} (seed {s}): parity {link_parity_sum(d)}")
        elif find_nonsplit_outer_link(d) is None:
            outcomes.append(f"trial {t} (seed {s}): no non-split link")
        else:
            outcomes.append(None)
    orders = sum(1 for _ in enumerate_cyclic_orders(standard_graph(name)))
    theorem = f"{name.lower()}-parity"
    res = _first_failure(theorem, outcomes, seed=seed)
    res.details = {"graph": name, "trials": trials, "vertex_orders": orders}
    return res


def crossing_invariance(trials: int = 100, seed: int = DEFAULT_SEED) -> SweepResult:
    outcomes = []
    flips = 0
    for name in ("K5", "K33"):
        for t, s, d in _random_diagrams(name, trials, seed):
            base = link_parity_sum(d)
            for c in d.crossings:
                flips += 1
                d2 = crossing_change(d, c.id)
                if link_parity_sum(d2) != base:
                    outcomes.append(f"{name} trial {t} (seed {s}): flipping crossing {c.id} changes parity")
                elif crossing_change(d2, c.id) != d:
                    outcomes.append(f"{name} trial {t}: crossing change is not an involution")
                else:
                    outcomes.append(None)
    res = _first_failure("crossing-invariance", outcomes, seed=seed)
    res.details = {"diagrams_per_graph": trials, "crossing_flips": flips}
    return res


def apex_cg(k5_trials: int = DEFAULT_TRIALS, k33_trials: int = 200, seed: int = DEFAULT_SEED) -> SweepResult:
    """cg_sum of apex extensions, plus the reduction from a ball link to a cycle pair."""
    outcomes = []
    for name, trials in (("K5", k5_trials), ("K33", k33_trials)):
        for t, s, d in _random_diagrams(name, trials, seed):
            sp = apex_extension(d)
            if cg_sum(sp) != 1:
                outcomes.append(f"{name} trial {t} (seed {s}): cg_sum is 0")
                continue
            link = find_nonsplit_outer_link(d)
            u, v = link.edge
            through_apex = (u, v, sp.apex)
            if lk2_cycle_cycle(sp, link.cycle, through_apex) != 1:
                outcomes.append(f"{name} trial {t} (seed {s}): apex cycle pair not linked")
                continue
            outcomes.append(None)
    res = _first_failure("apex-cg", outcomes, seed=seed)
    res.details = {"K5_trials": k5_trials, "K33_trials": k33_trials}
    return res


def is_hamiltonian(g: Graph) -> bool:
    if g.order < 3:
        return False
    for o in enumerate_cyclic_orders(g):
        seq = o.sequence
        if all(g.has_edge(seq[i], seq[(i + 1) % len(seq)]) for i in range(len(seq))):
            return True
    return False


def _check_outer_equivalence(g: Graph) -> tuple[str | None, bool]:
    from .classify import classify

    r = classify(g, cross_check=False, diagram_witness=False)
    if r.intrinsically_outer_linked == r.planar or r.outer_flat_and_linkless != r.planar:
        return f"{to_graph6(g)}: flags disagree with planarity", False
    ham = r.planar and is_hamiltonian(g)
    if r.planar:
        d = two_page_linkless_diagram(g)
        if d is None:
            if ham:
                return f"{to_graph6(g)}: Hamiltonian planar graph without a 2-page diagram", ham
            return None, ham
        if validate_diagram(d) or any(lk2_cycle_edge(d, link) for link in cycle_edge_links(g)):
            return f"{to_graph6(g)}: 2-page diagram has a linked cycle-edge pair", ham
    else:
        for o in list(enumerate_cyclic_orders(g))[:6]:
            d = convex_diagram(g, o)
            if find_nonsplit_outer_link(d) is None:
                return f"{to_graph6(g)}: non-planar graph with an unlinked diagram", ham
    return None, ham


def outer_equivalence(n: int = DEFAULT_N, jobs: int = 1) -> SweepResult:
    graphs = enumerate_graphs_upto(n)
    pairs = _map(_check_outer_equivalence, graphs, jobs)
    res = _first_failure("outer-equivalence", (p[0] for p in pairs))
    res.details = {
        "max_order": n,
        "graph_classes": len(graphs),
        "hamiltonian_planar": sum(1 for p in pairs if p[1]),
    }
    return res


THEOREMS = (
    "s1-equivalence",
    "expansion-preservation",
    "k5-parity",
    "k33-parity",
    "crossing-invariance",
    "apex-cg",
    "outer-equivalence",
    "forbidden-minors",
    "linkless-order",
)


def run(theorem: str, n: int | None = None, trials: int | None = None,
        seed: int = DEFAULT_SEED, jobs: int = 1) -> SweepResult:
    if theorem == "s1-equivalence":
        return s1_equivalence(n or DEFAULT_N, jobs)
    if theorem == "forbidden-minors":
        return forbidden_minors(n or DEFAULT_N, jobs)
    if theorem == "outer-equivalence":
        return outer_equivalence(n or DEFAULT_N, jobs)
    if theorem == "linkless-order":
        return linkless_orders(n or 7, jobs)
    if theorem == "expansion-preservation":
        return expansion_preservation()
    if theorem == "k5-parity":
        return outer_link_parity("K5", trials or DEFAULT_TRIALS, seed)
    if theorem == "k33-parity":
        return outer_link_parity("K33", trials or DEFAULT_TRIALS, seed)
    if theorem == "crossing-invariance":
        return crossing_invariance(trials or 100, seed)
    if theorem == "apex-cg":
        k5 = trials or DEFAULT_TRIALS
        return apex_cg(k5, max(1, k5 // 5), seed)
    raise ValueError(f"unknown theorem {theorem!r}")
