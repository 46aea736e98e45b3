"""Ground truth for n-ac and n-cc by exhaustive search.

Only points on open edges need checking, and only how many sit on each
edge, so a configuration of n points is a multiset of n edge ids. Each one
is realised by subdividing, and an arc through the points is then a simple
path through the new vertices (endpoints may be taken among them).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

from arcconn.errors import BudgetExceeded, GraphError
from arcconn.graph import MultiGraph, PointConfig, Subdivision, automorphisms, subdivide

DEFAULT_BUDGET = 5_000_000


class Budget:
    """Node-expansion counter shared by one oracle call."""

    def __init__(self, cap: int | None = DEFAULT_BUDGET):
        self.cap = cap
        self.used = 0

    def spend(self, k: int = 1) -> None:
        self.used += k
        if self.cap is not None and self.used > self.cap:
            raise BudgetExceeded(self.cap, "oracle")


def _as_budget(budget: Budget | int | None) -> Budget:
    if isinstance(budget, Budget):
        return budget
    return Budget(budget)


@dataclass(frozen=True)
class WitnessPath:
    vertices: tuple[int, ...]
    marked: frozenset[int]


@dataclass(frozen=True)
class OracleResult:
    answer: bool
    failing: PointConfig | None = None
    checked: int = 0  # distinct configurations examined

    def __bool__(self) -> bool:
        return self.answer


def _simple_adjacency(g: MultiGraph) -> dict[int, list[int]]:
    return {v: sorted(g.neighbors(v)) for v in g.vertices}


def _reaches_all(adj, start: int, blocked: set[int], targets: set[int]) -> bool:
    if not targets:
        return True
    seen = {start}
    stack = [start]
    left = len(targets)
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen and y not in blocked:
                seen.add(y)
                if y in targets:
                    left -= 1
                    if not left:
                        return True
                stack.append(y)
    return False


def path_through_vertices(
    g: MultiGraph, marked: Iterable[int], budget: Budget | int | None = None
) -> WitnessPath | None:
    """A simple path containing every marked vertex, with marked endpoints."""
    budget = _as_budget(budget)
    marked = frozenset(marked)
    for v in marked:
        if v not in g:
            raise GraphError(f"unknown vertex {v}")
    if not marked:
        return WitnessPath((), marked)
    adj = _simple_adjacency(g)
    if len(marked) == 1:
        return WitnessPath(tuple(marked), marked)

    path: list[int] = []
    on_path: set[int] = set()

    def extend(todo: set[int]) -> bool:
        budget.spend()
        end = path[-1]
        if not _reaches_all(adj, end, on_path, todo):
            return False
        # a pending mark with no free neighbour besides the path end must be
        # the final vertex; two such marks cannot both be finished
        stuck = 0
        for m in todo:
            free = sum(1 for y in adj[m] if y not in on_path)
            if free == 0 and end not in adj[m]:
                return False
            if free + (end in adj[m]) <= 1:
                stuck += 1
        if stuck > 1:
            return False
        for y in adj[end]:
            if y in on_path:
                continue
            path.append(y)
            on_path.add(y)
            hit = y in todo
            if hit:
                todo.discard(y)
                if not todo:
                    return True
            if extend(todo):
                return True
            if hit:
                todo.add(y)
            path.pop()
            on_path.discard(y)
        return False

    for s in sorted(marked):
        path[:] = [s]
        on_path.clear()
        on_path.add(s)
        if extend(set(marked) - {s}):
            return WitnessPath(tuple(path), marked)
    return None


def cycle_through_vertices(
    g: MultiGraph, marked: Iterable[int], budget: Budget | int | None = None
) -> tuple[int, ...] | None:
    """Edge ids of a cycle (loop, parallel pair, or longer) containing every marked vertex."""
    budget = _as_budget(budget)
    marked = frozenset(marked)
    if not marked:
        raise GraphError("need at least one marked vertex")
    for e, (u, v) in g.edges.items():
        if u == v and marked <= {u}:
            return (e,)
    by_pair: dict[tuple[int, int], list[int]] = {}
    for e, pair in g.edges.items():
        if pair[0] != pair[1]:
            by_pair.setdefault(pair, []).append(e)
    for pair, es in by_pair.items():
        if len(es) >= 2 and marked <= set(pair):
            return tuple(es[:2])
    adj = _simple_adjacency(g)
    s = min(marked)
    path = [s]
    on_path = {s}

    def extend(todo: set[int]) -> bool:
        budget.spend()
        end = path[-1]
        if len(path) >= 3 and not todo and s in adj[end]:
            return True
        if not _reaches_all(adj, end, on_path, todo):
            return False
        for y in adj[end]:
            if y in on_path:
                continue
            path.append(y)
            on_path.add(y)
            hit = y in todo
            todo.discard(y)
            if extend(todo):
                return True
            if hit:
                todo.add(y)
            path.pop()
            on_path.discard(y)
        return False

    if not extend(set(marked) - {s}):
        return None
    cyc = path + [s]
    return tuple(min(by_pair[tuple(sorted(p))]) for p in zip(cyc, cyc[1:]))


# -- configurations ---------------------------------------------------------------


def configurations(g: MultiGraph, n: int) -> Iterator[PointConfig]:
    """All n-point configurations on open edges, lexicographic in sorted edge ids."""
    for combo in itertools.combinations_with_replacement(sorted(g.edges), n):
        yield PointConfig.from_edges(combo)


class _ConfigSymmetry:
    """Canonical keys for configurations up to automorphisms of ``g``.

    Parallel edges are interchangeable, and every vertex automorphism that
    preserves multiplicities extends to a self-homeomorphism of ``|g|``.
    """

    def __init__(self, g: MultiGraph, max_autos: int = 2000):
        self.classes: dict[int, tuple[int, int]] = dict(g.edges)
        autos = []
        for sigma in _limited(automorphisms_iter(g), max_autos):
            autos.append(sigma)
        self.autos = autos or [{v: v for v in g.vertices}]

    def key(self, cfg: PointConfig) -> tuple:
        per_pair: dict[tuple[int, int], list[int]] = {}
        for e, k in cfg.counts.items():
            per_pair.setdefault(self.classes[e], []).append(k)
        best = None
        for sigma in self.autos:
            items = []
            for (u, v), ks in per_pair.items():
                a, b = sigma[u], sigma[v]
                items.append(((a, b) if a <= b else (b, a), tuple(sorted(ks))))
            k = tuple(sorted(items))
            if best is None or k < best:
                best = k
        return best


def automorphisms_iter(g: MultiGraph):
    from arcconn.graph import isomorphisms

    return isomorphisms(g, g)


def _limited(it, cap: int):
    return itertools.islice(it, cap)


def config_has_arc(
    g: MultiGraph, cfg: PointConfig, budget: Budget | int | None = None
) -> tuple[Subdivision, WitnessPath | None]:
    sub = subdivide(g, cfg)
    return sub, path_through_vertices(sub.graph, sub.marked, budget)


def config_has_circle(
    g: MultiGraph, cfg: PointConfig, budget: Budget | int | None = None
) -> bool:
    sub = subdivide(g, cfg)
    return cycle_through_vertices(sub.graph, sub.marked, budget) is not None


def _require_edges(g: MultiGraph) -> None:
    if not g.num_edges:
        raise GraphError("an edgeless graph contains no arc")


def oracle_n_ac(
    g: MultiGraph,
    n: int,
    budget: Budget | int | None = DEFAULT_BUDGET,
    on_witness: Callable[[MultiGraph, PointConfig, Subdivision, WitnessPath], None] | None = None,
    symmetry: bool = True,
) -> OracleResult:
    """Whether every n points of ``|g|`` lie on a common arc.

    On failure the lexicographically first failing configuration is returned.
    ``on_witness`` sees every arc found (used by the witness audits).
    """
    _require_edges(g)
    if n < 1:
        raise GraphError("n must be positive")
    budget = _as_budget(budget)
    sym = _ConfigSymmetry(g) if symmetry else None
    cache: dict[tuple, bool] = {}
    for cfg in configurations(g, n):
        key = sym.key(cfg) if sym else cfg.as_tuple()
        if key not in cache:
            sub, wit = config_has_arc(g, cfg, budget)
            cache[key] = wit is not None
            if wit is not None and on_witness is not None:
                on_witness(g, cfg, sub, wit)
        if not cache[key]:
            return OracleResult(False, cfg, len(cache))
    return OracleResult(True, None, len(cache))


def oracle_n_cc(
    g: MultiGraph, n: int, budget: Budget | int | None = DEFAULT_BUDGET, symmetry: bool = True
) -> OracleResult:
    """Whether every n points of ``|g|`` lie on a common circle."""
    _require_edges(g)
    if n < 1:
        raise GraphError("n must be positive")
    budget = _as_budget(budget)
    sym = _ConfigSymmetry(g) if symmetry else None
    cache: dict[tuple, bool] = {}
    for cfg in configurations(g, n):
        key = sym.key(cfg) if sym else cfg.as_tuple()
        if key not in cache:
            cache[key] = config_has_circle(g, cfg, budget)
        if not cache[key]:
            return OracleResult(False, cfg, len(cache))
    return OracleResult(True, None, len(cache))


def oracle_max_ac(g: MultiGraph, limit: int = 7, budget: Budget | int | None = DEFAULT_BUDGET,
                  on_witness=None) -> int:
    """Largest n <= limit with ``g`` n-ac (monotonicity lets us stop at the first failure)."""
    budget = _as_budget(budget)
    best = 0
    for n in range(1, limit + 1):
        if not oracle_n_ac(g, n, budget, on_witness):
            break
        best = n
    return best


# -- cycles and theta curves --------------------------------------------------------


def _simple_cycles(g: MultiGraph) -> Iterator[frozenset[int]]:
    """Edge sets of all cycles, including loops and parallel pairs."""
    for e, (u, v) in g.edges.items():
        if u == v:
            yield frozenset({e})
    by_pair: dict[tuple[int, int], list[int]] = {}
    for e, pair in g.edges.items():
        if pair[0] != pair[1]:
            by_pair.setdefault(pair, []).append(e)
    for es in by_pair.values():
        for a, b in itertools.combinations(es, 2):
            yield frozenset({a, b})
    adj = _simple_adjacency(g)
    for s in g.vertices:
        stack = [(s, [s])]
        while stack:
            x, path = stack.pop()
            for y in adj[x]:
                if y == s and len(path) >= 3 and path[1] < path[-1]:
                    cyc = path + [s]
                    choices = [by_pair[tuple(sorted(p))] for p in zip(cyc, cyc[1:])]
                    for pick in itertools.product(*choices):
                        yield frozenset(pick)
                elif y > s and y not in path:
                    stack.append((y, path + [y]))


def _ears(g: MultiGraph, cycle: frozenset[int]) -> Iterator[frozenset[int]]:
    """Paths joining two distinct cycle vertices, internally and edge-disjoint from the cycle."""
    cverts = {x for e in cycle for x in g.endpoints(e)}
    for x in sorted(cverts):
        stack: list[tuple[int, list[int], list[int]]] = [(x, [x], [])]
        while stack:
            v, path, es = stack.pop()
            for e, w in g.incidence(v):
                if e in cycle or e in es or w == v:
                    continue
                if w in cverts:
                    if w > x:
                        yield frozenset(es + [e])
                elif w not in path:
                    stack.append((w, path + [w], es + [e]))


def cycle_and_theta_subgraphs(g: MultiGraph) -> tuple[set[frozenset[int]], set[frozenset[int]]]:
    """Every cycle and every theta subgraph of ``g``, as edge sets."""
    cycles = set(_simple_cycles(g))
    thetas = set()
    for c in cycles:
        if len(c) == 1:
            continue  # a loop meets the rest of the graph in one vertex only
        for ear in _ears(g, c):
            thetas.add(c | ear)
    return cycles, thetas


def exists_cycle_or_theta_through(
    g: MultiGraph, marked: Iterable[int]
) -> frozenset[int] | None:
    """Edge set of a circle or theta subgraph containing all marked vertices, if any."""
    marked = frozenset(marked)
    cycles, thetas = cycle_and_theta_subgraphs(g)
    for family in (cycles, thetas):
        for es in sorted(family, key=lambda s: (len(s), sorted(s))):
            verts = {x for e in es for x in g.endpoints(e)}
            if marked <= verts:
                return es
    return None


# -- witness audits ------------------------------------------------------------------


def _nearest_mark(sub: Subdivision, e: int, v: int) -> int | None:
    u, inner, w = sub.chains.get(e, (None, (), None))
    if not inner:
        return None
    return inner[0] if u == v else inner[-1]


def tripod_violations(g: MultiGraph, sub: Subdivision, wit: WitnessPath) -> list[tuple]:
    """Triples of marked edges at a branch vertex whose arc misses the tripod constraint.

    For marks on three distinct non-loop edges at v, the arc must pass
    through v and end at one of the three marks nearest v.
    """
    path = wit.vertices
    if len(path) < 2:
        return []
    inner = set(path[1:-1])
    ends = {path[0], path[-1]}
    bad = []
    for v in g.vertices:
        near = []
        for e, w in g.incidence(v):
            if w == v:
                continue
            m = _nearest_mark(sub, e, v)
            if m is not None:
                near.append(m)
        if len(near) < 3:
            continue
        for trio in itertools.combinations(near, 3):
            if v not in inner or not ends & set(trio):
                bad.append((v, trio))
    return bad


def _edge_cuts(g: MultiGraph) -> list[tuple[frozenset[int], frozenset[int]]]:
    verts = list(g.vertices)
    cuts = []
    first, rest = verts[0], verts[1:]
    for r in range(len(rest)):
        for extra in itertools.combinations(rest, r):
            side = frozenset((first, *extra))
            cut = frozenset(e for e, (u, v) in g.edges.items() if (u in side) != (v in side))
            if cut:
                cuts.append((side, cut))
    return cuts


def parity_violations(
    g: MultiGraph, sub: Subdivision, wit: WitnessPath,
    cuts: list[tuple[frozenset[int], frozenset[int]]] | None = None,
) -> list[tuple]:
    """Edge cuts whose marks the arc covers but whose end directions have the wrong parity.

    With both ends on marks of distinct cut edges, the arc leaves its two
    ends towards the same side iff the cut has an even number of edges.
    """
    path = wit.vertices
    if len(path) < 2:
        return []
    where: dict[int, tuple[int, int]] = {}  # mark -> (edge, index along chain)
    for e, (_, inner, _) in sub.chains.items():
        for i, m in enumerate(inner):
            where[m] = (e, i)
    p, q = path[0], path[-1]
    if p not in where or q not in where:
        return []
    ep, eq = where[p][0], where[q][0]
    if ep == eq:
        return []
    covered = {where[m][0] for m in path if m in where}

    def heads_to(mark: int, nxt: int) -> int:
        e, i = where[mark]
        u, inner, v = sub.chains[e]
        seq = (u, *inner, v)
        return u if seq.index(nxt) < i + 1 else v

    end_p = heads_to(p, path[1])
    end_q = heads_to(q, path[-2])
    if cuts is None:
        cuts = _edge_cuts(g)
    bad = []
    for side, cut in cuts:
        if ep not in cut or eq not in cut or not cut <= covered:
            continue
        same = (end_p in side) == (end_q in side)
        if same != (len(cut) % 2 == 0):
            bad.append((side, cut))
    return bad
