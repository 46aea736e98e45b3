"""Disjoint A-B paths by alternating-walk augmentation.

A walk is alternating with respect to a path system when it starts in A off
the system, never reuses an edge, may revisit only system vertices, and
traverses system edges only backwards (towards A), always doing so right
after stepping onto a system path. Flipping the edges of such a walk that
ends in B off the system yields one more path; when no walk exists, the last
reachable vertex on each path forms a separator of matching size.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

from arcconn.errors import GraphError
from arcconn.graph import MultiGraph, components, is_connected

# Walk states at a vertex.
_FREE = 0  # off the system, or at the start
_ENTERED = 1  # just stepped onto a system vertex via a non-system edge
_BACKED = 2  # arrived by traversing a system edge backwards


@dataclass(frozen=True)
class PathSystem:
    """Pairwise disjoint A-B paths; ``edges[i]`` are the edge ids of ``paths[i]``."""

    sources: frozenset[int]
    targets: frozenset[int]
    paths: tuple[tuple[int, ...], ...] = ()
    edges: tuple[tuple[int, ...], ...] = ()

    def __len__(self) -> int:
        return len(self.paths)

    def edge_set(self) -> set[int]:
        return {e for es in self.edges for e in es}

    def vertex_set(self) -> set[int]:
        return {v for p in self.paths for v in p}

    @property
    def independent(self) -> bool:
        """Single distinct source and target: paths may share those two ends."""
        return len(self.sources) == 1 == len(self.targets) and self.sources != self.targets

    def validate(self, g: MultiGraph) -> None:
        if len(self.paths) != len(self.edges):
            raise GraphError("path system needs one edge list per path")
        if self.independent:
            self._validate_independent(g)
            return
        seen: set[int] = set()
        for path, es in zip(self.paths, self.edges):
            if not path or len(es) != len(path) - 1:
                raise GraphError(f"malformed path {path}")
            if path[0] not in self.sources or path[-1] not in self.targets:
                raise GraphError(f"path {path} does not run from A to B")
            ab = self.sources | self.targets
            if any(v in ab for v in path[1:-1]):
                raise GraphError(f"path {path} meets A or B internally")
            if path[0] in self.targets and len(path) > 1 or path[-1] in self.sources and len(path) > 1:
                raise GraphError(f"path {path} meets A or B internally")
            if len(set(path)) != len(path) or seen & set(path):
                raise GraphError("paths must be simple and pairwise disjoint")
            seen |= set(path)
            for (a, b), e in zip(zip(path, path[1:]), es):
                if sorted((a, b)) != list(g.endpoints(e)):
                    raise GraphError(f"edge {e} does not join {a} and {b}")

    def _validate_independent(self, g: MultiGraph) -> None:
        (a,), (b,) = self.sources, self.targets
        inner: set[int] = set()
        used: set[int] = set()
        for path, es in zip(self.paths, self.edges):
            if len(path) < 2 or path[0] != a or path[-1] != b or len(es) != len(path) - 1:
                raise GraphError(f"path {path} does not run from {a} to {b}")
            mid = set(path[1:-1])
            if len(mid) != len(path) - 2 or a in mid or b in mid or inner & mid:
                raise GraphError("paths must be simple and internally disjoint")
            if used & set(es):
                raise GraphError("paths must not share edges")
            inner |= mid
            used |= set(es)
            for (x, y), e in zip(zip(path, path[1:]), es):
                if sorted((x, y)) != list(g.endpoints(e)):
                    raise GraphError(f"edge {e} does not join {x} and {y}")


@dataclass(frozen=True)
class AlternatingWalk:
    vertices: tuple[int, ...]
    edges: tuple[int, ...]
    backwards: tuple[bool, ...]  # True where a system edge is traversed towards A

    def fresh_edges(self) -> set[int]:
        return {e for e, back in zip(self.edges, self.backwards) if not back}


@dataclass(frozen=True)
class Augmented:
    system: PathSystem
    walk: AlternatingWalk


@dataclass(frozen=True)
class Separator:
    vertices: frozenset[int]
    reachable: frozenset[int] = field(default=frozenset(), compare=False)


def _system_index(sys: PathSystem) -> tuple[dict[int, tuple[int, int]], dict[int, int]]:
    """vertex -> (path index, position); system edge -> path index."""
    pos = {}
    owner = {}
    for i, (path, es) in enumerate(zip(sys.paths, sys.edges)):
        for j, v in enumerate(path):
            pos[v] = (i, j)
        for e in es:
            owner[e] = i
    return pos, owner


def find_alternating_walk(g: MultiGraph, sys: PathSystem) -> AlternatingWalk | frozenset[int]:
    """Alternating walk to B off the system using the fewest non-system edges.

    Returns the set of vertices lying on some alternating walk when no walk
    reaches B. Ties are broken towards smaller vertex ids.
    """
    pos, _ = _system_index(sys)
    on_sys = set(pos)
    sys_edges = sys.edge_set()
    starts = sorted(v for v in sys.sources if v not in on_sys)
    dist: dict[tuple[int, int], int] = {}
    prev: dict[tuple[int, int], tuple[tuple[int, int], int, bool] | None] = {}
    dq: deque[tuple[int, tuple[int, int]]] = deque()
    for a in starts:
        dist[(a, _FREE)] = 0
        prev[(a, _FREE)] = None
        dq.append((0, (a, _FREE)))
    settled: set[tuple[int, int]] = set()
    reached: tuple[int, int] | None = None

    while dq:
        d, state = dq.popleft()
        if state in settled or d != dist[state]:
            continue
        settled.add(state)
        v, mode = state
        if mode == _FREE and v in sys.targets and v not in on_sys:
            reached = state
            break
        moves: list[tuple[int, int, int, bool]] = []  # (cost, w, edge, backwards)
        if v in pos:
            i, j = pos[v]
            if j > 0:  # backwards along the system path
                moves.append((0, sys.paths[i][j - 1], sys.edges[i][j - 1], True))
        if mode != _ENTERED:
            for e, w in sorted(g.incidence(v), key=lambda t: (t[1], t[0])):
                if w == v or e in sys_edges:
                    continue
                moves.append((1, w, e, False))
        for cost, w, e, back in moves:
            if back:
                nstate = (w, _BACKED)
            elif w in on_sys:
                nstate = (w, _ENTERED)
            else:
                nstate = (w, _FREE)
            nd = d + cost
            if nstate not in dist or nd < dist[nstate]:
                dist[nstate] = nd
                prev[nstate] = (state, e, back)
                if cost:
                    dq.append((nd, nstate))
                else:
                    dq.appendleft((nd, nstate))

    if reached is None:
        return frozenset(v for v, _ in settled)
    verts = [reached[0]]
    es: list[int] = []
    backs: list[bool] = []
    cur = reached
    while prev[cur] is not None:
        pstate, e, back = prev[cur]
        es.append(e)
        backs.append(back)
        verts.append(pstate[0])
        cur = pstate
    verts.reverse()
    es.reverse()
    backs.reverse()
    return AlternatingWalk(tuple(verts), tuple(es), tuple(backs))


def _paths_from_edges(
    g: MultiGraph, edge_ids: set[int], sources: frozenset[int], targets: frozenset[int],
    trivial: Iterable[int],
) -> tuple[tuple[tuple[int, ...], ...], tuple[tuple[int, ...], ...]]:
    inc: dict[int, list[int]] = {}
    for e in edge_ids:
        u, v = g.endpoints(e)
        inc.setdefault(u, []).append(e)
        inc.setdefault(v, []).append(e)
    paths = []
    edges = []
    used: set[int] = set()
    for a in sorted(sources):
        if a in inc and len(inc[a]) == 1 and inc[a][0] not in used:
            path = [a]
            pe: list[int] = []
            e = inc[a][0]
            x = a
            while True:
                used.add(e)
                u, v = g.endpoints(e)
                x = v if u == x else u
                path.append(x)
                pe.append(e)
                nxt = [f for f in inc[x] if f not in used]
                if not nxt:
                    break
                e = nxt[0]
            paths.append(tuple(path))
            edges.append(tuple(pe))
    for t in trivial:
        paths.append((t,))
        edges.append(())
    if used != edge_ids:
        raise GraphError("symmetric difference left a cycle; walk was not minimal")
    order = sorted(range(len(paths)), key=lambda k: paths[k])
    return tuple(paths[k] for k in order), tuple(edges[k] for k in order)


def augment(g: MultiGraph, sys: PathSystem) -> Augmented | Separator:
    """One more disjoint A-B path, or a separator on the system of equal size.

    With a single source a and a single target b != a the paths only need to
    be independent (internally disjoint). Direct a-b edges are used first;
    after that the search runs on N(a)-N(b) paths in g - {a, b}, and the walk
    returned lives there. A path that re-enters N(a) or N(b) is shortened to
    its final stretch first. The separator then contains a when a direct edge
    exists, so its size matches only for simple graphs.
    """
    sys.validate(g)
    if sys.independent:
        return _augment_independent(g, sys)
    return _augment_sets(g, sys)


def _augment_sets(g: MultiGraph, sys: PathSystem) -> Augmented | Separator:
    found = find_alternating_walk(g, sys)
    if isinstance(found, frozenset):
        return Separator(_separator_from_reachable(sys, found), found)
    walk = found
    new_edges = sys.edge_set() ^ set(walk.edges)
    trivial = [p[0] for p in sys.paths if len(p) == 1]
    if not walk.edges:
        trivial.append(walk.vertices[0])
    paths, edges = _paths_from_edges(g, new_edges, sys.sources, sys.targets, trivial)
    new = PathSystem(sys.sources, sys.targets, paths, edges)
    if len(new) != len(sys) + 1:
        raise GraphError("augmentation did not add exactly one path")
    return Augmented(new, walk)


def _augment_independent(g: MultiGraph, sys: PathSystem) -> Augmented | Separator:
    (a,), (b,) = sys.sources, sys.targets
    lo, hi = min(a, b), max(a, b)
    direct = [e for e, pair in g.edges.items() if pair == (lo, hi)]
    taken = {es[0] for es in sys.edges if len(es) == 1}
    free = [e for e in direct if e not in taken]
    long = [(p, es) for p, es in zip(sys.paths, sys.edges) if len(es) > 1]
    if free:
        paths = sorted([(p, es) for p, es in zip(sys.paths, sys.edges)] + [((a, b), (free[0],))])
        walk = AlternatingWalk((a, b), (free[0],), (False,))
        return Augmented(PathSystem(sys.sources, sys.targets, tuple(p for p, _ in paths),
                                    tuple(es for _, es in paths)), walk)
    na, nb = frozenset(g.neighbors(a) - {b}), frozenset(g.neighbors(b) - {a})
    rest = g.induced(x for x in g.vertices if x not in (a, b))
    first_edge: dict[int, int] = {}
    last_edge: dict[int, int] = {}
    inner_paths, inner_edges = [], []
    for p, es in long:
        i = max(k for k in range(1, len(p) - 1) if p[k] in na)
        j = min(k for k in range(i, len(p) - 1) if p[k] in nb)
        inner_paths.append(p[i:j + 1])
        inner_edges.append(es[i:j])
        first_edge[p[i]] = es[i - 1] if i == 1 else min(e for e, w in g.incidence(a) if w == p[i])
        last_edge[p[j]] = es[j] if j == len(p) - 2 else min(e for e, w in g.incidence(b) if w == p[j])
    sep_extra = {a} if direct else set()
    if not na or not nb:
        return Separator(frozenset(sep_extra), frozenset())
    inner = PathSystem(na, nb, tuple(inner_paths), tuple(inner_edges))
    step = _augment_sets(rest, inner)
    if isinstance(step, Separator):
        return Separator(step.vertices | sep_extra, step.reachable)
    paths = [((a, b), (e,)) for e in sorted(taken)]
    for p, es in zip(step.system.paths, step.system.edges):
        fe = first_edge.get(p[0], min(e for e, w in g.incidence(a) if w == p[0]))
        le = last_edge.get(p[-1], min(e for e, w in g.incidence(b) if w == p[-1]))
        paths.append(((a, *p, b), (fe, *es, le)))
    paths.sort()
    new = PathSystem(sys.sources, sys.targets, tuple(p for p, _ in paths),
                     tuple(es for _, es in paths))
    return Augmented(new, step.walk)


def _separator_from_reachable(sys: PathSystem, reachable: frozenset[int]) -> frozenset[int]:
    sep = set()
    for path in sys.paths:
        on = [v for v in path if v in reachable]
        sep.add(on[-1] if on else path[0])
    return frozenset(sep)


def empty_system(sources: Iterable[int], targets: Iterable[int]) -> PathSystem:
    return PathSystem(frozenset(sources), frozenset(targets))


def max_disjoint_paths(
    g: MultiGraph, sources: Iterable[int], targets: Iterable[int]
) -> tuple[PathSystem, Separator]:
    """Maximum set of disjoint A-B paths together with a separator of the same size.

    Distinct singletons A = {a}, B = {b} ask for independent a-b paths
    instead; see :func:`augment`.
    """
    sys = empty_system(sources, targets)
    if not sys.sources or not sys.targets:
        raise GraphError("A and B must be non-empty")
    for v in sys.sources | sys.targets:
        if v not in g:
            raise GraphError(f"unknown vertex {v}")
    return _saturate(g, sys, augment)


def _saturate(g: MultiGraph, sys: PathSystem, step_fn) -> tuple[PathSystem, Separator]:
    while True:
        step = step_fn(g, sys)
        if isinstance(step, Separator):
            return sys, step
        sys = step.system


def independent_paths(g: MultiGraph, a: int, b: int) -> tuple[PathSystem, frozenset[int]]:
    """Internally disjoint a-b paths and a vertex set meeting every a-b path.

    Direct a-b edges are paths of their own; the remaining paths come from
    disjoint N(a)-N(b) paths in g - {a, b}, whose separator avoids a and b.
    The returned separator gains ``a`` only when a direct edge exists.
    """
    if a == b:
        raise GraphError("independent paths need distinct endpoints")
    for v in (a, b):
        if v not in g:
            raise GraphError(f"unknown vertex {v}")
    paths: list[tuple[int, ...]] = []
    edges: list[tuple[int, ...]] = []
    lo, hi = min(a, b), max(a, b)
    for e, pair in g.edges.items():
        if pair == (lo, hi):
            paths.append((a, b))
            edges.append((e,))
    rest = g.induced(x for x in g.vertices if x not in (a, b))
    na, nb = g.neighbors(a) - {b}, g.neighbors(b) - {a}
    sep: set[int] = {a} if paths else set()
    if na and nb:
        inner, cut = _saturate(rest, empty_system(na, nb), _augment_sets)
        sep |= cut.vertices
        for path, es in zip(inner.paths, inner.edges):
            first = min(e for e, w in g.incidence(a) if w == path[0])
            last = min(e for e, w in g.incidence(b) if w == path[-1])
            paths.append((a, *path, b))
            edges.append((first, *es, last))
    return PathSystem(frozenset({a}), frozenset({b}), tuple(paths), tuple(edges)), frozenset(sep)


def local_connectivity(g: MultiGraph, u: int, v: int) -> int:
    """Number of independent u-v paths."""
    return len(independent_paths(g, u, v)[0])


def is_k_connected(g: MultiGraph, k: int) -> bool:
    """Simple, more than ``k`` vertices, and no fewer than ``k`` vertices disconnect it."""
    if k < 1:
        raise GraphError("k must be positive")
    if not g.is_simple() or g.num_vertices <= k or not is_connected(g):
        return False
    for u, v in itertools.combinations(g.vertices, 2):
        if v in g.neighbors(u):
            continue
        if local_connectivity(g, u, v) < k:
            return False
    return True


def is_cyclically_connected(g: MultiGraph) -> bool:
    """Every two points of ``|g|`` lie on a common circle."""
    from arcconn.decompose import blocks

    if not g.num_edges or len(components(g)) != 1:
        return False
    dec = blocks(g)
    return len(dec.blocks) == 1 and not dec.is_bridge(0)
