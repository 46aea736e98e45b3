"""Finite multigraphs as combinatorial models of 1-complexes.

Loops and parallel edges are first-class: suppressing degree-2 vertices
produces them, and several of the curves the classifiers care about
(theta, figure-eight) only have multigraph normal forms.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Hashable, Iterable, Iterator, Mapping

from arcconn.errors import GraphError

Edge = tuple[int, int]


class MultiGraph:
    """Immutable undirected multigraph with integer vertex and edge ids.

    ``edges`` maps an edge id to its endpoint pair ``(u, v)`` with ``u <= v``;
    ``u == v`` is a loop. Ids are dense at construction time but derived
    graphs never reuse an id that was deleted along the way.
    """

    __slots__ = ("_vertices", "_edges", "_labels", "_inc")

    def __init__(
        self,
        vertices: Iterable[int] = (),
        edges: Mapping[int, Edge] | Iterable[Edge] = (),
        labels: Mapping[int, str] | None = None,
    ):
        vset = set(vertices)
        if isinstance(edges, Mapping):
            items = list(edges.items())
        else:
            items = list(enumerate(edges))
        emap: dict[int, Edge] = {}
        for eid, (u, v) in items:
            vset.add(u)
            vset.add(v)
            emap[int(eid)] = (u, v) if u <= v else (v, u)
        self._vertices = tuple(sorted(vset))
        self._edges = dict(sorted(emap.items()))
        self._labels = dict(labels) if labels else {}
        inc: dict[int, list[tuple[int, int]]] = {v: [] for v in self._vertices}
        for eid, (u, v) in self._edges.items():
            inc[u].append((eid, v))
            inc[v].append((eid, u))
        self._inc = {v: tuple(lst) for v, lst in inc.items()}

    @classmethod
    def from_edge_list(
        cls, pairs: Iterable[tuple[Hashable, Hashable]], isolated: Iterable[Hashable] = ()
    ) -> MultiGraph:
        """Build from arbitrary hashable vertex names, numbering them in first-seen order."""
        ids: dict[Hashable, int] = {}

        def vid(name: Hashable) -> int:
            if name not in ids:
                ids[name] = len(ids)
            return ids[name]

        edges = [(vid(a), vid(b)) for a, b in pairs]
        for name in isolated:
            vid(name)
        labels = {i: str(name) for name, i in ids.items()}
        return cls(ids.values(), edges, labels)

    # -- accessors ---------------------------------------------------------

    @property
    def vertices(self) -> tuple[int, ...]:
        return self._vertices

    @property
    def edges(self) -> Mapping[int, Edge]:
        return MappingProxyType(self._edges)

    @property
    def labels(self) -> Mapping[int, str]:
        return MappingProxyType(self._labels)

    @property
    def num_vertices(self) -> int:
        return len(self._vertices)

    @property
    def num_edges(self) -> int:
        return len(self._edges)

    def __contains__(self, v: object) -> bool:
        return v in self._inc

    def label(self, v: int) -> str:
        return self._labels.get(v, str(v))

    def endpoints(self, e: int) -> Edge:
        try:
            return self._edges[e]
        except KeyError:
            raise GraphError(f"unknown edge {e}") from None

    def incidence(self, v: int) -> tuple[tuple[int, int], ...]:
        """``(edge id, other endpoint)`` per edge-end at ``v``; a loop appears twice."""
        try:
            return self._inc[v]
        except KeyError:
            raise GraphError(f"unknown vertex {v}") from None

    def neighbors(self, v: int) -> set[int]:
        return {w for _, w in self.incidence(v) if w != v}

    def multiplicity(self, u: int, v: int) -> int:
        key = (u, v) if u <= v else (v, u)
        return sum(1 for pair in self._edges.values() if pair == key)

    def loops(self) -> list[int]:
        return [e for e, (u, v) in self._edges.items() if u == v]

    def is_simple(self) -> bool:
        pairs = list(self._edges.values())
        return all(u != v for u, v in pairs) and len(set(pairs)) == len(pairs)

    def next_vertex_id(self) -> int:
        return self._vertices[-1] + 1 if self._vertices else 0

    def next_edge_id(self) -> int:
        return max(self._edges) + 1 if self._edges else 0

    # -- derived graphs ----------------------------------------------------

    def edge_subgraph(self, eids: Iterable[int]) -> MultiGraph:
        """Subgraph spanned by the given edges (only their endpoints kept)."""
        sub = {e: self.endpoints(e) for e in eids}
        return MultiGraph((), sub, self._labels)

    def induced(self, keep: Iterable[int]) -> MultiGraph:
        keep = set(keep)
        sub = {e: (u, v) for e, (u, v) in self._edges.items() if u in keep and v in keep}
        return MultiGraph(keep, sub, self._labels)

    def without_edges(self, eids: Iterable[int]) -> MultiGraph:
        drop = set(eids)
        sub = {e: p for e, p in self._edges.items() if e not in drop}
        return MultiGraph(self._vertices, sub, self._labels)

    def adjacency_lists(self) -> dict[int, list[int]]:
        """Simple adjacency (loops dropped, parallel edges collapsed)."""
        return {v: sorted(self.neighbors(v)) for v in self._vertices}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultiGraph):
            return NotImplemented
        return self._vertices == other._vertices and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._vertices, tuple(self._edges.items())))

    def __repr__(self) -> str:
        return f"MultiGraph(|V|={self.num_vertices}, |E|={self.num_edges})"


# -- point configurations --------------------------------------------------


@dataclass(frozen=True)
class PointConfig:
    """Marked points on open edges, recorded as a count per edge."""

    counts: Mapping[int, int]
    total: int = field(init=False)

    def __post_init__(self):
        clean = {int(e): int(k) for e, k in self.counts.items() if k}
        if any(k < 0 for k in clean.values()):
            raise GraphError("point counts must be non-negative")
        object.__setattr__(self, "counts", MappingProxyType(dict(sorted(clean.items()))))
        object.__setattr__(self, "total", sum(clean.values()))
        if self.total < 1:
            raise GraphError("a point configuration needs at least one point")

    @classmethod
    def from_edges(cls, eids: Iterable[int]) -> PointConfig:
        return cls(Counter(eids))

    def validate(self, g: MultiGraph) -> None:
        for e in self.counts:
            if e not in g.edges:
                raise GraphError(f"point configuration references unknown edge {e}")

    def as_tuple(self) -> tuple[int, ...]:
        """Sorted multiset of edge ids, one entry per point."""
        return tuple(e for e, k in self.counts.items() for _ in range(k))


@dataclass(frozen=True)
class Subdivision:
    graph: MultiGraph
    marked: frozenset[int]
    # original edge id -> (u, inserted vertices from u to v, v)
    chains: Mapping[int, tuple[int, tuple[int, ...], int]]


def degree(g: MultiGraph, v: int) -> int:
    return len(g.incidence(v))


def components(g: MultiGraph) -> list[frozenset[int]]:
    """Connected components as vertex sets, ordered by smallest vertex."""
    seen: set[int] = set()
    out = []
    for s in g.vertices:
        if s in seen:
            continue
        comp = {s}
        stack = [s]
        while stack:
            x = stack.pop()
            for _, y in g.incidence(x):
                if y not in comp:
                    comp.add(y)
                    stack.append(y)
        seen |= comp
        out.append(frozenset(comp))
    return out


def is_connected(g: MultiGraph) -> bool:
    return len(components(g)) == 1


def subdivide(g: MultiGraph, cfg: PointConfig) -> Subdivision:
    """Insert ``cfg.counts[e]`` new degree-2 vertices along each edge ``e``."""
    cfg.validate(g)
    edges = dict(g.edges)
    nv = g.next_vertex_id()
    ne = g.next_edge_id()
    marked = []
    chains = {}
    for e, k in cfg.counts.items():
        u, v = edges.pop(e)
        inner = tuple(range(nv, nv + k))
        nv += k
        marked.extend(inner)
        walk = (u, *inner, v)
        for a, b in zip(walk, walk[1:]):
            edges[ne] = (a, b)
            ne += 1
        chains[e] = (u, inner, v)
    return Subdivision(MultiGraph(g.vertices, edges, g.labels), frozenset(marked), chains)


def subdivide_all(g: MultiGraph, times: int = 1) -> Subdivision:
    return subdivide(g, PointConfig({e: times for e in g.edges}))


def make_simple(g: MultiGraph) -> MultiGraph:
    """Smallest subdivision without loops or parallel edges (ids of ``g`` kept)."""
    counts: dict[int, int] = {}
    seen: set[Edge] = set()
    for e, (u, v) in g.edges.items():
        if u == v:
            counts[e] = 2
        elif (u, v) in seen:
            counts[e] = 1
        else:
            seen.add((u, v))
    if not counts:
        return g
    return subdivide(g, PointConfig(counts)).graph


def suppress_degree2(g: MultiGraph) -> tuple[MultiGraph, dict[int, int]]:
    """Remove every degree-2 vertex by merging its two edges.

    A component that is a cycle keeps one vertex carrying a loop. Returns
    the suppressed graph and a map from each edge of ``g`` to the edge of
    the result that contains it.
    """
    edges = dict(g.edges)
    inc: dict[int, set[int]] = {v: set() for v in g.vertices}
    for e, (u, v) in edges.items():
        inc[u].add(e)
        inc[v].add(e)
    merged_into: dict[int, int] = {}
    ne = g.next_edge_id()
    alive = set(g.vertices)

    def deg(x: int) -> int:
        return sum(2 if edges[e][0] == edges[e][1] else 1 for e in inc[x])

    work = sorted(v for v in alive if deg(v) == 2)
    while work:
        x = work.pop(0)
        if x not in alive or deg(x) != 2 or len(inc[x]) != 2:
            continue
        e1, e2 = sorted(inc[x])
        a = edges[e1][0] if edges[e1][1] == x else edges[e1][1]
        b = edges[e2][0] if edges[e2][1] == x else edges[e2][1]
        for e in (e1, e2):
            for end in set(edges.pop(e)):
                inc[end].discard(e)
        new = ne
        ne += 1
        edges[new] = (a, b) if a <= b else (b, a)
        inc[a].add(new)
        inc[b].add(new)
        merged_into[e1] = new
        merged_into[e2] = new
        alive.discard(x)
        del inc[x]
        for y in (a, b):
            if deg(y) == 2 and y not in work:
                work.append(y)
                work.sort()

    def resolve(e: int) -> int:
        while e in merged_into:
            e = merged_into[e]
        return e

    provenance = {e: resolve(e) for e in g.edges}
    return MultiGraph(alive, edges, g.labels), provenance


def puncture_count(g: MultiGraph, s: Iterable[int]) -> int:
    """Components of the space ``|g|`` after deleting the vertices in ``s``.

    Edge stubs stay attached to their surviving endpoint; an edge whose
    endpoints are both deleted (including a loop at a deleted vertex)
    becomes an open arc of its own.
    """
    s = set(s)
    for v in s:
        if v not in g:
            raise GraphError(f"unknown vertex {v}")
    parent = {v: v for v in g.vertices if v not in s}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    floating = 0
    for u, v in g.edges.values():
        if u in s and v in s:
            floating += 1
        elif u not in s and v not in s:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
    return floating + sum(1 for v in parent if find(v) == v)


# -- isomorphism -------------------------------------------------------------


def _multiplicity_table(g: MultiGraph) -> dict[int, Counter]:
    table: dict[int, Counter] = {v: Counter() for v in g.vertices}
    for u, v in g.edges.values():
        table[u][v] += 1
        if u != v:
            table[v][u] += 1
    return table


def _vertex_invariant(g: MultiGraph, table: dict[int, Counter], v: int) -> tuple:
    nbr_degrees = sorted(
        (degree(g, w), k) for w, k in table[v].items() if w != v
    )
    return (degree(g, v), table[v][v], tuple(nbr_degrees))


def isomorphisms(g: MultiGraph, h: MultiGraph) -> Iterator[dict[int, int]]:
    """Yield every vertex bijection g -> h preserving edge multiplicities."""
    if (g.num_vertices, g.num_edges) != (h.num_vertices, h.num_edges):
        return
    tg, th = _multiplicity_table(g), _multiplicity_table(h)
    ig = {v: _vertex_invariant(g, tg, v) for v in g.vertices}
    ih = {v: _vertex_invariant(h, th, v) for v in h.vertices}
    if Counter(ig.values()) != Counter(ih.values()):
        return
    candidates = {v: [w for w in h.vertices if ih[w] == ig[v]] for v in g.vertices}
    # Match constrained vertices first, then grow along edges.
    order: list[int] = []
    remaining = set(g.vertices)
    while remaining:
        start = min(remaining, key=lambda v: (len(candidates[v]), v))
        frontier = [start]
        while frontier:
            frontier.sort(key=lambda v: (len(candidates[v]), v))
            v = frontier.pop(0)
            if v not in remaining:
                continue
            remaining.discard(v)
            order.append(v)
            frontier.extend(w for w in tg[v] if w in remaining)
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def extend(i: int) -> Iterator[dict[int, int]]:
        if i == len(order):
            yield dict(mapping)
            return
        v = order[i]
        for w in candidates[v]:
            if w in used or th[w][w] != tg[v][v]:
                continue
            if all(tg[v][x] == th[w][y] for x, y in mapping.items()):
                mapping[v] = w
                used.add(w)
                yield from extend(i + 1)
                del mapping[v]
                used.discard(w)

    yield from extend(0)


def is_isomorphic(g: MultiGraph, h: MultiGraph) -> bool:
    return next(isomorphisms(g, h), None) is not None


def automorphisms(g: MultiGraph) -> list[dict[int, int]]:
    return list(isomorphisms(g, g))


def canonical_form(g: MultiGraph) -> tuple:
    """Isomorphism-invariant encoding of ``g`` (equal iff isomorphic).

    Colour refinement with individualisation; the encoding is the minimum
    multiplicity matrix over all discrete refined orderings.
    """
    verts = list(g.vertices)
    n = len(verts)
    index = {v: i for i, v in enumerate(verts)}
    mult = [[0] * n for _ in range(n)]
    for u, v in g.edges.values():
        a, b = index[u], index[v]
        mult[a][b] += 1
        if a != b:
            mult[b][a] += 1
    nbrs = [[(j, mult[i][j]) for j in range(n) if mult[i][j] and j != i] for i in range(n)]
    init = [(sum(k for _, k in nbrs[i]) + 2 * mult[i][i], mult[i][i]) for i in range(n)]

    def relabel(sig: list) -> list[int]:
        keys = sorted(set(sig))
        rank = {k: r for r, k in enumerate(keys)}
        return [rank[s] for s in sig]

    def refine(colors: list[int]) -> list[int]:
        while True:
            sig = [
                (colors[i], tuple(sorted((colors[j], k) for j, k in nbrs[i])))
                for i in range(n)
            ]
            new = relabel(sig)
            if len(set(new)) == len(set(colors)):
                return new
            colors = new

    best: list[tuple | None] = [None]

    def search(colors: list[int]) -> None:
        counts = Counter(colors)
        if len(counts) == n:
            order = sorted(range(n), key=lambda i: colors[i])
            enc = tuple(mult[order[a]][order[b]] for a in range(n) for b in range(a, n))
            if best[0] is None or enc < best[0]:
                best[0] = enc
            return
        target = min(c for c, k in counts.items() if k > 1)
        for i in range(n):
            if colors[i] == target:
                split = [(c, 0 if j == i else 1) for j, c in enumerate(colors)]
                search(refine(relabel(split)))

    if n:
        search(refine(relabel(init)))
    return (n, g.num_edges, best[0] or ())


# -- shapes --------------------------------------------------------------------


class Shape(enum.Enum):
    ARC = "arc"
    CYCLE = "cycle"
    LOLLIPOP = "lollipop"
    THETA = "theta"
    FIGURE_EIGHT = "figure-eight"
    DUMBBELL = "dumbbell"
    HAPPY_FACE = "happy-face"
    BAGUETTE = "baguette"
    OTHER = "other"


# Suppressed normal forms.
_SHAPE_FORMS: dict[Shape, list[Edge]] = {
    Shape.ARC: [(0, 1)],
    Shape.CYCLE: [(0, 0)],
    Shape.LOLLIPOP: [(0, 0), (0, 1)],
    Shape.THETA: [(0, 1), (0, 1), (0, 1)],
    Shape.FIGURE_EIGHT: [(0, 0), (0, 0)],
    Shape.DUMBBELL: [(0, 0), (0, 1), (1, 1)],
    Shape.HAPPY_FACE: [(0, 1), (0, 1), (0, 2), (0, 2), (1, 2)],
    Shape.BAGUETTE: [(0, 1), (0, 1), (2, 3), (2, 3), (0, 2), (1, 3)],
}

OMEGA_SHAPES = frozenset(
    {Shape.ARC, Shape.CYCLE, Shape.LOLLIPOP, Shape.THETA, Shape.FIGURE_EIGHT, Shape.DUMBBELL}
)

_SHAPE_KEYS: dict[tuple, Shape] = {}


def shape_graph(shape: Shape) -> MultiGraph:
    """Suppressed normal form of a catalogue shape."""
    if shape is Shape.OTHER:
        raise GraphError("'other' has no normal form")
    return MultiGraph((), _SHAPE_FORMS[shape])


def recognize_shape(g: MultiGraph) -> Shape:
    if not g.num_edges or not is_connected(g):
        return Shape.OTHER
    core, _ = suppress_degree2(g)
    if core.num_vertices > 4 or core.num_edges > 6:
        return Shape.OTHER
    if not _SHAPE_KEYS:
        for shape in _SHAPE_FORMS:
            _SHAPE_KEYS[canonical_form(shape_graph(shape))] = shape
    return _SHAPE_KEYS.get(canonical_form(core), Shape.OTHER)


def relabeled(g: MultiGraph, perm: Mapping[int, int]) -> MultiGraph:
    """Copy of ``g`` with vertices renamed through ``perm`` (edge ids kept)."""
    edges = {e: (perm[u], perm[v]) for e, (u, v) in g.edges.items()}
    labels = {perm[v]: name for v, name in g.labels.items()}
    return MultiGraph((perm[v] for v in g.vertices), edges, labels)


def degree_sequence(g: MultiGraph) -> list[int]:
    return sorted((degree(g, v) for v in g.vertices), reverse=True)
