"""Named graphs, the small multigraph corpus, and cubic graph enumeration."""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Callable, Iterator, Sequence

import networkx as nx

from arcconn.errors import GraphError
from arcconn.graph import MultiGraph, canonical_form, degree

# -- named graphs ----------------------------------------------------------------------


def _labelled(pairs: Sequence[tuple[str, str]]) -> MultiGraph:
    return MultiGraph.from_edge_list(pairs)


def _complete(n: int) -> MultiGraph:
    return MultiGraph.from_edge_list(itertools.combinations(range(n), 2))


def _cycle(n: int) -> MultiGraph:
    if n < 1:
        raise GraphError("cycle length must be positive")
    return MultiGraph.from_edge_list([(i, (i + 1) % n) for i in range(n)])


def _path(n: int) -> MultiGraph:
    """Path with n vertices."""
    if n < 2:
        raise GraphError("a path needs at least two vertices")
    return MultiGraph.from_edge_list([(i, i + 1) for i in range(n - 1)])


def _k5_minus_edge() -> MultiGraph:
    return _labelled([p for p in itertools.combinations("abcde", 2) if p != ("b", "e")])


def _k33() -> MultiGraph:
    return _labelled([(a, b) for a in ("a1", "a2", "a3") for b in ("b1", "b2", "b3")])


def _wagner() -> MultiGraph:
    # K3,3 with a1b1 and a2b2 subdivided at m1, m2, and the new edge m1m2
    pairs = [
        (a, b)
        for a in ("a1", "a2", "a3")
        for b in ("b1", "b2", "b3")
        if (a, b) not in {("a1", "b1"), ("a2", "b2")}
    ]
    pairs += [("a1", "m1"), ("m1", "b1"), ("a2", "m2"), ("m2", "b2"), ("m1", "m2")]
    return _labelled(pairs)


def _from_nx(h: nx.Graph) -> MultiGraph:
    return MultiGraph.from_edge_list(sorted(h.edges()))


def _three_c4_triangle() -> MultiGraph:
    # v, u, w pairwise joined by a 4-cycle on which they sit opposite each other
    pairs = []
    for x, y in (("v", "u"), ("v", "w"), ("u", "w")):
        for side in ("p", "q"):
            mid = f"{x}{y}{side}"
            pairs += [(x, mid), (mid, y)]
    return _labelled(pairs)


def _four_paths() -> MultiGraph:
    return _labelled([e for i in range(4) for e in (("v", f"p{i}"), (f"p{i}", "a"))])


_BUILDERS: dict[str, Callable[[], MultiGraph]] = {
    "k2": lambda: _path(2),
    "loop": lambda: MultiGraph((), [(0, 0)]),
    "triangle": lambda: _cycle(3),
    "k4": lambda: _complete(4),
    "k5": lambda: _complete(5),
    "k5-minus-edge": _k5_minus_edge,
    "k33": _k33,
    "prism": lambda: _from_nx(nx.circular_ladder_graph(3)),
    "wagner": _wagner,
    "cube": lambda: _from_nx(nx.convert_node_labels_to_integers(nx.hypercube_graph(3))),
    "petersen": lambda: _from_nx(nx.petersen_graph()),
    "theta": lambda: MultiGraph((), [(0, 1)] * 3),
    "figure-eight": lambda: MultiGraph((), [(0, 0), (0, 0)]),
    "dumbbell": lambda: MultiGraph.from_edge_list(
        [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)]
    ),
    "lollipop": lambda: MultiGraph.from_edge_list([(0, 1), (1, 2), (2, 0), (2, 3)]),
    "happy-face": lambda: MultiGraph((), [(0, 1), (0, 1), (0, 2), (0, 2), (1, 2)]),
    "baguette": lambda: MultiGraph((), [(0, 1), (0, 1), (2, 3), (2, 3), (0, 2), (1, 3)]),
    "star": lambda: MultiGraph.from_edge_list([(0, 1), (0, 2), (0, 3)]),
    "three-c4-triangle": _three_c4_triangle,
    "four-paths": _four_paths,
}

_PARAMETRIC = {"path": _path, "cycle": _cycle, "complete": _complete}


@dataclass(frozen=True)
class NamedGraph:
    name: str
    builder: Callable[[], MultiGraph]

    def build(self) -> MultiGraph:
        return self.builder()


def catalogue() -> list[NamedGraph]:
    return [NamedGraph(name, b) for name, b in sorted(_BUILDERS.items())]


def named(name: str) -> MultiGraph:
    """Build a catalogue graph; ``path-5``, ``cycle-7`` and ``complete-6`` take a size."""
    key = name.strip().lower().replace("_", "-")
    if key in _BUILDERS:
        return _BUILDERS[key]()
    m = re.fullmatch(r"(path|cycle|complete)-(\d+)", key)
    if m:
        return _PARAMETRIC[m.group(1)](int(m.group(2)))
    raise GraphError(f"unknown graph name {name!r}")


# -- exhaustive corpus --------------------------------------------------------------------


def _children(g: MultiGraph) -> Iterator[MultiGraph]:
    edges = list(g.edges.values())
    verts = g.vertices or (0,)
    for u in verts:
        yield MultiGraph(verts, edges + [(u, u)])
        yield MultiGraph(verts, edges + [(u, max(verts) + 1)])
    for u, v in itertools.combinations(g.vertices, 2):
        yield MultiGraph(verts, edges + [(u, v)])


def enumerate_connected_multigraphs(max_edges: int) -> Iterator[MultiGraph]:
    """One graph per isomorphism class of connected multigraphs with 1..max_edges edges.

    Every such graph arises from a smaller one by adding a loop, an edge
    between existing vertices, or a pendant edge (delete a cycle edge, or a
    leaf of a tree). Classes are yielded by edge count, then canonical form.
    """
    if max_edges < 1:
        raise GraphError("max_edges must be positive")
    if max_edges > 7:
        raise GraphError("max_edges above 7 is beyond the corpus budget")
    level = [MultiGraph((0,), [])]
    for _ in range(max_edges):
        seen: dict[tuple, MultiGraph] = {}
        for g in level:
            for h in _children(g):
                seen.setdefault(canonical_form(h), h)
        level = [seen[k] for k in sorted(seen)]
        yield from level


# -- cubic graphs ---------------------------------------------------------------------------


def _loop_trees(n: int) -> Iterator[MultiGraph]:
    """Cubic multigraphs whose non-loop edges are all bridges: cubic trees with a loop per leaf."""
    internal = (n - 2) // 2
    if internal == 0:
        yield MultiGraph((), [(0, 1), (0, 0), (1, 1)])
        return
    # trees with `internal` vertices of max degree 3, then pad with leaves
    for tree in nx.nonisomorphic_trees(internal) if internal > 1 else [nx.empty_graph(1)]:
        if max((d for _, d in tree.degree()), default=0) > 3:
            continue
        edges = list(tree.edges())
        nxt = internal
        for v in range(internal):
            for _ in range(3 - tree.degree(v)):
                edges.append((v, nxt))
                edges.append((nxt, nxt))
                nxt += 1
        yield MultiGraph(range(nxt), edges)


def _insertions(g: MultiGraph) -> Iterator[MultiGraph]:
    """Subdivide two edge positions (possibly on one edge) and join the new vertices."""
    eids = list(g.edges)
    x = g.next_vertex_id()
    y = x + 1
    for i, e in enumerate(eids):
        for f in eids[i:]:
            edges = [p for k, p in g.edges.items() if k not in (e, f)]
            a, b = g.endpoints(e)
            if e == f:
                edges += [(a, x), (x, y), (y, b), (x, y)]
            else:
                c, d = g.endpoints(f)
                edges += [(a, x), (x, b), (c, y), (y, d), (x, y)]
            yield MultiGraph((), edges)


def _cubic_levels(n: int, simple_only_last: bool = True) -> dict[int, list[MultiGraph]]:
    levels: dict[int, list[MultiGraph]] = {}
    for k in range(2, n + 1, 2):
        seen: dict[tuple, MultiGraph] = {}
        for g in _loop_trees(k):
            if not (simple_only_last and k == n) or g.is_simple():
                seen.setdefault(canonical_form(g), g)
        if k == 2:
            seen.setdefault(canonical_form(MultiGraph((), [(0, 1)] * 3)), MultiGraph((), [(0, 1)] * 3))
        else:
            for g in levels[k - 2]:
                for h in _insertions(g):
                    if simple_only_last and k == n and not h.is_simple():
                        continue
                    seen.setdefault(canonical_form(h), h)
        levels[k] = [seen[c] for c in sorted(seen)]
    return levels


def enumerate_cubic(n: int) -> Iterator[MultiGraph]:
    """All connected simple 3-regular graphs on n vertices, one per isomorphism class.

    Built by edge insertion over connected cubic multigraphs: deleting a
    non-bridge edge and suppressing its two ends inverts the insertion, and
    the graphs without such an edge are the loop-decorated cubic trees.
    """
    if n % 2 or n < 2:
        raise GraphError("cubic graphs need an even positive number of vertices")
    if n > 14:
        raise GraphError("n above 14 is beyond the enumeration budget")
    for g in _cubic_levels(n)[n]:
        if g.is_simple():
            yield g


def cubic_multigraph_count(n: int) -> int:
    """Number of connected cubic multigraphs (loops allowed) on n vertices."""
    return len(_cubic_levels(n, simple_only_last=False)[n])


# -- random graphs ----------------------------------------------------------------------------


def random_graph(
    seed: int, n: int, p: float | None = None, degree_sequence: Sequence[int] | None = None
) -> MultiGraph:
    """Seeded G(n, p) or uniform-ish simple graph with a given degree sequence."""
    if (p is None) == (degree_sequence is None):
        raise GraphError("give exactly one of p or degree_sequence")
    if p is not None:
        if not 0 <= p <= 1:
            raise GraphError("edge probability must lie in [0, 1]")
        h = nx.gnp_random_graph(n, p, seed=seed)
    else:
        seq = list(degree_sequence)
        if len(seq) != n:
            raise GraphError("degree sequence length must equal n")
        if not nx.is_graphical(seq):
            raise GraphError(f"infeasible degree sequence {seq}")
        try:
            h = nx.random_degree_sequence_graph(seq, seed=seed, tries=50)
        except nx.NetworkXError as exc:
            raise GraphError(str(exc)) from exc
    return MultiGraph(range(n), sorted(h.edges()))


def random_connected_graph(seed: int, n: int, extra: int) -> MultiGraph:
    """Random spanning tree plus ``extra`` random edges (loops and parallels allowed)."""
    import random

    rng = random.Random(seed)
    edges = [(rng.randrange(i), i) for i in range(1, n)]
    for _ in range(extra):
        edges.append((rng.randrange(n), rng.randrange(n)))
    return MultiGraph(range(n), edges)


def relabel_randomly(g: MultiGraph, seed: int) -> MultiGraph:
    import random

    rng = random.Random(seed)
    verts = list(g.vertices)
    shuffled = verts[:]
    rng.shuffle(shuffled)
    perm = dict(zip(verts, shuffled))
    return MultiGraph(g.vertices, [(perm[u], perm[v]) for u, v in g.edges.values()])


def is_cubic(g: MultiGraph) -> bool:
    return all(degree(g, v) == 3 for v in g.vertices)
