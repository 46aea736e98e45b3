"""Block-cutvertex structure and the special shapes excluded from 5-ac and 6-ac."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from arcconn.errors import GraphError
from arcconn.graph import MultiGraph, components, degree, is_connected


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[frozenset[int], ...]  # edge ids per block
    block_vertices: tuple[frozenset[int], ...]
    cutvertices: frozenset[int]
    graph: MultiGraph

    def is_bridge(self, i: int) -> bool:
        (e,) = self.blocks[i] if len(self.blocks[i]) == 1 else (None,)
        if e is None:
            return False
        u, v = self.graph.endpoints(e)
        return u != v

    def blocks_at(self, v: int) -> list[int]:
        return [i for i, vs in enumerate(self.block_vertices) if v in vs]

    def block_graph(self) -> dict[tuple[str, int], set[tuple[str, int]]]:
        """Bipartite adjacency between ``("B", i)`` block nodes and ``("C", v)`` cut-vertex nodes."""
        adj: dict[tuple[str, int], set[tuple[str, int]]] = {
            ("B", i): set() for i in range(len(self.blocks))
        }
        for v in sorted(self.cutvertices):
            adj[("C", v)] = set()
            for i in self.blocks_at(v):
                adj[("C", v)].add(("B", i))
                adj[("B", i)].add(("C", v))
        return adj

    def degree_in_block(self, v: int, i: int) -> int:
        return sum(
            (u == v) + (w == v) for u, w in (self.graph.endpoints(e) for e in self.blocks[i])
        )


@dataclass(frozen=True)
class ChainDecomposition:
    links: tuple[frozenset[int], ...]  # edge ids, in path order
    linking_vertices: tuple[int, ...]  # linking_vertices[i] joins links i and i+1


def blocks(g: MultiGraph) -> BlockDecomposition:
    """Maximal 2-connected pieces; bridges and loops are blocks of their own."""
    if g.num_vertices and not is_connected(g):
        raise GraphError("block decomposition needs a connected graph")
    found: list[frozenset[int]] = [frozenset({e}) for e in g.loops()]
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    edge_stack: list[int] = []
    for root in g.vertices[:1]:
        disc[root] = low[root] = 0
        clock = 1
        stack = [(root, -1, iter(g.incidence(root)))]
        while stack:
            v, pe, it = stack[-1]
            for e, w in it:
                if e == pe or w == v:
                    continue
                if w not in disc:
                    edge_stack.append(e)
                    disc[w] = low[w] = clock
                    clock += 1
                    stack.append((w, e, iter(g.incidence(w))))
                    break
                if disc[w] < disc[v]:
                    edge_stack.append(e)
                    low[v] = min(low[v], disc[w])
            else:
                stack.pop()
                if stack:
                    u = stack[-1][0]
                    low[u] = min(low[u], low[v])
                    if low[v] >= disc[u]:
                        block = []
                        while True:
                            f = edge_stack.pop()
                            block.append(f)
                            if f == pe:
                                break
                        found.append(frozenset(block))
    found.sort(key=min)
    bverts = tuple(frozenset(x for e in b for x in g.endpoints(e)) for b in found)
    count: dict[int, int] = {}
    for vs in bverts:
        for v in vs:
            count[v] = count.get(v, 0) + 1
    cuts = frozenset(v for v, k in count.items() if k > 1)
    return BlockDecomposition(tuple(found), bverts, cuts, g)


def chain_decomposition(g: MultiGraph) -> ChainDecomposition | None:
    """Links in order when the block graph is a path, otherwise ``None``."""
    dec = blocks(g)
    if not dec.blocks:
        return None
    adj = dec.block_graph()
    if any(len(nbrs) > 2 for nbrs in adj.values()):
        return None
    if len(dec.blocks) == 1:
        return ChainDecomposition((dec.blocks[0],), ())
    ends = sorted(i for i in range(len(dec.blocks)) if len(adj[("B", i)]) == 1)
    links = []
    linking = []
    node = ("B", ends[0])
    prev = None
    while True:
        if node[0] == "B":
            links.append(dec.blocks[node[1]])
        else:
            linking.append(node[1])
        nxt = [x for x in adj[node] if x != prev]
        if not nxt:
            break
        prev, node = node, nxt[0]
    return ChainDecomposition(tuple(links), tuple(linking))


# -- pieces ---------------------------------------------------------------------


@dataclass(frozen=True)
class Piece:
    """A bridge of ``g`` over a vertex set S: a component of g - S with its edges to S, or one edge inside S."""

    vertices: frozenset[int]  # interior vertices (empty for a direct edge)
    edges: frozenset[int]
    attachments: frozenset[int]  # members of S it touches


def pieces(g: MultiGraph, s: set[int] | frozenset[int]) -> list[Piece]:
    s = set(s)
    rest = g.induced(v for v in g.vertices if v not in s)
    out = []
    for comp in components(rest):
        es = frozenset(e for e, (u, v) in g.edges.items() if u in comp or v in comp)
        att = frozenset(x for e in es for x in g.endpoints(e) if x in s)
        out.append(Piece(comp, es, att))
    for e, (u, v) in g.edges.items():
        if u in s and v in s:
            out.append(Piece(frozenset(), frozenset({e}), frozenset({u, v})))
    return out


def _ends_at(g: MultiGraph, piece: Piece, v: int) -> int:
    return sum((a == v) + (b == v) for a, b in (g.endpoints(e) for e in piece.edges))


@dataclass(frozen=True)
class CycleOfLinksWitness:
    apex: int  # the linking vertex with two edge-ends in each of its links
    u: int
    w: int
    links: tuple[frozenset[int], frozenset[int], frozenset[int]]  # edges of {apex,u}, {apex,w}, {u,w}


def detect_condition3(g: MultiGraph) -> CycleOfLinksWitness | None:
    """Find a cycle graph of three links whose apex has degree 2 in both its links.

    Assumes ``g`` is 2-connected with maximum degree 4.
    """
    for v in g.vertices:
        if degree(g, v) != 4:
            continue
        others = [x for x in g.vertices if x != v]
        for u, w in itertools.combinations(others, 2):
            buckets: dict[frozenset[int], set[int]] = {
                frozenset({v, u}): set(),
                frozenset({v, w}): set(),
                frozenset({u, w}): set(),
            }
            ends = {frozenset({v, u}): 0, frozenset({v, w}): 0}
            ok = True
            for piece in pieces(g, {v, u, w}):
                if piece.attachments not in buckets:
                    ok = False
                    break
                buckets[piece.attachments] |= piece.edges
                if piece.attachments in ends:
                    ends[piece.attachments] += _ends_at(g, piece, v)
            if not ok or not all(buckets.values()):
                continue
            if all(k == 2 for k in ends.values()):
                return CycleOfLinksWitness(
                    v, u, w,
                    (
                        frozenset(buckets[frozenset({v, u})]),
                        frozenset(buckets[frozenset({v, w})]),
                        frozenset(buckets[frozenset({u, w})]),
                    ),
                )
    return None


@dataclass(frozen=True)
class ThreeLinkWitness:
    v: int  # degree-4 linking vertex
    a: int
    links: tuple[frozenset[int], frozenset[int], frozenset[int]]  # deg_L2(v) == 2 for links[2]


def detect_condition4(g: MultiGraph) -> ThreeLinkWitness | None:
    """Find three connected subgraphs pairwise meeting in exactly {v, a} with ``deg_L2(v) == 2``.

    Assumes ``g`` is 2-connected with maximum degree 4; then such a split
    exists iff some degree-4 ``v`` has at least three pieces over ``{v, a}``.
    """
    for v in g.vertices:
        if degree(g, v) != 4:
            continue
        for a in g.vertices:
            if a == v:
                continue
            ps = pieces(g, {v, a})
            if len(ps) < 3 or any(p.attachments != frozenset({v, a}) for p in ps):
                continue
            # Greedy grouping: the two smallest v-degree pieces alone, the rest together.
            ps.sort(key=lambda p: (_ends_at(g, p, v), min(p.edges)))
            l0, l1 = ps[0].edges, ps[1].edges
            l2 = frozenset(e for p in ps[2:] for e in p.edges)
            if _ends_at(g, ps[0], v) == 1 and _ends_at(g, ps[1], v) == 1:
                return ThreeLinkWitness(v, a, (l0, l1, l2))
    return None


# -- inflated K4 ----------------------------------------------------------------


def _boundary(g: MultiGraph, s: frozenset[int]) -> list[int]:
    return [e for e, (u, v) in g.edges.items() if (u in s) != (v in s)]


def _connected_sets(g: MultiGraph, root: int, allowed: frozenset[int]) -> Iterator[frozenset[int]]:
    """Every connected vertex set within ``allowed`` that contains ``root``."""
    adj = {v: [w for w in g.neighbors(v) if w in allowed] for v in allowed}
    seen = {frozenset({root})}
    frontier = [frozenset({root})]
    while frontier:
        s = frontier.pop()
        yield s
        for x in s:
            for w in adj[x]:
                if w not in s:
                    t = s | {w}
                    if t not in seen:
                        seen.add(t)
                        frontier.append(t)


def _check_cubic_3c(g: MultiGraph) -> None:
    from arcconn.menger import is_k_connected

    if not g.is_simple() or any(degree(g, v) != 3 for v in g.vertices):
        raise GraphError("inflated-K4 search needs a simple 3-regular graph")
    if not is_k_connected(g, 3):
        raise GraphError("inflated-K4 search needs a 3-connected graph")


def inflated_k4(g: MultiGraph, check: bool = True) -> tuple[frozenset[int], ...] | None:
    """Partition into four connected parts with exactly one edge between each pair, if any."""
    if check:
        _check_cubic_3c(g)
    everything = frozenset(g.vertices)
    owner: dict[int, int] = {}

    def cross_ok(part: frozenset[int], k: int) -> bool:
        # every boundary edge must lead to a distinct part (or to unassigned vertices)
        hit: dict[int, int] = {}
        for e in _boundary(g, part):
            u, v = g.endpoints(e)
            other = v if u in part else u
            j = owner.get(other)
            if j is not None:
                hit[j] = hit.get(j, 0) + 1
                if hit[j] > 1:
                    return False
        return True

    def grow(remaining: frozenset[int], parts: list[frozenset[int]]) -> tuple | None:
        if len(parts) == 3:
            last = remaining
            if len(_boundary(g, last)) != 3 or len(components(g.induced(last))) != 1:
                return None
            if not cross_ok(last, 3):
                return None
            return tuple(parts + [last])
        root = min(remaining)
        need = 3 - len(parts)  # parts still to place after this one
        for s in _connected_sets(g, root, remaining):
            if len(remaining) - len(s) < need or len(_boundary(g, s)) != 3:
                continue
            if not cross_ok(s, len(parts)):
                continue
            for x in s:
                owner[x] = len(parts)
            found = grow(remaining - s, parts + [s])
            for x in s:
                del owner[x]
            if found:
                return found
        return None

    if len(everything) < 4:
        return None
    return grow(everything, [])


def six_edge_scan(g: MultiGraph) -> tuple[int, ...] | None:
    """Six edges whose removal leaves at least four components, if any (exhaustive)."""
    for removed in itertools.combinations(sorted(g.edges), 6):
        if len(components(g.without_edges(removed))) >= 4:
            return removed
    return None
