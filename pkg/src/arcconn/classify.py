"""Combinatorial deciders for n-arc-connectedness and n-circle-connectedness.

Each decider returns a :class:`Verdict` naming the clause that settled the
question together with a JSON-friendly certificate that
:func:`check_certificate` can re-verify.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Any, Union

from arcconn.decompose import (
    blocks,
    chain_decomposition,
    detect_condition3,
    detect_condition4,
    inflated_k4,
)
from arcconn.errors import GraphError, InconsistencyError
from arcconn.graph import (
    OMEGA_SHAPES,
    MultiGraph,
    Shape,
    components,
    degree,
    is_connected,
    make_simple,
    puncture_count,
    recognize_shape,
    suppress_degree2,
)
from arcconn.menger import independent_paths, is_cyclically_connected, is_k_connected

OMEGA = "omega"
N = Union[int, str]

# clause identifiers
EDGE = "has an edge"
ISOLATED = "isolated vertex"
CONNECTED = "connected"
DISCONNECTED = "disconnected"
CHAIN = "chain of blocks"
NOT_CHAIN = "block graph not a path"
CYCLIC_PAIRS = "cyclic: no 2 vertices cut into 4+"
CYCLIC_PAIR_CUT = "cyclic: 2 vertices cut into 4+"
CHAIN_4AC = "chain: links 4-ac, interior links edges, link degrees <= 2"
LINK_NOT_4AC = "chain: link not 4-ac"
INTERIOR_LINK = "chain: interior link not an edge"
LINK_DEGREE = "chain: linking vertex has link degree > 2"
SHAPE_OK = "shape"
SHAPE_BAD = "shape not allowed"
COND = "condition ({})"
CONDS_OK = "conditions (1)-(4)"
SIX_OK = "3-regular, 3-connected, no inflated K4"
NOT_SIMPLE = "suppressed form not simple"
NOT_CUBIC = "suppressed form not 3-regular"
NOT_3C = "suppressed form not 3-connected"
INFLATED = "inflated K4"
OMEGA_OK = "omega shape"
BRIDGELESS = "bridgeless"
BRIDGE = "has a bridge"
CYCLIC = "cyclically connected"
NOT_CYCLIC = "not cyclically connected"

_FIVE_SHAPES = frozenset({Shape.ARC, Shape.LOLLIPOP, Shape.DUMBBELL, Shape.FIGURE_EIGHT})


@dataclass(frozen=True)
class Verdict:
    answer: bool
    clause: str
    certificate: dict[str, Any] = field(default_factory=dict, compare=False)

    def __bool__(self) -> bool:
        return self.answer


@dataclass(frozen=True)
class Classification:
    max_ac: N  # 0..6 or "omega"
    cc_class: str  # "none", "2cc" or "omegacc"
    per_n: dict[str, Verdict]  # keys "ac1".."ac7", "cc1".."cc3"


def _parse_n(n: N) -> int | None:
    """``None`` stands for omega; 7 and beyond are the same question."""
    if n == OMEGA:
        return None
    if isinstance(n, bool) or not isinstance(n, int):
        raise GraphError(f"n must be a positive integer or 'omega', got {n!r}")
    if n < 1:
        raise GraphError("n must be positive")
    return None if n >= 7 else n


def _require_edges(g: MultiGraph) -> None:
    if not g.num_edges:
        raise GraphError("graph has no edges; a single point contains no arc")


def _sets(xs) -> list:
    return sorted(xs)


# -- n-ac ------------------------------------------------------------------------------------


def _basic(g: MultiGraph, n: int) -> Verdict | None:
    """Settle n <= 2, and reject every disconnected graph."""
    lonely = [v for v in g.vertices if degree(g, v) == 0]
    if lonely:
        return Verdict(False, ISOLATED, {"vertex": lonely[0]})
    if n == 1:
        return Verdict(True, EDGE, {})
    comps = components(g)
    if len(comps) > 1:
        return Verdict(False, DISCONNECTED, {"components": [_sets(c) for c in comps]})
    if n == 2:
        return Verdict(True, CONNECTED, {})
    return None


def _chain_cert(g: MultiGraph):
    chain = chain_decomposition(g)
    if chain is None:
        dec = blocks(g)
        adj = dec.block_graph()
        node = min(x for x, nb in adj.items() if len(nb) > 2)
        cert = {"node": list(node), "neighbours": sorted(list(x) for x in adj[node])}
        return None, Verdict(False, NOT_CHAIN, cert)
    return chain, None


def is_3ac(g: MultiGraph) -> Verdict:
    _require_edges(g)
    early = _basic(g, 3)
    if early is not None:
        return early
    chain, bad = _chain_cert(g)
    if bad is not None:
        return bad
    return Verdict(True, CHAIN, {"links": [_sets(l) for l in chain.links],
                                 "linking": list(chain.linking_vertices)})


def _cyclic_4ac(g: MultiGraph) -> Verdict:
    for u, v in itertools.combinations(g.vertices, 2):
        k = puncture_count(g, {u, v})
        if k >= 4:
            return Verdict(False, CYCLIC_PAIR_CUT, {"cut": [u, v], "components": k})
    return Verdict(True, CYCLIC_PAIRS, {})


def is_4ac(g: MultiGraph) -> Verdict:
    _require_edges(g)
    early = _basic(g, 4)
    if early is not None:
        return early
    if is_cyclically_connected(g):
        return _cyclic_4ac(g)
    chain, bad = _chain_cert(g)
    if bad is not None:
        return bad
    links = list(chain.links)
    for i, link in enumerate(links):
        sub = g.edge_subgraph(link)
        if 0 < i < len(links) - 1 and not (len(link) == 1 and sub.num_vertices == 2):
            return Verdict(False, INTERIOR_LINK, {"link": _sets(link)})
        if is_cyclically_connected(sub):
            inner = _cyclic_4ac(sub)
            if not inner:
                return Verdict(False, LINK_NOT_4AC, {"link": _sets(link), **inner.certificate})
    for j, v in enumerate(chain.linking_vertices):
        for link in (links[j], links[j + 1]):
            d = sum((a == v) + (b == v) for a, b in (g.endpoints(e) for e in link))
            if d > 2:
                return Verdict(False, LINK_DEGREE, {"vertex": v, "link": _sets(link),
                                                    "degree": d})
    return Verdict(True, CHAIN_4AC, {"links": [_sets(l) for l in links],
                                     "linking": list(chain.linking_vertices)})


def five_conditions(g: MultiGraph) -> list[Verdict]:
    """Conditions (1)-(4) for a cyclically connected graph, each judged on its own.

    Evaluated on the simple subdivision so that points inside parallel edges
    and loops are available as vertices. (3) and (4) are only meaningful
    once (1) and (2) hold.
    """
    h = make_simple(g)
    out = []
    high = [v for v in h.vertices if degree(h, v) > 4]
    out.append(Verdict(not high, COND.format(1),
                       {"vertex": high[0], "degree": degree(h, high[0])} if high else {}))
    cut = None
    for s in itertools.combinations(h.vertices, 3):
        k = puncture_count(h, s)
        if k >= 5:
            cut = {"cut": list(s), "components": k, "graph": "simple"}
            break
    out.append(Verdict(cut is None, COND.format(2), cut or {}))
    w3 = detect_condition3(h)
    out.append(Verdict(w3 is None, COND.format(3), {} if w3 is None else {
        "apex": w3.apex, "u": w3.u, "w": w3.w, "links": [_sets(l) for l in w3.links],
        "graph": "simple"}))
    w4 = detect_condition4(h)
    out.append(Verdict(w4 is None, COND.format(4), {} if w4 is None else {
        "v": w4.v, "a": w4.a, "links": [_sets(l) for l in w4.links], "graph": "simple"}))
    return out


def is_5ac(g: MultiGraph) -> Verdict:
    _require_edges(g)
    early = _basic(g, 5)
    if early is not None:
        return early
    if not is_cyclically_connected(g):
        shape = recognize_shape(g)
        ok = shape in _FIVE_SHAPES
        return Verdict(ok, SHAPE_OK if ok else SHAPE_BAD, {"shape": shape.value})
    for verdict in five_conditions(g):
        if not verdict:
            return verdict
    return Verdict(True, CONDS_OK, {})


def is_6ac(g: MultiGraph) -> Verdict:
    _require_edges(g)
    early = _basic(g, 6)
    if early is not None:
        return early
    shape = recognize_shape(g)
    if shape in OMEGA_SHAPES:
        return Verdict(True, OMEGA_OK, {"shape": shape.value})
    core, _ = suppress_degree2(g)
    if not core.is_simple():
        return Verdict(False, NOT_SIMPLE, {"shape": shape.value})
    odd = [v for v in core.vertices if degree(core, v) != 3]
    if odd:
        return Verdict(False, NOT_CUBIC, {"vertex": odd[0], "degree": degree(core, odd[0])})
    if not is_k_connected(core, 3):
        return Verdict(False, NOT_3C, {"separator": _small_separator(core)})
    parts = inflated_k4(core, check=False)
    if parts is not None:
        return Verdict(False, INFLATED, {"parts": [_sets(p) for p in parts]})
    return Verdict(True, SIX_OK, {})


def _small_separator(g: MultiGraph) -> list[int]:
    for u, v in itertools.combinations(g.vertices, 2):
        if v in g.neighbors(u):
            continue
        paths, sep = independent_paths(g, u, v)
        if len(paths) < 3:
            return sorted(sep)
    return []


def is_omega_ac(g: MultiGraph) -> Verdict:
    _require_edges(g)
    early = _basic(g, 7)
    if early is not None:
        return early
    shape = recognize_shape(g)
    ok = shape in OMEGA_SHAPES
    return Verdict(ok, OMEGA_OK if ok else SHAPE_BAD, {"shape": shape.value})


def is_n_ac(g: MultiGraph, n: N) -> Verdict:
    k = _parse_n(n)
    _require_edges(g)
    if k is None:
        return is_omega_ac(g)
    if k <= 2:
        return _basic(g, k)  # type: ignore[return-value]
    return {3: is_3ac, 4: is_4ac, 5: is_5ac, 6: is_6ac}[k](g)


# -- n-cc ------------------------------------------------------------------------------------


def is_n_cc(g: MultiGraph, n: N) -> Verdict:
    """Every n points on a common circle: bridgeless (n=1), cyclically connected (n=2), a cycle (n>=3)."""
    k = _parse_n(n)
    _require_edges(g)
    lonely = [v for v in g.vertices if degree(g, v) == 0]
    if lonely:
        return Verdict(False, ISOLATED, {"vertex": lonely[0]})
    if k == 1:
        bridges = _bridges(g)
        return Verdict(not bridges, BRIDGE if bridges else BRIDGELESS,
                       {"edge": bridges[0]} if bridges else {})
    if k == 2:
        if is_cyclically_connected(g):
            return Verdict(True, CYCLIC, {})
        return Verdict(False, NOT_CYCLIC, _acyclic_witness(g))
    shape = recognize_shape(g)
    ok = shape is Shape.CYCLE
    return Verdict(ok, SHAPE_OK if ok else SHAPE_BAD, {"shape": shape.value})


def _acyclic_witness(g: MultiGraph) -> dict[str, Any]:
    comps = components(g)
    if len(comps) > 1:
        return {"components": [_sets(c) for c in comps]}
    for v in g.vertices:
        if puncture_count(g, {v}) > 1:
            return {"vertex": v}
    return {"edge": _bridges(g)[0]}


def _bridges(g: MultiGraph) -> list[int]:
    out = []
    for comp in components(g):
        sub = g.induced(comp)
        if not sub.num_edges:
            continue
        dec = blocks(sub)
        out += [min(b) for i, b in enumerate(dec.blocks) if dec.is_bridge(i)]
    return sorted(out)


# -- aggregate ---------------------------------------------------------------------------------


def classify(g: MultiGraph) -> Classification:
    _require_edges(g)
    per_n: dict[str, Verdict] = {}
    for n in range(1, 8):
        per_n[f"ac{n}"] = is_n_ac(g, n)
    for n in range(1, 4):
        per_n[f"cc{n}"] = is_n_cc(g, n)
    answers = [per_n[f"ac{n}"].answer for n in range(1, 8)]
    if any(b and not a for a, b in zip(answers, answers[1:])):
        raise InconsistencyError(f"n-ac verdicts are not monotone: {answers}")
    cc = [per_n[f"cc{n}"].answer for n in range(1, 4)]
    if any(b and not a for a, b in zip(cc, cc[1:])):
        raise InconsistencyError(f"n-cc verdicts are not monotone: {cc}")
    if cc[2] and not answers[6]:
        raise InconsistencyError("a circle must be omega-ac")
    max_ac: N = OMEGA if answers[6] else sum(answers)
    cc_class = "omegacc" if cc[2] else "2cc" if cc[1] else "none"
    return Classification(max_ac, cc_class, per_n)


# -- certificate checking ------------------------------------------------------------------------


def _connected_edge_set(g: MultiGraph, es) -> bool:
    sub = g.edge_subgraph(es)
    return bool(es) and is_connected(sub)


def check_certificate(g: MultiGraph, verdict: Verdict) -> bool:
    """Re-verify a verdict's certificate with direct checks on ``g``.

    Positive clauses with empty certificates are accepted as is; the
    negative ones carry concrete evidence that is recounted here.
    """
    c = verdict.certificate
    clause = verdict.clause
    h = make_simple(g) if c.get("graph") == "simple" else g
    if clause == LINK_NOT_4AC:
        h = g.edge_subgraph(c["link"])  # the cut is counted inside the link
    if clause == ISOLATED:
        return degree(g, c["vertex"]) == 0
    if clause == NOT_CYCLIC:
        if "components" in c:
            return check_certificate(g, Verdict(False, DISCONNECTED, c))
        if "vertex" in c:
            return puncture_count(g, {c["vertex"]}) > 1
        return check_certificate(g, Verdict(False, BRIDGE, c))
    if clause == INTERIOR_LINK:
        link = c["link"]
        vs = {x for e in link for x in g.endpoints(e)}
        cuts = [v for v in vs if puncture_count(g, {v}) > 1]
        single_edge = len(link) == 1 and len(vs) == 2
        return not single_edge and len(cuts) >= 2 and _connected_edge_set(g, link)
    if clause == LINK_DEGREE:
        v = c["vertex"]
        d = sum((a == v) + (b == v) for a, b in (g.endpoints(e) for e in c["link"]))
        return d == c["degree"] > 2 and puncture_count(g, {v}) > 1
    if clause == DISCONNECTED:
        parts = [set(p) for p in c["components"]]
        return len(parts) > 1 and all(is_connected(g.induced(p)) for p in parts) and \
            sorted(v for p in parts for v in p) == list(g.vertices) and \
            all(not (g.neighbors(v) - p) for p in parts for v in p)
    if clause in (CYCLIC_PAIR_CUT, COND.format(2)) or (clause == LINK_NOT_4AC and "cut" in c):
        need = 4 if len(c["cut"]) == 2 else 5
        return puncture_count(h, c["cut"]) == c["components"] >= need
    if clause == NOT_CHAIN:
        kind, x = c["node"]
        nbrs = c["neighbours"]
        if len(nbrs) < 3:
            return False
        if kind == "C":
            return puncture_count(g, {x}) >= 3
        # a block meeting three cut vertices: each separates it from something
        return all(kind2 == "C" and puncture_count(g, {v}) >= 2 for kind2, v in nbrs)
    if clause == COND.format(1):
        return degree(h, c["vertex"]) == c["degree"] > 4
    if clause == COND.format(3):
        links = [frozenset(l) for l in c["links"]]
        v, u, w = c["apex"], c["u"], c["w"]
        if not all(_connected_edge_set(h, l) for l in links):
            return False
        if set().union(*links) != set(h.edges) or sum(map(len, links)) != h.num_edges:
            return False
        vs = [set(x for e in l for x in h.endpoints(e)) for l in links]
        want = [{v, u}, {v, w}, {u, w}]
        if any(vs[i] & vs[j] != want[i] & want[j] for i, j in ((0, 1), (0, 2), (1, 2))):
            return False
        deg = lambda l: sum((a == v) + (b == v) for a, b in (h.endpoints(e) for e in l))
        return deg(links[0]) == 2 == deg(links[1])
    if clause == COND.format(4):
        links = [frozenset(l) for l in c["links"]]
        v, a = c["v"], c["a"]
        if not all(_connected_edge_set(h, l) for l in links):
            return False
        if set().union(*links) != set(h.edges) or sum(map(len, links)) != h.num_edges:
            return False
        vs = [set(x for e in l for x in h.endpoints(e)) for l in links]
        if any(vs[i] & vs[j] != {v, a} for i, j in ((0, 1), (0, 2), (1, 2))):
            return False
        return sum((x == v) + (y == v) for x, y in (h.endpoints(e) for e in links[2])) == 2
    if clause == INFLATED:
        core, _ = suppress_degree2(g)
        parts = [set(p) for p in c["parts"]]
        if len(parts) != 4 or sorted(v for p in parts for v in p) != list(core.vertices):
            return False
        if not all(p and is_connected(core.induced(p)) for p in parts):
            return False
        for i, j in itertools.combinations(range(4), 2):
            cross = sum(1 for x, y in core.edges.values()
                        if (x in parts[i] and y in parts[j]) or (x in parts[j] and y in parts[i]))
            if cross != 1:
                return False
        return True
    if clause == NOT_3C:
        core, _ = suppress_degree2(g)
        rest = core.induced(v for v in core.vertices if v not in set(c["separator"]))
        return len(c["separator"]) < 3 and len(components(rest)) > 1
    if clause == NOT_CUBIC:
        core, _ = suppress_degree2(g)
        return degree(core, c["vertex"]) == c["degree"] != 3
    if clause == NOT_SIMPLE:
        core, _ = suppress_degree2(g)
        return not core.is_simple()
    if "shape" in c:
        return recognize_shape(g).value == c["shape"]
    if clause == BRIDGE:
        return len(components(g.without_edges([c["edge"]]))) > len(components(g))
    return verdict.answer
