"""Plain-text edge lists: ``edge a b`` lines, optional ``vertex a`` lines, ``#`` comments."""

from __future__ import annotations

from arcconn.errors import GraphError
from arcconn.graph import MultiGraph


class ParseError(GraphError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def parse_graph(text: str) -> MultiGraph:
    """Parse the edge-list format; repeated edges become parallel edges.

    Vertex ids are numbered in order of first appearance and keep their
    tokens as labels; edge ids follow line order.
    """
    names: dict[str, int] = {}
    edges: list[tuple[int, int]] = []

    def vid(tok: str) -> int:
        if tok not in names:
            names[tok] = len(names)
        return names[tok]

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        kind, args = parts[0], parts[1:]
        if kind == "edge":
            if len(args) != 2:
                raise ParseError(lineno, f"'edge' takes two vertex ids, got {len(args)}")
            edges.append((vid(args[0]), vid(args[1])))
        elif kind == "vertex":
            if len(args) != 1:
                raise ParseError(lineno, f"'vertex' takes one id, got {len(args)}")
            vid(args[0])
        else:
            raise ParseError(lineno, f"unknown directive {kind!r}")
    labels = {i: tok for tok, i in names.items()}
    return MultiGraph(names.values(), edges, labels)


def serialize_graph(g: MultiGraph) -> str:
    """Inverse of :func:`parse_graph` up to renumbering; isolated vertices get ``vertex`` lines."""
    lines = []
    used = set()
    for u, v in g.edges.values():
        used.update((u, v))
    for v in g.vertices:
        if v not in used:
            lines.append(f"vertex {_token(g, v)}")
    for u, v in g.edges.values():
        lines.append(f"edge {_token(g, u)} {_token(g, v)}")
    return "\n".join(lines) + "\n"


def _token(g: MultiGraph, v: int) -> str:
    tok = g.label(v)
    if not tok or any(c.isspace() for c in tok) or "#" in tok:
        raise GraphError(f"vertex label {tok!r} cannot be written as a token")
    return tok
