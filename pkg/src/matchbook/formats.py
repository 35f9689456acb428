"""Interchange formats: the graph/embedding JSON schemas and the standard
graph6 text encoding (6-bit chunks of the column-major upper triangle).
"""

from __future__ import annotations

import json
from typing import Any

from .coloring import EdgeColoring, FaceColoring
from .decompose import DecompositionTree, Leaf
from .embedding import BookEmbedding
from .errors import FormatError, GraphInputError
from .graphs import Edge, Graph, from_edge_list, norm_edge
from .spine import SpineOrder

_G6_HEADER = ">>graph6<<"


def graph_to_json_dict(g: Graph) -> dict[str, Any]:
    return {"n": g.n, "edges": [list(e) for e in g.edge_list()]}


def graph_from_json_dict(d: Any) -> Graph:
    if not isinstance(d, dict) or "n" not in d or "edges" not in d:
        raise FormatError('graph JSON must be an object with "n" and "edges"')
    n, edges = d["n"], d["edges"]
    if not isinstance(n, int) or not isinstance(edges, list):
        raise FormatError('"n" must be an integer and "edges" a list of pairs')
    try:
        return from_edge_list(n, [tuple(e) for e in edges])
    except (GraphInputError, TypeError, ValueError) as exc:
        raise FormatError(f"bad edge list: {exc}") from exc


def emit_graph_json(g: Graph) -> str:
    return json.dumps(graph_to_json_dict(g))


def parse_graph_json(text: str) -> Graph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc.msg}", offset=exc.pos) from exc
    return graph_from_json_dict(data)


def edge_key(e: Edge) -> str:
    return f"{e[0]}-{e[1]}"


def parse_edge_key(key: str) -> Edge:
    parts = key.split("-")
    if len(parts) != 2:
        raise FormatError(f'edge key "{key}" is not of the form "u-v"')
    try:
        return norm_edge(int(parts[0]), int(parts[1]))
    except ValueError as exc:
        raise FormatError(f'edge key "{key}" has non-integer endpoints') from exc


def embedding_to_json_dict(be: BookEmbedding) -> dict[str, Any]:
    return {
        "spine": list(be.spine.order),
        "pages": {edge_key(e): p for e, p in sorted(be.pages.items())},
    }


def embedding_from_json_dict(d: Any) -> BookEmbedding:
    if not isinstance(d, dict) or "spine" not in d or "pages" not in d:
        raise FormatError('embedding JSON must be an object with "spine" and "pages"')
    spine = d["spine"]
    pages = d["pages"]
    if not isinstance(spine, list) or not all(isinstance(v, int) for v in spine):
        raise FormatError('"spine" must be a list of vertex ids')
    if not isinstance(pages, dict):
        raise FormatError('"pages" must map "u-v" keys to page indices')
    parsed: dict[Edge, int] = {}
    for key, p in pages.items():
        if not isinstance(p, int) or p < 0:
            raise FormatError(f'page index for "{key}" must be a nonnegative integer')
        parsed[parse_edge_key(key)] = p
    return BookEmbedding(SpineOrder(tuple(spine)), parsed)


def coloring_to_json_dict(fc: FaceColoring, ec: EdgeColoring) -> dict[str, Any]:
    return {
        "faces": {str(f): fc.label(f) for f in range(len(fc.colors))},
        "edges": {edge_key(e): ec.label(*e) for e in sorted(ec.colors)},
    }


def tree_to_json_dict(tree: DecompositionTree) -> dict[str, Any]:
    if isinstance(tree, Leaf):
        return {
            "type": "leaf",
            "kind": tree.kind,
            "order": tree.graph.n,
            "graph": graph_to_json_dict(tree.graph),
        }
    rec = tree.record
    return {
        "type": "join",
        "k": rec.k,
        "attach": {"u": rec.u, "v": rec.v, "m": rec.m, "n": rec.n},
        "ladder": {"xs": list(rec.ladder.xs), "ys": list(rec.ladder.ys)},
        "connectors": [list(e) for e in rec.connector_edges],
        "left_map": list(tree.left_map),
        "right_map": list(tree.right_map),
        "left": tree_to_json_dict(tree.left),
        "right": tree_to_json_dict(tree.right),
    }


def emit_graph6(g: Graph) -> str:
    """Encode per the standard graph6 format (no header)."""
    n = g.n
    if n <= 62:
        head = [n + 63]
    elif n <= 258047:
        head = [126, (n >> 12) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63]
    else:
        raise FormatError(f"graph6 supports at most 258047 vertices, got {n}")
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    body = []
    for i in range(0, len(bits), 6):
        chunk = 0
        for b in bits[i:i + 6]:
            chunk = (chunk << 1) | b
        body.append(chunk + 63)
    return bytes(head + body).decode("ascii")


def parse_graph6(s: str) -> Graph:
    """Decode a graph6 string; reports the byte offset of any malformed
    character or the point where the body came up short."""
    text = s.strip()
    if text.startswith(_G6_HEADER):
        text = text[len(_G6_HEADER):]
    if not text:
        raise FormatError("empty graph6 string", offset=0)
    data = text.encode("ascii", errors="replace")
    for i, byte in enumerate(data):
        if not 63 <= byte <= 126:
            raise FormatError(f"invalid graph6 character {chr(byte)!r}", offset=i)
    pos = 0
    if data[0] == 126:
        if len(data) >= 2 and data[1] == 126:
            raise FormatError("graph6 '~~' size prefix (n > 258047) not supported", offset=0)
        if len(data) < 4:
            raise FormatError("truncated graph6 size prefix", offset=len(data))
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        pos = 4
    else:
        n = data[0] - 63
        pos = 1
    nbits = n * (n - 1) // 2
    expected = (nbits + 5) // 6
    if len(data) - pos != expected:
        raise FormatError(
            f"graph6 body for n={n} needs {expected} characters, got {len(data) - pos}",
            offset=min(pos + expected, len(data)),
        )
    edges = []
    bit = 0
    for j in range(1, n):
        for i in range(j):
            byte = data[pos + bit // 6] - 63
            if (byte >> (5 - bit % 6)) & 1:
                edges.append((i, j))
            bit += 1
    return from_edge_list(n, edges)
