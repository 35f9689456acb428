"""Test-corpus factory: ladders, prisms, ladder joins and multi-join chains.

Every emitted graph is checked against the structural predicates it claims
(connected bipartite cubic planar, and 2-edge-connectivity for joins).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .errors import BcpValidationError, GraphInputError, NotBipartiteError
from .graphs import Edge, Graph, edge_connectivity, ensure_bcp, from_edge_list, norm_edge


def gen_ladder(k: int) -> Graph:
    """Ladder with rungs (x_i, y_i): x_i = i-1, y_i = k+i-1 for i = 1..k.

    2k vertices and 3k-2 edges; k = 0 yields the empty graph.
    """
    if k < 0:
        raise GraphInputError("ladder length must be >= 0")
    if k == 0:
        return Graph(0, frozenset())
    edges = [(i, k + i) for i in range(k)]
    edges += [(i, i + 1) for i in range(k - 1)]
    edges += [(k + i, k + i + 1) for i in range(k - 1)]
    return from_edge_list(2 * k, edges)


def gen_prism(m: int) -> Graph:
    """Circular prism: an m-cycle times an edge. Bipartite only for even m."""
    if m < 4 or m % 2 != 0:
        raise GraphInputError(f"prism size {m} rejected: need even m >= 4 for a bipartite result")
    edges = []
    for i in range(m):
        j = (i + 1) % m
        edges.append((i, j))
        edges.append((m + i, m + j))
        edges.append((i, m + i))
    g = from_edge_list(2 * m, edges)
    ensure_bcp(g)
    return g


def gen_cube() -> Graph:
    return gen_prism(4)


def gen_join(left: Graph, e_left: Edge, right: Graph, e_right: Edge, k: int) -> Graph:
    """Join two graphs through a length-k ladder.

    The edge e_left = (u, v) is removed from `left` and e_right = (m, n)
    from `right`; for k >= 1 the connectors are (u, x1), (v, y1), (m, xk),
    (n, yk), for k = 0 they are (u, m) and (v, n). The result is checked to
    be bipartite cubic planar with edge connectivity exactly 2.
    """
    if k < 0:
        raise GraphInputError("ladder length must be >= 0")
    ensure_bcp(left)
    ensure_bcp(right)
    u, v = norm_edge(*e_left)
    m, n = norm_edge(*e_right)
    if not left.has_edge(u, v):
        raise GraphInputError(f"edge {e_left} not in the left graph")
    if not right.has_edge(m, n):
        raise GraphInputError(f"edge {e_right} not in the right graph")

    off = left.n
    lad = off + right.n  # ladder block start; xs first, then ys
    edges = [e for e in left.edge_list() if e != (u, v)]
    edges += [(off + a, off + b) for a, b in right.edge_list() if (a, b) != (m, n)]
    if k == 0:
        edges += [(u, off + m), (v, off + n)]
        total = lad
    else:
        xs = [lad + i for i in range(k)]
        ys = [lad + k + i for i in range(k)]
        edges += [(xs[i], ys[i]) for i in range(k)]
        edges += [(xs[i], xs[i + 1]) for i in range(k - 1)]
        edges += [(ys[i], ys[i + 1]) for i in range(k - 1)]
        edges += [(u, xs[0]), (v, ys[0]), (off + m, xs[-1]), (off + n, ys[-1])]
        total = lad + 2 * k
    g = from_edge_list(total, edges)
    try:
        ensure_bcp(g)
    except BcpValidationError as exc:
        if exc.predicate == "bipartite":
            raise NotBipartiteError(
                "join parity mismatch: a connector endpoint landed in the "
                "same bipartition part as its neighbor"
            ) from exc
        raise
    if edge_connectivity(g) != 2:
        raise GraphInputError("join did not produce an edge connectivity 2 graph")
    return g


def gen_chain(parts: list[Graph], ks: list[int], seed: int = 0) -> Graph:
    """Fold gen_join over `parts` left to right, with ladder lengths `ks`.

    The removed edges are picked by a seeded RNG so corpora are
    reproducible but not all structurally identical.
    """
    if len(parts) < 2 or len(ks) != len(parts) - 1:
        raise GraphInputError("chain needs >= 2 parts and one ladder length per join")
    rng = random.Random(seed)
    acc = parts[0]
    for nxt, k in zip(parts[1:], ks):
        e_left = rng.choice(acc.edge_list())
        e_right = rng.choice(nxt.edge_list())
        acc = gen_join(acc, e_left, nxt, e_right, k)
    return acc


@dataclass(frozen=True)
class CorpusSpec:
    """Recipe for one generated graph: a generator name plus parameters."""

    kind: str  # ladder | prism | cube | join | chain
    params: dict = field(default_factory=dict)

    def build(self) -> Graph:
        if self.kind == "ladder":
            return gen_ladder(self.params["k"])
        if self.kind == "prism":
            return gen_prism(self.params["m"])
        if self.kind == "cube":
            return gen_cube()
        if self.kind == "join":
            left = gen_prism(self.params["left"])
            right = gen_prism(self.params["right"])
            seed = self.params.get("seed", 0)
            rng = random.Random(seed)
            e_left = rng.choice(left.edge_list())
            e_right = rng.choice(right.edge_list())
            return gen_join(left, e_left, right, e_right, self.params["k"])
        if self.kind == "chain":
            parts = [gen_prism(m) for m in self.params["parts"]]
            return gen_chain(parts, list(self.params["ks"]), seed=self.params.get("seed", 0))
        raise GraphInputError(f"unknown generator '{self.kind}'")


def corpus() -> list[tuple[str, Graph]]:
    """The standing acceptance corpus: prisms, prism-pair ladder joins and
    longer multi-join chains of 40..60 vertices (one with 54)."""
    out: list[tuple[str, Graph]] = []
    for m in (4, 6, 8, 10, 12):
        out.append((f"prism-{m}", gen_prism(m)))
    pairs = [(4, 4), (4, 6), (6, 6), (6, 8), (4, 8)]
    for k in (0, 1, 2, 3):
        for a, b in pairs:
            spec = CorpusSpec("join", {"left": a, "right": b, "k": k, "seed": 10 * k + a + b})
            out.append((f"join-p{a}-p{b}-k{k}", spec.build()))
    chains = [
        ("chain-44a", [8, 8, 6], [0, 0], 1),
        ("chain-44b", [6, 8, 6], [1, 1], 2),
        ("chain-56", [8, 8, 10], [2, 0], 3),
        ("chain-54", [10, 10, 6], [1, 0], 4),
        ("chain-42", [12, 6], [3], 5),
        ("chain-52", [8, 8, 8], [1, 1], 6),
    ]
    for name, parts, ks, seed in chains:
        spec = CorpusSpec("chain", {"parts": parts, "ks": ks, "seed": seed})
        out.append((name, spec.build()))
    return out
