"""Core graph model: simple undirected graphs with dense integer vertices,
structural predicates, brute-force connectivity, planar embeddings as
rotation systems, face extraction and dual construction.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import networkx as nx

from .errors import (
    BcpValidationError,
    ContractError,
    DisconnectedGraphError,
    GraphInputError,
    NotBipartiteError,
    NotPlanarError,
)

Edge = tuple[int, int]


def norm_edge(u: int, v: int) -> Edge:
    """Canonical (min, max) form used for every edge key in the package."""
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1.

    Edges are stored as normalized (min, max) pairs; adjacency is derived
    and cached. Instances are immutable and safe to share.
    """

    n: int
    edges: frozenset[Edge]

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(a)) for a in nbrs)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adjacency)

    def has_edge(self, u: int, v: int) -> bool:
        return norm_edge(u, v) in self.edges

    def edge_list(self) -> list[Edge]:
        return sorted(self.edges)

    def with_edge(self, u: int, v: int) -> "Graph":
        if u == v:
            raise GraphInputError(f"loop edge ({u}, {v}) rejected")
        return Graph(self.n, self.edges | {norm_edge(u, v)})

    def without_edge(self, u: int, v: int) -> "Graph":
        e = norm_edge(u, v)
        if e not in self.edges:
            raise GraphInputError(f"edge {e} not present")
        return Graph(self.n, self.edges - {e})

    def relabel(self, mapping: Sequence[int]) -> "Graph":
        """New graph where old vertex i becomes mapping[i]."""
        if sorted(mapping) != list(range(self.n)):
            raise GraphInputError("relabel mapping must be a permutation of the vertices")
        return Graph(self.n, frozenset(norm_edge(mapping[u], mapping[v]) for u, v in self.edges))

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", tuple[int, ...]]:
        """Dense subgraph on `vertices` plus the label map (new -> old)."""
        labels = tuple(sorted(set(vertices)))
        index = {old: new for new, old in enumerate(labels)}
        keep = frozenset(
            norm_edge(index[u], index[v]) for u, v in self.edges if u in index and v in index
        )
        return Graph(len(labels), keep), labels

    def to_nx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edge_list())
        return g


def from_edge_list(n: int, pairs: Iterable[Sequence[int]]) -> Graph:
    """Build a Graph, deduplicating edges and rejecting loops and
    out-of-range endpoints."""
    if n < 0:
        raise GraphInputError(f"vertex count {n} is negative")
    edges = set()
    for pair in pairs:
        u, v = pair
        if u == v:
            raise GraphInputError(f"loop edge ({u}, {v}) rejected")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphInputError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        edges.add(norm_edge(u, v))
    return Graph(n, frozenset(edges))


def is_cubic(g: Graph) -> bool:
    return g.n > 0 and all(d == 3 for d in g.degrees())


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    seen = _component(g, 0)
    return len(seen) == g.n


def _component(g: Graph, start: int, blocked_edges: frozenset[Edge] = frozenset(),
               blocked_vertices: frozenset[int] = frozenset()) -> set[int]:
    """Vertices reachable from `start`, ignoring blocked edges/vertices."""
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for v in g.adjacency[u]:
            if v in seen or v in blocked_vertices:
                continue
            if blocked_edges and norm_edge(u, v) in blocked_edges:
                continue
            seen.add(v)
            queue.append(v)
    return seen


@dataclass(frozen=True)
class Bipartition:
    """Per-vertex side labels (0 or 1); every edge joins side 0 to side 1."""

    side: tuple[int, ...]

    def parts(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        a = tuple(v for v, s in enumerate(self.side) if s == 0)
        b = tuple(v for v, s in enumerate(self.side) if s == 1)
        return a, b


def bipartition(g: Graph) -> Bipartition:
    """2-color a connected graph by BFS; raises NotBipartiteError on an odd
    cycle."""
    if g.n == 0:
        return Bipartition(())
    if not is_connected(g):
        raise DisconnectedGraphError("bipartition requires a connected graph")
    side = [-1] * g.n
    side[0] = 0
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for v in g.adjacency[u]:
            if side[v] == -1:
                side[v] = 1 - side[u]
                queue.append(v)
            elif side[v] == side[u]:
                raise NotBipartiteError(f"odd cycle through edge ({u}, {v})")
    return Bipartition(tuple(side))


def is_bipartite(g: Graph) -> bool:
    try:
        bipartition(g)
        return True
    except NotBipartiteError:
        return False


def edge_connectivity(g: Graph) -> int:
    """Minimum number of edges whose removal disconnects g.

    Brute force over removal sets of increasing size; a set of min-degree
    edges always disconnects, so the loop is bounded by delta(g).
    """
    if g.n < 2:
        raise GraphInputError("edge connectivity needs at least 2 vertices")
    if not is_connected(g):
        raise DisconnectedGraphError("edge connectivity requires a connected graph")
    delta = min(g.degrees())
    edges = g.edge_list()
    for k in range(1, delta + 1):
        if k == delta:
            return delta  # the edges at a min-degree vertex disconnect it
        for subset in itertools.combinations(edges, k):
            blocked = frozenset(subset)
            if len(_component(g, 0, blocked_edges=blocked)) != g.n:
                return k
    return delta


def vertex_connectivity(g: Graph) -> int:
    """Minimum number of vertices whose deletion disconnects g; n-1 for
    complete graphs."""
    if g.n < 2:
        raise GraphInputError("vertex connectivity needs at least 2 vertices")
    if not is_connected(g):
        raise DisconnectedGraphError("vertex connectivity requires a connected graph")
    if g.num_edges == g.n * (g.n - 1) // 2:
        return g.n - 1
    # kappa <= kappa' <= delta, so a separating set of size <= delta exists.
    delta = min(g.degrees())
    for k in range(1, min(delta, g.n - 2) + 1):
        for subset in itertools.combinations(range(g.n), k):
            blocked = frozenset(subset)
            rest = [v for v in range(g.n) if v not in blocked]
            if len(rest) < 2:
                continue
            reached = _component(g, rest[0], blocked_vertices=blocked)
            if len(reached) != len(rest):
                return k
    raise ContractError("no separating set found in a non-complete graph")


def ensure_bcp(g: Graph) -> Bipartition:
    """Check connected + cubic + bipartite + planar, returning the
    bipartition; raises BcpValidationError naming the failed predicate."""
    if g.n == 0:
        raise BcpValidationError("nonempty", "the empty graph is rejected")
    if not is_connected(g):
        raise BcpValidationError("connected")
    if not is_cubic(g):
        raise BcpValidationError("cubic")
    try:
        parts = bipartition(g)
    except NotBipartiteError as exc:
        raise BcpValidationError("bipartite", str(exc)) from exc
    ok, _ = nx.check_planarity(g.to_nx(), counterexample=False)
    if not ok:
        raise BcpValidationError("planar")
    return parts


@dataclass(frozen=True)
class Face:
    """A face of a planar embedding: the cyclic sequence of directed edges
    walked along its boundary."""

    id: int
    boundary: tuple[Edge, ...]

    @property
    def length(self) -> int:
        return len(self.boundary)

    def vertices(self) -> tuple[int, ...]:
        return tuple(u for u, _ in self.boundary)


@dataclass(frozen=True)
class PlanarEmbedding:
    """A rotation system: for each vertex, the cyclic order of its
    neighbors. Faces are derived by walking darts."""

    graph: Graph
    rotation: tuple[tuple[int, ...], ...]

    @cached_property
    def _rotation_index(self) -> tuple[dict[int, int], ...]:
        return tuple({w: i for i, w in enumerate(rot)} for rot in self.rotation)

    def next_dart(self, u: int, v: int) -> Edge:
        """Successor of dart (u -> v) along its face walk."""
        rot = self.rotation[v]
        i = self._rotation_index[v][u]
        return (v, rot[(i + 1) % len(rot)])

    @cached_property
    def faces(self) -> tuple[Face, ...]:
        g = self.graph
        if g.num_edges == 0:
            # a single vertex bounds one (outer) face
            return (Face(0, ()),)
        darts = sorted([(u, v) for u, v in g.edges] + [(v, u) for u, v in g.edges])
        unused = set(darts)
        result = []
        for start in darts:
            if start not in unused:
                continue
            walk = []
            d = start
            while True:
                walk.append(d)
                unused.discard(d)
                d = self.next_dart(*d)
                if d == start:
                    break
            result.append(Face(len(result), tuple(walk)))
        if unused:
            raise ContractError("face walk did not consume every directed edge")
        return tuple(result)

    @cached_property
    def face_of_dart(self) -> dict[Edge, int]:
        out = {}
        for f in self.faces:
            for d in f.boundary:
                out[d] = f.id
        return out

    def face_pair(self, u: int, v: int) -> tuple[int, int]:
        """The two faces incident to edge (u, v), one per direction."""
        return (self.face_of_dart[(u, v)], self.face_of_dart[(v, u)])


def planar_embedding(g: Graph) -> PlanarEmbedding:
    """Compute a rotation system for g, or raise NotPlanarError.

    The embedding comes from networkx's planarity test; the Euler count
    V - E + F = 2 is asserted on the result rather than trusted.
    """
    if g.n == 0:
        raise GraphInputError("cannot embed the empty graph")
    if not is_connected(g):
        raise DisconnectedGraphError("planar embedding requires a connected graph")
    ok, emb = nx.check_planarity(g.to_nx(), counterexample=False)
    if not ok:
        raise NotPlanarError(f"graph with {g.n} vertices and {g.num_edges} edges is not planar")
    rotation = tuple(tuple(emb.neighbors_cw_order(v)) for v in range(g.n))
    result = PlanarEmbedding(g, rotation)
    if g.n - g.num_edges + len(result.faces) != 2:
        raise ContractError("embedding violates Euler's formula")
    return result


def faces(e: PlanarEmbedding) -> tuple[Face, ...]:
    return e.faces


@dataclass(frozen=True)
class DualGraph:
    """Dual of a planar embedding: one vertex per face, one dual edge per
    primal edge (multi-edges kept), annotated with the primal edge.

    `face_lengths` are the boundary lengths of the dual's own faces,
    computed by walking the dual rotation system; they always equal the
    primal vertex degrees, so a cubic primal forces all-triangle duals.
    """

    num_vertices: int
    edges: tuple[tuple[int, int, Edge], ...]

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        out = [0] * self.num_vertices
        for f1, f2, _ in self.edges:
            out[f1] += 1
            out[f2] += 1
        return tuple(out)

    def simple_edges(self) -> set[Edge]:
        return {norm_edge(f1, f2) for f1, f2, _ in self.edges}

    @property
    def num_edges(self) -> int:
        return len(self.edges)


def dual(e: PlanarEmbedding) -> DualGraph:
    fs = e.faces
    dual_edges = tuple(
        (*sorted(e.face_pair(u, v)), (u, v)) for u, v in e.graph.edge_list()
    )
    return DualGraph(len(fs), dual_edges)


def dual_face_lengths(e: PlanarEmbedding) -> tuple[int, ...]:
    """Boundary lengths of the dual's faces.

    A dual face walk visits the darts (u, v1), (u, v2), ... around one
    primal vertex in rotation order, so the orbit is walked per vertex.
    """
    lengths = []
    for u in range(e.graph.n):
        rot = e.rotation[u]
        if not rot:
            continue
        start = (u, rot[0])
        d = start
        count = 0
        while True:
            count += 1
            i = e._rotation_index[u][d[1]]
            d = (u, rot[(i + 1) % len(rot)])
            if d == start:
                break
        lengths.append(count)
    return tuple(lengths)
