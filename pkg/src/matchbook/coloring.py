"""Proper 3-coloring of the faces of a plane bipartite cubic graph and the
3-edge-coloring it induces (each edge takes the pair of its face colors).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import ColoringError, ContractError
from .graphs import Edge, Graph, PlanarEmbedding, norm_edge

FACE_COLOR_NAMES = ("E1", "E2", "E3")
EDGE_COLOR_NAMES = ("E1+E2", "E1+E3", "E2+E3")

# unordered face-color pair -> edge color index
_PAIR_TO_EDGE_COLOR = {
    frozenset((0, 1)): 0,
    frozenset((0, 2)): 1,
    frozenset((1, 2)): 2,
}


@dataclass(frozen=True)
class FaceColoring:
    """Color index (0..2) per face id."""

    colors: tuple[int, ...]

    def label(self, face_id: int) -> str:
        return FACE_COLOR_NAMES[self.colors[face_id]]


@dataclass(frozen=True)
class EdgeColoring:
    """Color index (0..2) per edge; index k corresponds to EDGE_COLOR_NAMES[k]."""

    colors: dict[Edge, int]

    def label(self, u: int, v: int) -> str:
        return EDGE_COLOR_NAMES[self.colors[norm_edge(u, v)]]

    @cached_property
    def classes(self) -> tuple[tuple[Edge, ...], ...]:
        buckets: tuple[list[Edge], ...] = ([], [], [])
        for e in sorted(self.colors):
            buckets[self.colors[e]].append(e)
        return tuple(tuple(b) for b in buckets)


def face_adjacency(e: PlanarEmbedding) -> list[set[int]]:
    """Distinct neighboring faces per face. An edge with the same face on
    both sides (a bridge) makes a proper face coloring impossible."""
    adj: list[set[int]] = [set() for _ in e.faces]
    for u, v in e.graph.edges:
        f1, f2 = e.face_pair(u, v)
        if f1 == f2:
            raise ColoringError(
                f"edge ({u}, {v}) bounds the same face on both sides; "
                "no proper face coloring exists"
            )
        adj[f1].add(f2)
        adj[f2].add(f1)
    return adj


def three_face_coloring(e: PlanarEmbedding) -> FaceColoring:
    """Proper 3-coloring of the faces by backtracking with unit propagation.

    Deterministic gauge: faces are processed in decreasing-degree order, the
    first face gets E1 and its lowest-indexed neighbor gets E2. Exhaustion
    means the input is not a valid plane bipartite cubic embedding.
    """
    adj = face_adjacency(e)
    nfaces = len(adj)
    order = sorted(range(nfaces), key=lambda f: (-len(adj[f]), f))
    domains: list[set[int]] = [{0, 1, 2} for _ in range(nfaces)]
    assignment: list[int | None] = [None] * nfaces

    def propagate(seed: list[int]) -> list[tuple[int, set[int]]] | None:
        """Assign seeds, prune neighbor domains to closure; returns the
        (face, removed-colors) trail for undo, or None on wipeout."""
        trail: list[tuple[int, set[int]]] = []
        queue = list(seed)
        while queue:
            f = queue.pop()
            c = assignment[f]
            for nb in adj[f]:
                if assignment[nb] == c:
                    _undo(trail)
                    return None
                if assignment[nb] is not None or c not in domains[nb]:
                    continue
                domains[nb].discard(c)
                trail.append((nb, {c}))
                if not domains[nb]:
                    _undo(trail)
                    return None
                if len(domains[nb]) == 1:
                    assignment[nb] = next(iter(domains[nb]))
                    trail.append((nb, set()))  # marks an assignment
                    queue.append(nb)
        return trail

    def _undo(trail: list[tuple[int, set[int]]]) -> None:
        for f, removed in reversed(trail):
            if removed:
                domains[f] |= removed
            else:
                assignment[f] = None

    def search(i: int) -> bool:
        while i < nfaces and assignment[order[i]] is not None:
            i += 1
        if i == nfaces:
            return True
        f = order[i]
        for c in sorted(domains[f]):
            assignment[f] = c
            trail = propagate([f])
            if trail is not None:
                if search(i + 1):
                    return True
                _undo(trail)
            assignment[f] = None
        return False

    first = order[0]
    assignment[first] = 0
    domains[first] = {0}
    if propagate([first]) is None:
        raise ColoringError("no proper 3-face-coloring exists")
    neighbors = sorted(adj[first])
    if neighbors:
        second = neighbors[0]
        if assignment[second] is None:
            assignment[second] = 1
            domains[second] = {1}
            if propagate([second]) is None:
                raise ColoringError("no proper 3-face-coloring exists")
    if not search(0):
        raise ColoringError(
            "no proper 3-face-coloring exists; "
            "input is not a valid plane bipartite cubic embedding"
        )
    return FaceColoring(tuple(assignment))  # type: ignore[arg-type]


def induced_edge_coloring(e: PlanarEmbedding, fc: FaceColoring) -> EdgeColoring:
    """Edge coloring where each edge takes the unordered pair of its two
    face colors. Propriety of the result is asserted, not assumed."""
    colors: dict[Edge, int] = {}
    for edge in e.graph.edge_list():
        f1, f2 = e.face_pair(*edge)
        c1, c2 = fc.colors[f1], fc.colors[f2]
        if c1 == c2:
            raise ContractError(
                f"faces on both sides of edge {edge} share color "
                f"{FACE_COLOR_NAMES[c1]}; face coloring is not proper"
            )
        colors[edge] = _PAIR_TO_EDGE_COLOR[frozenset((c1, c2))]
    ec = EdgeColoring(colors)
    if not verify_edge_coloring(e.graph, ec):
        raise ColoringError("induced edge coloring is not proper")
    return ec


def verify_edge_coloring(g: Graph, ec: EdgeColoring) -> bool:
    """True iff no two edges sharing a vertex have the same color."""
    for v in range(g.n):
        seen = set()
        for w in g.adjacency[v]:
            c = ec.colors.get(norm_edge(v, w))
            if c is None:
                return False
            if c in seen:
                return False
            seen.add(c)
    return True


def permute_face_colors(fc: FaceColoring, perm: tuple[int, int, int]) -> FaceColoring:
    """Relabel face colors: color c becomes perm[c]."""
    return FaceColoring(tuple(perm[c] for c in fc.colors))


def edge_color_permutation(perm: tuple[int, int, int]) -> tuple[int, int, int]:
    """The permutation induced on edge colors by a face color relabeling."""
    out = [0, 0, 0]
    for pair, idx in _PAIR_TO_EDGE_COLOR.items():
        image = frozenset(perm[c] for c in pair)
        out[idx] = _PAIR_TO_EDGE_COLOR[image]
    return tuple(out)  # type: ignore[return-value]
