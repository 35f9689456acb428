"""Ground truth for book embeddings: the crossing/matching verifier, exact
page-count search for a fixed spine, and the exhaustive small-graph oracle.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import ContractError, OracleLimitError
from .graphs import Edge, Graph
from .spine import SpineOrder

ORACLE_MAX_VERTICES = 10


@dataclass(frozen=True)
class Violation:
    """One verifier failure: either two same-page edges cross, or a vertex
    carries two edges on one page."""

    kind: str  # "crossing" | "matching-degree"
    page: int
    edges: tuple[Edge, ...]
    vertex: int | None = None

    def describe(self) -> str:
        if self.kind == "crossing":
            return f"page {self.page}: edges {self.edges[0]} and {self.edges[1]} cross"
        return (f"page {self.page}: vertex {self.vertex} has "
                f"{len(self.edges)} incident edges {self.edges}")


def edges_cross(spine: SpineOrder, e1: Edge, e2: Edge) -> bool:
    """True iff the spine spans of e1 and e2 interleave. Edges sharing an
    endpoint never cross (the matching rule covers adjacency)."""
    if set(e1) & set(e2):
        return False
    a, b = sorted((spine.position[e1[0]], spine.position[e1[1]]))
    c, d = sorted((spine.position[e2[0]], spine.position[e2[1]]))
    return a < c < b < d or c < a < d < b


def verify_matching_book_embedding(g: Graph, be, pages: int = 3) -> list[Violation]:
    """All violations of the matching book embedding rules; empty means
    valid in at most `pages` pages.

    `be` needs a `spine` (SpineOrder) and a `pages` edge->page mapping.
    Missing edges, unknown vertices or out-of-range page indices are
    caller contract errors, not violations.
    """
    spine = be.spine
    assignment: dict[Edge, int] = be.pages
    if sorted(spine.order) != list(range(g.n)):
        raise ContractError("spine is not a permutation of the graph's vertices")
    for e in g.edges:
        if e not in assignment:
            raise ContractError(f"edge {e} has no page assignment")
    for e, p in assignment.items():
        if e not in g.edges:
            raise ContractError(f"page assignment covers unknown edge {e}")
        if not 0 <= p < pages:
            raise ContractError(f"edge {e} assigned page {p}, outside 0..{pages - 1}")

    violations: list[Violation] = []
    by_page: dict[int, list[Edge]] = {}
    for e in sorted(assignment):
        by_page.setdefault(assignment[e], []).append(e)
    for p, bucket in sorted(by_page.items()):
        incident: dict[int, list[Edge]] = {}
        for e in bucket:
            for v in e:
                incident.setdefault(v, []).append(e)
        for v, es in sorted(incident.items()):
            if len(es) > 1:
                violations.append(Violation("matching-degree", p, tuple(es), vertex=v))
        for e1, e2 in itertools.combinations(bucket, 2):
            if edges_cross(spine, e1, e2):
                violations.append(Violation("crossing", p, (e1, e2)))
    return violations


def conflict_adjacency(g: Graph, spine: SpineOrder) -> tuple[list[Edge], list[set[int]]]:
    """Conflict graph over edges for a fixed spine: two edges conflict when
    they share an endpoint or their spans interleave."""
    edges = g.edge_list()
    adj: list[set[int]] = [set() for _ in edges]
    for i, j in itertools.combinations(range(len(edges)), 2):
        e1, e2 = edges[i], edges[j]
        if set(e1) & set(e2) or edges_cross(spine, e1, e2):
            adj[i].add(j)
            adj[j].add(i)
    return edges, adj


def color_classes(adj: list[set[int]], k: int) -> list[int] | None:
    """Exact k-coloring of a conflict graph by backtracking, largest degree
    first, or None. New color classes are opened in index order, which
    prunes color-permutation symmetry."""
    n = len(adj)
    if n == 0:
        return []
    order = sorted(range(n), key=lambda v: (-len(adj[v]), v))
    colors = [-1] * n

    def place(i: int, used: int) -> bool:
        if i == n:
            return True
        v = order[i]
        forbidden = {colors[w] for w in adj[v] if colors[w] != -1}
        for c in range(min(used + 1, k)):
            if c in forbidden:
                continue
            colors[v] = c
            if place(i + 1, max(used, c + 1)):
                return True
            colors[v] = -1
        return False

    return colors if place(0, 0) else None


def page_assignment_for_spine(g: Graph, spine: SpineOrder, max_pages: int) -> dict[Edge, int] | None:
    """Exact search for a page assignment valid on the given spine, or None
    when the spine admits no `max_pages`-page matching embedding."""
    edges, adj = conflict_adjacency(g, spine)
    colors = color_classes(adj, max_pages)
    if colors is None:
        return None
    return {e: c for e, c in zip(edges, colors)}


def _spine_candidates(n: int):
    """All spine orders with vertex 0 first; reflections are skipped since
    a reversed spine has the same page structure."""
    for perm in itertools.permutations(range(1, n)):
        if n >= 3 and perm[0] > perm[-1]:
            continue
        yield (0,) + perm


def mbt_oracle(g: Graph, page_bound: int | None = None,
               max_vertices: int = ORACLE_MAX_VERTICES) -> int | None:
    """Exact minimum page count over every spine order by brute force.

    Returns None when `page_bound` is given and the true value exceeds it.
    Refuses graphs above `max_vertices` rather than approximating.
    """
    if g.n > max_vertices:
        raise OracleLimitError(
            f"graph has {g.n} vertices; the exhaustive oracle is capped at {max_vertices}"
        )
    if g.num_edges == 0:
        return 0 if page_bound is None or page_bound >= 0 else None
    lower = max(g.degrees())  # incident edges conflict pairwise
    cap = page_bound if page_bound is not None else g.num_edges
    best: int | None = None
    for order in _spine_candidates(g.n):
        spine = SpineOrder(order)
        _, adj = conflict_adjacency(g, spine)
        top = (best - 1) if best is not None else cap
        for k in range(lower, top + 1):
            if color_classes(adj, k) is not None:
                best = k
                break
        if best == lower:
            break  # no order can beat the degree lower bound
    if best is None or (page_bound is not None and best > page_bound):
        return None
    return best


@dataclass(frozen=True)
class Verdict:
    """Outcome of a dispersability check: the best page count found, the
    maximum degree it is compared against, and how it was obtained."""

    dispersable: bool
    pages: int
    max_degree: int
    method: str  # "oracle" | "pipeline"


def dispersability_check(g: Graph, max_vertices: int = ORACLE_MAX_VERTICES) -> Verdict:
    """Compare the best page count against the maximum degree. Small graphs
    use the exact oracle; larger ones use the constructive pipeline, whose
    3-page output witnesses dispersability for cubic inputs."""
    if g.num_edges == 0:
        return Verdict(True, 0, 0, "oracle")
    delta = max(g.degrees())
    if g.n <= max_vertices:
        pages = mbt_oracle(g, max_vertices=max_vertices)
        assert pages is not None
        return Verdict(pages == delta, pages, delta, "oracle")
    from .embedding import embed  # deferred: embedding depends on this module

    be = embed(g)
    pages = max(be.pages.values()) + 1
    if pages != delta:
        raise ContractError("pipeline witness does not reach the degree lower bound")
    return Verdict(True, pages, delta, "pipeline")
