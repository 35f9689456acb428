"""Spine orderings: hamiltonian cycle search, the fixed ladder ordering
pattern, rotation/reversal, and splicing child orders across a join.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterator

from .decompose import DecompositionTree, JoinRecord, Ladder, Leaf
from .errors import ContractError, EmbeddingError, SearchBudgetExceeded
from .graphs import Graph, bipartition, is_bipartite, is_connected

DEFAULT_NODE_BUDGET = 10**8


@dataclass(frozen=True)
class SpineOrder:
    """A permutation of the vertex ids, position 0 leftmost."""

    order: tuple[int, ...]

    @cached_property
    def position(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.order)}

    def __len__(self) -> int:
        return len(self.order)


def rotate_order(s: SpineOrder, steps: int) -> SpineOrder:
    """Cyclic rotation: rotate_order([a, b, c], 1) = [b, c, a]."""
    if not s.order:
        return s
    k = steps % len(s.order)
    return SpineOrder(s.order[k:] + s.order[:k])


def reverse_order(s: SpineOrder) -> SpineOrder:
    return SpineOrder(tuple(reversed(s.order)))


def rotate_to_last(s: SpineOrder, v: int) -> SpineOrder:
    """Rotate so that v occupies the final spine position."""
    if v not in s.position:
        raise ContractError(f"vertex {v} missing from spine order")
    return rotate_order(s, (s.position[v] + 1) % len(s.order))


def rotate_to_first(s: SpineOrder, v: int) -> SpineOrder:
    if v not in s.position:
        raise ContractError(f"vertex {v} missing from spine order")
    return rotate_order(s, s.position[v])


def hamiltonian_cycles(g: Graph, budget: int | None = None) -> Iterator[SpineOrder]:
    """Enumerate hamiltonian cycle orderings starting at vertex 0.

    Each cycle is emitted once (the two traversal directions are collapsed
    by requiring order[1] < order[-1]). Backtracking prunes on unvisited
    degrees, connectivity of the unvisited region and, for bipartite
    graphs, part balance. Raises SearchBudgetExceeded past `budget` nodes.
    """
    n = g.n
    if n < 3 or not is_connected(g):
        return
    if is_bipartite(g):
        a, b = bipartition(g).parts()
        if len(a) != len(b):
            return  # a hamiltonian cycle alternates sides, so parts must balance
    adj = g.adjacency
    visited = [False] * n
    visited[0] = True
    path = [0]
    nodes = 0

    def feasible() -> bool:
        # every unvisited vertex needs >= 2 usable neighbors, and the
        # unvisited region must be reachable from the path head
        head = path[-1]
        for v in range(n):
            if visited[v]:
                continue
            usable = 0
            for w in adj[v]:
                if not visited[w] or w == head or w == 0:
                    usable += 1
            if usable < 2:
                return False
        reach = {head}
        stack = [head]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if (not visited[w]) and w not in reach:
                    reach.add(w)
                    stack.append(w)
        return len(reach) == n - len(path) + 1

    def extend() -> Iterator[SpineOrder]:
        nonlocal nodes
        nodes += 1
        if budget is not None and nodes > budget:
            raise SearchBudgetExceeded(f"hamiltonian search exceeded {budget} nodes")
        head = path[-1]
        if len(path) == n:
            if 0 in adj[head] and path[1] < path[-1]:
                yield SpineOrder(tuple(path))
            return
        if not feasible():
            return
        for w in adj[head]:
            if visited[w]:
                continue
            visited[w] = True
            path.append(w)
            yield from extend()
            path.pop()
            visited[w] = False

    yield from extend()


def hamiltonian_order(g: Graph, budget: int | None = None) -> SpineOrder | None:
    """First hamiltonian cycle ordering, or None when no cycle exists."""
    for order in hamiltonian_cycles(g, budget=budget):
        return order
    return None


def ladder_pattern(ladder: Ladder) -> tuple[int, ...]:
    """Spine ordering of ladder vertices: rung i contributes (y_i, x_i) for
    odd i and (x_i, y_i) for even i, so every rung occupies two adjacent
    spine slots."""
    out: list[int] = []
    for i in range(ladder.k):
        x, y = ladder.xs[i], ladder.ys[i]
        if i % 2 == 0:  # odd rung number (1-based)
            out.extend((y, x))
        else:
            out.extend((x, y))
    return tuple(out)


def ladder_order(k: int) -> SpineOrder:
    """The ladder ordering over the canonical labels x_i = i-1, y_i = k+i-1
    (matching gen_ladder); empty for k = 0."""
    lad = Ladder(tuple(range(k)), tuple(range(k, 2 * k)))
    return SpineOrder(ladder_pattern(lad))


def splice(left: SpineOrder, ladder: SpineOrder, right: SpineOrder,
           rec: JoinRecord) -> SpineOrder:
    """Combine child orders across a join.

    The left order is rotated so that it ends on the vertex whose connector
    must sit innermost (v for k >= 1, u for k = 0); the right order is
    rotated to start on the inner right-side attach vertex (n for even
    k >= 2, m otherwise). The two boundary connector pairs then nest.
    """
    k = rec.k
    if k == 0:
        lo = rotate_to_last(left, rec.u)
        ro = rotate_to_first(right, rec.m)
    else:
        lo = rotate_to_last(left, rec.v)
        ro = rotate_to_first(right, rec.n if k % 2 == 0 else rec.m)
    mid = ladder.order
    if set(mid) != set(rec.ladder.vertices()):
        raise ContractError("ladder order does not cover the ladder vertices")
    return SpineOrder(lo.order + mid + ro.order)


def assemble(tree: DecompositionTree,
             leaf_order: Callable[[Leaf], SpineOrder] | None = None,
             budget: int | None = DEFAULT_NODE_BUDGET) -> SpineOrder:
    """Bottom-up spine for the tree's root graph: leaf orders (hamiltonian
    by default) spliced join by join."""
    if leaf_order is None:
        def leaf_order(leaf: Leaf) -> SpineOrder:
            order = hamiltonian_order(leaf.graph, budget=budget)
            if order is None:
                raise EmbeddingError(
                    f"no hamiltonian cycle in a {leaf.graph.n}-vertex leaf; "
                    "sub-hamiltonian layouts are not implemented"
                )
            return order

    def rec(node: DecompositionTree) -> SpineOrder:
        if isinstance(node, Leaf):
            return leaf_order(node)
        lo = rec(node.left)
        ro = rec(node.right)
        lo = SpineOrder(tuple(node.left_map[v] for v in lo.order))
        ro = SpineOrder(tuple(node.right_map[v] for v in ro.order))
        mid = SpineOrder(ladder_pattern(node.record.ladder))
        return splice(lo, mid, ro, node.record)

    return rec(tree)
