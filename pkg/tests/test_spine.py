"""Hamiltonian spines, ladder ordering patterns, rotation and splicing."""

import pytest

from matchbook.decompose import extract_ladder, find_two_edge_cut, ternary_decompose
from matchbook.errors import SearchBudgetExceeded
from matchbook.generators import gen_join, gen_prism
from matchbook.graphs import from_edge_list
from matchbook.spine import (
    SpineOrder,
    assemble,
    hamiltonian_cycles,
    hamiltonian_order,
    ladder_order,
    ladder_pattern,
    reverse_order,
    rotate_order,
    splice,
)


def _is_ham_cycle(g, order):
    seq = order.order
    return (
        sorted(seq) == list(range(g.n))
        and all(g.has_edge(seq[i], seq[(i + 1) % g.n]) for i in range(g.n))
    )


class TestHamiltonian:
    def test_c6_is_its_own_cycle(self, c6):
        assert hamiltonian_order(c6).order == (0, 1, 2, 3, 4, 5)

    def test_cube(self, cube):
        order = hamiltonian_order(cube)
        assert order is not None
        assert _is_ham_cycle(cube, order)

    def test_disconnected_none(self):
        g = from_edge_list(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
        assert hamiltonian_order(g) is None

    def test_unbalanced_bipartite_none(self):
        star = from_edge_list(4, [(0, 1), (0, 2), (0, 3)])
        assert hamiltonian_order(star) is None

    def test_big_prism(self):
        g = gen_prism(12)
        order = hamiltonian_order(g)
        assert order is not None and _is_ham_cycle(g, order)

    def test_each_cycle_once(self, cube):
        cycles = list(hamiltonian_cycles(cube))
        # the cube has 6 hamiltonian cycles; each shows up once, rooted at 0
        assert len(cycles) == 6
        assert len({c.order for c in cycles}) == 6
        for c in cycles:
            assert c.order[0] == 0 and c.order[1] < c.order[-1]

    def test_budget_raises(self):
        g = gen_prism(10)
        with pytest.raises(SearchBudgetExceeded):
            list(hamiltonian_cycles(g, budget=3))


class TestLadderOrder:
    def test_k1(self):
        # x_1 = 0, y_1 = 1
        assert ladder_order(1).order == (1, 0)

    def test_k2(self):
        # x = (0, 1), y = (2, 3): pattern y1 x1 x2 y2
        assert ladder_order(2).order == (2, 0, 1, 3)

    def test_k3(self):
        # x = (0, 1, 2), y = (3, 4, 5): pattern y1 x1 x2 y2 y3 x3
        assert ladder_order(3).order == (3, 0, 1, 4, 5, 2)

    def test_k0_empty(self):
        assert ladder_order(0).order == ()

    def test_rungs_occupy_adjacent_slots(self):
        for k in range(1, 9):
            order = ladder_order(k).order
            for i in range(k):
                xi, yi = i, k + i
                px, py = order.index(xi), order.index(yi)
                assert abs(px - py) == 1, (k, i)


class TestRotateReverse:
    def test_rotate(self):
        s = SpineOrder(("a", "b", "c"))
        assert rotate_order(s, 1).order == ("b", "c", "a")

    def test_reverse(self):
        s = SpineOrder(("a", "b", "c"))
        assert reverse_order(s).order == ("c", "b", "a")

    def test_rotate_identity(self):
        s = SpineOrder((0, 1, 2, 3))
        assert rotate_order(s, 4).order == s.order


class TestSplice:
    def _parts(self, k):
        g = gen_join(gen_prism(4), (0, 1), gen_prism(4), (2, 3), k)
        gl, ladder, gr, rec = extract_ladder(g, find_two_edge_cut(g))
        left = SpineOrder(tuple(rec.left_vertices))
        right = SpineOrder(tuple(rec.right_vertices))
        mid = SpineOrder(ladder_pattern(ladder))
        return g, rec, left, mid, right

    def test_v_adjacent_to_y1(self):
        g, rec, left, mid, right = self._parts(2)
        combined = splice(left, mid, right, rec)
        pos = combined.position
        assert pos[rec.v] + 1 == pos[rec.ladder.ys[0]]
        # (u, x1) nests over (v, y1)
        assert pos[rec.u] < pos[rec.v] < pos[rec.ladder.ys[0]] < pos[rec.ladder.xs[0]]

    def test_t0_u_next_to_m_nested(self):
        g, rec, left, mid, right = self._parts(0)
        combined = splice(left, mid, right, rec)
        pos = combined.position
        assert pos[rec.u] + 1 == pos[rec.m]
        assert pos[rec.v] < pos[rec.u] < pos[rec.m] < pos[rec.n]

    @pytest.mark.parametrize("k", [1, 2, 3, 4])
    def test_right_end_nesting(self, k):
        g, rec, left, mid, right = self._parts(k)
        pos = splice(left, mid, right, rec).position
        xs, ys = rec.ladder.xs, rec.ladder.ys
        if k % 2 == 0:
            assert pos[ys[-1]] + 1 == pos[rec.n]
            assert pos[xs[-1]] < pos[ys[-1]] < pos[rec.n] < pos[rec.m]
        else:
            assert pos[xs[-1]] + 1 == pos[rec.m]
            assert pos[ys[-1]] < pos[xs[-1]] < pos[rec.m] < pos[rec.n]

    def test_result_is_permutation(self):
        g, rec, left, mid, right = self._parts(3)
        combined = splice(left, mid, right, rec)
        assert sorted(combined.order) == list(range(g.n))


class TestAssemble:
    def test_single_leaf_is_hamiltonian(self):
        g = gen_prism(6)
        tree = ternary_decompose(g)
        order = assemble(tree)
        assert _is_ham_cycle(g, order)

    def test_join_covers_all_vertices(self):
        g = gen_join(gen_prism(8), (0, 1), gen_prism(8), (0, 1), 1)
        tree = ternary_decompose(g)
        order = assemble(tree)
        assert sorted(order.order) == list(range(g.n))
