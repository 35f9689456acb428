"""Two-edge-cuts, ladder extraction, augmentation and the join tree."""

import pytest

from matchbook.decompose import (
    Join,
    Leaf,
    augment,
    cut_candidates,
    extract_ladder,
    find_two_edge_cut,
    reassemble,
    ternary_decompose,
    tree_height,
    tree_joins,
    tree_leaves,
)
from matchbook.errors import BcpValidationError, DecompositionError
from matchbook.generators import gen_chain, gen_join, gen_prism
from matchbook.graphs import (
    edge_connectivity,
    ensure_bcp,
    from_edge_list,
    is_connected,
    norm_edge,
    vertex_connectivity,
)


@pytest.fixture(scope="module")
def t0_join():
    return gen_join(gen_prism(4), (0, 1), gen_prism(4), (0, 1), 0)


class TestFindCut:
    def test_t0_join_cut_is_the_connector_pair(self, t0_join):
        cut = find_two_edge_cut(t0_join)
        assert cut is not None
        assert {cut.e1, cut.e2} == {(0, 8), (1, 9)}
        assert len(cut.left) == len(cut.right) == 8

    def test_cube_has_none(self, cube):
        assert find_two_edge_cut(cube) is None

    def test_hex_prism_has_none(self):
        assert find_two_edge_cut(gen_prism(6)) is None

    def test_bridge_rejected(self):
        path = from_edge_list(4, [(0, 1), (1, 2), (2, 3)])
        with pytest.raises(DecompositionError):
            find_two_edge_cut(path)

    def test_candidates_ordered_most_balanced_first(self):
        g = gen_join(gen_prism(4), (0, 1), gen_prism(6), (0, 1), 2)
        cuts = cut_candidates(g)
        sizes = [max(len(c.left), len(c.right)) for c in cuts]
        assert sizes == sorted(sizes)


class TestExtractLadder:
    def test_t0_sides_are_cube_minus_edge(self, t0_join):
        gl, ladder, gr, rec = extract_ladder(t0_join, find_two_edge_cut(t0_join))
        assert ladder.k == 0
        assert gl.n == gr.n == 8
        assert gl.num_edges == gr.num_edges == 11
        assert rec.connector_edges == ((0, 8), (1, 9))

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_roundtrip_k(self, k):
        g = gen_join(gen_prism(4), (0, 1), gen_prism(4), (2, 3), k)
        _, ladder, _, rec = extract_ladder(g, find_two_edge_cut(g))
        assert ladder.k == k
        assert set(rec.connector_edges) <= g.edges

    def test_mid_ladder_cut_recovers_full_ladder(self):
        # force the cut onto an interior rung interval of a length-5 ladder
        g = gen_join(gen_prism(4), (0, 1), gen_prism(4), (2, 3), 5)
        xs = list(range(16, 21))
        ys = list(range(21, 26))
        for i in range(4):
            cut_pair = {norm_edge(xs[i], xs[i + 1]), norm_edge(ys[i], ys[i + 1])}
            cut = next(c for c in cut_candidates(g) if {c.e1, c.e2} == cut_pair)
            _, ladder, _, rec = extract_ladder(g, cut)
            assert ladder.k == 5, i
            assert set(ladder.vertices()) == set(xs + ys), i
            assert {rec.u, rec.v} == {0, 1}, i

    def test_attach_pairs_nonadjacent(self, t0_join):
        gl, _, gr, rec = extract_ladder(t0_join, find_two_edge_cut(t0_join))
        lv = rec.left_vertices
        rv = rec.right_vertices
        assert not t0_join.has_edge(rec.u, rec.v)
        assert not t0_join.has_edge(rec.m, rec.n)
        assert rec.u in lv and rec.v in lv and rec.m in rv and rec.n in rv


class TestAugment:
    def test_cube_minus_edge_restores_cube(self, cube):
        side = cube.without_edge(0, 1)
        assert augment(side, 0, 1) == cube

    def test_adjacent_pair_rejected(self, cube):
        side = cube.without_edge(0, 1)
        with pytest.raises(DecompositionError):
            augment(side, 2, 3)  # still adjacent

    def test_augmented_side_is_bcp(self, t0_join):
        gl, _, _, rec = extract_ladder(t0_join, find_two_edge_cut(t0_join))
        lv = rec.left_vertices
        glp = augment(gl, lv.index(rec.u), lv.index(rec.v))
        ensure_bcp(glp)
        assert edge_connectivity(glp) >= 2
        assert glp.degrees() == (3,) * glp.n


class TestTernaryDecompose:
    def test_small_graph_single_leaf(self):
        tree = ternary_decompose(gen_prism(8))  # 16 vertices
        assert isinstance(tree, Leaf)
        assert tree.kind == "small-bcp"

    def test_34_vertex_join_one_level(self):
        g = gen_join(gen_prism(8), (0, 1), gen_prism(8), (0, 1), 1)  # 34 vertices
        tree = ternary_decompose(g)
        assert isinstance(tree, Join)
        assert isinstance(tree.left, Leaf) and isinstance(tree.right, Leaf)
        assert reassemble(tree) == g

    def test_three_component_chain_depth_two(self):
        parts = [gen_prism(8), gen_prism(8), gen_prism(8)]
        g = gen_chain(parts, [0, 0], seed=7)
        tree = ternary_decompose(g)
        assert tree_height(tree) == 2
        assert reassemble(tree) == g

    def test_non_bcp_rejected(self, c6):
        with pytest.raises(BcpValidationError):
            ternary_decompose(c6)

    def test_corpus_roundtrip_and_leaf_contracts(self, full_corpus):
        for name, g in full_corpus:
            if g.n < 26 or edge_connectivity(g) != 2:
                continue
            tree = ternary_decompose(g)
            assert reassemble(tree) == g, name
            for leaf in tree_leaves(tree):
                lg = leaf.graph
                ensure_bcp(lg)
                assert vertex_connectivity(lg) >= 2, name
                if leaf.kind == "small-bcp":
                    assert lg.n <= 24, name
                else:
                    assert lg.n >= 26 and edge_connectivity(lg) == 3, name

    def test_join_connectors_cut_the_node_graph(self, full_corpus):
        for name, g in full_corpus:
            if g.n < 26 or edge_connectivity(g) != 2:
                continue
            for node in tree_joins(ternary_decompose(g)):
                e1, e2 = node.record.boundary_cut
                stripped = node.graph.without_edge(*e1).without_edge(*e2)
                assert not is_connected(stripped), name

    def test_more_leaves_than_joins(self, full_corpus):
        for name, g in full_corpus:
            if g.n < 26 or edge_connectivity(g) != 2:
                continue
            tree = ternary_decompose(g)
            assert len(tree_joins(tree)) < len(tree_leaves(tree)), name
