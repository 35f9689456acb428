"""The full layout pipeline: page assignment, assembly, end-to-end embed."""

import random

import pytest

from matchbook.coloring import EdgeColoring, induced_edge_coloring, three_face_coloring
from matchbook.embedding import (
    BookEmbedding,
    assign_pages,
    embed,
    ladder_layout,
    ladder_region_pages,
    rail_page,
    right_connector_page,
)
from matchbook.errors import BcpValidationError, EmbeddingError
from matchbook.generators import gen_join, gen_prism
from matchbook.graphs import from_edge_list, norm_edge, planar_embedding
from matchbook.spine import SpineOrder, hamiltonian_order, reverse_order, rotate_order
from matchbook.verify import verify_matching_book_embedding


def _assert_valid(g, be, pages=3):
    assert verify_matching_book_embedding(g, be, pages) == []


class TestAssignPages:
    def test_cube_color_driven(self, cube):
        emb = planar_embedding(cube)
        ec = induced_edge_coloring(emb, three_face_coloring(emb))
        spine = hamiltonian_order(cube)
        be = assign_pages(cube, spine, ec)
        _assert_valid(cube, be)

    def test_c6_two_pages(self, c6):
        spine = SpineOrder(tuple(range(6)))
        alternating = EdgeColoring(
            {norm_edge(i, (i + 1) % 6): i % 2 for i in range(6)}
        )
        be = assign_pages(c6, spine, alternating)
        _assert_valid(c6, be, pages=2)
        assert be.pages_used == 2

    def test_non_bcp_fallback_names_predicate(self):
        # a square with both diagonals on one page cannot embed; the input
        # is not cubic, so the failure is reported against the input
        g = from_edge_list(4, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2), (1, 3)])
        spine = SpineOrder((0, 1, 2, 3))
        coloring = EdgeColoring({e: 0 for e in g.edges})
        with pytest.raises(BcpValidationError):
            assign_pages(g, spine, coloring, bound=1)


class TestLadderPagePattern:
    def test_right_connector_parity(self):
        assert right_connector_page(0) == 0
        assert right_connector_page(2) == 0
        assert right_connector_page(1) == 1
        assert right_connector_page(3) == 1

    def test_rails_alternate(self):
        assert [rail_page(j) for j in range(4)] == [1, 0, 1, 0]

    def test_region_pages_cover_join(self):
        g = gen_join(gen_prism(4), (0, 1), gen_prism(4), (2, 3), 3)
        from matchbook.decompose import extract_ladder, find_two_edge_cut

        _, ladder, _, rec = extract_ladder(g, find_two_edge_cut(g))
        pages = ladder_region_pages(rec)
        expected = set(ladder.rungs()) | set(ladder.rails()) | set(rec.connector_edges)
        assert set(pages) == expected
        assert all(pages[r] == 2 for r in ladder.rungs())


class TestLadderLayouts:
    @pytest.mark.parametrize("k", range(1, 11))
    def test_k1_to_k10_verify_on_three_pages(self, k):
        g, be = ladder_layout(k)
        _assert_valid(g, be)
        assert g.n == 2 * k + 4

    def test_connector_pages_follow_parity(self):
        # k=4: u=0, x1=2, xk=5, m=10; k=3: u=0, x1=2, xk=4, m=8
        _, be_even = ladder_layout(4)
        assert be_even.pages[(0, 2)] == be_even.pages[(5, 10)] == 0
        _, be_odd = ladder_layout(3)
        assert be_odd.pages[(0, 2)] == 0
        assert be_odd.pages[(4, 8)] == 1


class TestEmbed:
    def test_cube(self, cube):
        be = embed(cube)
        _assert_valid(cube, be)
        assert be.pages_used == 3

    def test_hex_prism(self):
        g = gen_prism(6)
        be = embed(g)
        _assert_valid(g, be)
        assert be.pages_used == 3

    def test_34_vertex_t0_join(self):
        g = gen_join(gen_prism(8), (0, 1), gen_prism(8), (4, 5), 1)
        be = embed(g)
        _assert_valid(g, be)
        assert be.pages_used == 3

    def test_non_cubic_rejected(self, c6):
        with pytest.raises(BcpValidationError) as exc:
            embed(c6)
        assert exc.value.predicate == "cubic"

    def test_non_bipartite_rejected(self, k4):
        with pytest.raises(BcpValidationError) as exc:
            embed(k4)
        assert exc.value.predicate == "bipartite"

    def test_nonplanar_rejected(self, k33):
        with pytest.raises(BcpValidationError) as exc:
            embed(k33)
        assert exc.value.predicate == "planar"

    def test_disconnected_rejected(self, cube):
        g = from_edge_list(16, [(u, v) for u, v in cube.edges]
                           + [(u + 8, v + 8) for u, v in cube.edges])
        with pytest.raises(BcpValidationError) as exc:
            embed(g)
        assert exc.value.predicate == "connected"

    def test_pages_are_perfect_matchings(self, full_corpus):
        for name, g in full_corpus[:10]:
            be = embed(g)
            for p in range(3):
                cls = [e for e, q in be.pages.items() if q == p]
                covered = sorted(v for e in cls for v in e)
                assert covered == list(range(g.n)), name


class TestRotationReflectionInvariance:
    def test_cube_all_rotations_and_reversal(self, cube):
        be = embed(cube)
        for steps in range(8):
            rotated = BookEmbedding(rotate_order(be.spine, steps), be.pages)
            _assert_valid(cube, rotated)
        reflected = BookEmbedding(reverse_order(be.spine), be.pages)
        _assert_valid(cube, reflected)

    def test_random_mutations_stay_valid(self, full_corpus):
        rng = random.Random(314159)
        small = [(name, g) for name, g in full_corpus if g.n <= 12]
        basics = {name: embed(g) for name, g in small}
        for _ in range(40):
            name, g = small[rng.randrange(len(small))]
            be = basics[name]
            perm = list(range(3))
            rng.shuffle(perm)
            spine = rotate_order(be.spine, rng.randrange(g.n))
            if rng.random() < 0.5:
                spine = reverse_order(spine)
            mutated = BookEmbedding(spine, {e: perm[p] for e, p in be.pages.items()})
            _assert_valid(g, mutated)
