"""3-page matching book embeddings of bipartite cubic planar graphs."""

from .coloring import (
    EdgeColoring,
    FaceColoring,
    induced_edge_coloring,
    three_face_coloring,
    verify_edge_coloring,
)
from .decompose import (
    DecompositionTree,
    Join,
    JoinRecord,
    Ladder,
    Leaf,
    augment,
    extract_ladder,
    find_two_edge_cut,
    reassemble,
    ternary_decompose,
)
from .embedding import BookEmbedding, assign_pages, embed, ladder_layout
from .generators import CorpusSpec, corpus, gen_chain, gen_cube, gen_join, gen_ladder, gen_prism
from .graphs import (
    Bipartition,
    DualGraph,
    Face,
    Graph,
    PlanarEmbedding,
    bipartition,
    dual,
    edge_connectivity,
    ensure_bcp,
    faces,
    from_edge_list,
    is_bipartite,
    is_connected,
    is_cubic,
    planar_embedding,
    vertex_connectivity,
)
from .spine import (
    SpineOrder,
    assemble,
    hamiltonian_cycles,
    hamiltonian_order,
    ladder_order,
    reverse_order,
    rotate_order,
    splice,
)
from .verify import (
    Verdict,
    Violation,
    dispersability_check,
    edges_cross,
    mbt_oracle,
    verify_matching_book_embedding,
)

__version__ = "0.1.0"
