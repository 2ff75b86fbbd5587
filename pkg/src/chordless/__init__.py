"""Optimal edge- and total-colouring of chordless graphs."""

from .chordless import (
    DeltaTooSmallError,
    NotChordlessError,
    Trace,
    colour_small_degree,
    edge_colour_chordless,
    merge_articulation_blocks,
    total_colour_chordless,
)
from .colouring import Colouring, PreconditionError
from .graph import Graph, GraphError, biconnected_components, edge_key, is_bipartite, max_degree
from .oracle import (
    OracleError,
    VerificationReport,
    brute_force_chromatic_index,
    brute_force_total_chromatic,
    enumerate_small_chordless,
    generate_chordless,
    verify_edge_colouring,
    verify_total_colouring,
)
from .recognition import (
    ChordWitness,
    Split,
    build_blocks,
    decomposition_tree,
    find_chord,
    find_extremal_split,
    is_2sparse,
    is_chordless,
)
from .sparse import (
    extend_path_total,
    konig_edge_colour,
    list_edge_colour_bipartite,
    list_edge_colour_2sparse,
    total_colour_2sparse,
)

__all__ = [name for name in dir() if not name.startswith("_")]
