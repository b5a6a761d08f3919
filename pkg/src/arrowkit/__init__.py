"""Arrowing queries for clique unions, recolouring-gadget certification and small-graph catalogs."""

from .graph import (
    BLUE,
    RED,
    Colour,
    Colouring,
    Graph,
    GraphError,
    Graph6Error,
    Pattern,
    UnsupportedSize,
    canonical_form,
    colour_class,
    complement,
    delete_edge,
    find_clique,
    find_clique_union,
    induced_subgraph,
    max_clique_size,
    named_graph,
    parse_graph6,
    write_graph6,
)
from .engine import ARROWS, NOT_ARROWS, ArrowResult, arrows, arrows_pair, find_mono, is_ramsey_minimal
from .oracle import enumerate_colourings_oracle
from .cnf import pattern_placements, to_cnf, write_dimacs
from .catalog import divergence_set, enumerate_graphs_small, scan_corpus

__version__ = "0.1.0"
