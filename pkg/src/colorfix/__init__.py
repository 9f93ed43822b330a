"""Colour-identical pairs, colour fixation and colour-fixation chains in small graphs."""

from .canon import are_isomorphic, canonical_form, canonical_graph6
from .coloring import (
    Budget,
    BudgetExceeded,
    ColorConstraint,
    Coloring,
    chromatic_number,
    chromatic_polynomial_value,
    enumerate_colorings,
    k_colorable,
)
from .construct import ChainGraph, ChainSpec, build_chain, close_chain, odd_wheel
from .criticality import CriticalityCertificate, is_k_chromatic, is_k_critical, subcriticals
from .graph import (
    Graph,
    Graph6Error,
    GraphError,
    connected_components,
    delete_edge,
    delete_vertex,
    is_cycle_graph,
    neighborhood_odd_cycle,
    parse_edge_list,
    parse_graph6,
    to_graph6,
    universal_vertices,
)
from .identity import (
    IdentityPartition,
    cycle_separates,
    identity_partition,
    is_color_fixed_by_odd_cycle,
    is_color_identical_pair,
    semantically_fixed_vertices,
    shared_cycle_pair,
)
from .planarity import is_planar

__version__ = "0.1.0"
