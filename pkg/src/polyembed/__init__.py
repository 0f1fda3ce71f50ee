"""Enumeration, verification and construction of polyhedral embeddings of cubic graphs."""

from .constructions import (StarSpec, hex_torus, hex_torus_classes, max_genus_bound, named_graph,
                            star_product, star_product_embedded)
from .embedding import (FaceSet, Obstruction, RotationSystem, dual_is_simple, find_obstruction, genus,
                        is_polyhedral, mirror, parse_rot, petrie_switch, trace_faces, write_rot)
from .graph import (Connectivity, CubicGraph, GraphFormatError, NotCubicError, SmallCycleSet,
                    connectivity_class, parse_graph6, small_cycles, write_graph6)
from .iso import CanonicalCode, canon_embedded, canon_graph
from .reference import GenusProfile, brute_force_polyhedral, gen_cubic, genus_profile, min_genus
from .search import (EmbeddingSummary, Infeasible, ParityState, SearchConfig, compute_classes, enumerate_polyhedral,
                     hexagon_propagate, summarize)

__version__ = "0.1.0"

__all__ = [
    "CubicGraph", "GraphFormatError", "NotCubicError", "Connectivity", "SmallCycleSet",
    "parse_graph6", "write_graph6", "connectivity_class", "small_cycles",
    "RotationSystem", "FaceSet", "Obstruction", "trace_faces", "genus", "is_polyhedral",
    "find_obstruction", "dual_is_simple", "mirror", "petrie_switch", "parse_rot", "write_rot",
    "ParityState", "Infeasible", "SearchConfig", "EmbeddingSummary", "compute_classes", "hexagon_propagate",
    "enumerate_polyhedral", "summarize",
    "CanonicalCode", "canon_embedded", "canon_graph",
    "StarSpec", "star_product", "star_product_embedded", "hex_torus", "hex_torus_classes",
    "named_graph", "max_genus_bound",
    "GenusProfile", "brute_force_polyhedral", "genus_profile", "min_genus", "gen_cubic",
]
