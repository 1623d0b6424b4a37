"""Exact computations for one-relator separated graphs and their C*-algebras."""

from .core import (
    InvalidGraph, InvalidPresentation, ParseError, Presentation, SeparatedGraph,
    build_one_relator_graph, derive_quantities, normalize, one_vertex_graph,
    parse_element, parse_relation,
)
from .classify import Verdict, classify
from .monoid import decide_equivalence, grothendieck_group, is_stably_finite
from .traces import (
    balanced_trace, disjoint_trace, rfd_trace_pair, solve_trace_feasibility,
    verify_trace_compatibility,
)

__version__ = "0.1.0"

__all__ = [
    "InvalidGraph", "InvalidPresentation", "ParseError", "Presentation", "SeparatedGraph",
    "build_one_relator_graph", "derive_quantities", "normalize", "one_vertex_graph",
    "parse_element", "parse_relation", "Verdict", "classify", "decide_equivalence",
    "grothendieck_group", "is_stably_finite", "balanced_trace", "disjoint_trace",
    "rfd_trace_pair", "solve_trace_feasibility", "verify_trace_compatibility",
]
