"""Size-3 rectangle cover, rectilinear discrete 3-center and lower-bound reduction tools."""
from .cover3 import Cover3Solution, Provenance, Variant, solve
from .geom_core import ExtRect, Interval, closed_interval, point, rational
from .graphs import PartiteHypergraph3, WeightedGraph
from .kcenter import rect_d3c_decide, rect_d3c_optimize
from .oracles import OracleBudget, brute_cover_k, brute_discrete_kcenter
from .reductions import generate, verify_reduction

__version__ = "0.1.0"

__all__ = [
    "Cover3Solution", "Provenance", "Variant", "solve", "ExtRect", "Interval", "closed_interval",
    "point", "rational", "PartiteHypergraph3", "WeightedGraph", "rect_d3c_decide",
    "rect_d3c_optimize", "OracleBudget", "brute_cover_k", "brute_discrete_kcenter", "generate",
    "verify_reduction",
]
