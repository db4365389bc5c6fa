"""Exact total embedding distributions of Ringel ladders.

The genus and crosscap counts come from rank distributions of symmetric
GF(2) overlap matrices, computed by recurrence, closed form, brute-force
enumeration and direct face tracing.
"""

from .distributions import (
    InvariantError,
    family_poly,
    orientable_part,
    rank_distribution,
    total_embedding_poly,
)
from .exact_poly import ExactPoly, TotalPoly
from .families import Family
from .graph_model import LadderGraph, build_closed_end, build_ringel
from .overlap_enum import InfeasibleError, brute_rank_distribution

__all__ = [
    "ExactPoly",
    "Family",
    "InfeasibleError",
    "InvariantError",
    "LadderGraph",
    "TotalPoly",
    "brute_rank_distribution",
    "build_closed_end",
    "build_ringel",
    "family_poly",
    "orientable_part",
    "rank_distribution",
    "total_embedding_poly",
]
