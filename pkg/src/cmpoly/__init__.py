"""Toolkit for the connected matching polytope: enumeration, exact facet
computation, the pairwise cut family, minimal separator inequalities, and an
exact branch-and-cut for maximum-weight connected matching."""

from .graph_core import Graph, GraphError, generate, parse_graph
from .inequality import Inequality
from .matchings import (brute_force_max_weight_cm, enumerate_connected_matchings,
                        is_connected_matching)
from .polytope import HRep, VRep, classify, hrep, polytope_dimension, vrep
from .solver import SolveConfig, SolveResult, branch_and_cut

__all__ = [
    "Graph", "GraphError", "generate", "parse_graph", "Inequality",
    "brute_force_max_weight_cm", "enumerate_connected_matchings",
    "is_connected_matching", "HRep", "VRep", "classify", "hrep",
    "polytope_dimension", "vrep", "SolveConfig", "SolveResult",
    "branch_and_cut",
]
