"""Sortedness graphs, maximal cliques and linear quotients of Veronese-type algebras."""

from .cliques import (
    MaximalClique,
    brute_force_cliques,
    build_graph,
    enumerate_maximal_cliques,
    equivalence_classes,
)
from .invariants import invariant_report, multiplicity_bounds, regularity
from .lattice import Config, ConfigError, enumerate_points, newton_dual
from .order import build_order, verify_linear_quotients
from .sorting import delta, is_sorted_pair, sort_many, sort_pair

__all__ = [
    "Config",
    "ConfigError",
    "MaximalClique",
    "brute_force_cliques",
    "build_graph",
    "build_order",
    "delta",
    "enumerate_maximal_cliques",
    "enumerate_points",
    "equivalence_classes",
    "invariant_report",
    "is_sorted_pair",
    "multiplicity_bounds",
    "newton_dual",
    "regularity",
    "sort_many",
    "sort_pair",
    "verify_linear_quotients",
]
