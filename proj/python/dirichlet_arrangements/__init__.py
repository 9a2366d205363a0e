"""Dirichlet arrangements of graphs with boundary.

Exact characteristic polynomials, chamber enumeration, supersolvability and
fixed-energy harmonic functions, backed by a C++ core.
"""

from ._core import (
    DirichletError,
    Network,
    chamber_counts,
    chamber_point,
    characteristic_polynomial,
    complete_join,
    corpus,
    critical_points,
    energies,
    harmonic,
    interpolated_polynomial,
    is_log_concave,
    is_supersolvable,
    mobius_characteristic,
    orientation_of_point,
    orientations,
    path_network,
    precoloring_count,
    wheatstone,
    wheel_network,
)

__all__ = [
    "DirichletError",
    "Network",
    "chamber_counts",
    "chamber_point",
    "characteristic_polynomial",
    "complete_join",
    "corpus",
    "critical_points",
    "energies",
    "harmonic",
    "interpolated_polynomial",
    "is_log_concave",
    "is_supersolvable",
    "mobius_characteristic",
    "orientation_of_point",
    "orientations",
    "path_network",
    "precoloring_count",
    "wheatstone",
    "wheel_network",
]

__version__ = "0.1.0"
