"""Search for connected threshold graphs with maximum adjacency spectral radius."""

from threshmax.graph_core import (
    Composition,
    CreationSequence,
    ProblemInstance,
    composition_to_sequence,
    edge_count,
    parse_sequence,
    to_adjacency,
    to_composition,
)
from threshmax.rng import RandomStream
from threshmax.spectral import (
    SpectralResult,
    full_spectrum,
    spectral_radius,
    spectral_radius_quotient,
)

__all__ = [
    "Composition",
    "CreationSequence",
    "ProblemInstance",
    "RandomStream",
    "SpectralResult",
    "composition_to_sequence",
    "edge_count",
    "full_spectrum",
    "parse_sequence",
    "spectral_radius",
    "spectral_radius_quotient",
    "to_adjacency",
    "to_composition",
]
