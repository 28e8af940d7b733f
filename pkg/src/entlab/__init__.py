"""entlab: multipartite entanglement invariants, AME states, Bell bounds
and spin-chain analysis for small qudit systems."""

from .core import (
    Bipartition,
    DensityMatrix,
    PureState,
    Spectrum,
    haar_random_state,
    make_state,
    reduced_density,
    reshape_matrix,
    schmidt_spectrum,
    state_from_terms,
)

__all__ = [
    "Bipartition",
    "DensityMatrix",
    "PureState",
    "Spectrum",
    "haar_random_state",
    "make_state",
    "reduced_density",
    "reshape_matrix",
    "schmidt_spectrum",
    "state_from_terms",
]

__version__ = "0.1.0"
