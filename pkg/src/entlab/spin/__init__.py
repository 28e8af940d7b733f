"""Spin-chain and lattice physics: models, ED, adiabatic analysis,
entanglement-spectrum distances, frustration counting, diagonal-ensemble
evolution and the compressed Ising walker."""

from .adiabatic import (
    FreeFermionMode,
    adiabatic_profile,
    even_sector_ed,
    free_fermion_modes,
    gap,
    ground_energy,
    overlap,
)
from .compressed import (
    compressed_ising_magnetization,
    compressed_walker,
    exact_ground_magnetization,
    full_chain_adiabatic_magnetization,
)
from .diagonal import (
    DiagonalEnsemble,
    EvolutionConfig,
    critical_timestep,
    diagonal_ensemble,
    evolve_to_diagonal,
    or_trotter_contraction,
    thermal_match,
    time_average_expectation,
)
from .frustration import brute_force_degeneracy, triangular_degeneracy
from .models import (
    SpinModelSpec,
    build_hamiltonian,
    ground_state,
    half_chain_spectrum,
    parity_operator,
    site_operator,
    triangular_bonds,
)
from .spectra import (
    infinite_chain_spectrum,
    ising_field_scan,
    ising_vs_heisenberg_scan,
    second_neighbour_scan,
    spectrum_distance,
    susceptibility_scan,
)

__all__ = [
    "DiagonalEnsemble",
    "EvolutionConfig",
    "FreeFermionMode",
    "SpinModelSpec",
    "adiabatic_profile",
    "brute_force_degeneracy",
    "build_hamiltonian",
    "compressed_ising_magnetization",
    "compressed_walker",
    "critical_timestep",
    "diagonal_ensemble",
    "even_sector_ed",
    "evolve_to_diagonal",
    "exact_ground_magnetization",
    "free_fermion_modes",
    "full_chain_adiabatic_magnetization",
    "gap",
    "ground_energy",
    "ground_state",
    "half_chain_spectrum",
    "infinite_chain_spectrum",
    "ising_field_scan",
    "ising_vs_heisenberg_scan",
    "or_trotter_contraction",
    "overlap",
    "parity_operator",
    "second_neighbour_scan",
    "site_operator",
    "spectrum_distance",
    "susceptibility_scan",
    "thermal_match",
    "time_average_expectation",
    "triangular_bonds",
    "triangular_degeneracy",
]
