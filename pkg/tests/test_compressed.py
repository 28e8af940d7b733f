"""Compressed Ising walker against the full-chain digital-adiabatic oracle."""

import numpy as np
import pytest

import entlab.spin as spin
from entlab.errors import NotPowerOfTwo


def test_walker_is_unitary():
    w = spin.compressed_walker(4, 1.0, 50, 0.1)
    assert np.max(np.abs(w @ w.conj().T - np.eye(8))) < 1e-12


def test_matches_oracle_across_grid():
    worst = 0.0
    for jj in range(1, 13):
        j = jj / 6
        steps = 200 * jj
        mc = spin.compressed_ising_magnetization(4, j, steps, 0.1)
        mo = spin.full_chain_adiabatic_magnetization(4, j, steps, 0.1)
        worst = max(worst, abs(mc - mo))
    assert worst < 1e-6


def test_tracks_exact_ground_state():
    devs = []
    for jj in range(1, 13):
        j = jj / 6
        steps = 200 * jj
        mc = spin.compressed_ising_magnetization(4, j, steps, 0.1)
        devs.append(abs(mc - spin.exact_ground_magnetization(4, j)))
    # digitization error envelope of the L=2400, dt=0.1 ramp
    assert max(devs) < 0.05


def test_no_evolution_limit():
    assert abs(spin.compressed_ising_magnetization(4, 1e-12, 1, 0.1) - 1.0) < 1e-9
    assert abs(spin.exact_ground_magnetization(4, 1e-12) - 1.0) < 1e-9


def test_eight_spin_chain_runs():
    m = spin.compressed_ising_magnetization(8, 0.5, 300, 0.1)
    mo = spin.full_chain_adiabatic_magnetization(8, 0.5, 300, 0.1)
    assert abs(m - mo) < 1e-6


def test_power_of_two_required():
    with pytest.raises(NotPowerOfTwo):
        spin.compressed_ising_magnetization(6, 1.0, 10, 0.1)
