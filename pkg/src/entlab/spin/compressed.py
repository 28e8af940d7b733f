"""Compressed simulation of the digital-adiabatic transverse-field Ising
evolution, and the full-chain oracle it must match.

The n-spin matchgate evolution acts on 2n Majorana modes; the compressed
walker W(J) is the corresponding orthogonal matrix on that 2n-dimensional
space (log2(2n) qubits), assembled step by step from

* R_0 = I (x) exp(2 i dt Y): the transverse-field rotations in the
  (2k-1, 2k) planes (the printed form lacks the i, which unitarity fixes);
* R_l: the coupling rotations by phi_l = 2 J_l dt in the (2k, 2k+1) planes.

The magnetization is M(J) = -tr(W rho_in W^dag (I (x) Y)) with
rho_in = (I + I (x) Y)/2n, which equals the mean transverse magnetization
of the digitally evolved chain.  The extra diagonal phase factor printed
alongside the step operators breaks the exact correspondence with the
full-chain evolution and is omitted (see the J -> 0 and oracle checks in
the tests).
"""

from __future__ import annotations

import numpy as np

from ..errors import NotPowerOfTwo, TooLarge

_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]])


def _check_chain(n_chain: int) -> None:
    if n_chain < 2 or n_chain & (n_chain - 1):
        raise NotPowerOfTwo(f"chain length must be a power of two, got {n_chain}")
    if n_chain > 16:
        raise TooLarge("compressed walker supports chains up to 16 spins")


def _rot_field(n: int, dt: float) -> np.ndarray:
    block = np.real(np.cos(2 * dt) * np.eye(2) + 1j * np.sin(2 * dt) * _Y)
    return np.kron(np.eye(n), block)


def _rot_coupling(n: int, phi: float) -> np.ndarray:
    r = np.eye(2 * n)
    c, s = np.cos(phi), np.sin(phi)
    for k in range(1, n):
        a, b = 2 * k - 1, 2 * k
        r[a, a] = c
        r[b, b] = c
        r[b, a] = s
        r[a, b] = -s
    return r


def compressed_walker(n_chain: int, j_coupling: float, n_steps: int,
                      dt: float) -> np.ndarray:
    """W(J) = prod_l R_l^T R_0^T with the ramp J_l = (l/n_steps) J."""
    _check_chain(n_chain)
    if n_steps < 1:
        raise TooLarge("need at least one step")
    r0t = _rot_field(n_chain, dt).T
    w = np.eye(2 * n_chain)
    for l in range(1, n_steps + 1):
        phi = 2.0 * (l / n_steps) * j_coupling * dt
        w = w @ (_rot_coupling(n_chain, phi).T @ r0t)
    return w


def compressed_ising_magnetization(n_chain: int, j_coupling: float,
                                   n_steps: int, dt: float) -> float:
    """Mean transverse magnetization after the compressed adiabatic ramp.

    The overall sign is anchored by the no-evolution limit: at J -> 0 the
    chain stays in the ground state of sum Z and the magnetization is +1.
    """
    w = compressed_walker(n_chain, j_coupling, n_steps, dt)
    iy = np.kron(np.eye(n_chain), _Y)
    rho_in = (np.eye(2 * n_chain) + iy) / (2 * n_chain)
    return float(np.real(np.trace(w @ rho_in @ w.conj().T @ iy)))


# ---------------------------------------------------------------------------
# full-chain oracles
# ---------------------------------------------------------------------------

def _chain_operators(n: int):
    sx = np.array([[0, 1], [1, 0]], complex)
    sz = np.array([[1, 0], [0, -1]], complex)

    def on(op, site):
        m = np.eye(1, dtype=complex)
        for q in range(n):
            m = np.kron(m, op if q == site else np.eye(2))
        return m

    hz = sum(on(sz, k) for k in range(n))
    hxx = sum(on(sx, k) @ on(sx, k + 1) for k in range(n - 1))
    z_ops = [on(sz, k) for k in range(n)]
    return hz, hxx, z_ops


def full_chain_adiabatic_magnetization(n_chain: int, j_coupling: float,
                                       n_steps: int, dt: float) -> float:
    """Trotterized adiabatic evolution of the full chain (independent oracle).

    Starts from the ground state of H(0) = sum Z, applies
    exp(-i dt H_Z) then exp(-i dt J_l H_XX) per step, and returns
    -(1/n) sum <Z_k> at the end.
    """
    _check_chain(n_chain)
    if n_chain > 10:
        raise TooLarge("dense oracle capped at 10 spins")
    hz, hxx, z_ops = _chain_operators(n_chain)
    psi = np.zeros(2 ** n_chain, complex)
    psi[-1] = 1.0  # |1...1>, ground state of sum Z
    uz = np.diag(np.exp(-1j * dt * np.diag(hz)))
    vals, vecs = np.linalg.eigh(hxx)
    for l in range(1, n_steps + 1):
        jl = l / n_steps * j_coupling
        psi = uz @ psi
        psi = vecs @ (np.exp(-1j * dt * jl * vals) * (vecs.conj().T @ psi))
    mz = np.mean([np.real(psi.conj() @ z @ psi) for z in z_ops])
    return float(-mz)


def exact_ground_magnetization(n_chain: int, j_coupling: float) -> float:
    """-(1/n) sum <Z_k> in the exact ground state of H(J)."""
    hz, hxx, z_ops = _chain_operators(n_chain)
    vals, vecs = np.linalg.eigh(hz + j_coupling * hxx)
    g = vecs[:, 0]
    return float(-np.mean([np.real(g.conj() @ z @ g) for z in z_ops]))
