"""Diagonal ensemble of a Hamiltonian, thermal comparison and the
non-physical master evolution that converges to it.

All evolutions act in the energy eigenbasis, where exp(-M^2 t) with
M = sqrt(Gamma/2) (H x I - I x H^T) is diagonal on the |E_n E_m> pairs, so
the exact, first-order-Taylor and order-reduction-Trotter propagators reduce
to per-pair scalar factors applied to rho_nm.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp

from ..errors import DegenerateSpectrum, Diverged, NoSolution

TROTTER_CONSTANT = 1.2074  # |g| = 1 crossing of the composite-step scalar


@dataclass(frozen=True)
class EvolutionConfig:
    """Step, horizon and method for the diagonal-ensemble evolution."""

    dt: float
    t_final: float
    method: str = "exact"  # exact | taylor | or_trotter
    gamma: float = 0.7
    renormalize: bool = False
    hermitize: bool = False

    def __post_init__(self):
        if self.gamma <= 0 or self.dt <= 0 or self.t_final < 0:
            raise NoSolution("gamma and dt must be positive, t_final nonnegative")
        if self.method not in ("exact", "taylor", "or_trotter"):
            raise NoSolution(f"unknown evolution method {self.method!r}")


@dataclass(frozen=True)
class DiagonalEnsemble:
    """Infinite-time average: weights |c_n|^2 on the energy eigenbasis."""

    weights: np.ndarray
    energies: np.ndarray
    eigvecs: np.ndarray

    def expectation(self, operator: np.ndarray) -> float:
        diag = np.einsum("in,ij,jn->n", self.eigvecs.conj(), operator,
                         self.eigvecs).real
        return float(np.sum(self.weights * diag))


def _dense(h) -> np.ndarray:
    return h.toarray() if sp.issparse(h) else np.asarray(h)


def diagonal_ensemble(h, psi0: np.ndarray) -> DiagonalEnsemble:
    """Weights |<E_n|psi0>|^2; the spectrum must be nondegenerate (1e-9)."""
    hd = _dense(h)
    vals, vecs = np.linalg.eigh(hd)
    if np.min(np.diff(vals)) < 1e-9:
        raise DegenerateSpectrum("diagonal ensemble needs a nondegenerate spectrum")
    c = vecs.conj().T @ np.asarray(psi0, complex)
    return DiagonalEnsemble(np.abs(c) ** 2, vals, vecs)


def critical_timestep(h, gamma: float = 0.7) -> float:
    """dt_c = (2/Gamma) * 1.2074 / (spectral range)^2."""
    vals = np.linalg.eigvalsh(_dense(h))
    spread = float(vals[-1] - vals[0])
    return (2.0 / gamma) * TROTTER_CONSTANT / spread ** 2


def _or_trotter_scalar(dt: float, mu: np.ndarray) -> np.ndarray:
    """Ancilla-projected composite-step factor per M eigenvalue mu.

    One step is exp(-sx z) exp(-sy z) exp(sx z) exp(sy z) with
    z = sqrt(i dt / 2) mu followed by the |0> ancilla projection; within
    each (n, m) pair this is a product of 2x2 exponentials, and the
    projected entry reduces to the closed form below.
    """
    z = np.sqrt(1j * dt / 2.0) * mu
    return np.cosh(2 * z) + np.sqrt(2) / 4 * np.exp(3j * np.pi / 4) * (np.cosh(4 * z) - 1)


def evolve_to_diagonal(h, psi0: np.ndarray, cfg: EvolutionConfig,
                       observable: np.ndarray, n_samples: int = 60) -> dict:
    """Trajectory of Tr(rho(t) O) under the diagonal-ensemble evolution.

    Returns times, values, the final value and the diagonal-ensemble value;
    raises Diverged when the evolved matrix stops being finite (Taylor above
    its stability step).
    """
    de = diagonal_ensemble(h, psi0)
    vals, vecs = de.energies, de.eigvecs
    c = vecs.conj().T @ np.asarray(psi0, complex)
    rho0 = np.outer(c, c.conj())
    ov = vecs.conj().T @ np.asarray(observable, complex) @ vecs
    gaps = vals[:, None] - vals[None, :]
    mu = np.sqrt(cfg.gamma / 2.0) * gaps

    steps_total = max(1, int(round(cfg.t_final / cfg.dt)))
    sample_steps = np.unique(np.linspace(0, steps_total, min(n_samples, steps_total + 1))
                             .astype(int))
    if cfg.method == "exact":
        def factor(p):
            return np.exp(-cfg.dt * p * mu ** 2)
    elif cfg.method == "taylor":
        base = 1.0 - cfg.dt * mu ** 2

        def factor(p):
            return base ** p
    else:
        base = _or_trotter_scalar(cfg.dt, mu)

        def factor(p):
            return base ** p

    times, values = [], []
    de_value = de.expectation(np.asarray(observable))
    for p in sample_steps:
        rho = rho0 * factor(int(p))
        if not np.all(np.isfinite(rho)) or np.max(np.abs(rho)) > 1e8:
            raise Diverged(f"evolution diverged at step {p} (dt={cfg.dt})")
        if cfg.hermitize:
            rho = (rho + rho.conj().T) / 2
        if cfg.renormalize:
            tr = np.trace(rho).real
            if abs(tr) < 1e-300:
                raise Diverged("trace collapsed during renormalization")
            rho = rho / tr
        val = np.trace(rho @ ov)
        if not np.isfinite(val):
            raise Diverged(f"observable diverged at step {p} (dt={cfg.dt})")
        times.append(p * cfg.dt)
        values.append(float(val.real))
    return {
        "times": np.array(times),
        "values": np.array(values),
        "final": values[-1],
        "de_value": de_value,
    }


def or_trotter_contraction(h, gamma: float, dt: float) -> float:
    """Largest off-diagonal |g| of one projected composite step.

    Below 1 the order-reduction Trotter evolution converges exactly to the
    diagonal ensemble; above 1 some coherence grows instead of decaying.
    """
    vals = np.linalg.eigvalsh(_dense(h))
    gaps = vals[:, None] - vals[None, :]
    mu = np.sqrt(gamma / 2.0) * gaps[np.abs(gaps) > 1e-12]
    if mu.size == 0:
        return 0.0
    return float(np.max(np.abs(_or_trotter_scalar(dt, mu))))


def thermal_match(h, psi0: np.ndarray) -> dict:
    """Inverse temperature with Tr(rho_th H) = <psi0|H|psi0> plus the state.

    Solved by bracketing and bisection on the (strictly decreasing) thermal
    energy; the initial energy must lie strictly inside the spectrum.
    """
    from scipy.optimize import brentq

    hd = _dense(h)
    vals, vecs = np.linalg.eigh(hd)
    psi0 = np.asarray(psi0, complex)
    e_target = float(np.real(psi0.conj() @ hd @ psi0))
    if e_target <= vals[0] + 1e-9 or e_target >= vals[-1] - 1e-9:
        raise NoSolution("initial energy outside the open thermal range")

    def mean_energy(beta):
        x = -beta * vals
        x = x - x.max()
        w = np.exp(x)
        w /= w.sum()
        return float(np.sum(w * vals))

    lo, hi = -1.0, 1.0
    while mean_energy(lo) < e_target:
        lo *= 2
        if lo < -1e6:
            raise NoSolution("bracketing failed low")
    while mean_energy(hi) > e_target:
        hi *= 2
        if hi > 1e6:
            raise NoSolution("bracketing failed high")
    beta = float(brentq(lambda b: mean_energy(b) - e_target, lo, hi, xtol=1e-12))
    x = -beta * vals
    x = x - x.max()
    w = np.exp(x)
    w /= w.sum()
    rho = (vecs * w) @ vecs.conj().T
    return {"beta": beta, "rho": rho, "weights": w, "energies": vals,
            "eigvecs": vecs}


def time_average_expectation(h, psi0: np.ndarray, observable: np.ndarray,
                             t_max: float) -> float:
    """Average of <O>(t) over [0, t_max] under exact Schroedinger evolution.

    Uses the closed form of the time integral in the eigenbasis, so the
    oscillatory remainder decays as 1/(t_max * gap).
    """
    hd = _dense(h)
    vals, vecs = np.linalg.eigh(hd)
    c = vecs.conj().T @ np.asarray(psi0, complex)
    ov = vecs.conj().T @ np.asarray(observable, complex) @ vecs
    gaps = vals[:, None] - vals[None, :]
    with np.errstate(divide="ignore", invalid="ignore"):
        phase = np.where(
            np.abs(gaps) < 1e-12,
            1.0,
            (np.exp(-1j * gaps * t_max) - 1.0) / (-1j * gaps * t_max),
        )
    rho_avg = np.outer(c, c.conj()) * phase
    return float(np.real(np.trace(rho_avg @ ov)))
