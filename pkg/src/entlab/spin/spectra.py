"""Entanglement-spectrum distances, susceptibility scans and the analytic
half-chain spectra of infinite chains."""

from __future__ import annotations

import numpy as np
from scipy.special import ellipk

from ..core import Spectrum
from ..errors import BadDomain, CriticalPoint, TooLarge
from .models import SpinModelSpec, half_chain_spectrum

KL_CLAMP = 1e-14


def _values(spec) -> np.ndarray:
    if isinstance(spec, Spectrum):
        return spec.values
    return np.sort(np.asarray(spec, float))[::-1]


def spectrum_distance(a, b, metric: str = "kl_sym") -> float:
    """Distance between two entanglement spectra, padded to a common length.

    ``kl_sym`` is the symmetrized Kullback-Leibler form (natural log) with
    entries floored at 1e-14; ``euclidean`` is the plain L2 difference of
    the descending spectra.
    """
    x, y = _values(a), _values(b)
    size = max(len(x), len(y))
    x = np.pad(x, (0, size - len(x)))
    y = np.pad(y, (0, size - len(y)))
    if metric == "euclidean":
        return float(np.linalg.norm(x - y))
    if metric != "kl_sym":
        raise BadDomain(f"unknown metric {metric!r}")
    x = np.clip(x, KL_CLAMP, None)
    y = np.clip(y, KL_CLAMP, None)
    return float(np.sum(x * np.log(x / y)) + np.sum(y * np.log(y / x)))


def susceptibility_scan(model_for_field, fields, delta: float = 0.02,
                        metric: str = "kl_sym") -> dict:
    """E(h) = ||Lambda(h+delta) - Lambda(h)|| / delta over a field grid.

    ``model_for_field`` maps a field value to a SpinModelSpec; the scan
    reports the curve plus peak location and height.
    """
    fields = np.asarray(fields, float)
    if delta <= 0:
        raise BadDomain("delta must be positive")
    values = []
    for hval in fields:
        lam0 = half_chain_spectrum(model_for_field(float(hval)))
        lam1 = half_chain_spectrum(model_for_field(float(hval) + delta))
        values.append(spectrum_distance(lam0, lam1, metric) / delta)
    values = np.array(values)
    peak = int(np.argmax(values))
    return {
        "fields": fields,
        "values": values,
        "peak_field": float(fields[peak]),
        "peak_height": float(values[peak]),
    }


def ising_field_scan(n: int, fields, delta: float = 0.02,
                     boundary: str = "periodic", metric: str = "kl_sym") -> dict:
    """Susceptibility scan of the transverse-field Ising chain."""
    def spec(h):
        return SpinModelSpec(kind="ising_tf", n=n, lam=h, boundary=boundary)

    return susceptibility_scan(spec, fields, delta, metric)


def ising_vs_heisenberg_scan(n: int, fields, metric: str = "kl_sym",
                             boundary: str = "periodic") -> dict:
    """Distance between Ising(h) and isotropic Heisenberg half-chain spectra."""
    heis = half_chain_spectrum(
        SpinModelSpec(kind="xxz", n=n, delta=1.0, boundary=boundary))
    fields = np.asarray(fields, float)
    values = []
    for hval in fields:
        lam = half_chain_spectrum(
            SpinModelSpec(kind="ising_tf", n=n, lam=float(hval), boundary=boundary))
        values.append(spectrum_distance(lam, heis, metric))
    values = np.array(values)
    low = int(np.argmin(values))
    return {
        "fields": fields,
        "values": values,
        "min_field": float(fields[low]),
        "min_height": float(values[low]),
    }


def second_neighbour_scan(n_list, mu: float, lam_grid,
                          boundary: str = "periodic") -> dict:
    """Half-chain entropy of the second-neighbour Ising chain over a field
    grid, for several sizes, plus the log fit of the peak entropies.

    The fitted slope of S_peak against log2 N estimates c/3 of the critical
    theory (l/L is held at 1/2, so finite-size and infinite-size forms share
    the slope).
    """
    lam_grid = np.asarray(lam_grid, float)
    curves = {}
    peaks = []
    for n in n_list:
        ent = []
        for lam in lam_grid:
            spec = SpinModelSpec(kind="ising_2nd_neighbour", n=int(n), mu=mu,
                                 lam=float(lam), boundary=boundary)
            vals = half_chain_spectrum(spec)
            vals = vals[vals > 1e-14]
            ent.append(float(-(vals * np.log2(vals)).sum()))
        ent = np.array(ent)
        curves[int(n)] = ent
        top = int(np.argmax(ent))
        peaks.append((int(n), float(lam_grid[top]), float(ent[top])))
    xs = np.log2([p[0] for p in peaks])
    ys = [p[2] for p in peaks]
    slope, intercept = np.polyfit(xs, ys, 1)
    return {
        "fields": lam_grid,
        "curves": curves,
        "peaks": peaks,
        "slope": float(slope),
        "intercept": float(intercept),
        "c_estimate": float(3 * slope),
    }


# ---------------------------------------------------------------------------
# infinite chains
# ---------------------------------------------------------------------------

def _ising_mode_energy(h: float) -> float:
    """eps = pi K(sqrt(1-x^2)) / K(x) with x = h below and 1/h above the
    critical point (complete elliptic integral of the first kind)."""
    if h <= 0:
        raise BadDomain("ising field must be positive")
    if abs(h - 1.0) < 1e-12:
        raise CriticalPoint("half-chain spectrum formulas break down at h = 1")
    x = h if h < 1 else 1.0 / h
    return float(np.pi * ellipk(1 - x ** 2) / ellipk(x ** 2))


def infinite_chain_spectrum(model: str, param: float, k_max: int = 12) -> Spectrum:
    """Analytic half-chain spectrum of an infinite chain.

    ``model`` is ``ising`` (param = transverse field, != 1) or ``xxz``
    (param = anisotropy > 1).  Mode energies are eps_k = 2 k eps (Ising
    h < 1), 2 (k+1) eps (h > 1) or 2 k arccosh(Delta) (XXZ; the printed
    arccos only makes sense as its hyperbolic counterpart in the gapped
    phase).  Weights are exp(-sum n_k eps_k)/Z over occupations of the
    first ``k_max`` modes.
    """
    if k_max < 8:
        raise BadDomain("k_max must be at least 8")
    if k_max > 24:
        raise TooLarge("k_max beyond 24 is not supported")
    if model == "ising":
        eps = _ising_mode_energy(param)
        energies = np.array([2 * k * eps if param < 1 else 2 * (k + 1) * eps
                             for k in range(k_max)])
    elif model == "xxz":
        if param <= 1:
            raise BadDomain("xxz spectrum needs Delta > 1")
        e0 = float(np.arccosh(param))
        energies = np.array([2 * k * e0 for k in range(k_max)])
    else:
        raise BadDomain(f"unknown model {model!r}")
    # all 2^k_max occupation strings, normalized within the truncation
    weights = np.ones(1)
    for e in energies:
        weights = np.concatenate([weights, weights * np.exp(-e)])
    weights /= weights.sum()
    return Spectrum(np.sort(weights)[::-1])
