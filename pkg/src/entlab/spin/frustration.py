"""Ground-state degeneracy counting for the classical antiferromagnetic
triangular lattice via row-transfer dynamic programming."""

from __future__ import annotations

from itertools import product

import numpy as np

from ..errors import TooManyRows

MAX_ROWS = 17

_POP16 = np.array([bin(i).count("1") for i in range(1 << 16)], dtype=np.int64)


def _popcount(a: np.ndarray) -> np.ndarray:
    a = a.astype(np.int64)
    return _POP16[a & 0xFFFF] + _POP16[(a >> 16) & 0xFFFF]


def _row_horizontal_energy(k: int) -> np.ndarray:
    """Energy of the k-1 in-row bonds for every k-bit configuration."""
    configs = np.arange(1 << k, dtype=np.int64)
    if k < 2:
        return np.zeros(1 << k, dtype=np.int64)
    differ = _popcount((configs ^ (configs >> 1)) & ((1 << (k - 1)) - 1))
    # spins agree -> +1 per bond (antiferromagnetic cost), disagree -> -1
    return (k - 1) - 2 * differ


def _inter_row_energy(k: int, chunk: np.ndarray, prev: np.ndarray) -> np.ndarray:
    """Energy of the 2k bonds between row k (prev) and row k+1 (chunk).

    Site i of row k couples to sites i and i+1 of row k+1; configurations
    are little-endian bit masks (bit i = spin i of the row).
    """
    mask = (1 << k) - 1
    low = chunk[:, None] & mask
    high = (chunk[:, None] >> 1) & mask
    x = prev[None, :]
    disagree = _popcount(x ^ low) + _popcount(x ^ high)
    return 2 * k - 2 * disagree


def triangular_degeneracy(rows: int) -> dict:
    """Exact ground-state degeneracy of the rows-row triangular lattice.

    Row-transfer DP keyed on the last-row configuration: for each new-row
    configuration keep the minimal achievable energy and how many full
    configurations attain it.  Counts are exact Python integers; energies
    use the +- 1 Ising convention with E = sum of bond products.
    Returns degeneracy, ground energy and entropy per spin ln(g)/n.
    """
    if rows < 2:
        raise TooManyRows("need at least 2 rows")
    if rows > MAX_ROWS:
        raise TooManyRows(f"rows capped at {MAX_ROWS} (counts grow too fast)")

    # row 1: single spin, no bonds
    energy = np.zeros(2, dtype=np.int64)
    counts = [1, 1]

    for k in range(1, rows):
        new_size = 1 << (k + 1)
        horiz = _row_horizontal_energy(k + 1)
        prev_configs = np.arange(1 << k, dtype=np.int64)
        best = np.full(new_size, np.iinfo(np.int64).max, dtype=np.int64)
        new_counts = [0] * new_size
        chunk_size = max(1, (1 << 22) // max(1, 1 << k))
        for start in range(0, new_size, chunk_size):
            chunk = np.arange(start, min(start + chunk_size, new_size),
                              dtype=np.int64)
            inter = _inter_row_energy(k, chunk, prev_configs)
            tot = inter + energy[None, :]
            row_best = tot.min(axis=1)
            best[chunk] = row_best + horiz[chunk]
            for local, cfg in enumerate(chunk):
                hit = np.flatnonzero(tot[local] == row_best[local])
                new_counts[cfg] = sum(counts[int(i)] for i in hit)
        energy, counts = best, new_counts

    e0 = int(energy.min())
    degeneracy = sum(c for e, c in zip(energy, counts) if e == e0)
    n = rows * (rows + 1) // 2
    return {
        "degeneracy": int(degeneracy),
        "ground_energy": e0,
        "entropy_per_spin": float(np.log(degeneracy) / n),
        "spins": n,
    }


def brute_force_degeneracy(rows: int) -> dict:
    """Exhaustive 2^n enumeration oracle (small lattices only)."""
    from .models import triangular_bonds

    n = rows * (rows + 1) // 2
    if n > 21:
        raise TooManyRows("brute force capped at 21 spins")
    bonds = triangular_bonds(rows)
    best = None
    count = 0
    for bits in product((1, -1), repeat=n):
        e = sum(bits[i] * bits[j] for i, j in bonds)
        if best is None or e < best:
            best, count = e, 1
        elif e == best:
            count += 1
    return {"degeneracy": count, "ground_energy": int(best), "spins": n}
