"""Exact representation of small qudit systems.

States are dense complex vectors over ``n`` qudits of local dimension ``d``
with big-endian basis indexing: site 0 is the most significant base-d digit
of the basis index.  Everything here is an immutable value; all operations
are pure functions.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionMismatch,
    InvalidPartition,
    TooLarge,
    ZeroNorm,
)

# Dense storage only; thesis scale never exceeds 16 qubits / 6 ququarts.
MAX_DENSE_DIM = 2 ** 20

NORM_TOL = 1e-12
HERM_TOL = 1e-12
EIG_TOL = 1e-10
# Schmidt eigenvalues below this are clamped to zero before entropies.
EIG_CLAMP = 1e-12


def _readonly(a: np.ndarray) -> np.ndarray:
    a = np.asarray(a)
    a.flags.writeable = False
    return a


@dataclass(frozen=True)
class PureState:
    """Normalized pure state of ``n`` qudits with local dimension ``d``.

    ``amps[k]`` is the amplitude of the basis ket whose big-endian base-d
    digits are the sites' levels.
    """

    n: int
    d: int
    amps: np.ndarray

    def __post_init__(self):
        amps = _readonly(np.asarray(self.amps, dtype=complex))
        object.__setattr__(self, "amps", amps)
        if self.d < 2:
            raise DimensionMismatch(f"local dimension must be >= 2, got {self.d}")
        if amps.shape != (self.d ** self.n,):
            raise DimensionMismatch(
                f"amplitude vector has length {amps.shape}, expected {self.d ** self.n}"
            )
        norm = np.linalg.norm(amps)
        if abs(norm - 1.0) > 1e-10:
            raise ZeroNorm(f"state not normalized: |psi| = {norm}")

    @property
    def dim(self) -> int:
        return self.d ** self.n

    def tensor(self) -> np.ndarray:
        """Amplitudes reshaped to an n-index tensor, one axis per site."""
        return self.amps.reshape((self.d,) * self.n)

    def to_json(self) -> str:
        amps = [[float(a.real), float(a.imag)] for a in self.amps]
        return json.dumps({"n": self.n, "d": self.d, "amps": amps})

    @staticmethod
    def from_json(text: str) -> "PureState":
        obj = json.loads(text)
        amps = np.array([complex(re, im) for re, im in obj["amps"]])
        return make_state(int(obj["n"]), int(obj["d"]), amps)


@dataclass(frozen=True)
class DensityMatrix:
    """Hermitian, positive semidefinite, unit-trace matrix."""

    dim: int
    entries: np.ndarray

    def __post_init__(self):
        entries = _readonly(np.asarray(self.entries, dtype=complex))
        object.__setattr__(self, "entries", entries)
        if entries.shape != (self.dim, self.dim):
            raise DimensionMismatch(f"expected {self.dim}x{self.dim} matrix")
        if np.max(np.abs(entries - entries.conj().T)) > HERM_TOL:
            raise DimensionMismatch("density matrix is not Hermitian")
        if abs(np.trace(entries).real - 1.0) > NORM_TOL:
            raise DimensionMismatch("density matrix trace differs from 1")
        if np.linalg.eigvalsh(entries).min() < -EIG_TOL:
            raise DimensionMismatch("density matrix has a negative eigenvalue")


@dataclass(frozen=True)
class Spectrum:
    """Descending list of nonnegative reals (Schmidt eigenvalues)."""

    values: np.ndarray

    def __post_init__(self):
        values = np.asarray(self.values, dtype=float)
        values = np.where(values < EIG_CLAMP, 0.0, values)
        values = _readonly(np.sort(values)[::-1].copy())
        object.__setattr__(self, "values", values)
        if values.size and values[-1] < 0:
            raise DimensionMismatch("negative Schmidt eigenvalue")
        if values.sum() > 1.0 + 1e-10:
            raise DimensionMismatch("Schmidt eigenvalues sum past 1")


@dataclass(frozen=True)
class Bipartition:
    """Sorted proper nonempty subset of site indices to keep."""

    keep: tuple[int, ...]

    def __post_init__(self):
        keep = tuple(sorted(set(int(k) for k in self.keep)))
        object.__setattr__(self, "keep", keep)
        if not keep:
            raise InvalidPartition("bipartition must keep at least one site")

    def validate(self, n: int) -> None:
        if self.keep[0] < 0 or self.keep[-1] >= n:
            raise InvalidPartition(f"site index out of range for n={n}: {self.keep}")
        if len(self.keep) >= n:
            raise InvalidPartition("bipartition must be a proper subset")

    def complement(self, n: int) -> "Bipartition":
        self.validate(n)
        return Bipartition(tuple(i for i in range(n) if i not in self.keep))


def _as_partition(part) -> Bipartition:
    if isinstance(part, Bipartition):
        return part
    return Bipartition(tuple(part))


def make_state(n: int, d: int, amps) -> PureState:
    """Build a normalized PureState from raw amplitudes.

    Raises DimensionMismatch when ``len(amps) != d**n`` and ZeroNorm for a
    zero amplitude vector.
    """
    if d ** n > MAX_DENSE_DIM:
        raise TooLarge(f"d^n = {d ** n} exceeds dense cap {MAX_DENSE_DIM}")
    amps = np.asarray(amps, dtype=complex).ravel()
    if amps.shape != (d ** n,):
        raise DimensionMismatch(f"got {amps.size} amplitudes, expected {d ** n}")
    norm = np.linalg.norm(amps)
    if norm <= 0 or not np.isfinite(norm):
        raise ZeroNorm("amplitude vector has zero norm")
    return PureState(n, d, amps / norm)


def state_from_terms(n: int, d: int, terms: dict) -> PureState:
    """State from a mapping of basis digit tuples (or strings) to amplitudes."""
    amps = np.zeros(d ** n, dtype=complex)
    for key, coeff in terms.items():
        digits = [int(c) for c in key] if isinstance(key, str) else [int(c) for c in key]
        if len(digits) != n or any(not 0 <= c < d for c in digits):
            raise DimensionMismatch(f"bad basis label {key!r} for n={n}, d={d}")
        idx = 0
        for c in digits:
            idx = idx * d + c
        amps[idx] += coeff
    return make_state(n, d, amps)


def reduced_density(state: PureState, part) -> DensityMatrix:
    """Reduced density matrix of the kept sites."""
    m = reshape_matrix(state, part)
    rho = m @ m.conj().T
    return DensityMatrix(m.shape[0], rho)


def schmidt_spectrum(state: PureState, part) -> Spectrum:
    """Schmidt eigenvalues (descending) across the given bipartition.

    Computed from singular values of the reshaped amplitude matrix, which is
    more accurate than diagonalizing the reduced density matrix.
    """
    m = reshape_matrix(state, part)
    s = np.linalg.svd(m, compute_uv=False)
    return Spectrum(s ** 2)


def reshape_matrix(state: PureState, rows) -> np.ndarray:
    """Amplitudes as a d^|rows| x d^(n-|rows|) matrix.

    Row index merges the ``rows`` sites' digits (ascending site order, big
    endian); column index merges the complement the same way.
    """
    part = _as_partition(rows)
    part.validate(state.n)
    keep = part.keep
    other = tuple(i for i in range(state.n) if i not in keep)
    t = state.tensor().transpose(keep + other)
    return t.reshape(state.d ** len(keep), state.d ** len(other))


def haar_random_state(n: int, d: int, seed: int) -> PureState:
    """Haar-random pure state, reproducible for a fixed seed.

    Independent standard complex Gaussian amplitudes, normalized; the RNG is
    counter-based (Philox) so equal seeds are bit-identical across runs.
    """
    if n * np.log2(d) > 30:
        raise TooLarge(f"n log2(d) = {n * np.log2(d):.1f} exceeds 30")
    rng = np.random.Generator(np.random.Philox(key=seed))
    z = rng.standard_normal(d ** n) + 1j * rng.standard_normal(d ** n)
    return make_state(n, d, z)
