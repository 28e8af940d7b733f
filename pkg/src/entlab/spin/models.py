"""Spin-chain and triangular-lattice Hamiltonian builders plus dense/sparse ED.

Conventions follow the chapters each model comes from:

* ``ising_tf``: H = -(1/2) sum_j (J sx_j sx_j+1 + lam sz_j); the periodic sum
  runs over all N bonds literally (so N=2 counts the bond twice, which the
  1/2 absorbs).  This normalization matches the free-fermion closed forms.
* ``ising_tf_parallel``: H = J sum sz sz + g sum sx + h sum sz (open chain),
  the nonintegrable model used for diagonal-ensemble studies.
* ``ising_2nd_neighbour``: H = (1/2)(sum sx sx + mu sum sx sx(2nd) + lam sum sz).
* ``xxz``: H = sum_bonds (sx sx + sy sy + delta sz sz), bonds deduplicated.
* ``triangular_ising``: antiferromagnetic rows 1..r with J sum_up-triangles
  sz sz + lam sum sx.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import scipy.sparse as sp

from ..core import PureState, make_state
from ..errors import BadN, TooLarge

_SX = sp.csr_matrix(np.array([[0, 1], [1, 0]], complex))
_SY = sp.csr_matrix(np.array([[0, -1j], [1j, 0]], complex))
_SZ = sp.csr_matrix(np.array([[1, 0], [0, -1]], complex))

DENSE_LIMIT = 4096  # beyond this dimension the builders stay sparse

KINDS = ("ising_tf", "ising_tf_parallel", "ising_2nd_neighbour", "xxz",
         "triangular_ising")


@dataclass(frozen=True)
class SpinModelSpec:
    """Declarative Hamiltonian description."""

    kind: str
    n: int = 0
    j: float = 1.0
    mu: float = 0.0
    delta: float = 1.0
    lam: float = 0.0
    g: float = 1.05
    h: float = 0.5
    boundary: str = "periodic"
    rows: int = 0  # triangular lattice only

    def __post_init__(self):
        if self.kind not in KINDS:
            raise BadN(f"unknown model kind {self.kind!r}")
        n = self.sites
        if n < 1:
            raise BadN("model needs at least one site")
        if n > 20:
            raise TooLarge(f"N={n} exceeds the dense-ED cap of 20 spins")
        if self.boundary not in ("open", "periodic"):
            raise BadN(f"boundary must be open or periodic, got {self.boundary!r}")

    @property
    def sites(self) -> int:
        if self.kind == "triangular_ising":
            return self.rows * (self.rows + 1) // 2
        return self.n


def _op_on(op: sp.csr_matrix, site: int, n: int) -> sp.csr_matrix:
    left = sp.identity(2 ** site, format="csr", dtype=complex)
    right = sp.identity(2 ** (n - site - 1), format="csr", dtype=complex)
    return sp.kron(sp.kron(left, op), right, format="csr")


def _two_site(op: sp.csr_matrix, i: int, j: int, n: int) -> sp.csr_matrix:
    return _op_on(op, i, n) @ _op_on(op, j, n)


def triangular_bonds(rows: int) -> list[tuple[int, int]]:
    """Nearest-neighbour bonds of the row lattice, one up-triangle at a time.

    Row k (1-based) holds k sites; the up-triangle below site (k, i)
    contributes the bonds to (k+1, i), to (k+1, i+1) and between those two.
    """
    def index(row, pos):  # row is 1-based
        return row * (row - 1) // 2 + pos

    bonds = []
    for row in range(1, rows):
        for pos in range(row):
            a = index(row, pos)
            bl = index(row + 1, pos)
            br = index(row + 1, pos + 1)
            bonds += [(a, bl), (a, br), (bl, br)]
    return bonds


def _chain_bonds(n: int, step: int, boundary: str) -> list[tuple[int, int]]:
    if boundary == "periodic":
        pairs = {tuple(sorted((i, (i + step) % n))) for i in range(n)
                 if (i + step) % n != i}
        return sorted(pairs)
    return [(i, i + step) for i in range(n - step)]


def build_hamiltonian(spec: SpinModelSpec, sparse: bool | None = None):
    """Hamiltonian matrix for a model spec.

    Returns a dense complex Hermitian array when the dimension allows it
    (or when ``sparse=False`` is forced) and a CSR matrix otherwise.
    """
    n = spec.sites
    dim = 2 ** n
    h = sp.csr_matrix((dim, dim), dtype=complex)

    if spec.kind == "ising_tf":
        rng = range(n) if spec.boundary == "periodic" else range(n - 1)
        for i in rng:
            h = h - 0.5 * spec.j * _two_site(_SX, i, (i + 1) % n, n)
        for i in range(n):
            h = h - 0.5 * spec.lam * _op_on(_SZ, i, n)
    elif spec.kind == "ising_tf_parallel":
        rng = range(n) if spec.boundary == "periodic" else range(n - 1)
        for i in rng:
            h = h + spec.j * _two_site(_SZ, i, (i + 1) % n, n)
        for i in range(n):
            h = h + spec.g * _op_on(_SX, i, n) + spec.h * _op_on(_SZ, i, n)
    elif spec.kind == "ising_2nd_neighbour":
        for (i, j) in _chain_bonds(n, 1, spec.boundary):
            h = h + 0.5 * _two_site(_SX, i, j, n)
        for (i, j) in _chain_bonds(n, 2, spec.boundary):
            h = h + 0.5 * spec.mu * _two_site(_SX, i, j, n)
        for i in range(n):
            h = h + 0.5 * spec.lam * _op_on(_SZ, i, n)
    elif spec.kind == "xxz":
        for (i, j) in _chain_bonds(n, 1, spec.boundary):
            h = (h + _two_site(_SX, i, j, n) + _two_site(_SY, i, j, n)
                 + spec.delta * _two_site(_SZ, i, j, n))
    elif spec.kind == "triangular_ising":
        if spec.rows < 2:
            raise BadN("triangular lattice needs at least 2 rows")
        for (i, j) in triangular_bonds(spec.rows):
            h = h + spec.j * _two_site(_SZ, i, j, n)
        for i in range(n):
            h = h + spec.lam * _op_on(_SX, i, n)

    if sparse is True:
        return h
    if sparse is False or dim <= DENSE_LIMIT:
        return h.toarray()
    return h


def ground_state(h) -> tuple[float, PureState, int]:
    """Lowest eigenpair plus the degeneracy count within 1e-9 of E0.

    For sparse input only the lowest handful of eigenvalues is computed, so
    the degeneracy count is capped at 8.
    """
    if sp.issparse(h):
        from scipy.sparse.linalg import eigsh

        k = min(8, h.shape[0] - 1)
        vals, vecs = eigsh(h, k=k, which="SA")
        order = np.argsort(vals)
        vals, vecs = vals[order], vecs[:, order]
    else:
        vals, vecs = np.linalg.eigh(h)
    e0 = float(vals[0])
    degeneracy = int(np.sum(vals < e0 + 1e-9))
    n = int(round(np.log2(h.shape[0])))
    state = make_state(n, 2, vecs[:, 0])
    return e0, state, degeneracy


def site_operator(op: str, site: int, n: int) -> np.ndarray:
    mat = {"x": _SX, "y": _SY, "z": _SZ}[op]
    return _op_on(mat, site, n).toarray()


def parity_operator(n: int) -> np.ndarray:
    """Product of sigma_z over all sites (fermion-number parity for even N)."""
    diag = np.ones(1)
    for _ in range(n):
        diag = np.concatenate([diag, -diag])
    return np.diag(diag)


def half_chain_spectrum(spec: SpinModelSpec) -> np.ndarray:
    """Descending Schmidt eigenvalues of the ground state across the middle cut.

    Only the lowest eigenvector is needed, so anything beyond a few hundred
    dimensions goes through sparse Lanczos regardless of the dense limit.
    """
    n = spec.sites
    if 2 ** n > 256:
        from scipy.sparse.linalg import eigsh

        h = build_hamiltonian(spec, sparse=True)
        _, vecs = eigsh(h, k=1, which="SA")
        vec = vecs[:, 0]
    else:
        h = build_hamiltonian(spec, sparse=False)
        _, vecs = np.linalg.eigh(h)
        vec = vecs[:, 0]
    m = vec.reshape(2 ** (n // 2), -1)
    lam = np.linalg.svd(m, compute_uv=False) ** 2
    return np.sort(lam)[::-1]
