"""Entanglement measures for few-qubit pure states.

Entropies, purity, concurrence, the three-tangle, the two polynomial
invariants S and T of four-qubit states, the 2x2x2x2 hyperdeterminant by
three routes, the twelve-ket canonical form, and random-state surveys.

All entropies are base-2 (ebits).  Hyperdeterminant values are returned as
magnitudes; signs and phases are carried by the S and T invariants.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import (
    EIG_CLAMP,
    Bipartition,
    DensityMatrix,
    PureState,
    Spectrum,
    make_state,
    schmidt_spectrum,
    state_from_terms,
)
from .errors import (
    BellBasisUnsupported,
    ConvergenceFailure,
    EmptyEnsemble,
    InvalidAlpha,
    WrongShape,
)

OMEGA = np.exp(2j * np.pi / 3)

# Basis kets (big-endian index) of the twelve-ket canonical form, in the
# order c_0 .. c_11.  Entries at _CANON_REAL are phase-fixed to be real.
CANONICAL_KETS = (
    "0000", "0100", "0101", "0110",
    "1000", "1001", "1010", "1011",
    "1100", "1101", "1110", "1111",
)
_CANON_REAL = (0, 7, 9, 10, 11)
_CANON_PHASED = (1, 2, 3, 4, 5, 6, 8)
_ELIMINATED_KETS = ("0001", "0010", "0011", "0111")


# ---------------------------------------------------------------------------
# entropies and simple measures
# ---------------------------------------------------------------------------

def entropy(spec, family: str = "vonneumann", alpha: float = 1.0) -> float:
    """Entropy of a Schmidt spectrum in ebits.

    ``family`` is one of ``vonneumann``, ``renyi`` or ``tsallis``; ``alpha``
    is ignored for von Neumann.  Von Neumann and Renyi are base-2 (ebits);
    Tsallis keeps its own units, so its ``alpha -> 1`` limit is the natural-log
    von Neumann entropy (ln 2 times the ebit value).  ``alpha == 1`` returns
    the exact limit of each family.
    """
    lam = spec.values if isinstance(spec, Spectrum) else np.asarray(spec, float)
    lam = lam[lam > EIG_CLAMP]
    if family == "vonneumann":
        return float(-(lam * np.log2(lam)).sum())
    if family not in ("renyi", "tsallis"):
        raise InvalidAlpha(f"unknown entropy family {family!r}")
    if alpha <= 0:
        raise InvalidAlpha(f"alpha must be positive, got {alpha}")
    if alpha == 1.0:
        nats = float(-(lam * np.log(lam)).sum())
        return nats / np.log(2) if family == "renyi" else nats
    s = float((lam ** alpha).sum())
    if family == "renyi":
        return float(np.log2(s) / (1.0 - alpha))
    return float((1.0 - s) / (alpha - 1.0))


def purity(rho: DensityMatrix) -> float:
    """Tr(rho^2), between 1/dim (maximally mixed) and 1 (pure)."""
    e = rho.entries
    return float(np.real(np.sum(e * e.T)))


def concurrence(state: PureState) -> float:
    """Concurrence 2|det(amplitude matrix)| of a two-qubit pure state."""
    if (state.n, state.d) != (2, 2):
        raise WrongShape("concurrence is defined for two-qubit pure states")
    m = state.amps.reshape(2, 2)
    return float(2.0 * abs(np.linalg.det(m)))


# ---------------------------------------------------------------------------
# three-qubit hyperdeterminant and tangle
# ---------------------------------------------------------------------------

def _cayley_hdet3(b: np.ndarray) -> np.ndarray:
    """Cayley hyperdeterminant of 2x2x2 tensors (broadcast over leading axes)."""
    b000 = b[..., 0, 0, 0]; b001 = b[..., 0, 0, 1]
    b010 = b[..., 0, 1, 0]; b011 = b[..., 0, 1, 1]
    b100 = b[..., 1, 0, 0]; b101 = b[..., 1, 0, 1]
    b110 = b[..., 1, 1, 0]; b111 = b[..., 1, 1, 1]
    return (
        b000 ** 2 * b111 ** 2 + b001 ** 2 * b110 ** 2
        + b010 ** 2 * b101 ** 2 + b100 ** 2 * b011 ** 2
        - 2 * (b000 * b001 * b110 * b111 + b000 * b010 * b101 * b111
               + b000 * b100 * b011 * b111 + b001 * b010 * b101 * b110
               + b001 * b100 * b011 * b110 + b010 * b100 * b011 * b101)
        + 4 * (b000 * b011 * b101 * b110 + b001 * b010 * b100 * b111)
    )


def _discriminant_hdet3(b: np.ndarray) -> np.ndarray:
    """Hdet3 as the discriminant of det(alpha) under a_ij -> b_ij0 + b_ij1 x."""
    a = b[..., 0, 0, 1] * b[..., 1, 1, 1] - b[..., 0, 1, 1] * b[..., 1, 0, 1]
    bb = (b[..., 0, 0, 0] * b[..., 1, 1, 1] + b[..., 0, 0, 1] * b[..., 1, 1, 0]
          - b[..., 0, 1, 0] * b[..., 1, 0, 1] - b[..., 0, 1, 1] * b[..., 1, 0, 0])
    c = b[..., 0, 0, 0] * b[..., 1, 1, 0] - b[..., 0, 1, 0] * b[..., 1, 0, 0]
    return bb ** 2 - 4 * a * c


def hyperdeterminant3(state: PureState) -> complex:
    """Raw Hdet3 of a three-qubit state (equals tangle/4 for normalized input)."""
    if (state.n, state.d) != (3, 2):
        raise WrongShape("Hdet3 is defined for three-qubit pure states")
    return complex(_discriminant_hdet3(state.tensor()))


def three_tangle(state: PureState) -> float:
    """Residual tangle of a three-qubit pure state, normalized to tau(GHZ)=1.

    Evaluated both as four times the discriminant of the degree-3 pencil and
    through the epsilon contraction; the two must agree to 1e-10.
    """
    if (state.n, state.d) != (3, 2):
        raise WrongShape("three_tangle is defined for three-qubit pure states")
    t = state.tensor()
    h_disc = _discriminant_hdet3(t)
    h_contr = _cayley_hdet3(t)
    if abs(h_disc - h_contr) > 1e-10:
        raise ConvergenceFailure(
            f"Hdet3 routes disagree: {h_disc} vs {h_contr}",
            best_residual=abs(h_disc - h_contr),
        )
    return float(4.0 * abs(h_disc))


# ---------------------------------------------------------------------------
# four-qubit invariants S, T and the hyperdeterminant
# ---------------------------------------------------------------------------

def _require_4q(state: PureState) -> np.ndarray:
    if (state.n, state.d) != (4, 2):
        raise WrongShape("operation is defined for four-qubit pure states")
    return state.tensor()


def _quartic_pencil_coeffs(t: np.ndarray) -> np.ndarray:
    """Coefficients of P4(x) = Hdet3(t[..., 0] + x t[..., 1]), degree <= 4.

    ``t`` has shape (..., 2, 2, 2, 2); returns (..., 5) with entry j the
    coefficient of x^j.  Exact through evaluation at five nodes.
    """
    A = t[..., 0]
    B = t[..., 1]
    xs = np.array([-2.0, -1.0, 0.0, 1.0, 2.0])
    vals = np.stack([_cayley_hdet3(A + x * B) for x in xs], axis=-1)
    V = np.vander(xs, 5, increasing=True)
    return np.linalg.solve(V, vals[..., None])[..., 0]


def _binomial_b(t: np.ndarray) -> np.ndarray:
    """Binomial-weighted quartic coefficients b_0..b_4 (descending power)."""
    c = _quartic_pencil_coeffs(t)
    b = np.empty_like(c)
    b[..., 0] = c[..., 4]
    b[..., 1] = c[..., 3] / 4.0
    b[..., 2] = c[..., 2] / 6.0
    b[..., 3] = c[..., 1] / 4.0
    b[..., 4] = c[..., 0]
    return b


def _st_from_b(b: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    b0, b1, b2, b3, b4 = (b[..., i] for i in range(5))
    s = 3 * b2 ** 2 - 4 * b1 * b3 + b0 * b4
    t = -b2 ** 3 + 2 * b1 * b2 * b3 - b0 * b3 ** 2 - b1 ** 2 * b4 + b0 * b2 * b4
    return s, t


_EPS2 = np.array([[0.0, 1.0], [-1.0, 0.0]])


def _st_contraction(b: np.ndarray) -> tuple[complex, complex]:
    """S and T as epsilon contractions of the weight-symmetric tensor."""
    sym = np.empty((2, 2, 2, 2), complex)
    for idx in np.ndindex(2, 2, 2, 2):
        sym[idx] = b[sum(idx)]
    e = _EPS2
    s = 0.5 * np.einsum("ae,bf,cg,dh,abcd,efgh->", e, e, e, e, sym, sym)
    t = (1.0 / 6.0) * np.einsum(
        "ce,df,gp,hq,ra,sb,abcd,efgh,pqrs->", e, e, e, e, e, e, sym, sym, sym
    )
    return complex(s), complex(t)


@dataclass(frozen=True)
class StInvariants:
    """The degree-2 and degree-3 polynomial invariants of a 4-qubit state."""

    s_val: complex
    t_val: complex


def st_invariants(state: PureState) -> StInvariants:
    """S and T invariants, cross-checked between the polynomial reduction
    and the epsilon-contraction form (agreement within 1e-12)."""
    t = _require_4q(state)
    b = _binomial_b(t)
    s_poly, t_poly = _st_from_b(b)
    s_con, t_con = _st_contraction(b)
    if abs(s_poly - s_con) > 1e-12 or abs(t_poly - t_con) > 1e-12:
        raise ConvergenceFailure(
            "S/T contraction and polynomial reduction disagree",
            best_residual=max(abs(s_poly - s_con), abs(t_poly - t_con)),
        )
    return StInvariants(complex(s_poly), complex(t_poly))


def _quartic_discriminant(c: np.ndarray) -> np.ndarray:
    """Discriminant of c4 x^4 + c3 x^3 + c2 x^2 + c1 x + c0 (c[..., j] = coeff x^j)."""
    e, d, cc, b, a = (c[..., i] for i in range(5))
    return (
        256 * a ** 3 * e ** 3 - 192 * a ** 2 * b * d * e ** 2
        - 128 * a ** 2 * cc ** 2 * e ** 2 + 144 * a ** 2 * cc * d ** 2 * e
        - 27 * a ** 2 * d ** 4 + 144 * a * b ** 2 * cc * e ** 2
        - 6 * a * b ** 2 * d ** 2 * e - 80 * a * b * cc ** 2 * d * e
        + 18 * a * b * cc * d ** 3 + 16 * a * cc ** 4 * e
        - 4 * a * cc ** 3 * d ** 2 - 27 * b ** 4 * e ** 2
        + 18 * b ** 3 * cc * d * e - 4 * b ** 3 * d ** 3
        - 4 * b ** 2 * cc ** 3 * e + b ** 2 * cc ** 2 * d ** 2
    )


# Bell basis u_0..u_3, parties grouped (0,1)|(2,3).
def _bell_basis_vectors() -> np.ndarray:
    phi_p = np.zeros(4, complex); phi_p[[0, 3]] = 1 / np.sqrt(2)
    phi_m = np.zeros(4, complex); phi_m[0] = 1 / np.sqrt(2); phi_m[3] = -1 / np.sqrt(2)
    psi_p = np.zeros(4, complex); psi_p[[1, 2]] = 1 / np.sqrt(2)
    psi_m = np.zeros(4, complex); psi_m[1] = 1 / np.sqrt(2); psi_m[2] = -1 / np.sqrt(2)
    return np.stack([np.kron(v, v) for v in (phi_p, phi_m, psi_p, psi_m)])


_U_BELL = _bell_basis_vectors()


@dataclass(frozen=True)
class BellBasisCoeffs:
    """Overlaps with u_0..u_3 plus the weight outside their span."""

    z: np.ndarray
    residual: float


def bell_basis_coeffs(state: PureState) -> BellBasisCoeffs:
    """Project a four-qubit state onto span{u_0..u_3} (parties 0,1 | 2,3)."""
    _require_4q(state)
    z = _U_BELL.conj() @ state.amps
    rest = state.amps - z @ _U_BELL
    residual = float(np.linalg.norm(rest))
    return BellBasisCoeffs(z, residual)


def hyperdeterminant4(state: PureState, method: str = "st") -> float:
    """|Hdet| of a four-qubit state by one of three routes.

    ``st`` uses S^3 - 27 T^2; ``discriminant`` divides the classical quartic
    discriminant of the degree-4 pencil by 256; ``bellbasis`` evaluates the
    Vandermonde form on the Bell-basis coefficients and needs the state to
    lie in span{u_i} (residual below 1e-8).
    """
    t = _require_4q(state)
    if method == "st":
        s, tt = _st_from_b(_binomial_b(t))
        return float(abs(s ** 3 - 27 * tt ** 2))
    if method == "discriminant":
        return float(abs(_quartic_discriminant(_quartic_pencil_coeffs(t))) / 256.0)
    if method == "bellbasis":
        bb = bell_basis_coeffs(state)
        if bb.residual >= 1e-8:
            raise BellBasisUnsupported(
                f"state lies outside span(u_0..u_3): residual {bb.residual:.3e}"
            )
        z2 = bb.z ** 2
        v = np.prod([z2[j] - z2[i] for i in range(4) for j in range(i + 1, 4)])
        return float(abs(v ** 2) / 256.0)
    raise WrongShape(f"unknown hyperdeterminant method {method!r}")


# ---------------------------------------------------------------------------
# canonical form
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CanonicalForm:
    """Twelve-ket canonical form: moduli c_0..c_11 and the seven free phases.

    ``theta`` holds the phases of the kets at positions 1..6 and 8 of
    CANONICAL_KETS; the remaining five coefficients are real and nonnegative
    up to the reported tolerance.  ``state`` is the LU-transformed state.
    """

    c: np.ndarray
    theta: np.ndarray
    state: PureState
    residual: float


def _unitary_from_ratio(lam: complex | None) -> np.ndarray:
    """2x2 unitary whose first row is (1, lam)/sqrt(1+|lam|^2); lam=None -> swap."""
    if lam is None:
        return np.array([[0.0, 1.0], [-1.0, 0.0]], complex)
    nrm = np.sqrt(1.0 + abs(lam) ** 2)
    return np.array([[1.0, lam], [-np.conj(lam), 1.0]], complex) / nrm


def _rotation_angle(lam: complex | None) -> float:
    return np.pi if lam is None else 2.0 * np.arctan(abs(lam))


def _apply_on_site(t: np.ndarray, u: np.ndarray, site: int) -> np.ndarray:
    return np.moveaxis(np.tensordot(u, t, axes=([1], [site])), 0, site)


def _pencil_roots(values) -> list:
    """Roots of a polynomial given by coefficients (ascending), plus None for
    the root at infinity when the polynomial degenerates."""
    coeffs = np.asarray(values, complex)
    scale = np.max(np.abs(coeffs))
    if scale < 1e-14:
        return [0.0]  # identically zero: any rotation works, pick none
    coeffs = coeffs / scale
    deg = len(coeffs) - 1
    while deg > 0 and abs(coeffs[deg]) < 1e-12:
        deg -= 1
    roots: list = [None] * (len(coeffs) - 1 - deg)
    if deg > 0:
        roots += list(np.roots(coeffs[: deg + 1][::-1]))
    return roots


def _polish_eliminated(t: np.ndarray) -> np.ndarray:
    """Gauss-Newton refinement of local unitaries zeroing the eliminated kets."""
    from scipy.optimize import least_squares

    idx = [tuple(int(c) for c in k) for k in _ELIMINATED_KETS]

    def transformed(v: np.ndarray) -> np.ndarray:
        out = t
        for q in range(4):
            a, b, c = v[3 * q: 3 * q + 3]
            h = np.array([[a, b + 1j * c], [b - 1j * c, -a]])
            vals, vecs = np.linalg.eigh(h)
            u = (vecs * np.exp(1j * vals)) @ vecs.conj().T
            out = _apply_on_site(out, u, q)
        return out

    def resid(v: np.ndarray) -> np.ndarray:
        out = transformed(v)
        z = np.array([out[i] for i in idx])
        return np.concatenate([z.real, z.imag])

    if np.max(np.abs(resid(np.zeros(12)))) < 1e-13:
        return t
    sol = least_squares(resid, np.zeros(12), method="trf",
                        xtol=3e-16, ftol=3e-16, gtol=3e-16)
    return transformed(sol.x)


def canonical_form(state: PureState, tol: float = 1e-9) -> CanonicalForm:
    """Bring a four-qubit state to the twelve-ket canonical form by LU moves.

    Zeroes Hdet3 of the first-site pencil, then the determinant of the
    leading 2x2 block, then diagonalizes that block and absorbs five phases.
    Raises ConvergenceFailure (with the best residual) if the eliminated
    coefficients cannot be brought under ``tol``.
    """
    t = _require_4q(state).copy()

    # site-0 unitary: zero the three-tangle of the pencil t[0] + lam t[1]
    xs = np.array([-2.0, -1.0, 0.0, 1.0, 2.0])
    vals = [_cayley_hdet3(t[0] + x * t[1]) for x in xs]
    coeffs = np.linalg.solve(np.vander(xs, 5, increasing=True), np.array(vals))
    cands = _pencil_roots(coeffs)
    lam = min(cands, key=_rotation_angle) if cands else 0.0
    t = _apply_on_site(t, _unitary_from_ratio(lam), 0)

    # site-1 unitary: zero det of the 2x2 block t[0, 0]
    A, B = t[0, 0], t[0, 1]
    q = [
        np.linalg.det(A),
        A[0, 0] * B[1, 1] + B[0, 0] * A[1, 1] - A[0, 1] * B[1, 0] - B[0, 1] * A[1, 0],
        np.linalg.det(B),
    ]
    cands = _pencil_roots(q)
    mu = min(cands, key=_rotation_angle) if cands else 0.0
    t = _apply_on_site(t, _unitary_from_ratio(mu), 1)

    # sites 2, 3: diagonalize t[0, 0] with descending singular values
    u, sv, vh = np.linalg.svd(t[0, 0])
    t = _apply_on_site(t, u.conj().T, 2)
    t = _apply_on_site(t, vh.conj(), 3)

    if sv[0] < 1e-12 and abs(t[0, 1, 1, 1]) > tol:
        # t[0,0] identically zero leaves sites 2,3 free; use them to kill 0111
        m = t[0, 1]
        uu, ss, vv = np.linalg.svd(m)
        t = _apply_on_site(t, uu.conj().T, 2)
        t = _apply_on_site(t, vv.conj(), 3)
        # smallest singular value now sits at (1,1); it is zero iff det m = 0,
        # otherwise rotate the residual into the (0,*) row
        if abs(t[0, 1, 1, 1]) > tol:
            w = np.array([[0.0, 1.0], [-1.0, 0.0]], complex)
            t = _apply_on_site(t, w, 2)
            t = _apply_on_site(t, w, 3)

    # polynomial roots carry O(sqrt(eps)) error into the eliminated entries;
    # polish with small local unitaries until they sit at machine precision
    t = _polish_eliminated(t)

    # absorb five phases: global + one per qubit acting on its |0>
    def ampl(label: str) -> complex:
        return t[tuple(int(c) for c in label)]

    chi = -np.angle(ampl("1111")) if abs(ampl("1111")) > 1e-12 else 0.0
    phis = np.zeros(4)
    for q_idx, label in ((1, "1011"), (2, "1101"), (3, "1110")):
        a = ampl(label)
        phis[q_idx] = (-np.angle(a) - chi) if abs(a) > 1e-12 else 0.0
    a0 = ampl("0000")
    phis[0] = (-np.angle(a0) - chi - phis[1] - phis[2] - phis[3]) if abs(a0) > 1e-12 else 0.0
    phase = np.ones((2,) * 4, complex) * np.exp(1j * chi)
    for q_idx in range(4):
        shape = [1] * 4
        shape[q_idx] = 2
        phase = phase * np.array([np.exp(1j * phis[q_idx]), 1.0]).reshape(shape)
    t = t * phase

    residual = float(max(abs(ampl(k)) for k in _ELIMINATED_KETS))
    if residual > tol:
        raise ConvergenceFailure(
            f"canonical form residual {residual:.3e} exceeds tol {tol:.1e}",
            best_residual=residual,
        )
    c = np.array([abs(ampl(k)) for k in CANONICAL_KETS])
    theta = np.array([np.angle(ampl(CANONICAL_KETS[i])) % (2 * np.pi)
                      for i in _CANON_PHASED])
    out = make_state(4, 2, t.reshape(16))
    return CanonicalForm(c, theta, out, residual)


# ---------------------------------------------------------------------------
# random-state survey
# ---------------------------------------------------------------------------

def survey_random_states(count: int, seed: int = 0) -> np.ndarray:
    """Amplitude batch for the random survey, shape (count, 16).

    Real and imaginary parts are drawn uniformly from [-1, 1] and each row
    normalized.  This square ensemble, not the Gaussian Haar one, is what
    reproduces the published survey statistics (mean |S| 6.5e-4, mean |T|
    5.0e-6, mean entropy 1.38 ebits).
    """
    rng = np.random.Generator(np.random.Philox(key=seed))
    z = rng.uniform(-1, 1, (count, 16)) + 1j * rng.uniform(-1, 1, (count, 16))
    return z / np.linalg.norm(z, axis=1, keepdims=True)


_CUTS_22 = ((0, 1), (0, 2), (0, 3))


def _batch_mean_cut_entropy(amps: np.ndarray) -> np.ndarray:
    """Mean von Neumann entropy over the three balanced cuts, batched."""
    t = amps.reshape(-1, 2, 2, 2, 2)
    ents = np.zeros(amps.shape[0])
    for keep in _CUTS_22:
        axes = tuple(k + 1 for k in keep) + tuple(
            k + 1 for k in range(4) if k not in keep
        )
        m = np.transpose(t, (0,) + axes).reshape(-1, 4, 4)
        lam = np.linalg.svd(m, compute_uv=False) ** 2
        lam = np.where(lam < EIG_CLAMP, 1.0, lam)  # log(1)=0 for clamped modes
        ents += -(lam * np.log2(lam)).sum(axis=1)
    return ents / len(_CUTS_22)


@dataclass(frozen=True)
class SurveyStatistics:
    mean_hdet: float
    mean_entropy: float
    mean_s: float
    mean_t: float
    corr_hdet_entropy: float
    corr_s_t: float
    share_hdet_order_1e8: float
    count: int


def survey_statistics(states) -> SurveyStatistics:
    """Hyperdeterminant / entropy statistics over an ensemble of 4-qubit states.

    ``states`` is either an iterable of PureState or a (count, 16) amplitude
    array.  Hyperdeterminants and invariants enter as magnitudes; the share
    counts states whose |Hdet| is of order 1e-8, i.e. in [0.5e-8, 5e-8).
    """
    if isinstance(states, np.ndarray):
        amps = np.asarray(states, complex)
    else:
        rows = [s.amps for s in states]
        if not rows:
            raise EmptyEnsemble("survey needs at least one state")
        amps = np.stack(rows)
    if amps.ndim != 2 or amps.shape[1] != 16 or amps.shape[0] == 0:
        raise EmptyEnsemble("survey needs a nonempty batch of 4-qubit states")

    b = _binomial_b(amps.reshape(-1, 2, 2, 2, 2))
    s, t = _st_from_b(b)
    hdet = np.abs(s ** 3 - 27 * t ** 2)
    ent = _batch_mean_cut_entropy(amps)
    s_abs, t_abs = np.abs(s), np.abs(t)
    def _corr(x, y):
        if len(x) < 2 or x.std() == 0 or y.std() == 0:
            return float("nan")
        return float(np.corrcoef(x, y)[0, 1])

    corr_he = _corr(hdet, ent)
    corr_st = _corr(s_abs, t_abs)
    share = float(np.mean((hdet >= 0.5e-8) & (hdet < 5e-8)))
    return SurveyStatistics(
        mean_hdet=float(hdet.mean()),
        mean_entropy=float(ent.mean()),
        mean_s=float(s_abs.mean()),
        mean_t=float(t_abs.mean()),
        corr_hdet_entropy=corr_he,
        corr_s_t=corr_st,
        share_hdet_order_1e8=share,
        count=int(amps.shape[0]),
    )


# ---------------------------------------------------------------------------
# named states
# ---------------------------------------------------------------------------

def ghz_state(n: int = 4, d: int = 2) -> PureState:
    """|0..0> + ... + |d-1..d-1> over n sites, normalized."""
    terms = {tuple([k] * n): 1.0 for k in range(d)}
    return state_from_terms(n, d, terms)


def w_state(n: int = 3) -> PureState:
    terms = {tuple(1 if j == i else 0 for j in range(n)): 1.0 for i in range(n)}
    return state_from_terms(n, 2, terms)


def hs_state() -> PureState:
    """Higuchi-Sudbery state: maximal average 2|2 entropy (1.79 ebits)."""
    w = OMEGA
    return state_from_terms(4, 2, {
        "0011": 1, "1100": 1, "0101": w, "1010": w, "0110": w ** 2, "1001": w ** 2,
    })


def hd_state() -> PureState:
    """The maximum-hyperdeterminant state, |Hdet| = 1/(2^8 3^9)."""
    return state_from_terms(4, 2, {
        "1000": 1, "0100": 1, "0010": 1, "0001": 1, "1111": np.sqrt(2),
    })


def l_state() -> PureState:
    w = OMEGA
    return state_from_terms(4, 2, {
        "0000": 1 + w, "1111": 1 + w, "0011": 1 - w, "1100": 1 - w,
        "0101": w ** 2, "0110": w ** 2, "1001": w ** 2, "1010": w ** 2,
    })


def m_state() -> PureState:
    a = 1j / 2 + 1 / np.sqrt(12)
    b = 1j / 2 - 1 / np.sqrt(12)
    c = 1 / np.sqrt(3)
    return state_from_terms(4, 2, {
        "0000": a, "1111": a, "0011": b, "1100": b, "0101": c, "1010": c,
    })


def yc_state() -> PureState:
    return state_from_terms(4, 2, {
        "0000": 1, "0011": -1, "0101": -1, "0110": 1,
        "1001": 1, "1010": 1, "1100": 1, "1111": 1,
    })


def cluster_state(which: int = 1) -> PureState:
    patterns = {
        1: {"0000": 1, "0011": 1, "1100": 1, "1111": -1},
        2: {"0000": 1, "0110": 1, "1001": 1, "1111": -1},
        3: {"0000": 1, "0101": 1, "1010": 1, "1111": -1},
    }
    if which not in patterns:
        raise WrongShape("cluster_state index must be 1, 2 or 3")
    return state_from_terms(4, 2, patterns[which])


SPECIAL_4Q = {
    "HD": hd_state,
    "L": l_state,
    "GHZ": ghz_state,
    "C1": lambda: cluster_state(1),
    "C2": lambda: cluster_state(2),
    "C3": lambda: cluster_state(3),
    "YC": yc_state,
    "W": lambda: w_state(4),
    "HS": hs_state,
    "M": m_state,
}


def mean_cut_entropy(state: PureState) -> float:
    """Mean von Neumann entropy over the three balanced cuts of 4 qubits."""
    _require_4q(state)
    vals = [entropy(schmidt_spectrum(state, Bipartition(c))) for c in _CUTS_22]
    return float(np.mean(vals))
