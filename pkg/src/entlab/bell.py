"""Bell polynomials, operators and classical/quantum bounds.

Settings are unitary operators with d-th-root-of-unity eigenvalues (for
d = 2 this is the usual +-1 dichotomic case).  A polynomial is a sum of
terms, each picking one setting and an integer power per party; the term is
tagged with the operator component it contributes to: the hermitian part,
the antihermitian part, or the plain (already real) polynomial.

Classical bounds are exact enumerations over deterministic root-of-unity
assignments; quantum bounds maximize the top eigenvalue of the assembled
operator over parametrized settings with seeded starts (generalized Pauli
X and Z, multiplets of optimal settings) plus random restarts.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

import numpy as np

from .core import PureState
from .errors import (
    BadProbabilities,
    DegenerateSpectrum,
    NOutOfRange,
    SearchTooLarge,
    ShapeMismatch,
    TooLarge,
    UnsupportedD,
)

OMEGA3 = np.exp(2j * np.pi / 3)


def roots_of_unity(d: int) -> np.ndarray:
    return np.exp(2j * np.pi * np.arange(d) / d)


def pauli_x(d: int) -> np.ndarray:
    """Generalized shift: X|k> = |k+1 mod d>."""
    x = np.zeros((d, d), complex)
    for k in range(d):
        x[(k + 1) % d, k] = 1.0
    return x


def pauli_z(d: int) -> np.ndarray:
    return np.diag(roots_of_unity(d))


def mos_matrix(d: int, phase: float | None = None) -> np.ndarray:
    """Multiplet-of-optimal-settings matrix: the shift with negated
    subdiagonal entries and +1 corner, times a global phase.

    The default phase puts the eigenvalues exactly on the d-th roots of
    unity (0 for odd d, pi/d for even d).
    """
    m = -pauli_x(d)
    m[0, d - 1] = 1.0
    if phase is None:
        phase = 0.0 if d % 2 else np.pi / d
    return np.exp(1j * phase) * m


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BellTerm:
    coeff: complex
    settings: tuple          # setting index per party
    powers: tuple            # operator power per party (1 unless stated)
    component: str = "plain"  # 'H', 'A' or 'plain'


@dataclass(frozen=True)
class BellPolynomial:
    """Multilinear polynomial in per-party setting symbols."""

    n_parties: int
    n_settings: int
    d_outcomes: int
    terms: tuple

    def __post_init__(self):
        for t in self.terms:
            if len(t.settings) != self.n_parties or len(t.powers) != self.n_parties:
                raise ShapeMismatch("term arity differs from n_parties")
            if any(not 0 <= s < self.n_settings for s in t.settings):
                raise ShapeMismatch("setting index out of range")
        if self.d_outcomes < 2:
            raise ShapeMismatch("need at least two outcomes")

    @property
    def part(self) -> str:
        kinds = {t.component for t in self.terms}
        if len(kinds) == 1:
            return {"H": "hermitian", "A": "antihermitian", "plain": "plain"}[kinds.pop()]
        return "mixed"


def _terms_from_prime_counts(n: int, coeffs, component: str) -> tuple:
    """Symmetric polynomial whose coefficient depends on the prime count."""
    terms = []
    for primes in product((0, 1), repeat=n):
        c = coeffs[sum(primes)]
        if c == 0:
            continue
        terms.append(BellTerm(c, primes, (1,) * n, component))
    return tuple(terms)


def mermin_polynomial(n: int) -> BellPolynomial:
    """Mermin polynomial M_n from the half-sum recursion; exact rational
    coefficients, classical bound 1, quantum bound 2^((n-1)/2)."""
    if not 1 <= n <= 8:
        raise NOutOfRange(f"mermin_polynomial supports 1 <= n <= 8, got {n}")
    terms = {(0,): Fraction(1)}
    for _ in range(n - 1):
        nxt: dict = {}

        def add(key, val):
            nxt[key] = nxt.get(key, Fraction(0)) + val

        for key, c in terms.items():
            flipped = tuple(1 - s for s in key)
            add(key + (0,), Fraction(c, 2))
            add(key + (1,), Fraction(c, 2))
            add(flipped + (0,), Fraction(c, 2))
            add(flipped + (1,), -Fraction(c, 2))
        terms = {k: v for k, v in nxt.items() if v != 0}
    out = tuple(
        BellTerm(complex(c), k, (1,) * n, "plain") for k, c in sorted(terms.items())
    )
    return BellPolynomial(n, 2, 2, out)


def chsh_polynomial() -> BellPolynomial:
    """Unnormalized CHSH: ab + ab' + a'b - a'b' (classical 2, Tsirelson 2 sqrt 2)."""
    coeffs = {(0, 0): 1, (0, 1): 1, (1, 0): 1, (1, 1): -1}
    terms = tuple(BellTerm(complex(v), k, (1, 1), "plain") for k, v in coeffs.items())
    return BellPolynomial(2, 2, 2, terms)


def svetlichny3() -> BellPolynomial:
    """Svetlichny polynomial: +(0 primes) +(1 prime) -(2 primes) -(3 primes)."""
    return BellPolynomial(3, 2, 2, _terms_from_prime_counts(3, [1, 1, -1, -1], "plain"))


# Coefficients per prime count of the symmetric qutrit inequalities.  The
# printed two-party column carries a sign slip on the single-prime group;
# the form below is the one whose bounds match the published table.
QUTRIT_TABLE = {
    2: (OMEGA3, -1, OMEGA3),
    3: (1, -OMEGA3 ** 2, OMEGA3, 2),
    4: (2, 1, OMEGA3, 1, 2),
    5: (OMEGA3 ** 2, -OMEGA3 ** 2, -OMEGA3 ** 2, -OMEGA3 ** 2, OMEGA3 ** 2, OMEGA3 ** 2),
    6: (-OMEGA3, 1, -1, OMEGA3, -1, 1, -OMEGA3),
}


def qutrit_table_polynomial(n: int) -> BellPolynomial:
    """Symmetric n-qutrit Bell polynomial, 2 settings, 3 outcomes.

    The relevant component is the antihermitian part for even n and the
    hermitian part for odd n.
    """
    if n not in QUTRIT_TABLE:
        raise NOutOfRange(f"qutrit table covers n in 2..6, got {n}")
    component = "A" if n % 2 == 0 else "H"
    return BellPolynomial(n, 2, 3,
                          _terms_from_prime_counts(n, QUTRIT_TABLE[n], component))


def cglmp_polynomial(d: int) -> BellPolynomial:
    """CGLMP-family two-party polynomial, exact classical maximum 2.

    Built directly from the probability form of the inequality with the
    outcome relabeling that turns correlators into plain setting products:
    C = (1/d) sum_m f_m [(ab)^m + (a'b')^m] + f_m (ab')^(d-m) + g_m (a'b)^(d-m)
    with f_m = sum_k gamma_k (w^-mk - w^m(k+1)), g_m = -conj(f_m) and
    gamma_k = 1 - 2k/(d-1).  The mixed hermitian/antihermitian prefactors
    quoted for d=4,5 are recovered up to outcome relabeling; the printed d=5
    prefactors as such do not reproduce the classical bound 2.
    """
    if d not in (3, 4, 5):
        raise UnsupportedD(f"cglmp_polynomial supports d in {{3, 4, 5}}, got {d}")
    w = np.exp(2j * np.pi / d)
    terms = []
    for m in range(1, d):
        f_m = sum((1 - 2 * k / (d - 1)) * (w ** (-m * k) - w ** (m * (k + 1)))
                  for k in range(d // 2))
        g_m = -np.conj(f_m)
        terms.append(BellTerm(f_m / d, (0, 0), (m, m), "H"))
        terms.append(BellTerm(f_m / d, (1, 1), (m, m), "H"))
        terms.append(BellTerm(f_m / d, (0, 1), (d - m, d - m), "H"))
        terms.append(BellTerm(g_m / d, (1, 0), (d - m, d - m), "H"))
    return BellPolynomial(2, 2, d, tuple(terms))


def state_to_bell(state: PureState, component: str = "H") -> BellPolynomial:
    """Map a state's computational digits to setting indices.

    Each site becomes one party with n_settings = d; the term coefficient is
    the amplitude divided by the largest amplitude modulus (normalization
    dropped, as in the published substitution legend).
    """
    amps = state.amps
    scale = np.max(np.abs(amps))
    terms = []
    for idx in np.flatnonzero(np.abs(amps) > 1e-12 * scale):
        digits = []
        rest = int(idx)
        for _ in range(state.n):
            digits.append(rest % state.d)
            rest //= state.d
        digits = tuple(reversed(digits))
        terms.append(BellTerm(complex(amps[idx] / scale), digits,
                              (1,) * state.n, component))
    return BellPolynomial(state.n, state.d, state.d, tuple(terms))


# ---------------------------------------------------------------------------
# classical bound
# ---------------------------------------------------------------------------

def classical_bound(poly: BellPolynomial, max_assignments: int = 10 ** 8) -> dict:
    """Exact extremes over all deterministic root-of-unity assignments.

    Hermitian-part terms contribute their real part, antihermitian terms
    their imaginary part, plain terms must evaluate real.  Returns
    ``{"max": ..., "min": ...}``.
    """
    n, s, d = poly.n_parties, poly.n_settings, poly.d_outcomes
    total = d ** (n * s)
    if total > max_assignments:
        raise SearchTooLarge(f"{total} assignments exceed cap {max_assignments}")
    w = roots_of_unity(d)
    axes = n * s
    shape = (d,) * axes
    acc = np.zeros(shape, float)
    grid_h = np.zeros(shape, complex)
    grid_a = np.zeros(shape, complex)
    any_h = any_a = False
    for term in poly.terms:
        val = np.full(shape, term.coeff, complex)
        for q in range(n):
            ax = q * s + term.settings[q]
            vec_shape = [1] * axes
            vec_shape[ax] = d
            val = val * (w ** term.powers[q]).reshape(vec_shape)
        if term.component == "H":
            grid_h += val
            any_h = True
        elif term.component == "A":
            grid_a += val
            any_a = True
        else:
            grid_h += val
            any_h = True
    if any_h:
        if not any_a and np.max(np.abs(grid_h.imag)) > 1e-9 and poly.part == "plain":
            # plain polynomials over +-1 outcomes should already be real
            raise ShapeMismatch("plain polynomial evaluates complex")
        acc += grid_h.real
    if any_a:
        acc += grid_a.imag
    return {"max": float(acc.max()), "min": float(acc.min())}


# ---------------------------------------------------------------------------
# operators and quantum bound
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SettingsAssignment:
    """One unitary per (party, setting), eigenvalues on the d-th roots."""

    d: int
    matrices: tuple  # matrices[party][setting] -> ndarray

    def __post_init__(self):
        for row in self.matrices:
            for m in row:
                m = np.asarray(m)
                if m.shape != (self.d, self.d):
                    raise ShapeMismatch("setting matrix has wrong dimension")
                if np.max(np.abs(m @ m.conj().T - np.eye(self.d))) > 1e-10:
                    raise ShapeMismatch("setting matrix is not unitary")
                ev = np.linalg.eigvals(m)
                slots = (np.round(np.angle(ev) / (2 * np.pi / self.d)).astype(int)
                         % self.d)
                expect = np.exp(2j * np.pi * slots / self.d)
                if sorted(slots) != list(range(self.d)):
                    raise ShapeMismatch("setting eigenvalues are not d-th roots")
                if np.max(np.abs(ev - expect)) > 1e-8:
                    raise ShapeMismatch("setting eigenvalues are not d-th roots")


def symmetric_settings(mats, n_parties: int, d: int) -> SettingsAssignment:
    return SettingsAssignment(d, tuple(tuple(np.asarray(m, complex) for m in mats)
                                       for _ in range(n_parties)))


def build_operator(poly: BellPolynomial, settings: SettingsAssignment) -> np.ndarray:
    """Kronecker-assembled Hermitian Bell operator.

    Each term contributes the hermitian or antihermitian part of
    coeff * (tensor product of chosen setting powers).
    """
    if settings.d != poly.d_outcomes or len(settings.matrices) != poly.n_parties:
        raise ShapeMismatch("settings shape does not match polynomial")
    for row in settings.matrices:
        if len(row) < poly.n_settings:
            raise ShapeMismatch("not enough settings per party")
    dim = poly.d_outcomes ** poly.n_parties
    out = np.zeros((dim, dim), complex)
    for term in poly.terms:
        m = np.eye(1, dtype=complex)
        for q in range(poly.n_parties):
            a = settings.matrices[q][term.settings[q]]
            m = np.kron(m, np.linalg.matrix_power(a, term.powers[q]))
        m = term.coeff * m
        if term.component == "A":
            out += (m - m.conj().T) / 2j
        else:
            out += (m + m.conj().T) / 2
    if np.max(np.abs(out - out.conj().T)) > 1e-12:
        raise ShapeMismatch("assembled operator failed the Hermiticity check")
    return out


def _top_eig(mat: np.ndarray) -> tuple[float, np.ndarray]:
    vals, vecs = np.linalg.eigh(mat)
    return float(vals[-1]), vecs[:, -1]


def _unitary_from_params(x: np.ndarray, d: int) -> np.ndarray:
    """Unitary eigenbasis from d^2 real parameters (Hermitian generator)."""
    h = np.zeros((d, d), complex)
    k = 0
    for i in range(d):
        h[i, i] = x[k]
        k += 1
    for i in range(d):
        for j in range(i + 1, d):
            h[i, j] = x[k] + 1j * x[k + 1]
            h[j, i] = x[k] - 1j * x[k + 1]
            k += 2
    vals, vecs = np.linalg.eigh(h)
    return vecs


def _settings_from_params(x: np.ndarray, n: int, s: int, d: int) -> SettingsAssignment:
    diag = roots_of_unity(d)
    per = d * d
    mats = []
    for q in range(n):
        row = []
        for j in range(s):
            u = _unitary_from_params(x[(q * s + j) * per:(q * s + j + 1) * per], d)
            row.append((u * diag) @ u.conj().T)
        mats.append(tuple(row))
    return SettingsAssignment(d, tuple(mats))


@dataclass(frozen=True)
class BoundReport:
    classical_max: float
    classical_min: float
    quantum_value: float
    ratio: float
    purity: float
    converged: bool
    settings: SettingsAssignment | None = field(default=None, repr=False)


def phased_fourier_setting(d: int, alpha: float) -> np.ndarray:
    """Root-of-unity observable in the phase-shifted Fourier basis."""
    j = np.arange(d)
    u = np.exp(2j * np.pi * np.outer(j, j + alpha) / d) / np.sqrt(d)
    return (u * roots_of_unity(d)) @ u.conj().T


def _seed_settings(poly: BellPolynomial) -> list:
    d = poly.d_outcomes
    x, z = pauli_x(d), pauli_z(d)
    mos = mos_matrix(d)
    base = [x, z, mos]
    if d == 2:
        base.append(np.array([[0, -1j], [1j, 0]], complex))  # sigma_y
    pool = []
    for combo in product(range(len(base)), repeat=poly.n_settings):
        if len(set(combo)) < min(poly.n_settings, 2):
            continue
        mats = [base[i] for i in combo]
        pool.append(symmetric_settings(mats, poly.n_parties, d))
        # root-of-unity phase multiples keep the spectrum valid
        if d > 2:
            for k in range(1, d):
                alt = [base[i] if j == 0 else np.exp(2j * np.pi * k / d) * base[i]
                       for j, i in enumerate(combo)]
                pool.append(symmetric_settings(alt, poly.n_parties, d))
    if poly.n_parties == 2 and poly.n_settings == 2:
        # phase-shifted Fourier bases: the known optimal pair for the
        # CGLMP family, in both conjugation patterns
        for sa, sb in product(((0.0, 0.5), (0.0, -0.5)),
                              ((0.25, -0.25), (-0.25, 0.25))):
            a_row = tuple(phased_fourier_setting(d, v) for v in sa)
            b_row = tuple(phased_fourier_setting(d, v) for v in sb)
            for conj_a in (False, True):
                row_a = tuple(m.conj() for m in a_row) if conj_a else a_row
                pool.append(SettingsAssignment(d, (row_a, b_row)))
    return pool


def quantum_bound(
    poly: BellPolynomial,
    restarts: int = 32,
    seed: int = 0,
    refine: bool = True,
    maxiter: int = 400,
    symmetric: bool = False,
) -> BoundReport:
    """Maximize the top eigenvalue of the Bell operator over settings.

    Evaluates seeded starts (X, Z, MOS combinations shared by all parties),
    then runs derivative-free refinement from random starts; ``symmetric``
    restricts the search to party-independent settings.  Returns the best
    value with classical bounds, ratio and the purity of the floor(n/2)-party
    reduction of the optimal eigenvector.
    """
    from scipy.optimize import minimize

    n, s, d = poly.n_parties, poly.n_settings, poly.d_outcomes
    if d ** n > 3 ** 6:
        raise TooLarge("total Hilbert dimension exceeds 3^6")
    cb = classical_bound(poly)

    evaluations = []

    def consider(settings: SettingsAssignment):
        val, vec = _top_eig(build_operator(poly, settings))
        evaluations.append((val, vec, settings))
        return val

    for cand in _seed_settings(poly):
        consider(cand)

    rng = np.random.Generator(np.random.Philox(key=seed))
    per = d * d
    n_blocks = (1 if symmetric else n) * s

    def params_to_settings(x: np.ndarray) -> SettingsAssignment:
        if symmetric:
            full = np.tile(x, n)
        else:
            full = x
        return _settings_from_params(full, n, s, d)

    def neg(x: np.ndarray) -> float:
        val, _ = _top_eig(build_operator(poly, params_to_settings(x)))
        return -val

    best_refined = None
    for _ in range(max(0, restarts)):
        x0 = rng.standard_normal(n_blocks * per)
        if refine:
            res = minimize(neg, x0, method="Nelder-Mead",
                           options={"maxiter": maxiter, "fatol": 1e-10, "xatol": 1e-8})
            x0 = res.x
        cand = params_to_settings(x0)
        val = consider(cand)
        if best_refined is None or val > best_refined:
            best_refined = val

    evaluations.sort(key=lambda e: e[0])
    best_val, best_vec, best_settings = evaluations[-1]
    runner_up = evaluations[-2][0] if len(evaluations) > 1 else best_val
    converged = bool(best_val - runner_up < 1e-6 or len(evaluations) == 1)

    k = n // 2
    m = best_vec.reshape(d ** k, d ** (n - k))
    lam = np.linalg.svd(m, compute_uv=False) ** 2
    pur = float((lam ** 2).sum())
    ratio = best_val / cb["max"] if cb["max"] else float("inf")
    return BoundReport(cb["max"], cb["min"], best_val, ratio, pur,
                       converged, best_settings)


# ---------------------------------------------------------------------------
# MUB check
# ---------------------------------------------------------------------------

def mub_check(a: np.ndarray, b: np.ndarray, tol: float = 1e-8) -> bool:
    """True iff the eigenbases of two settings are mutually unbiased."""
    a = np.asarray(a, complex)
    b = np.asarray(b, complex)
    if a.shape != b.shape or a.shape[0] != a.shape[1]:
        raise ShapeMismatch("mub_check needs two square matrices of equal size")
    d = a.shape[0]
    bases = []
    for m in (a, b):
        vals, vecs = np.linalg.eig(m)
        if np.min(np.abs(vals[:, None] - vals[None, :]) + np.eye(d)) < 1e-8:
            raise DegenerateSpectrum("setting has a degenerate spectrum")
        bases.append(vecs / np.linalg.norm(vecs, axis=0, keepdims=True))
    overlap = np.abs(bases[0].conj().T @ bases[1]) ** 2
    return bool(np.max(np.abs(overlap - 1.0 / d)) < tol)


# ---------------------------------------------------------------------------
# measurement-count post-processing
# ---------------------------------------------------------------------------

def mermin_from_counts(experiments) -> dict:
    """Parity post-processing of per-setting outcome probabilities.

    Each experiment is a mapping with keys ``weight``, ``probs`` (list or
    dict of bitstring probabilities) and optionally ``n_runs`` (default
    8192).  The experiment expectation is the even-parity total minus the
    odd-parity total; the returned value combines experiments by weight and
    the stderr adds the per-experiment multinomial errors in quadrature.
    """
    value = 0.0
    var = 0.0
    for exp in experiments:
        weight = float(exp["weight"])
        n_runs = int(exp.get("n_runs", 8192))
        probs = exp["probs"]
        if isinstance(probs, dict):
            items = [(k, float(v)) for k, v in probs.items()]
        else:
            items = [(format(i, "b"), float(p)) for i, p in enumerate(probs)]
        total = sum(p for _, p in items)
        if abs(total - 1.0) > 5e-3:
            raise BadProbabilities(f"probabilities sum to {total}")
        if any(p < -1e-12 for _, p in items):
            raise BadProbabilities("negative probability")
        e = sum(p if k.count("1") % 2 == 0 else -p for k, p in items) / total
        value += weight * e
        var += weight ** 2 * max(0.0, 1.0 - e ** 2) / n_runs
    return {"value": float(value), "stderr": float(np.sqrt(var))}
