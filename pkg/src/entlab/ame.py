"""k-uniform / absolutely maximally entangled states and MDS-code machinery.

Catalog states are stored as printed in the source material (sign lists and
word lists); constructions cover Reed-Solomon generators for prime d and the
mutually-orthogonal-Latin-squares family.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from math import comb

import numpy as np

from .core import PureState, make_state, reshape_matrix, state_from_terms
from .errors import (
    BadK,
    NotMds,
    NotPrime,
    OddN,
    UnsupportedCatalogEntry,
    WrongShape,
)

UNITARITY_TOL = 1e-10

AME52_SIGNS = (
    1, 1, 1, 1, 1, -1, -1, 1, 1, -1, -1,
    1, 1, 1, 1, 1, 1, 1, -1, -1, 1, -1, 1,
    -1, -1, 1, -1, 1, -1, -1, 1, 1,
)

AME62_SIGNS = (
    -1, -1, -1, 1, -1, 1, 1, 1,
    -1, -1, -1, 1, 1, -1, -1, -1,
    -1, -1, 1, -1, -1, 1, -1, -1,
    1, 1, -1, 1, -1, 1, -1, -1,
    -1, 1, -1, -1, -1, -1, 1, -1,
    1, -1, 1, 1, -1, -1, 1, -1,
    1, -1, -1, -1, 1, 1, 1, -1,
    1, -1, -1, -1, -1, -1, -1, 1,
)

AME64_WORDS = tuple(
    tuple(int(c) for c in w) for w in (
        "000000 001111 002222 003333 010123 011032 "
        "012301 013210 020231 021320 022013 023102 "
        "030312 031203 032130 033021 100132 101023 "
        "102310 103201 110011 111100 112233 113322 "
        "120303 121212 122121 123030 130220 131331 "
        "132002 133113 200213 201302 202031 203120 "
        "210330 211221 212112 213003 220022 221133 "
        "222200 223311 230101 231010 232323 233232 "
        "300321 301230 302103 303012 310202 311313 "
        "312020 313131 320110 321001 322332 323223 "
        "330033 331122 332211 333300"
    ).split()
)


# ---------------------------------------------------------------------------
# code words
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CodeWords:
    """A classical code: distinct words of fixed length over Z_d."""

    n_letters: int
    alphabet: int
    words: tuple

    def __post_init__(self):
        words = tuple(tuple(int(c) for c in w) for w in self.words)
        object.__setattr__(self, "words", words)
        for w in words:
            if len(w) != self.n_letters:
                raise WrongShape(f"word {w} has wrong length")
            if any(not 0 <= c < self.alphabet for c in w):
                raise WrongShape(f"word {w} has letters outside the alphabet")
        if len(set(words)) != len(words):
            raise WrongShape("duplicate code words")

    def min_distance(self) -> int:
        a = np.array(self.words, dtype=np.int16)
        best = self.n_letters
        for i in range(len(a) - 1):
            dist = (a[i + 1:] != a[i]).sum(axis=1).min()
            best = min(best, int(dist))
            if best == 1:
                break
        return best

    def to_state(self) -> PureState:
        return state_from_terms(self.n_letters, self.alphabet,
                                {w: 1.0 for w in self.words})


def _is_prime(d: int) -> bool:
    if d < 2:
        return False
    return all(d % p for p in range(2, int(d ** 0.5) + 1))


def reed_solomon_code(d: int) -> CodeWords:
    """Extended Reed-Solomon code over F_d (d prime) with N = d + 1.

    Generator rows are the powers g_i = i^r with a final unit column on the
    last row, giving d^k words of minimal support and Hamming distance
    N - k + 1 (the Singleton bound).
    """
    if not _is_prime(d):
        raise NotPrime(f"reed_solomon requires prime d, got {d}")
    n = d + 1
    k = max(1, n // 2)
    rows = []
    for r in range(k):
        row = [pow(g, r, d) for g in range(d)] + [1 if r == k - 1 else 0]
        rows.append(row)
    gen = np.array(rows, dtype=int)
    words = sorted(
        tuple(int(x) for x in (np.array(u) @ gen) % d)
        for u in product(range(d), repeat=k)
    )
    return CodeWords(n, d, tuple(words))


def mols_code(d: int) -> CodeWords:
    """Words |i, j, i+j, i+2j, ...> from the maximal MOLS set of prime size d."""
    if not _is_prime(d):
        raise NotPrime(f"mols requires prime d, got {d}")
    words = []
    for i in range(d):
        for j in range(d):
            words.append(tuple([i, j] + [(i + j * m) % d for m in range(1, d)]))
    return CodeWords(d + 1, d, tuple(sorted(words)))


def mds_check(code: CodeWords) -> dict:
    """Minimal-support AME test: d^floor(N/2) words at distance floor(N/2)+1."""
    n, d = code.n_letters, code.alphabet
    dist = code.min_distance() if len(code.words) > 1 else n
    is_mds = len(code.words) == d ** (n // 2) and dist >= n // 2 + 1
    return {"is_mds": bool(is_mds), "min_distance": int(dist)}


def truncate_code(code: CodeWords) -> CodeWords:
    """One N -> N-1 step of the MDS truncation lemma.

    For even N the move keeps the words starting with 0 and strips that
    letter; for odd N (the second half of the lemma's even/odd pair) it
    strips the first letter from every word.  Both the input and the
    produced code must be MDS; otherwise NotMds.
    """
    if code.n_letters < 3:
        raise NotMds("truncation needs word length >= 3")
    if not mds_check(code)["is_mds"]:
        raise NotMds("input code is not MDS")
    if code.n_letters % 2 == 0:
        kept = tuple(w[1:] for w in code.words if w[0] == 0)
        if not kept:
            raise NotMds("no words start with 0")
    else:
        kept = tuple(w[1:] for w in code.words)
    out = CodeWords(code.n_letters - 1, code.alphabet, kept)
    if not mds_check(out)["is_mds"]:
        raise NotMds("truncated code fails the MDS conditions")
    return out


def necessary_condition(n: int, d: int) -> bool:
    """Existence precondition for minimal-support AME(N, d): d >= floor(N/2)+1."""
    return d >= n // 2 + 1


# ---------------------------------------------------------------------------
# uniformity and multiunitarity
# ---------------------------------------------------------------------------

def k_uniform_check(state: PureState, k: int) -> dict:
    """Whether every k-site reduction is maximally mixed.

    Returns ``{"uniform": bool, "worst_defect": float}`` where the defect is
    the max-abs deviation of any reduction from I/d^k.
    """
    if k < 1 or k > state.n // 2:
        raise BadK(f"k must lie in [1, n/2], got k={k} for n={state.n}")
    dim = state.d ** k
    eye = np.eye(dim) / dim
    worst = 0.0
    for keep in combinations(range(state.n), k):
        m = reshape_matrix(state, keep)
        rho = m @ m.conj().T
        worst = max(worst, float(np.max(np.abs(rho - eye))))
    return {"uniform": worst < UNITARITY_TOL, "worst_defect": worst}


def code_k_uniform_check(code: CodeWords, k: int) -> dict:
    """k-uniformity of the equal-amplitude state on a code's words.

    Computes every k-site reduction exactly in the sparse word
    representation (diagonal entries are subword counts, off-diagonal
    entries come from words agreeing on the complement), so it also covers
    codes whose dense state would exceed the storage cap.
    """
    n, d = code.n_letters, code.alphabet
    if k < 1 or k > n // 2:
        raise BadK(f"k must lie in [1, n/2], got k={k} for n={n}")
    m = len(code.words)
    worst = 0.0
    for keep in combinations(range(n), k):
        rest = tuple(i for i in range(n) if i not in keep)
        diag: dict = {}
        by_rest: dict = {}
        offdiag = 0
        for w in code.words:
            a = tuple(w[i] for i in keep)
            b = tuple(w[i] for i in rest)
            diag[a] = diag.get(a, 0) + 1
            prev = by_rest.setdefault(b, [])
            offdiag += len(prev)  # each earlier word sharing b gives one pair
            prev.append(a)
        defect = max(abs(diag.get(a, 0) / m - 1 / d ** k)
                     for a in product(range(d), repeat=k))
        if offdiag:
            defect = max(defect, 1 / m)
        worst = max(worst, float(defect))
    return {"uniform": worst < UNITARITY_TOL, "worst_defect": worst}


@dataclass(frozen=True)
class MultiunitarityReport:
    """Unitarity defect of every balanced reshuffling of the state tensor."""

    k: int
    checks: tuple  # of (row-index tuple, defect)

    @property
    def worst_defect(self) -> float:
        return max(d for _, d in self.checks)

    @property
    def all_unitary(self) -> bool:
        return self.worst_defect < UNITARITY_TOL

    def defect(self, rows) -> float:
        key = tuple(sorted(rows))
        for r, d in self.checks:
            if r == key:
                return d
        raise KeyError(rows)


def multiunitarity_check(state: PureState) -> MultiunitarityReport:
    """Check unitarity of all C(2k, k) balanced reshapes, scaled by d^(k/2).

    The state is AME iff every defect is below 1e-10; transpose-redundant
    pairs are both listed.
    """
    if state.n % 2:
        raise OddN(f"multiunitarity needs an even site count, got {state.n}")
    k = state.n // 2
    scale = state.d ** (k / 2.0)
    eye = np.eye(state.d ** k)
    checks = []
    for keep in combinations(range(state.n), k):
        u = reshape_matrix(state, keep) * scale
        defect = float(np.max(np.abs(u @ u.conj().T - eye)))
        checks.append((keep, defect))
    assert len(checks) == comb(2 * k, k)
    return MultiunitarityReport(k, tuple(checks))


# ---------------------------------------------------------------------------
# catalog
# ---------------------------------------------------------------------------

def _uniform_sign_state(n: int, signs) -> PureState:
    return make_state(n, 2, np.array(signs, dtype=complex))


def construct_ame(catalog: str, d: int | None = None) -> PureState:
    """Build a cataloged k-uniform state.

    Entries: ``ame43``, ``ame52``, ``ame62``, ``ame64``, ``phi5``,
    ``reed_solomon`` (prime ``d``), ``mols`` (prime ``d``).
    """
    if catalog == "ame43":
        terms = {(i, j, (i + j) % 3, (i + 2 * j) % 3): 1.0
                 for i in range(3) for j in range(3)}
        return state_from_terms(4, 3, terms)
    if catalog == "ame52":
        return _uniform_sign_state(5, AME52_SIGNS)
    if catalog == "ame62":
        return _uniform_sign_state(6, AME62_SIGNS)
    if catalog == "ame64":
        return CodeWords(6, 4, AME64_WORDS).to_state()
    if catalog == "phi5":
        return mols_code(5).to_state()
    if catalog == "reed_solomon":
        if d is None:
            raise UnsupportedCatalogEntry("reed_solomon needs d")
        return reed_solomon_code(d).to_state()
    if catalog == "mols":
        if d is None:
            raise UnsupportedCatalogEntry("mols needs d")
        return mols_code(d).to_state()
    raise UnsupportedCatalogEntry(f"unknown catalog entry {catalog!r}")


def hadamard_o8() -> np.ndarray:
    """The 3-unitary order-8 Hadamard matrix behind the AME(6,2) state."""
    return np.array(AME62_SIGNS, dtype=float).reshape(8, 8) / np.sqrt(8)


# ---------------------------------------------------------------------------
# magic square
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MagicSquare:
    grid: tuple
    rows_ok: bool
    cols_ok: bool


def magic_square(state: PureState) -> MagicSquare:
    """Compose the last-two-digit values 3*w2 + w3 of a minimal-support
    4-qutrit state into the (i, j) grid and test row/column sums."""
    if (state.n, state.d) != (4, 3):
        raise WrongShape("magic_square expects a 4-qutrit state")
    support = np.flatnonzero(np.abs(state.amps) > 1e-12)
    if len(support) != 9:
        raise WrongShape("magic_square expects minimal support (9 terms)")
    if np.max(np.abs(np.abs(state.amps[support]) - 1 / 3)) > 1e-10:
        raise WrongShape("magic_square expects equal-modulus amplitudes")
    grid = [[None] * 3 for _ in range(3)]
    for idx in support:
        digits = []
        rest = int(idx)
        for _ in range(4):
            digits.append(rest % 3)
            rest //= 3
        l3, l2, j, i = digits  # big-endian unpack
        if grid[i][j] is not None:
            raise WrongShape("first two digits do not enumerate all (i, j)")
        grid[i][j] = 3 * l2 + l3
    rows = [sum(r) for r in grid]
    cols = [sum(grid[i][j] for i in range(3)) for j in range(3)]
    return MagicSquare(
        tuple(tuple(r) for r in grid),
        rows_ok=len(set(rows)) == 1,
        cols_ok=len(set(cols)) == 1,
    )


# ---------------------------------------------------------------------------
# 4-qubit mean-entropy obstruction
# ---------------------------------------------------------------------------

def max_mean_entropy_search(restarts: int = 200, seed: int = 0,
                            maxiter: int = 300) -> float:
    """Numerically maximize the mean 2|2-cut entropy of 4-qubit states.

    Multi-start local optimization; the supremum is the Higuchi-Sudbery
    value 1/2 + log2(6)/2, strictly below the naive 2-ebit ceiling.
    """
    from scipy.optimize import minimize

    from .measures import _batch_mean_cut_entropy

    rng = np.random.Generator(np.random.Philox(key=seed))

    def neg_entropy(x):
        z = x[:16] + 1j * x[16:]
        nrm = np.linalg.norm(z)
        if nrm < 1e-9:
            return 0.0
        return -float(_batch_mean_cut_entropy((z / nrm)[None, :])[0])

    best = 0.0
    for _ in range(restarts):
        x0 = rng.standard_normal(32)
        res = minimize(neg_entropy, x0, method="L-BFGS-B",
                       options={"maxiter": maxiter})
        best = max(best, -float(res.fun))
    return best
