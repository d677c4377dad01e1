r"""Cyclic Jacobi decompositions of complex matrices.

Both routines sweep over all index pairs (p, q) in round-robin order, so the
pairs of one round are disjoint and their plane rotations are applied to the
whole matrix at once.

For a pair with off-diagonal entry a_pq = |a_pq| e^{i phi} the rotation is
J = D R with D = diag(1, e^{-i phi}) and R the real Jacobi rotation that
annihilates the real symmetric 2x2 problem [[a_pp, |a_pq|], [|a_pq|, a_qq]].

- ``hermitian_eigen`` is the classical two-sided method A <- J^H A J.
- ``svd`` is the one-sided (Hestenes) method: the columns of W = x V are
  rotated until they are mutually orthogonal, which is Jacobi on the Gram
  matrix x^* x carried out implicitly. Singular values are the column norms
  and the left factor is recovered column by column, so tiny singular values
  keep their relative accuracy.
"""
import functools
from typing import NamedTuple

import numpy as np

from logmajor.exceptions import NonConvergence, NotHermitian
from logmajor.linalg.matrix import DTYPE, as_matrix, freeze, frobenius_norm

MAX_SWEEPS = 60
HERMITIAN_TOLERANCE = 1e-12

_EPS = np.finfo(np.float64).eps
_TINY = np.finfo(np.float64).tiny


class SingularSpectrum(NamedTuple):
    """x = left_factor @ diag(values) @ right_factor^*, values nonincreasing."""

    values: np.ndarray
    left_factor: np.ndarray
    right_factor: np.ndarray

    def reconstruct(self):
        return (self.left_factor * self.values) @ np.conj(self.right_factor.T)


class HermitianEigen(NamedTuple):
    """x = unitary @ diag(eigenvalues) @ unitary^*, eigenvalues nonincreasing."""

    eigenvalues: np.ndarray
    unitary: np.ndarray


@functools.lru_cache(maxsize=None)
def _round_robin(n):
    """Disjoint pair rounds covering every pair (p, q), p < q, exactly once."""
    players = list(range(n + (n % 2)))
    size = len(players)
    rounds = []
    for _ in range(size - 1):
        pairs = [
            (min(players[i], players[size - 1 - i]), max(players[i], players[size - 1 - i]))
            for i in range(size // 2)
        ]
        pairs = [pair for pair in pairs if pair[1] < n]
        if pairs:
            rounds.append(
                (np.array([p for p, _ in pairs]), np.array([q for _, q in pairs]))
            )
        players = [players[0]] + [players[-1]] + players[1:-1]
    return tuple(rounds)


def _rotation(app, aqq, apq, active):
    """Vectorized rotation parameters (c, s, phase) for the active pairs."""
    magnitude = np.abs(apq)
    safe = np.where(active, magnitude, 1.0)
    tau = (aqq - app) / (2.0 * safe)
    t = np.where(tau >= 0, 1.0, -1.0) / (np.abs(tau) + np.hypot(1.0, tau))
    c = 1.0 / np.sqrt(1.0 + t * t)
    s = t * c
    phase = np.where(active, apq / safe, 1.0)
    return np.where(active, c, 1.0), np.where(active, s, 0.0), phase


def _rotate_columns(matrix, P, Q, c, s, phase):
    """matrix <- matrix @ J for all pairs of a round."""
    left = matrix[:, P]
    right = matrix[:, Q] * np.conj(phase)
    matrix[:, P] = left * c - right * s
    matrix[:, Q] = left * s + right * c


def _rotate_rows(matrix, P, Q, c, s, phase):
    """matrix <- J^H @ matrix for all pairs of a round."""
    top = matrix[P, :]
    bottom = matrix[Q, :] * phase[:, None]
    matrix[P, :] = top * c[:, None] - bottom * s[:, None]
    matrix[Q, :] = top * s[:, None] + bottom * c[:, None]


def hermitian_eigen(x):
    """Eigendecomposition of a Hermitian matrix by two-sided cyclic Jacobi.

    Args:
        x (array_like): Hermitian matrix

    Returns:
        HermitianEigen: eigenvalues sorted nonincreasing and the unitary of
        eigenvectors (as columns)

    Raises:
        NotHermitian: if ||x - x^*|| > 1e-12 ||x|| (Frobenius norms)
        NonConvergence: if more than ``MAX_SWEEPS`` sweeps are needed
    """
    x = as_matrix(x)
    n = x.shape[0]
    norm = frobenius_norm(x)
    skew = frobenius_norm(x - np.conj(x.T))
    if skew > HERMITIAN_TOLERANCE * norm:
        raise NotHermitian(
            f"||x - x*|| = {skew:.3e} exceeds {HERMITIAN_TOLERANCE:g} * ||x|| = "
            f"{HERMITIAN_TOLERANCE * norm:.3e}"
        )

    a = np.array((x + np.conj(x.T)) / 2, dtype=DTYPE)
    np.fill_diagonal(a, a.diagonal().real)
    v = np.eye(n, dtype=DTYPE)
    threshold = n * _EPS * norm

    for sweep in range(MAX_SWEEPS + 1):
        off = frobenius_norm(a - np.diag(a.diagonal()))
        if off <= threshold:
            break
        if sweep == MAX_SWEEPS:
            raise NonConvergence(
                f"hermitian_eigen: off-diagonal norm {off:.3e} after {MAX_SWEEPS} sweeps"
            )
        for P, Q in _round_robin(n):
            apq = a[P, Q]
            active = np.abs(apq) > _TINY
            if not np.any(active):
                continue
            c, s, phase = _rotation(a[P, P].real, a[Q, Q].real, apq, active)
            _rotate_columns(a, P, Q, c, s, phase)
            _rotate_rows(a, P, Q, c, s, phase)
            _rotate_columns(v, P, Q, c, s, phase)
            a[P, Q] = np.where(active, 0.0, a[P, Q])
            a[Q, P] = np.where(active, 0.0, a[Q, P])
            a[P, P] = a[P, P].real
            a[Q, Q] = a[Q, Q].real

    eigenvalues = a.diagonal().real.copy()
    order = np.argsort(-eigenvalues, kind="stable")
    return HermitianEigen(freeze(eigenvalues[order]), freeze(v[:, order]))


def svd(x):
    """Singular value decomposition by one-sided cyclic Jacobi.

    Args:
        x (array_like): square complex matrix

    Returns:
        SingularSpectrum: values sorted nonincreasing, unitary left and right
        factors with x = U diag(values) V^*

    Raises:
        NonConvergence: if more than ``MAX_SWEEPS`` sweeps are needed
    """
    x = as_matrix(x)
    n = x.shape[0]
    w = np.array(x, dtype=DTYPE)
    v = np.eye(n, dtype=DTYPE)
    # rounding in the column inner products alone is of order sqrt(n) * eps
    tolerance = 8 * n * _EPS

    converged = False
    for _ in range(MAX_SWEEPS):
        rotated = False
        for P, Q in _round_robin(n):
            wp, wq = w[:, P], w[:, Q]
            alpha = np.sum(wp.real ** 2 + wp.imag ** 2, axis=0)
            beta = np.sum(wq.real ** 2 + wq.imag ** 2, axis=0)
            gamma = np.sum(np.conj(wp) * wq, axis=0)
            active = np.abs(gamma) > tolerance * np.sqrt(alpha * beta)
            if not np.any(active):
                continue
            rotated = True
            c, s, phase = _rotation(alpha, beta, gamma, active)
            _rotate_columns(w, P, Q, c, s, phase)
            _rotate_columns(v, P, Q, c, s, phase)
        if not rotated:
            converged = True
            break
    if not converged:
        raise NonConvergence(f"svd: columns not orthogonal after {MAX_SWEEPS} sweeps")

    values = np.sqrt(np.sum(w.real ** 2 + w.imag ** 2, axis=0))
    order = np.argsort(-values, kind="stable")
    values, w, v = values[order], w[:, order], v[:, order]

    u = np.zeros((n, n), dtype=DTYPE)
    support = values > 0
    u[:, support] = w[:, support] / values[support]
    if not np.all(support):
        u = complete_orthonormal(u, support)
    return SingularSpectrum(freeze(values), freeze(u), freeze(v))


def complete_orthonormal(columns, known):
    """Fill the columns not flagged in ``known`` with an orthonormal completion.

    The completion runs Gram-Schmidt (twice) over the standard basis vectors
    e_0, e_1, ... in order, so it is deterministic.
    """
    n = columns.shape[0]
    # some unused basis vector always keeps a residual above this threshold
    threshold = 1.0 / np.sqrt(2 * n + 1)
    result = np.array(columns, dtype=DTYPE)
    basis = [result[:, j] for j in range(n) if known[j]]
    candidates = iter(range(n))
    for j in range(n):
        if known[j]:
            continue
        for index in candidates:
            vector = np.zeros(n, dtype=DTYPE)
            vector[index] = 1.0
            for _ in range(2):
                for b in basis:
                    vector = vector - b * np.vdot(b, vector)
            norm = np.linalg.norm(vector)
            if norm > threshold:
                vector = vector / norm
                basis.append(vector)
                result[:, j] = vector
                break
    return result
