r"""Decompositions built on the Jacobi kernels.

- ``polar``: x = u |x| with |x| = (x^* x)^{1/2}. For rank-deficient x the
  partial isometry u is completed to a unitary on the kernel of |x|, so
  u^* u = 1 and u |x| = x still hold.
- ``contraction_factor``: for a positive block [[a, x], [x^*, b]] returns the
  contraction w with x = a^{1/2} w b^{1/2}.
- ``direct_sum``: block-diagonal x1 (+) x2.
"""
from typing import NamedTuple

import numpy as np

from logmajor.exceptions import DimensionMismatch, NotPSDBlock
from logmajor.linalg.jacobi import hermitian_eigen, svd
from logmajor.linalg.matrix import DTYPE, as_matrix, freeze

PSD_BLOCK_TOLERANCE = 1e-9

_EPS = np.finfo(np.float64).eps


class Polar(NamedTuple):
    """x = unitary @ modulus."""

    unitary: np.ndarray
    modulus: np.ndarray


def polar(x):
    """Polar decomposition through the singular value decomposition.

    With x = U S V^* the factors are u = U V^* and |x| = V S V^*.

    Args:
        x (array_like): square complex matrix

    Returns:
        Polar: (u, |x|), u unitary and |x| positive semidefinite
    """
    spectrum = svd(x)
    right = spectrum.right_factor
    unitary = spectrum.left_factor @ np.conj(right.T)
    return Polar(freeze(unitary), _hermitian_from_frame(right, spectrum.values))


def modulus_power(x, r):
    """|x|^r = V S^r V^* computed from the singular values of x."""
    spectrum = svd(x)
    values = spectrum.values
    powered = np.where(values > 0, values, 0.0) ** r if r > 0 else np.ones_like(values)
    return _hermitian_from_frame(spectrum.right_factor, powered)


def contraction_factor(a, b, x):
    """Factor x = a^{1/2} w b^{1/2} with w a contraction.

    The factor is w = (a^{1/2})^+ x (b^{1/2})^+ where ^+ is the inverse on the
    support and 0 on the kernel.

    Args:
        a (array_like): positive semidefinite matrix
        b (array_like): positive semidefinite matrix
        x (array_like): off-diagonal block

    Returns:
        ndarray: the contraction w

    Raises:
        NotPSDBlock: if [[a, x], [x^*, b]] has an eigenvalue below
            -1e-9 * max(1, ||block||)
        DimensionMismatch: if the three blocks differ in dimension
    """
    a, b, x = as_matrix(a), as_matrix(b), as_matrix(x)
    if not a.shape == b.shape == x.shape:
        raise DimensionMismatch(
            f"blocks have shapes {a.shape}, {b.shape}, {x.shape}"
        )
    block = np.block([[a, x], [np.conj(x.T), b]])
    try:
        eigenvalues = hermitian_eigen(block).eigenvalues
    except ValueError as error:
        raise NotPSDBlock(f"block matrix is not Hermitian: {error}")
    scale = max(1.0, float(np.max(np.abs(eigenvalues))))
    if eigenvalues[-1] < -PSD_BLOCK_TOLERANCE * scale:
        raise NotPSDBlock(
            f"block matrix has eigenvalue {eigenvalues[-1]:.3e} below "
            f"-{PSD_BLOCK_TOLERANCE:g} * {scale:.3e}"
        )
    w = _root_pseudo_inverse(a) @ x @ _root_pseudo_inverse(b)
    return freeze(np.array(w, dtype=DTYPE))


def direct_sum(x1, x2):
    """Block-diagonal matrix [[x1, 0], [0, x2]]."""
    x1, x2 = as_matrix(x1), as_matrix(x2)
    n1, n2 = x1.shape[0], x2.shape[0]
    result = np.zeros((n1 + n2, n1 + n2), dtype=DTYPE)
    result[:n1, :n1] = x1
    result[n1:, n1:] = x2
    return freeze(result)


def operator_norm(x):
    """Largest singular value."""
    return float(svd(x).values[0])


def cofactor_determinant(x):
    """det(x) by Laplace expansion along the first row.

    Exponential in n; meant as an exact reference for n <= 6.
    """
    x = as_matrix(x)
    return _laplace(np.array(x), tuple(range(x.shape[0])))


def _laplace(x, columns):
    row = x.shape[0] - len(columns)
    if len(columns) == 1:
        return complex(x[row, columns[0]])
    total = 0j
    for position, column in enumerate(columns):
        entry = x[row, column]
        if entry == 0:
            continue
        minor = _laplace(x, columns[:position] + columns[position + 1:])
        total += (-1) ** position * entry * minor
    return total


def _hermitian_from_frame(frame, values):
    """frame @ diag(values) @ frame^*, made exactly Hermitian."""
    product = (frame * values) @ np.conj(frame.T)
    return freeze((product + np.conj(product.T)) / 2)


def _root_pseudo_inverse(a):
    """(a^{1/2})^+ for positive a, cutting eigenvalues below n * eps * ||a||."""
    eigen = hermitian_eigen(a)
    values = np.clip(eigen.eigenvalues, 0.0, None)
    cutoff = a.shape[0] * _EPS * max(float(values[0]), _EPS)
    inverse = np.zeros_like(values)
    support = values > cutoff
    inverse[support] = 1.0 / np.sqrt(values[support])
    return (eigen.unitary * inverse) @ np.conj(eigen.unitary.T)
