"""Hypothesis checks shared by the statement checks."""
import numpy as np

from logmajor.exceptions import DimensionMismatch, NotContraction, NotHermitian, NotPositive
from logmajor.linalg.jacobi import HERMITIAN_TOLERANCE, hermitian_eigen
from logmajor.linalg.matrix import as_matrix, frobenius_norm
from logmajor.mu.calculus import CONTRACTION_TOLERANCE, singular_values

POSITIVE_TOLERANCE = 1e-10
SELF_ADJOINT_PRODUCT_TOLERANCE = 1e-10


def same_dimension(*matrices):
    matrices = [as_matrix(m) for m in matrices]
    sizes = {m.shape[0] for m in matrices}
    if len(sizes) != 1:
        raise DimensionMismatch(f"inputs have dimensions {sorted(sizes)}")
    return matrices


def require_contraction(x, name="x"):
    norm = float(singular_values(x)[0])
    if norm > 1.0 + CONTRACTION_TOLERANCE:
        raise NotContraction(f"||{name}|| = {norm:.15g} exceeds 1")
    return x


def require_positive(x, name="x"):
    eigenvalues = hermitian_eigen(x).eigenvalues
    scale = max(float(np.max(np.abs(eigenvalues))), np.finfo(np.float64).tiny)
    if eigenvalues[-1] < -POSITIVE_TOLERANCE * scale:
        raise NotPositive(f"{name} has eigenvalue {eigenvalues[-1]:.3e}")
    return x


def require_self_adjoint(x, name="x"):
    skew = frobenius_norm(x - np.conj(x.T))
    if skew > HERMITIAN_TOLERANCE * max(frobenius_norm(x), 1.0):
        raise NotHermitian(f"||{name} - {name}*|| = {skew:.3e}")
    return x


def is_self_adjoint_product(product):
    """x_1...x_m = (x_1...x_m)^* within 1e-10 * max(1, ||product||)."""
    skew = frobenius_norm(product - np.conj(product.T))
    return skew <= SELF_ADJOINT_PRODUCT_TOLERANCE * max(1.0, frobenius_norm(product))
