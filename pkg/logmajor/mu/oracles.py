r"""Independent reference evaluations used by the self-test and the tests.

- Counting definition: mu_t(x) = inf{lambda >= 0 : #{j : s_j > lambda} / n <= t}
  and the strict variant with "< t" for mu^l. The singular values are taken
  from the Hermitian dilation [[0, x], [x^*, 0]], whose eigenvalues are
  +-s_j, so this path does not share code with ``svd``.
- Lambda by plain partial products of singular values.
- Delta by |det x|^{1/n} with an exact cofactor expansion.
"""
import numpy as np

from logmajor.linalg.decompositions import cofactor_determinant
from logmajor.linalg.jacobi import hermitian_eigen
from logmajor.linalg.matrix import DTYPE, as_matrix
from logmajor.mu.step import Flavor, StepFunction


def dilation_singular_values(x):
    """The n largest eigenvalues of [[0, x], [x^*, 0]], clamped at 0."""
    x = as_matrix(x)
    n = x.shape[0]
    dilation = np.zeros((2 * n, 2 * n), dtype=DTYPE)
    dilation[:n, n:] = x
    dilation[n:, :n] = np.conj(x.T)
    eigenvalues = hermitian_eigen(dilation).eigenvalues
    return np.clip(eigenvalues[:n], 0.0, None)


def counting_value(values, t, *, strict=False):
    """inf{lambda >= 0 : #{j : v_j > lambda} / n <= t} (``< t`` when strict)."""
    values = np.asarray(values, dtype=np.float64)
    n = values.size
    candidates = np.concatenate([[0.0], np.sort(values)])
    for level in candidates:
        share = np.count_nonzero(values > level) / n
        if (share < t) if strict else (share <= t):
            return float(level)
    return float(candidates[-1])


def counting_mu(x):
    """mu(x) from the counting definition at the left endpoint of each cell."""
    values = dilation_singular_values(x)
    n = values.size
    cells = [counting_value(values, (k - 1) / n) for k in range(1, n + 1)]
    return StepFunction(cells, Flavor.RIGHT)


def counting_mu_left(x):
    """mu^l(x) from the strict counting definition at the right endpoint of each cell."""
    values = dilation_singular_values(x)
    n = values.size
    cells = [counting_value(values, k / n, strict=True) for k in range(1, n + 1)]
    return StepFunction(cells, Flavor.LEFT)


def partial_product_lambda(values):
    """Lambda at t = k/n as (s_1 ... s_k)^{1/n}, k = 0..n."""
    values = np.asarray(values, dtype=np.float64)
    n = values.size
    products = np.concatenate([[1.0], np.cumprod(values)])
    return products ** (1.0 / n)


def cofactor_fk_determinant(x):
    """|det x|^{1/n} with det from a cofactor expansion."""
    x = as_matrix(x)
    return abs(cofactor_determinant(x)) ** (1.0 / x.shape[0])
