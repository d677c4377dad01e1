r"""Generalized singular numbers of matrices with the normalized trace.

On M_n with tau = Tr / n the spectral distribution of |x| puts mass 1/n on
each singular value s_1 >= ... >= s_n, so

    mu_t(x)   = s_k  for t in [(k-1)/n, k/n)
    mu^l_t(x) = s_k  for t in ((k-1)/n, k/n]
    Lambda_t(x) = exp(int_0^t log mu_s(x) ds),   Lambda_{k/n} = (s_1 ... s_k)^{1/n}
    Delta(x)  = Lambda_1(x) = |det x|^{1/n}

Every curve computed here is piecewise affine with kinks on the grid k/n,
so comparisons at the grid points decide pointwise order on [0, 1].
"""
import enum
from typing import NamedTuple

import numpy as np

from logmajor.exceptions import DimensionMismatch, DomainError, NotContraction
from logmajor.linalg.functions import apply_scalar_function
from logmajor.linalg.jacobi import svd
from logmajor.linalg.matrix import as_matrix, normalized_trace
from logmajor.mu.margins import curve_margins, worst_slack
from logmajor.mu.step import LOG_FLOOR, Flavor, LogCurve, StepFunction, safe_log

BOUNDARY_SNAP = 1e-12
CONTRACTION_TOLERANCE = 1e-12
DEFAULT_TOLERANCE = 1e-8


class Transform(enum.Enum):
    """Integrands of the shifted log curves.

    - LOG_ONE_MINUS_RIGHT: int_0^t log(1 - mu_s(x)^r) ds
    - LOG_ONE_MINUS_LEFT: int_0^t log(1 - mu^l_s(x)^r) ds
    - LOG_LEFT_TAIL: int_{1-t}^1 log mu^l_s(x) ds
    - LOG_RIGHT_TAIL: int_{1-t}^1 log mu_s(x) ds
    """

    LOG_ONE_MINUS_RIGHT = "log_one_minus_right"
    LOG_ONE_MINUS_LEFT = "log_one_minus_left"
    LOG_LEFT_TAIL = "log_left_tail"
    LOG_RIGHT_TAIL = "log_right_tail"


def singular_values(x):
    return svd(x).values


def mu(x):
    """mu_t(x) as a right-continuous step function."""
    return StepFunction(singular_values(x), Flavor.RIGHT)


def mu_left(x):
    """mu^l_t(x) as a left-continuous step function."""
    return StepFunction(singular_values(x), Flavor.LEFT)


def lambda_curve(x):
    """L_k = (1/n) sum_{j <= k} log s_j(x); zero singular values give a -inf tail."""
    return mu(x).log_curve()


def one_minus_power_curve(values, power=1.0):
    """int_0^t log(1 - v_s^power) ds for a step function with cell values v.

    Transformed values within 1e-12 of 0 are snapped to 0, so the boundary
    value 1 gives a -inf cell.

    Raises:
        DomainError: if some 1 - v^power is below -1e-12
    """
    values = np.asarray(values, dtype=np.float64)
    complement = 1.0 - np.power(values, power)
    if np.any(complement < -BOUNDARY_SNAP):
        raise DomainError(
            f"1 - mu^{power:g} takes the negative value {complement.min():.3e}; "
            "the operator is not a contraction"
        )
    complement[np.abs(complement) <= BOUNDARY_SNAP] = 0.0
    return LogCurve(safe_log(complement) / values.size)


def shifted_log_curve(x, transform, *, r=1.0):
    """Log-integral of a transformed singular-number function of x.

    Args:
        x (array_like): a contraction for the LOG_ONE_MINUS transforms
        transform (Transform): which integrand and integration range
        r (float): power applied to mu before taking 1 - mu^r

    Returns:
        LogCurve: the exact curve on the grid k/n; tail transforms are
        integrated over [1 - k/n, 1] and indexed by k

    Raises:
        NotContraction: if ||x|| > 1 + 1e-12 for a LOG_ONE_MINUS transform
        DomainError: if a transformed value is below -1e-12
    """
    values = singular_values(x)
    if transform in (Transform.LOG_ONE_MINUS_RIGHT, Transform.LOG_ONE_MINUS_LEFT):
        if values[0] > 1.0 + CONTRACTION_TOLERANCE:
            raise NotContraction(f"||x|| = {values[0]:.15g} exceeds 1")
        return one_minus_power_curve(np.clip(values, 0.0, 1.0), r)
    if transform in (Transform.LOG_LEFT_TAIL, Transform.LOG_RIGHT_TAIL):
        return LogCurve(safe_log(values) / values.size).reversed_tail()
    raise DomainError(f"unknown transform {transform!r}")


def log_fk_determinant(x):
    """log Delta(x) = (1/n) sum log s_j, -inf when some s_j vanishes."""
    values = singular_values(x)
    if values[-1] < LOG_FLOOR:
        return float("-inf")
    return float(np.mean(np.log(values)))


def fk_determinant(x):
    """Fuglede-Kadison determinant (s_1 ... s_n)^{1/n}, 0 for singular x."""
    return float(np.exp(log_fk_determinant(x)))


def log_submajorize(x, y, *, tolerance=DEFAULT_TOLERANCE):
    """Decide x <_wlog y, i.e. Lambda_t(x) <= Lambda_t(y) for all t in [0, 1].

    Returns:
        tuple: (bool, list of CheckMargin at k = 1..n)

    Raises:
        DimensionMismatch: if x and y differ in dimension
    """
    x, y = as_matrix(x), as_matrix(y)
    if x.shape != y.shape:
        raise DimensionMismatch(f"x is {x.shape[0]}x{x.shape[0]}, y is {y.shape[0]}x{y.shape[0]}")
    margins = curve_margins("lambda", lambda_curve(x), lambda_curve(y))
    return worst_slack(margins) >= -tolerance, margins


def rearrange_function(samples):
    """Decreasing rearrangement f* of |f| for f sampled on the uniform grid."""
    samples = np.asarray(samples)
    if samples.ndim != 1 or samples.size < 1 or not np.all(np.isfinite(samples)):
        raise DomainError("samples must be a nonempty finite vector")
    magnitudes = np.abs(samples).astype(np.float64)
    return StepFunction(np.sort(magnitudes)[::-1], Flavor.RIGHT)


class TraceFormula(NamedTuple):
    """Both sides of tau(f(x)) = int_0^1 f(mu_t(x)) dt."""

    trace: float
    integral: float

    @property
    def deviation(self):
        return abs(self.trace - self.integral)


def trace_of_function(x, f):
    """Evaluate tau(f(x)) by functional calculus and by integrating f(mu(x)).

    Args:
        x (array_like): positive semidefinite matrix
        f (ScalarFunction): increasing with f(0) >= 0

    Raises:
        NotPositive: if x has an eigenvalue below -1e-10 ||x||
    """
    x = as_matrix(x)
    trace = normalized_trace(apply_scalar_function(x, f)).real
    integral = float(np.mean(f(singular_values(x))))
    return TraceFormula(trace, integral)
