r"""The power bound for |x + y|^r, 1 <= r <= 2.

Curve form:  Lambda_t(|x+y|^r) <= Lambda_t(1 + |x|^r) Lambda_t(1 + |y|^r)
Determinant: Delta(|x+y|^r) <= Delta(1 + |x|^r) Delta(1 + |y|^r)
Matrix form: prod_{j<=k} s_j(|x+y|^r) <= prod_{j<=k} s_j(1 + |x|^r) s_j(1 + |y|^r)

At t = k/n the curve form is the matrix form raised to the power 1/n. The
matrix form is evaluated from unscaled log partial products so the two
paths can be compared. Since mu(|z|^r) = mu(z)^r, the left side is
r log s_j(x + y).
"""
import numpy as np

from logmajor.inequalities.catalog import StatementId, validate_params
from logmajor.inequalities.hypotheses import same_dimension
from logmajor.inequalities.result import DEFAULT_TOLERANCE, CheckResult
from logmajor.linalg.decompositions import modulus_power
from logmajor.linalg.matrix import identity
from logmajor.mu.calculus import lambda_curve, singular_values
from logmajor.mu.margins import CheckMargin, curve_margins, scalar_margin
from logmajor.mu.step import safe_log


def _sides(x, y, r):
    x, y = same_dimension(x, y)
    n = x.shape[0]
    return (
        x + y,
        identity(n) + modulus_power(x, r),
        identity(n) + modulus_power(y, r),
    )


def check_power_bound(x, y, r, *, tolerance=DEFAULT_TOLERANCE, exploratory=False):
    """Curve and determinant form of the power bound.

    Args:
        x, y (array_like): matrices of one dimension
        r (float): exponent in [1, 2]; larger values need ``exploratory``
    """
    validate_params(StatementId.THEOREM_3_3, {"r": r}, exploratory=exploratory)
    total, one_plus_x, one_plus_y = _sides(x, y, r)
    n = total.shape[0]
    lhs = lambda_curve(total).scale(r)
    rhs = lambda_curve(one_plus_x) + lambda_curve(one_plus_y)
    margins = curve_margins("lambda", lhs, rhs)
    margins.append(scalar_margin("determinant", lhs.at_end(), rhs.at_end(), k=n, n=n))
    return CheckResult(
        StatementId.THEOREM_3_3, {"r": float(r)}, margins, tolerance, curves={"lhs": lhs, "rhs": rhs}
    )


def check_power_partial_products(x, y, r, *, tolerance=DEFAULT_TOLERANCE):
    """Matrix form: sum_{j<=k} log s_j(|x+y|^r) <= sum_{j<=k} log s_j(1+|x|^r) s_j(1+|y|^r)."""
    validate_params(StatementId.POWER_1_3, {"r": r})
    total, one_plus_x, one_plus_y = _sides(x, y, r)
    n = total.shape[0]
    lhs = r * np.cumsum(safe_log(singular_values(total)))
    rhs = np.cumsum(safe_log(singular_values(one_plus_x)) + safe_log(singular_values(one_plus_y)))
    margins = [
        CheckMargin("partial_products", k, k / n, float(lhs[k - 1]), float(rhs[k - 1]))
        for k in range(1, n + 1)
    ]
    return CheckResult(StatementId.POWER_1_3, {"r": float(r)}, margins, tolerance)


def check_reversed_power_bound(x, y, r, *, tolerance=DEFAULT_TOLERANCE):
    """Negative control: the power bound with its sides swapped.

    Already at k = 1 it claims (1 + ||x||^r)(1 + ||y||^r) <= ||x + y||^r,
    which fails for generic inputs, so a working suite must report failures.
    """
    validate_params(StatementId.REVERSED_THEOREM_3_3, {"r": r})
    total, one_plus_x, one_plus_y = _sides(x, y, r)
    n = total.shape[0]
    lhs = lambda_curve(one_plus_x) + lambda_curve(one_plus_y)
    rhs = lambda_curve(total).scale(r)
    margins = curve_margins("lambda", lhs, rhs)
    margins.append(scalar_margin("determinant", lhs.at_end(), rhs.at_end(), k=n, n=n))
    return CheckResult(
        StatementId.REVERSED_THEOREM_3_3,
        {"r": float(r)},
        margins,
        tolerance,
        curves={"lhs": lhs, "rhs": rhs},
    )
