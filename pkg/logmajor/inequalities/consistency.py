"""Oracle statements: the mu calculus against independent reference paths."""
import numpy as np

from logmajor.exceptions import InvalidStatementParams, OracleMismatch
from logmajor.inequalities.catalog import MAX_COFACTOR_DIMENSION, StatementId
from logmajor.inequalities.hypotheses import same_dimension
from logmajor.inequalities.result import DEFAULT_TOLERANCE, CheckResult
from logmajor.linalg.matrix import diag
from logmajor.mu import oracles
from logmajor.mu.calculus import lambda_curve, log_fk_determinant, mu, mu_left, rearrange_function, singular_values
from logmajor.mu.margins import CheckMargin, scalar_margin, value_margins
from logmajor.mu.step import safe_log


def check_oracle_mu(x, *, tolerance=DEFAULT_TOLERANCE):
    """mu and mu^l equal their counting definitions cell by cell."""
    (x,) = same_dimension(x)
    right, left = mu(x), mu_left(x)
    counted_right, counted_left = oracles.counting_mu(x), oracles.counting_mu_left(x)
    if counted_right.flavor is not right.flavor or counted_left.flavor is not left.flavor:
        raise OracleMismatch("counting definitions produced the wrong continuity")
    margins = value_margins("counting_right", right.values, counted_right.values, equality=True)
    margins += value_margins("counting_left", left.values, counted_left.values, equality=True)
    return CheckResult(StatementId.ORACLE_MU, {}, margins, tolerance)


def check_oracle_lambda(x, *, tolerance=DEFAULT_TOLERANCE):
    """L_k equals the log of (s_1 ... s_k)^{1/n}, -inf tails included."""
    (x,) = same_dimension(x)
    n = x.shape[0]
    curve = lambda_curve(x)
    reference = safe_log(oracles.partial_product_lambda(singular_values(x)))
    margins = [
        CheckMargin("partial_products", k, k / n, float(curve.log_values[k]), float(reference[k]), equality=True)
        for k in range(1, n + 1)
    ]
    return CheckResult(StatementId.ORACLE_LAMBDA, {}, margins, tolerance, curves={"lambda": curve})


def check_oracle_determinant(x, *, tolerance=DEFAULT_TOLERANCE):
    """log Delta(x) equals log |det x|^{1/n} from a cofactor expansion.

    Raises:
        InvalidStatementParams: for n above the cofactor limit
    """
    (x,) = same_dimension(x)
    n = x.shape[0]
    if n > MAX_COFACTOR_DIMENSION:
        raise InvalidStatementParams(
            f"ORACLE_DETERMINANT uses cofactor expansion, n = {n} exceeds {MAX_COFACTOR_DIMENSION}"
        )
    reference = float(safe_log(oracles.cofactor_fk_determinant(x)))
    margins = [scalar_margin("cofactor", log_fk_determinant(x), reference, k=n, n=n, equality=True)]
    return CheckResult(StatementId.ORACLE_DETERMINANT, {}, margins, tolerance)


def check_oracle_rearrangement(samples, *, tolerance=DEFAULT_TOLERANCE):
    """The decreasing rearrangement of samples equals mu of diag(samples)."""
    samples = np.asarray(samples, dtype=np.float64)
    margins = value_margins(
        "rearrangement",
        rearrange_function(samples).values,
        mu(diag(samples)).values,
        equality=True,
    )
    return CheckResult(StatementId.ORACLE_REARRANGEMENT, {}, margins, tolerance)
