r"""Hoelder type inequalities for products of contractions x_1 ... x_m.

With P = x_1 ... x_m, exponents p_i > 0, sum 1/p_i = 1, and r >= 1:

    head:  int_0^t log(1 - mu_s(|P|)^r) ds
               >= sum_i (1/p_i) int_0^t log(1 - mu_s(|x_i|)^{r p_i}) ds
    tail:  int_{1-t}^1 log mu^l_s(1 - |P|^r) ds
               >= sum_i (1/p_i) int_{1-t}^1 log mu^l_s(1 - |x_i|^{r p_i}) ds

The r = 1 case, a self-adjoint strengthening for self-adjoint P, and the
determinant consequences at t = 1 are separate statements. The matrix form
compares unscaled partial sums of log(1 - s_j^r).
"""
import logging

import numpy as np

from logmajor.exceptions import InvalidStatementParams
from logmajor.inequalities.catalog import StatementId, validate_params
from logmajor.inequalities.hypotheses import is_self_adjoint_product, require_contraction, same_dimension
from logmajor.inequalities.result import DEFAULT_TOLERANCE, CheckResult
from logmajor.linalg.decompositions import modulus_power
from logmajor.linalg.matrix import identity, multiply
from logmajor.mu.calculus import (
    Transform,
    log_fk_determinant,
    mu,
    one_minus_power_curve,
    shifted_log_curve,
    singular_values,
)
from logmajor.mu.margins import CheckMargin, curve_margins, scalar_margin, value_margins, worst_slack

logger = logging.getLogger(__name__)

HOLDER_STATEMENTS = (StatementId.THEOREM_4_6, StatementId.COROLLARY_4_7, StatementId.REMARK_4_8)


def _validated(xs, ps, r, statement):
    ps = tuple(float(p) for p in np.ravel(ps))
    params = {"ps": ps, "r": r} if statement is not StatementId.COROLLARY_4_7 else {"ps": ps}
    validate_params(statement, params)
    if len(xs) != len(ps):
        raise InvalidStatementParams(f"{len(xs)} matrices but {len(ps)} exponents")
    xs = same_dimension(*xs)
    for index, x in enumerate(xs, start=1):
        require_contraction(x, f"x{index}")
    return xs, ps


def _head_sides(product_values, factor_values, ps, r):
    # norms up to 1 + 1e-12 pass require_contraction; clip them onto [0, 1]
    lhs = None
    for values, p in zip(factor_values, ps):
        term = one_minus_power_curve(np.clip(values, 0.0, 1.0), r * p).scale(1.0 / p)
        lhs = term if lhs is None else lhs + term
    return lhs, one_minus_power_curve(np.clip(product_values, 0.0, 1.0), r)


def _tail_sides(product, xs, ps, r):
    n = product.shape[0]
    lhs = None
    for x, p in zip(xs, ps):
        complement = identity(n) - modulus_power(x, r * p)
        term = shifted_log_curve(complement, Transform.LOG_LEFT_TAIL).scale(1.0 / p)
        lhs = term if lhs is None else lhs + term
    rhs = shifted_log_curve(identity(n) - modulus_power(product, r), Transform.LOG_LEFT_TAIL)
    return lhs, rhs


def _determinant_sides(product, xs, ps, r):
    n = product.shape[0]
    lhs = sum(
        log_fk_determinant(identity(n) - modulus_power(x, r * p)) / p for x, p in zip(xs, ps)
    )
    return lhs, log_fk_determinant(identity(n) - modulus_power(product, r))


def check_holder_main(xs, ps, r=1.0, *, statement=StatementId.THEOREM_4_6, tolerance=DEFAULT_TOLERANCE):
    """Evaluate one of the product-of-contractions statements.

    Args:
        xs (list of array_like): m >= 2 contractions of one dimension
        ps (sequence of float): exponents with sum 1/p_i = 1
        r (float): exponent, r >= 1 (ignored by COROLLARY_4_7, which uses 1)
        statement (StatementId): THEOREM_4_6 (head and tail displays),
            COROLLARY_4_7 (r = 1 displays and, for self-adjoint P, the chain
            mu^l(1 - P) >= mu^l(1 - |P|) over [1 - t, 1] together with the
            pointwise mu(1 - |P|) <= mu(1 - P)), or REMARK_4_8 (both
            determinant inequalities)

    Raises:
        NotContraction: if some x_i has norm above 1
        InvalidStatementParams: on bad exponents or r
    """
    statement = StatementId(statement)
    if statement not in HOLDER_STATEMENTS:
        raise InvalidStatementParams(f"{statement.value} is not a product-of-contractions statement")
    if statement is StatementId.COROLLARY_4_7:
        r = 1.0
    xs, ps = _validated(list(xs), ps, r, statement)
    product = multiply(*xs)
    n = product.shape[0]
    margins, curves, notes = [], {}, []

    if statement in (StatementId.THEOREM_4_6, StatementId.COROLLARY_4_7):
        head_lhs, head_rhs = _head_sides(
            singular_values(product), [singular_values(x) for x in xs], ps, r
        )
        tail_lhs, tail_rhs = _tail_sides(product, xs, ps, r)
        margins += curve_margins("head", head_lhs, head_rhs)
        margins += curve_margins("tail", tail_lhs, tail_rhs)
        curves.update(head_lhs=head_lhs, head_rhs=head_rhs, tail_lhs=tail_lhs, tail_rhs=tail_rhs)

    if statement is StatementId.COROLLARY_4_7 and is_self_adjoint_product(product):
        operator_complement = identity(n) - product
        modulus_complement = identity(n) - modulus_power(product, 1.0)
        chain_lhs = shifted_log_curve(modulus_complement, Transform.LOG_LEFT_TAIL)
        chain_rhs = shifted_log_curve(operator_complement, Transform.LOG_LEFT_TAIL)
        chain = curve_margins("self_adjoint_chain", chain_lhs, chain_rhs)
        pointwise = value_margins(
            "self_adjoint_mu", mu(modulus_complement).values, mu(operator_complement).values
        )
        margins += chain + pointwise
        curves.update(chain_lhs=chain_lhs, chain_rhs=chain_rhs)
        chain_holds = worst_slack(chain) >= -tolerance
        pointwise_holds = worst_slack(pointwise) >= -tolerance
        if chain_holds != pointwise_holds:
            message = (
                f"mu^l chain {'holds' if chain_holds else 'fails'} while the pointwise mu "
                f"comparison {'holds' if pointwise_holds else 'fails'}"
            )
            logger.warning(f"COROLLARY_4_7 discrepancy: {message}")
            notes.append(message)

    if statement is StatementId.REMARK_4_8:
        for label, exponent in (("determinant", r), ("determinant_r1", 1.0)):
            lhs, rhs = _determinant_sides(product, xs, ps, exponent)
            margins.append(scalar_margin(label, lhs, rhs, k=n, n=n))

    params = {"ps": ps} if statement is StatementId.COROLLARY_4_7 else {"ps": ps, "r": float(r)}
    return CheckResult(statement, params, margins, tolerance, curves=curves, notes=notes)


def check_holder_partial_products(xs, ps, r=1.0, *, tolerance=DEFAULT_TOLERANCE):
    """Matrix form: prod_{j<=k} (1 - s_j(|P|)^r) >= prod_{j<=k} prod_i (1 - s_j(|x_i|)^{r p_i})^{1/p_i}.

    Compared as unscaled partial sums of logs.
    """
    xs, ps = _validated(list(xs), ps, r, StatementId.HOLDER_1_4)
    product = multiply(*xs)
    n = product.shape[0]
    lhs, rhs = _head_sides(singular_values(product), [singular_values(x) for x in xs], ps, r)
    lhs_sums, rhs_sums = n * lhs.log_values, n * rhs.log_values
    margins = [
        CheckMargin("partial_products", k, k / n, float(lhs_sums[k]), float(rhs_sums[k]))
        for k in range(1, n + 1)
    ]
    return CheckResult(StatementId.HOLDER_1_4, {"ps": ps, "r": float(r)}, margins, tolerance)
