r"""Statements about contractions ||x|| <= 1.

Reflection identities: for s in (0, 1)

    mu_s(1 - |x|)   = 1 - mu^l_{1-s}(|x|)
    mu^l_s(1 - |x|) = 1 - mu_{1-s}(|x|)

On the grid the point 1 - s of cell k lies in cell n + 1 - k with the
opposite continuity, so both identities are exact cellwise equalities that
``StepFunction.complement_reflected`` realizes.

Product integrals: for contractions x, y and r >= 1, with the product of
powers taken as |x|^r |y^*|^r (mu(xy) = mu(|x| |y^*|) by the polar
decomposition),

    int_0^t log(1 - mu_s(|xy|^r)) ds >= int_0^t log(1 - mu_s(|x|^r |y^*|^r)) ds
    int_{1-t}^1 log mu^l_s(1 - |xy|^r) ds >= int_{1-t}^1 log mu^l_s(1 - ||x|^r |y^*|^r|) ds

and the same with mu and mu^l exchanged. At t = 1 this gives
Delta(1 - |xy|^r) >= Delta(1 - ||x|^r |y^*|^r|).
"""
from logmajor.exceptions import InvalidStatementParams
from logmajor.inequalities.catalog import StatementId, validate_params
from logmajor.inequalities.hypotheses import (
    require_contraction,
    require_self_adjoint,
    same_dimension,
)
from logmajor.inequalities.result import DEFAULT_TOLERANCE, CheckResult
from logmajor.linalg.decompositions import modulus_power, polar
from logmajor.linalg.matrix import adjoint, identity, multiply
from logmajor.mu.calculus import Transform, log_fk_determinant, mu, mu_left, shifted_log_curve
from logmajor.mu.margins import curve_margins, scalar_margin, value_margins

EXPLORATORY = "exploratory/"


def check_contraction_identities(x, self_adjoint_variant=False, *, tolerance=DEFAULT_TOLERANCE):
    """Reflection identities, plus mu(1 - |x|) <= mu(1 - x) for self-adjoint x.

    Args:
        x (array_like): a contraction; self-adjoint when ``self_adjoint_variant``

    Raises:
        NotContraction: if ||x|| > 1 + 1e-12
        NotHermitian: if the self-adjoint variant gets a non-Hermitian x
    """
    (x,) = same_dimension(x)
    require_contraction(x)
    if self_adjoint_variant:
        require_self_adjoint(x)
    n = x.shape[0]
    modulus = polar(x).modulus
    complement = identity(n) - modulus

    right = mu(complement)
    left = mu_left(complement)
    reflected_left = mu_left(modulus).complement_reflected()
    reflected_right = mu(modulus).complement_reflected()
    assert reflected_left.flavor is right.flavor and reflected_right.flavor is left.flavor

    margins = value_margins("reflection_right", right.values, reflected_left.values, equality=True)
    margins += value_margins("reflection_left", left.values, reflected_right.values, equality=True)

    statement = StatementId.LEMMA_4_1
    if self_adjoint_variant:
        statement = StatementId.LEMMA_4_2
        margins += value_margins("modulus_below_operator", right.values, mu(identity(n) - x).values)
    return CheckResult(statement, {}, margins, tolerance)


def _product_sides(x, y, r, *, adjoint_second=True):
    second = adjoint(y) if adjoint_second else y
    powers = multiply(modulus_power(x, r), modulus_power(second, r))
    n = x.shape[0]
    return (
        multiply(x, y),
        powers,
        identity(n) - modulus_power(multiply(x, y), r),
        identity(n) - polar(powers).modulus,
    )


def check_product_integral(x, y, r, *, statement=StatementId.LEMMA_4_3, tolerance=DEFAULT_TOLERANCE):
    """Product integral inequalities for two contractions.

    Args:
        x, y (array_like): contractions
        r (float): exponent, r >= 1
        statement (StatementId): LEMMA_4_3 (mu first, mu^l over [1-t, 1]) or
            LEMMA_4_5 (mu^l first, mu over [1-t, 1], determinant at t = 1)

    Returns:
        CheckResult: margins of both displays; the literal |x|^r |y|^r
        reading and, for LEMMA_4_5, the opposite determinant direction are
        reported as exploratory margins

    Raises:
        NotContraction: if x or y has norm above 1
    """
    statement = StatementId(statement)
    if statement not in (StatementId.LEMMA_4_3, StatementId.LEMMA_4_5):
        raise InvalidStatementParams(f"{statement.value} is not a product integral statement")
    validate_params(statement, {"r": r})
    x, y = same_dimension(x, y)
    require_contraction(x, "x")
    require_contraction(y, "y")
    n = x.shape[0]

    if statement is StatementId.LEMMA_4_3:
        head, tail = Transform.LOG_ONE_MINUS_RIGHT, Transform.LOG_LEFT_TAIL
    else:
        head, tail = Transform.LOG_ONE_MINUS_LEFT, Transform.LOG_RIGHT_TAIL

    def displays(adjoint_second, prefix):
        product, powers, product_complement, powers_complement = _product_sides(
            x, y, r, adjoint_second=adjoint_second
        )
        head_lhs = shifted_log_curve(powers, head)
        head_rhs = shifted_log_curve(product, head, r=r)
        tail_lhs = shifted_log_curve(powers_complement, tail)
        tail_rhs = shifted_log_curve(product_complement, tail)
        margins = curve_margins(prefix + "head", head_lhs, head_rhs)
        margins += curve_margins(prefix + "tail", tail_lhs, tail_rhs)
        curves = {
            prefix + "head_lhs": head_lhs,
            prefix + "head_rhs": head_rhs,
            prefix + "tail_lhs": tail_lhs,
            prefix + "tail_rhs": tail_rhs,
        }
        determinants = (log_fk_determinant(product_complement), log_fk_determinant(powers_complement))
        return margins, curves, determinants

    margins, curves, (product_det, powers_det) = displays(True, "")
    exploratory, _, (_, literal_powers_det) = displays(False, EXPLORATORY + "literal_")
    if statement is StatementId.LEMMA_4_5:
        margins.append(scalar_margin("determinant", powers_det, product_det, k=n, n=n))
        exploratory.append(
            scalar_margin(EXPLORATORY + "determinant_as_printed", product_det, powers_det, k=n, n=n)
        )
        exploratory.append(
            scalar_margin(
                EXPLORATORY + "literal_determinant", literal_powers_det, product_det, k=n, n=n
            )
        )

    return CheckResult(
        statement, {"r": float(r)}, margins, tolerance, curves=curves, exploratory=exploratory
    )
