r"""Basic properties of mu, Lambda and Delta on M_n.

The sub-checks, each reported under its own margin label:

==================  ==================================================  ======
label               claim                                               domain
==================  ==================================================  ======
adjoint_square      mu(x^*x) = mu(xx^*)                                 value
unitary_bound       mu(uxv) <= ||u|| mu(x) ||v||                        value
function            mu(f(|x|)) = f(mu(|x|))                             value
trace_formula       tau(f(|x|)) = int_0^1 f(mu_t(|x|)) dt               value
lambda_power        Lambda(|x|^alpha) = Lambda(|x|)^alpha               log
lambda_product      Lambda(xy) <= Lambda(x) Lambda(y)                   log
lambda_adjoint      Lambda(x) = Lambda(x^*) = Lambda(|x|)               log
determinant         Delta(g(|x|)) = Lambda_1(g(|x|)), g = 1 + f - f(0)  log
one_plus            mu(1 + |x|) = 1 + mu(|x|)                           value
==================  ==================================================  ======
"""
import numpy as np

from logmajor.exceptions import InvalidStatementParams
from logmajor.inequalities.catalog import StatementId, validate_params
from logmajor.inequalities.hypotheses import same_dimension
from logmajor.inequalities.result import DEFAULT_TOLERANCE, CheckResult
from logmajor.linalg.decompositions import modulus_power, operator_norm, polar
from logmajor.linalg.functions import apply_scalar_function, shifted
from logmajor.linalg.matrix import adjoint, identity, multiply
from logmajor.mu.calculus import lambda_curve, log_fk_determinant, mu, trace_of_function
from logmajor.mu.margins import curve_margins, scalar_margin, value_margins
from logmajor.mu.step import safe_log


def check_mu_axioms(x, y, u, v, f, alpha, *, tolerance=DEFAULT_TOLERANCE):
    """Evaluate every basic property on one input tuple.

    Args:
        x, y, u, v (array_like): matrices of one dimension
        f (ScalarFunction): increasing with f(0) >= 0
        alpha (float): positive exponent

    Returns:
        CheckResult: margins of all sub-checks

    Raises:
        InvalidStatementParams: if alpha <= 0, or f is not increasing or f(0) < 0
    """
    validate_params(StatementId.MU_AXIOMS_2, {"alpha": alpha})
    if not f.increasing or f.at_zero() < 0:
        raise InvalidStatementParams(f"MU_AXIOMS_2 needs an increasing f with f(0) >= 0, got {f}")
    x, y, u, v = same_dimension(x, y, u, v)
    n = x.shape[0]
    modulus = polar(x).modulus
    margins = []

    margins += value_margins(
        "adjoint_square",
        mu(multiply(adjoint(x), x)).values,
        mu(multiply(x, adjoint(x))).values,
        equality=True,
    )

    bound = operator_norm(u) * operator_norm(v)
    margins += value_margins(
        "unitary_bound", mu(multiply(u, x, v)).values, bound * mu(x).values
    )

    mu_modulus = mu(modulus)
    margins += value_margins(
        "function",
        mu(apply_scalar_function(modulus, f)).values,
        mu_modulus.map(f).values,
        equality=True,
    )

    formula = trace_of_function(modulus, f)
    margins.append(
        scalar_margin(
            "trace_formula", formula.trace, formula.integral, k=n, n=n, domain="value", equality=True
        )
    )

    margins += curve_margins(
        "lambda_power",
        lambda_curve(modulus_power(x, alpha)),
        lambda_curve(modulus).scale(alpha),
        equality=True,
    )

    margins += curve_margins(
        "lambda_product", lambda_curve(multiply(x, y)), lambda_curve(x) + lambda_curve(y)
    )

    curve = lambda_curve(x)
    margins += curve_margins("lambda_adjoint", curve, lambda_curve(adjoint(x)), equality=True)
    margins += curve_margins("lambda_adjoint", curve, lambda_curve(modulus), equality=True)

    g = shifted(f, 1.0 - f.at_zero(), family="determinant")
    g_of_modulus = apply_scalar_function(modulus, g)
    integral = float(np.mean(safe_log(g(mu_modulus.values))))
    margins.append(
        scalar_margin("determinant", log_fk_determinant(g_of_modulus), integral, k=n, n=n, equality=True)
    )

    margins += value_margins(
        "one_plus",
        mu(identity(n) + modulus).values,
        1.0 + mu_modulus.values,
        equality=True,
    )

    return CheckResult(
        StatementId.MU_AXIOMS_2,
        {"alpha": float(alpha)},
        margins,
        tolerance,
        curves={"lambda_x": curve, "lambda_xy": lambda_curve(multiply(x, y))},
    )
