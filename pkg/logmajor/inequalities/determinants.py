"""Determinant and concave-perturbation inequalities for sums x + y."""
from logmajor.exceptions import InvalidStatementParams
from logmajor.inequalities.catalog import StatementId, validate_params
from logmajor.inequalities.hypotheses import same_dimension
from logmajor.inequalities.result import DEFAULT_TOLERANCE, CheckResult
from logmajor.linalg.decompositions import modulus_power, polar
from logmajor.linalg.functions import PROBE_TOLERANCE, apply_scalar_function
from logmajor.linalg.matrix import identity
from logmajor.mu.calculus import lambda_curve
from logmajor.mu.margins import curve_margins, scalar_margin


def _one_plus(n, positive, scale=1.0):
    return identity(n) + scale * positive


def check_rotfeld(x, y, rho, p, *, tolerance=DEFAULT_TOLERANCE):
    """Delta(1 + rho|x+y|^p) <= Delta(1 + rho|x|^p) Delta(1 + rho|y|^p).

    The comparison is a single log-domain margin at t = 1.
    """
    validate_params(StatementId.ROTFELD_1_1, {"rho": rho, "p": p})
    x, y = same_dimension(x, y)
    n = x.shape[0]
    lhs = lambda_curve(_one_plus(n, modulus_power(x + y, p), rho))
    rhs = lambda_curve(_one_plus(n, modulus_power(x, p), rho)) + lambda_curve(
        _one_plus(n, modulus_power(y, p), rho)
    )
    margins = [scalar_margin("determinant", lhs.at_end(), rhs.at_end(), k=n, n=n)]
    return CheckResult(
        StatementId.ROTFELD_1_1,
        {"rho": float(rho), "p": float(p)},
        margins,
        tolerance,
        curves={"lhs": lhs, "rhs": rhs},
    )


def check_concave_perturbation(x, y, f, *, tolerance=DEFAULT_TOLERANCE):
    """1 + f(|x+y|) is log-submajorized by the cellwise product of
    1 + f(|x|) and 1 + f(|y|).

    Raises:
        InvalidStatementParams: if f fails the concavity probe or f(0) != 0
    """
    if not f.concave or abs(f.at_zero()) > PROBE_TOLERANCE or not f.increasing:
        raise InvalidStatementParams(
            f"GARG_AUJLA_1_2 needs a nonnegative concave f with f(0) = 0, got {f}"
        )
    x, y = same_dimension(x, y)
    n = x.shape[0]

    def one_plus_f(z):
        return _one_plus(n, apply_scalar_function(polar(z).modulus, f))

    lhs = lambda_curve(one_plus_f(x + y))
    rhs = lambda_curve(one_plus_f(x)) + lambda_curve(one_plus_f(y))
    return CheckResult(
        StatementId.GARG_AUJLA_1_2,
        {},
        curve_margins("partial_products", lhs, rhs),
        tolerance,
        curves={"lhs": lhs, "rhs": rhs},
    )
