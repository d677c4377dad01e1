"""Statements about positive operators: the 2x2 block factorization and the
Araki-Lieb-Thirring type comparison of y^p x^p y^p with (yxy)^p."""
import numpy as np

from logmajor.exceptions import NotPSDBlock
from logmajor.inequalities.catalog import StatementId, validate_params
from logmajor.inequalities.hypotheses import require_contraction, require_positive, same_dimension
from logmajor.inequalities.result import DEFAULT_TOLERANCE, CheckResult
from logmajor.linalg.decompositions import PSD_BLOCK_TOLERANCE, contraction_factor, operator_norm
from logmajor.linalg.functions import positive_power
from logmajor.linalg.jacobi import hermitian_eigen
from logmajor.linalg.matrix import identity, multiply
from logmajor.mu.calculus import lambda_curve, mu
from logmajor.mu.margins import VALUE, curve_margins, scalar_margin, value_margins

RECONSTRUCTION_TOLERANCE = 1e-8


def _block_floor(a, b, x):
    """Smallest eigenvalue of [[a, x], [x^*, b]] relative to max(1, its norm)."""
    block = np.block([[a, x], [np.conj(x.T), b]])
    eigenvalues = hermitian_eigen(block).eigenvalues
    return float(eigenvalues[-1]) / max(1.0, float(np.max(np.abs(eigenvalues))))


def check_lemma_3_1(a, b, w, *, tolerance=DEFAULT_TOLERANCE):
    """mu(1 + a) = 1 + mu(a), and the block factorization in both directions.

    Forward: x = a^{1/2} w b^{1/2} makes the block positive. Backward: the
    factor recovered from the positive block is a contraction that
    reproduces x.

    Args:
        a, b (array_like): positive semidefinite matrices
        w (array_like): a contraction
    """
    a, b, w = same_dimension(a, b, w)
    require_positive(a, "a")
    require_positive(b, "b")
    require_contraction(w, "w")
    n = a.shape[0]

    margins = value_margins(
        "one_plus", mu(identity(n) + a).values, 1.0 + mu(a).values, equality=True
    )

    root_a, root_b = positive_power(a, 0.5), positive_power(b, 0.5)
    x = multiply(root_a, w, root_b)
    floor = _block_floor(a, b, x)
    margins.append(
        scalar_margin("block_positive", -floor, PSD_BLOCK_TOLERANCE, k=n, n=n, domain=VALUE)
    )

    notes = []
    try:
        factor = contraction_factor(a, b, x)
    except NotPSDBlock as error:
        notes.append(f"factorization refused the block: {error}")
        factor = None
    if factor is not None:
        margins.append(
            scalar_margin("factor_norm", operator_norm(factor), 1.0, k=n, n=n, domain=VALUE)
        )
        residual = operator_norm(multiply(root_a, factor, root_b) - x)
        bound = RECONSTRUCTION_TOLERANCE * (1 + operator_norm(a)) * (1 + operator_norm(b))
        margins.append(
            scalar_margin("factor_reconstruction", residual, bound, k=n, n=n, domain=VALUE)
        )
    else:
        margins.append(scalar_margin("factor_norm", float("inf"), 1.0, k=n, n=n, domain=VALUE))

    return CheckResult(StatementId.LEMMA_3_1, {}, margins, tolerance, notes=notes)


def check_lemma_3_2(x, y, p, *, tolerance=DEFAULT_TOLERANCE):
    """Lambda(y^p x^p y^p) <= Lambda((yxy)^p) for p <= 1, reversed for p >= 1.

    Both sides are read off factors: y^p x^p y^p = C^*C with C = x^{p/2} y^p
    and yxy = B^*B with B = x^{1/2} y, so the curves are 2 Lambda(C) and
    2p Lambda(B) in the log domain. At p = 1 the margins are equalities.

    Raises:
        NotPositive: if x or y is not positive semidefinite
    """
    validate_params(StatementId.LEMMA_3_2, {"p": p})
    x, y = same_dimension(x, y)
    require_positive(x, "x")
    require_positive(y, "y")
    sandwich = lambda_curve(multiply(positive_power(x, p / 2), positive_power(y, p))).scale(2.0)
    power = lambda_curve(multiply(positive_power(x, 0.5), y)).scale(2.0 * p)
    if p == 1:
        margins = curve_margins("lambda", sandwich, power, equality=True)
    elif p < 1:
        margins = curve_margins("lambda", sandwich, power)
    else:
        margins = curve_margins("lambda", power, sandwich)
    return CheckResult(
        StatementId.LEMMA_3_2,
        {"p": float(p)},
        margins,
        tolerance,
        curves={"sandwich": sandwich, "power": power},
    )
