import numpy as np
import pytest

from logmajor.exceptions import DimensionMismatch, DomainError, NotContraction
from logmajor.linalg import functions
from logmajor.linalg.matrix import diag
from logmajor.mu import oracles
from logmajor.mu.calculus import (
    Transform,
    fk_determinant,
    lambda_curve,
    log_submajorize,
    mu,
    mu_left,
    one_minus_power_curve,
    rearrange_function,
    shifted_log_curve,
    trace_of_function,
)
from logmajor.mu.margins import CheckMargin, curve_margins, worst_slack
from logmajor.mu.step import Flavor, LambdaCurve, LogCurve, StepFunction


def random_matrix(n, seed=0):
    rng = np.random.default_rng(seed)
    return rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))


class TestStepFunction:
    def test_flavors_differ_at_grid_points(self):
        right = StepFunction([2.0, 1.0], Flavor.RIGHT)
        left = StepFunction([2.0, 1.0], Flavor.LEFT)
        assert right.evaluate(0.5) == 1.0
        assert left.evaluate(0.5) == 2.0
        assert right.evaluate(0.25) == left.evaluate(0.25) == 2.0
        assert right.evaluate(1.0) == 0.0
        assert left.evaluate(1.0) == 1.0

    def test_values_must_not_increase(self):
        with pytest.raises(DomainError):
            StepFunction([1.0, 2.0])

    def test_complement_reflected(self):
        reflected = StepFunction([0.8, 0.3], Flavor.RIGHT).complement_reflected()
        assert reflected.flavor is Flavor.LEFT
        assert np.allclose(reflected.values, [0.7, 0.2])

    def test_log_curve(self):
        curve = StepFunction([4.0, 1.0]).log_curve()
        assert np.allclose(curve.log_values, [0.0, np.log(2.0), np.log(2.0)])


class TestCurves:
    def test_minus_inf_increments(self):
        curve = LambdaCurve([0.5, -np.inf, -np.inf])
        assert curve.log_values[1] == 0.5
        assert curve.at_end() == -np.inf
        rows = curve.to_csv_rows("lhs")
        assert rows[-1] == ("lhs", 3, repr(1.0), "-inf")

    def test_lambda_curve_rejects_interior_minus_inf(self):
        with pytest.raises(DomainError):
            LambdaCurve([-np.inf, 0.0])

    def test_lambda_curve_rejects_increasing_increments(self):
        with pytest.raises(DomainError):
            LambdaCurve([0.0, 1.0])

    def test_log_curve_rejects_plus_inf(self):
        with pytest.raises(DomainError):
            LogCurve([np.inf])

    def test_sum_needs_same_grid(self):
        with pytest.raises(DimensionMismatch):
            LogCurve([0.0]) + LogCurve([0.0, 0.0])

    def test_reversed_tail(self):
        curve = LogCurve([0.0, -1.0, -3.0]).reversed_tail()
        assert np.allclose(curve.log_values, [0.0, -3.0, -4.0, -4.0])


class TestMargins:
    def test_minus_inf_on_both_sides_is_equal(self):
        margin = CheckMargin("lambda", 1, 0.5, -np.inf, -np.inf)
        assert margin.slack == 0.0
        assert margin.holds(1e-8)

    def test_equality_margin(self):
        margin = CheckMargin("lambda", 1, 1.0, 1.0, 0.5, equality=True)
        assert margin.slack == -0.5
        assert not margin.holds(1e-8)

    def test_worst_slack(self):
        margins = curve_margins("lambda", LogCurve([0.0, 0.0]), LogCurve([1.0, -0.5]))
        assert [m.k for m in margins] == [1, 2]
        assert worst_slack(margins) == pytest.approx(0.5)
        assert worst_slack([]) == float("inf")


class TestCalculus:
    def test_mu_of_diagonal(self):
        assert np.allclose(mu(diag([3.0, -1.0, 2.0])).values, [3.0, 2.0, 1.0])
        assert mu_left(diag([3.0, -1.0, 2.0])).flavor is Flavor.LEFT

    def test_lambda_curve_of_singular_matrix(self):
        curve = lambda_curve(diag([2.0, 1.0, 0.0]))
        assert np.allclose(curve.log_values[:3], [0.0, np.log(2.0) / 3, np.log(2.0) / 3])
        assert curve.log_values[3] == -np.inf

    def test_fk_determinant(self):
        x = random_matrix(4, seed=1)
        assert fk_determinant(x) == pytest.approx(abs(np.linalg.det(x)) ** 0.25, rel=1e-10)
        assert fk_determinant(diag([1.0, 0.0])) == 0.0
        assert fk_determinant(diag([0.8, 0.2])) == pytest.approx(0.4, rel=1e-12)

    def test_log_submajorize(self):
        x = random_matrix(3, seed=2)
        holds, margins = log_submajorize(x, 2 * x)
        assert holds
        assert len(margins) == 3
        assert not log_submajorize(2 * x, x)[0]
        with pytest.raises(DimensionMismatch):
            log_submajorize(x, np.eye(2))

    def test_boundary_snap(self):
        curve = one_minus_power_curve([1.0 + 1e-13, 0.5], power=1.0)
        assert curve.increments[0] == -np.inf
        with pytest.raises(DomainError):
            one_minus_power_curve([1.1, 0.5])

    def test_shifted_log_curve_needs_contraction(self):
        with pytest.raises(NotContraction):
            shifted_log_curve(2 * np.eye(2), Transform.LOG_ONE_MINUS_RIGHT)

    def test_tail_transform(self):
        curve = shifted_log_curve(diag([np.e, 1.0]), Transform.LOG_LEFT_TAIL)
        assert np.allclose(curve.log_values, [0.0, 0.0, 0.5])

    def test_rearrangement(self):
        assert np.allclose(rearrange_function([1.0, -3.0, 2.0]).values, [3.0, 2.0, 1.0])

    def test_trace_formula(self):
        x = random_matrix(4, seed=3)
        formula = trace_of_function(np.conj(x.T) @ x, functions.log_shift(1.0, family="increasing"))
        assert formula.deviation < 1e-10


class TestOracles:
    @pytest.mark.parametrize("n", [1, 3, 5])
    def test_counting_definitions(self, n):
        x = random_matrix(n, seed=n)
        assert np.allclose(oracles.counting_mu(x).values, mu(x).values, atol=1e-10)
        assert np.allclose(oracles.counting_mu_left(x).values, mu_left(x).values, atol=1e-10)

    def test_partial_products(self):
        assert np.allclose(oracles.partial_product_lambda([4.0, 1.0]), [1.0, 2.0, 2.0])

    def test_cofactor_determinant(self):
        x = random_matrix(3, seed=4)
        assert oracles.cofactor_fk_determinant(x) == pytest.approx(fk_determinant(x), rel=1e-10)
