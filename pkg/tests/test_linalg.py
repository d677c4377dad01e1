import numpy as np
import pytest

from logmajor import sampler
from logmajor.exceptions import (
    DimensionMismatch,
    InvalidMatrix,
    NotHermitian,
    NotPositive,
    NotPSDBlock,
    ParseError,
    ScalarFunctionError,
)
from logmajor.linalg import functions
from logmajor.linalg.decompositions import (
    cofactor_determinant,
    contraction_factor,
    direct_sum,
    modulus_power,
    operator_norm,
    polar,
)
from logmajor.linalg.jacobi import hermitian_eigen, svd
from logmajor.linalg.matrix import as_matrix, diag, format_matrix, identity, normalized_trace, parse_matrix

DRAWS_PER_DIMENSION = 63


def random_matrix(n, seed=0):
    rng = np.random.default_rng(seed)
    return rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))


def random_positive(n, seed=0):
    g = random_matrix(n, seed)
    return np.conj(g.T) @ g


class TestMatrix:
    def test_as_matrix_is_read_only_complex(self):
        x = as_matrix([[1, 2], [3, 4]])
        assert x.dtype == np.complex128
        with pytest.raises(ValueError):
            x[0, 0] = 5

    @pytest.mark.parametrize(
        "value", [np.zeros((2, 3)), np.zeros((0, 0)), [[1.0, np.nan], [0.0, 1.0]]]
    )
    def test_as_matrix_rejects(self, value):
        with pytest.raises(InvalidMatrix):
            as_matrix(value)

    def test_normalized_trace_of_identity(self):
        assert normalized_trace(identity(5)) == 1

    def test_record_is_exact(self):
        x = as_matrix([[0.1 + 1 / 3j, -2.5e-300], [1e300, np.pi]])
        text = format_matrix(x)
        assert text.splitlines()[0] == "2"
        parsed, consumed = parse_matrix(text.splitlines())
        assert consumed == 5
        assert np.array_equal(parsed, x)

    def test_parse_reports_line_and_column(self):
        lines = ["2", "1.0 0.0", "0.0 abc", "0.0 0.0", "1.0 0.0"]
        with pytest.raises(ParseError) as error:
            parse_matrix(lines, first_line=10, path="w.txt")
        assert error.value.line == 12
        assert error.value.column == 5
        assert str(error.value).startswith("w.txt:12:5:")

    def test_parse_missing_entries(self):
        with pytest.raises(ParseError) as error:
            parse_matrix(["2", "1.0 0.0"])
        assert error.value.line == 3


class TestJacobi:
    @pytest.mark.parametrize("n", [1, 2, 5, 8])
    def test_svd_matches_reference(self, n):
        x = random_matrix(n, seed=n)
        spectrum = svd(x)
        expected = np.linalg.svd(x, compute_uv=False)
        assert np.allclose(spectrum.values, expected, rtol=1e-12, atol=1e-12)
        assert np.allclose(spectrum.reconstruct(), x, atol=1e-12)
        assert np.allclose(np.conj(spectrum.left_factor.T) @ spectrum.left_factor, np.eye(n), atol=1e-12)

    def test_svd_keeps_zero_column_exact(self):
        x = np.array(random_matrix(4, seed=3))
        x[:, 2] = 0.0
        spectrum = svd(x)
        assert spectrum.values[-1] == 0.0
        assert np.allclose(np.conj(spectrum.left_factor.T) @ spectrum.left_factor, np.eye(4), atol=1e-12)

    def test_hermitian_eigen_matches_reference(self):
        a = random_positive(6, seed=4)
        eigen = hermitian_eigen(a)
        assert np.allclose(eigen.eigenvalues, np.linalg.eigvalsh(a)[::-1], atol=1e-10)
        assert np.all(np.diff(eigen.eigenvalues) <= 0)
        reconstructed = (eigen.unitary * eigen.eigenvalues) @ np.conj(eigen.unitary.T)
        assert np.allclose(reconstructed, a, atol=1e-10)

    @pytest.mark.parametrize("n", range(1, 17))
    def test_reconstruction_over_ginibre_draws(self, n):
        for trial in range(DRAWS_PER_DIMENSION):
            x = sampler.sample_ginibre(n, sampler.SamplerSeed(1, trial, "reconstruction"))
            spectrum = svd(x)
            assert np.all(np.diff(spectrum.values) <= 0)
            assert np.allclose(spectrum.reconstruct(), x, atol=1e-12)
            assert np.allclose(spectrum.values, np.linalg.svd(x, compute_uv=False), atol=1e-12)

            a = np.conj(x.T) @ x
            eigen = hermitian_eigen((a + np.conj(a.T)) / 2)
            reconstructed = (eigen.unitary * eigen.eigenvalues) @ np.conj(eigen.unitary.T)
            assert np.allclose(reconstructed, a, atol=1e-11)

    def test_nilpotent_svd(self):
        spectrum = svd([[0.0, 1.0], [0.0, 0.0]])
        assert np.allclose(spectrum.values, [1.0, 0.0], atol=1e-14)
        assert np.allclose(spectrum.reconstruct(), [[0.0, 1.0], [0.0, 0.0]], atol=1e-14)

    def test_swap_eigenvalues(self):
        eigen = hermitian_eigen([[0.0, 1.0], [1.0, 0.0]])
        assert np.allclose(eigen.eigenvalues, [1.0, -1.0], atol=1e-14)

    def test_hermitian_eigen_rejects_non_hermitian(self):
        with pytest.raises(NotHermitian):
            hermitian_eigen([[0.0, 1.0], [0.0, 0.0]])


class TestDecompositions:
    def test_polar_of_rank_deficient_matrix(self):
        x = np.array(random_matrix(3, seed=5))
        x[:, 0] = 0.0
        unitary, modulus = polar(x)
        assert np.allclose(unitary @ modulus, x, atol=1e-12)
        assert np.allclose(np.conj(unitary.T) @ unitary, np.eye(3), atol=1e-12)

    def test_polar_of_nilpotent(self):
        x = [[0.0, 1.0], [0.0, 0.0]]
        unitary, modulus = polar(x)
        assert np.allclose(modulus, np.diag([0.0, 1.0]), atol=1e-14)
        assert np.allclose(unitary @ modulus, x, atol=1e-14)

    @pytest.mark.parametrize("n", [1, 3, 7, 16])
    def test_modulus_has_the_singular_values(self, n):
        for trial in range(10):
            x = sampler.sample_ginibre(n, sampler.SamplerSeed(2, trial, "polar"))
            unitary, modulus = polar(x)
            assert np.allclose(svd(modulus).values, svd(x).values, atol=1e-12)
            assert np.allclose(unitary @ modulus, x, atol=1e-12)

    def test_modulus_power(self):
        x = random_matrix(4, seed=6)
        squared = modulus_power(x, 2.0)
        assert np.allclose(squared, np.conj(x.T) @ x, atol=1e-10)

    def test_contraction_factor(self):
        a, b = random_positive(3, seed=7), random_positive(3, seed=8)
        w = random_matrix(3, seed=9)
        w = w / np.linalg.norm(w, 2) * 0.9
        root_a = functions.positive_power(a, 0.5)
        root_b = functions.positive_power(b, 0.5)
        x = root_a @ w @ root_b
        factor = contraction_factor(a, b, x)
        assert operator_norm(factor) <= 1 + 1e-9
        assert np.allclose(root_a @ factor @ root_b, x, atol=1e-8)

    @pytest.mark.parametrize("n", [1, 2, 4, 6])
    def test_contraction_factor_round_trip(self, n):
        for trial in range(10):
            seed = sampler.SamplerSeed(3, trial, "factor")
            a = sampler.sample_positive(n, seed.child("a")) + identity(n)
            b = sampler.sample_positive(n, seed.child("b")) + identity(n)
            w = sampler.sample_contraction(n, seed.child("w"))
            x = functions.positive_power(a, 0.5) @ w @ functions.positive_power(b, 0.5)
            factor = contraction_factor(a, b, x)
            assert np.allclose(factor, w, atol=1e-9)
            assert operator_norm(factor) <= 1 + 1e-9

    def test_contraction_factor_rejects_indefinite_block(self):
        with pytest.raises(NotPSDBlock):
            contraction_factor(identity(2), identity(2), 2 * identity(2))

    def test_contraction_factor_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            contraction_factor(identity(2), identity(3), identity(2))

    def test_direct_sum(self):
        result = direct_sum(2 * identity(1), identity(2))
        assert np.array_equal(result, np.diag([2.0, 1.0, 1.0]).astype(complex))

    def test_cofactor_determinant(self):
        x = random_matrix(5, seed=10)
        assert cofactor_determinant(x) == pytest.approx(np.linalg.det(x), rel=1e-10)


class TestFunctions:
    def test_families(self):
        assert functions.power(0.5, family="concave").concave
        assert functions.log_shift(2.0, family="concave").at_zero() == 0.0
        with pytest.raises(ScalarFunctionError):
            functions.power(2.0, family="concave")
        with pytest.raises(ScalarFunctionError):
            functions.affine_plus_one().with_family("concave")

    def test_piecewise_linear_must_be_concave(self):
        with pytest.raises(ScalarFunctionError):
            functions.piecewise_linear([(0.0, 0.0), (1.0, 1.0), (2.0, 3.0)])

    def test_knots_start_at_zero(self):
        with pytest.raises(ScalarFunctionError):
            functions.table([(1.0, 0.0), (2.0, 1.0)])

    def test_record_parses_back(self):
        f = functions.shifted(functions.rational(0.7), 1.0)
        tokens = f.record("g").split()
        assert tokens[:2] == ["function", "g"]
        assert functions.parse_function(tokens[2:]) == f

    def test_apply_scalar_function(self):
        a = random_positive(4, seed=11)
        root = functions.apply_scalar_function(a, functions.power(0.5))
        assert np.allclose(root @ root, a, atol=1e-9)

    def test_log_shift_of_diagonal(self):
        result = functions.apply_scalar_function(diag([0.0, np.e - 1.0]), functions.log_shift(1.0))
        assert np.allclose(result, np.diag([0.0, 1.0]), atol=1e-14)

    @pytest.mark.parametrize("f", [functions.log_shift(1.0), functions.power(0.5), functions.rational(2.0)])
    def test_function_commutes_with_its_argument(self, f):
        for trial in range(10):
            a = sampler.sample_positive(5, sampler.SamplerSeed(4, trial, "commute"))
            fa = functions.apply_scalar_function(a, f)
            assert np.allclose(fa @ a, a @ fa, atol=1e-10)

    def test_apply_scalar_function_rejects_negative(self):
        with pytest.raises(NotPositive):
            functions.apply_scalar_function(-identity(2), functions.power(0.5))
