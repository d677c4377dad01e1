import os

import numpy as np
import pytest

from logmajor import sampler
from logmajor.sampler import SamplerSeed
from logmajor.storage.witness import dump_goldens, parse_records

GOLDENS = os.path.join("tests", "fixtures", "goldens.txt")
DRAWS = 1000


def seed(trial=0, purpose="test"):
    return SamplerSeed(5, trial, purpose)


class TestSamplerSeed:
    def test_draws_are_reproducible(self):
        first = sampler.sample_ginibre(4, seed())
        second = sampler.sample_ginibre(4, seed())
        assert np.array_equal(first, second)

    @pytest.mark.parametrize("other", [seed(trial=1), seed(purpose="other"), SamplerSeed(6, 0, "test")])
    def test_draws_depend_on_every_component(self, other):
        assert not np.array_equal(sampler.sample_ginibre(3, seed()), sampler.sample_ginibre(3, other))

    def test_master_seed_is_reduced_to_64_bits(self):
        big = SamplerSeed(5 + (1 << 64), 0, "test")
        assert np.array_equal(sampler.sample_ginibre(2, big), sampler.sample_ginibre(2, seed()))

    def test_child_streams_differ(self):
        assert seed().child("x").purpose == "test/x"
        assert not np.array_equal(
            sampler.complex_normals(4, seed().child("x")), sampler.complex_normals(4, seed().child("y"))
        )

    def test_purpose_tags_give_disjoint_streams(self):
        first = seed(purpose="x").generator().bit_generator.random_raw(10 ** 4)
        second = seed(purpose="y").generator().bit_generator.random_raw(10 ** 4)
        assert np.intersect1d(first, second).size == 0


class TestSamplers:
    def test_complex_normals_have_unit_variance(self):
        z = sampler.complex_normals(20000, seed())
        assert np.mean(np.abs(z) ** 2) == pytest.approx(1.0, abs=0.05)

    def test_haar_unitary(self):
        u = sampler.sample_haar_unitary(5, seed())
        assert np.allclose(np.conj(u.T) @ u, np.eye(5), atol=1e-12)

    @pytest.mark.parametrize("n", [1, 4, 9])
    def test_strict_contraction(self, n):
        x = sampler.sample_contraction(n, seed())
        assert np.linalg.norm(x, 2) <= 1 - sampler.STRICT_DELTA + 1e-12

    def test_positive(self):
        a = sampler.sample_positive(4, seed())
        assert np.allclose(a, np.conj(a.T))
        assert np.min(np.linalg.eigvalsh(a)) >= -1e-12

    def test_selfadjoint_contraction(self):
        x = sampler.sample_selfadjoint_contraction(4, seed())
        assert np.allclose(x, np.conj(x.T))
        assert np.linalg.norm(x, 2) <= 1 + 1e-12

    @pytest.mark.parametrize("family", sampler.CONCAVE_FAMILIES)
    def test_concave_families(self, family):
        for trial in range(8):
            f = sampler.sample_concave(seed(trial), families=(family,))
            assert f.kind == family
            assert f.concave and f.increasing
            assert f.at_zero() == 0.0

    def test_unknown_concave_family(self):
        with pytest.raises(ValueError):
            sampler.sample_concave(seed(), families=("convex",))

    @pytest.mark.parametrize("m", [2, 3, 5])
    def test_exponents_are_conjugate(self, m):
        ps = sampler.sample_exponents(m, seed())
        assert len(ps) == m
        assert all(p > 1 for p in ps)
        assert sum(1 / p for p in ps) == pytest.approx(1.0, abs=1e-12)

    def test_golden_draws_are_stable(self):
        text = dump_goldens()
        assert text == dump_goldens()
        records = parse_records(text)
        assert records.statement is None
        assert set(records.matrices) == {
            "ginibre",
            "haar_unitary",
            "contraction",
            "positive",
            "selfadjoint_contraction",
        }
        matrices, _, _ = sampler.golden_draws()
        for name, x in matrices.items():
            assert np.array_equal(records.matrices[name], x)

    def test_golden_draws_match_fixture(self):
        if not os.path.exists(GOLDENS):
            pytest.skip(f"record the golden draws with `logmajor goldens {GOLDENS}`")
        with open(GOLDENS, newline="") as f:
            assert dump_goldens() == f.read()


class TestSamplerStatistics:
    def test_ginibre_norm_concentrates_near_two(self):
        norms = [np.linalg.norm(sampler.sample_ginibre(16, seed(trial)), 2) for trial in range(DRAWS)]
        assert 1.7 <= np.mean(norms) <= 2.3

    def test_haar_unitarity_residual(self):
        residual = max(
            np.max(np.abs(np.conj(u.T) @ u - np.eye(8)))
            for u in (sampler.sample_haar_unitary(8, seed(trial)) for trial in range(DRAWS))
        )
        assert residual < 1e-12

    def test_non_strict_contractions_reach_the_unit_norm(self):
        draws = (sampler.sample_contraction(16, seed(trial), strict=False) for trial in range(DRAWS))
        norms = [np.linalg.norm(x, 2) for x in draws]
        assert max(norms) > 1 - 1e-3
        assert max(norms) <= 1 + 1e-12

    def test_strict_contractions_stay_below_the_margin(self):
        norms = [np.linalg.norm(sampler.sample_contraction(4, seed(trial)), 2) for trial in range(DRAWS)]
        assert max(norms) <= 1 - sampler.STRICT_DELTA + 1e-12
