import pytest
from yacs.config import CfgNode as CN

from logmajor.exceptions import ConfigError
from logmajor.inequalities.catalog import PAPER_STATEMENTS, StatementId
from logmajor.suite_config import SEED_ENVIRONMENT, SuiteConfig


@pytest.fixture
def config():
    """prepare config."""
    with open("tests/config/test_config.yaml") as f:
        cfg = CN.load_cfg(f)

    return cfg


class TestSuiteConfig:
    def test_from_test_config(self, config):
        suite = SuiteConfig.from_config(dict(config))
        assert suite.dims == (2, 3)
        assert suite.trials == 3
        assert suite.master_seed == 7
        assert suite.holder_exponents == ((2.0, 2.0), (3.0, 3.0, 3.0))
        assert suite.selected_statements == PAPER_STATEMENTS

    def test_defaults_match_config_yaml(self, monkeypatch):
        monkeypatch.delenv(SEED_ENVIRONMENT, raising=False)
        with open("config.yaml") as f:
            cfg = CN.load_cfg(f)
        suite = SuiteConfig.from_config(dict(cfg))
        defaults = SuiteConfig()
        assert suite == defaults

    def test_unknown_key(self):
        with pytest.raises(ConfigError):
            SuiteConfig.from_config({"trails": 3})

    @pytest.mark.parametrize(
        "key, value",
        [
            ("trials", 0),
            ("dims", [2, 0]),
            ("tolerance", -1.0),
            ("workers", 0),
            ("power_r", [1.0, 2.5]),
            ("rotfeld_p", [1.5]),
            ("holder_exponents", [[2.0, 3.0]]),
            ("contraction_r", [0.5]),
            ("concave_families", ["convex"]),
            ("exploratory_power_r", [0.5]),
            ("log_level", "LOUD"),
            ("statements", "THEOREM_9_9"),
            ("trials", "many"),
        ],
    )
    def test_invalid_values(self, key, value):
        with pytest.raises(ConfigError):
            SuiteConfig.from_config({key: value})

    def test_statement_filter(self):
        suite = SuiteConfig.from_config({"statements": "theorem_3_3, LEMMA_4_1"})
        assert suite.statements == (StatementId.THEOREM_3_3, StatementId.LEMMA_4_1)
        assert suite.to_dict()["statements"] == ["THEOREM_3_3", "LEMMA_4_1"]

    def test_runtime_keys_are_not_content(self):
        serial = SuiteConfig.from_config({"workers": 1, "out_dir": "a"})
        parallel = SuiteConfig.from_config({"workers": 4, "out_dir": "b"})
        assert serial.to_dict() == parallel.to_dict()
        assert "workers" not in serial.to_dict()
        assert parallel.runtime()["workers"] == 4
        assert parallel.runtime()["out_dir"] == "b"

    def test_seed_from_environment(self, monkeypatch):
        monkeypatch.setenv(SEED_ENVIRONMENT, "123")
        assert SuiteConfig.from_config({"master_seed": None}).master_seed == 123
        assert SuiteConfig.from_config({"master_seed": 4}).master_seed == 4

    def test_invalid_seed_environment(self, monkeypatch):
        monkeypatch.setenv(SEED_ENVIRONMENT, "abc")
        with pytest.raises(ConfigError):
            SuiteConfig.from_config({})

    def test_seed_defaults_to_zero(self, monkeypatch):
        monkeypatch.delenv(SEED_ENVIRONMENT, raising=False)
        assert SuiteConfig.from_config({}).master_seed == 0

    def test_log_level_is_normalized(self):
        assert SuiteConfig.from_config({"log_level": "debug"}).log_level == "DEBUG"

    def test_boolean_strings(self):
        assert SuiteConfig.from_config({"exploratory": "true"}).exploratory
        assert not SuiteConfig.from_config({"shrink": "no"}).shrink
