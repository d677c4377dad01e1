import json
import os

import pytest
import yaml

from logmajor.cli import _arg_from_snakecase_key, _overwrite_config, main
from logmajor.storage.witness import dump_goldens

TEST_CONFIG = os.path.join("tests", "config", "test_config.yaml")
NEGATIVE = os.path.join("tests", "fixtures", "negative_control_witness.txt")
GOLDEN = os.path.join("tests", "fixtures", "golden_witness.txt")


def run_args(out_dir, *extra):
    return ["run", "--config-file", TEST_CONFIG, "--out", str(out_dir), *extra]


class TestArguments:
    def test_arg_from_snakecase_key(self):
        assert _arg_from_snakecase_key("selftest_trials") == "--selftest-trials"

    def test_overwrite_config(self):
        config = {
            "dims": [2, 3],
            "trials": 200,
            "master_seed": None,
            "statements": [],
            "exploratory": False,
            "out_dir": "logmajor_out",
        }
        args = {
            "--dims": "4, 8",
            "--trials": "7",
            "--seed": "11",
            "--statements": "THEOREM_3_3,LEMMA_4_1",
            "--exploratory": True,
            "--out": "/tmp/elsewhere",
        }
        assert _overwrite_config(config, args) == {
            "dims": [4, 8],
            "trials": 7,
            "master_seed": "11",
            "statements": ["THEOREM_3_3", "LEMMA_4_1"],
            "exploratory": True,
            "out_dir": "/tmp/elsewhere",
        }

    def test_missing_args_keep_the_config(self):
        config = {"trials": 200, "exploratory": False}
        assert _overwrite_config(config, {"--trials": None, "--exploratory": False}) == config


class TestMain:
    def test_run_passes(self, tmp_path):
        status = main(run_args(tmp_path, "--statements", "ORACLE_MU,THEOREM_3_3", "--trials", "2"))
        assert status == 0
        with open(tmp_path / "report.json") as f:
            report = json.load(f)["report"]
        assert report["pass"] is True
        assert report["config"]["trials"] == 2
        assert report["config"]["master_seed"] == 7
        assert (tmp_path / "margins.csv").exists()
        assert not (tmp_path / "witnesses").exists()

    def test_same_seed_same_report(self, tmp_path):
        for name in ("first", "second"):
            assert main(run_args(tmp_path / name, "--statements", "LEMMA_4_3", "--seed", "99")) == 0
        with open(tmp_path / "first" / "report.json") as f:
            first = json.load(f)
        with open(tmp_path / "second" / "report.json") as f:
            second = json.load(f)
        assert first["content_sha256"] == second["content_sha256"]
        assert first["report"]["config"]["master_seed"] == 99

    def test_negative_control_exits_one(self, tmp_path):
        status = main(run_args(tmp_path, "--statements", "REVERSED_THEOREM_3_3", "--dims", "2"))
        assert status == 1
        witnesses = os.listdir(tmp_path / "witnesses")
        assert "REVERSED_THEOREM_3_3_n=2_r=1.5__trial0.txt" in witnesses

    def test_selftest(self, tmp_path):
        status = main(["selftest", "--config-file", TEST_CONFIG, "--out", str(tmp_path)])
        assert status == 0
        assert (tmp_path / "report.json").exists()

    def test_replay(self, tmp_path, capsys):
        status = main(["replay", "REVERSED_THEOREM_3_3", NEGATIVE, "--config-file", TEST_CONFIG, "--out", str(tmp_path)])
        assert status == 1
        assert "REVERSED_THEOREM_3_3: FAIL" in capsys.readouterr().out
        assert (tmp_path / "curves.csv").exists()
        assert main(["replay", "THEOREM_3_3", GOLDEN, "--config-file", TEST_CONFIG]) == 0

    @pytest.mark.parametrize(
        "argv",
        [
            ["run", "--config-file", "tests/config/missing.yaml"],
            ["run", "--config-file", TEST_CONFIG, "--trials", "0"],
            ["run", "--config-file", TEST_CONFIG, "--statements", "THEOREM_9_9"],
            ["replay", "LEMMA_4_3", GOLDEN, "--config-file", TEST_CONFIG],
            ["replay", "THEOREM_3_3", "tests/fixtures/missing.txt", "--config-file", TEST_CONFIG],
            ["catalog", "--format", "xml"],
        ],
    )
    def test_errors_exit_two(self, argv, capsys):
        assert main(argv) == 2
        assert capsys.readouterr().err.startswith("error:")

    def test_malformed_witness_exits_two(self, tmp_path, capsys):
        path = tmp_path / "bad.txt"
        path.write_text("statement THEOREM_3_3\nparam r x\n")
        assert main(["replay", "THEOREM_3_3", str(path), "--config-file", TEST_CONFIG]) == 2
        assert f"{path}:2:9:" in capsys.readouterr().err

    def test_invalid_yaml_exits_two(self, tmp_path):
        path = tmp_path / "config.yaml"
        path.write_text("suite: [unclosed\n")
        assert main(["run", "--config-file", str(path)]) == 2

    def test_catalog(self, capsys):
        assert main(["catalog"]) == 0
        entries = json.loads(capsys.readouterr().out)
        assert entries[0]["id"] == "ROTFELD_1_1"

    def test_catalog_csv_file(self, tmp_path):
        path = tmp_path / "catalog.csv"
        assert main(["catalog", "--format", "csv", "--out", str(path)]) == 0
        assert path.read_text().startswith("id,kind,source")

    def test_goldens(self, tmp_path):
        path = tmp_path / "golden.txt"
        assert main(["goldens", str(path)]) == 0
        assert path.read_text() == dump_goldens()

    def test_config_yaml_is_a_mapping(self, tmp_path):
        path = tmp_path / "config.yaml"
        path.write_text(yaml.dump([1, 2]))
        assert main(["run", "--config-file", str(path)]) == 2
