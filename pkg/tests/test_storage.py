import csv
import hashlib
import json
import os

import numpy as np
import pytest
from yacs.config import CfgNode as CN

from logmajor import statements
from logmajor.exceptions import ConfigError, ParseError
from logmajor.inequalities.catalog import StatementId
from logmajor.run import run_suite
from logmajor.storage.report import ReportWriter, canonical_json, witness_filename
from logmajor.storage.witness import dump_witness, load_witness, parse_witness
from logmajor.suite_config import SuiteConfig

S = StatementId

GOLDEN = os.path.join("tests", "fixtures", "golden_witness.txt")
NEGATIVE = os.path.join("tests", "fixtures", "negative_control_witness.txt")


@pytest.fixture
def config():
    """prepare config."""
    with open("tests/config/test_config.yaml") as f:
        cfg = CN.load_cfg(f)

    return cfg


class TestWitnessFiles:
    def test_load_fixture(self):
        witness = load_witness(GOLDEN)
        assert witness.statement is S.THEOREM_3_3
        assert witness.params == {"r": 1.0}
        assert witness.seed is None
        assert np.array_equal(witness.matrices["x"], np.eye(2))

    def test_seed_record(self):
        witness = load_witness(NEGATIVE)
        assert witness.seed == (0, 0, "REVERSED_THEOREM_3_3/n=1/r=1.0")

    def test_sampled_witness_survives_the_text_format(self):
        cell = statements.make_cell(S.GARG_AUJLA_1_2, 3, variant="piecewise_linear")
        witness = statements.sample_witness(cell, 2, master=8)
        parsed = parse_witness(dump_witness(witness))
        assert parsed.statement is witness.statement
        assert parsed.seed == witness.seed
        for name, x in witness.matrices.items():
            assert np.array_equal(parsed.matrices[name], x)
        f, g = witness.functions["f"], parsed.functions["f"]
        assert (g.kind, g.params, g.offset) == (f.kind, f.params, f.offset)
        assert statements.evaluate(parsed).worst_slack == statements.evaluate(witness).worst_slack

    def test_tuple_params(self):
        cell = statements.make_cell(S.THEOREM_4_6, 2, {"ps": (2.0, 2.0), "r": 1.0})
        parsed = parse_witness(dump_witness(statements.sample_witness(cell, 0, master=0)))
        assert parsed.params == {"ps": (2.0, 2.0), "r": 1.0}
        assert len(parsed.matrix_list()) == 2

    @pytest.mark.parametrize(
        "text, line, column",
        [
            ("statement FOO\n", 1, 11),
            ("# comment\n\nstatement THEOREM_3_3\nparam r abc\n", 4, 9),
            ("statement THEOREM_3_3\nmatrix x\n1\n1.0 oops\n", 4, 5),
            ("statement THEOREM_3_3\nbogus record\n", 2, 1),
            ("statement THEOREM_3_3\nfunction f power 0.0 -1.0 1.0\nmatrix x\n1\n1.0 0.0\n", 2, 12),
            ("param r 1.0\nmatrix x\n1\n1.0 0.0\n", 1, 1),
        ],
    )
    def test_parse_errors(self, text, line, column):
        with pytest.raises(ParseError) as error:
            parse_witness(text, path="bad.txt")
        assert (error.value.line, error.value.column) == (line, column)
        assert error.value.path == "bad.txt"

    def test_witness_needs_a_matrix(self):
        with pytest.raises(ParseError):
            parse_witness("statement THEOREM_3_3\nparam r 1.0\n")

    def test_missing_file(self, tmp_path):
        with pytest.raises(ConfigError):
            load_witness(str(tmp_path / "missing.txt"))


class TestReportWriter:
    def test_witness_filename(self):
        assert witness_filename("THEOREM_4_6/n=4/ps=2.0,2.0/r=1.0", 3) == "THEOREM_4_6_n=4_ps=2.0,2.0_r=1.0__trial3.txt"

    def test_write_report(self, config, tmp_path):
        values = dict(config)
        values.update(statements="REVERSED_THEOREM_3_3", dims=[2], trials=2)
        report = run_suite(SuiteConfig.from_config(values))
        writer = ReportWriter(str(tmp_path / "out"))

        path = writer.write_report(report)
        with open(path) as f:
            data = json.load(f)
        assert set(data) == {"report", "content_sha256", "timing", "runtime"}
        assert data["runtime"]["workers"] == 1
        assert "workers" not in data["report"]["config"]
        digest = hashlib.sha256(canonical_json(data["report"]).encode("utf-8")).hexdigest()
        assert data["content_sha256"] == digest
        assert data["report"]["pass"] is False
        assert data["report"]["cells"][0]["failures"][0]["worst_slack"] == "-inf"

        with open(writer.write_margins(report), newline="") as f:
            rows = list(csv.reader(f))
        assert rows[0] == ["statement", "cell", "n", "trial", "k", "slack"]
        assert len(rows) == 1 + 2 * 1 + 2 * 2

        paths = writer.write_witnesses(report)
        assert len(paths) == 4
        assert os.path.basename(paths[0]) == "REVERSED_THEOREM_3_3_n=1_r=1.5__trial0.txt"
        replayed = statements.evaluate(load_witness(paths[0]))
        assert not replayed.passed

    def test_write_check(self, tmp_path):
        result = statements.evaluate(load_witness(GOLDEN))
        curves_path, margins_path = ReportWriter(str(tmp_path)).write_check(result)
        with open(curves_path, newline="") as f:
            curves = list(csv.reader(f))
        assert curves[0] == ["label", "k", "t", "logValue"]
        assert len(curves) == 1 + 2 * 3
        with open(margins_path, newline="") as f:
            margins = list(csv.reader(f))
        assert margins[0][-1] == "exploratory"
        assert len(margins) == 1 + len(result.margins)
