import math
import os

import pytest

from logmajor.exceptions import ConfigError, ParseError
from logmajor.inequalities.catalog import StatementId
from logmajor.replay import format_margins, replay

GOLDEN = os.path.join("tests", "fixtures", "golden_witness.txt")
NEGATIVE = os.path.join("tests", "fixtures", "negative_control_witness.txt")

NOT_A_CONTRACTION = """statement LEMMA_4_3
param r 1.0
matrix x
1
2.0 0.0
matrix y
1
0.5 0.0
"""


class TestReplay:
    def test_golden_witness_passes(self):
        result = replay("THEOREM_3_3", GOLDEN)
        assert result.passed
        assert result.worst_slack == pytest.approx(math.log(2.0) / 2, abs=1e-12)
        assert format_margins(result).startswith("THEOREM_3_3: PASS")

    def test_negative_control_fails(self):
        result = replay(StatementId.REVERSED_THEOREM_3_3, NEGATIVE)
        assert not result.passed
        assert result.worst_slack == pytest.approx(-math.log(2.0), abs=1e-12)
        assert "<-- violated" in format_margins(result)

    def test_replay_is_deterministic(self):
        first = replay("THEOREM_3_3", GOLDEN)
        second = replay("THEOREM_3_3", GOLDEN)
        assert first.to_dict() == second.to_dict()

    def test_statement_mismatch(self):
        with pytest.raises(ConfigError):
            replay("LEMMA_4_3", GOLDEN)

    def test_unknown_statement(self):
        with pytest.raises(ConfigError):
            replay("THEOREM_9_9", GOLDEN)

    def test_malformed_file(self, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("statement THEOREM_3_3\nmatrix x\ntwo\n")
        with pytest.raises(ParseError) as error:
            replay("THEOREM_3_3", str(path))
        assert error.value.line == 3

    def test_hypothesis_violation_is_a_failed_result(self, tmp_path):
        path = tmp_path / "witness.txt"
        path.write_text(NOT_A_CONTRACTION)
        result = replay("LEMMA_4_3", str(path))
        assert not result.passed
        assert result.error.startswith("NotContraction")
        assert "error: NotContraction" in format_margins(result)
