import os
from unittest.mock import patch

import pytest
from yacs.config import CfgNode as CN

from logmajor.harness import SuiteHarness
from logmajor.suite_config import SuiteConfig


@pytest.fixture
def config():
    """prepare config."""
    with open("tests/config/test_config.yaml") as f:
        cfg = CN.load_cfg(f)

    return cfg


def harness_config(config, out_dir, **overrides):
    values = dict(config)
    values.update(out_dir=str(out_dir), **overrides)
    return SuiteConfig.from_config(values)


class TestSuiteHarness:
    @patch("logmajor.harness.run_suite")
    def test_run_writes_the_report(self, mock_run_suite, config, tmp_path):
        suite = harness_config(config, tmp_path)
        harness = SuiteHarness(config=suite)
        with patch.object(harness.report_writer, "write_report") as mock_write_report, patch.object(
            harness.report_writer, "write_margins"
        ) as mock_write_margins, patch.object(harness.report_writer, "write_witnesses", return_value=[]):
            report = harness.run()
        mock_run_suite.assert_called_once_with(suite)
        mock_write_report.assert_called_once_with(report)
        mock_write_margins.assert_called_once_with(report)
        assert harness.writer is None

    @patch("logmajor.logger.SummaryWriter")
    def test_tensorboard(self, mock_summary_writer, config, tmp_path):
        suite = harness_config(config, tmp_path, tensorboard=True, statements="ORACLE_LAMBDA", trials=1)
        harness = SuiteHarness(config=suite)
        harness.run()
        harness.done()

        mock_summary_writer.assert_called_once_with(os.path.join(str(tmp_path), "tensorboard"), write_to_disk=True)
        writer = mock_summary_writer.return_value
        tags = {args[0] for args, _ in writer.add_scalar.call_args_list}
        assert "suite/pass_rate/ORACLE_LAMBDA" in tags
        writer.close.assert_called_once()

    def test_selftest(self, config, tmp_path):
        harness = SuiteHarness(config=harness_config(config, tmp_path))
        report = harness.selftest()
        assert report.passed
        assert (tmp_path / "report.json").exists()
