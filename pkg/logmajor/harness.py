import logging
import os

from logmajor.logger import Logger
from logmajor.replay import format_margins, replay
from logmajor.run import run_suite
from logmajor.selftest import selftest
from logmajor.storage.report import ReportWriter


class SuiteHarness:
    """
    Runs the falsification sweeps and writes their artifacts.
    This class contains the methods to run the suite, replay a witness and
    run the smoke gate.

    Attributes:
        config (SuiteConfig): validated sweep configuration
        writer (Logger): tensorboard writer, None unless ``config.tensorboard``
        report_writer (ReportWriter): writer of report.json, margins.csv and
            the failure witnesses
        logger (logging.Logger): module logger
    """

    def __init__(self, *, config):

        self.config = config

        # logging config
        logging.basicConfig(
            level=getattr(logging, config.log_level),
            format=(
                "%(levelname)s | %(asctime)s | %(name)s | %(threadName)s | "
                "%(message)s"
            ),
            datefmt="%Y-%m-%d %H:%M:%S",
        )
        self.logger = logging.getLogger(__name__)

        self.writer = None
        if config.tensorboard:
            self.writer = Logger(
                log_dir=os.path.join(config.out_dir, "tensorboard"),
                config=config,
            )
        self.report_writer = ReportWriter(config.out_dir)

    def run(self):
        """
        Run the configured sweep and write its artifacts

        Returns:
            SuiteReport: the merged report
        """
        self.logger.info(f"Start suite with master seed {self.config.master_seed}")
        report = run_suite(self.config)
        self._write(report)
        return report

    def selftest(self):
        """
        Run the oracle and identity smoke gate and write its artifacts

        Returns:
            SuiteReport: the merged report
        """
        self.logger.info("Start selftest")
        report = selftest(self.config)
        self._write(report)
        return report

    def replay(self, statement, witness_file, out_dir=None):
        """
        Re-evaluate a witness file, print its margins and, when ``out_dir`` is
        given, write curves.csv and margins.csv there

        Returns:
            CheckResult: the evaluation
        """
        result = replay(
            statement,
            witness_file,
            tolerance=self.config.tolerance,
            exploratory=self.config.exploratory,
        )
        print(format_margins(result))
        if out_dir:
            ReportWriter(out_dir).write_check(result)
        return result

    def _write(self, report):
        self.report_writer.write_report(report)
        self.report_writer.write_margins(report)
        paths = self.report_writer.write_witnesses(report)
        if paths:
            self.logger.warning(f"{len(paths)} failure witnesses written to {self.report_writer.witnesses.dirpath}")
        if self.writer is not None:
            self.writer.log_report(report=report)
        self.logger.info(f"Report written to {self.config.out_dir}")

    def done(self):
        if self.writer is not None:
            self.writer.done()
