import csv
import hashlib
import json
import logging
import os
import re

from logmajor.mu.step import format_extended
from logmajor.storage.witness import WitnessWriter

logger = logging.getLogger(__name__)


def canonical_json(data):
    return json.dumps(data, sort_keys=True, indent=2)


def witness_filename(cell_key, trial):
    return re.sub(r"[^A-Za-z0-9_.=,-]+", "_", cell_key) + f"__trial{trial}.txt"


class ReportWriter(object):
    """
    Serializes a SuiteReport into the output directory: ``report.json``,
    ``margins.csv`` and one witness file per failure under ``witnesses/``.

    Args:
        filepath (str): output directory
        filename (str): name of the JSON report

    Attributes:
        filepath (str): output directory
        filename (str): name of the JSON report
        witnesses (WitnessWriter): writer of the failure witnesses
    """

    def __init__(self, filepath, filename="report.json"):
        self.filepath = filepath
        self.filename = filename
        self.witnesses = WitnessWriter(os.path.join(filepath, "witnesses"))

    def _makedirs(self):
        if not os.path.exists(self.filepath):
            os.makedirs(self.filepath)

    def write_report(self, report):
        """
        Writes ``report.json``. The ``report`` section is canonical JSON and
        its SHA-256 is stored next to it; wall-clock time and the runtime
        keys (workers, output directory) live outside the hashed content.
        """
        self._makedirs()
        content = report.to_dict()
        data = {
            "report": content,
            "content_sha256": hashlib.sha256(canonical_json(content).encode("utf-8")).hexdigest(),
            "timing": {"elapsed_seconds": report.elapsed},
            "runtime": report.config.runtime(),
        }
        path = os.path.join(self.filepath, self.filename)
        with open(path, "w") as f:
            f.write(canonical_json(data) + "\n")
        logger.debug(f"Report file {self.filename} saved at path: {self.filepath}")
        return path

    def write_margins(self, report):
        """Writes ``margins.csv``: worst slack per grid index k of every trial."""
        self._makedirs()
        path = os.path.join(self.filepath, "margins.csv")
        with open(path, "w", newline="") as f:
            writer = csv.writer(f)
            writer.writerow(["statement", "cell", "n", "trial", "k", "slack"])
            for summary in report.cells + report.exploratory:
                cell = summary.cell
                for trial, k, slack in summary.margin_rows:
                    writer.writerow([cell.statement.value, cell.key, cell.n, trial, k, format_extended(slack)])
        logger.debug(f"Margins file margins.csv saved at path: {self.filepath}")
        return path

    def write_witnesses(self, report):
        """Writes the witness of every failure; returns the file paths."""
        paths = []
        for summary in report.cells:
            for failure in summary.failures:
                if failure.witness is None:
                    logger.warning(f"{summary.cell.key}: failure without witness, nothing to write")
                    continue
                trial = failure.witness.seed.trial if failure.witness.seed else len(paths)
                paths.append(self.witnesses.write(witness_filename(summary.cell.key, trial), failure.witness))
        return paths

    def write_check(self, result):
        """Writes ``curves.csv`` and ``margins.csv`` of a single evaluation."""
        self._makedirs()
        curves_path = os.path.join(self.filepath, "curves.csv")
        with open(curves_path, "w", newline="") as f:
            writer = csv.writer(f)
            writer.writerow(["label", "k", "t", "logValue"])
            for label, curve in sorted(result.curves.items()):
                writer.writerows(curve.to_csv_rows(label))
        margins_path = os.path.join(self.filepath, "margins.csv")
        with open(margins_path, "w", newline="") as f:
            writer = csv.writer(f)
            writer.writerow(["label", "k", "t", "lhs", "rhs", "slack", "domain", "equality", "exploratory"])
            for exploratory, margins in ((False, result.margins), (True, result.exploratory)):
                for margin in margins:
                    record = margin.to_dict()
                    writer.writerow(
                        [record[key] for key in ("label", "k", "t", "lhs", "rhs", "slack", "domain", "equality")]
                        + [exploratory]
                    )
        logger.debug(f"Curves and margins of {result.statement.value} saved at path: {self.filepath}")
        return curves_path, margins_path
