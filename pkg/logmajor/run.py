"""Sweeps of statements x dimensions x parameter points x trials."""
import dataclasses
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import repeat

import numpy as np

from logmajor import __version__, shrink, statements
from logmajor.exceptions import TRIAL_ERRORS
from logmajor.inequalities.result import CheckResult
from logmajor.mu.margins import worst_slack
from logmajor.mu.step import format_extended

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1


@dataclass
class CellSummary:
    """Outcome of all trials of one cell.

    Attributes:
        cell (Cell): the cell
        trials (int): number of trials run
        passed (int): number of passing trials
        worst_slack (float): minimum worst slack over the trials
        failures (list of CheckResult): failing trials, shrunk when enabled
        margin_rows (list of tuple): (trial, k, worst slack at k)
        exploratory_worst (float): minimum slack of the exploratory margins
    """

    cell: statements.Cell
    trials: int = 0
    passed: int = 0
    worst_slack: float = float("inf")
    failures: list = field(default_factory=list)
    margin_rows: list = field(default_factory=list)
    exploratory_worst: float = float("inf")

    @property
    def failed(self):
        return self.trials - self.passed

    def to_dict(self, exploratory=False):
        record = {
            "cell": self.cell.key,
            "statement": self.cell.statement.value,
            "n": self.cell.n,
            "params": {name: value for name, value in self.cell.params},
            "variant": self.cell.variant,
            "trials": self.trials,
            "pass": self.passed,
            "fail": self.failed,
            "worst_slack": format_extended(self.worst_slack),
            "failures": [failure.to_dict() for failure in self.failures],
        }
        if exploratory:
            record["exploratory_worst_slack"] = format_extended(self.exploratory_worst)
        return record


@dataclass
class SuiteReport:
    """Merged outcome of a sweep, cells in canonical order.

    Attributes:
        config (SuiteConfig): configuration of the sweep
        cells (list of CellSummary): cells that decide the verdict
        exploratory (list of CellSummary): out-of-range cells
        elapsed (float): wall-clock seconds, excluded from comparisons
    """

    config: object
    cells: list
    exploratory: list = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self):
        return all(summary.failed == 0 for summary in self.cells)

    @property
    def total_failures(self):
        return sum(summary.failed for summary in self.cells)

    def worst_by_statement(self):
        worst = {}
        for summary in self.cells:
            key = summary.cell.statement.value
            worst[key] = min(worst.get(key, float("inf")), summary.worst_slack)
        return worst

    def to_dict(self):
        """Report content without timing; identical for identical configs."""
        return {
            "schema_version": SCHEMA_VERSION,
            "versions": {"logmajor": __version__, "numpy": np.__version__},
            "config": self.config.to_dict(),
            "pass": self.passed,
            "worst_slack": {
                statement: format_extended(value)
                for statement, value in self.worst_by_statement().items()
            },
            "cells": [summary.to_dict(self.config.exploratory) for summary in self.cells],
            "exploratory": [summary.to_dict(True) for summary in self.exploratory],
        }


def build_cells(config, selected=None, dims=None):
    """Cells of a sweep in canonical order.

    Args:
        config (SuiteConfig): grids and filters
        selected (sequence of StatementId): overrides the statement filter
        dims (sequence of int): overrides ``config.dims``

    Returns:
        tuple: (regular cells, exploratory cells)
    """
    selected = selected or config.selected_statements
    if dims is None:
        # the n = 1 smoke cell
        dims = set(config.dims) | ({1} if config.smoke_scalar_cell else set())
    dims = sorted(set(dims))

    cells, exploratory = [], []
    for statement in selected:
        for n in dims:
            if not statements.supports_dimension(statement, n):
                continue
            for params, variant in statements.parameter_grid(statement, config):
                cells.append(statements.make_cell(statement, n, params, variant))
            if config.exploratory:
                for params, variant in statements.exploratory_grid(statement, config):
                    exploratory.append(statements.make_cell(statement, n, params, variant, exploratory=True))
    return sorted(cells, key=lambda c: c.sort_key()), sorted(exploratory, key=lambda c: c.sort_key())


def evaluate_trial(cell, trial, config):
    """Sample and evaluate one trial; exceptions become failed results."""
    witness = None
    try:
        witness = statements.sample_witness(cell, trial, config.master_seed)
        return statements.evaluate(witness, tolerance=config.tolerance, exploratory=cell.exploratory)
    except TRIAL_ERRORS as error:
        logger.warning(f"{cell.key} trial {trial} raised {type(error).__name__}: {error}")
        return CheckResult(
            cell.statement,
            dict(cell.params),
            [],
            config.tolerance,
            witness=witness,
            error=f"{type(error).__name__}: {error}",
        )


def run_cell(cell, config):
    """All trials of one cell; runs inside a worker process when workers > 1."""
    summary = CellSummary(cell)
    for trial in range(config.trials):
        result = evaluate_trial(cell, trial, config)
        summary.trials += 1
        summary.worst_slack = min(summary.worst_slack, result.worst_slack)
        summary.exploratory_worst = min(summary.exploratory_worst, worst_slack(result.exploratory))
        summary.margin_rows += [(trial, k, slack) for k, slack in result.margins_by_k()]
        if result.passed:
            summary.passed += 1
            continue
        if cell.exploratory:
            continue
        logger.warning(f"{cell.key} trial {trial} fails with worst slack {format_extended(result.worst_slack)}")
        if config.shrink and result.error is None:
            result = _shrunk(result, config)
        summary.failures.append(result)
    return summary


def _shrunk(result, config):
    witness = shrink.shrink(result.witness, tolerance=config.tolerance)
    shrunk = statements.evaluate(witness, tolerance=config.tolerance)
    shrunk.notes.append(
        f"shrunk from n = {result.witness.dimension} with worst slack {format_extended(result.worst_slack)}"
    )
    logger.warning(
        f"{result.statement.value} failure shrunk to n = {witness.dimension}, "
        f"worst slack {format_extended(shrunk.worst_slack)}"
    )
    return shrunk


def _run_cells(cells, config):
    if config.workers > 1 and len(cells) > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            return list(pool.map(run_cell, cells, repeat(config)))
    return [run_cell(cell, config) for cell in cells]


def run_suite(config, *, selected=None, dims=None, trials=None):
    """Execute every selected cell and merge the results.

    Args:
        config (SuiteConfig): the sweep
        selected (sequence of StatementId): statement override (selftest)
        dims (sequence of int): dimension override (selftest)
        trials (int): trial count override (selftest)

    Returns:
        SuiteReport
    """
    if trials is not None:
        config = dataclasses.replace(config, trials=trials)
    cells, exploratory = build_cells(config, selected, dims)
    logger.info(f"running {len(cells)} cells x {config.trials} trials with {config.workers} worker(s)")
    start = time.time()

    summaries = _run_cells(cells, config)
    for summary in summaries:
        logger.info(
            f"{summary.cell.key}: {summary.passed}/{summary.trials} pass, "
            f"worst slack {format_extended(summary.worst_slack)}"
        )
    explored = _run_cells(exploratory, config)

    report = SuiteReport(config, summaries, explored, elapsed=time.time() - start)
    logger.info(
        f"suite {'passed' if report.passed else 'FAILED'}: {report.total_failures} failing trials "
        f"in {len(cells)} cells"
    )
    return report
