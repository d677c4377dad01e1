"""Witness inputs and verdict records of statement evaluations."""
import dataclasses
from dataclasses import dataclass, field

import numpy as np

from logmajor.inequalities.catalog import StatementId
from logmajor.linalg.matrix import format_matrix
from logmajor.mu.margins import worst_slack
from logmajor.mu.step import format_extended
from logmajor.sampler import SamplerSeed

DEFAULT_TOLERANCE = 1e-8


@dataclass
class Witness:
    """The inputs of one statement evaluation.

    Attributes:
        statement (StatementId): statement the inputs belong to
        matrices (dict): name -> ComplexMatrix, in input order
        params (dict): name -> float or tuple of floats
        functions (dict): name -> ScalarFunction
        seed (SamplerSeed): sampling triple, None for hand-written witnesses
    """

    statement: StatementId
    matrices: dict
    params: dict = field(default_factory=dict)
    functions: dict = field(default_factory=dict)
    seed: SamplerSeed = None

    @property
    def dimension(self):
        return next(iter(self.matrices.values())).shape[0]

    def with_matrices(self, matrices):
        return dataclasses.replace(self, matrices=dict(matrices))

    def matrix_list(self, prefix="x"):
        """x1, x2, ... in index order."""
        names = sorted(
            (name for name in self.matrices if name[len(prefix):].isdigit() and name.startswith(prefix)),
            key=lambda name: int(name[len(prefix):]),
        )
        return [self.matrices[name] for name in names]

    def to_dict(self):
        return {
            "statement": StatementId(self.statement).value,
            "params": {name: _jsonable(value) for name, value in self.params.items()},
            "functions": {name: f.record(name) for name, f in self.functions.items()},
            "matrices": {name: format_matrix(m) for name, m in self.matrices.items()},
            "seed": list(self.seed) if self.seed else None,
        }


@dataclass
class CheckResult:
    """Verdict of one statement evaluation.

    Attributes:
        statement (StatementId): evaluated statement
        params (dict): parameters used
        margins (list of CheckMargin): margins that decide the verdict
        tolerance (float): a margin holds when slack >= -tolerance
        witness (Witness): inputs, filled in by the statement registry
        curves (dict): label -> LogCurve of the compared sides
        exploratory (list of CheckMargin): reported margins that never
            affect the verdict
        notes (list of str): remarks such as hypothesis discrepancies
        error (str): exception text when the evaluation raised
    """

    statement: StatementId
    params: dict
    margins: list
    tolerance: float = DEFAULT_TOLERANCE
    witness: Witness = None
    curves: dict = field(default_factory=dict)
    exploratory: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    error: str = None

    @property
    def worst_slack(self):
        if self.error is not None:
            return float("-inf")
        return worst_slack(self.margins)

    @property
    def passed(self):
        return self.error is None and self.worst_slack >= -self.tolerance

    def margins_by_k(self):
        """Worst effective slack at each grid index k over all labels."""
        worst = {}
        for margin in self.margins:
            worst[margin.k] = min(worst.get(margin.k, float("inf")), margin.slack)
        return sorted(worst.items())

    def to_dict(self):
        return {
            "statement": StatementId(self.statement).value,
            "params": {name: _jsonable(value) for name, value in self.params.items()},
            "pass": self.passed,
            "worst_slack": format_extended(self.worst_slack),
            "tolerance": self.tolerance,
            "margins": [margin.to_dict() for margin in self.margins],
            "exploratory": [margin.to_dict() for margin in self.exploratory],
            "notes": list(self.notes),
            "error": self.error,
            "witness": self.witness.to_dict() if self.witness else None,
        }


def _jsonable(value):
    if isinstance(value, (tuple, list, np.ndarray)):
        return [float(v) for v in np.ravel(value)]
    return float(value)
