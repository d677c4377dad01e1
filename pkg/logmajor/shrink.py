"""Greedy shrinking of failing witnesses.

The candidates of one round, in order: delete a row/column pair from every
matrix, drop all imaginary parts, round all entries to 3 decimals, halve one
matrix, replace one matrix by 0 or by the identity. The first candidate that
still fails and has a smaller size measure is accepted, and a new round
starts. The measure is the tuple

    (n, matrices other than 0 and 1, entries with an imaginary part,
     unrounded entries, sum of the largest entry moduli)

compared lexicographically. Halving stops once the largest entry modulus
would drop below 1e-3, so the loop terminates. The result is small,
not minimal.
"""
import dataclasses
import logging

import numpy as np

from logmajor import statements
from logmajor.exceptions import TRIAL_ERRORS
from logmajor.inequalities.catalog import StatementId
from logmajor.inequalities.result import DEFAULT_TOLERANCE
from logmajor.linalg.matrix import DTYPE, freeze, identity, zeros

logger = logging.getLogger(__name__)

DECIMALS = 3
HALVING_FLOOR = 1e-3


def _is_trivial(x):
    n = x.shape[0]
    return bool(np.all(x == 0) or np.all(x == identity(n)))


def _unrounded(x):
    return int(np.count_nonzero((np.round(x.real, DECIMALS) != x.real) | (np.round(x.imag, DECIMALS) != x.imag)))


def _magnitude(x):
    return float(np.max(np.abs(x)))


def size_measure(witness):
    matrices = list(witness.matrices.values())
    return (
        witness.dimension,
        sum(not _is_trivial(x) for x in matrices),
        sum(int(np.count_nonzero(x.imag)) for x in matrices),
        sum(_unrounded(x) for x in matrices),
        sum(_magnitude(x) for x in matrices),
    )


def _map_all(witness, transform):
    return witness.with_matrices({name: freeze(transform(x)) for name, x in witness.matrices.items()})


def _candidates(witness):
    n = witness.dimension
    if n > 1:
        for index in range(n):
            yield f"delete row/column {index}", _map_all(
                witness,
                lambda x, i=index: np.delete(np.delete(x, i, axis=0), i, axis=1),
            )
    yield "zero imaginary parts", _map_all(witness, lambda x: np.array(x.real, dtype=DTYPE))
    yield "round entries", _map_all(
        witness, lambda x: np.round(x.real, DECIMALS) + 1j * np.round(x.imag, DECIMALS)
    )
    for name, x in witness.matrices.items():
        if _is_trivial(x) or _magnitude(x) / 2 < HALVING_FLOOR:
            continue
        matrices = dict(witness.matrices)
        matrices[name] = freeze(x / 2)
        yield f"halve {name}", witness.with_matrices(matrices)
    for name, x in witness.matrices.items():
        if _is_trivial(x):
            continue
        for label, replacement in (("0", zeros(n)), ("1", identity(n))):
            matrices = dict(witness.matrices)
            matrices[name] = replacement
            yield f"replace {name} by {label}", witness.with_matrices(matrices)


def shrink(witness, statement=None, *, tolerance=DEFAULT_TOLERANCE, exploratory=False, evaluate=None):
    """Shrink a failing witness while it keeps failing.

    Args:
        witness (Witness): inputs on which the statement fails
        statement (StatementId): defaults to ``witness.statement``
        tolerance (float): verdict tolerance
        exploratory (bool): evaluate out-of-range parameters
        evaluate (callable): witness -> CheckResult, defaults to the
            statement registry; an evaluation error counts as not failing

    Returns:
        Witness: the smallest failing witness found, ``witness`` itself if no
        candidate applies
    """
    if statement is not None:
        witness = dataclasses.replace(witness, statement=StatementId(statement))
    if evaluate is None:
        def evaluate(candidate):
            return statements.evaluate(candidate, tolerance=tolerance, exploratory=exploratory)

    def fails(candidate):
        try:
            return not evaluate(candidate).passed
        except TRIAL_ERRORS as error:
            logger.debug(f"shrink candidate rejected: {error}")
            return False

    current, measure, steps = witness, size_measure(witness), []
    while True:
        for label, candidate in _candidates(current):
            candidate_measure = size_measure(candidate)
            if candidate_measure < measure and fails(candidate):
                current, measure = candidate, candidate_measure
                steps.append(label)
                break
        else:
            break

    logger.debug(f"shrink of {current.statement}: {len(steps)} steps, size {measure}")
    return current
