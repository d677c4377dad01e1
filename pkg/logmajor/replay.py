"""Single deterministic re-evaluation of a witness file."""
import logging

from logmajor import statements
from logmajor.exceptions import ConfigError, InvalidStatementParams, LogMajorError
from logmajor.inequalities.catalog import StatementId
from logmajor.inequalities.result import DEFAULT_TOLERANCE, CheckResult
from logmajor.mu.step import format_extended
from logmajor.storage.witness import load_witness

logger = logging.getLogger(__name__)


def replay(statement, witness_file, *, tolerance=DEFAULT_TOLERANCE, exploratory=False):
    """Evaluate ``statement`` on the inputs stored in ``witness_file``.

    Args:
        statement (StatementId or str): must match the witness
        witness_file (str): path of a witness file
        tolerance (float): verdict tolerance
        exploratory (bool): accept out-of-range parameters where allowed

    Returns:
        CheckResult: hypothesis and parameter violations are returned as
        failed results carrying the error text

    Raises:
        ParseError: on a malformed witness file
        ConfigError: on an unknown statement, or if the file cannot be read
            or names another statement
    """
    try:
        statement = StatementId.parse(str(getattr(statement, "value", statement)))
    except InvalidStatementParams as error:
        raise ConfigError(str(error))
    witness = load_witness(witness_file)
    if witness.statement is not statement:
        raise ConfigError(
            f"{witness_file} holds a {witness.statement.value} witness, not {statement.value}"
        )
    logger.debug(f"replaying {statement.value} on {witness_file} (n = {witness.dimension})")
    try:
        return statements.evaluate(witness, tolerance=tolerance, exploratory=exploratory)
    except LogMajorError as error:
        logger.warning(f"{statement.value} raised {type(error).__name__}: {error}")
        return CheckResult(
            statement,
            dict(witness.params),
            [],
            tolerance,
            witness=witness,
            error=f"{type(error).__name__}: {error}",
        )


def format_margins(result):
    """Human-readable margins per grid point, worst first within each label."""
    lines = [
        f"{result.statement.value}: {'PASS' if result.passed else 'FAIL'}, "
        f"worst slack {format_extended(result.worst_slack)} (tolerance {result.tolerance:g})"
    ]
    if result.error:
        lines.append(f"  error: {result.error}")
    for title, margins in (("margins", result.margins), ("exploratory", result.exploratory)):
        if not margins:
            continue
        lines.append(f"  {title}:")
        for margin in margins:
            marker = "" if margin.holds(result.tolerance) else "  <-- violated"
            lines.append(
                f"    {margin.label:<32} k={margin.k:<3d} t={margin.t:<8.4f} "
                f"lhs={format_extended(margin.lhs):>24} rhs={format_extended(margin.rhs):>24} "
                f"slack={format_extended(margin.slack)}{marker}"
            )
    lines += [f"  note: {note}" for note in result.notes]
    return "\n".join(lines)
