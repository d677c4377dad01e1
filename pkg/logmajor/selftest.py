"""The oracle and identity smoke gate at small dimensions."""
from logmajor.inequalities.catalog import ORACLE_STATEMENTS, StatementId
from logmajor.run import run_suite

SELFTEST_STATEMENTS = ORACLE_STATEMENTS + (StatementId.LEMMA_4_1,)


def selftest(config):
    """Run the oracle statements and the reflection identities.

    Uses ``selftest_dims`` and ``selftest_trials`` of ``config``; the
    statement filter and ``dims`` are ignored.

    Returns:
        SuiteReport
    """
    return run_suite(
        config,
        selected=SELFTEST_STATEMENTS,
        dims=config.selftest_dims,
        trials=config.selftest_trials,
    )
