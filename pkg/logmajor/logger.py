from tensorboardX import SummaryWriter


class Logger:
    def __init__(self, *, log_dir, config):
        self.writer = SummaryWriter(log_dir, write_to_disk=True)
        self.config = config

    def log_cell(
        self,
        *,
        statement,
        worst_slack,
        pass_rate,
        n,
    ):
        """
        Write the worst slack and the pass rate of one cell in the writer
        object, indexed by the dimension n, to show them on tensorboard.
        Infinite slacks are not written.

        Args:
            statement (str): statement id
            worst_slack (float): minimum worst slack over the cell's trials
            pass_rate (float): fraction of passing trials
            n (int): matrix dimension of the cell
        """
        if abs(worst_slack) != float("inf"):
            self.writer.add_scalar(f"suite/worst_slack/{statement}", worst_slack, n)
        self.writer.add_scalar(f"suite/pass_rate/{statement}", pass_rate, n)

    def log_report(self, *, report):
        """
        Write the regular cells of a suite report, pooled over the parameter
        points of each (statement, n).

        Args:
            report (SuiteReport): merged sweep outcome
        """
        pooled = {}
        for summary in report.cells:
            key = (summary.cell.statement.value, summary.cell.n)
            worst, passed, trials = pooled.get(key, (float("inf"), 0, 0))
            pooled[key] = (
                min(worst, summary.worst_slack),
                passed + summary.passed,
                trials + summary.trials,
            )
        for (statement, n), (worst, passed, trials) in sorted(pooled.items()):
            self.log_cell(
                statement=statement,
                worst_slack=worst,
                pass_rate=passed / max(trials, 1),
                n=n,
            )

    def done(self):
        """
        Close the writer after the sweep
        """
        self.writer.close()
