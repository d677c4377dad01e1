"""Signed margins between the two sides of an inequality on the grid.

Every margin is oriented so that ``slack >= 0`` means the inequality holds
at that point: slack = rhs - lhs for a claim lhs <= rhs. Values live in the
extended reals; -inf on both sides compares equal (slack 0). An equality
margin holds only when |slack| is small, so its effective slack is -|slack|.
"""
from dataclasses import dataclass

import numpy as np

from logmajor.exceptions import DimensionMismatch
from logmajor.mu.step import format_extended

LOG = "log"
VALUE = "value"


def extended_difference(rhs, lhs):
    """rhs - lhs with (-inf) - (-inf) = 0 and (+inf) - (+inf) = 0."""
    if rhs == lhs and np.isinf(rhs):
        return 0.0
    return float(rhs) - float(lhs)


@dataclass(frozen=True)
class CheckMargin:
    """One comparison lhs <= rhs (or lhs == rhs) at grid point t = k/n.

    Args:
        label (str): which display or sub-check the margin belongs to
        k (int): grid index, 0 <= k <= n
        t (float): grid point k/n
        lhs (float): the side claimed smaller
        rhs (float): the side claimed larger
        domain (str): "log" for log-domain sides, "value" for raw values
        equality (bool): the claim is lhs == rhs
    """

    label: str
    k: int
    t: float
    lhs: float
    rhs: float
    domain: str = LOG
    equality: bool = False

    @property
    def slack(self):
        slack = extended_difference(self.rhs, self.lhs)
        if self.equality:
            return -abs(slack)
        return slack

    def holds(self, tolerance):
        return self.slack >= -tolerance

    def to_dict(self):
        return {
            "label": self.label,
            "k": self.k,
            "t": self.t,
            "lhs": format_extended(self.lhs),
            "rhs": format_extended(self.rhs),
            "slack": format_extended(self.slack),
            "domain": self.domain,
            "equality": self.equality,
        }


def worst_slack(margins):
    """Minimum effective slack, +inf for an empty list."""
    return min((margin.slack for margin in margins), default=float("inf"))


def curve_margins(label, lhs, rhs, *, equality=False):
    """Log-domain margins at k = 1..n between two curves on the same grid."""
    n = lhs.n
    if rhs.n != n:
        raise DimensionMismatch(f"curves live on grids of size {n} and {rhs.n}")
    lhs_values, rhs_values = lhs.log_values, rhs.log_values
    return [
        CheckMargin(label, k, k / n, float(lhs_values[k]), float(rhs_values[k]), LOG, equality)
        for k in range(1, n + 1)
    ]


def value_margins(label, lhs, rhs, *, equality=False):
    """Value-domain margins cell by cell between two step-value arrays."""
    lhs, rhs = np.asarray(lhs, dtype=np.float64), np.asarray(rhs, dtype=np.float64)
    n = lhs.size
    return [
        CheckMargin(label, k, k / n, float(lhs[k - 1]), float(rhs[k - 1]), VALUE, equality)
        for k in range(1, n + 1)
    ]


def scalar_margin(label, lhs, rhs, *, k, n, domain=LOG, equality=False):
    """A single margin, e.g. a determinant inequality at t = 1."""
    return CheckMargin(label, k, k / n, float(lhs), float(rhs), domain, equality)
