r"""Step functions and log-integral curves on the grid k/n of [0, 1].

A StepFunction with values v_1 >= ... >= v_n takes v_k on the k-th cell
[(k-1)/n, k/n) (RIGHT flavor) or ((k-1)/n, k/n] (LEFT flavor). The two
flavors differ only at grid points.

A LogCurve holds L_0 = 0, L_1, ..., L_n with L_k the integral over
[0, k/n] of the logarithm of a step function, so L_k - L_{k-1} = log(v_k) / n.
Between grid points the curve is affine, and two curves on the same grid are
pointwise ordered iff they are ordered at every k. Increments may be -inf.
"""
import enum

import numpy as np

from logmajor.exceptions import DimensionMismatch, DomainError

LOG_FLOOR = 1e-300
ORDER_TOLERANCE = 1e-12


class Flavor(enum.Enum):
    RIGHT = "right"
    LEFT = "left"

    def flipped(self):
        return Flavor.LEFT if self is Flavor.RIGHT else Flavor.RIGHT


def safe_log(values):
    """log with values below 1e-300 mapped to -inf."""
    values = np.asarray(values, dtype=np.float64)
    result = np.full(values.shape, -np.inf)
    positive = values >= LOG_FLOOR
    result[positive] = np.log(values[positive])
    return result


class StepFunction:
    """Nonincreasing step function on the uniform grid of [0, 1].

    Args:
        values (array_like): cell values v_1, ..., v_n, nonincreasing
        flavor (Flavor): which endpoint of each cell carries its value

    Raises:
        DomainError: if the values are not nonincreasing
    """

    def __init__(self, values, flavor=Flavor.RIGHT):
        values = np.array(values, dtype=np.float64).reshape(-1)
        if values.size < 1:
            raise DomainError("a step function needs at least one cell")
        rises = np.diff(values)
        scale = max(1.0, float(np.max(np.abs(values))))
        if np.any(rises > ORDER_TOLERANCE * scale):
            raise DomainError(f"step values must be nonincreasing, got {values}")
        values.flags.writeable = False
        self.values = values
        self.flavor = flavor

    @property
    def n(self):
        return self.values.size

    def __len__(self):
        return self.values.size

    def __repr__(self):
        return f"StepFunction({self.values.tolist()}, {self.flavor.name})"

    def evaluate(self, t):
        """Value at t in [0, 1); 0 for t >= 1 (and t > 1 for LEFT)."""
        n = self.n
        if self.flavor is Flavor.RIGHT:
            if t >= 1.0:
                return 0.0
            return float(self.values[int(np.floor(t * n))])
        if t > 1.0:
            return 0.0
        if t <= 0.0:
            return float(self.values[0])
        return float(self.values[int(np.ceil(t * n)) - 1])

    def complement_reflected(self):
        """s -> 1 - v(1 - s).

        The cell k of the result is cell n + 1 - k of ``self`` and the
        continuity flips, since s in [(k-1)/n, k/n) maps 1 - s into
        ((n-k)/n, (n-k+1)/n]. The values stay nonincreasing.
        """
        return StepFunction(1.0 - self.values[::-1], self.flavor.flipped())

    def map(self, function):
        """Cellwise f(v_k); f must be nondecreasing to keep the order."""
        return StepFunction(np.asarray(function(self.values), dtype=np.float64), self.flavor)

    def scaled(self, factor):
        return StepFunction(self.values * factor, self.flavor)

    def log_curve(self):
        """L_k = (1/n) sum_{j <= k} log v_j."""
        return LambdaCurve(safe_log(self.values) / self.n)


class LogCurve:
    """Piecewise-affine curve through (k/n, L_k), L_0 = 0, -inf allowed.

    The curve is stored by its cell increments d_k = L_k - L_{k-1}, so a
    -inf cell at the start does not hide the cells after it.

    Args:
        increments (array_like): d_1, ..., d_n, each finite or -inf
    """

    def __init__(self, increments):
        increments = np.array(increments, dtype=np.float64).reshape(-1)
        if increments.size < 1:
            raise DomainError("a curve needs at least one cell")
        if np.any(np.isnan(increments)) or np.any(np.isposinf(increments)):
            raise DomainError(f"curve increments must be finite or -inf: {increments}")
        increments.flags.writeable = False
        self.increments = increments

    @property
    def n(self):
        return self.increments.size

    @property
    def log_values(self):
        """L_0 = 0, L_1, ..., L_n."""
        return np.concatenate([[0.0], np.cumsum(self.increments)])

    def __repr__(self):
        return f"{type(self).__name__}({self.log_values.tolist()})"

    def __add__(self, other):
        _same_grid(self, other)
        return LogCurve(_extended_sum(self.increments, other.increments))

    def scale(self, factor):
        """factor * L_k for factor > 0."""
        if factor <= 0:
            raise DomainError(f"curve scale factor must be positive, got {factor}")
        return LogCurve(self.increments * factor)

    def exp(self):
        """The curve exp(L_k), e.g. Lambda at t = k/n."""
        return np.exp(self.log_values)

    def at_end(self):
        return float(np.sum(self.increments))

    def reversed_tail(self):
        """k -> integral over [1 - k/n, 1], indexed by k on the same grid."""
        return LogCurve(self.increments[::-1])

    def to_csv_rows(self, label):
        """Rows (label, k, t, logValue) with -inf written as ``-inf``."""
        n = self.n
        return [
            (label, k, repr(k / n), format_extended(value))
            for k, value in enumerate(self.log_values)
        ]


class LambdaCurve(LogCurve):
    """Log-integral of a nonincreasing nonnegative step function.

    Its increments are nonincreasing, and after the first -inf increment
    all later ones are -inf.
    """

    def __init__(self, increments):
        super().__init__(increments)
        increments = self.increments
        infinite = np.isneginf(increments)
        if np.any(infinite) and not np.all(infinite[np.argmax(infinite):]):
            raise DomainError(f"-inf increments must form a tail: {increments}")
        finite = increments[~infinite]
        scale = max(1.0, float(np.max(np.abs(finite)))) if finite.size else 1.0
        if np.any(np.diff(finite) > ORDER_TOLERANCE * scale):
            raise DomainError(f"curve increments must be nonincreasing: {increments}")


def _same_grid(a, b):
    if a.n != b.n:
        raise DimensionMismatch(f"curves live on grids of size {a.n} and {b.n}")


def _extended_sum(a, b):
    # increments are never +inf, so -inf absorbs
    return np.asarray(a) + np.asarray(b)


def format_extended(value):
    if np.isneginf(value):
        return "-inf"
    if np.isposinf(value):
        return "inf"
    return repr(float(value))
