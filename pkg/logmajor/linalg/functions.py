r"""Scalar functions on [0, inf) and the functional calculus f(x) of positives.

A ScalarFunction is a small immutable descriptor, so it can be written into
witness files and shipped to worker processes. Supported kinds:

=================  ==============  =====================================
kind               params          f(t) (before adding ``offset``)
=================  ==============  =====================================
power              alpha, scale    scale * t^alpha
log_shift          c               c * log(1 + t / c)
rational           c               c * t / (c + t)
piecewise_linear   t0 v0 t1 v1 ..  linear interpolation, concave required
table              t0 v0 t1 v1 ..  linear interpolation, any shape
=================  ==============  =====================================

Knot tables start at t0 = 0 and are extended beyond the last knot with the
last slope. The monotone and concave flags are measured once, on a
1000-point probe grid, when the descriptor is built.
"""
from dataclasses import dataclass, field

import numpy as np

from logmajor.exceptions import NotPositive, ScalarFunctionError
from logmajor.linalg.jacobi import hermitian_eigen
from logmajor.linalg.matrix import as_matrix, freeze

KINDS = ("power", "log_shift", "rational", "piecewise_linear", "table")
FAMILIES = (None, "increasing", "concave", "determinant")

PROBE_POINTS = 1000
PROBE_UPPER = 16.0
PROBE_TOLERANCE = 1e-12
NEGATIVE_CLAMP = 1e-10


@dataclass(frozen=True)
class ScalarFunction:
    """Descriptor of a continuous scalar function f: [0, inf) -> R.

    Args:
        kind (str): one of ``KINDS``
        params (tuple of float): kind-specific parameters
        offset (float): constant added to the value, e.g. 1 for t -> 1 + t
        family (str): hypothesis family checked at construction. "increasing"
            requires f nondecreasing and f(0) >= 0, "concave" requires f
            concave, nondecreasing and f(0) = 0, "determinant" requires f
            nondecreasing and f(0) = 1.

    Attributes:
        increasing (bool): probe result for monotonicity
        concave (bool): probe result for concavity

    Raises:
        ScalarFunctionError: on an unknown kind, malformed params or a family
            hypothesis that fails on the probe grid
    """

    kind: str
    params: tuple
    offset: float = 0.0
    family: str = None
    increasing: bool = field(init=False, compare=False)
    concave: bool = field(init=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "params", tuple(float(p) for p in self.params))
        object.__setattr__(self, "offset", float(self.offset))
        self._validate_params()

        grid = np.linspace(0.0, PROBE_UPPER, PROBE_POINTS)
        values = self(grid)
        scale = max(1.0, float(np.max(np.abs(values))))
        first = np.diff(values)
        second = np.diff(values, n=2)
        object.__setattr__(
            self, "increasing", bool(np.all(first >= -PROBE_TOLERANCE * scale))
        )
        object.__setattr__(
            self, "concave", bool(np.all(second <= PROBE_TOLERANCE * scale))
        )
        if self.kind == "piecewise_linear" and not self.concave:
            raise ScalarFunctionError(f"piecewise_linear knots {self.params} are not concave")
        self._check_family()

    def __call__(self, t):
        t = np.asarray(t, dtype=np.float64)
        if self.kind == "power":
            alpha, scale = self.params
            value = scale * np.power(np.clip(t, 0.0, None), alpha)
        elif self.kind == "log_shift":
            (c,) = self.params
            value = c * np.log1p(t / c)
        elif self.kind == "rational":
            (c,) = self.params
            value = c * t / (c + t)
        else:
            knots = np.asarray(self.params).reshape(-1, 2)
            xs, ys = knots[:, 0], knots[:, 1]
            slope = (ys[-1] - ys[-2]) / (xs[-1] - xs[-2])
            value = np.where(
                t <= xs[-1], np.interp(t, xs, ys), ys[-1] + slope * (t - xs[-1])
            )
        return value + self.offset

    def at_zero(self):
        return float(self(0.0))

    def record(self, name):
        """Witness-file line ``function <name> <kind> <offset> <params...>``."""
        params = " ".join(repr(p) for p in self.params)
        return f"function {name} {self.kind} {self.offset!r} {params}"

    def with_family(self, family):
        return ScalarFunction(self.kind, self.params, self.offset, family)

    def _validate_params(self):
        expected = {"power": 2, "log_shift": 1, "rational": 1}
        if self.kind not in KINDS:
            raise ScalarFunctionError(f"unknown function kind {self.kind!r}")
        if self.family not in FAMILIES:
            raise ScalarFunctionError(f"unknown function family {self.family!r}")
        if self.kind in expected and len(self.params) != expected[self.kind]:
            raise ScalarFunctionError(
                f"{self.kind} takes {expected[self.kind]} parameters, got {len(self.params)}"
            )
        if self.kind == "power" and self.params[0] <= 0:
            raise ScalarFunctionError(f"power exponent must be positive, got {self.params[0]}")
        if self.kind in ("log_shift", "rational") and self.params[0] <= 0:
            raise ScalarFunctionError(f"{self.kind} scale must be positive, got {self.params[0]}")
        if self.kind in ("piecewise_linear", "table"):
            if len(self.params) < 4 or len(self.params) % 2:
                raise ScalarFunctionError("knot tables need at least two (t, value) pairs")
            xs = np.asarray(self.params[0::2])
            if xs[0] != 0.0 or np.any(np.diff(xs) <= 0):
                raise ScalarFunctionError(
                    f"knots must start at 0 and strictly increase, got {tuple(xs)}"
                )
        if not all(np.isfinite(self.params + (self.offset,))):
            raise ScalarFunctionError("function parameters must be finite")

    def _check_family(self):
        if self.family is None:
            return
        zero = self.at_zero()
        if not self.increasing:
            raise ScalarFunctionError(f"{self} is not increasing on the probe grid")
        if self.family == "increasing" and zero < 0:
            raise ScalarFunctionError(f"{self} has f(0) = {zero} < 0")
        if self.family == "concave":
            if abs(zero) > PROBE_TOLERANCE:
                raise ScalarFunctionError(f"{self} has f(0) = {zero}, expected 0")
            if not self.concave:
                raise ScalarFunctionError(f"{self} is not concave on the probe grid")
        if self.family == "determinant" and abs(zero - 1.0) > PROBE_TOLERANCE:
            raise ScalarFunctionError(f"{self} has f(0) = {zero}, expected 1")


# FACTORIES
def power(alpha, scale=1.0, family=None):
    return ScalarFunction("power", (alpha, scale), family=family)


def log_shift(c=1.0, family=None):
    return ScalarFunction("log_shift", (c,), family=family)


def rational(c=1.0, family=None):
    return ScalarFunction("rational", (c,), family=family)


def piecewise_linear(knots, family=None):
    """Concave knot table; ``knots`` is a sequence of (t, value) pairs."""
    return ScalarFunction("piecewise_linear", tuple(np.ravel(knots)), family=family)


def table(knots, family=None):
    return ScalarFunction("table", tuple(np.ravel(knots)), family=family)


def shifted(f, offset, family=None):
    """t -> f(t) + offset."""
    return ScalarFunction(f.kind, f.params, f.offset + offset, family)


def affine_plus_one():
    """t -> 1 + t."""
    return shifted(power(1.0), 1.0, family="determinant")


def parse_function(tokens):
    """Inverse of ``ScalarFunction.record`` without the leading two tokens.

    Args:
        tokens (list of str): ``[kind, offset, param, ...]``

    Returns:
        ScalarFunction
    """
    if len(tokens) < 2:
        raise ScalarFunctionError("function record needs a kind and an offset")
    kind, offset, *params = tokens
    return ScalarFunction(kind, tuple(float(p) for p in params), float(offset))


# FUNCTIONAL CALCULUS
def apply_scalar_function(x, f):
    """f(x) = U diag(f(lambda_j)) U^* for a positive semidefinite x.

    Eigenvalues in [-1e-10 ||x||, 0) are clamped to 0 before f is applied.

    Args:
        x (array_like): positive semidefinite matrix
        f (ScalarFunction or callable): scalar function evaluable on [0, inf)

    Returns:
        ndarray: the Hermitian matrix f(x)

    Raises:
        NotPositive: if an eigenvalue is below -1e-10 ||x||
    """
    x = as_matrix(x)
    eigen = hermitian_eigen(x)
    eigenvalues = eigen.eigenvalues
    norm = float(np.max(np.abs(eigenvalues)))
    if eigenvalues[-1] < -NEGATIVE_CLAMP * norm:
        raise NotPositive(
            f"eigenvalue {eigenvalues[-1]:.3e} below -{NEGATIVE_CLAMP:g} * ||x|| = "
            f"{-NEGATIVE_CLAMP * norm:.3e}"
        )
    mapped = np.asarray(f(np.clip(eigenvalues, 0.0, None)), dtype=np.float64)
    unitary = eigen.unitary
    result = (unitary * mapped) @ np.conj(unitary.T)
    return freeze((result + np.conj(result.T)) / 2)


def positive_power(x, alpha):
    """x^alpha for positive x."""
    return apply_scalar_function(x, power(alpha))
