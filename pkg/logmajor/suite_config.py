"""Validated sweep configuration.

``SuiteConfig.from_config`` turns the EasyDict built by the CLI from
``config.yaml`` and the command-line flags into an immutable record. Every
problem is reported as ConfigError.
"""
import dataclasses
import os
from dataclasses import dataclass

from logmajor.exceptions import ConfigError, InvalidStatementParams
from logmajor.inequalities.catalog import PAPER_STATEMENTS, StatementId, validate_params
from logmajor.sampler import CONCAVE_FAMILIES

SEED_ENVIRONMENT = "LOGMAJOR_SEED"
# keys that change where and how a sweep runs, never what it reports
RUNTIME_KEYS = ("out_dir", "workers", "log_level", "tensorboard")
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")


@dataclass(frozen=True)
class SuiteConfig:
    statements: tuple = ()
    dims: tuple = (2, 3, 4, 8, 16)
    trials: int = 200
    master_seed: int = 0
    tolerance: float = 1e-8
    exploratory: bool = False
    out_dir: str = "logmajor_out"
    workers: int = 1
    log_level: str = "INFO"
    tensorboard: bool = False
    shrink: bool = True
    smoke_scalar_cell: bool = True
    rotfeld_rho: tuple = (0.5, 1.0, 2.0)
    rotfeld_p: tuple = (0.3, 1.0)
    concave_families: tuple = CONCAVE_FAMILIES
    axiom_alpha: tuple = (0.5, 2.0)
    power_r: tuple = (1.0, 1.25, 1.5, 1.75, 2.0)
    lemma_3_2_p: tuple = (0.3, 0.7, 1.0, 1.5, 2.0)
    contraction_r: tuple = (1.0, 1.5, 2.0, 3.0)
    holder_exponents: tuple = ((2.0, 2.0), (3.0, 3.0, 3.0), (2.0, 4.0, 4.0), (4.0, 4.0, 4.0, 4.0))
    holder_r: tuple = (1.0, 2.0)
    exploratory_power_r: tuple = (2.5, 3.0)
    selftest_dims: tuple = (1, 2, 3, 4)
    selftest_trials: int = 50

    @property
    def selected_statements(self):
        """The statement filter; an empty filter selects every paper statement."""
        return self.statements or PAPER_STATEMENTS

    def to_dict(self):
        """Keys that determine the report content; runtime keys are left out."""
        record = dataclasses.asdict(self)
        record["statements"] = [s.value for s in self.statements]
        for key in RUNTIME_KEYS:
            del record[key]
        return record

    def runtime(self):
        return {key: getattr(self, key) for key in RUNTIME_KEYS}

    @classmethod
    def from_config(cls, config):
        """Build and validate from a flat mapping of config keys.

        Args:
            config (dict): keys as in ``config.yaml``; missing keys take
                the defaults above

        Raises:
            ConfigError: on unknown keys, wrong types or out-of-range values
        """
        known = {f.name for f in dataclasses.fields(cls)}
        unknown = sorted(set(config) - known)
        if unknown:
            raise ConfigError(f"unknown config keys: {', '.join(unknown)}")

        values = {}
        try:
            for name in known & set(config):
                values[name] = _convert(name, config[name], getattr(cls, name))
        except (TypeError, ValueError) as error:
            raise ConfigError(f"config key {name!r}: {error}")
        if values.get("master_seed") is None:
            values["master_seed"] = _seed_from_environment()

        suite = cls(**values)
        suite.validate()
        return suite

    def validate(self):
        _require(self.trials >= 1, f"trials must be at least 1, got {self.trials}")
        _require(self.dims and all(n >= 1 for n in self.dims), f"dims must be positive, got {self.dims}")
        _require(self.tolerance > 0, f"tolerance must be positive, got {self.tolerance}")
        _require(self.workers >= 1, f"workers must be at least 1, got {self.workers}")
        _require(self.selftest_trials >= 1, f"selftest_trials must be at least 1, got {self.selftest_trials}")
        _require(all(n >= 1 for n in self.selftest_dims), f"selftest_dims must be positive, got {self.selftest_dims}")
        _require(self.log_level in LOG_LEVELS, f"log_level must be one of {LOG_LEVELS}, got {self.log_level!r}")
        unknown = sorted(set(self.concave_families) - set(CONCAVE_FAMILIES))
        _require(not unknown, f"unknown concave families {unknown}, choose from {CONCAVE_FAMILIES}")

        grids = [
            (StatementId.ROTFELD_1_1, {"rho": rho, "p": p})
            for rho in self.rotfeld_rho
            for p in self.rotfeld_p
        ]
        grids += [(StatementId.THEOREM_3_3, {"r": r}) for r in self.power_r]
        grids += [(StatementId.MU_AXIOMS_2, {"alpha": a}) for a in self.axiom_alpha]
        grids += [(StatementId.LEMMA_3_2, {"p": p}) for p in self.lemma_3_2_p]
        grids += [(StatementId.LEMMA_4_3, {"r": r}) for r in self.contraction_r]
        grids += [
            (StatementId.THEOREM_4_6, {"ps": ps, "r": r})
            for ps in self.holder_exponents
            for r in self.holder_r
        ]
        try:
            for statement, params in grids:
                validate_params(statement, params)
            for r in self.exploratory_power_r:
                validate_params(StatementId.THEOREM_3_3, {"r": r}, exploratory=True)
        except InvalidStatementParams as error:
            raise ConfigError(f"parameter grid: {error}")


def _require(condition, message):
    if not condition:
        raise ConfigError(message)


def _seed_from_environment():
    text = os.environ.get(SEED_ENVIRONMENT)
    if text is None:
        return 0
    try:
        return int(text)
    except ValueError:
        raise ConfigError(f"{SEED_ENVIRONMENT}={text!r} is not an integer")


def _convert(name, value, default):
    if name == "statements":
        if value is None:
            return ()
        if isinstance(value, str):
            value = [part for part in value.split(",") if part.strip()]
        try:
            return tuple(StatementId.parse(str(item)) for item in value)
        except InvalidStatementParams as error:
            raise ValueError(str(error))
    if name == "master_seed":
        return None if value is None else int(value)
    if name == "log_level":
        return str(value).upper()
    if name == "holder_exponents":
        return tuple(tuple(float(p) for p in ps) for ps in value)
    if name == "concave_families":
        return tuple(str(family) for family in value)
    if isinstance(default, tuple):
        kind = type(default[0]) if default else str
        if isinstance(value, (str, int, float)):
            value = [value]
        return tuple(kind(item) for item in value)
    if isinstance(default, bool):
        if isinstance(value, str):
            return value.strip().lower() in ("1", "true", "yes")
        return bool(value)
    return type(default)(value)
