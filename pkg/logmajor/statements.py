"""Statement registry: how each statement draws its inputs and evaluates them.

A sweep is organised in cells, one per (statement, n, parameter point).
Within a cell, trial k draws its witness from the seed
(master, k, cell key), so any trial can be regenerated in isolation.
"""
from dataclasses import dataclass

import numpy as np

from logmajor import sampler
from logmajor.inequalities import axioms, consistency, contractions, determinants, holder, positive, power
from logmajor.inequalities.catalog import MAX_COFACTOR_DIMENSION, StatementId, statement_order
from logmajor.inequalities.result import DEFAULT_TOLERANCE, Witness
from logmajor.linalg.decompositions import direct_sum
from logmajor.linalg.matrix import DTYPE, adjoint, diag, freeze

S = StatementId


@dataclass(frozen=True)
class Cell:
    """One (statement, dimension, parameter point) of a sweep.

    Attributes:
        statement (StatementId): statement evaluated in the cell
        n (int): matrix dimension
        params (tuple): sorted (name, value) pairs; values are floats or
            tuples of floats
        variant (str): sampling variant, e.g. the concave family
        exploratory (bool): out-of-range cell that never affects the verdict
    """

    statement: StatementId
    n: int
    params: tuple = ()
    variant: str = ""
    exploratory: bool = False

    @property
    def key(self):
        parts = [StatementId(self.statement).value, f"n={self.n}"]
        parts += [f"{name}={_format_value(value)}" for name, value in self.params]
        if self.variant:
            parts.append(self.variant)
        return "/".join(parts)

    def sort_key(self):
        return (
            self.exploratory,
            statement_order(self.statement),
            self.n,
            tuple((name, _format_value(value)) for name, value in self.params),
            self.variant,
        )

    def seed(self, master, trial):
        return sampler.SamplerSeed(master, trial, self.key)


def _format_value(value):
    if isinstance(value, tuple):
        return ",".join(repr(float(v)) for v in value)
    return repr(float(value))


def _frozen_value(value):
    if isinstance(value, (list, tuple, np.ndarray)):
        return tuple(float(v) for v in value)
    return float(value)


def make_cell(statement, n, params=None, variant="", exploratory=False):
    params = tuple(sorted((name, _frozen_value(value)) for name, value in (params or {}).items()))
    return Cell(StatementId(statement), int(n), params, variant, exploratory)


# PARAMETER GRIDS
def parameter_grid(statement, config):
    """Parameter points of ``statement`` from the suite configuration.

    Args:
        statement (StatementId): the statement
        config (SuiteConfig): supplies the grids

    Returns:
        list of (dict, str): parameter record and sampling variant per cell
    """
    statement = StatementId(statement)
    if statement is S.ROTFELD_1_1:
        return [({"rho": rho, "p": p}, "") for rho in config.rotfeld_rho for p in config.rotfeld_p]
    if statement is S.GARG_AUJLA_1_2:
        return [({}, family) for family in config.concave_families]
    if statement in (S.POWER_1_3, S.THEOREM_3_3, S.REVERSED_THEOREM_3_3):
        return [({"r": r}, "") for r in config.power_r]
    if statement is S.MU_AXIOMS_2:
        return [({"alpha": alpha}, "") for alpha in config.axiom_alpha]
    if statement is S.LEMMA_3_2:
        return [({"p": p}, "") for p in config.lemma_3_2_p]
    if statement in (S.LEMMA_4_3, S.LEMMA_4_5):
        return [({"r": r}, "") for r in config.contraction_r]
    if statement is S.COROLLARY_4_7:
        return [({"ps": ps}, "") for ps in config.holder_exponents]
    if statement in (S.HOLDER_1_4, S.THEOREM_4_6, S.REMARK_4_8):
        return [({"ps": ps, "r": r}, "") for ps in config.holder_exponents for r in config.holder_r]
    return [({}, "")]


def exploratory_grid(statement, config):
    """Out-of-range parameter points, evaluated only with ``exploratory``."""
    if StatementId(statement) is S.THEOREM_3_3:
        return [({"r": r}, "") for r in config.exploratory_power_r]
    return []


def supports_dimension(statement, n):
    if StatementId(statement) is S.ORACLE_DETERMINANT:
        return n <= MAX_COFACTOR_DIMENSION
    return n >= 1


# SAMPLING
def _pair(n, seed, draw=sampler.sample_ginibre):
    return {"x": draw(n, seed.child("x")), "y": draw(n, seed.child("y"))}


def _strict_contraction(n, seed):
    return sampler.sample_contraction(n, seed, strict=True)


def _boundary_contraction(n, seed):
    """A contraction with singular value 1 of multiplicity about n/2."""
    if n == 1:
        return sampler.sample_haar_unitary(1, seed.child("unitary"))
    k = (n + 1) // 2
    return direct_sum(
        sampler.sample_haar_unitary(k, seed.child("unitary")),
        sampler.sample_contraction(n - k, seed.child("contraction")),
    )


def _holder_factors(cell, seed, palindromic=False):
    m = len(dict(cell.params)["ps"])
    n = cell.n
    if not palindromic:
        return {f"x{i}": _strict_contraction(n, seed.child(f"x{i}")) for i in range(1, m + 1)}
    # x_{m+1-i} = x_i^* around a self-adjoint middle factor
    half = [_strict_contraction(n, seed.child(f"x{i}")) for i in range(1, m // 2 + 1)]
    middle = [sampler.sample_selfadjoint_contraction(n, seed.child("middle"))] if m % 2 else []
    factors = half + middle + [freeze(adjoint(x)) for x in reversed(half)]
    return {f"x{i}": x for i, x in enumerate(factors, start=1)}


def _planted_singular(x, column):
    planted = np.array(x, dtype=DTYPE)
    planted[:, column] = 0.0
    return freeze(planted)


def sample_witness(cell, trial, master):
    """Draw the inputs of trial ``trial`` of ``cell``.

    Returns:
        Witness: matrices, params and functions, with the seed triple that
        reproduces them
    """
    seed = cell.seed(master, trial)
    statement, n = StatementId(cell.statement), cell.n
    functions = {}

    if statement in (S.ROTFELD_1_1, S.POWER_1_3, S.THEOREM_3_3, S.REVERSED_THEOREM_3_3):
        matrices = _pair(n, seed)
    elif statement is S.GARG_AUJLA_1_2:
        matrices = _pair(n, seed)
        functions["f"] = sampler.sample_concave(seed.child("f"), families=(cell.variant,))
    elif statement is S.MU_AXIOMS_2:
        matrices = {name: sampler.sample_ginibre(n, seed.child(name)) for name in ("x", "y", "u", "v")}
        functions["f"] = sampler.sample_concave(seed.child("f")).with_family("increasing")
    elif statement is S.LEMMA_3_1:
        matrices = {
            "a": sampler.sample_positive(n, seed.child("a")),
            "b": sampler.sample_positive(n, seed.child("b")),
            "w": _strict_contraction(n, seed.child("w")),
        }
    elif statement is S.LEMMA_3_2:
        matrices = _pair(n, seed, sampler.sample_positive)
    elif statement is S.LEMMA_4_1:
        boundary = trial % 4 == 3
        draw = _boundary_contraction if boundary else _strict_contraction
        matrices = {"x": draw(n, seed.child("x"))}
    elif statement is S.LEMMA_4_2:
        matrices = {"x": sampler.sample_selfadjoint_contraction(n, seed.child("x"))}
    elif statement in (S.LEMMA_4_3, S.LEMMA_4_5):
        matrices = _pair(n, seed, _strict_contraction)
    elif statement is S.COROLLARY_4_7:
        matrices = _holder_factors(cell, seed, palindromic=trial % 2 == 1)
    elif statement in (S.HOLDER_1_4, S.THEOREM_4_6, S.REMARK_4_8):
        matrices = _holder_factors(cell, seed)
    elif statement is S.ORACLE_DETERMINANT:
        x = sampler.sample_ginibre(n, seed.child("x"))
        matrices = {"x": _planted_singular(x, trial % n) if trial % 2 == 1 else x}
    elif statement is S.ORACLE_REARRANGEMENT:
        samples = sampler.complex_normals(n, seed.child("samples")).real
        matrices = {"x": diag(samples)}
    else:
        matrices = {"x": sampler.sample_ginibre(n, seed.child("x"))}

    return Witness(statement, matrices, dict(cell.params), functions, seed)


# EVALUATION
def evaluate(witness, *, tolerance=DEFAULT_TOLERANCE, exploratory=False):
    """Evaluate the statement of ``witness`` on its inputs.

    Args:
        witness (Witness): inputs and parameters
        tolerance (float): slack tolerance of the verdict
        exploratory (bool): accept out-of-range parameters where allowed

    Returns:
        CheckResult: with ``witness`` attached

    Raises:
        LogMajorError: on hypothesis or parameter violations
    """
    statement = StatementId(witness.statement)
    m, p, f = witness.matrices, witness.params, witness.functions
    kw = {"tolerance": tolerance}

    if statement is S.ROTFELD_1_1:
        result = determinants.check_rotfeld(m["x"], m["y"], p["rho"], p["p"], **kw)
    elif statement is S.GARG_AUJLA_1_2:
        result = determinants.check_concave_perturbation(m["x"], m["y"], f["f"], **kw)
    elif statement is S.POWER_1_3:
        result = power.check_power_partial_products(m["x"], m["y"], p["r"], **kw)
    elif statement is S.THEOREM_3_3:
        result = power.check_power_bound(m["x"], m["y"], p["r"], exploratory=exploratory, **kw)
    elif statement is S.REVERSED_THEOREM_3_3:
        result = power.check_reversed_power_bound(m["x"], m["y"], p["r"], **kw)
    elif statement is S.MU_AXIOMS_2:
        result = axioms.check_mu_axioms(m["x"], m["y"], m["u"], m["v"], f["f"], p["alpha"], **kw)
    elif statement is S.LEMMA_3_1:
        result = positive.check_lemma_3_1(m["a"], m["b"], m["w"], **kw)
    elif statement is S.LEMMA_3_2:
        result = positive.check_lemma_3_2(m["x"], m["y"], p["p"], **kw)
    elif statement in (S.LEMMA_4_1, S.LEMMA_4_2):
        result = contractions.check_contraction_identities(
            m["x"], self_adjoint_variant=statement is S.LEMMA_4_2, **kw
        )
    elif statement in (S.LEMMA_4_3, S.LEMMA_4_5):
        result = contractions.check_product_integral(m["x"], m["y"], p["r"], statement=statement, **kw)
    elif statement is S.HOLDER_1_4:
        result = holder.check_holder_partial_products(witness.matrix_list(), p["ps"], p["r"], **kw)
    elif statement in holder.HOLDER_STATEMENTS:
        result = holder.check_holder_main(
            witness.matrix_list(), p["ps"], p.get("r", 1.0), statement=statement, **kw
        )
    elif statement is S.ORACLE_MU:
        result = consistency.check_oracle_mu(m["x"], **kw)
    elif statement is S.ORACLE_LAMBDA:
        result = consistency.check_oracle_lambda(m["x"], **kw)
    elif statement is S.ORACLE_DETERMINANT:
        result = consistency.check_oracle_determinant(m["x"], **kw)
    else:
        samples = np.real(np.diagonal(m["x"]))
        result = consistency.check_oracle_rearrangement(samples, **kw)

    result.witness = witness
    return result
