"""Statement identifiers and the machine-readable statement catalog.

Each entry names the matrix inputs a statement takes, its scalar
parameters with their admissible ranges, its scalar-function inputs with
the hypothesis family they must satisfy, and hypothesis flags on the
matrices. ``validate_params`` enforces the ranges exactly; out-of-range
values are accepted only for exploratory evaluation.
"""
import csv
import enum
import io
import json
from dataclasses import dataclass

import numpy as np

from logmajor.exceptions import InvalidStatementParams

PAPER = "paper"
CONTROL = "control"
ORACLE = "oracle"

CONJUGATE_TOLERANCE = 1e-12


class StatementId(str, enum.Enum):
    ROTFELD_1_1 = "ROTFELD_1_1"
    GARG_AUJLA_1_2 = "GARG_AUJLA_1_2"
    POWER_1_3 = "POWER_1_3"
    HOLDER_1_4 = "HOLDER_1_4"
    MU_AXIOMS_2 = "MU_AXIOMS_2"
    LEMMA_3_1 = "LEMMA_3_1"
    LEMMA_3_2 = "LEMMA_3_2"
    THEOREM_3_3 = "THEOREM_3_3"
    LEMMA_4_1 = "LEMMA_4_1"
    LEMMA_4_2 = "LEMMA_4_2"
    LEMMA_4_3 = "LEMMA_4_3"
    LEMMA_4_5 = "LEMMA_4_5"
    THEOREM_4_6 = "THEOREM_4_6"
    COROLLARY_4_7 = "COROLLARY_4_7"
    REMARK_4_8 = "REMARK_4_8"
    REVERSED_THEOREM_3_3 = "REVERSED_THEOREM_3_3"
    ORACLE_MU = "ORACLE_MU"
    ORACLE_LAMBDA = "ORACLE_LAMBDA"
    ORACLE_DETERMINANT = "ORACLE_DETERMINANT"
    ORACLE_REARRANGEMENT = "ORACLE_REARRANGEMENT"

    @classmethod
    def parse(cls, text):
        try:
            return cls(text.strip().upper())
        except ValueError:
            raise InvalidStatementParams(f"unknown statement {text!r}")


@dataclass(frozen=True)
class CatalogEntry:
    """One row of the statement catalog.

    Attributes:
        statement (StatementId): identifier
        kind (str): "paper", "control" or "oracle"
        source (str): where the inequality comes from
        matrices (tuple of str): matrix input names; "x*" means x1..xm
        params (tuple of (str, str)): parameter name and admissible range
        functions (tuple of (str, str)): function input name and family
        hypotheses (tuple of str): hypothesis flags on the inputs
    """

    statement: StatementId
    kind: str
    source: str
    matrices: tuple
    params: tuple = ()
    functions: tuple = ()
    hypotheses: tuple = ()

    def to_dict(self):
        return {
            "id": self.statement.value,
            "kind": self.kind,
            "source": self.source,
            "matrices": list(self.matrices),
            "params": {name: bounds for name, bounds in self.params},
            "functions": {name: family for name, family in self.functions},
            "hypotheses": list(self.hypotheses),
        }


S = StatementId
HOLDER_PARAMS = (("ps", "p_i > 0, sum 1/p_i = 1, m >= 2"), ("r", "r >= 1"))

CATALOG = {
    entry.statement: entry
    for entry in (
        CatalogEntry(
            S.ROTFELD_1_1, PAPER,
            "Rotfel'd determinant inequality, normalized: "
            "Delta(1+rho|x+y|^p) <= Delta(1+rho|x|^p) Delta(1+rho|y|^p)",
            ("x", "y"), (("rho", "rho > 0"), ("p", "0 < p <= 1")),
        ),
        CatalogEntry(
            S.GARG_AUJLA_1_2, PAPER,
            "partial products of s_j(1+f(|x+y|)) <= s_j(1+f(|x|)) s_j(1+f(|y|))",
            ("x", "y"), (), (("f", "concave"),), ("f concave, f(0) = 0",),
        ),
        CatalogEntry(
            S.POWER_1_3, PAPER,
            "partial products of s_j(|x+y|^r) <= s_j(1+|x|^r) s_j(1+|y|^r)",
            ("x", "y"), (("r", "1 <= r <= 2"),),
        ),
        CatalogEntry(
            S.HOLDER_1_4, PAPER,
            "partial products of 1-s_j(|x_1...x_m|)^r >= "
            "prod_i (1-s_j(|x_i|)^{r p_i})^{1/p_i}",
            ("x*",), HOLDER_PARAMS, (), ("contraction",),
        ),
        CatalogEntry(
            S.MU_AXIOMS_2, PAPER,
            "properties of mu, Lambda and Delta: mu(x*x)=mu(xx*), "
            "mu(uxv)<=||u||mu(x)||v||, mu(f(x))=f(mu(x)), trace formula, "
            "Lambda(x^a)=Lambda(x)^a, Lambda(xy)<=Lambda(x)Lambda(y), "
            "Lambda(x)=Lambda(x*)=Lambda(|x|), Delta(g(x))=Lambda_1(g(x)), mu(1+x)=1+mu(x)",
            ("x", "y", "u", "v"), (("alpha", "alpha > 0"),), (("f", "increasing"),),
        ),
        CatalogEntry(
            S.LEMMA_3_1, PAPER,
            "mu(1+a)=1+mu(a); [[a,x],[x*,b]] >= 0 iff x = a^1/2 w b^1/2, ||w|| <= 1",
            ("a", "b", "w"), (), (), ("a, b positive", "w contraction"),
        ),
        CatalogEntry(
            S.LEMMA_3_2, PAPER,
            "Lambda(y^p x^p y^p) <= Lambda((yxy)^p) for p <= 1, >= for p >= 1",
            ("x", "y"), (("p", "p > 0"),), (), ("x, y positive",),
        ),
        CatalogEntry(
            S.THEOREM_3_3, PAPER,
            "Lambda(|x+y|^r) <= Lambda(1+|x|^r) Lambda(1+|y|^r) and the determinant form",
            ("x", "y"), (("r", "1 <= r <= 2"),),
        ),
        CatalogEntry(
            S.LEMMA_4_1, PAPER,
            "mu_s(1-|x|) = 1-mu^l_{1-s}(|x|) and mu^l_s(1-|x|) = 1-mu_{1-s}(|x|)",
            ("x",), (), (), ("contraction",),
        ),
        CatalogEntry(
            S.LEMMA_4_2, PAPER,
            "mu(1-|x|) <= mu(1-x) for self-adjoint contractions, with the identities",
            ("x",), (), (), ("contraction", "self-adjoint"),
        ),
        CatalogEntry(
            S.LEMMA_4_3, PAPER,
            "int_0^t log(1-mu(|xy|^r)) >= int_0^t log(1-mu(|x|^r|y*|^r)) "
            "and the mu^l tail form",
            ("x", "y"), (("r", "r >= 1"),), (), ("contraction",),
        ),
        CatalogEntry(
            S.LEMMA_4_5, PAPER,
            "mu^l form of the product integral inequality, mu tail form and "
            "Delta(1-|xy|^r) >= Delta(1-||x|^r|y*|^r|)",
            ("x", "y"), (("r", "r >= 1"),), (), ("contraction",),
        ),
        CatalogEntry(
            S.THEOREM_4_6, PAPER,
            "int_0^t log(1-mu(|x_1...x_m|)^r) >= sum_i (1/p_i) int_0^t log(1-mu(|x_i|)^{r p_i}) "
            "and the mu^l form over [1-t, 1]",
            ("x*",), HOLDER_PARAMS, (), ("contraction",),
        ),
        CatalogEntry(
            S.COROLLARY_4_7, PAPER,
            "r = 1 case of the product integral inequality; for self-adjoint "
            "x_1...x_m also mu^l(1-x_1...x_m) >= mu^l(1-|x_1...x_m|) over [1-t, 1]",
            ("x*",), (("ps", "p_i > 0, sum 1/p_i = 1, m >= 2"),), (), ("contraction",),
        ),
        CatalogEntry(
            S.REMARK_4_8, PAPER,
            "Delta(1-|x_1...x_m|^r) >= prod_i Delta(1-|x_i|^{r p_i})^{1/p_i}, and r = 1",
            ("x*",), HOLDER_PARAMS, (), ("contraction",),
        ),
        CatalogEntry(
            S.REVERSED_THEOREM_3_3, CONTROL,
            "deliberately reversed: Lambda(1+|x|^r) Lambda(1+|y|^r) <= Lambda(|x+y|^r)",
            ("x", "y"), (("r", "1 <= r <= 2"),),
        ),
        CatalogEntry(
            S.ORACLE_MU, ORACLE,
            "mu and mu^l from sorted singular values equal the counting definitions",
            ("x",),
        ),
        CatalogEntry(
            S.ORACLE_LAMBDA, ORACLE,
            "Lambda at k/n equals (s_1...s_k)^{1/n}",
            ("x",),
        ),
        CatalogEntry(
            S.ORACLE_DETERMINANT, ORACLE,
            "Delta(x) equals |det x|^{1/n} by cofactor expansion (n <= 6)",
            ("x",),
        ),
        CatalogEntry(
            S.ORACLE_REARRANGEMENT, ORACLE,
            "decreasing rearrangement of samples equals mu of their diagonal matrix",
            ("x",), (), (), ("diagonal",),
        ),
    )
}

PAPER_STATEMENTS = tuple(s for s, entry in CATALOG.items() if entry.kind == PAPER)
ORACLE_STATEMENTS = tuple(s for s, entry in CATALOG.items() if entry.kind == ORACLE)
MAX_COFACTOR_DIMENSION = 6


def statement_order(statement):
    """Position of a statement in the catalog, for canonical sorting."""
    return list(CATALOG).index(StatementId(statement))


def _require(condition, statement, message):
    if not condition:
        raise InvalidStatementParams(f"{statement.value}: {message}")


def validate_params(statement, params, *, exploratory=False):
    """Check the parameter record of ``statement`` against its ranges.

    Args:
        statement (StatementId): the statement
        params (dict): parameter name -> float or tuple of floats
        exploratory (bool): accept r beyond 2 for the power bound

    Raises:
        InvalidStatementParams: on a missing or out-of-range parameter
    """
    statement = StatementId(statement)
    entry = CATALOG[statement]
    for name, _ in entry.params:
        _require(name in params, statement, f"missing parameter {name!r}")
        values = np.atleast_1d(np.asarray(params[name], dtype=np.float64))
        _require(np.all(np.isfinite(values)), statement, f"{name} must be finite")

    if statement is S.ROTFELD_1_1:
        _require(params["rho"] > 0, statement, f"rho = {params['rho']} must be positive")
        _require(0 < params["p"] <= 1, statement, f"p = {params['p']} must lie in (0, 1]")
    elif statement in (S.POWER_1_3, S.THEOREM_3_3, S.REVERSED_THEOREM_3_3):
        r = params["r"]
        upper = np.inf if exploratory else 2.0
        _require(1 <= r <= upper, statement, f"r = {r} must lie in [1, 2]")
    elif statement is S.MU_AXIOMS_2:
        _require(params["alpha"] > 0, statement, f"alpha = {params['alpha']} must be positive")
    elif statement is S.LEMMA_3_2:
        _require(params["p"] > 0, statement, f"p = {params['p']} must be positive")
    elif statement in (S.LEMMA_4_3, S.LEMMA_4_5):
        _require(params["r"] >= 1, statement, f"r = {params['r']} must be at least 1")
    elif entry.params and entry.params[0][0] == "ps":
        ps = np.atleast_1d(np.asarray(params["ps"], dtype=np.float64))
        _require(ps.size >= 2, statement, f"need m >= 2 exponents, got {ps.size}")
        _require(np.all(ps > 0), statement, f"exponents {tuple(ps)} must be positive")
        total = float(np.sum(1.0 / ps))
        _require(
            abs(total - 1.0) <= CONJUGATE_TOLERANCE,
            statement,
            f"sum of 1/p_i is {total!r}, expected 1",
        )
        if "r" in params:
            _require(params["r"] >= 1, statement, f"r = {params['r']} must be at least 1")


def render_catalog(fmt="json"):
    """The catalog as JSON (a list of entries) or CSV (one row per entry)."""
    entries = [entry.to_dict() for entry in CATALOG.values()]
    if fmt == "json":
        return json.dumps(entries, indent=2) + "\n"
    if fmt != "csv":
        raise ValueError(f"unknown catalog format {fmt!r}, use json or csv")
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["id", "kind", "source", "matrices", "params", "functions", "hypotheses"])
    for entry in entries:
        writer.writerow(
            [
                entry["id"],
                entry["kind"],
                entry["source"],
                " ".join(entry["matrices"]),
                "; ".join(f"{name}: {bounds}" for name, bounds in entry["params"].items()),
                "; ".join(f"{name}: {family}" for name, family in entry["functions"].items()),
                "; ".join(entry["hypotheses"]),
            ]
        )
    return buffer.getvalue()
