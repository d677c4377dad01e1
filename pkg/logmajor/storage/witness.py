"""Witness files: the inputs of one statement evaluation as text.

    # comment lines and blank lines are ignored between records
    statement THEOREM_3_3
    seed 42 7 THEOREM_3_3/n=2/r=1.5
    param r 1.5
    function f power 0.0 0.5 1.0
    matrix x
    <matrix record>
    matrix y
    <matrix record>

Matrix records are the linalg text records (dimension line, then n^2
lines ``re im`` row by row). Parameters with several values are tuples;
``ps`` is always a tuple. Golden sampler files use the same records
without a ``statement`` line.
"""
import logging
import os
from typing import NamedTuple

from logmajor.exceptions import ConfigError, ParseError, ScalarFunctionError
from logmajor.inequalities.catalog import StatementId
from logmajor.inequalities.result import Witness
from logmajor.linalg.functions import parse_function
from logmajor.linalg.matrix import format_matrix, parse_matrix
from logmajor.sampler import GOLDEN_DIMENSION, GOLDEN_SEED, SamplerSeed, golden_draws

logger = logging.getLogger(__name__)

TUPLE_PARAMS = ("ps",)


class Records(NamedTuple):
    statement: StatementId
    params: dict
    functions: dict
    matrices: dict
    seed: SamplerSeed


def dump_records(matrices, params=None, functions=None, statement=None, seed=None):
    """Text of a record set; the inverse of ``parse_records``."""
    lines = []
    if statement is not None:
        lines.append(f"statement {StatementId(statement).value}")
    if seed is not None:
        lines.append(f"seed {seed.master} {seed.trial} {seed.purpose}")
    for name, value in (params or {}).items():
        values = value if isinstance(value, (tuple, list)) else (value,)
        lines.append(f"param {name} " + " ".join(repr(float(v)) for v in values))
    for name, f in (functions or {}).items():
        lines.append(f.record(name))
    text = "\n".join(lines) + "\n" if lines else ""
    for name, x in matrices.items():
        text += f"matrix {name}\n" + format_matrix(x)
    return text


def dump_witness(witness):
    return dump_records(
        witness.matrices, witness.params, witness.functions, witness.statement, witness.seed
    )


def _param_value(name, tokens, line, text, path):
    values = []
    for token in tokens:
        try:
            values.append(float(token))
        except ValueError:
            raise ParseError(
                f"invalid parameter value {token!r}", line=line, column=text.find(token) + 1, path=path
            )
    if not values:
        raise ParseError(f"parameter {name!r} has no value", line=line, path=path)
    if len(values) > 1 or name in TUPLE_PARAMS:
        return tuple(values)
    return values[0]


def parse_records(text, path=None):
    """Parse a record set.

    Returns:
        Records: statement (None when absent), params, functions, matrices
        in file order and the seed triple (None when absent)

    Raises:
        ParseError: with the 1-based line and column of the first problem
    """
    lines = text.splitlines()
    statement, seed = None, None
    params, functions, matrices = {}, {}, {}
    index = 0
    while index < len(lines):
        raw = lines[index]
        line = index + 1
        tokens = raw.split()
        index += 1
        if not tokens or tokens[0].startswith("#"):
            continue
        keyword = tokens[0]
        if keyword == "statement" and len(tokens) == 2:
            try:
                statement = StatementId(tokens[1])
            except ValueError:
                raise ParseError(
                    f"unknown statement {tokens[1]!r}", line=line, column=raw.find(tokens[1]) + 1, path=path
                )
        elif keyword == "seed" and len(tokens) == 4:
            try:
                seed = SamplerSeed(int(tokens[1]), int(tokens[2]), tokens[3])
            except ValueError:
                raise ParseError("seed needs integer master and trial", line=line, path=path)
        elif keyword == "param" and len(tokens) >= 2:
            params[tokens[1]] = _param_value(tokens[1], tokens[2:], line, raw, path)
        elif keyword == "function" and len(tokens) >= 4:
            try:
                functions[tokens[1]] = parse_function(tokens[2:])
            except (ScalarFunctionError, ValueError) as error:
                raise ParseError(str(error), line=line, column=raw.find(tokens[2]) + 1, path=path)
        elif keyword == "matrix" and len(tokens) == 2:
            matrix, consumed = parse_matrix(lines[index:], first_line=index + 1, path=path)
            matrices[tokens[1]] = matrix
            index += consumed
        else:
            raise ParseError(
                f"unexpected record {raw.strip()!r}", line=line, column=raw.find(keyword) + 1, path=path
            )
    return Records(statement, params, functions, matrices, seed)


def parse_witness(text, path=None):
    """Parse a witness; it must name its statement and at least one matrix."""
    records = parse_records(text, path)
    if records.statement is None:
        raise ParseError("missing 'statement' record", line=1, path=path)
    if not records.matrices:
        raise ParseError("witness has no matrix", line=max(1, len(text.splitlines())), path=path)
    return Witness(records.statement, records.matrices, records.params, records.functions, records.seed)


def load_witness(path):
    """Read and parse a witness file.

    Raises:
        ParseError: on malformed content
        ConfigError: if the file cannot be read
    """
    try:
        with open(path, "r") as f:
            text = f.read()
    except OSError as error:
        raise ConfigError(f"cannot read witness file {path}: {error}")
    return parse_witness(text, path=path)


class WitnessWriter:
    """Writes witness files into one directory.

    Args:
        dirpath (str): target directory, created on first write
    """

    def __init__(self, dirpath):
        self.dirpath = dirpath

    def write(self, filename, witness):
        if not os.path.exists(self.dirpath):
            os.makedirs(self.dirpath)
        path = os.path.join(self.dirpath, filename)
        with open(path, "w") as f:
            f.write(dump_witness(witness))
        logger.debug(f"Witness {filename} saved at path: {self.dirpath}")
        return path


def dump_goldens(master=GOLDEN_SEED, n=GOLDEN_DIMENSION):
    """Text of the golden sampler draws, compared bit-exactly by the tests."""
    matrices, functions, params = golden_draws(master, n)
    header = f"# golden sampler draws, master seed {master}, n = {n}\n"
    return header + dump_records(matrices, params, functions)
