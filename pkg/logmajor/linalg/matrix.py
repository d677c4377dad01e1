r"""Elements of the model algebra M_n.

A ComplexMatrix is represented by a read-only ``numpy`` array of dtype
``complex128`` and shape (n, n), n >= 1, with finite entries. The normalized
trace of the algebra is tau(x) = Tr(x) / n, so tau(1) = 1 on every M_n.

The text record used by reports and witness files is::

    n
    re im        # entry (0, 0)
    re im        # entry (0, 1)
    ...          # n * n lines in row-major order

with every real number written by ``repr`` (shortest round-trip decimal), so
a record parses back bit-exactly independently of the locale.
"""
import numpy as np

from logmajor.exceptions import InvalidMatrix, ParseError

DTYPE = np.complex128


def as_matrix(x):
    """Validate ``x`` and return it as an immutable ComplexMatrix.

    Args:
        x (array_like): square array of complex (or real) scalars

    Returns:
        ndarray: read-only complex128 copy of ``x``

    Raises:
        InvalidMatrix: if ``x`` is not square, empty, or has NaN/Inf entries
    """
    if isinstance(x, np.ndarray) and x.dtype == DTYPE and not x.flags.writeable:
        return x
    matrix = np.array(x, dtype=DTYPE)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise InvalidMatrix(f"expected a square matrix, got shape {matrix.shape}")
    if matrix.shape[0] < 1:
        raise InvalidMatrix("dimension must be at least 1")
    if not np.all(np.isfinite(matrix)):
        raise InvalidMatrix("matrix has non-finite entries")
    matrix.flags.writeable = False
    return matrix


def freeze(x):
    """Mark a freshly computed array read-only and return it."""
    x.flags.writeable = False
    return x


def dimension(x):
    return x.shape[0]


def identity(n):
    return freeze(np.eye(n, dtype=DTYPE))


def zeros(n):
    return freeze(np.zeros((n, n), dtype=DTYPE))


def diag(values):
    return freeze(np.diag(np.asarray(values, dtype=DTYPE)))


def adjoint(x):
    return freeze(np.conj(np.transpose(x)).copy())


def frobenius_norm(x):
    return float(np.sqrt(np.sum(x.real ** 2 + x.imag ** 2)))


def normalized_trace(x):
    """tau(x) = Tr(x) / n, the trace with tau(1) = 1."""
    return complex(np.trace(x)) / x.shape[0]


def multiply(*factors):
    """Ordered product x_1 x_2 ... x_m of matrices of the same dimension."""
    product = factors[0]
    for factor in factors[1:]:
        product = product @ factor
    return freeze(np.array(product, dtype=DTYPE))


# TEXT RECORD
def format_matrix(x):
    """Serialize a matrix into the text record described in the module docstring."""
    x = as_matrix(x)
    lines = [str(x.shape[0])]
    for value in x.reshape(-1):
        lines.append(f"{float(value.real)!r} {float(value.imag)!r}")
    return "\n".join(lines) + "\n"


def parse_matrix(lines, *, first_line=1, path=None):
    """Parse one matrix record from a list of text lines.

    Args:
        lines (list of str): the lines, starting at the dimension line
        first_line (int): 1-based line number of ``lines[0]`` in its file
        path (str): file name used in error messages

    Returns:
        tuple: (matrix, number of lines consumed)

    Raises:
        ParseError: with line/column of the first malformed token
    """
    if not lines:
        raise ParseError("missing matrix dimension", line=first_line, path=path)
    head = lines[0].strip()
    try:
        n = int(head)
    except ValueError:
        raise ParseError(
            f"expected a positive integer dimension, got {head!r}",
            line=first_line,
            column=_column_of(lines[0], head),
            path=path,
        )
    if n < 1:
        raise ParseError(f"dimension must be positive, got {n}", line=first_line, path=path)

    entries = np.zeros(n * n, dtype=DTYPE)
    for index in range(n * n):
        offset = index + 1
        line_number = first_line + offset
        if offset >= len(lines):
            raise ParseError(
                f"expected {n * n} entries, found {index}", line=line_number, path=path
            )
        text = lines[offset]
        tokens = text.split()
        if len(tokens) != 2:
            raise ParseError(
                f"expected 're im', got {text.strip()!r}",
                line=line_number,
                column=_column_of(text, text.strip()),
                path=path,
            )
        parts = []
        for token in tokens:
            try:
                parts.append(float(token))
            except ValueError:
                raise ParseError(
                    f"invalid real number {token!r}",
                    line=line_number,
                    column=_column_of(text, token),
                    path=path,
                )
        if not all(np.isfinite(parts)):
            raise ParseError(
                "matrix entries must be finite", line=line_number, path=path
            )
        entries[index] = complex(parts[0], parts[1])

    return freeze(entries.reshape(n, n)), n * n + 1


def _column_of(text, token):
    position = text.find(token)
    return position + 1 if position >= 0 else 1
