# -*- coding: utf-8 -*-
"""Plain text matrix format used by fixtures and the CLI.

The first non-comment line holds ``rows cols``; then come ``rows * cols``
whitespace separated entries in row-major order. Entries are integers,
``p/q`` rationals or decimal literals. Lines starting with ``#`` are skipped.
"""
import pathlib
from fractions import Fraction

import numpy as np

from ..exceptions import ShapeError, DomainError
from .matrix import Matrix, EXACT, FLOAT


def _tokens(path):
    with open(str(path)) as f:
        for line in f:
            line = line.strip()
            if not line or line.startswith('#'):
                continue
            yield from line.split()


def _is_decimal(token):
    return any(c in token for c in '.eEn') and '/' not in token


def _parse_entry(token, backend):
    if backend == FLOAT:
        value = float(token)
        if not np.isfinite(value):
            raise DomainError('Non-finite entry {!r}'.format(token))
        return value
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise DomainError('Invalid rational entry {!r}'.format(token))


def read_matrix(path, backend=None):
    """Reads a matrix file.

    Arguments:
        path(str or Path): File to read.
        backend(str, optional): Forces ``'exact'`` or ``'float'``. When
            ``None``, any decimal literal in the file selects ``'float'``.
    """
    tokens = list(_tokens(path))
    if len(tokens) < 2:
        raise ShapeError('{}: missing "rows cols" header'.format(path))
    try:
        rows, cols = int(tokens[0]), int(tokens[1])
    except ValueError:
        raise ShapeError('{}: invalid "rows cols" header {!r}'.format(path, tokens[:2]))
    entries = tokens[2:]
    if len(entries) != rows * cols:
        raise ShapeError('{}: expected {} entries for {}x{}, found {}'.format(
            path, rows * cols, rows, cols, len(entries)))

    if backend is None:
        backend = FLOAT if any(_is_decimal(t) for t in entries) else EXACT

    values = [_parse_entry(t, backend) for t in entries]
    if backend == EXACT:
        arr = np.empty((rows, cols), dtype=object)
        arr.ravel()[:] = values
    else:
        arr = np.array(values, dtype=np.float64).reshape(rows, cols)
    return Matrix(arr, backend=backend)


def read_vector(path):
    """Reads a float vector stored as an ``n 1`` or ``1 n`` matrix file. The
    header is required."""
    M = read_matrix(path, backend=FLOAT)
    if 1 not in M.shape:
        raise ShapeError(
            '{}: header declares a {}x{} matrix, a vector file needs an "n 1" or'
            ' "1 n" header'.format(path, M.rows, M.cols))
    return M.data.ravel().copy()


def write_matrix(M, path):
    path = pathlib.Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    # repr() of a float round-trips exactly
    fmt = str if M.is_exact else (lambda x: repr(float(x)))
    with open(str(path), 'w') as f:
        f.write('{} {}\n'.format(M.rows, M.cols))
        for row in M.data:
            f.write(' '.join(fmt(x) for x in row) + '\n')
    return path
