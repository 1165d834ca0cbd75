# -*- coding: utf-8 -*-
from fractions import Fraction

import numpy as np

from ..exceptions import ShapeError, DomainError

EXACT = 'exact'
FLOAT = 'float'
BACKENDS = (EXACT, FLOAT)


def to_fraction(value):
    """Converts a scalar to ``Fraction`` without rounding."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, np.integer)):
        return Fraction(int(value))
    if isinstance(value, (float, np.floating)):
        if not np.isfinite(value):
            raise DomainError('Non-finite value {} for exact backend'.format(value))
        return Fraction(float(value))
    return Fraction(value)


class Matrix:
    """An immutable dense matrix over one of two scalar backends.

    The ``exact`` backend stores ``fractions.Fraction`` entries inside an
    object-dtype numpy array so that +, -, * and / never round. The ``float``
    backend is a plain float64 array.

    Arguments:
        data(array-like): A 2D nested sequence or numpy array.
        backend(str, optional): ``'exact'`` or ``'float'``. If ``None``, the
            backend is inferred: float dtypes give ``'float'``, everything
            else ``'exact'``.

    Zero columns are allowed (``cols == 0``) so that empty-support
    factorizations keep an honest inner dimension; rows must be >= 1.
    """

    __slots__ = ('_data', 'backend')

    def __init__(self, data, backend=None):
        if isinstance(data, Matrix):
            backend = backend or data.backend
            data = data._data

        arr = np.asarray(data, dtype=object if backend == EXACT else None)
        if arr.ndim != 2:
            raise ShapeError('Matrix data must be 2D, got ndim={}'.format(arr.ndim))
        if arr.shape[0] < 1:
            raise ShapeError('Matrix must have at least one row')

        if backend is None:
            backend = FLOAT if arr.dtype.kind == 'f' else EXACT
        if backend not in BACKENDS:
            raise ValueError('Unknown backend {!r}'.format(backend))

        if backend == EXACT:
            out = np.empty(arr.shape, dtype=object)
            flat_in = arr.ravel()
            flat_out = out.ravel()
            for idx in range(flat_in.size):
                flat_out[idx] = to_fraction(flat_in[idx])
            arr = out
        else:
            arr = np.array(arr, dtype=np.float64)

        arr.setflags(write=False)
        self._data = arr
        self.backend = backend

    # Constructors
    @classmethod
    def from_rows(cls, rows, backend=EXACT):
        return cls(rows, backend=backend)

    @classmethod
    def zeros(cls, rows, cols, backend=EXACT):
        fill = np.zeros((rows, cols), dtype=np.int64 if backend == EXACT else float)
        return cls(fill, backend=backend)

    @classmethod
    def ones(cls, rows, cols, backend=EXACT):
        fill = np.ones((rows, cols), dtype=np.int64 if backend == EXACT else float)
        return cls(fill, backend=backend)

    @classmethod
    def identity(cls, n, backend=EXACT):
        return cls(np.eye(n, dtype=np.int64 if backend == EXACT else float),
                   backend=backend)

    @classmethod
    def block_diagonal(cls, blocks):
        """Block-diagonal matrix built from a list of matrices."""
        backend = blocks[0].backend
        rows = sum(b.rows for b in blocks)
        cols = sum(b.cols for b in blocks)
        out = np.zeros((rows, cols), dtype=object if backend == EXACT else float)
        if backend == EXACT:
            out[...] = Fraction(0)
        r, c = 0, 0
        for block in blocks:
            out[r:r + block.rows, c:c + block.cols] = block._data
            r += block.rows
            c += block.cols
        return cls(out, backend=backend)

    @classmethod
    def hstack(cls, blocks):
        backend = blocks[0].backend
        _check_same_backend(*blocks)
        rows = {b.rows for b in blocks}
        if len(rows) != 1:
            raise ShapeError('hstack: row counts differ {}'.format(sorted(rows)))
        return cls(np.concatenate([b._data for b in blocks], axis=1),
                   backend=backend)

    @classmethod
    def from_columns(cls, columns, rows, backend=EXACT):
        """Builds a matrix from a (possibly empty) list of 1D columns."""
        if not columns:
            return cls(np.empty((rows, 0), dtype=object if backend == EXACT else float),
                       backend=backend)
        return cls(np.stack([np.asarray(c, dtype=object if backend == EXACT else float)
                             for c in columns], axis=1), backend=backend)

    # Accessors
    @property
    def data(self):
        """Read-only view of the underlying numpy array."""
        return self._data

    @property
    def rows(self):
        return self._data.shape[0]

    @property
    def cols(self):
        return self._data.shape[1]

    @property
    def shape(self):
        return self._data.shape

    @property
    def is_exact(self):
        return self.backend == EXACT

    @property
    def T(self):
        return Matrix(self._data.T, backend=self.backend)

    def column(self, j):
        return self._data[:, j]

    def submatrix(self, I, J):
        return Matrix(self._data[np.ix_(list(I), list(J))], backend=self.backend)

    def to_float(self):
        if self.backend == FLOAT:
            return self
        return Matrix(self._data.astype(np.float64), backend=FLOAT)

    def to_exact(self):
        if self.backend == EXACT:
            return self
        return Matrix(self._data, backend=EXACT)

    def tolist(self):
        return self._data.tolist()

    # Algebra
    def __matmul__(self, other):
        _check_same_backend(self, other)
        if self.cols != other.rows:
            raise ShapeError('matmul: {} @ {}'.format(self.shape, other.shape))
        if self.cols == 0:
            return Matrix.zeros(self.rows, other.cols, backend=self.backend)
        return Matrix(self._data.dot(other._data), backend=self.backend)

    def hadamard(self, other):
        """Entrywise (Hadamard) product."""
        _check_same_backend(self, other)
        if self.shape != other.shape:
            raise ShapeError('hadamard: {} vs {}'.format(self.shape, other.shape))
        return Matrix(self._data * other._data, backend=self.backend)

    def __add__(self, other):
        _check_same_backend(self, other)
        if self.shape != other.shape:
            raise ShapeError('add: {} vs {}'.format(self.shape, other.shape))
        return Matrix(self._data + other._data, backend=self.backend)

    def __sub__(self, other):
        _check_same_backend(self, other)
        if self.shape != other.shape:
            raise ShapeError('sub: {} vs {}'.format(self.shape, other.shape))
        return Matrix(self._data - other._data, backend=self.backend)

    def scale(self, c):
        c = to_fraction(c) if self.is_exact else float(c)
        return Matrix(self._data * c, backend=self.backend)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.shape == other.shape and
                bool(np.all(self._data == other._data)))

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    __hash__ = None

    def __repr__(self):
        if self.is_exact:
            body = '; '.join(' '.join(str(x) for x in row) for row in self._data)
        else:
            body = '; '.join(' '.join('{:.6g}'.format(x) for x in row)
                             for row in self._data)
        return 'Matrix<{}>({}x{}: [{}])'.format(
            self.backend, self.rows, self.cols, body)


class DiagonalMatrix:
    """A diagonal matrix stored as its diagonal; ``D[l]`` is ``D_{l,l}``."""

    __slots__ = ('_diag', 'backend')

    def __init__(self, diag, backend=EXACT):
        if backend == EXACT:
            diag = [to_fraction(x) for x in diag]
            self._diag = np.empty(len(diag), dtype=object)
            self._diag[:] = diag
        else:
            self._diag = np.asarray(diag, dtype=np.float64)
        self._diag.setflags(write=False)
        self.backend = backend

    @classmethod
    def identity(cls, n, backend=EXACT):
        return cls([1] * n, backend=backend)

    @property
    def N(self):
        return len(self._diag)

    @property
    def diag(self):
        return self._diag

    def __getitem__(self, idx):
        return self._diag[idx]

    def __len__(self):
        return len(self._diag)

    def to_matrix(self):
        arr = Matrix.zeros(self.N, self.N, backend=self.backend).data.copy()
        for idx, value in enumerate(self._diag):
            arr[idx, idx] = value
        return Matrix(arr, backend=self.backend)

    def __repr__(self):
        return 'DiagonalMatrix<{}>([{}])'.format(
            self.backend, ', '.join(str(x) for x in self._diag))


def _check_same_backend(*matrices):
    backends = {m.backend for m in matrices}
    if len(backends) != 1:
        raise ShapeError('Mixed backends: {}'.format(sorted(backends)))


def hadamard_power(M, k):
    """Entrywise k-th power of ``M``; ``k = 0`` gives the all-ones matrix."""
    if k < 0:
        raise ValueError('Hadamard exponent must be >= 0, got {}'.format(k))
    if k == 0:
        return Matrix.ones(M.rows, M.cols, backend=M.backend)
    return Matrix(M.data ** k, backend=M.backend)


def khatri_rao_array(P, Q):
    """Column-wise Kronecker product of two numpy arrays. Row ``(i1, i2)`` is
    stored at ``i1 * Q.shape[0] + i2`` (the first index changes slower)."""
    a, c = P.shape
    b, c2 = Q.shape
    if c != c2:
        raise ShapeError('khatri_rao: column counts differ ({} vs {})'.format(c, c2))
    return (P[:, None, :] * Q[None, :, :]).reshape(a * b, c)


def khatri_rao(P, Q):
    """Khatri-Rao product ``P (a x c) ⊙ Q (b x c) -> (ab x c)``."""
    _check_same_backend(P, Q)
    return Matrix(khatri_rao_array(P.data, Q.data), backend=P.backend)


def matmul_diag(A, D, B):
    """Returns ``A @ diag(D) @ B.T``."""
    if not (A.cols == D.N == B.cols):
        raise ShapeError('matmul_diag: inner dimensions {}, {}, {}'.format(
            A.cols, D.N, B.cols))
    if D.N == 0:
        return Matrix.zeros(A.rows, B.rows, backend=A.backend)
    scaled = Matrix(A.data * D.diag[None, :], backend=A.backend)
    return scaled @ B.T


def linear_combination(terms, shape, backend=EXACT):
    """Sum of ``c * M`` over ``(c, M)`` pairs; zero matrix if empty."""
    acc = Matrix.zeros(shape[0], shape[1], backend=backend)
    for c, M in terms:
        acc = acc + M.scale(c)
    return acc
