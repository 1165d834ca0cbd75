# -*- coding: utf-8 -*-
import math
from fractions import Fraction

import numpy as np
import scipy.linalg

from ..exceptions import DomainError
from .matrix import Matrix, EXACT, FLOAT


class TolerancePolicy:
    """Singular value threshold for numerical rank.

    Arguments:
        kind(str): ``'relative'`` gives ``c * s_max * max(rows, cols) * eps``,
            ``'absolute'`` gives the fixed threshold ``tau``.
        value(float): ``c`` or ``tau``.
    """

    KINDS = ('relative', 'absolute')

    def __init__(self, kind='relative', value=1.0):
        if kind not in self.KINDS:
            raise ValueError('Unknown tolerance policy {!r}'.format(kind))
        if value < 0:
            raise ValueError('Tolerance must be non-negative')
        self.kind = kind
        self.value = float(value)

    @classmethod
    def parse(cls, spec):
        """Parses ``'relative:1'`` / ``'absolute:1e-10'`` strings."""
        if isinstance(spec, cls):
            return spec
        kind, _, value = str(spec).partition(':')
        return cls(kind.strip(), float(value) if value else 1.0)

    def threshold(self, singular_values, shape):
        if self.kind == 'absolute':
            return self.value
        s_max = singular_values[0] if len(singular_values) else 0.0
        return self.value * s_max * max(shape) * np.finfo(np.float64).eps

    def __str__(self):
        return '{}:{:g}'.format(self.kind, self.value)

    def __repr__(self):
        return 'TolerancePolicy({})'.format(self)


class RankResult:
    """Outcome of a rank computation.

    ``tolerance`` and ``singular_values`` are only populated by the float
    backend.
    """

    def __init__(self, rank, backend, tolerance=None, singular_values=None):
        self.rank = rank
        self.backend = backend
        self.tolerance = tolerance
        self.singular_values = singular_values

    def __int__(self):
        return self.rank

    def __eq__(self, other):
        if isinstance(other, int):
            return self.rank == other
        if isinstance(other, RankResult):
            return self.rank == other.rank and self.backend == other.backend
        return NotImplemented

    __hash__ = None

    def to_dict(self):
        dict_ = {'rank': self.rank, 'backend': self.backend}
        if self.backend == FLOAT:
            dict_['tolerance'] = self.tolerance
            dict_['singular_values'] = [float(s) for s in self.singular_values]
        return dict_

    def __repr__(self):
        if self.backend == FLOAT:
            return 'RankResult(rank={}, backend=float, tol={:.3g})'.format(
                self.rank, self.tolerance)
        return 'RankResult(rank={}, backend=exact)'.format(self.rank)


def integer_rows(M):
    """Scales each row of an exact matrix by the lcm of its denominators.
    Returns (list of int rows, list of scale factors). Row scaling by a
    nonzero integer preserves rank and multiplies determinants by the scale."""
    rows, scales = [], []
    for row in M.data:
        lcm = 1
        for x in row:
            lcm = lcm * x.denominator // math.gcd(lcm, x.denominator)
        rows.append([int(x * lcm) for x in row])
        scales.append(lcm)
    return rows, scales


def bareiss(rows, full_pivoting=True):
    """In-place fraction-free elimination of an integer matrix.

    Arguments:
        rows(list of lists of int): The matrix; it is modified.
        full_pivoting(bool): If ``True``, scans the trailing block for the
            first nonzero pivot (row-major) and swaps rows and columns.
            Otherwise only rows are swapped within the current column,
            which is what the determinant needs.

    Returns:
        tuple: (rank, sign of the accumulated permutation, last pivot).
            For a square full-rank matrix, the determinant is
            ``sign * last_pivot``.
    """
    n_rows = len(rows)
    n_cols = len(rows[0]) if n_rows else 0
    prev = 1
    sign = 1
    rank = 0

    for k in range(min(n_rows, n_cols)):
        pivot = None
        if full_pivoting:
            for i in range(k, n_rows):
                for j in range(k, n_cols):
                    if rows[i][j] != 0:
                        pivot = (i, j)
                        break
                if pivot is not None:
                    break
        else:
            for i in range(k, n_rows):
                if rows[i][k] != 0:
                    pivot = (i, k)
                    break

        if pivot is None:
            break

        pi, pj = pivot
        if pi != k:
            rows[k], rows[pi] = rows[pi], rows[k]
            sign = -sign
        if pj != k:
            for row in rows:
                row[k], row[pj] = row[pj], row[k]
            sign = -sign

        pkk = rows[k][k]
        for i in range(k + 1, n_rows):
            rik = rows[i][k]
            row_i, row_k = rows[i], rows[k]
            for j in range(k + 1, n_cols):
                # Exact division: the quotient is a minor of the input
                row_i[j] = (row_i[j] * pkk - rik * row_k[j]) // prev
            row_i[k] = 0
        prev = pkk
        rank += 1

    return rank, sign, prev


def rank_exact(M):
    """Exact rank of a rational matrix by fraction-free elimination."""
    if M.backend != EXACT:
        M = M.to_exact()
    if M.cols == 0:
        return RankResult(0, EXACT)
    rows, _ = integer_rows(M)
    rank, _, _ = bareiss(rows)
    return RankResult(rank, EXACT)


def det_exact(M):
    """Exact determinant of a square rational matrix."""
    n = M.rows
    if n != M.cols:
        raise ValueError('det_exact needs a square matrix, got {}'.format(M.shape))
    rows, scales = integer_rows(M)
    rank, sign, last = bareiss(rows, full_pivoting=False)
    if rank < n:
        return Fraction(0)
    return Fraction(sign * last, math.prod(scales))


def rank_float(M, tol_policy=None):
    """Numerical rank: number of singular values above the policy threshold.

    Arguments:
        M(Matrix or ndarray): Matrix with finite entries.
        tol_policy(TolerancePolicy or str, optional): Defaults to
            ``relative:1``.
    """
    tol_policy = TolerancePolicy.parse(tol_policy or 'relative:1')
    arr = M.to_float().data if isinstance(M, Matrix) else np.asarray(M, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise DomainError('rank_float: matrix has non-finite entries')
    if arr.size == 0:
        return RankResult(0, FLOAT, tolerance=0.0, singular_values=np.zeros(0))

    s = scipy.linalg.svdvals(arr)
    tol = tol_policy.threshold(s, arr.shape)
    return RankResult(int(np.sum(s > tol)), FLOAT, tolerance=float(tol),
                      singular_values=s)
