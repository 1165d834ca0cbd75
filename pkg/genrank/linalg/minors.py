# -*- coding: utf-8 -*-
import math
import itertools
from fractions import Fraction

import numpy as np

from ..exceptions import ShapeError, BudgetExceededError
from .matrix import EXACT
from .rank import rank_exact, det_exact

# Default cap on exhaustively enumerated subsets
SUBSET_BUDGET = 10**6


def check_budget(what, count, budget=None):
    budget = SUBSET_BUDGET if budget is None else budget
    if count > budget:
        raise BudgetExceededError(what, count, budget)
    return count


def minor(M, I, J):
    """Determinant of the submatrix ``M[I, J]`` (0-based index sets).

    The empty minor (``I = J = ()``) is 1.
    """
    I, J = list(I), list(J)
    if len(I) != len(J):
        raise ShapeError('minor: |I|={} differs from |J|={}'.format(len(I), len(J)))
    if len(I) > min(M.rows, M.cols):
        raise ShapeError('minor: order {} exceeds {}'.format(len(I), M.shape))
    if not I:
        return Fraction(1) if M.backend == EXACT else 1.0

    sub = M.submatrix(I, J)
    if M.backend == EXACT:
        return det_exact(sub)
    return float(np.linalg.det(sub.data))


def kruskal_rank(M, budget=None):
    """Largest r such that every r columns of ``M`` are linearly independent.

    Raises ``BudgetExceededError`` when a level would enumerate more than
    ``budget`` column subsets.
    """
    if M.backend != EXACT:
        M = M.to_exact()

    cols = M.cols
    for j in range(cols):
        if all(x == 0 for x in M.column(j)):
            return 0

    # Kruskal rank never exceeds rank
    upper = rank_exact(M).rank
    krank = min(1, upper)
    for r in range(2, upper + 1):
        check_budget('kruskal_rank(r={})'.format(r), math.comb(cols, r), budget)
        for subset in itertools.combinations(range(cols), r):
            if rank_exact(M.submatrix(range(M.rows), subset)).rank < r:
                return krank
        krank = r
    return krank


def rank_condition_value(M, r, budget=None):
    """Sum of squares of all order-r minors; nonzero iff ``rank(M) >= r``."""
    if M.backend != EXACT:
        M = M.to_exact()
    if r < 0:
        raise ValueError('Order r must be >= 0')
    if r > min(M.rows, M.cols):
        return Fraction(0)

    check_budget('rank_condition_value(r={})'.format(r),
                 math.comb(M.rows, r) * math.comb(M.cols, r), budget)
    total = Fraction(0)
    for I in itertools.combinations(range(M.rows), r):
        for J in itertools.combinations(range(M.cols), r):
            total += minor(M, I, J) ** 2
    return total


def cauchy_binet_diag_expand(A, D, B, I, J, budget=None):
    """Evaluates the order-s minor of ``A D B^T`` on rows I, columns J by
    the Cauchy-Binet expansion with a diagonal middle factor:

        sum over S in C([N], s) of prod(D_l, l in S) * det A[I,S] * det B[J,S]

    Used as a brute-force oracle against ``minor(A @ D @ B.T, I, J)``.
    """
    I, J = list(I), list(J)
    if len(I) != len(J):
        raise ShapeError('cauchy_binet: |I|={} differs from |J|={}'.format(
            len(I), len(J)))
    N = D.N
    if not (A.cols == N == B.cols):
        raise ShapeError('cauchy_binet: inner dimensions {}, {}, {}'.format(
            A.cols, N, B.cols))

    s = len(I)
    if s > N:
        # All order-s minors of a product through an N-dim space vanish
        return Fraction(0)

    check_budget('cauchy_binet(N={}, s={})'.format(N, s), math.comb(N, s), budget)
    A, B = A.to_exact(), B.to_exact()
    total = Fraction(0)
    for S in itertools.combinations(range(N), s):
        weight = Fraction(1)
        for ell in S:
            weight *= D[ell]
        if weight == 0:
            continue
        total += weight * minor(A, I, S) * minor(B, J, S)
    return total
