# -*- coding: utf-8 -*-
from .matrix import (
    EXACT, FLOAT, Matrix, DiagonalMatrix, to_fraction, hadamard_power,
    khatri_rao, khatri_rao_array, matmul_diag, linear_combination)
from .rank import TolerancePolicy, RankResult, rank_exact, rank_float, det_exact
from .minors import (
    SUBSET_BUDGET, check_budget, minor, kruskal_rank, rank_condition_value,
    cauchy_binet_diag_expand)
from .textio import read_matrix, write_matrix, read_vector


def rank(M, tol_policy=None):
    """Dispatches to the exact or float rank engine by backend."""
    if M.is_exact:
        return rank_exact(M)
    return rank_float(M, tol_policy)
