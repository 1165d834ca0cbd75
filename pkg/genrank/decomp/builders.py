# -*- coding: utf-8 -*-
"""Explicit factorizations of Hadamard powers, Hadamard polynomials and their
Khatri-Rao products with ``B^T``.

All builders work over the exact backend. ``A`` is ``m x d`` and ``B`` is
``n x d``; the Khatri-Rao targets are ``B^T ⊙ H`` of shape ``md x n`` with
the coordinate index of ``B^T`` changing slower.
"""
from collections import namedtuple
from fractions import Fraction

import numpy as np

from ..exceptions import ShapeError
from ..linalg import (
    Matrix, DiagonalMatrix, hadamard_power, khatri_rao, khatri_rao_array,
    linear_combination, check_budget)
from ..combinat import (
    SupportFilter, enumerate_lambda, enumerate_Lambda, multinomial)
from .decomposition import Decomposition


def _as_exact_pair(A, B):
    A, B = Matrix(A).to_exact(), Matrix(B).to_exact()
    if A.cols != B.cols:
        raise ShapeError('A is {} and B is {}: inner dimensions differ'.format(
            A.shape, B.shape))
    return A, B


def monomial_column(M, comp):
    """Hadamard monomial ``M[:,0]^(k_0) ∘ ... ∘ M[:,d-1]^(k_{d-1})``."""
    col = np.empty(M.rows, dtype=object)
    col[:] = Fraction(1)
    for j, power in enumerate(comp):
        if power:
            col = col * M.data[:, j] ** power
    return col


def _monomial_matrix(M, comps):
    return Matrix.from_columns([monomial_column(M, c) for c in comps], M.rows)


# Targets
def matmul_target(A, B):
    A, B = _as_exact_pair(A, B)
    return A @ B.T


def power_target(A, B, k):
    """``(A B^T)^(k)``."""
    A, B = _as_exact_pair(A, B)
    return hadamard_power(A @ B.T, k)


def poly_target(A, B, coeffs):
    """``sum_k c_k (A B^T)^(k)``."""
    A, B = _as_exact_pair(A, B)
    coeffs = SupportFilter(coeffs)
    G = A @ B.T
    terms = [(coeffs[k], hadamard_power(G, k)) for k in coeffs.support()]
    return linear_combination(terms, G.shape)


def khatri_power_target(A, B, k):
    """``B^T ⊙ (A B^T)^(k)``."""
    return khatri_rao(Matrix(B).to_exact().T, power_target(A, B, k))


def khatri_poly_target(A, B, coeffs):
    """``B^T ⊙ sum_k c_k (A B^T)^(k)``."""
    return khatri_rao(Matrix(B).to_exact().T, poly_target(A, B, coeffs))


# Builders
def decompose_matmul(A, B):
    """Trivial factorization ``A I B^T``."""
    A, B = _as_exact_pair(A, B)
    return Decomposition(A, DiagonalMatrix.identity(A.cols), B,
                         list(range(A.cols)), 'matmul')


def decompose_hadamard_power(A, B, k):
    if k < 0:
        raise ValueError('Hadamard exponent must be >= 0')
    A, B = _as_exact_pair(A, B)
    comps = enumerate_lambda(A.cols, k)
    return Decomposition(
        _monomial_matrix(A, comps),
        DiagonalMatrix([multinomial(c) for c in comps]),
        _monomial_matrix(B, comps), comps, 'hadamard_power')


def decompose_poly(A, B, coeffs):
    A, B = _as_exact_pair(A, B)
    coeffs = SupportFilter(coeffs)
    comps = enumerate_Lambda(A.cols, coeffs.K, coeffs)
    return Decomposition(
        _monomial_matrix(A, comps),
        DiagonalMatrix([coeffs[c.degree] * multinomial(c) for c in comps]),
        _monomial_matrix(B, comps), comps, 'poly')


def _khatri_lift(inner, B, kind):
    """Lifts ``left D right^T = H`` to ``B^T ⊙ H``: the left factor becomes
    ``d`` diagonal copies of ``left`` and the right column ``(l, label)`` is
    ``B[:, l] ∘ right[:, label]``; coordinate ``l`` is the slower index."""
    d = B.cols
    left = Matrix.block_diagonal([inner.left] * d)

    columns, labels, diag = [], [], []
    for ell in range(d):
        for idx, label in enumerate(inner.column_labels):
            columns.append(B.data[:, ell] * inner.right.column(idx))
            labels.append((ell, label))
            diag.append(inner.diag[idx])
    right = Matrix.from_columns(columns, B.rows)
    return Decomposition(left, DiagonalMatrix(diag), right, labels, kind)


def decompose_khatri_power(A, B, k):
    A, B = _as_exact_pair(A, B)
    return _khatri_lift(decompose_hadamard_power(A, B, k), B, 'khatri_power')


def decompose_khatri_poly(A, B, coeffs):
    A, B = _as_exact_pair(A, B)
    return _khatri_lift(decompose_poly(A, B, coeffs), B, 'khatri_poly')


def tensor_power(vec, k):
    """Flat ``vec^{⊗k}`` of length ``len(vec)**k``, first factor slowest."""
    out = np.empty(1, dtype=object)
    out[0] = Fraction(1)
    for _ in range(k):
        out = khatri_rao_array(out[:, None], vec[:, None]).ravel()
    return out


def _direct_sum(vec, coeffs, scaled):
    blocks = [tensor_power(vec, k) * (coeffs[k] if scaled else 1)
              for k in coeffs.support()]
    if not blocks:
        return np.empty(0, dtype=object)
    return np.concatenate(blocks)


def _tensor_length(d, coeffs):
    return sum(d ** k for k in coeffs.support())


def decompose_tensor_inner(A, B, coeffs, budget=None):
    """Embeds rows as ``⊕ c_k a_i^{⊗k}`` and ``⊕ b_j^{⊗k}`` so that their
    inner products give ``sum_k c_k <a_i, b_j>^k`` with no Khatri-Rao factor."""
    A, B = _as_exact_pair(A, B)
    coeffs = SupportFilter(coeffs)
    d = A.cols
    check_budget('tensor_inner(d={}, K={})'.format(d, coeffs.K),
                 _tensor_length(d, coeffs), budget)

    left = [_direct_sum(A.data[i], coeffs, scaled=True) for i in range(A.rows)]
    right = [_direct_sum(B.data[j], coeffs, scaled=False) for j in range(B.rows)]
    labels = [(k, idx) for k in coeffs.support() for idx in range(d ** k)]
    return Decomposition(_stack_rows(left, len(labels)),
                         DiagonalMatrix.identity(len(labels)),
                         _stack_rows(right, len(labels)), labels, 'tensor_inner')


def decompose_tensor_directsum(A, B, coeffs, budget=None):
    """Row ``(l, i)`` of the left embedding is ``e_l ⊗ (⊕ c_k a_i^{⊗k})`` and
    row ``j`` of the right embedding is ``b_j ⊗ (⊕ b_j^{⊗k})``; their inner
    products are the entries of ``B^T ⊙ sum_k c_k (A B^T)^(k)``."""
    A, B = _as_exact_pair(A, B)
    coeffs = SupportFilter(coeffs)
    d = A.cols
    block = _tensor_length(d, coeffs)
    check_budget('tensor_directsum(d={}, K={})'.format(d, coeffs.K), d * block, budget)

    left = []
    for ell in range(d):
        for i in range(A.rows):
            row = np.empty(d * block, dtype=object)
            row[:] = Fraction(0)
            row[ell * block:(ell + 1) * block] = _direct_sum(A.data[i], coeffs, True)
            left.append(row)
    right = []
    for j in range(B.rows):
        inner = _direct_sum(B.data[j], coeffs, False)
        right.append(np.concatenate([B.data[j, ell] * inner for ell in range(d)])
                     if block else np.empty(0, dtype=object))

    labels = [(ell, k, idx) for ell in range(d)
              for k in coeffs.support() for idx in range(d ** k)]
    return Decomposition(_stack_rows(left, len(labels)),
                         DiagonalMatrix.identity(len(labels)),
                         _stack_rows(right, len(labels)), labels, 'tensor_directsum')


def _stack_rows(rows, width):
    arr = np.empty((len(rows), width), dtype=object)
    for idx, row in enumerate(rows):
        arr[idx, :] = row
    return Matrix(arr, backend='exact')


Builder = namedtuple('Builder', ['build', 'target', 'param'])

#: Decomposition kinds by name. ``param`` tells whether the builder takes an
#: exponent ``k``, a coefficient vector or nothing.
BUILDERS = {
    'matmul': Builder(decompose_matmul, matmul_target, None),
    'hadamard_power': Builder(decompose_hadamard_power, power_target, 'k'),
    'poly': Builder(decompose_poly, poly_target, 'coeffs'),
    'khatri_power': Builder(decompose_khatri_power, khatri_power_target, 'k'),
    'khatri_poly': Builder(decompose_khatri_poly, khatri_poly_target, 'coeffs'),
    'tensor_directsum': Builder(decompose_tensor_directsum, khatri_poly_target,
                                'coeffs'),
    'tensor_inner': Builder(decompose_tensor_inner, poly_target, 'coeffs'),
}
