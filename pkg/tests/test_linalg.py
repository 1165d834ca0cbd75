# -*- coding: utf-8 -*-
import itertools
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from genrank.exceptions import BudgetExceededError, DomainError, ShapeError
from genrank.linalg import (
    EXACT, FLOAT, DiagonalMatrix, Matrix, TolerancePolicy,
    cauchy_binet_diag_expand, det_exact, hadamard_power, khatri_rao,
    kruskal_rank, matmul_diag, minor, rank, rank_condition_value, rank_exact,
    rank_float, read_matrix, read_vector, write_matrix)


def int_matrices(max_rows=4, max_cols=4, bound=5):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(
                st.lists(st.integers(-bound, bound), min_size=c, max_size=c),
                min_size=r, max_size=r)))


def test_backend_inference():
    assert Matrix([[1, 2], [3, 4]]).backend == EXACT
    assert Matrix(np.eye(2)).backend == FLOAT
    assert Matrix([[Fraction(1, 3)]]).data[0, 0] == Fraction(1, 3)


def test_exact_matrix_rejects_nan():
    with pytest.raises(DomainError):
        Matrix([[float('nan')]], backend=EXACT)


def test_mixed_backends_raise():
    with pytest.raises(ShapeError):
        Matrix([[1]]) @ Matrix([[1.0]])


def test_hadamard_power():
    M = Matrix([[1, 2], [3, 4]])
    assert hadamard_power(M, 2) == Matrix([[1, 4], [9, 16]])
    assert hadamard_power(M, 0) == Matrix.ones(2, 2)
    with pytest.raises(ValueError):
        hadamard_power(M, -1)


def test_khatri_rao_first_index_slower():
    P = Matrix([[1, 2], [3, 4]])
    Q = Matrix([[5, 6], [7, 8]])
    expected = Matrix([[5, 12], [7, 16], [15, 24], [21, 32]])
    assert khatri_rao(P, Q) == expected
    with pytest.raises(ShapeError):
        khatri_rao(P, Matrix([[1, 2, 3]]))


def test_matmul_diag_empty_inner_dimension():
    A = Matrix.from_columns([], 3)
    B = Matrix.from_columns([], 2)
    assert matmul_diag(A, DiagonalMatrix([]), B) == Matrix.zeros(3, 2)


def test_rank_exact_small():
    assert rank_exact(Matrix([[1, 2], [2, 4]])).rank == 1
    assert rank_exact(Matrix.zeros(3, 4)).rank == 0
    assert rank_exact(Matrix.identity(5)).rank == 5
    half = Matrix([[Fraction(1, 2), Fraction(1, 3)], [Fraction(1, 4), Fraction(1, 6)]])
    assert rank_exact(half).rank == 1


def test_det_exact():
    assert det_exact(Matrix([[1, 2], [3, 4]])) == -2
    assert det_exact(Matrix([[0, 1], [1, 0]])) == -1
    frac = Matrix([[Fraction(1, 2), Fraction(1, 3)], [Fraction(1, 4), Fraction(1, 5)]])
    assert det_exact(frac) == Fraction(1, 60)
    assert det_exact(Matrix([[1, 2], [2, 4]])) == 0


@settings(max_examples=50, deadline=None)
@given(int_matrices(max_rows=4, max_cols=4))
def test_det_exact_matches_numpy(rows):
    n = min(len(rows), len(rows[0]))
    M = Matrix([r[:n] for r in rows[:n]])
    assert float(det_exact(M)) == pytest.approx(
        np.linalg.det(np.array(M.data, dtype=float)), abs=1e-6)


@settings(max_examples=50, deadline=None)
@given(int_matrices(max_rows=5, max_cols=5))
def test_rank_exact_matches_float_on_small_integers(rows):
    M = Matrix(rows)
    assert rank_exact(M).rank == np.linalg.matrix_rank(np.array(rows, dtype=float))


def test_rank_float_tolerance_policies():
    M = Matrix(np.diag([1.0, 1e-20]))
    assert rank_float(M).rank == 1
    assert rank_float(M, 'absolute:1e-30').rank == 2
    assert rank_float(M, TolerancePolicy('relative', 1.0)).tolerance > 0
    with pytest.raises(DomainError):
        rank_float(np.array([[np.inf]]))
    with pytest.raises(ValueError):
        TolerancePolicy.parse('sloppy:1')


def test_rank_dispatches_on_backend():
    assert rank(Matrix([[1, 1], [1, 1]])).backend == EXACT
    assert rank(Matrix([[1.0, 1.0], [1.0, 1.0]])).rank == 1


def test_minor_conventions():
    M = Matrix([[1, 2, 3], [4, 5, 6]])
    assert minor(M, (), ()) == 1
    assert minor(M, (0, 1), (0, 2)) == 1 * 6 - 3 * 4
    with pytest.raises(ShapeError):
        minor(M, (0,), (0, 1))


def test_kruskal_rank():
    assert kruskal_rank(Matrix([[1, 0, 1], [0, 1, 1]])) == 2
    # Columns 0 and 2 are parallel
    assert kruskal_rank(Matrix([[1, 0, 2], [0, 1, 0]])) == 1
    assert kruskal_rank(Matrix([[1, 0], [0, 0]])) == 0
    with pytest.raises(BudgetExceededError):
        kruskal_rank(Matrix([[1, 2, 3, 4, 5, 6], [1, 3, 5, 7, 9, 12]]), budget=10)


def test_rank_condition_value():
    M = Matrix([[1, 2], [2, 4]])
    assert rank_condition_value(M, 1) != 0
    assert rank_condition_value(M, 2) == 0
    assert rank_condition_value(M, 3) == 0


def test_cauchy_binet_matches_minor(rng):
    for _ in range(10):
        A = Matrix(rng.integers(-4, 4, size=(4, 5), endpoint=True))
        B = Matrix(rng.integers(-4, 4, size=(3, 5), endpoint=True))
        D = DiagonalMatrix(rng.integers(-3, 3, size=5, endpoint=True).tolist())
        G = matmul_diag(A, D, B)
        for I, J in [((0, 2), (1, 2)), ((1, 2, 3), (0, 1, 2)), ((3,), (0,))]:
            assert cauchy_binet_diag_expand(A, D, B, I, J) == minor(G, I, J)


def test_cauchy_binet_order_above_inner_dimension():
    A = Matrix([[1], [2]])
    B = Matrix([[3], [4]])
    assert cauchy_binet_diag_expand(A, DiagonalMatrix([5]), B, (0, 1), (0, 1)) == 0


@st.composite
def small_matrices(draw, max_rows=4, max_cols=4, bound=2):
    rows = draw(st.integers(1, max_rows))
    cols = draw(st.integers(1, max_cols))
    entries = st.lists(st.integers(-bound, bound), min_size=cols, max_size=cols)
    return Matrix(draw(st.lists(entries, min_size=rows, max_size=rows)))


@settings(max_examples=60, deadline=None)
@given(small_matrices(), st.integers(0, 5))
def test_rank_condition_value_detects_rank(M, r):
    rk = rank_exact(M).rank
    assert (rank_condition_value(M, r) != 0) == (rk >= r)


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_rank_exact_invariant_under_permutation_and_transpose(data):
    M = data.draw(small_matrices(max_rows=5, max_cols=5, bound=3))
    rk = rank_exact(M).rank
    row_perm = data.draw(st.permutations(range(M.rows)))
    col_perm = data.draw(st.permutations(range(M.cols)))
    assert rank_exact(M.submatrix(row_perm, col_perm)).rank == rk
    assert rank_exact(M.T).rank == rk


@settings(max_examples=40, deadline=None)
@given(small_matrices(bound=3), st.integers(0, 3), st.integers(0, 3))
def test_hadamard_power_adds_exponents(M, j, k):
    assert hadamard_power(M, j + k) == hadamard_power(M, j).hadamard(hadamard_power(M, k))


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_khatri_rao_entries(data):
    cols = data.draw(st.integers(1, 4))
    a = data.draw(st.integers(1, 3))
    b = data.draw(st.integers(1, 3))
    entries = st.integers(-4, 4)
    P = Matrix(data.draw(st.lists(
        st.lists(entries, min_size=cols, max_size=cols), min_size=a, max_size=a)))
    Q = Matrix(data.draw(st.lists(
        st.lists(entries, min_size=cols, max_size=cols), min_size=b, max_size=b)))
    K = khatri_rao(P, Q)
    assert K.shape == (a * b, cols)
    for i1 in range(a):
        for i2 in range(b):
            for j in range(cols):
                assert K.data[i1 * b + i2, j] == P.data[i1, j] * Q.data[i2, j]


@settings(max_examples=40, deadline=None)
@given(small_matrices(max_rows=3, max_cols=5))
def test_kruskal_rank_at_most_rank(M):
    assert kruskal_rank(M) <= rank_exact(M).rank


@settings(max_examples=15, deadline=None)
@given(st.data())
def test_cauchy_binet_matches_every_minor(data):
    N = data.draw(st.integers(0, 6))
    a = data.draw(st.integers(1, 3))
    b = data.draw(st.integers(1, 3))
    entries = st.integers(-2, 2)
    A = Matrix.from_columns(
        [data.draw(st.lists(entries, min_size=a, max_size=a)) for _ in range(N)], a)
    B = Matrix.from_columns(
        [data.draw(st.lists(entries, min_size=b, max_size=b)) for _ in range(N)], b)
    D = DiagonalMatrix(data.draw(st.lists(entries, min_size=N, max_size=N)))
    G = matmul_diag(A, D, B)
    for s in range(min(a, b) + 1):
        for I in itertools.combinations(range(a), s):
            for J in itertools.combinations(range(b), s):
                assert cauchy_binet_diag_expand(A, D, B, I, J) == minor(G, I, J)


def test_textio_exact_and_float(tmp_path):
    M = Matrix([[1, Fraction(-2, 3)], [0, 7]])
    path = write_matrix(M, tmp_path / 'm.txt')
    assert read_matrix(path) == M

    fpath = tmp_path / 'f.txt'
    fpath.write_text('# comment\n2 2\n0.5 1\n2 3e-1\n')
    F = read_matrix(fpath)
    assert F.backend == FLOAT
    assert F.data[1, 1] == pytest.approx(0.3)

    bad = tmp_path / 'bad.txt'
    bad.write_text('2 2\n1 2 3\n')
    with pytest.raises(ShapeError):
        read_matrix(bad)


def test_read_vector_forms(tmp_path):
    column = tmp_path / 'y1.txt'
    column.write_text('3 1\n0.5\n-1\n2\n')
    row = tmp_path / 'y2.txt'
    row.write_text('1 3\n0.5 -1.0 2.0\n')
    np.testing.assert_allclose(read_vector(column), [0.5, -1, 2])
    np.testing.assert_allclose(read_vector(row), [0.5, -1, 2])


def test_read_vector_requires_header(tmp_path):
    bare = tmp_path / 'bare.txt'
    bare.write_text('0.5 -1.0 2.0\n')
    with pytest.raises(ShapeError, match='header'):
        read_vector(bare)

    # "2 2" is a valid header, but not for a vector
    square = tmp_path / 'square.txt'
    square.write_text('2 2 0.5 -1 3 4\n')
    with pytest.raises(ShapeError, match='vector file needs'):
        read_vector(square)

    looks_like_header = tmp_path / 'ints.txt'
    looks_like_header.write_text('3 4 5\n')
    with pytest.raises(ShapeError, match='expected 12 entries'):
        read_vector(looks_like_header)
