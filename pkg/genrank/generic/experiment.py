# -*- coding: utf-8 -*-
import logging
from fractions import Fraction

import numpy as np

from ..linalg import (
    Matrix, FLOAT, khatri_rao_array, rank_exact, rank_float, kruskal_rank,
    TolerancePolicy)
from ..decomp import (
    matmul_target, power_target, poly_target, khatri_power_target,
    khatri_poly_target)
from ..utils.misc import derive_seed
from .laws import predicted_rank
from .sampling import Sampler, sample_generic_pair

logger = logging.getLogger('genrank')

REPORT_FIELDS = [
    'law', 'd', 'k', 'coeffs', 'act', 'm', 'n', 'sampler', 'backend',
    'predicted', 'min_empirical', 'max_empirical', 'kruskal_checked',
    'min_kruskal', 'trials', 'mismatch_count', 'master_seed', 'mismatch_seeds',
]


def blockdiag_b(B, d):
    """Keeps only the block-diagonal part of ``B``: row ``j`` retains the
    entry in column ``j // (n/d)``. Needs ``d | n``."""
    n = B.rows
    if B.cols != d or n % d:
        raise ValueError('blockdiag_b: need an n x d matrix with d | n, got {}'.format(
            B.shape))
    block = n // d
    zero = 0.0 if B.backend == FLOAT else Fraction(0)
    arr = np.array(B.data, copy=True)
    for j in range(n):
        for ell in range(d):
            if ell != j // block:
                arr[j, ell] = zero
    return Matrix(arr, backend=B.backend)


def _float_target(law, A, B):
    G = A.data @ B.data.T
    if law.kind == 'matmul':
        H = G
    elif law.kind in ('hadamard_power', 'khatri_power'):
        H = G ** law.k
    elif law.kind in ('poly', 'khatri_poly', 'zhang_blockdiag'):
        H = np.zeros_like(G)
        for k in law.coeffs.support():
            H = H + float(law.coeffs[k]) * G ** k
    elif law.derivative:
        H = law.act.derivative(G + law.act.eta)
    else:
        H = law.act(G + law.act.eta)

    if law.is_khatri:
        H = khatri_rao_array(B.data.T, H)
    return Matrix(H, backend=FLOAT)


def build_target(law, A, B):
    """The matrix whose rank ``law`` predicts, over the backend of ``A``.

    Exact analytic laws use the truncated Taylor polynomial of degree
    ``analytic_truncation_degree``; float ones evaluate the function itself.
    """
    m, n = A.rows, B.rows
    if law.kind == 'zhang_blockdiag':
        predicted_rank(law, m, n)
        B = blockdiag_b(B, law.d)

    if A.backend == FLOAT:
        return _float_target(law, A, B)

    if law.kind == 'matmul':
        return matmul_target(A, B)
    if law.kind == 'hadamard_power':
        return power_target(A, B, law.k)
    if law.kind == 'poly':
        return poly_target(A, B, law.coeffs)
    if law.kind == 'khatri_power':
        return khatri_power_target(A, B, law.k)
    if law.kind in ('khatri_poly', 'zhang_blockdiag'):
        return khatri_poly_target(A, B, law.coeffs)
    coeffs = law.truncated_coeffs(m, n)
    if law.kind == 'analytic':
        return poly_target(A, B, coeffs)
    return khatri_poly_target(A, B, coeffs)


class RankReport:
    """Outcome of ``trials`` randomized rank checks for one grid cell."""

    def __init__(self, law, m, n, predicted, sampler, master_seed,
                 tolerance=None, kruskal_checked=False):
        self.law = law
        self.m = m
        self.n = n
        self.predicted = predicted
        self.sampler = sampler
        self.master_seed = master_seed
        self.tolerance = tolerance
        self.kruskal_checked = kruskal_checked
        self.empirical_ranks = []
        self.kruskal_ranks = []
        self.mismatches = []

    @property
    def d(self):
        return self.law.d

    @property
    def trials(self):
        return len(self.empirical_ranks)

    @property
    def mismatch_count(self):
        return len(self.mismatches)

    @property
    def ok(self):
        return not self.mismatches

    def add_trial(self, trial, seed, rank, kruskal=None):
        self.empirical_ranks.append(rank)
        if kruskal is not None:
            self.kruskal_ranks.append(kruskal)
        if rank != self.predicted or (kruskal is not None and kruskal != self.predicted):
            self.mismatches.append(
                {'trial': trial, 'seed': seed, 'rank': rank, 'kruskal': kruskal})

    def to_dict(self):
        return {
            'law': self.law.to_dict(),
            'm': self.m,
            'n': self.n,
            'sampler': str(self.sampler),
            'backend': self.sampler.backend,
            'tolerance': str(self.tolerance) if self.tolerance else None,
            'predicted': self.predicted,
            'trials': self.trials,
            'empirical_ranks': self.empirical_ranks,
            'kruskal_checked': self.kruskal_checked,
            'kruskal_ranks': self.kruskal_ranks,
            'master_seed': self.master_seed,
            'mismatches': self.mismatches,
        }

    def csv_row(self):
        law = self.law.to_dict()
        return {
            'law': law['kind'],
            'd': self.d,
            'k': '' if law['k'] is None else law['k'],
            'coeffs': law['coeffs'] or '',
            'act': law['act'] or '',
            'm': self.m,
            'n': self.n,
            'sampler': str(self.sampler),
            'backend': self.sampler.backend,
            'predicted': self.predicted,
            'min_empirical': min(self.empirical_ranks, default=''),
            'max_empirical': max(self.empirical_ranks, default=''),
            'kruskal_checked': int(self.kruskal_checked),
            'min_kruskal': min(self.kruskal_ranks, default=''),
            'trials': self.trials,
            'mismatch_count': self.mismatch_count,
            'master_seed': self.master_seed,
            'mismatch_seeds': ';'.join(str(x['seed']) for x in self.mismatches),
        }

    def __repr__(self):
        return ('RankReport({!r}, m={}, n={}, predicted={}, trials={}, '
                'mismatches={})').format(
            self.law, self.m, self.n, self.predicted, self.trials, self.mismatch_count)


def trial_seed(master_seed, law, m, n, trial):
    """Seed of one trial; depends only on the cell and the trial index."""
    return derive_seed(master_seed, law.d, m, n, trial)


def run_trial(law, m, n, seed, sampler='integer:100', tol_policy=None,
              check_kruskal=False, budget=None):
    """Samples one ``(A, B)`` pair from ``seed`` and returns
    ``(rank, kruskal_rank or None)`` of its target matrix."""
    A, B = sample_generic_pair(m, n, law.d, sampler, seed)
    target = build_target(law, A, B)
    if target.is_exact:
        rank = rank_exact(target).rank
        kruskal = kruskal_rank(target, budget) if check_kruskal else None
    else:
        rank = rank_float(target, tol_policy).rank
        kruskal = None
    return rank, kruskal


def empirical_rank_experiment(law, m, n, trials=100, sampler='integer:100',
                              check_kruskal=False, seed=0, tol_policy=None,
                              budget=None):
    """Compares the exact (or numerical) rank of ``trials`` random targets
    against ``predicted_rank``. Mismatching trials are recorded with their
    seeds, never raised."""
    sampler = Sampler.parse(sampler)
    tol_policy = TolerancePolicy.parse(tol_policy or 'relative:1')
    if check_kruskal and sampler.kind != 'integer':
        logger.warning('Kruskal rank needs the exact backend, skipping for {}'.format(
            sampler))
        check_kruskal = False

    report = RankReport(
        law, m, n, predicted_rank(law, m, n), sampler, seed,
        tolerance=tol_policy if sampler.kind != 'integer' else None,
        kruskal_checked=check_kruskal)

    for trial in range(trials):
        tseed = trial_seed(seed, law, m, n, trial)
        rank, kruskal = run_trial(law, m, n, tseed, sampler, tol_policy,
                                  check_kruskal, budget)
        report.add_trial(trial, tseed, rank, kruskal)
        if rank != report.predicted:
            logger.debug('{!r} m={} n={} trial={} seed={}: rank {} != {}'.format(
                law, m, n, trial, tseed, rank, report.predicted))

    return report
