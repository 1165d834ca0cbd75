# -*- coding: utf-8 -*-
import logging

import numpy as np

from ..combinat import multiset_count
from ..linalg import khatri_rao_array, rank_float
from ..utils.misc import make_rng
from .activation import get_activation, RECENTER

logger = logging.getLogger('genrank')

# Verdict reasons, mutually exclusive
SATISFIED = 'thm61_satisfied'
SARD_PARAM_COUNT = 'sard_param_count'
SARD_POLY_RANK = 'sard_poly_rank'
M_ODD = 'm_odd'
DEGREE_CONDITION_FAILED = 'degree_condition_failed'
WIDTH_INSUFFICIENT = 'width_insufficient'
NOT_DIVISIBLE = 'not_divisible'


class CapacityVerdict:
    """Whether a two-layer network of width ``m`` is predicted to reach every
    target in ``R^n`` for generic data in ``R^{d x n}``."""

    def __init__(self, surjective_predicted, reason, bound_values, conditions=None):
        self.surjective_predicted = surjective_predicted
        self.reason = reason
        self.bound_values = bound_values
        self.conditions = conditions or {}

    def __bool__(self):
        return self.surjective_predicted

    def to_dict(self):
        return {
            'surjective_predicted': self.surjective_predicted,
            'reason': self.reason,
            'bound_values': self.bound_values,
            'conditions': self.conditions,
        }

    def __repr__(self):
        return 'CapacityVerdict({}, reason={})'.format(
            self.surjective_predicted, self.reason)


def polynomial_rank_bound(d, act):
    """``sum_{k>=1, c_k != 0} multiset_count(d, k)`` over the Taylor
    coefficients of a polynomial ``psi`` at ``eta``; ``None`` otherwise."""
    act = get_activation(act)
    if not act.is_polynomial:
        return None
    return sum(multiset_count(d, k)
               for k, c in enumerate(act.coefficients) if k >= 1 and c != 0)


def capacity_verdict(m, n, d, act):
    """Checks, in order: the parameter-count lower bound ``m(d+2) < n``, the
    low-degree polynomial lower bound, an even width, the polynomial degree
    condition and ``md >= 2n``. The first one that fails names the reason."""
    poly_rank = polynomial_rank_bound(d, act)
    bounds = {
        'md': m * d,
        'two_n': 2 * n,
        'param_count': m * (d + 2),
        'n_minus_2m': n - 2 * m,
        'poly_rank_bound': poly_rank,
    }
    conditions = {
        'param_count_ok': m * (d + 2) >= n,
        'poly_rank_ok': poly_rank is None or poly_rank >= n - 2 * m,
        'm_even': m % 2 == 0,
        'degree_condition': poly_rank is None or poly_rank >= n,
        'width_ok': m * d >= 2 * n,
    }

    if not conditions['param_count_ok']:
        reason = SARD_PARAM_COUNT
    elif not conditions['poly_rank_ok']:
        reason = SARD_POLY_RANK
    elif not conditions['m_even']:
        reason = M_ODD
    elif not conditions['degree_condition']:
        reason = DEGREE_CONDITION_FAILED
    elif not conditions['width_ok']:
        reason = WIDTH_INSUFFICIENT
    else:
        reason = SATISFIED
    return CapacityVerdict(reason == SATISFIED, reason, bounds, conditions)


def capacity_verdict_multioutput(m, n, d, q, act):
    """Verdict for ``q`` outputs realized by splitting the width into ``q``
    independent blocks of ``m/q`` neurons."""
    bounds = {'param_count': m * (d + q + 1), 'nq': n * q}
    if m * (d + q + 1) < n * q:
        return CapacityVerdict(False, SARD_PARAM_COUNT, bounds)
    if m % q:
        return CapacityVerdict(False, NOT_DIVISIBLE, bounds)
    verdict = capacity_verdict(m // q, n, d, act)
    verdict.bound_values.update(bounds)
    return verdict


def radius_scale(Z, act, safety=0.5):
    """``rho >= 1`` such that ``|Z / rho| <= safety * radius`` entrywise."""
    if not np.isfinite(act.radius) or Z.size == 0:
        return 1.0
    return max(1.0, float(np.max(np.abs(Z))) / (safety * act.radius))


def rank_at_initialization(X, m, act, seed=0, tol_policy=None, safety=0.5,
                           phi_mode=RECENTER):
    """Rank of ``phi(W0^T X / rho) ⊙ X`` for a standard normal ``W0``.

    Returns:
        tuple: ``(rank, rho, W0 / rho)``; the scaled weights are the starting
            point of the interpolation solver.
    """
    act = get_activation(act)
    X = np.atleast_2d(np.asarray(X, dtype=np.float64))
    d = X.shape[0]
    zero_cols = np.flatnonzero(np.linalg.norm(X, axis=0) == 0)
    if zero_cols.size:
        logger.warning('Data has zero columns {}: full rank is impossible'.format(
            zero_cols.tolist()))

    W0 = make_rng(seed).standard_normal((d, m))
    Z = W0.T @ X
    rho = radius_scale(Z, act, safety)
    M = khatri_rao_array(act.phi(Z / rho, mode=phi_mode), X)
    result = rank_float(M, tol_policy)
    logger.debug('rank at init: m={} rho={:.3g} rank={}/{}'.format(
        m, rho, result.rank, X.shape[1]))
    return result.rank, rho, W0 / rho
