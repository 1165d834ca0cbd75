# -*- coding: utf-8 -*-
import logging

import numpy as np
import scipy.linalg

from ..exceptions import (
    PreconditionError, CapacityRefusedError, ConvergenceError, ShapeError)
from ..linalg import rank_float
from ..utils.misc import derive_seed, make_rng
from .activation import get_activation
from .capacity import (
    capacity_verdict, rank_at_initialization, radius_scale)
from .functional import (
    NetworkParams, forward, jacobian_wrt_W, assemble_doubled)

logger = logging.getLogger('genrank')

SOLVER_DEFAULTS = {
    'tol': 1e-8,              # inf-norm of the residual at convergence
    'max_iter': 200,          # Levenberg-Marquardt iterations per solve
    'lambda_init': 1e-3,      # Initial damping
    'lambda_down': 0.3,       # Damping factor after an accepted step
    'lambda_up': 10.,         # Damping factor after a rejected step
    'lambda_max': 1e12,       # Give up on this solve above this damping
    'max_restarts': 5,        # Fresh initializations before giving up
    'eps_steps': 12,          # Schedule 1, 1/2, ..., 2^-(eps_steps-1)
    'safety': 0.5,            # Fraction of the radius of convergence
    'rank_tol': 'relative:1',  # Tolerance of the initial Jacobian rank test
}


class SolverConfig:
    def __init__(self, **kwargs):
        unknown = set(kwargs).difference(SOLVER_DEFAULTS)
        if unknown:
            raise ValueError('Unknown solver options: {}'.format(
                ', '.join(sorted(unknown))))
        self.__dict__.update(SOLVER_DEFAULTS)
        self.__dict__.update(kwargs)

    def eps_schedule(self):
        return [0.5 ** i for i in range(self.eps_steps)]

    def to_dict(self):
        return {key: getattr(self, key) for key in SOLVER_DEFAULTS}

    def __repr__(self):
        return 'SolverConfig({})'.format(
            ', '.join('{}={}'.format(k, v) for k, v in self.to_dict().items()))


class InterpolationResult:
    """Width-``m`` parameters that fit ``y`` and how they were found."""

    def __init__(self, params, residual, eps, restart, rho, trace, padded=False):
        self.params = params
        self.residual = residual
        self.eps = eps
        self.restart = restart
        self.rho = rho
        self.trace = trace
        self.padded = padded

    def summary(self):
        return {
            'residual': self.residual,
            'eps': self.eps,
            'restart': self.restart,
            'rho': self.rho,
            'iterations': len(self.trace),
            'padded': self.padded,
        }

    def __repr__(self):
        return 'InterpolationResult(residual={:.3g}, eps={:g}, restart={})'.format(
            self.residual, self.eps, self.restart)


def levenberg_marquardt(residual_fn, jacobian_fn, w0, cfg, on_iteration=None, tol=None):
    """Damped Gauss-Newton for an underdetermined system ``residual_fn(w) = 0``.

    ``jacobian_fn(w)`` returns the ``n x P`` Jacobian with ``P >= n``; each
    step is ``-J^T (J J^T + lambda I)^{-1} r``. ``tol`` overrides ``cfg.tol``.

    Returns:
        tuple: ``(w, inf-norm of the residual, converged)``.
    """
    tol = cfg.tol if tol is None else tol
    w = np.array(w0, dtype=np.float64)
    r = residual_fn(w)
    cost = float(r @ r)
    lam = cfg.lambda_init

    for it in range(cfg.max_iter):
        res_inf = float(np.max(np.abs(r))) if r.size else 0.0
        if on_iteration is not None:
            on_iteration(it, lam, res_inf)
        if res_inf < tol:
            return w, res_inf, True

        J = jacobian_fn(w)
        gram = J @ J.T
        while True:
            try:
                step = -J.T @ scipy.linalg.solve(
                    gram + lam * np.eye(gram.shape[0]), r, assume_a='pos')
            except (np.linalg.LinAlgError, ValueError):
                step = None
            if step is not None:
                w_new = w + step
                r_new = residual_fn(w_new)
                cost_new = float(r_new @ r_new)
                if np.isfinite(cost_new) and cost_new < cost:
                    w, r, cost = w_new, r_new, cost_new
                    lam = max(lam * cfg.lambda_down, 1e-15)
                    break
            lam *= cfg.lambda_up
            if lam > cfg.lambda_max:
                return w, float(np.max(np.abs(r))), False

    res_inf = float(np.max(np.abs(r)))
    return w, res_inf, res_inf < tol


def pad_odd_width(params, eta=0.0):
    """Appends an idle neuron (zero weights, zero output weight) when the
    width is odd. Returns ``(params, padded)``."""
    if params.m % 2 == 0:
        return params, False
    logger.warning('Width {} is odd: appending a zero-output neuron'.format(params.m))
    W = np.hstack([params.W, np.zeros((params.d, 1))])
    b = np.append(params.b, float(eta))
    v = np.concatenate([params.v, np.zeros((1,) + params.v.shape[1:])])
    return NetworkParams(W, b, v), True


def interpolate(X, y, m, act, seed=0, cfg=None, force=False, pad_odd=False,
                trace_writer=None, tensorboard=None):
    """Finds width-``m`` parameters with ``forward(params, X) = y``.

    Half of the neurons start from ``W0`` (scaled into the radius of
    convergence) and are moved by Levenberg-Marquardt so that
    ``psi(X^T W + eta) v0`` hits ``F(W0) + eps (y - F(W0))``; the other half
    keep ``W0`` and cancel ``F(W0)`` in the assembled network.

    Arguments:
        X(ndarray): ``d x n`` data.
        y(ndarray): ``n`` targets.
        m(int): Even width.
        act(str or Activation): Activation.
        seed(int): Master seed; restart ``i`` uses ``derive_seed(seed, i)``.
        cfg(SolverConfig, optional): Solver options.
        force(bool): Run even when the capacity verdict is negative.
        pad_odd(bool): Accept odd ``m`` by solving with ``m - 1`` neurons and
            appending an idle one.
        trace_writer(JSONLinesWriter, optional): Receives one record per
            iteration.
        tensorboard(TensorBoard, optional): Receives residual scalars.

    Raises:
        PreconditionError, CapacityRefusedError, ConvergenceError
    """
    cfg = cfg or SolverConfig()
    act = get_activation(act)
    X = np.atleast_2d(np.asarray(X, dtype=np.float64))
    y = np.asarray(y, dtype=np.float64).reshape(-1)
    d, n = X.shape
    if y.size != n:
        raise ShapeError('y has {} entries for {} data points'.format(y.size, n))

    if m % 2:
        if not pad_odd:
            raise PreconditionError('Width m={} must be even to pair neurons'.format(m))
        result = interpolate(X, y, m - 1, act, seed, cfg, force, False,
                             trace_writer, tensorboard)
        result.params, result.padded = pad_odd_width(result.params, act.eta)
        return result

    verdict = capacity_verdict(m, n, d, act)
    if not verdict.surjective_predicted:
        if not force:
            raise CapacityRefusedError(verdict)
        logger.warning('Forcing interpolation despite verdict {}'.format(verdict.reason))

    half = m // 2
    v0 = np.ones(half)
    b_half = np.full(half, act.eta)
    trace = []

    for restart in range(cfg.max_restarts):
        rseed = derive_seed(seed, restart)
        rank, rho, W0 = rank_at_initialization(
            X, half, act, rseed, cfg.rank_tol, cfg.safety)
        if rank < n:
            logger.info('restart {}: Jacobian rank {} < {} at initialization'.format(
                restart, rank, n))
            continue

        base = NetworkParams(W0, b_half, v0)
        F0 = forward(base, X, act)

        for eps in cfg.eps_schedule():
            target = F0 + eps * (y - F0)

            def residual_fn(w):
                return forward(base.with_vec_W(w), X, act) - target

            def jacobian_fn(w):
                return jacobian_wrt_W(base.with_vec_W(w), X, act).T

            def on_iteration(it, lam, res):
                record = {'restart': restart, 'eps': eps, 'iteration': it,
                          'lambda': lam, 'residual': res}
                trace.append(record)
                if trace_writer is not None:
                    trace_writer.write(record)
                if tensorboard is not None:
                    tensorboard.log_scalar('solver/residual', res, len(trace))

            w, res, converged = levenberg_marquardt(
                residual_fn, jacobian_fn, base.vec_W(), cfg, on_iteration,
                tol=cfg.tol * eps)
            if not converged:
                logger.debug('restart {} eps={:g}: stalled at {:.3g}'.format(
                    restart, eps, res))
                continue

            W = base.with_vec_W(w).W
            params = assemble_doubled(W, W0, act.eta, v0, eps)
            residual = float(np.max(np.abs(forward(params, X, act) - y)))
            logger.info('restart {}: accepted eps={:g}, residual {:.3g}'.format(
                restart, eps, residual))
            return InterpolationResult(params, residual, eps, restart, rho, trace)

        logger.info('restart {}: no eps in the schedule converged'.format(restart))

    raise ConvergenceError(
        'Interpolation did not converge within {} restarts'.format(cfg.max_restarts),
        trace=trace)


class MultiOutputResult:
    def __init__(self, params, residuals, mode):
        self.params = params
        self.residuals = residuals
        self.mode = mode

    @property
    def residual(self):
        return max(self.residuals)

    def __repr__(self):
        return 'MultiOutputResult(mode={}, residual={:.3g})'.format(
            self.mode, self.residual)


def _split_neurons(X, Y, m, act, seed, cfg):
    d, n = X.shape
    q = Y.shape[1]
    if m % q:
        raise PreconditionError('split_neurons needs q | m, got m={} q={}'.format(m, q))
    width = m // q
    if width % 2 or width * d < 2 * n:
        raise PreconditionError(
            'split_neurons needs an even m/q={} with (m/q)d >= 2n={}'.format(
                width, 2 * n))

    blocks, residuals = [], []
    for col in range(q):
        result = interpolate(X, Y[:, col], width, act, derive_seed(seed, col), cfg)
        blocks.append(result.params)
        residuals.append(result.residual)

    W = np.hstack([p.W for p in blocks])
    b = np.concatenate([p.b for p in blocks])
    V = scipy.linalg.block_diag(*[p.v[:, None] for p in blocks])
    return NetworkParams(W, b, V), residuals


def _solve_V(X, Y, m, act, seed, cfg):
    d, n = X.shape
    if m < n:
        raise PreconditionError('solve_V needs m >= n, got m={} n={}'.format(m, n))

    for restart in range(cfg.max_restarts):
        rng = make_rng(derive_seed(seed, restart))
        W = rng.standard_normal((d, m))
        W = W / radius_scale(W.T @ X, act, cfg.safety)
        b = np.full(m, act.eta)
        H = act(X.T @ W + b)
        rank = rank_float(H, cfg.rank_tol).rank
        if rank < n:
            logger.info('solve_V restart {}: feature rank {} < {}'.format(
                restart, rank, n))
            continue
        V = scipy.linalg.lstsq(H, Y)[0]
        residuals = np.max(np.abs(H @ V - Y), axis=0).tolist()
        return NetworkParams(W, b, V), residuals

    raise ConvergenceError('solve_V found no full-rank features in {} restarts'.format(
        cfg.max_restarts))


def interpolate_multioutput(X, Y, m, act, mode='split_neurons', seed=0, cfg=None):
    """Fits ``q`` outputs ``Y`` (``n x q``).

    ``split_neurons`` interpolates each output with its own ``m/q`` neurons
    and stacks the output weights block-diagonally. ``solve_V`` draws the
    first layer at random and solves the output layer by least squares.
    """
    cfg = cfg or SolverConfig()
    act = get_activation(act)
    X = np.atleast_2d(np.asarray(X, dtype=np.float64))
    Y = np.asarray(Y, dtype=np.float64)
    if Y.ndim == 1:
        Y = Y[:, None]
    if Y.shape[0] != X.shape[1]:
        raise ShapeError('Y has {} rows for {} data points'.format(
            Y.shape[0], X.shape[1]))

    if mode == 'split_neurons':
        params, residuals = _split_neurons(X, Y, m, act, seed, cfg)
    elif mode == 'solve_V':
        params, residuals = _solve_V(X, Y, m, act, seed, cfg)
    else:
        raise ValueError('Unknown multi-output mode {!r}'.format(mode))
    return MultiOutputResult(params, residuals, mode)
