# -*- coding: utf-8 -*-
import sys
import logging

import numpy as np

from .exceptions import CapacityRefusedError, ConfigError, ShapeError
from .linalg import FLOAT, read_matrix, read_vector
from .network import (
    SolverConfig, capacity_verdict, capacity_verdict_multioutput, get_activation,
    interpolate)
from .utils.io import JSONLinesWriter, dumps_json, write_json
from .utils.misc import make_rng
from .utils.tensorboard import TensorBoard

logger = logging.getLogger('genrank')


def parse_random_spec(value):
    """``'d,n,m'`` -> ``(d, n, m)``."""
    try:
        d, n, m = (int(x) for x in str(value).split(','))
    except ValueError:
        raise ConfigError("random must look like 'd,n,m', got {!r}".format(value))
    if min(d, n, m) < 1:
        raise ConfigError('random: d, n and m must be positive')
    return d, n, m


class Interpolator:
    """Fits ``y`` on ``X`` with a width-``m`` two-layer network by the
    width-doubling construction and saves the parameters."""

    def __init__(self, opts, stream=None):
        self.opts = opts
        self.stream = stream or sys.stdout
        self.act = get_activation(opts.act)
        self.X, self.y, self.m = self.load_data()
        if self.m < 1:
            raise ConfigError('interpolate needs a positive width m')
        self.cfg = SolverConfig(
            tol=opts.solver_tol, max_iter=opts.max_iter, max_restarts=opts.max_restarts)

    def load_data(self):
        o = self.opts
        if o.random:
            d, n, m = parse_random_spec(o.random)
            rng = make_rng(o.seed)
            X = rng.standard_normal((d, n))
            y = rng.standard_normal(n)
            return X, y, (o.m or m)

        if not (o.X and o.y):
            raise ConfigError('interpolate needs both X and y, or random=d,n,m')
        X = read_matrix(o.X, backend=FLOAT).data.astype(np.float64)
        y = read_vector(o.y)
        if y.size != X.shape[1]:
            raise ShapeError('X has {} columns but y has {} entries'.format(
                X.shape[1], y.size))
        return X, y, o.m

    def __call__(self):
        d, n = self.X.shape
        logger.info('interpolate: d={} n={} m={} act={}'.format(d, n, self.m, self.act))
        solved_m = self.m - 1 if (self.opts.pad_odd and self.m % 2) else self.m
        verdict = capacity_verdict(solved_m, n, d, self.act)
        if not verdict.surjective_predicted and not self.opts.force:
            raise CapacityRefusedError(verdict)

        tb = TensorBoard(
            self.opts.tensorboard_dir, 'interpolate-{}'.format(self.act.name))
        trace_writer = None
        if self.opts.trace_out:
            trace_writer = JSONLinesWriter(self.opts.trace_out)

        try:
            result = interpolate(
                self.X, self.y, self.m, self.act, seed=self.opts.seed, cfg=self.cfg,
                force=self.opts.force, pad_odd=self.opts.pad_odd,
                trace_writer=trace_writer, tensorboard=tb)
        finally:
            if trace_writer is not None:
                trace_writer.close()
            tb.close()

        summary = dict(result.summary(), m=self.m, n=n, d=d, act=self.act.name,
                       seed=self.opts.seed, tol=self.opts.tol,
                       verdict=verdict.to_dict(), ok=result.residual < self.opts.tol)
        if self.opts.params_out:
            result.params.save(self.opts.params_out, extra={
                'act': self.act.name, 'residual': result.residual,
                'seed': self.opts.seed})
            logger.info('Parameters saved to {}'.format(self.opts.params_out))

        if self.opts.out:
            write_json(summary, self.opts.out)
        else:
            self.stream.write(dumps_json(summary))

        if not summary['ok']:
            logger.error('Residual {:.3g} is above the tolerance {:g}'.format(
                result.residual, self.opts.tol))
            return 1
        return 0


class CapacityCheck:
    """Prints the capacity verdict of a width/data/dimension triple."""

    def __init__(self, opts, stream=None):
        self.opts = opts
        self.stream = stream or sys.stdout
        if min(opts.m, opts.n, opts.d, opts.q) < 1:
            raise ConfigError('capacity-check needs positive m, n, d and q')
        spec = 'poly:{}'.format(opts.coeffs) if str(opts.coeffs).strip() else opts.act
        self.act = get_activation(spec)

    def __call__(self):
        o = self.opts
        if o.q > 1:
            verdict = capacity_verdict_multioutput(o.m, o.n, o.d, o.q, self.act)
        else:
            verdict = capacity_verdict(o.m, o.n, o.d, self.act)
        document = dict(verdict.to_dict(), m=o.m, n=o.n, d=o.d, q=o.q,
                        act=self.act.name)
        logger.info('capacity-check: {}'.format(verdict.reason))
        if o.out:
            write_json(document, o.out)
        else:
            self.stream.write(dumps_json(document))
        return 0
