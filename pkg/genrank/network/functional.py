# -*- coding: utf-8 -*-
import json

import numpy as np

from ..exceptions import ShapeError
from ..linalg import khatri_rao_array
from ..utils.io import write_json
from .activation import get_activation


class NetworkParams:
    """Parameters ``(W, b, v)`` of ``h(X) = psi(X^T W + 1 b^T) v``.

    Arguments:
        W(ndarray): ``d x m`` first layer weights, column ``i`` is neuron ``i``.
        b(ndarray): ``m`` biases.
        v(ndarray): ``m`` output weights, or ``m x q`` for ``q`` outputs.
    """

    def __init__(self, W, b, v):
        self.W = np.atleast_2d(np.asarray(W, dtype=np.float64))
        self.b = np.asarray(b, dtype=np.float64).reshape(-1)
        self.v = np.asarray(v, dtype=np.float64)
        if self.b.shape != (self.m,) or self.v.shape[0] != self.m or self.v.ndim > 2:
            raise ShapeError('NetworkParams: W {} b {} v {} are inconsistent'.format(
                self.W.shape, self.b.shape, self.v.shape))

    @property
    def d(self):
        return self.W.shape[0]

    @property
    def m(self):
        return self.W.shape[1]

    @property
    def q(self):
        return 1 if self.v.ndim == 1 else self.v.shape[1]

    def vec_W(self):
        """Neuron-major flattening: entries of column ``i`` are contiguous."""
        return self.W.T.reshape(-1).copy()

    def with_vec_W(self, w):
        return NetworkParams(np.asarray(w).reshape(self.m, self.d).T, self.b, self.v)

    def flat(self):
        """``[vec(W); b; v]``, the coordinates of ``jacobian_full``."""
        return np.concatenate([self.vec_W(), self.b, self.v.reshape(-1)])

    @classmethod
    def from_flat(cls, theta, d, m):
        theta = np.asarray(theta, dtype=np.float64)
        W = theta[:d * m].reshape(m, d).T
        return cls(W, theta[d * m:d * m + m], theta[d * m + m:])

    def to_dict(self):
        return {
            'd': self.d,
            'm': self.m,
            'q': self.q,
            'W': {'shape': list(self.W.shape), 'data': self.W.reshape(-1).tolist()},
            'b': {'shape': list(self.b.shape), 'data': self.b.tolist()},
            'v': {'shape': list(self.v.shape), 'data': self.v.reshape(-1).tolist()},
        }

    @classmethod
    def from_dict(cls, dict_):
        def _array(entry):
            return np.array(entry['data'], dtype=np.float64).reshape(entry['shape'])
        return cls(_array(dict_['W']), _array(dict_['b']), _array(dict_['v']))

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))

    def save(self, path, extra=None):
        obj = self.to_dict()
        if extra:
            obj.update(extra)
        return write_json(obj, path)

    @classmethod
    def load(cls, path):
        with open(str(path)) as f:
            return cls.from_dict(json.load(f))

    def __repr__(self):
        return 'NetworkParams(d={}, m={}, q={})'.format(self.d, self.m, self.q)


def _check_data(params, X):
    X = np.atleast_2d(np.asarray(X, dtype=np.float64))
    if X.shape[0] != params.d:
        raise ShapeError('X has {} rows, network expects d={}'.format(
            X.shape[0], params.d))
    return X


def preactivation(params, X):
    """``W^T X + b 1^T`` (``m x n``)."""
    X = _check_data(params, X)
    return params.W.T @ X + params.b[:, None]


def forward(params, X, act):
    """``psi(X^T W + 1 b^T) v``; ``n`` outputs (``n x q`` for matrix ``v``)."""
    act = get_activation(act)
    return act(preactivation(params, X)).T @ params.v


def jacobian_wrt_W(params, X, act):
    """Transposed Jacobian of ``forward`` with respect to ``vec(W)``:
    ``diag(v) psi'(W^T X + b 1^T) ⊙ X``, of shape ``md x n``. Row ``i*d + l``
    belongs to ``W[l, i]``."""
    act = get_activation(act)
    X = _check_data(params, X)
    if params.v.ndim != 1:
        raise ShapeError('jacobian_wrt_W needs a single output network')
    scaled = params.v[:, None] * act.derivative(preactivation(params, X))
    return khatri_rao_array(scaled, X)


def finite_difference_jacobian(fn, w, step=1e-5):
    """Central differences of ``fn`` at ``w``; shape ``(len(fn(w)), len(w))``."""
    w = np.asarray(w, dtype=np.float64)
    cols = []
    for idx in range(w.size):
        e = np.zeros_like(w)
        e[idx] = step
        cols.append((np.asarray(fn(w + e)) - np.asarray(fn(w - e))) / (2 * step))
    return np.stack(cols, axis=1)


def assemble_doubled(W, W0, eta, v0, eps):
    """Width-doubled network ``[W W0]``, biases ``eta``, output weights
    ``[v0/eps; -(1-eps) v0/eps]``."""
    v0 = np.asarray(v0, dtype=np.float64)
    W = np.hstack([np.asarray(W, dtype=np.float64), np.asarray(W0, dtype=np.float64)])
    v = np.concatenate([v0 / eps, -(1.0 - eps) * v0 / eps])
    return NetworkParams(W, np.full(W.shape[1], float(eta)), v)


def doubled_output(W, W0, X, act, eta, v0, eps):
    """``(1/eps) F(W) - ((1-eps)/eps) F(W0)`` with ``F(W) = psi(X^T W + eta) v0``."""
    def F(weights):
        return forward(NetworkParams(weights, np.full(weights.shape[1], float(eta)), v0),
                       X, act)
    return F(np.asarray(W, dtype=np.float64)) / eps - \
        (1.0 - eps) / eps * F(np.asarray(W0, dtype=np.float64))
