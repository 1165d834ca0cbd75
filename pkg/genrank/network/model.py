# -*- coding: utf-8 -*-
import numpy as np
import torch
from torch import nn

from .activation import get_activation
from .functional import NetworkParams


class TwoLayerNetwork(nn.Module):
    """``h(X) = psi(X^T W + 1 b^T) v`` as a torch module (float64).

    Arguments:
        d(int): Input dimension.
        m(int): Width.
        act(str or Activation): Activation with a torch implementation.
    """

    def __init__(self, d, m, act):
        super().__init__()
        self.d = d
        self.m = m
        self.act = get_activation(act)
        self.W = nn.Parameter(torch.zeros(d, m, dtype=torch.float64))
        self.b = nn.Parameter(torch.zeros(m, dtype=torch.float64))
        self.v = nn.Parameter(torch.zeros(m, dtype=torch.float64))

    def __repr__(self):
        return 'TwoLayerNetwork(d={}, m={}, act={})'.format(self.d, self.m, self.act.name)

    @classmethod
    def from_params(cls, params, act):
        net = cls(params.d, params.m, act)
        with torch.no_grad():
            net.W.copy_(torch.from_numpy(params.W))
            net.b.copy_(torch.from_numpy(params.b))
            net.v.copy_(torch.from_numpy(params.v))
        return net

    def to_params(self):
        return NetworkParams(self.W.detach().numpy().copy(),
                             self.b.detach().numpy().copy(),
                             self.v.detach().numpy().copy())

    @staticmethod
    def functional_forward(act, X, W, b, v):
        return act.torch(X.t() @ W + b) @ v

    def forward(self, X):
        return self.functional_forward(self.act, X, self.W, self.b, self.v)


def jacobian_full(params, X, act):
    """Transposed Jacobian of the outputs with respect to all parameters.

    Rows follow ``NetworkParams.flat()``: ``vec(W)`` (neuron-major, ``md``
    rows), then ``b`` (``m`` rows), then ``v`` (``m`` rows); one column per
    data point.
    """
    act = get_activation(act)
    d, m = params.d, params.m
    Xt = torch.from_numpy(np.ascontiguousarray(X, dtype=np.float64))

    def outputs(theta):
        W = theta[:d * m].reshape(m, d).t()
        b = theta[d * m:d * m + m]
        v = theta[d * m + m:]
        return TwoLayerNetwork.functional_forward(act, Xt, W, b, v)

    theta = torch.from_numpy(params.flat())
    J = torch.autograd.functional.jacobian(outputs, theta)
    return J.t().detach().numpy()
