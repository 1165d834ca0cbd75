# -*- coding: utf-8 -*-
import math
from fractions import Fraction

import numpy as np
import scipy.special
import torch
import torch.nn.functional as F

from ..utils.misc import parse_rationals
from .series import (
    PowerSeries, tanh_series, logistic_series, arctan_series, gelu_series)

RECENTER = 'recenter'
SUBTRACT = 'subtract'


class Activation:
    """A scalar activation ``psi`` with its derivative and power series.

    Arguments:
        name(str): Display name (``tanh``, ``poly:0,0,0,1``, ...).
        fn(callable): numpy ``psi``.
        dfn(callable): numpy ``psi'``.
        series(callable): ``n -> PowerSeries`` of ``psi(eta + x)`` with ``n``
            known coefficients.
        eta(float): Expansion point where ``psi`` is real analytic.
        radius(float): Radius of convergence of the series at ``eta``
            (``math.inf`` for entire functions).
        torch_fn(callable, optional): torch ``psi``, needed for autograd.
        coefficients(list, optional): Set for polynomials only, the full
            coefficient vector of ``psi(eta + x)``.
    """

    def __init__(self, name, fn, dfn, series, eta=0.0, radius=math.inf,
                 torch_fn=None, coefficients=None):
        self.name = name
        self.fn = fn
        self.dfn = dfn
        self.series = series
        self.eta = float(eta)
        self.radius = float(radius)
        self.torch_fn = torch_fn
        self.coefficients = coefficients

    @property
    def is_polynomial(self):
        return self.coefficients is not None

    def __call__(self, x):
        return self.fn(np.asarray(x, dtype=float))

    def derivative(self, x):
        return self.dfn(np.asarray(x, dtype=float))

    def torch(self, x):
        if self.torch_fn is None:
            raise NotImplementedError('{} has no torch implementation'.format(self.name))
        return self.torch_fn(x)

    def phi(self, x, mode=RECENTER):
        """The derivative as used by the Jacobian rank tests: ``psi'(eta + x)``
        (``recenter``) or ``psi'(x) - eta`` (``subtract``)."""
        if mode == RECENTER:
            return self.derivative(np.asarray(x, dtype=float) + self.eta)
        if mode == SUBTRACT:
            return self.derivative(x) - self.eta
        raise ValueError('Unknown phi mode {!r}'.format(mode))

    def value_coefficients(self, K):
        """Taylor coefficients ``c_0..c_K`` of ``psi`` at ``eta``."""
        if self.is_polynomial:
            return [self.coefficients[k] if k < len(self.coefficients) else Fraction(0)
                    for k in range(K + 1)]
        return list(self.series(K + 1).coeffs)

    def derivative_coefficients(self, K):
        """Taylor coefficients ``c_0..c_K`` of ``psi'`` at ``eta``."""
        if self.is_polynomial:
            deriv = PowerSeries(self.coefficients).derivative().coeffs
            return [deriv[k] if k < len(deriv) else Fraction(0) for k in range(K + 1)]
        return list(self.series(K + 2).derivative().coeffs)

    def coefficient_stream(self, derivative=False):
        """Iterates Taylor coefficients at ``eta``. Finite for polynomials,
        unbounded otherwise."""
        if self.is_polynomial:
            coeffs = PowerSeries(self.coefficients)
            if derivative:
                coeffs = coeffs.derivative()
            yield from coeffs.coeffs
            return

        n = 16
        emitted = 0
        while True:
            coeffs = self.derivative_coefficients(n) if derivative else \
                self.value_coefficients(n)
            for c in coeffs[emitted:]:
                yield c
            emitted = len(coeffs)
            n *= 2

    def __repr__(self):
        return 'Activation({}, eta={:g}, radius={:g})'.format(
            self.name, self.eta, self.radius)


def _tanh():
    return Activation(
        'tanh', np.tanh, lambda x: 1.0 - np.tanh(x) ** 2, tanh_series,
        radius=math.pi / 2, torch_fn=torch.tanh)


def _logistic():
    def dfn(x):
        s = scipy.special.expit(x)
        return s * (1.0 - s)
    return Activation(
        'logistic', scipy.special.expit, dfn, logistic_series,
        radius=math.pi, torch_fn=torch.sigmoid)


def _arctan():
    return Activation(
        'arctan', np.arctan, lambda x: 1.0 / (1.0 + x ** 2), arctan_series,
        radius=1.0, torch_fn=torch.atan)


def _gelu():
    def fn(x):
        return x * scipy.special.ndtr(x)

    def dfn(x):
        return scipy.special.ndtr(x) + x * np.exp(-0.5 * x ** 2) / math.sqrt(2 * math.pi)
    return Activation('gelu', fn, dfn, gelu_series, torch_fn=F.gelu)


def polynomial(coeffs, eta=0):
    """``psi(x) = sum_k coeffs[k] x^k`` expanded at ``eta``."""
    coeffs = parse_rationals(coeffs)
    floats = np.array([float(c) for c in coeffs])
    dfloats = np.polynomial.polynomial.polyder(floats) if len(floats) > 1 else \
        np.zeros(1)

    def torch_fn(x):
        out = torch.zeros_like(x)
        for c in reversed(floats):
            out = out * x + float(c)
        return out

    shifted = PowerSeries(coeffs).shift(eta)
    # Trailing zeros carry no support
    trimmed = list(shifted.coeffs)
    while len(trimmed) > 1 and trimmed[-1] == 0:
        trimmed.pop()

    def series(n):
        return PowerSeries((trimmed + [0] * n)[:n])

    return Activation(
        'poly:{}'.format(','.join(str(c) for c in coeffs)),
        lambda x: np.polynomial.polynomial.polyval(x, floats),
        lambda x: np.polynomial.polynomial.polyval(x, dfloats),
        series, eta=float(Fraction(eta)), torch_fn=torch_fn, coefficients=trimmed)


def custom(name, fn, dfn, series, eta=0.0, radius=math.inf, torch_fn=None):
    return Activation(name, fn, dfn, series, eta=eta, radius=radius,
                      torch_fn=torch_fn)


ACTIVATIONS = {
    'tanh': _tanh,
    'logistic': _logistic,
    'sigmoid': _logistic,
    'arctan': _arctan,
    'gelu': _gelu,
    'cubic': lambda: polynomial('0,0,0,1'),
}


def get_activation(spec):
    """Resolves ``'tanh'``, ``'gelu'``, ``'poly:0,1,0,1'``, ... or passes an
    ``Activation`` through."""
    if isinstance(spec, Activation):
        return spec
    spec = str(spec).strip()
    if spec.startswith('poly:'):
        return polynomial(spec[len('poly:'):])
    try:
        return ACTIVATIONS[spec]()
    except KeyError:
        raise ValueError(
            'Unknown activation {!r}, choose from {} or poly:c0,c1,...'.format(
                spec, ', '.join(sorted(ACTIVATIONS))))
