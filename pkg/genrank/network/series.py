# -*- coding: utf-8 -*-
"""Truncated power series with exact rational coefficients."""
import math
from fractions import Fraction


class PowerSeries:
    """``sum_k coeffs[k] x^k`` known up to (and including) degree ``len - 1``.

    Arithmetic between series truncates to the shorter of the operands.
    """

    __slots__ = ('coeffs',)

    def __init__(self, coeffs):
        self.coeffs = tuple(Fraction(c) for c in coeffs)
        if not self.coeffs:
            raise ValueError('PowerSeries needs at least one coefficient')

    @classmethod
    def monomial(cls, k, n, c=1):
        coeffs = [0] * n
        if k < n:
            coeffs[k] = c
        return cls(coeffs)

    @classmethod
    def exp(cls, n):
        return cls(Fraction(1, math.factorial(k)) for k in range(n))

    @classmethod
    def sinh(cls, n):
        return cls(Fraction(k % 2, math.factorial(k)) for k in range(n))

    @classmethod
    def cosh(cls, n):
        return cls(Fraction((k + 1) % 2, math.factorial(k)) for k in range(n))

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, k):
        return self.coeffs[k]

    def _pair(self, other):
        if not isinstance(other, PowerSeries):
            other = PowerSeries([other] + [0] * (len(self) - 1))
        n = min(len(self), len(other))
        return self.coeffs[:n], other.coeffs[:n]

    def __add__(self, other):
        a, b = self._pair(other)
        return PowerSeries(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __sub__(self, other):
        a, b = self._pair(other)
        return PowerSeries(x - y for x, y in zip(a, b))

    def __neg__(self):
        return PowerSeries(-x for x in self.coeffs)

    def __mul__(self, other):
        if not isinstance(other, PowerSeries):
            return PowerSeries(x * Fraction(other) for x in self.coeffs)
        a, b = self._pair(other)
        n = len(a)
        return PowerSeries(sum(a[i] * b[k - i] for i in range(k + 1))
                           for k in range(n))

    __rmul__ = __mul__

    def reciprocal(self):
        """``1 / self``; needs a nonzero constant term."""
        a = self.coeffs
        if a[0] == 0:
            raise ZeroDivisionError('Series with zero constant term has no reciprocal')
        out = [1 / a[0]]
        for k in range(1, len(a)):
            out.append(-sum(a[i] * out[k - i] for i in range(1, k + 1)) / a[0])
        return PowerSeries(out)

    def __truediv__(self, other):
        if not isinstance(other, PowerSeries):
            return self * (1 / Fraction(other))
        return self * other.reciprocal()

    def derivative(self):
        """Loses the top coefficient."""
        if len(self) == 1:
            return PowerSeries([0])
        return PowerSeries(k * c for k, c in enumerate(self.coeffs) if k > 0)

    def integral(self, constant=0):
        return PowerSeries([constant] + [c / (k + 1) for k, c in enumerate(self.coeffs)])

    def scale_argument(self, a):
        """Series of ``f(a x)``."""
        a = Fraction(a)
        return PowerSeries(c * a ** k for k, c in enumerate(self.coeffs))

    def shift(self, center):
        """Coefficients of ``p(center + x)`` for the polynomial ``p`` given by
        the known coefficients (Taylor shift)."""
        center = Fraction(center)
        n = len(self)
        out = [Fraction(0)] * n
        for j, c in enumerate(self.coeffs):
            if c == 0:
                continue
            for k in range(j + 1):
                out[k] += c * math.comb(j, k) * center ** (j - k)
        return PowerSeries(out)

    def truncate(self, n):
        return PowerSeries(self.coeffs[:n])

    def __eq__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    __hash__ = None

    def __repr__(self):
        return 'PowerSeries({})'.format(', '.join(str(c) for c in self.coeffs))


def rationalize(value, max_denominator=10**15):
    """Closest rational with bounded denominator for float-born coefficients."""
    return Fraction(value).limit_denominator(max_denominator)


def tanh_series(n):
    return PowerSeries.sinh(n) / PowerSeries.cosh(n)


def logistic_series(n):
    """``1/2 + tanh(x/2)/2``."""
    return tanh_series(n).scale_argument(Fraction(1, 2)) * Fraction(1, 2) + Fraction(1, 2)


def arctan_series(n):
    """Integral of ``1/(1+x^2)``."""
    denom = PowerSeries([1, 0, 1] + [0] * max(0, n - 3)).truncate(max(n, 1))
    return denom.reciprocal().integral().truncate(n)


def gelu_series(n):
    """``x Phi(x)`` with ``Phi`` the standard normal CDF. The ``1/sqrt(2 pi)``
    factor is rationalized."""
    inv_sqrt_2pi = rationalize(1.0 / math.sqrt(2.0 * math.pi))
    coeffs = [Fraction(0)] * n
    if n > 1:
        coeffs[1] = Fraction(1, 2)
    # x * Phi(x) contributes x^{2j+2}
    j = 0
    while 2 * j + 2 < n:
        coeffs[2 * j + 2] = inv_sqrt_2pi * Fraction(
            (-1) ** j, 2 ** j * math.factorial(j) * (2 * j + 1))
        j += 1
    return PowerSeries(coeffs)
