# -*- coding: utf-8 -*-
import math
from fractions import Fraction

from ..utils.misc import parse_rationals


class WeakComposition(tuple):
    """A tuple of ``d`` non-negative integers. ``degree`` is the part sum."""

    def __new__(cls, parts):
        parts = tuple(int(p) for p in parts)
        if any(p < 0 for p in parts):
            raise ValueError('Weak composition parts must be >= 0: {}'.format(parts))
        return super().__new__(cls, parts)

    @property
    def degree(self):
        return sum(self)

    @property
    def d(self):
        return len(self)

    @property
    def support(self):
        """0-based coordinates with a nonzero part."""
        return tuple(i for i, p in enumerate(self) if p > 0)

    def add_unit(self, i):
        parts = list(self)
        parts[i] += 1
        return WeakComposition(parts)

    def sub_unit(self, i):
        parts = list(self)
        parts[i] -= 1
        return WeakComposition(parts)

    def __repr__(self):
        return 'WeakComposition({})'.format(tuple(self))


class SupportFilter:
    """Coefficient vector ``(c_0, ..., c_K)`` of a polynomial. Degrees past
    ``K`` count as zero coefficients.

    Arguments:
        coefficients(str or list): Rationals, i.e. ``'0,1,0,1'`` or
            ``[0, 1, Fraction(1, 2)]``.
    """

    def __init__(self, coefficients):
        if isinstance(coefficients, SupportFilter):
            coefficients = coefficients.coefficients
        coefficients = parse_rationals(coefficients)
        if not coefficients:
            raise ValueError('SupportFilter needs at least c_0')
        self.coefficients = tuple(coefficients)

    @property
    def K(self):
        return len(self.coefficients) - 1

    def __getitem__(self, k):
        if 0 <= k < len(self.coefficients):
            return self.coefficients[k]
        return Fraction(0)

    def __len__(self):
        return len(self.coefficients)

    def support(self):
        """Degrees with a nonzero coefficient, ascending."""
        return [k for k, c in enumerate(self.coefficients) if c != 0]

    def is_zero(self):
        return not self.support()

    def __eq__(self, other):
        if not isinstance(other, SupportFilter):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self):
        return hash(self.coefficients)

    def __str__(self):
        return ','.join(str(c) for c in self.coefficients)

    def __repr__(self):
        return 'SupportFilter({})'.format(self)


def _compositions(d, k, exact):
    # First part ascending, which gives lexicographic order
    if d == 1:
        if exact:
            yield (k,)
        else:
            for last in range(k + 1):
                yield (last,)
        return
    for first in range(k + 1):
        for rest in _compositions(d - 1, k - first, exact):
            yield (first,) + rest


def enumerate_lambda(d, k):
    """All weak compositions of ``k`` into ``d`` parts, lexicographic."""
    if d < 1 or k < 0:
        raise ValueError('enumerate_lambda needs d >= 1 and k >= 0')
    return [WeakComposition(c) for c in _compositions(d, k, exact=True)]


def enumerate_Lambda(d, K, support_filter=None):
    """All weak compositions into ``d`` parts with part sum <= ``K``, in
    lexicographic order. With a filter, only those whose part sum ``k``
    has ``c_k != 0`` are kept."""
    if d < 1 or K < 0:
        raise ValueError('enumerate_Lambda needs d >= 1 and K >= 0')
    comps = (WeakComposition(c) for c in _compositions(d, K, exact=False))
    if support_filter is None:
        return list(comps)
    support_filter = SupportFilter(support_filter)
    return [c for c in comps if support_filter[c.degree] != 0]


def multiset_count(d, k):
    """Number of size-k multisets over d symbols: ``C(k + d - 1, k)``."""
    if d < 1 or k < 0:
        raise ValueError('multiset_count needs d >= 1 and k >= 0')
    return math.comb(k + d - 1, k)


stars_and_bars_count = multiset_count


def multinomial(parts):
    """``k! / (k_1! ... k_d!)`` as an exact integer."""
    result, total = 1, 0
    for p in parts:
        total += p
        result *= math.comb(total, p)
    return result


def supported_count(d, support_filter, shift=0):
    """``sum over c_k != 0 of multiset_count(d, k + shift)``."""
    return sum(multiset_count(d, k + shift)
               for k in SupportFilter(support_filter).support())


def zhu_identity_holds(d, K):
    """Checks ``sum_{k<=K} C(k+d-1, k) == C(K+d, d)`` and the enumeration size."""
    lhs = sum(multiset_count(d, k) for k in range(K + 1))
    return lhs == math.comb(K + d, d) == len(enumerate_Lambda(d, K))


def fiber_counting_identity_holds(d, k):
    """Checks ``sum_i C(d, i) C(k, i-1) == C(k+d, k+1)``, the count of
    ``lambda(k+1)`` grouped by support size."""
    lhs = sum(math.comb(d, i) * math.comb(k, i - 1) for i in range(1, d + 1))
    return lhs == multiset_count(d, k + 1) == math.comb(k + d, k + 1)
