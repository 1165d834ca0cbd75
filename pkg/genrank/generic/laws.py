# -*- coding: utf-8 -*-
import itertools

from ..exceptions import ConstraintError, InsufficientSupportError
from ..combinat import SupportFilter, multiset_count, supported_count
from ..network.activation import get_activation

# Longest coefficient prefix scanned for an analytic law
MAX_TRUNCATION_DEGREE = 200

LAW_KINDS = ('matmul', 'hadamard_power', 'poly', 'khatri_power', 'khatri_poly',
             'analytic', 'analytic_khatri', 'zhang_blockdiag')

KHATRI_KINDS = ('khatri_power', 'khatri_poly', 'analytic_khatri', 'zhang_blockdiag')


class RankLaw:
    """A generic-rank statement for a family of matrices built from ``(A, B)``.

    Arguments:
        kind(str): One of ``LAW_KINDS``.
        d(int): Inner dimension of ``A`` and ``B``.
        k(int, optional): Exponent for the power laws.
        coeffs(str or list, optional): Coefficients for ``poly``,
            ``khatri_poly`` and ``zhang_blockdiag``.
        act(str or Activation, optional): Analytic function for the
            ``analytic*`` laws, default ``tanh``.
        derivative(bool): Use the series of ``psi'`` instead of ``psi``.
    """

    def __init__(self, kind, d, k=None, coeffs=None, act=None, derivative=False):
        if kind not in LAW_KINDS:
            raise ValueError('Unknown law {!r}, choose from {}'.format(
                kind, ', '.join(LAW_KINDS)))
        if d < 1:
            raise ValueError('Law needs d >= 1')
        if kind in ('hadamard_power', 'khatri_power') and (k is None or k < 0):
            raise ValueError('{} needs an exponent k >= 0'.format(kind))
        if kind in ('poly', 'khatri_poly', 'zhang_blockdiag') and coeffs is None:
            raise ValueError('{} needs coefficients'.format(kind))

        self.kind = kind
        self.d = d
        self.k = k if kind in ('hadamard_power', 'khatri_power') else None
        self.coeffs = SupportFilter(coeffs) if coeffs is not None else None
        self.act = get_activation(act or 'tanh') if kind.startswith('analytic') else None
        self.derivative = derivative

    @property
    def is_khatri(self):
        return self.kind in KHATRI_KINDS

    @property
    def is_analytic(self):
        return self.act is not None

    def coefficient_stream(self):
        return self.act.coefficient_stream(derivative=self.derivative)

    def truncated_coeffs(self, m, n):
        """Coefficient prefix whose polynomial already reaches the predicted
        rank; the exact surrogate for the analytic laws."""
        K = analytic_truncation_degree(
            self.d, predicted_rank(self, m, n), self.coefficient_stream(),
            khatri=self.is_khatri)
        return SupportFilter(list(itertools.islice(self.coefficient_stream(), K + 1)))

    def target_shape(self, m, n):
        return (m * self.d, n) if self.is_khatri else (m, n)

    def param_str(self):
        if self.k is not None:
            return 'k={}'.format(self.k)
        if self.coeffs is not None:
            return 'coeffs={}'.format(self.coeffs)
        return 'act={}{}'.format(self.act.name, "'" if self.derivative else '')

    def to_dict(self):
        return {
            'kind': self.kind,
            'd': self.d,
            'k': self.k,
            'coeffs': str(self.coeffs) if self.coeffs is not None else None,
            'act': self.act.name if self.act is not None else None,
            'derivative': self.derivative,
        }

    def __repr__(self):
        return 'RankLaw({}, d={}, {})'.format(self.kind, self.d, self.param_str())


def predicted_rank(law, m, n):
    """Generic rank (and Kruskal rank) of the matrix family of ``law``."""
    d = law.d
    if law.kind == 'matmul':
        return min(m, n, d)
    if law.kind == 'hadamard_power':
        return min(m, n, multiset_count(d, law.k))
    if law.kind == 'poly':
        return min(m, n, supported_count(d, law.coeffs))
    if law.kind == 'khatri_power':
        return min(m * d, n, multiset_count(d, law.k + 1))
    if law.kind == 'khatri_poly':
        return min(m * d, n, supported_count(d, law.coeffs, shift=1))
    if law.kind == 'analytic':
        return min(m, n)
    if law.kind == 'analytic_khatri':
        return min(m * d, n)
    if law.kind == 'zhang_blockdiag':
        if n % d:
            raise ConstraintError(
                'Block-diagonal B needs d | n, got d={} n={}'.format(d, n))
        return min(m * d, n, d * len(law.coeffs.support()))
    raise ValueError(law.kind)


def analytic_truncation_degree(d, target, coeffs_stream, khatri=False,
                               max_degree=MAX_TRUNCATION_DEGREE):
    """Smallest ``K`` such that ``sum_{k<=K, c_k != 0} multiset_count(d, k)``
    (``k + 1`` inside for Khatri-Rao laws) reaches ``target``.

    Raises:
        InsufficientSupportError: if the stream ends (or ``max_degree`` is
            passed) first.
    """
    if target <= 0:
        return 0
    total = 0
    shift = 1 if khatri else 0
    for K, c in enumerate(coeffs_stream):
        if K > max_degree:
            break
        if c != 0:
            total += multiset_count(d, K + shift)
            if total >= target:
                return K
    raise InsufficientSupportError(
        'Coefficient support reaches only {} < {} (d={}, khatri={})'.format(
            total, target, d, khatri))


def zhang_strictly_smaller(d, n, m, coeffs):
    """Whether the block-diagonal ``B`` law predicts strictly less than the
    generic Khatri-Rao polynomial law for the same cell."""
    block = predicted_rank(RankLaw('zhang_blockdiag', d, coeffs=coeffs), m, n)
    generic = predicted_rank(RankLaw('khatri_poly', d, coeffs=coeffs), m, n)
    return block < generic
