# -*- coding: utf-8 -*-
from ..linalg import Matrix, EXACT, FLOAT
from ..utils.misc import make_rng


class Sampler:
    """Draws "generic" factor matrices.

    ``integer:R`` draws integers uniformly from ``[-R, R]`` onto the exact
    backend, ``gaussian`` draws standard normal floats.
    """

    def __init__(self, kind='integer', R=100):
        if kind not in ('integer', 'gaussian'):
            raise ValueError('Unknown sampler {!r}'.format(kind))
        if kind == 'integer' and R < 1:
            raise ValueError('Integer sampler needs R >= 1')
        self.kind = kind
        self.R = int(R)

    @classmethod
    def parse(cls, spec):
        if isinstance(spec, cls):
            return spec
        kind, _, value = str(spec).partition(':')
        kind = kind.strip()
        if kind == 'integer':
            return cls('integer', int(value) if value else 100)
        return cls(kind)

    @property
    def backend(self):
        return EXACT if self.kind == 'integer' else FLOAT

    def draw(self, rng, rows, cols):
        if self.kind == 'integer':
            return Matrix(rng.integers(-self.R, self.R, size=(rows, cols),
                                       endpoint=True), backend=EXACT)
        return Matrix(rng.standard_normal((rows, cols)), backend=FLOAT)

    def __str__(self):
        return 'integer:{}'.format(self.R) if self.kind == 'integer' else self.kind

    def __repr__(self):
        return 'Sampler({})'.format(self)


def sample_generic_pair(m, n, d, sampler='integer:100', seed=0):
    """Deterministic ``(A, B)`` of shapes ``m x d`` and ``n x d`` for ``seed``."""
    sampler = Sampler.parse(sampler)
    rng = make_rng(seed)
    A = sampler.draw(rng, m, d)
    B = sampler.draw(rng, n, d)
    return A, B
