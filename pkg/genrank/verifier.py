# -*- coding: utf-8 -*-
import sys
import logging

from .exceptions import ConfigError
from .combinat import (
    SupportFilter, multiset_count, supported_count, zhu_identity_holds,
    fiber_counting_identity_holds)
from .decomp import BUILDERS, Decomposition, verify_reconstruction
from .linalg import Matrix, DiagonalMatrix, rank_exact
from .utils.io import emit_report
from .utils.misc import derive_seed, make_rng, pbar

logger = logging.getLogger('genrank')

SCHEMA = 'genrank decompose-verify v1'
FIELDS = ['kind', 'instances', 'failures', 'max_inner_dim', 'master_seed',
          'failure_seeds']


def expected_inner_dim(kind, d, param):
    """Inner dimension each builder must produce."""
    if kind == 'matmul':
        return d
    if kind == 'hadamard_power':
        return multiset_count(d, param)
    if kind == 'khatri_power':
        return d * multiset_count(d, param)
    if kind == 'poly':
        return supported_count(d, param)
    if kind == 'khatri_poly':
        return d * supported_count(d, param)
    support = SupportFilter(param).support()
    if kind == 'tensor_inner':
        return sum(d ** k for k in support)
    return d * sum(d ** k for k in support)


def perturb(decomposition):
    """Copy of ``decomposition`` with its first diagonal entry increased by 1."""
    diag = list(decomposition.diag.diag)
    diag[0] += 1
    return Decomposition(decomposition.left, DiagonalMatrix(diag), decomposition.right,
                         decomposition.column_labels, decomposition.kind)


class DecomposeVerify:
    """Builds every requested decomposition kind on random integer instances
    and checks exact reconstruction, the inner dimension and the rank bound."""

    def __init__(self, opts, stream=None):
        self.opts = opts
        self.stream = stream or sys.stdout
        if str(opts.kinds).strip() in ('', 'all'):
            self.kinds = list(BUILDERS)
        else:
            self.kinds = [k.strip().replace('-', '_') for k in str(opts.kinds).split(',')
                          if k.strip()]
        unknown = [k for k in self.kinds if k not in BUILDERS]
        if unknown:
            raise ConfigError('Unknown decomposition kinds {}, choose from {}'.format(
                unknown, ', '.join(BUILDERS)))
        if opts.instances < 1:
            raise ConfigError('instances must be >= 1')

    def draw_instance(self, rng):
        o = self.opts
        R = o.entry_range
        d = int(rng.integers(1, o.max_d + 1))
        m = int(rng.integers(1, o.max_dim + 1))
        n = int(rng.integers(1, o.max_dim + 1))
        A = Matrix(rng.integers(-R, R, size=(m, d), endpoint=True))
        B = Matrix(rng.integers(-R, R, size=(n, d), endpoint=True))
        return A, B

    def draw_param(self, rng, kind):
        param = BUILDERS[kind].param
        if param == 'k':
            return int(rng.integers(0, self.opts.max_k + 1))
        if param == 'coeffs':
            K = int(rng.integers(0, self.opts.max_k + 1))
            return SupportFilter(rng.integers(-2, 2, size=K + 1, endpoint=True).tolist())
        return None

    def check(self, kind, A, B, param, fault):
        """Returns the failure messages of one instance and the checked
        decomposition."""
        builder = BUILDERS[kind]
        args = (A, B) if param is None else (A, B, param)
        if kind.startswith('tensor'):
            decomposition = builder.build(*args, budget=self.opts.subset_budget)
        else:
            decomposition = builder.build(*args)
        if fault and decomposition.inner_dim:
            decomposition = perturb(decomposition)
        target = builder.target(*args)

        problems = []
        if not verify_reconstruction(decomposition, target):
            problems.append('reconstruction differs from target')
        expected = expected_inner_dim(kind, A.cols, param)
        if decomposition.inner_dim != expected:
            problems.append('inner dimension {} != {}'.format(
                decomposition.inner_dim, expected))
        if rank_exact(target).rank > decomposition.inner_dim:
            problems.append('rank exceeds inner dimension')
        if kind == 'tensor_directsum':
            other = BUILDERS['khatri_poly'].build(A, B, param)
            if not verify_reconstruction(other, decomposition.reconstruct()):
                problems.append('differs from khatri_poly reconstruction')
        return problems, decomposition

    def check_identities(self):
        bad = [(d, K) for d in range(1, 7) for K in range(11)
               if not (zhu_identity_holds(d, K) and fiber_counting_identity_holds(d, K))]
        if bad:
            logger.error('Counting identities fail for (d, K) in {}'.format(bad))
        return not bad

    def __call__(self):
        ok = self.check_identities()
        rows, dumps = [], []

        for kind_idx, kind in enumerate(self.kinds):
            failures, max_inner, fault_pending = [], 0, bool(self.opts.inject_fault)
            for inst in pbar(range(self.opts.instances), unit='inst', disable=True):
                seed = derive_seed(self.opts.seed, kind_idx, inst)
                rng = make_rng(seed)
                A, B = self.draw_instance(rng)
                param = self.draw_param(rng, kind)
                problems, decomposition = self.check(kind, A, B, param, fault_pending)
                # A zero column pair can hide the perturbation, retry on the next one
                if fault_pending and problems:
                    fault_pending = False
                max_inner = max(max_inner, decomposition.inner_dim)
                if problems:
                    failures.append(seed)
                    dump = {'kind': kind, 'seed': seed, 'problems': problems,
                            'A': [[str(x) for x in r] for r in A.data],
                            'B': [[str(x) for x in r] for r in B.data],
                            'param': str(param), 'decomposition': decomposition.to_dict()}
                    dumps.append(dump)
                    logger.error('{} seed={}: {}\n{}'.format(
                        kind, seed, '; '.join(problems), decomposition.to_json()))

            logger.info('{:>18}: {}/{} exact, max inner dim {}'.format(
                kind, self.opts.instances - len(failures), self.opts.instances,
                max_inner))
            rows.append({
                'kind': kind, 'instances': self.opts.instances,
                'failures': len(failures), 'max_inner_dim': max_inner,
                'master_seed': self.opts.seed,
                'failure_seeds': ';'.join(str(s) for s in failures),
            })
            ok = ok and not failures

        document = {'schema': SCHEMA, 'config': self.opts.to_dict(),
                    'kinds': rows, 'failures': dumps}
        emit_report(self.opts.format, self.opts.out, rows, FIELDS, document, SCHEMA,
                    self.stream)
        return 0 if ok else 1
