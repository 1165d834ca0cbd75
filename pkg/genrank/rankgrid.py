# -*- coding: utf-8 -*-
import sys
import logging
from concurrent.futures import ProcessPoolExecutor

from .exceptions import ConfigError
from .generic import (
    LAW_KINDS, RankLaw, REPORT_FIELDS, empirical_rank_experiment)
from .utils.io import emit_report
from .utils.misc import parse_int_grid, pbar
from .utils.tensorboard import TensorBoard

logger = logging.getLogger('genrank')

SCHEMA = 'genrank rank-grid v1'


def _run_cell(cell):
    """Worker entry point: arguments and results are plain data."""
    law = RankLaw(**cell['law'])
    report = empirical_rank_experiment(
        law, cell['m'], cell['n'], trials=cell['trials'], sampler=cell['sampler'],
        check_kruskal=cell['kruskal'], seed=cell['seed'],
        tol_policy=cell['tolerance'], budget=cell['budget'])
    return report.csv_row(), report.to_dict()


class RankGrid:
    """Runs ``empirical_rank_experiment`` over a grid of ``(d, k, m, n)``
    cells and emits one report row per cell, in grid order."""

    def __init__(self, opts, stream=None):
        self.opts = opts
        self.stream = stream or sys.stdout
        self.law_kind = str(opts.law).replace('-', '_')
        if self.law_kind not in LAW_KINDS:
            raise ConfigError('Unknown law {!r}, choose from {}'.format(
                opts.law, ', '.join(LAW_KINDS)))
        self.cells = self.make_cells()
        if not self.cells:
            raise ConfigError('The grid is empty, nothing to run.')
        self.tb = TensorBoard(opts.tensorboard_dir, 'rank-grid-{}'.format(self.law_kind))

    def law_params(self, d, k):
        params = {'kind': self.law_kind, 'd': d}
        if self.law_kind in ('hadamard_power', 'khatri_power'):
            params['k'] = k
        elif self.law_kind in ('poly', 'khatri_poly', 'zhang_blockdiag'):
            if not str(self.opts.coeffs).strip():
                raise ConfigError('Law {} needs --coeffs'.format(self.law_kind))
            params['coeffs'] = str(self.opts.coeffs)
        elif self.law_kind.startswith('analytic'):
            params['act'] = self.opts.act
            params['derivative'] = bool(self.opts.derivative)
        return params

    def make_cells(self):
        o = self.opts
        ks = parse_int_grid(o.k) if self.law_kind in ('hadamard_power', 'khatri_power') \
            else [None]
        cells = []
        for d in parse_int_grid(o.d):
            for k in ks:
                law = self.law_params(d, k)
                khatri = RankLaw(**law).is_khatri
                for m in parse_int_grid(o.m):
                    if khatri and m * d > o.max_md:
                        continue
                    for n in parse_int_grid(o.n):
                        if self.law_kind == 'zhang_blockdiag' and n % d:
                            continue
                        cells.append({
                            'law': law, 'm': m, 'n': n, 'trials': o.trials,
                            'sampler': o.sampler, 'seed': o.seed,
                            'kruskal': bool(o.kruskal) and n <= o.max_kruskal_n,
                            'tolerance': o.tolerance, 'budget': o.subset_budget,
                        })
        return cells

    def run_cells(self):
        total = len(self.cells)
        if self.opts.num_workers > 0:
            with ProcessPoolExecutor(max_workers=self.opts.num_workers) as ex:
                # map() yields in submission order
                return list(pbar(ex.map(_run_cell, self.cells), unit='cell', total=total))
        return [_run_cell(cell) for cell in pbar(self.cells, unit='cell', total=total)]

    def __call__(self):
        logger.info('rank-grid: law={} cells={} trials/cell={}'.format(
            self.law_kind, len(self.cells), self.opts.trials))
        results = self.run_cells()

        rows = [row for row, _ in results]
        mismatches = 0
        for idx, row in enumerate(rows):
            mismatches += row['mismatch_count']
            self.tb.log_scalars({'mismatches': row['mismatch_count'],
                                 'predicted': row['predicted']}, idx, prefix='grid/')
            if row['mismatch_count']:
                logger.warning('law={} d={} m={} n={}: {} mismatches (seeds {})'.format(
                    row['law'], row['d'], row['m'], row['n'], row['mismatch_count'],
                    row['mismatch_seeds']))
        self.tb.close()

        document = {
            'schema': SCHEMA,
            'config': self.opts.to_dict(),
            'reports': [report for _, report in results],
        }
        emit_report(self.opts.format, self.opts.out, rows, REPORT_FIELDS, document,
                    SCHEMA, self.stream)
        logger.info('rank-grid: {} cells, {} mismatching trials'.format(
            len(rows), mismatches))

        if mismatches and self.opts.strict:
            return 1
        return 0
