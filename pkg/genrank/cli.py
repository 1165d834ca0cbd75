# -*- coding: utf-8 -*-
import sys
import argparse

from . import logger as genrank_logger
from . import __version__
from .config import Options
from .exceptions import GenrankError, CapacityRefusedError
from .utils.io import dumps_json
from .utils.misc import fix_seed

# Exit statuses
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_REFUSED = 3


def _rank_grid(opts):
    from .rankgrid import RankGrid
    return RankGrid(opts)


def _decompose_verify(opts):
    from .verifier import DecomposeVerify
    return DecomposeVerify(opts)


def _interpolate(opts):
    from .interpolator import Interpolator
    return Interpolator(opts)


def _capacity_check(opts):
    from .interpolator import CapacityCheck
    return CapacityCheck(opts)


def build_parser():
    parser = argparse.ArgumentParser(
        prog='genrank',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        description="Generic-rank experiments: Hadamard powers, Khatri-Rao "
                    "decompositions and two-layer network capacity.",
        argument_default=argparse.SUPPRESS)
    parser.add_argument('--version', action='version',
                        version='%(prog)s {}'.format(__version__))

    base = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
    base.add_argument('-C', '--config', type=str,
                      help="Flat JSON configuration file, flags override it.")
    base.add_argument('-v', '--verbose', action='store_true',
                      help="Log debug messages.")
    base.add_argument('--log-file', type=str, help="Also log into this file.")

    common = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
    common.add_argument('-s', '--seed', type=int, help="Master seed.")
    common.add_argument('-o', '--out', type=str, help="Report path (default: stdout).")
    common.add_argument('-f', '--format', type=str, choices=['csv', 'json'],
                        help="Report format.")
    common.add_argument('--strict', action='store_true',
                        help="Exit with 1 on any predicted/empirical mismatch.")
    common.add_argument('-j', '--workers', type=int, dest='num_workers',
                        help="Worker processes (0: run in-process).")
    common.add_argument('--subset-budget', type=int,
                        help="Cap on exhaustive subset enumeration.")
    common.add_argument('--tensorboard-dir', type=str,
                        help="Log scalars for TensorBoard under this folder.")

    sub = parser.add_subparsers(dest='command', metavar='command')
    sub.required = True

    p = sub.add_parser('rank-grid', parents=[base, common],
                       argument_default=argparse.SUPPRESS,
                       help="Compare predicted and empirical ranks over a grid.")
    p.add_argument('--law', type=str, help="Rank law (i.e. hadamard-power, khatri-poly).")
    for dim in ('d', 'k', 'm', 'n'):
        p.add_argument('--{}'.format(dim), type=str,
                       help="Grid of {} values ('2-8', '1,2,4').".format(dim))
    p.add_argument('--coeffs', type=str, help="c_0,...,c_K of the polynomial laws.")
    p.add_argument('--act', type=str, help="Activation of the analytic laws.")
    p.add_argument('--derivative', action='store_true',
                   help="Use the derivative of the activation.")
    p.add_argument('--sampler', type=str, help="integer:R or gaussian.")
    p.add_argument('--tolerance', type=str, help="relative:c or absolute:tau.")
    p.add_argument('-t', '--trials', type=int, help="Trials per grid cell.")
    p.add_argument('--max-md', type=int, help="Skip Khatri-Rao cells with m*d above.")
    p.add_argument('--kruskal', action='store_true',
                   help="Also check the exhaustive Kruskal rank.")
    p.add_argument('--max-kruskal-n', type=int, help="... on cells with n up to this.")
    p.set_defaults(runner=_rank_grid)

    p = sub.add_parser('decompose-verify', parents=[base, common],
                       argument_default=argparse.SUPPRESS,
                       help="Build and verify every decomposition kind.")
    p.add_argument('--kinds', type=str, help="Comma separated kinds or 'all'.")
    p.add_argument('--instances', type=int, help="Random instances per kind.")
    p.add_argument('--max-d', type=int)
    p.add_argument('--max-k', type=int)
    p.add_argument('--max-dim', type=int)
    p.add_argument('--entry-range', type=int)
    p.add_argument('--inject-fault', action='store_true',
                   help="Perturb one diagonal entry (negative control).")
    p.set_defaults(runner=_decompose_verify)

    p = sub.add_parser('interpolate', parents=[base, common],
                       argument_default=argparse.SUPPRESS,
                       help="Fit y on X with a width-m two-layer network.")
    p.add_argument('--X', type=str, help="Data matrix file (d x n).")
    p.add_argument('--y', type=str, help="Target vector file.")
    p.add_argument('--random', type=str, help="d,n,m: draw X and y from the seed.")
    p.add_argument('--m', type=int, help="Width.")
    p.add_argument('--act', type=str, help="Activation (tanh, gelu, poly:0,0,0,1, ...).")
    p.add_argument('--force', action='store_true',
                   help="Run despite a negative capacity verdict.")
    p.add_argument('--pad-odd', action='store_true',
                   help="Accept odd m by appending an idle neuron.")
    p.add_argument('--tol', type=float, help="Required inf-norm residual.")
    p.add_argument('--solver-tol', type=float)
    p.add_argument('--max-iter', type=int)
    p.add_argument('--max-restarts', type=int)
    p.add_argument('--params-out', type=str, help="Parameter JSON path.")
    p.add_argument('--trace-out', type=str, help="Solver trace (JSON lines) path.")
    p.set_defaults(runner=_interpolate)

    p = sub.add_parser('capacity-check', parents=[base],
                       argument_default=argparse.SUPPRESS,
                       help="Print the capacity verdict of (m, n, d, act).")
    for dim in ('m', 'n', 'd', 'q'):
        p.add_argument('--{}'.format(dim), type=int)
    p.add_argument('--act', type=str)
    p.add_argument('--coeffs', type=str, help="Polynomial activation, overrides --act.")
    p.add_argument('-o', '--out', type=str, help="Verdict path (default: stdout).")
    p.set_defaults(runner=_capacity_check)

    return parser


def main(argv=None):
    parser = build_parser()
    args = vars(parser.parse_args(argv))

    command = args.pop('command')
    runner = args.pop('runner')
    config = args.pop('config', None)
    log = genrank_logger.setup(
        args.pop('log_file', None), args.pop('verbose', False))

    try:
        opts = Options(command, config, args)
        log.debug(opts)
        if 'seed' in opts.opts:
            fix_seed(opts.seed)
        return runner(opts)()
    except CapacityRefusedError as exc:
        log.error(str(exc))
        sys.stdout.write(dumps_json(exc.verdict.to_dict()))
        return EXIT_REFUSED
    except (ValueError, OSError) as exc:
        log.error('{}: {}'.format(type(exc).__name__, exc))
        return EXIT_USAGE
    except GenrankError as exc:
        log.error('{}: {}'.format(type(exc).__name__, exc))
        return EXIT_FAILURE
