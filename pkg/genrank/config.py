# -*- coding: utf-8 -*-
import os
import copy
import json
import pathlib
from difflib import get_close_matches
from ast import literal_eval

from .exceptions import ConfigError

COMMON_DEFAULTS = {
    'seed': 0,                   # Master seed, every trial seed derives from it
    'out': '',                   # Report path ('' -> stdout)
    'format': 'csv',             # csv or json
    'strict': False,             # Non-zero exit status on any mismatch
    'num_workers': 0,            # Worker processes for grid cells (0=disabled)
    'subset_budget': 10**6,      # Cap on exhaustive subset/tensor enumeration
    'tensorboard_dir': '',       # Enable TB scalars under this folder
}

RANK_GRID_DEFAULTS = dict(COMMON_DEFAULTS, **{
    'law': 'hadamard_power',     # matmul, hadamard_power, poly, khatri_power, ...
    'd': '1-3',                  # Grid of inner dimensions
    'k': '1-3',                  # Grid of exponents (power laws)
    'm': '2-8',                  # Grid of row counts of A
    'n': '2-8',                  # Grid of row counts of B
    'coeffs': '',                # c_0,...,c_K for the polynomial laws
    'act': 'tanh',               # Analytic function of the analytic laws
    'derivative': False,         # Use the series of the derivative instead
    'sampler': 'integer:100',    # integer:R or gaussian
    'tolerance': 'relative:1',   # relative:c or absolute:tau (gaussian only)
    'trials': 100,               # Random (A, B) pairs per cell
    'max_md': 24,                # Skip Khatri-Rao cells with m*d above this
    'kruskal': False,            # Also compare the exhaustive Kruskal rank
    'max_kruskal_n': 8,          # ... on cells with n up to this
})

DECOMPOSE_DEFAULTS = dict(COMMON_DEFAULTS, **{
    'kinds': 'all',              # comma sep. builder names or 'all'
    'instances': 50,             # Random instances per kind
    'max_d': 4,                  # d is drawn from 1..max_d
    'max_k': 4,                  # k (or K) is drawn from 0..max_k
    'max_dim': 6,                # m and n are drawn from 1..max_dim
    'entry_range': 5,            # Integer entries in [-R, R]
    'inject_fault': False,       # Perturb one diagonal entry (negative control)
})

INTERPOLATE_DEFAULTS = dict(COMMON_DEFAULTS, **{
    'X': '',                     # Data matrix file (d x n)
    'y': '',                     # Target vector file (n)
    'random': '',                # d,n,m: draw X and y instead of reading them
    'm': 0,                      # Width (taken from 'random' when given there)
    'act': 'tanh',               # Activation
    'force': False,              # Ignore a negative capacity verdict
    'pad_odd': False,            # Accept odd m by appending an idle neuron
    'tol': 1e-6,                 # Required inf-norm residual of the fit
    'solver_tol': 1e-8,          # Levenberg-Marquardt convergence threshold
    'max_restarts': 5,           # Fresh initializations
    'max_iter': 200,             # Iterations per solve
    'params_out': '',            # Parameter JSON path
    'trace_out': '',             # Solver trace (JSON lines) path
})

CAPACITY_DEFAULTS = {
    'm': 0,                      # Width
    'n': 0,                      # Number of data points
    'd': 0,                      # Input dimension
    'act': 'tanh',               # Activation
    'coeffs': '',                # Polynomial activation coefficients (overrides act)
    'q': 1,                      # Number of outputs
    'out': '',                   # Verdict JSON path ('' -> stdout)
}

DEFAULTS = {
    'rank-grid': RANK_GRID_DEFAULTS,
    'decompose-verify': DECOMPOSE_DEFAULTS,
    'interpolate': INTERPOLATE_DEFAULTS,
    'capacity-check': CAPACITY_DEFAULTS,
}


def expand_env_vars(data):
    """Interpolate some environment variables."""
    for key in ('HOME', 'USER', 'LOCAL', 'SCRATCH'):
        var = '$' + key
        if var in data and key in os.environ:
            data = data.replace(var, os.environ[key])
    return data


def resolve_path(value):
    if isinstance(value, list):
        return [resolve_path(elem) for elem in value]
    if isinstance(value, str) and value.startswith(('~', '/', '../', './')):
        return str(pathlib.Path(value).expanduser().resolve())
    return value


def _parse_value(value):
    """Automatic type conversion for ``key=value`` overrides.

    Arguments:
        value(str): A string to parse.
    """
    if not isinstance(value, str):
        return value

    if value.capitalize() in ('False', 'True', 'None'):
        return literal_eval(value.capitalize())

    try:
        result = literal_eval(value)
    except Exception:
        result = value

    # Grids such as '2-8' and '1,2,3' must stay strings
    return result if isinstance(result, (int, float)) else value


class Options:
    """Resolved options of one subcommand.

    Defaults come first, then the flat JSON file given by ``filename``, then
    the command-line ``overrides`` (``None`` values are ignored).

    Arguments:
        command(str): A key of ``DEFAULTS``.
        filename(str, optional): Flat JSON configuration file.
        overrides(dict, optional): Values from the command line.
    """

    def __init__(self, command, filename=None, overrides=None):
        if command not in DEFAULTS:
            raise ConfigError('Unknown command {!r}'.format(command))
        self.command = command
        self.filename = str(filename) if filename else None
        self.opts = copy.deepcopy(DEFAULTS[command])

        if self.filename:
            with open(self.filename) as fhandle:
                data = expand_env_vars(fhandle.read().strip())
            try:
                loaded = json.loads(data) if data else {}
            except json.JSONDecodeError as exc:
                raise ConfigError('{}: invalid JSON ({})'.format(self.filename, exc))
            if not isinstance(loaded, dict):
                raise ConfigError('{}: expected a flat JSON object'.format(self.filename))
            self._update(loaded, self.filename)

        if overrides:
            self._update({k: v for k, v in overrides.items() if v is not None},
                         'command line')

    def _update(self, values, origin):
        def_keys = list(DEFAULTS[self.command])
        for key, value in values.items():
            key = key.replace('-', '_')
            if key not in def_keys:
                msg = "{}:{}: Unknown option '{}'.".format(origin, self.command, key)
                match = get_close_matches(key, def_keys, n=1)
                if match:
                    msg += "  Did you mean '{}' ?".format(match[0])
                raise ConfigError(msg)
            if isinstance(value, dict):
                raise ConfigError('{}: option {!r} must be a scalar'.format(origin, key))
            self.opts[key] = resolve_path(_parse_value(value))

    def __getattr__(self, key):
        opts = self.__dict__.get('opts', {})
        if key in opts:
            return opts[key]
        raise AttributeError(key)

    def __getitem__(self, key):
        return self.opts[key]

    def __repr__(self):
        repr_ = "-" * (len(self.command) + 2)
        repr_ += "\n[{}]\n".format(self.command)
        repr_ += "-" * (len(self.command) + 2)
        repr_ += '\n'
        for key, value in self.opts.items():
            repr_ += "{:>20}:{}\n".format(key, value)
        repr_ += "-" * 70
        repr_ += "\n"
        return repr_

    def to_dict(self):
        """Serializes the resolved options (report provenance)."""
        return {
            'command': self.command,
            'filename': self.filename,
            'options': copy.deepcopy(self.opts),
        }
