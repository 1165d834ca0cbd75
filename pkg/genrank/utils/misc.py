# -*- coding: utf-8 -*-
import time
import random
from fractions import Fraction

import numpy as np
import torch
from tqdm import tqdm


def fix_seed(seed=None):
    if seed is None:
        seed = time.time()

    seed = int(seed)
    random.seed(seed)
    np.random.seed(seed % 2**32)
    torch.manual_seed(seed)
    return seed


def derive_seed(master, *indices):
    """Returns a 63-bit integer seed that depends only on ``master`` and
    ``indices``, so that a single trial can be replayed in isolation."""
    seq = np.random.SeedSequence([int(master)] + [int(i) for i in indices])
    low, high = (int(x) for x in seq.generate_state(2, dtype=np.uint32))
    return (low | (high << 32)) & (2**63 - 1)


def make_rng(seed):
    return np.random.default_rng(seed)


def pbar(iterator, unit='it', total=None, disable=False):
    return tqdm(iterator, unit=unit, ncols=70, smoothing=0, total=total,
                disable=disable)


def parse_int_grid(value):
    """Parses '2-8', '1,2,3', '4' or a list of ints into a sorted list.

    Arguments:
        value(str, int or list): The grid description.

    Returns:
        list: Sorted list of unique integers (possibly empty).
    """
    if isinstance(value, int):
        return [value]
    if isinstance(value, (list, tuple)):
        return sorted(set(int(v) for v in value))

    values = set()
    for part in str(value).split(','):
        part = part.strip()
        if not part:
            continue
        if '-' in part:
            lo, hi = part.split('-', 1)
            values.update(range(int(lo), int(hi) + 1))
        else:
            values.add(int(part))
    return sorted(values)


def parse_rationals(value):
    """Parses '0,1,1/2' (or a list) into a list of ``Fraction``."""
    if isinstance(value, (list, tuple)):
        return [Fraction(v) if not isinstance(v, float)
                else Fraction(v).limit_denominator(10**12) for v in value]
    parts = [p.strip() for p in str(value).split(',') if p.strip()]
    return [Fraction(p) for p in parts]