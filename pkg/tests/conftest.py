# -*- coding: utf-8 -*-
import pytest

from genrank.utils.misc import make_rng


def pytest_addoption(parser):
    parser.addoption('--runslow', action='store_true', default=False,
                     help='run desk-scale acceptance tests')


def pytest_collection_modifyitems(config, items):
    if config.getoption('--runslow'):
        return
    skip_slow = pytest.mark.skip(reason='needs --runslow')
    for item in items:
        if 'slow' in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture
def rng():
    return make_rng(1234)
