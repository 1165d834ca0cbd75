# -*- coding: utf-8 -*-
import pathlib
import logging

from .cleanup import cleanup


def setup(log_file=None, verbose=False, handle_signals=True):
    _format = '%(message)s'

    formatter = logging.Formatter(_format)
    logger = logging.getLogger('genrank')
    logger.setLevel(logging.DEBUG if verbose else logging.INFO)

    # Repeated setup() calls (tests, notebooks) should not duplicate output
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
        handler.close()

    con_handler = logging.StreamHandler()
    con_handler.setFormatter(formatter)
    logger.addHandler(con_handler)

    if log_file is not None:
        log_file = pathlib.Path(log_file).expanduser()
        log_file.parent.mkdir(parents=True, exist_ok=True)
        file_handler = logging.FileHandler(str(log_file), mode='w')
        file_handler.setFormatter(formatter)
        logger.addHandler(file_handler)

    cleanup.install(logger, signals=handle_signals)
    return logger
