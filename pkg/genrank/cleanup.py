# -*- coding: utf-8 -*-
"""Removal of half-written report files on errors, signals and exit."""
import os
import sys
import signal
import atexit
import pathlib
import contextlib
import traceback


class Cleanup:
    """Temporary report files that are not yet renamed into place."""

    def __init__(self):
        self.pending = set()
        self._installed = False

    def track(self, path):
        self.pending.add(pathlib.Path(path))

    def release(self, path):
        self.pending.discard(pathlib.Path(path))

    def __call__(self):
        for path in sorted(self.pending):
            if path.exists():
                path.unlink()
        self.pending.clear()

    def __len__(self):
        return len(self.pending)

    def __repr__(self):
        lines = ['Cleanup: {} pending report file(s)'.format(len(self))]
        lines.extend(' {}'.format(path) for path in sorted(self.pending))
        return '\n'.join(lines) + '\n'

    def install(self, logger, signals=True):
        """Removes pending files at exit and on SIGINT/SIGTERM. Uncaught
        exceptions go to ``logger`` with their traceback."""
        if not self._installed:
            atexit.register(self)
            self._installed = True

        if signals:
            for signum in (signal.SIGINT, signal.SIGTERM):
                signal.signal(signum, self._on_signal)

        def excepthook(exctype, value, trace):
            self()
            logger.error(''.join(traceback.format_exception(exctype, value, trace)))

        sys.excepthook = excepthook

    def _on_signal(self, signum, frame):
        self()
        sys.exit(128 + signum)


# Process-wide instance
cleanup = Cleanup()


@contextlib.contextmanager
def atomic_open(path, mode='w', **kwargs):
    """Writes into a hidden sibling of ``path`` that replaces ``path`` only
    when the block finishes without an exception."""
    path = pathlib.Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_name('.{}.{}.tmp'.format(path.name, os.getpid()))
    cleanup.track(tmp)
    try:
        with open(str(tmp), mode, **kwargs) as f:
            yield f
        os.replace(str(tmp), str(path))
    finally:
        if tmp.exists():
            tmp.unlink()
        cleanup.release(tmp)
