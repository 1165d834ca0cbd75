# -*- coding: utf-8 -*-
import pathlib
import logging

logger = logging.getLogger('genrank')


class TensorBoard:
    """Scalar curves of a run (solver residuals, grid mismatch counts).

    Arguments:
        log_dir(str): Root folder, the run writes into ``log_dir/run_name``.
            Logging is disabled when empty.
        run_name(str): Sub-folder of this run.

    Without ``log_dir`` or without tensorboardX every method does nothing.
    """

    def __init__(self, log_dir, run_name):
        self.run_name = run_name
        self.log_dir = None
        self.writer = None

        if not log_dir:
            return
        try:
            from tensorboardX import SummaryWriter
        except ImportError:
            logger.warning('tensorboardX is not installed, scalars will not be logged')
            return
        self.log_dir = pathlib.Path(log_dir).expanduser() / run_name
        self.log_dir.mkdir(parents=True, exist_ok=True)
        self.writer = SummaryWriter(str(self.log_dir))

    @property
    def available(self):
        return self.writer is not None

    def log_scalar(self, tag, value, step):
        if self.writer is not None:
            self.writer.add_scalar(tag, float(value), global_step=step)

    def log_scalars(self, scalars, step, prefix=''):
        for tag, value in scalars.items():
            self.log_scalar(prefix + tag, value, step)

    def close(self):
        if self.writer is not None:
            self.writer.close()
            self.writer = None

    def __repr__(self):
        where = self.log_dir if self.available else 'disabled'
        return 'TensorBoard({}, {})'.format(self.run_name, where)
