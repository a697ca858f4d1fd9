from .backends import *
from .visualize import *
if TENSORBOARD_LOGGING == 1:
    from tensorboardX import SummaryWriter

__all__ = ['Logger']


class Logger(object):
    r"""Controls the Visualizers of an experiment sweep.

    The sweep reports every record through :meth:`run_copy`; a progress report is emitted every
    ``interval`` copies. :meth:`run_end_sweep` reports the fit and the fluctuation profile.

    Args:
        log_dir (str, optional): Directory where TensorboardX should store the logs. This is
            ignored if ``TENSORBOARD_LOGGING`` is ``0``.
        writer (tensorboardX.SummaryWriter, optional): Send a ``SummaryWriter`` if you
            don't want to start a new SummaryWriter.
        visdom_port (int, optional): Port of a running ``visdom`` server. This is ignored if
            ``VISDOM_LOGGING`` is ``0``.
        interval (int, optional): Number of copies between two progress reports.
    """
    def __init__(self, log_dir=None, writer=None, visdom_port=8097, interval=SWEEP_LOG_INTERVAL):
        if TENSORBOARD_LOGGING == 1:
            self.writer = SummaryWriter(log_dir) if writer is None else writer
        else:
            self.writer = None
        self.interval = max(1, int(interval))
        self.sweep = SweepVisualize(visdom_port=visdom_port, writer=self.writer)
        self.fit = FitVisualize(visdom_port=visdom_port, writer=self.writer)
        self.fluctuation = FluctuationVisualize(visdom_port=visdom_port, writer=self.writer)
        self.copies_seen = 0

    def run_copy(self, record):
        r"""Accounts one :class:`venngram.experiment.CopyRecord`.

        Args:
            record (venngram.experiment.CopyRecord): The record of the copy just finished.
        """
        self.sweep.update(record)
        self.copies_seen += 1
        if self.copies_seen % self.interval == 0:
            self.sweep()

    def run_end_sweep(self, fit=None, profile=None):
        r"""Reports the final state of a sweep.

        Args:
            fit (venngram.experiment.FitResult, optional): The calibration fit.
            profile (list, optional): The fluctuation profile.
        """
        if self.copies_seen % self.interval != 0:
            self.sweep()
        if fit is not None:
            self.fit(fit)
        if profile is not None:
            self.fluctuation(profile)
        self.sweep.reset()
        self.copies_seen = 0

    def close(self):
        r"""Turns off the tensorboard ``SummaryWriter`` if it were created."""
        if self.writer is not None:
            self.writer.close()
