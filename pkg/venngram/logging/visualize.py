import sys
from .backends import *
if TENSORBOARD_LOGGING == 1:
    from tensorboardX import SummaryWriter
if VISDOM_LOGGING == 1:
    import visdom

__all__ = ['Visualize', 'SweepVisualize', 'FitVisualize', 'FluctuationVisualize']


class Visualize(object):
    r"""Base class for all Visualizations.

    Args:
        visualize_list (list): Names of the quantities tracked in ``logs``.
        visdom_port (int, optional): Port to log using ``visdom``. The visdom server needs to be
            manually started at this port else an error will be thrown and the code will crash.
            This is ignored if ``VISDOM_LOGGING`` is ``0``.
        log_dir (str, optional): Directory where TensorboardX should store the logs. This is
            ignored if ``TENSORBOARD_LOGGING`` is ``0``.
        writer (tensorboardX.SummaryWriter, optional): Send a ``SummaryWriter`` if you
            don't want to start a new SummaryWriter.
    """
    def __init__(self, visualize_list, visdom_port=8097, log_dir=None, writer=None):
        self.logs = {}
        for name in visualize_list:
            self.logs[name] = []
        self.step = 1
        self.writer = None
        self.vis = None
        if TENSORBOARD_LOGGING == 1:
            self._build_tensorboard(log_dir, writer)
        if VISDOM_LOGGING == 1:
            self._build_visdom(visdom_port)

    def _build_tensorboard(self, log_dir, writer):
        r"""Starts the tensorboard logging utilities.

        Args:
            log_dir (str, optional): Directory where TensorboardX should store the logs.
            writer (tensorboardX.SummaryWriter, optional): Send a ``SummaryWriter`` if you
                don't want to start a new SummaryWriter.
        """
        self.writer = SummaryWriter(log_dir) if writer is None else writer

    def _build_visdom(self, port):
        r"""Starts the visdom logging utilities.

        Args:
            port (int, optional): Port of a running ``visdom`` server.
        """
        self.vis = visdom.Visdom(port=port)

    def step_update(self):
        r"""Advances the step counter after one report."""
        self.step += 1

    def latest(self):
        r"""The most recent value of every tracked quantity."""
        return {name: values[-1] for name, values in self.logs.items() if values}

    def log_tensorboard(self, *args):
        r"""Tensorboard logging function. Needs to be defined in the subclass

        :raises NotImplementedError:
        """
        raise NotImplementedError

    def log_console(self, *args):
        r"""Console logging function. Needs to be defined in the subclass

        :raises NotImplementedError:
        """
        raise NotImplementedError

    def log_visdom(self, *args):
        r"""Visdom logging function. Needs to be defined in the subclass

        :raises NotImplementedError:
        """
        raise NotImplementedError

    def _scalars_tensorboard(self, prefix):
        for name, value in self.latest().items():
            self.writer.add_scalar("{}/{}".format(prefix, name), value, self.step)

    def _scalars_visdom(self, xlabel):
        for name, value in self.latest().items():
            self.vis.line([value], [self.step], win=name, update="append",
                          opts=dict(title=name, xlabel=xlabel, ylabel=name))

    def __call__(self, *args, lock_console=False, lock_tensorboard=False, lock_visdom=False,
                 **kwargs):
        if not lock_console and CONSOLE_LOGGING == 1:
            self.log_console(*args, **kwargs)
        if not lock_tensorboard and TENSORBOARD_LOGGING == 1:
            self.log_tensorboard(*args, **kwargs)
        if not lock_visdom and VISDOM_LOGGING == 1:
            self.log_visdom(*args, **kwargs)
        self.step_update()


class SweepVisualize(Visualize):
    r"""Progress of an experiment sweep: how many copies produced a central area, how many were
    geometrically infeasible, and the running means of :math:`S` and the empirical
    :math:`P(ABC)` over the solved copies.

    Args:
        visdom_port (int, optional): Port to log using ``visdom``.
        log_dir (str, optional): Directory where TensorboardX should store the logs.
        writer (tensorboardX.SummaryWriter, optional): A shared ``SummaryWriter``.
    """
    NAMES = ["Solved Copies", "Infeasible Copies", "Mean S", "Mean P(ABC)"]

    def __init__(self, visdom_port=8097, log_dir=None, writer=None):
        super(SweepVisualize, self).__init__(self.NAMES, visdom_port=visdom_port, log_dir=log_dir,
                                             writer=writer)
        self.reset()

    def reset(self):
        r"""Starts the running counts of a new sweep. Logged history is kept."""
        self.solved = 0
        self.infeasible = 0
        self.sum_area = 0.0
        self.sum_pabc = 0.0

    def update(self, record):
        r"""Accumulates one :class:`venngram.experiment.CopyRecord` without reporting."""
        if record.central_area is None:
            self.infeasible += 1
        else:
            self.solved += 1
            self.sum_area += record.central_area
            self.sum_pabc += record.stats.pABC
        mean_area = self.sum_area / self.solved if self.solved else 0.0
        mean_pabc = self.sum_pabc / self.solved if self.solved else 0.0
        for name, value in zip(self.NAMES, [self.solved, self.infeasible, mean_area, mean_pabc]):
            self.logs[name].append(value)

    def log_console(self):
        r"""Prints the running counts and means to standard error."""
        latest = self.latest()
        print("Copies solved : {} | infeasible : {} | mean S : {:.6f} | mean P(ABC) : {:.6f}".format(
            latest["Solved Copies"], latest["Infeasible Copies"], latest["Mean S"],
            latest["Mean P(ABC)"]), file=sys.stderr)

    def log_tensorboard(self):
        self._scalars_tensorboard("Sweep")

    def log_visdom(self):
        self._scalars_visdom("Reports")


class FitVisualize(Visualize):
    r"""Result of fitting :math:`P \approx kS + kS^2` on a sweep.

    Args:
        visdom_port (int, optional): Port to log using ``visdom``.
        log_dir (str, optional): Directory where TensorboardX should store the logs.
        writer (tensorboardX.SummaryWriter, optional): A shared ``SummaryWriter``.
    """
    NAMES = ["k", "RSS", "Pearson r", "Spearman rho", "Residual Std", "Skipped Copies"]

    def __init__(self, visdom_port=8097, log_dir=None, writer=None):
        super(FitVisualize, self).__init__(self.NAMES, visdom_port=visdom_port, log_dir=log_dir,
                                           writer=writer)

    def log_console(self, fit):
        for name, value in self.latest().items():
            print('{} : {}'.format(name, value), file=sys.stderr)

    def log_tensorboard(self, fit):
        self._scalars_tensorboard("Fit")

    def log_visdom(self, fit):
        self._scalars_visdom("Fits")

    def __call__(self, fit, **kwargs):
        values = [fit.k, fit.rss, fit.pearson_r, fit.spearman_rho, fit.residual_std, fit.skipped_copies]
        for name, value in zip(self.NAMES, values):
            self.logs[name].append(value)
        super(FitVisualize, self).__call__(fit, **kwargs)


class FluctuationVisualize(Visualize):
    r"""Rolling standard deviation of :math:`S` along the records sorted by :math:`P(ABC)`, i.e.
    the width of the :math:`S` curve.

    Args:
        visdom_port (int, optional): Port to log using ``visdom``.
        log_dir (str, optional): Directory where TensorboardX should store the logs.
        writer (tensorboardX.SummaryWriter, optional): A shared ``SummaryWriter``.
    """
    def __init__(self, visdom_port=8097, log_dir=None, writer=None):
        super(FluctuationVisualize, self).__init__(["Rolling Std of S", "Mean Rolling Std of S"],
                                                   visdom_port=visdom_port, log_dir=log_dir,
                                                   writer=writer)

    def log_console(self, profile):
        print('Mean Rolling Std of S : {}'.format(self.logs["Mean Rolling Std of S"][-1]),
              file=sys.stderr)

    def log_tensorboard(self, profile):
        for index, (_, std) in enumerate(profile):
            self.writer.add_scalar("Fluctuation/Rolling Std of S", std, index)
        self.writer.add_scalar("Fluctuation/Mean Rolling Std of S",
                               self.logs["Mean Rolling Std of S"][-1], self.step)

    def log_visdom(self, profile):
        centres = [centre for centre, _ in profile]
        stds = [std for _, std in profile]
        self.vis.line(stds, centres, win="Rolling Std of S",
                      opts=dict(title="Rolling Std of S", xlabel="P(ABC)", ylabel="Std of S"))

    def __call__(self, profile, **kwargs):
        stds = [std for _, std in profile]
        self.logs["Rolling Std of S"].append(stds)
        self.logs["Mean Rolling Std of S"].append(sum(stds) / len(stds) if stds else 0.0)
        super(FluctuationVisualize, self).__call__(profile, **kwargs)
