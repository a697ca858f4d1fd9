import os
from ..utils import getenv_defaults

__all__ = ['TENSORBOARD_LOGGING', 'CONSOLE_LOGGING', 'VISDOM_LOGGING', 'SWEEP_LOG_INTERVAL',
           'enabled_backends']

# Every switch is read once, when ``venngram`` is first imported.

# Tensorboard
TENSORBOARD_LOGGING = int(os.getenv("TENSORBOARD_LOGGING", getenv_defaults("tensorboardX")))
if TENSORBOARD_LOGGING == 1 and getenv_defaults("tensorboardX") == 0:
    raise ImportError("TensorboardX is not installed. Install it or set TENSORBOARD_LOGGING to 0")

# Console, written to standard error
CONSOLE_LOGGING = int(os.getenv("CONSOLE_LOGGING", 1))

# Visdom
VISDOM_LOGGING = int(os.getenv("VISDOM_LOGGING", getenv_defaults("visdom")))
if VISDOM_LOGGING == 1 and getenv_defaults("visdom") == 0:
    raise ImportError("Visdom is not installed. Install it or set VISDOM_LOGGING to 0")

# Number of copies between two progress reports of a sweep
SWEEP_LOG_INTERVAL = max(1, int(os.getenv("SWEEP_LOG_INTERVAL", 100)))


def enabled_backends():
    r"""Names of the logging backends switched on in this process."""
    flags = (("console", CONSOLE_LOGGING), ("tensorboard", TENSORBOARD_LOGGING),
             ("visdom", VISDOM_LOGGING))
    return [name for name, flag in flags if flag == 1]
