import math
import numpy as np
from pkgutil import iter_modules
from .errors import DomainError

__all__ = ['reduce', 'getenv_defaults', 'safe_acos']

def reduce(x, reduction=None):
    r"""Applies reduction on a numpy array.

    Args:
        x (numpy.ndarray): The array on which reduction is to be applied.
        reduction (str, optional): The reduction to be applied. If ``mean`` the mean value of the
            array is returned. If ``sum`` the elements of the array will be summed. If none of the
            above then the array is returned without any change.

    Returns:
        As per the above ``reduction`` convention.
    """
    if reduction == "mean":
        return float(np.mean(x))
    elif reduction == "sum":
        return float(np.sum(x))
    else:
        return x

def getenv_defaults(module_name):
    r"""Determines if a particular package is installed in the system.

    Args:
        module_name (str): The name of the package to be found.

    Returns:
        1 if package is installed else 0
    """
    return int(module_name in (name for loader, name, ispkg in iter_modules()))

def safe_acos(x, slack=1e-12):
    r"""Arccosine which tolerates roundoff just outside ``[-1, 1]``.

    Arguments within ``slack`` of the interval are clamped onto it. Anything further away is
    genuinely infeasible geometry and is reported instead of being clamped.

    Args:
        x (float): The cosine value.
        slack (float, optional): Largest excursion outside ``[-1, 1]`` treated as roundoff.

    Returns:
        The angle in radians, in ``[0, pi]``.

    :raises DomainError: If ``x`` lies outside ``[-1 - slack, 1 + slack]``.
    """
    if x > 1.0:
        if x > 1.0 + slack:
            raise DomainError("arccos argument {} exceeds 1".format(x))
        return 0.0
    if x < -1.0:
        if x < -1.0 - slack:
            raise DomainError("arccos argument {} is below -1".format(x))
        return math.pi
    return math.acos(x)
