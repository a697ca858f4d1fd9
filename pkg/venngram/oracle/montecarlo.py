import math
import torch
from ..errors import DomainError
from ..geometry import Disc, triple_intersection_area

__all__ = ['AreaEstimate', 'discs_area_numeric', 'triple_area_numeric', 'lens_area_numeric',
           'compare_with_closed_form']

CHUNK_SIZE = 1 << 20


class AreaEstimate(object):
    r"""Monte Carlo estimate of an area.

    Args:
        mean (float): The estimated area.
        std_error (float): Binomial standard error of ``mean``.
        samples (int): Number of points drawn.
    """
    def __init__(self, mean, std_error, samples):
        if std_error < 0:
            raise DomainError("Standard error must be nonnegative, got {}".format(std_error))
        if samples < 1:
            raise DomainError("At least one sample is needed, got {}".format(samples))
        self.mean = float(mean)
        self.std_error = float(std_error)
        self.samples = int(samples)

    def __eq__(self, other):
        return (isinstance(other, AreaEstimate) and self.mean == other.mean and
                self.std_error == other.std_error and self.samples == other.samples)

    def __repr__(self):
        return "AreaEstimate(mean={!r}, std_error={!r}, samples={!r})".format(
            self.mean, self.std_error, self.samples)


def _common_box(discs):
    x0 = max(disc.x - disc.radius for disc in discs)
    x1 = min(disc.x + disc.radius for disc in discs)
    y0 = max(disc.y - disc.radius for disc in discs)
    y1 = min(disc.y + disc.radius for disc in discs)
    return x0, x1, y0, y1


def discs_area_numeric(discs, samples, seed):
    r"""Estimates the area common to all ``discs`` by uniform rejection sampling.

    Points are drawn from the intersection of the discs' bounding boxes, which contains the
    common region, in float64 chunks of fixed size from a seeded ``torch.Generator``. The estimate
    is the box area times the fraction of points falling inside every disc.

    Args:
        discs (sequence): The :class:`venngram.geometry.Disc` objects.
        samples (int): Number of points to draw.
        seed (int): Seed of the generator. Equal arguments give equal estimates.

    Returns:
        An :class:`AreaEstimate`.
    """
    if samples < 1:
        raise DomainError("At least one sample is needed, got {}".format(samples))
    x0, x1, y0, y1 = _common_box(discs)
    width, height = x1 - x0, y1 - y0
    if width <= 0 or height <= 0:
        return AreaEstimate(0.0, 0.0, samples)
    box_area = width * height
    generator = torch.Generator()
    generator.manual_seed(seed)
    hits = 0
    remaining = samples
    while remaining > 0:
        size = min(CHUNK_SIZE, remaining)
        points = torch.rand(size, 2, generator=generator, dtype=torch.float64)
        x = x0 + width * points[:, 0]
        y = y0 + height * points[:, 1]
        mask = torch.ones(size, dtype=torch.bool)
        for disc in discs:
            mask &= (x - disc.x) ** 2 + (y - disc.y) ** 2 <= disc.radius ** 2
        hits += int(mask.sum().item())
        remaining -= size
    fraction = hits / float(samples)
    std_error = box_area * math.sqrt(fraction * (1.0 - fraction) / samples)
    return AreaEstimate(box_area * fraction, std_error, samples)


def triple_area_numeric(config, samples, seed):
    r"""Monte Carlo estimate of the central area of a :class:`venngram.geometry.TripleConfig`.

    Args:
        config (venngram.geometry.TripleConfig): The configuration.
        samples (int): Number of points to draw.
        seed (int): Seed of the generator.

    Returns:
        An :class:`AreaEstimate`.
    """
    return discs_area_numeric(config.discs(), samples, seed)


def lens_area_numeric(r1, r2, d, samples, seed):
    r"""Monte Carlo estimate of the lens of two discs whose centers are ``d`` apart.

    Args:
        r1 (float): Radius of the first disc.
        r2 (float): Radius of the second disc.
        d (float): Distance between the centers.
        samples (int): Number of points to draw.
        seed (int): Seed of the generator.

    Returns:
        An :class:`AreaEstimate`.
    """
    if r1 < 0 or r2 < 0 or d < 0:
        raise DomainError("Radii and distance must be nonnegative, got {}, {}, {}".format(r1, r2, d))
    return discs_area_numeric([Disc(0.0, 0.0, r1), Disc(d, 0.0, r2)], samples, seed)


def compare_with_closed_form(config, samples, seed):
    r"""Runs the closed-form central area and the sampler on the same configuration.

    Returns:
        A tuple ``(breakdown, estimate, z)`` where ``z`` is the deviation of the closed form from
        the estimate in units of its standard error (0 when both are exactly equal).
    """
    breakdown = triple_intersection_area(config)
    estimate = triple_area_numeric(config, samples, seed)
    deviation = breakdown.total - estimate.mean
    if estimate.std_error > 0:
        z = deviation / estimate.std_error
    else:
        z = 0.0 if deviation == 0 else math.copysign(float('inf'), deviation)
    return breakdown, estimate, z
