import math
from ..errors import NotGenericConfiguration
from .circles import lens_area
from .discs import (GENERIC, EMPTY, CONTAINED, DEGENERATE, identical_discs,
                    arc_polygon_area)
from .central import CentralAreaBreakdown, classify_config, central_area_generic

__all__ = ['triple_intersection_area']


def _pairwise_lenses(config):
    a, b, c = config.circles
    return (lens_area(a, b, config.r), lens_area(a, c, config.s), lens_area(b, c, config.t))


def _rescaled(breakdown, factor):
    segments = None
    if breakdown.seg1 is not None:
        segments = tuple(segment * factor for segment in breakdown.segments)
    triangle = breakdown.chord_triangle
    return CentralAreaBreakdown(breakdown.total * factor, breakdown.config_class,
                                thetas=None if breakdown.theta1 is None else breakdown.thetas,
                                segments=segments,
                                chord_triangle=None if triangle is None else triangle * factor,
                                note=breakdown.note)


def _unit_intersection_area(config):
    config_class, note = classify_config(config)
    if config_class == GENERIC:
        try:
            return central_area_generic(config)
        except NotGenericConfiguration as err:
            config_class, note = err.config_class, err.note
    discs = config.discs()
    if config_class == EMPTY:
        total = 0.0
    elif config_class == CONTAINED:
        total = min(_pairwise_lenses(config))
    elif config_class == DEGENERATE:
        if any(disc.radius == 0 for disc in discs):
            total = 0.0
        else:
            unique = []
            for disc in discs:
                if not any(identical_discs(disc, kept) for kept in unique):
                    unique.append(disc)
            if len(unique) == 1:
                total = math.pi * unique[0].radius ** 2
            elif len(unique) == 2:
                first, second = unique
                total = lens_area(first.radius, second.radius,
                                  math.hypot(first.x - second.x, first.y - second.y))
            else:
                total = arc_polygon_area(discs)
    else:
        total = arc_polygon_area(discs)
    return CentralAreaBreakdown(total, config_class, note=note)


def triple_intersection_area(config):
    r"""Area of the region common to all three discs, for every configuration.

    ``Generic`` configurations are delegated to :func:`central_area_generic`. ``Empty`` ones give
    0, ``Contained`` ones the smallest pairwise lens, identical discs collapse to a single disc or
    a single lens, and everything else is measured as a circular-arc polygon.

    The configuration is measured at the scale where its largest radius is 1 and the areas are
    scaled back, so the classification does not depend on the size of the probabilities.

    Args:
        config (TripleConfig): The solved configuration.

    Returns:
        A :class:`CentralAreaBreakdown`.
    """
    largest = max(config.circles)
    if largest <= 0 or largest == 1.0:
        return _unit_intersection_area(config)
    return _rescaled(_unit_intersection_area(config.scaled(1.0 / largest)), largest * largest)
