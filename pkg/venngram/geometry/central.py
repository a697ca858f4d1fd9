import math
from ..errors import DomainError, DegenerateDistance, ConfigurationInfeasible, NotGenericConfiguration
from ..utils import safe_acos
from .circles import TRIANGLE_SLACK
from .discs import (GENERIC, EMPTY, PAIRWISE_LENS, CONTAINED, DEGENERATE, identical_discs,
                    contained_disc, triple_vertices)

__all__ = ['CentralAreaBreakdown', 'central_angles', 'segment_area', 'chord_triangle_area',
           'classify_config', 'central_area_generic']


class CentralAreaBreakdown(object):
    r"""The central area of a three-circle configuration together with the pieces it is built
    from.

    For a ``Generic`` configuration ``total = seg1 + seg2 + seg3 + chord_triangle``. For the other
    classes the angle, segment and triangle fields are ``None`` and only ``total`` is meaningful.

    Args:
        total (float): The central area :math:`S`.
        config_class (str): One of ``Generic``, ``Empty``, ``PairwiseLens``, ``Contained`` and
            ``Degenerate``.
        thetas (tuple, optional): The three arc angles in radians.
        segments (tuple, optional): The three circular segment areas.
        chord_triangle (float, optional): Area of the triangle spanned by the three corners.
        note (str, optional): Free-text detail on how the area was obtained.
    """
    def __init__(self, total, config_class, thetas=None, segments=None, chord_triangle=None,
                 note=None):
        self.total = float(total)
        self.config_class = config_class
        self.theta1, self.theta2, self.theta3 = thetas if thetas is not None else (None,) * 3
        self.seg1, self.seg2, self.seg3 = segments if segments is not None else (None,) * 3
        self.chord_triangle = chord_triangle
        self.note = note

    @property
    def thetas(self):
        return (self.theta1, self.theta2, self.theta3)

    @property
    def segments(self):
        return (self.seg1, self.seg2, self.seg3)

    def to_dict(self):
        return {
            'theta1': self.theta1, 'theta2': self.theta2, 'theta3': self.theta3,
            'seg1': self.seg1, 'seg2': self.seg2, 'seg3': self.seg3,
            'chord_triangle': self.chord_triangle,
            'total': self.total,
            'config_class': self.config_class,
            'note': self.note,
        }

    def __repr__(self):
        return "CentralAreaBreakdown(total={!r}, config_class={!r})".format(self.total, self.config_class)


def central_angles(a, b, c, r, s, t, slack=1e-12):
    r"""Arc angles of the central curvilinear triangle.

    .. math::
        \theta_1 = \arccos\frac{a^2 + s^2 - c^2}{2as} + \arccos\frac{a^2 + r^2 - b^2}{2ar}
                   - \arccos\frac{r^2 + s^2 - t^2}{2rs}

    and analogously for :math:`\theta_2` (circle B) and :math:`\theta_3` (circle C). A
    non-positive angle means the three circles do not bound a curvilinear triangle.

    Args:
        a (float): Radius of A.
        b (float): Radius of B.
        c (float): Radius of C.
        r (float): Distance between A and B.
        s (float): Distance between A and C.
        t (float): Distance between B and C.
        slack (float, optional): Roundoff tolerated in the arccos arguments.

    Returns:
        The tuple ``(theta1, theta2, theta3)``.
    """
    if r == 0 or s == 0 or t == 0:
        raise DegenerateDistance("Center distances must be positive, got r={}, s={}, t={}".format(r, s, t))
    if a <= 0 or b <= 0 or c <= 0:
        raise DomainError("Radii must be positive, got {}, {}, {}".format(a, b, c))

    def acos(x):
        return safe_acos(x, slack)

    theta1 = (acos((a * a + s * s - c * c) / (2 * a * s)) + acos((a * a + r * r - b * b) / (2 * a * r)) -
              acos((r * r + s * s - t * t) / (2 * r * s)))
    theta2 = (acos((b * b + t * t - c * c) / (2 * b * t)) + acos((b * b + r * r - a * a) / (2 * b * r)) -
              acos((r * r + t * t - s * s) / (2 * r * t)))
    theta3 = (acos((c * c + s * s - a * a) / (2 * c * s)) + acos((c * c + t * t - b * b) / (2 * c * t)) -
              acos((t * t + s * s - r * r) / (2 * t * s)))
    return theta1, theta2, theta3


def segment_area(theta, radius):
    r"""Area between a circular arc of angle ``theta`` and its chord.

    .. math:: S = \frac{\theta}{2} R^2 - R^2 \sin\frac{\theta}{2} \cos\frac{\theta}{2}

    Args:
        theta (float): The arc angle in radians, within :math:`[0, 2\pi]`.
        radius (float): The circle radius.

    Returns:
        The segment area.
    """
    if theta < 0 or theta > 2 * math.pi:
        raise DomainError("Arc angle must lie in [0, 2pi], got {}".format(theta))
    half = 0.5 * theta
    return max(half * radius ** 2 - radius ** 2 * math.sin(half) * math.cos(half), 0.0)


def chord_triangle_area(theta1, theta2, theta3, a, b, c, slack=TRIANGLE_SLACK):
    r"""Area of the triangle whose sides are the three chords :math:`2a\sin(\theta_1/2)`,
    :math:`2b\sin(\theta_2/2)` and :math:`2c\sin(\theta_3/2)`, by Heron's formula

    .. math:: \frac{1}{4}\sqrt{p(p - 2x)(p - 2y)(p - 2z)}, \quad p = x + y + z

    Args:
        theta1 (float): Arc angle on A.
        theta2 (float): Arc angle on B.
        theta3 (float): Arc angle on C.
        a (float): Radius of A.
        b (float): Radius of B.
        c (float): Radius of C.
        slack (float, optional): Tolerated violation of the triangle inequality.

    Returns:
        The triangle area.
    """
    for theta in (theta1, theta2, theta3):
        if theta < 0 or theta > 2 * math.pi:
            raise DomainError("Arc angle must lie in [0, 2pi], got {}".format(theta))
    x = 2 * a * math.sin(0.5 * theta1)
    y = 2 * b * math.sin(0.5 * theta2)
    z = 2 * c * math.sin(0.5 * theta3)
    if x > y + z + slack or y > x + z + slack or z > x + y + slack:
        raise ConfigurationInfeasible((x, y, z),
                                      "Chords {}, {}, {} violate the triangle inequality".format(x, y, z))
    p = x + y + z
    product = p * max(p - 2 * x, 0.0) * max(p - 2 * y, 0.0) * max(p - 2 * z, 0.0)
    return 0.25 * math.sqrt(product)


def classify_config(config):
    r"""Determines the configuration class of three discs.

    Args:
        config (TripleConfig): The solved configuration.

    Returns:
        A tuple ``(config_class, note)``.
    """
    discs = config.discs()
    names = 'ABC'
    if any(disc.radius == 0 for disc in discs):
        return DEGENERATE, "zero radius"
    if any(identical_discs(discs[i], discs[j]) for i, j in ((0, 1), (0, 2), (1, 2))):
        return DEGENERATE, "identical discs"
    if config.dist_ab == 0 or config.dist_ac == 0 or config.dist_bc == 0:
        return DEGENERATE, "coincident centers"
    vertices = triple_vertices(discs)
    if not vertices:
        inner = contained_disc(discs)
        if inner is None:
            return EMPTY, None
        return CONTAINED, "disc {} inside both others".format(names[inner])
    pairs = sorted(pair for _, pair in vertices)
    if len(pairs) == 2 and pairs[0] == pairs[1]:
        i, j = pairs[0]
        return CONTAINED, "lens {}{} inside disc {}".format(names[i], names[j], names[3 - i - j])
    if pairs == [(0, 1), (0, 2), (1, 2)]:
        points = [point for point, _ in vertices]
        spread = max(math.hypot(p[0] - q[0], p[1] - q[1]) for p in points for q in points)
        if spread <= 1e-12 * max(1.0, max(config.circles)):
            return PAIRWISE_LENS, "single common point"
        a, b, c = config.circles
        try:
            thetas = central_angles(a, b, c, config.r, config.s, config.t)
        except (DomainError, DegenerateDistance):
            return PAIRWISE_LENS, "arc angles undefined"
        if all(0 < theta < math.pi for theta in thetas):
            return GENERIC, None
        return PAIRWISE_LENS, "arc angle outside (0, pi)"
    return PAIRWISE_LENS, "{} corners".format(len(vertices))


def central_area_generic(config):
    r"""Central area by the curvilinear-triangle construction: the three arc angles, the three
    circular segments, the chord triangle and their sum.

    Args:
        config (TripleConfig): A configuration whose three discs bound a curvilinear triangle.

    Returns:
        A :class:`CentralAreaBreakdown` of class ``Generic``.

    :raises NotGenericConfiguration: Carrying the detected class when the construction does not
        apply.
    """
    config_class, note = classify_config(config)
    if config_class != GENERIC:
        raise NotGenericConfiguration(config_class, note)
    a, b, c = config.circles
    thetas = central_angles(a, b, c, config.r, config.s, config.t)
    segments = tuple(segment_area(theta, radius) for theta, radius in zip(thetas, (a, b, c)))
    try:
        triangle = chord_triangle_area(thetas[0], thetas[1], thetas[2], a, b, c)
    except ConfigurationInfeasible:
        raise NotGenericConfiguration(PAIRWISE_LENS, "chord triangle infeasible")
    total = segments[0] + segments[1] + segments[2] + triangle
    return CentralAreaBreakdown(total, GENERIC, thetas=thetas, segments=segments,
                                chord_triangle=triangle)
