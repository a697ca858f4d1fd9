import math
from collections import namedtuple
from ..errors import DomainError, InfeasibleLens, ConfigurationInfeasible
from ..utils import safe_acos

__all__ = ['Disc', 'CircleTriple', 'TripleConfig', 'radius_from_prob', 'lens_area',
           'solve_center_distance', 'place_centers', 'build_config',
           'DEFAULT_TOL', 'MAX_BISECTION_ITERS', 'TRIANGLE_SLACK']

DEFAULT_TOL = 1e-12
MAX_BISECTION_ITERS = 200
TRIANGLE_SLACK = 1e-12

Disc = namedtuple('Disc', ['x', 'y', 'radius'])


class CircleTriple(object):
    r"""Radii of the three area-proportional circles. Areas are measured in probability mass,
    so :math:`\pi a^2 = P(A)`.

    Args:
        radius_a (float): Radius of the circle of event A.
        radius_b (float): Radius of the circle of event B.
        radius_c (float): Radius of the circle of event C.
    """
    def __init__(self, radius_a, radius_b, radius_c):
        for radius in (radius_a, radius_b, radius_c):
            if radius < 0:
                raise DomainError("Radius must be nonnegative, got {}".format(radius))
        self.radius_a = float(radius_a)
        self.radius_b = float(radius_b)
        self.radius_c = float(radius_c)

    @classmethod
    def from_probs(cls, p_a, p_b, p_c):
        return cls(radius_from_prob(p_a), radius_from_prob(p_b), radius_from_prob(p_c))

    def as_tuple(self):
        return (self.radius_a, self.radius_b, self.radius_c)

    def __iter__(self):
        return iter(self.as_tuple())

    def __repr__(self):
        return "CircleTriple(radius_a={!r}, radius_b={!r}, radius_c={!r})".format(*self.as_tuple())


class TripleConfig(object):
    r"""A solved three-circle configuration.

    The naming follows the construction: ``dist_ab`` is :math:`r`, ``dist_bc`` is :math:`t` and
    ``dist_ac`` is :math:`s`. Centers are stored as ``(x, y)`` pairs with A at the origin and B on
    the positive x axis.

    Args:
        circles (CircleTriple): The three radii.
        dist_ab (float): Distance between the centers of A and B.
        dist_bc (float): Distance between the centers of B and C.
        dist_ac (float): Distance between the centers of A and C.
        centers (tuple, optional): Three ``(x, y)`` points. Computed by :func:`place_centers` when
            omitted.
    """
    def __init__(self, circles, dist_ab, dist_bc, dist_ac, centers=None):
        for dist in (dist_ab, dist_bc, dist_ac):
            if dist < 0:
                raise DomainError("Center distance must be nonnegative, got {}".format(dist))
        self.circles = circles
        self.dist_ab = float(dist_ab)
        self.dist_bc = float(dist_bc)
        self.dist_ac = float(dist_ac)
        if centers is None:
            centers = place_centers(self.dist_ab, self.dist_ac, self.dist_bc)
        self.centers = tuple((float(x), float(y)) for x, y in centers)

    @classmethod
    def from_distances(cls, radius_a, radius_b, radius_c, r, s, t):
        r"""Builds a configuration from radii and the distances ``r = |AB|``, ``s = |AC|``,
        ``t = |BC|``.
        """
        return cls(CircleTriple(radius_a, radius_b, radius_c), r, t, s)

    @property
    def r(self):
        return self.dist_ab

    @property
    def s(self):
        return self.dist_ac

    @property
    def t(self):
        return self.dist_bc

    def discs(self):
        r"""Returns the three circles as :class:`Disc` tuples in the order A, B, C."""
        return tuple(Disc(x, y, radius) for (x, y), radius in zip(self.centers, self.circles))

    def scaled(self, factor):
        r"""Returns the configuration with every length multiplied by ``factor``."""
        radii = [radius * factor for radius in self.circles]
        return TripleConfig(CircleTriple(*radii), self.dist_ab * factor, self.dist_bc * factor,
                            self.dist_ac * factor,
                            centers=[(x * factor, y * factor) for x, y in self.centers])

    def reflected(self):
        r"""Returns the mirror image of the configuration in the x axis."""
        return TripleConfig(self.circles, self.dist_ab, self.dist_bc, self.dist_ac,
                            centers=[(x, -y) for x, y in self.centers])

    def to_dict(self):
        a, b, c = self.circles
        return {
            'radii': {'a': a, 'b': b, 'c': c},
            'distances': {'r': self.dist_ab, 's': self.dist_ac, 't': self.dist_bc},
            'centers': {name: list(point) for name, point in zip('ABC', self.centers)},
        }

    def __repr__(self):
        return "TripleConfig(circles={!r}, r={!r}, s={!r}, t={!r})".format(
            self.circles, self.dist_ab, self.dist_ac, self.dist_bc)


def radius_from_prob(p):
    r"""Radius of the circle whose area equals the probability ``p``.

    Args:
        p (float): A nonnegative probability.

    Returns:
        :math:`\sqrt{p / \pi}`.
    """
    if p < 0:
        raise DomainError("Probability must be nonnegative, got {}".format(p))
    return math.sqrt(p / math.pi)


def lens_area(r1, r2, d):
    r"""Area of the intersection of two discs.

    .. math:: r_1^2 \arccos\frac{d^2 + r_1^2 - r_2^2}{2 d r_1} +
              r_2^2 \arccos\frac{d^2 + r_2^2 - r_1^2}{2 d r_2} -
              \frac{1}{2}\sqrt{(r_1 + r_2 + d)(r_1 + r_2 - d)(r_1 + d - r_2)(r_2 + d - r_1)}

    Disjoint discs give 0 and a disc inside the other gives the smaller disc area.

    Args:
        r1 (float): Radius of the first disc.
        r2 (float): Radius of the second disc.
        d (float): Distance between the centers.

    Returns:
        The lens area.
    """
    if r1 < 0 or r2 < 0 or d < 0:
        raise DomainError("Radii and distance must be nonnegative, got {}, {}, {}".format(r1, r2, d))
    if r1 == 0 or r2 == 0 or d >= r1 + r2:
        return 0.0
    if d <= abs(r1 - r2):
        return math.pi * min(r1, r2) ** 2
    alpha = safe_acos((d * d + r1 * r1 - r2 * r2) / (2.0 * d * r1))
    beta = safe_acos((d * d + r2 * r2 - r1 * r1) / (2.0 * d * r2))
    kite = (r1 + r2 + d) * (r1 + r2 - d) * (r1 + d - r2) * (r2 + d - r1)
    return r1 * r1 * alpha + r2 * r2 * beta - 0.5 * math.sqrt(max(kite, 0.0))


def solve_center_distance(r1, r2, target, tol=DEFAULT_TOL, max_iters=MAX_BISECTION_ITERS):
    r"""Finds the center distance at which two discs overlap in exactly ``target`` area.

    The lens area strictly decreases in the distance on :math:`(|r_1 - r_2|, r_1 + r_2)`, so the
    distance is found by bisection over that bracket. Iteration stops once the area residual is
    within ``tol`` or after ``max_iters`` halvings.

    Discs smaller than the unit circle are solved at unit scale and the distance is scaled back,
    so ``tol`` bounds the residual relative to :math:`\max(r_1, r_2)^2` and never exceeds it in
    absolute terms.

    Args:
        r1 (float): Radius of the first disc.
        r2 (float): Radius of the second disc.
        target (float): Requested lens area, :math:`0 \le target \le \pi \min(r_1, r_2)^2`.
        tol (float, optional): Allowed area residual.
        max_iters (int, optional): Maximum number of bisection steps.

    Returns:
        The center distance.

    :raises InfeasibleLens: If the target exceeds the area of the smaller disc.
    """
    if tol <= 0:
        raise DomainError("Tolerance must be positive, got {}".format(tol))
    if r1 < 0 or r2 < 0:
        raise DomainError("Radii must be nonnegative, got {}, {}".format(r1, r2))
    if target < 0:
        raise DomainError("Lens area must be nonnegative, got {}".format(target))
    lo, hi = abs(r1 - r2), r1 + r2
    scale = min(1.0, max(r1, r2))
    if scale == 0:
        if target > tol:
            raise InfeasibleLens(r1, r2, target)
        return 0.0
    u1, u2, area = r1 / scale, r2 / scale, target / scale ** 2
    max_area = math.pi * min(u1, u2) ** 2
    if area > max_area + tol:
        raise InfeasibleLens(r1, r2, target)
    if area >= max_area - tol:
        return lo
    if area == 0:
        return hi
    left, right = abs(u1 - u2), u1 + u2
    mid = 0.5 * (left + right)
    for _ in range(max_iters):
        mid = 0.5 * (left + right)
        residual = lens_area(u1, u2, mid) - area
        if abs(residual) <= tol:
            break
        if residual > 0:
            left = mid
        else:
            right = mid
        if right - left <= 0.0:
            break
    return mid * scale


def place_centers(r, s, t, slack=TRIANGLE_SLACK):
    r"""Places the three centers in the plane.

    A is put at the origin, B at ``(r, 0)`` and C in the upper half plane with ``|AC| = s`` and
    ``|BC| = t``.

    Args:
        r (float): Distance between A and B.
        s (float): Distance between A and C.
        t (float): Distance between B and C.
        slack (float, optional): Tolerated violation of the triangle inequality, relative to the
            longest side when that is shorter than 1.

    Returns:
        A tuple of the three ``(x, y)`` centers.

    :raises ConfigurationInfeasible: If the distances cannot form a triangle.
    """
    if r < 0 or s < 0 or t < 0:
        raise DomainError("Distances must be nonnegative, got {}, {}, {}".format(r, s, t))
    slack = slack * min(1.0, max(r, s, t))
    if r > s + t + slack or s > r + t + slack or t > r + s + slack:
        raise ConfigurationInfeasible((r, s, t),
                                      "Distances r={}, s={}, t={} violate the triangle inequality"
                                      .format(r, s, t))
    if r == 0:
        return (0.0, 0.0), (0.0, 0.0), (float(s), 0.0)
    x = (r * r + s * s - t * t) / (2.0 * r)
    y = math.sqrt(max(s * s - x * x, 0.0))
    return (0.0, 0.0), (float(r), 0.0), (x, y)


def build_config(m, tol=DEFAULT_TOL):
    r"""Solves the area-proportional configuration for six known probabilities.

    The circle areas equal :math:`P(A), P(B), P(C)` and the center distances are adjusted until
    each pairwise lens equals :math:`P(AB), P(BC), P(AC)`.

    Args:
        m (venngram.probmodel.TripleMarginals): The six known probabilities.
        tol (float, optional): Area tolerance of each distance solve.

    Returns:
        A :class:`TripleConfig`.
    """
    circles = CircleTriple.from_probs(m.pA, m.pB, m.pC)
    a, b, c = circles
    r = solve_center_distance(a, b, m.pAB, tol)
    t = solve_center_distance(b, c, m.pBC, tol)
    s = solve_center_distance(a, c, m.pAC, tol)
    return TripleConfig(circles, r, t, s, centers=place_centers(r, s, t))
