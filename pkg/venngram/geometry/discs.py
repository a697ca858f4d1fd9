import math
from itertools import combinations

__all__ = ['GENERIC', 'EMPTY', 'PAIRWISE_LENS', 'CONTAINED', 'DEGENERATE', 'CONFIG_CLASSES',
           'circle_intersections', 'inside_disc', 'triple_vertices', 'arc_polygon_area',
           'contained_disc', 'identical_discs']

GENERIC = 'Generic'
EMPTY = 'Empty'
PAIRWISE_LENS = 'PairwiseLens'
CONTAINED = 'Contained'
DEGENERATE = 'Degenerate'
CONFIG_CLASSES = (GENERIC, EMPTY, PAIRWISE_LENS, CONTAINED, DEGENERATE)

_REL_EPS = 1e-12


def _scale(discs):
    return max(1.0, max(disc.radius for disc in discs))


def circle_intersections(d1, d2):
    r"""Crossing points of two circles.

    Args:
        d1 (Disc): The first circle.
        d2 (Disc): The second circle.

    Returns:
        A list with 0 or 2 ``(x, y)`` points. Disjoint, nested, concentric and tangent circles
        give an empty list.
    """
    dx, dy = d2.x - d1.x, d2.y - d1.y
    d = math.hypot(dx, dy)
    if d == 0 or d >= d1.radius + d2.radius or d <= abs(d1.radius - d2.radius):
        return []
    along = (d1.radius ** 2 - d2.radius ** 2 + d * d) / (2.0 * d)
    h2 = d1.radius ** 2 - along ** 2
    if h2 <= 0:
        return []
    h = math.sqrt(h2)
    ux, uy = dx / d, dy / d
    mx, my = d1.x + along * ux, d1.y + along * uy
    return [(mx + h * uy, my - h * ux), (mx - h * uy, my + h * ux)]


def inside_disc(point, disc, eps=0.0):
    return math.hypot(point[0] - disc.x, point[1] - disc.y) <= disc.radius + eps


def identical_discs(d1, d2, eps=_REL_EPS):
    scale = max(1.0, d1.radius, d2.radius)
    return (abs(d1.radius - d2.radius) <= eps * scale and
            math.hypot(d1.x - d2.x, d1.y - d2.y) <= eps * scale)


def contained_disc(discs, eps=_REL_EPS):
    r"""Index of the smallest disc lying inside every other disc, or ``None``."""
    scale = _scale(discs)
    best = None
    for i, disc in enumerate(discs):
        if all(math.hypot(disc.x - other.x, disc.y - other.y) + disc.radius <= other.radius + eps * scale
               for j, other in enumerate(discs) if j != i):
            if best is None or disc.radius < discs[best].radius:
                best = i
    return best


def triple_vertices(discs, eps=_REL_EPS):
    r"""Corners of the common intersection of the discs.

    A corner is a crossing point of two circles which lies inside every remaining disc.

    Args:
        discs (sequence): The :class:`Disc` objects.
        eps (float, optional): Relative tolerance of the membership test.

    Returns:
        A list of ``(point, (i, j))`` pairs where ``i`` and ``j`` index the crossing circles.
    """
    scale = _scale(discs)
    vertices = []
    for i, j in combinations(range(len(discs)), 2):
        for point in circle_intersections(discs[i], discs[j]):
            if all(inside_disc(point, discs[k], eps * scale)
                   for k in range(len(discs)) if k != i and k != j):
                vertices.append((point, (i, j)))
    return vertices


def arc_polygon_area(discs, eps=_REL_EPS):
    r"""Area of the common intersection of a set of discs, treated as a circular-arc polygon.

    The boundary of the intersection is a sequence of circle arcs meeting at the corners found by
    :func:`triple_vertices`. On every circle the corners are sorted by angle and each arc between
    consecutive corners is kept when its midpoint lies inside all the other discs. Traversing the
    kept arcs counterclockwise, the area is the shoelace sum over their chords plus the circular
    segment :math:`\frac{R^2}{2}(\Delta - \sin\Delta)` cut off by each chord.

    Args:
        discs (sequence): The :class:`Disc` objects. Identical discs must be merged beforehand.
        eps (float, optional): Relative tolerance of the membership tests.

    Returns:
        The area, ``0.0`` for an empty intersection.
    """
    discs = list(discs)
    if any(disc.radius <= 0 for disc in discs):
        return 0.0
    scale = _scale(discs)
    vertices = triple_vertices(discs, eps)
    if not vertices:
        inner = contained_disc(discs, eps)
        if inner is None:
            return 0.0
        return math.pi * discs[inner].radius ** 2

    shoelace, segments = 0.0, 0.0
    for i, disc in enumerate(discs):
        angles = []
        for point, pair in vertices:
            if i in pair:
                angle = math.atan2(point[1] - disc.y, point[0] - disc.x) % (2.0 * math.pi)
                if all(abs(angle - other) > 1e-12 for other in angles):
                    angles.append(angle)
        if not angles:
            continue
        angles.sort()
        for pos, start in enumerate(angles):
            end = angles[(pos + 1) % len(angles)]
            sweep = (end - start) % (2.0 * math.pi)
            if sweep == 0.0:
                sweep = 2.0 * math.pi
            middle = start + 0.5 * sweep
            arc_point = (disc.x + disc.radius * math.cos(middle), disc.y + disc.radius * math.sin(middle))
            if not all(inside_disc(arc_point, other, eps * scale)
                       for j, other in enumerate(discs) if j != i):
                continue
            x1, y1 = disc.x + disc.radius * math.cos(start), disc.y + disc.radius * math.sin(start)
            x2, y2 = disc.x + disc.radius * math.cos(end), disc.y + disc.radius * math.sin(end)
            shoelace += x1 * y2 - x2 * y1
            segments += 0.5 * disc.radius ** 2 * (sweep - math.sin(sweep))
    area = 0.5 * shoelace + segments
    upper = min(math.pi * disc.radius ** 2 for disc in discs)
    return min(max(area, 0.0), upper)
