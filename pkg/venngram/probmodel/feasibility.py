from .joint import TripleMarginals

__all__ = ['Violation', 'frechet_interval', 'check_pair', 'feasibility_check', 'triple_bounds']

_PAIRS = (('pAB', 'pA', 'pB'), ('pAC', 'pA', 'pC'), ('pBC', 'pB', 'pC'))


class Violation(object):
    r"""A single violated feasibility condition.

    Args:
        term (str): Name of the offending probability, e.g. ``pAB``.
        value (float): Its value.
        bound (float): The bound it violates.
        kind (str): ``range``, ``upper`` (Fréchet upper bound :math:`\min(P(X), P(Y))`) or ``lower``
            (Fréchet lower bound :math:`\max(0, P(X) + P(Y) - 1)`).
    """
    def __init__(self, term, value, bound, kind):
        self.term = term
        self.value = value
        self.bound = bound
        self.kind = kind

    @property
    def message(self):
        if self.kind == 'range':
            return "{} = {} lies outside [0, 1]".format(self.term, self.value)
        if self.kind == 'upper':
            return "{} = {} exceeds its Fréchet upper bound min of the single probabilities = {}".format(
                self.term, self.value, self.bound)
        return "{} = {} is below its Fréchet lower bound max(0, sum of single probabilities - 1) = {}".format(
            self.term, self.value, self.bound)

    def __str__(self):
        return self.message

    def __repr__(self):
        return "Violation({!r}, {!r}, {!r}, {!r})".format(self.term, self.value, self.bound, self.kind)


def frechet_interval(pX, pY):
    r"""Feasible interval :math:`[\max(0, P(X) + P(Y) - 1), \min(P(X), P(Y))]` of :math:`P(XY)`."""
    return max(0.0, pX + pY - 1.0), min(pX, pY)


def _clip_unit(term, value, violations, slack):
    if value < -slack or value > 1.0 + slack:
        violations.append(Violation(term, value, 0.0 if value < 0 else 1.0, 'range'))
    return min(max(value, 0.0), 1.0)


def check_pair(pX, pY, pXY, term='pXY', slack=1e-12):
    r"""Checks one pairwise probability against its Fréchet interval.

    Args:
        pX (float): First single probability, assumed within ``[0, 1]``.
        pY (float): Second single probability, assumed within ``[0, 1]``.
        pXY (float): The pairwise probability.
        term (str, optional): Name used in the reported violations.
        slack (float, optional): Roundoff tolerated before a bound counts as violated.

    Returns:
        A tuple ``(violations, clamped)`` with the list of :class:`Violation` and the pairwise
        probability projected into its interval.
    """
    violations = []
    value = _clip_unit(term, pXY, violations, slack)
    lower, upper = frechet_interval(pX, pY)
    if value > upper + slack:
        violations.append(Violation(term, pXY, upper, 'upper'))
    elif value < lower - slack:
        violations.append(Violation(term, pXY, lower, 'lower'))
    return violations, min(max(value, lower), upper)


def feasibility_check(m, slack=1e-12):
    r"""Reports every violated range or Fréchet condition of six known probabilities.

    Nothing is mutated. Callers that want to go on with noisy inputs opt into the returned copy in
    which every single probability is clipped into ``[0, 1]`` and every pairwise probability is
    projected into its Fréchet interval.

    Args:
        m (TripleMarginals): The six probabilities.
        slack (float, optional): Roundoff tolerated before a bound counts as violated.

    Returns:
        A tuple ``(violations, clamped)``.
    """
    violations = []
    values = {}
    for term in ('pA', 'pB', 'pC'):
        values[term] = _clip_unit(term, getattr(m, term), violations, slack)
    for term, first, second in _PAIRS:
        found, values[term] = check_pair(values[first], values[second], getattr(m, term), term, slack)
        violations.extend(found)
    return violations, TripleMarginals(**values)


def triple_bounds(m):
    r"""Interval of :math:`P(ABC)` values compatible with the six known probabilities.

    The upper end is the smallest pairwise probability, further capped by
    :math:`1 - P(A) - P(B) - P(C) + P(AB) + P(AC) + P(BC)` since the union cannot exceed 1. The
    lower end uses that two pairwise events sharing X cannot overlap less than
    :math:`P(XY) + P(XZ) - P(X)`.

    Returns:
        A tuple ``(lower, upper)``.
    """
    upper = min(m.pAB, m.pAC, m.pBC, 1.0 - m.pA - m.pB - m.pC + m.pAB + m.pAC + m.pBC)
    lower = max(0.0, m.pAB + m.pAC - m.pA, m.pAB + m.pBC - m.pB, m.pAC + m.pBC - m.pC)
    return lower, upper
