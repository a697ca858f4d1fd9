from itertools import product
import numpy as np
from ..errors import DomainError

__all__ = ['CELLS', 'JointDist8', 'CellCounts', 'TripleMarginals', 'EstimatedStats', 'random_joint',
           'sample_counts', 'counts_from_outcomes', 'estimate_from_counts', 'joint_to_marginals',
           'inclusion_exclusion_check', 'union_probability', 'pairwise_union', 'check_seed']

CELLS = tuple(product((0, 1), repeat=3))
_CELL_ARRAY = np.array(CELLS, dtype=bool)
_A, _B, _C = _CELL_ARRAY[:, 0], _CELL_ARRAY[:, 1], _CELL_ARRAY[:, 2]


def check_seed(seed):
    if isinstance(seed, (list, tuple)):
        for part in seed:
            check_seed(part)
        return
    if int(seed) != seed or seed < 0:
        raise DomainError("Seeds must be nonnegative integers, got {}".format(seed))


def _cell_vector(values, dtype):
    if isinstance(values, dict):
        vector = np.zeros(8, dtype=dtype)
        for cell, value in values.items():
            vector[CELLS.index(tuple(cell))] = value
        return vector
    vector = np.asarray(values, dtype=dtype)
    if vector.shape != (8,):
        raise DomainError("Expected 8 cells, got shape {}".format(vector.shape))
    return vector.copy()


class JointDist8(object):
    r"""Joint distribution of three binary events over the eight cells :math:`\{0, 1\}^3`.

    Cells are ordered as in :data:`CELLS`, i.e. ``(0, 0, 0), (0, 0, 1), ..., (1, 1, 1)``.

    Args:
        cell_probs (dict or sequence): Either a mapping from ``(a, b, c)`` to probability (missing
            cells are 0) or the 8 probabilities in :data:`CELLS` order.
    """
    def __init__(self, cell_probs):
        probs = _cell_vector(cell_probs, np.float64)
        if np.any(probs < 0):
            raise DomainError("Cell probabilities must be nonnegative, got {}".format(probs))
        if abs(probs.sum() - 1.0) > 1e-12:
            raise DomainError("Cell probabilities must sum to 1, got {}".format(probs.sum()))
        self.probs = probs
        self.probs.setflags(write=False)

    @classmethod
    def uniform(cls):
        return cls(np.full(8, 0.125))

    @classmethod
    def point_mass(cls, cell):
        return cls({tuple(cell): 1.0})

    @property
    def cell_probs(self):
        return {cell: float(p) for cell, p in zip(CELLS, self.probs)}

    def __getitem__(self, cell):
        return float(self.probs[CELLS.index(tuple(cell))])

    def __eq__(self, other):
        return isinstance(other, JointDist8) and np.array_equal(self.probs, other.probs)

    def __repr__(self):
        return "JointDist8({})".format(self.probs.tolist())


class CellCounts(object):
    r"""Outcome counts of repeated three-event trials.

    Args:
        counts (dict or sequence): Mapping from ``(a, b, c)`` to count, or 8 counts in
            :data:`CELLS` order.
    """
    def __init__(self, counts):
        counts = _cell_vector(counts, np.int64)
        if np.any(counts < 0):
            raise DomainError("Counts must be nonnegative, got {}".format(counts))
        self.counts = counts
        self.counts.setflags(write=False)

    @property
    def total(self):
        return int(self.counts.sum())

    def __getitem__(self, cell):
        return int(self.counts[CELLS.index(tuple(cell))])

    def __eq__(self, other):
        return isinstance(other, CellCounts) and np.array_equal(self.counts, other.counts)

    def __repr__(self):
        return "CellCounts({}, total={})".format(self.counts.tolist(), self.total)


class TripleMarginals(object):
    r"""The six probabilities the construction starts from.

    Args:
        pA (float): :math:`P(A)`.
        pB (float): :math:`P(B)`.
        pC (float): :math:`P(C)`.
        pAB (float): :math:`P(AB)`.
        pAC (float): :math:`P(AC)`.
        pBC (float): :math:`P(BC)`.
    """
    FIELDS = ('pA', 'pB', 'pC', 'pAB', 'pAC', 'pBC')

    def __init__(self, pA, pB, pC, pAB, pAC, pBC):
        self.pA = float(pA)
        self.pB = float(pB)
        self.pC = float(pC)
        self.pAB = float(pAB)
        self.pAC = float(pAC)
        self.pBC = float(pBC)

    def as_tuple(self):
        return tuple(getattr(self, name) for name in self.FIELDS)

    def to_dict(self):
        return dict(zip(self.FIELDS, self.as_tuple()))

    def replace(self, **kwargs):
        values = self.to_dict()
        values.update(kwargs)
        return TripleMarginals(**values)

    def __eq__(self, other):
        return isinstance(other, TripleMarginals) and self.as_tuple() == other.as_tuple()

    def __repr__(self):
        return "TripleMarginals({})".format(", ".join("{}={!r}".format(k, v)
                                                      for k, v in self.to_dict().items()))


class EstimatedStats(object):
    r"""Single, pairwise, triple and union probabilities of three events.

    Args:
        marginals (TripleMarginals): The six known probabilities.
        pABC (float): :math:`P(ABC)`.
        pUnion (float): :math:`P(A \cup B \cup C)`.
    """
    def __init__(self, marginals, pABC, pUnion):
        self.marginals = marginals
        self.pABC = float(pABC)
        self.pUnion = float(pUnion)

    @property
    def pA(self):
        return self.marginals.pA

    @property
    def pB(self):
        return self.marginals.pB

    @property
    def pC(self):
        return self.marginals.pC

    @property
    def pAB(self):
        return self.marginals.pAB

    @property
    def pAC(self):
        return self.marginals.pAC

    @property
    def pBC(self):
        return self.marginals.pBC

    def to_dict(self):
        values = self.marginals.to_dict()
        values.update({'pABC': self.pABC, 'pUnion': self.pUnion})
        return values

    def __eq__(self, other):
        return isinstance(other, EstimatedStats) and self.to_dict() == other.to_dict()

    def __repr__(self):
        return "EstimatedStats({})".format(", ".join("{}={!r}".format(k, v)
                                                     for k, v in self.to_dict().items()))


def _stats_from_weights(weights, total):
    def share(mask):
        return weights[mask].sum() / total
    marginals = TripleMarginals(share(_A), share(_B), share(_C), share(_A & _B), share(_A & _C),
                                share(_B & _C))
    return EstimatedStats(marginals, weights[7] / total, (total - weights[0]) / total)


def random_joint(seed):
    r"""Draws a joint distribution uniformly from the 8-cell probability simplex.

    The draw is a symmetric Dirichlet with unit concentration, realized as eight normalized
    standard exponential variates.

    Args:
        seed (int): Seed of the ``numpy`` generator.

    Returns:
        A :class:`JointDist8`.
    """
    check_seed(seed)
    rng = np.random.default_rng(seed)
    draws = rng.standard_exponential(8)
    return JointDist8(draws / draws.sum())


def sample_counts(dist, n, seed):
    r"""Multinomial draw of ``n`` trials over the eight cells.

    The draw is a chain of binomials, each cell taking its share of the trials not yet assigned,
    so the cost does not depend on ``n``.

    Args:
        dist (JointDist8): The cell probabilities.
        n (int): Number of trials.
        seed (int or sequence): Seed of the ``numpy`` generator.

    Returns:
        A :class:`CellCounts` whose total is ``n``.
    """
    if n < 1:
        raise DomainError("Number of trials must be positive, got {}".format(n))
    check_seed(seed)
    rng = np.random.default_rng(seed)
    counts = np.zeros(8, dtype=np.int64)
    remaining = int(n)
    mass = 1.0
    for cell in range(7):
        p = dist.probs[cell]
        share = min(max(p / mass, 0.0), 1.0) if mass > 0 else 0.0
        drawn = int(rng.binomial(remaining, share)) if remaining > 0 else 0
        counts[cell] = drawn
        remaining -= drawn
        mass -= p
    counts[7] = remaining
    return CellCounts(counts)


def counts_from_outcomes(outcomes):
    r"""Tallies explicit trial outcomes such as ``[(0, 1, 1), (1, 0, 1)]``."""
    counts = np.zeros(8, dtype=np.int64)
    for outcome in outcomes:
        counts[CELLS.index(tuple(int(bit) for bit in outcome))] += 1
    return CellCounts(counts)


def estimate_from_counts(counts):
    r"""Relative frequencies of the events, pairs, triple and union.

    Args:
        counts (CellCounts): The tallied outcomes.

    Returns:
        An :class:`EstimatedStats`.
    """
    total = counts.total
    if total == 0:
        raise DomainError("Cannot estimate probabilities from zero trials")
    return _stats_from_weights(counts.counts, total)


def joint_to_marginals(dist):
    r"""Exact single, pairwise, triple and union probabilities of a joint distribution."""
    return _stats_from_weights(dist.probs, 1.0)


def inclusion_exclusion_check(stats):
    r"""Residual of the three-event inclusion-exclusion identity

    .. math:: P(ABC) = P(A \cup B \cup C) - P(A) - P(B) - P(C) + P(AB) + P(BC) + P(AC)

    Returns:
        :math:`P(ABC)` minus the right hand side.
    """
    return stats.pABC - (stats.pUnion - stats.pA - stats.pB - stats.pC + stats.pAB + stats.pBC + stats.pAC)


def union_probability(stats):
    r""":math:`P(A \cup B \cup C)` solved from the inclusion-exclusion identity using ``pABC``."""
    return stats.pABC + stats.pA + stats.pB + stats.pC - stats.pAB - stats.pBC - stats.pAC


def pairwise_union(pX, pY, pXY):
    r"""Two-event identity :math:`P(X \cup Y) = P(X) + P(Y) - P(XY)`."""
    return pX + pY - pXY
