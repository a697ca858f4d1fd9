import warnings
from ..errors import DataInconsistency, DomainError, GeometryError, VenngramError
from ..experiment import REFERENCE_K, calibrate
from ..geometry import DEFAULT_TOL, build_config, triple_intersection_area
from ..probmodel import TripleMarginals, feasibility_check

__all__ = ['SentenceScore', 'RankedSentence', 'estimate_joint', 'score_sentence', 'markov_score',
           'rank_sentences', 'SentenceScorer', 'GeometricScorer', 'MarkovScorer']


class SentenceScore(object):
    r"""Geometric score of a sentence.

    Args:
        raw_area (float): Estimate of the probability that every word of the sentence appears,
            as a central area for three or more words.
        calibrated (float): :math:`k S + k S^2` of ``raw_area``.
        k_used (float): The calibration coefficient.
        reduction_trace (list): ``(events, estimate)`` pairs of every sub-estimate, in the order
            they were completed. The last entry is the whole sentence.
    """
    def __init__(self, raw_area, calibrated, k_used, reduction_trace):
        self.raw_area = raw_area
        self.calibrated = calibrated
        self.k_used = k_used
        self.reduction_trace = reduction_trace

    def to_dict(self):
        return {'raw_area': self.raw_area, 'calibrated': self.calibrated, 'k_used': self.k_used,
                'reduction_trace': [[list(events), estimate] for events, estimate in self.reduction_trace]}

    def __repr__(self):
        return "SentenceScore(raw_area={!r}, calibrated={!r}, k_used={!r})".format(
            self.raw_area, self.calibrated, self.k_used)


class RankedSentence(object):
    r"""One row of :func:`rank_sentences`. ``rank`` is ``None`` for sentences that could not be
    scored, ``error`` then says why."""
    def __init__(self, index, words, score=None, markov=None, error=None, rank=None):
        self.index = index
        self.words = tuple(words)
        self.score = score
        self.markov = markov
        self.error = error
        self.rank = rank

    def to_dict(self):
        return {'rank': self.rank, 'index': self.index, 'sentence': ' '.join(self.words),
                'score': None if self.score is None else self.score.to_dict(),
                'markov': self.markov, 'error': self.error}

    def __repr__(self):
        return "RankedSentence(rank={!r}, index={!r}, words={!r})".format(self.rank, self.index, self.words)


def _unique(words):
    seen = []
    for word in words:
        if word not in seen:
            seen.append(word)
    return tuple(seen)


def _central_area(m, events, tol):
    violations, clamped = feasibility_check(m)
    for violation in violations:
        warnings.warn("Clamping {} while estimating {}: {}".format(
            violation.term, ' '.join(events), violation))
    return triple_intersection_area(build_config(clamped, tol)).total


def estimate_joint(events, stats, memo=True, tol=DEFAULT_TOL):
    r"""Estimates the probability that all ``events`` (words) occur together.

    One word gives its unigram and two words their bigram probability. Three words are turned
    into discs and the central area is returned. For ``m >= 4`` words the first ``m - 2`` are
    merged into one pseudo-event :math:`E` and the three events :math:`E, x_{m-1}, x_m` are
    treated like three words, with the pairwise probabilities

    .. math:: P(E x_{m-1}),\; P(E x_m),\; P(x_{m-1} x_m)

    estimated recursively. Sub-estimates are raw areas; no calibration happens inside the
    recursion. Derived inputs lying outside their Fréchet intervals are clamped with a warning.

    Args:
        events (sequence): The words. Repeated words are dropped, the order of first occurrence
            drives the grouping.
        stats (NGramStats): The statistics.
        memo (bool, optional): Reuse sub-estimates within this call.
        tol (float, optional): Area tolerance of the distance solves.

    Returns:
        A tuple ``(estimate, trace)``, see :class:`SentenceScore` for the trace.

    :raises UnknownWord: If a word has no statistics.
    :raises GeometryError: If a configuration cannot be built, with the offending words in the
        ``events`` attribute and the trace so far in ``trace``.
    """
    events = _unique(events)
    if not events:
        raise DomainError("At least one event is needed")
    for word in events:
        stats.unigram_prob(word)
    cache = {}
    trace = {}

    def estimate(subset):
        if memo and subset in cache:
            return cache[subset]
        if len(subset) == 1:
            value = stats.unigram_prob(subset[0])
        elif len(subset) == 2:
            value = stats.bigram_prob(subset[0], subset[1])
        else:
            head, x, y = subset[:-2], subset[-2], subset[-1]
            m = TripleMarginals(estimate(head), stats.unigram_prob(x), stats.unigram_prob(y),
                                estimate(head + (x,)), estimate(head + (y,)), stats.bigram_prob(x, y))
            try:
                value = _central_area(m, subset, tol)
            except GeometryError as err:
                if not hasattr(err, 'events'):
                    err.events = subset
                    err.trace = list(trace.items())
                raise
        cache[subset] = value
        trace.setdefault(subset, value)
        return value

    result = estimate(events)
    return result, list(trace.items())


def score_sentence(words, stats, k=REFERENCE_K, memo=True, tol=DEFAULT_TOL):
    r"""Scores a sentence with the geometric estimator.

    Args:
        words (sequence): The words of the sentence. Word order only matters for the grouping of
            the recursion.
        stats (NGramStats): The statistics.
        k (float, optional): Calibration coefficient, nonnegative.
        memo (bool, optional): See :func:`estimate_joint`.
        tol (float, optional): Area tolerance of the distance solves.

    Returns:
        A :class:`SentenceScore`.
    """
    if not words:
        raise DomainError("Cannot score an empty sentence")
    if k < 0:
        raise DomainError("Calibration coefficient must be nonnegative, got {}".format(k))
    raw, trace = estimate_joint(words, stats, memo=memo, tol=tol)
    return SentenceScore(raw, calibrate(raw, k), k, trace)


def markov_score(words, stats):
    r"""Bigram Markov probability of a sentence,

    .. math:: P(x_1) P(x_2 | x_1) \cdots P(x_n | x_{n-1}), \quad
              P(x_{i+1} | x_i) = \frac{P(x_i x_{i+1})}{P(x_i)}

    Any zero factor makes the product 0.

    :raises DataInconsistency: If a word of probability 0 has a nonzero bigram.
    """
    if not words:
        raise DomainError("Cannot score an empty sentence")
    for word in words:
        stats.unigram_prob(word)
    score = stats.unigram_prob(words[0])
    for x, y in zip(words[:-1], words[1:]):
        p_x = stats.unigram_prob(x)
        p_xy = stats.bigram_prob(x, y)
        if p_x == 0:
            if p_xy > 0:
                raise DataInconsistency("P({}) is 0 but P({}, {}) = {}".format(x, x, y, p_xy))
            return 0.0
        score *= p_xy / p_x
        if score == 0:
            return 0.0
    return score


class SentenceScorer(object):
    r"""Base class of the sentence scorers.

    A scorer is called on a sentence, given either as a string of whitespace separated words or
    as a sequence of words.
    """
    def preprocess(self, x):
        r"""Turns the input into a tuple of words."""
        if isinstance(x, str):
            x = x.split()
        words = tuple(x)
        if not words:
            raise DomainError("Cannot score an empty sentence")
        return words

    def calculate_score(self, x):
        r"""
        Subclasses must override this function and provide their own score calculation.

        :raises NotImplementedError: If the subclass doesn't override this function.
        """
        raise NotImplementedError

    def __call__(self, x):
        return self.calculate_score(self.preprocess(x))


class GeometricScorer(SentenceScorer):
    r"""Scores sentences with :func:`score_sentence`.

    Args:
        stats (NGramStats): The statistics.
        k (float, optional): Calibration coefficient.
        memo (bool, optional): See :func:`estimate_joint`.
        tol (float, optional): Area tolerance of the distance solves.
    """
    def __init__(self, stats, k=REFERENCE_K, memo=True, tol=DEFAULT_TOL):
        super(GeometricScorer, self).__init__()
        if k < 0:
            raise DomainError("Calibration coefficient must be nonnegative, got {}".format(k))
        self.stats = stats
        self.k = k
        self.memo = memo
        self.tol = tol

    def calculate_score(self, x):
        return score_sentence(x, self.stats, self.k, memo=self.memo, tol=self.tol)


class MarkovScorer(SentenceScorer):
    r"""Scores sentences with :func:`markov_score`."""
    def __init__(self, stats):
        super(MarkovScorer, self).__init__()
        self.stats = stats

    def calculate_score(self, x):
        return markov_score(x, self.stats)


def rank_sentences(sentences, stats, k=REFERENCE_K, baseline=True, memo=True, tol=DEFAULT_TOL):
    r"""Ranks sentences by their calibrated geometric score, highest first.

    Ties keep the input order. A sentence that cannot be scored is annotated with its error and
    listed after the ranked ones with ``rank`` set to ``None``.

    Args:
        sentences (sequence): Sentences as strings or word sequences.
        stats (NGramStats): The statistics.
        k (float, optional): Calibration coefficient.
        baseline (bool, optional): Also compute the Markov score.
        memo (bool, optional): See :func:`estimate_joint`.
        tol (float, optional): Area tolerance of the distance solves.

    Returns:
        A list of :class:`RankedSentence`.
    """
    geometric = GeometricScorer(stats, k, memo=memo, tol=tol)
    markov = MarkovScorer(stats)
    scored, failed = [], []
    for index, sentence in enumerate(sentences):
        try:
            words = geometric.preprocess(sentence)
            row = RankedSentence(index, words, score=geometric.calculate_score(words))
            if baseline:
                row.markov = markov.calculate_score(words)
        except VenngramError as err:
            words = sentence.split() if isinstance(sentence, str) else sentence
            failed.append(RankedSentence(index, words, error="{}: {}".format(type(err).__name__, err)))
            continue
        scored.append(row)
    scored.sort(key=lambda row: (-row.score.calibrated, row.index))
    for rank, row in enumerate(scored, start=1):
        row.rank = rank
    return scored + failed
