import warnings
from itertools import combinations
from ..errors import CountsParseError, DomainError, UnknownWord
from ..probmodel import check_pair, frechet_interval

__all__ = ['NGramStats', 'load_counts', 'count_sentences', 'write_counts', 'pair_key']

SENTENCES_HEADER = '#SENTENCES'


def pair_key(x, y):
    r"""Key of an unordered word pair."""
    return (x, y) if x <= y else (y, x)


class NGramStats(object):
    r"""Sentence-level occurrence statistics of words and word pairs.

    An event is "the word appears in a sentence", so a bigram is the unordered co-occurrence of two
    words anywhere in the same sentence, not their adjacency. Probabilities are counts divided by
    the number of sentences. Bigram probabilities lying outside their Fréchet interval are clamped
    into it with one warning per entry. The object is not modified after construction.

    Args:
        unigram_counts (dict): Word to number of sentences containing it.
        bigram_counts (dict): Word pair to number of sentences containing both words.
        total_sentences (int): Number of sentences.
        smoothing (bool, optional): Use :math:`(c + 1) / (N + 2)` for every bigram, seen or not,
            projected into its Fréchet interval. Without smoothing an unseen pair has
            probability 0.
    """
    def __init__(self, unigram_counts, bigram_counts, total_sentences, smoothing=False):
        if total_sentences <= 0:
            raise DomainError("Number of sentences must be positive, got {}".format(total_sentences))
        self.total_sentences = int(total_sentences)
        self.smoothing = smoothing
        self.unigram_counts = dict(unigram_counts)
        self.bigram_counts = {pair_key(*pair): count for pair, count in bigram_counts.items()}
        self.unigram = {word: count / float(total_sentences) for word, count in self.unigram_counts.items()}
        self.bigram = {}
        for (x, y), count in self.bigram_counts.items():
            for word in (x, y):
                if word not in self.unigram:
                    raise UnknownWord(word)
            violations, clamped = check_pair(self.unigram[x], self.unigram[y],
                                             count / float(total_sentences), term="P({}, {})".format(x, y))
            for violation in violations:
                warnings.warn("Clamping bigram: {}".format(violation))
            self.bigram[(x, y)] = clamped

    @property
    def vocabulary(self):
        return sorted(self.unigram)

    def unigram_prob(self, word):
        try:
            return self.unigram[word]
        except KeyError:
            raise UnknownWord(word)

    def bigram_prob(self, x, y):
        r"""Probability that ``x`` and ``y`` appear in the same sentence. A word paired with itself
        gives its unigram probability.
        """
        px, py = self.unigram_prob(x), self.unigram_prob(y)
        if x == y:
            return px
        key = pair_key(x, y)
        if not self.smoothing:
            return self.bigram.get(key, 0.0)
        count = self.bigram_counts.get(key, 0)
        lower, upper = frechet_interval(px, py)
        return min(max((count + 1.0) / (self.total_sentences + 2.0), lower), upper)

    def with_smoothing(self, smoothing=True):
        r"""The same counts with add-one smoothing switched on or off."""
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            return NGramStats(self.unigram_counts, self.bigram_counts, self.total_sentences, smoothing)

    def __repr__(self):
        return "NGramStats(words={}, pairs={}, total_sentences={}, smoothing={})".format(
            len(self.unigram), len(self.bigram), self.total_sentences, self.smoothing)


def _parse_count(text, line_number):
    try:
        count = int(text)
    except ValueError:
        raise CountsParseError("count {!r} is not an integer".format(text), line_number)
    if count < 0:
        raise CountsParseError("count {} is negative".format(count), line_number)
    return count


def load_counts(path, smoothing=False):
    r"""Reads a count file.

    The file is UTF-8 and line oriented: a header ``#SENTENCES <total>``, unigram lines
    ``<word> <count>`` and bigram lines ``<word1> <word2> <count>``. Other lines starting with
    ``#`` are comments and blank lines are skipped.

    Args:
        path (str): The count file.
        smoothing (bool, optional): See :class:`NGramStats`.

    Returns:
        An :class:`NGramStats`.

    :raises CountsParseError: On a malformed line, naming its number.
    :raises DomainError: If the header declares 0 sentences.
    """
    total = None
    unigrams, bigrams = {}, {}
    first_seen = {}
    with open(path, encoding='utf-8') as handle:
        for line_number, line in enumerate(handle, start=1):
            fields = line.split()
            if not fields:
                continue
            if fields[0] == SENTENCES_HEADER:
                if total is not None:
                    raise CountsParseError("duplicate {} header".format(SENTENCES_HEADER), line_number)
                if len(fields) != 2:
                    raise CountsParseError("expected '{} <total>'".format(SENTENCES_HEADER), line_number)
                total = _parse_count(fields[1], line_number)
                continue
            if fields[0].startswith('#'):
                continue
            if len(fields) == 2:
                word, count = fields[0], _parse_count(fields[1], line_number)
                if word in unigrams:
                    raise CountsParseError("duplicate entry for {!r}".format(word), line_number)
                unigrams[word] = count
            elif len(fields) == 3:
                if fields[0] == fields[1]:
                    raise CountsParseError("bigram repeats the word {!r}".format(fields[0]), line_number)
                key = pair_key(fields[0], fields[1])
                if key in bigrams:
                    raise CountsParseError("duplicate entry for {!r} {!r}".format(*key), line_number)
                bigrams[key] = _parse_count(fields[2], line_number)
                first_seen[key] = line_number
            else:
                raise CountsParseError("expected 2 or 3 fields, got {}".format(len(fields)), line_number)
    if total is None:
        raise CountsParseError("missing {} header".format(SENTENCES_HEADER))
    if total == 0:
        raise DomainError("{} declares 0 sentences".format(path))
    for key, line_number in first_seen.items():
        for word in key:
            if word not in unigrams:
                raise CountsParseError("bigram word {!r} has no unigram line".format(word), line_number)
    for word, count in unigrams.items():
        if count > total:
            raise CountsParseError("count of {!r} exceeds the {} sentences".format(word, total))
    return NGramStats(unigrams, bigrams, total, smoothing=smoothing)


def count_sentences(sentences, smoothing=False):
    r"""Counts the sentences each word and each pair of distinct words appears in.

    Args:
        sentences (iterable): Sentences given as sequences of words. Repeated words count once.
        smoothing (bool, optional): See :class:`NGramStats`.

    Returns:
        An :class:`NGramStats`.
    """
    unigrams, bigrams = {}, {}
    total = 0
    for sentence in sentences:
        total += 1
        words = sorted(set(sentence))
        for word in words:
            unigrams[word] = unigrams.get(word, 0) + 1
        for pair in combinations(words, 2):
            bigrams[pair] = bigrams.get(pair, 0) + 1
    return NGramStats(unigrams, bigrams, total, smoothing=smoothing)


def write_counts(stats, path):
    r"""Writes the counts of ``stats`` in the format read by :func:`load_counts`."""
    with open(path, 'w', encoding='utf-8') as handle:
        handle.write("{} {}\n".format(SENTENCES_HEADER, stats.total_sentences))
        for word in sorted(stats.unigram_counts):
            handle.write("{} {}\n".format(word, stats.unigram_counts[word]))
        for x, y in sorted(stats.bigram_counts):
            handle.write("{} {} {}\n".format(x, y, stats.bigram_counts[(x, y)]))
