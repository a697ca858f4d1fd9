import math

__all__ = ['VenngramError', 'DomainError', 'GeometryError', 'InfeasibleLens',
           'ConfigurationInfeasible', 'DegenerateDistance', 'NotGenericConfiguration',
           'InsufficientData', 'UnknownWord', 'DataInconsistency', 'CountsParseError']

class VenngramError(Exception):
    r"""Base class for all errors raised by ``venngram``."""
    pass

class DomainError(VenngramError, ValueError):
    r"""An argument lies outside the domain of the operation (negative probability, negative
    radius, non-positive tolerance, empty sample, ...)."""
    pass

class GeometryError(VenngramError):
    r"""Base class for failures of the three-circle construction."""
    pass

class InfeasibleLens(GeometryError):
    r"""No center distance realizes the requested lens area, i.e. the pairwise probability
    exceeds the smaller of the two single probabilities.

    Args:
        r1 (float): Radius of the first disc.
        r2 (float): Radius of the second disc.
        target (float): The requested lens area.
    """
    def __init__(self, r1, r2, target):
        self.r1 = r1
        self.r2 = r2
        self.target = target
        super(InfeasibleLens, self).__init__(
            "Lens area {} exceeds the smaller disc area {} (radii {}, {})".format(
                target, math.pi * min(r1, r2) ** 2, r1, r2))

class ConfigurationInfeasible(GeometryError):
    r"""The solved center distances (or the chord lengths) violate the triangle inequality.

    Args:
        sides (tuple): The offending triple of lengths.
        message (str, optional): Overrides the default message.
    """
    def __init__(self, sides, message=None):
        self.sides = tuple(sides)
        if message is None:
            message = "Lengths {} violate the triangle inequality".format(self.sides)
        super(ConfigurationInfeasible, self).__init__(message)

class DegenerateDistance(GeometryError):
    r"""A center distance (or radius) is zero where the angle formulas need it positive."""
    pass

class NotGenericConfiguration(GeometryError):
    r"""The three discs do not bound a curvilinear triangle, so the fast path does not apply.

    Args:
        config_class (str): The detected configuration class.
        note (str, optional): Extra detail about the detection.
    """
    def __init__(self, config_class, note=None):
        self.config_class = config_class
        self.note = note
        message = "Configuration is {}, not Generic".format(config_class)
        if note:
            message = "{} ({})".format(message, note)
        super(NotGenericConfiguration, self).__init__(message)

class InsufficientData(VenngramError):
    r"""Too few usable records to fit the calibration coefficient."""
    pass

class UnknownWord(VenngramError, LookupError):
    r"""A word has no unigram entry in the loaded counts.

    Args:
        word (str): The missing word.
    """
    def __init__(self, word):
        self.word = word
        super(UnknownWord, self).__init__("Unknown word : {}".format(word))

    def __str__(self):
        return "Unknown word : {}".format(self.word)

class DataInconsistency(VenngramError):
    r"""Counts that contradict each other, e.g. a nonzero bigram for a zero-probability word."""
    pass

class CountsParseError(VenngramError):
    r"""A count file could not be parsed.

    Args:
        message (str): What went wrong.
        line_number (int, optional): 1-based line number of the offending line.
    """
    def __init__(self, message, line_number=None):
        self.line_number = line_number
        if line_number is not None:
            message = "line {}: {}".format(line_number, message)
        super(CountsParseError, self).__init__(message)
