"""Exception types shared across the package."""


class SpectextError(Exception):
    """Base class for all spectext errors."""


class EmptyCorpus(SpectextError):
    """No tokens survived corpus construction."""


class DegenerateDegree(SpectextError):
    """A word has zero normalization degree; the pipeline upstream is broken."""


class RangeError(SpectextError):
    """A dissimilarity entry fell outside [0, 1]; weights are not normalized."""


class AxisOutOfRange(SpectextError):
    """A requested eigen-axis exceeds the number of computed axes."""


class MissingLabel(SpectextError):
    """A vocabulary word has no ground-truth label in an evaluation."""
