"""Exception hierarchy shared by all modules."""


class PatternAvoidError(Exception):
    """Base class for every error raised by this package."""


class PatternSyntaxError(PatternAvoidError, ValueError):
    pass


class EmptyPatternError(PatternSyntaxError):
    pass


class WordError(PatternAvoidError, ValueError):
    """A letter index is out of range for its alphabet."""


class SubstitutionError(PatternAvoidError, ValueError):
    """Missing, extra, or empty variable images."""


class HostTooLongError(PatternAvoidError):
    """The host word exceeds the matcher's length guard."""


class SearchBudgetExceeded(PatternAvoidError):
    """The wall-clock budget ran out before the search finished.

    This is not the same as "no instance": the search is inconclusive.
    """


class RankError(PatternAvoidError, ValueError):
    pass


class AlphabetSizeError(PatternAvoidError, ValueError):
    pass


class PermutationDistinctnessError(AlphabetSizeError):
    """The generated permutations are not pairwise distinct (e.g. k=4)."""


class LengthGuardError(PatternAvoidError):
    pass


class ConsistencyError(PatternAvoidError, AssertionError):
    """An internal invariant of the construction does not hold."""
