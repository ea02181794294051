"""Exception hierarchy shared by every module in the package."""


class AgstabError(Exception):
    """Base class for all package-specific failures."""


class InputError(AgstabError):
    """Malformed user input (files, JSON payloads, option values)."""


class ZeroConstantTerm(AgstabError):
    """Series inversion needs an invertible (nonzero) constant coefficient."""


class NonzeroConstant(AgstabError):
    """Plethystic exponential requires a series with zero constant term."""


class NonIntegralCoefficient(AgstabError):
    """A series that must have integer coefficients does not."""


class CapExceeded(AgstabError):
    """A group enumeration grew past its element cap."""


class DegreeMismatch(AgstabError):
    """Permutations of different degrees were combined."""


class PartitionMismatch(AgstabError):
    """A cycle type does not partition the claimed number of points."""


class SearchBudgetExceeded(AgstabError):
    """The automorphism backtracking search exceeded its node budget."""


class VerificationFailed(AgstabError):
    """A declared automorphism generator is not realizable on the cone."""


class InconsistentAction(AgstabError):
    """A permutation does not induce a linear action on the cone's span."""


class FixtureMismatch(AgstabError):
    """A verification suite disagreed with its stored reference values."""
