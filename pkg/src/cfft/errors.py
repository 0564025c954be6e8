"""Exception types shared across the package."""


class CfftError(Exception):
    """Base class for all library errors."""


class FieldMismatch(CfftError):
    """Values do not belong to (or disagree about) the working field."""


class RootUnavailable(CfftError):
    """The field has no primitive n-th root of unity for the requested n."""


class NotInvertible(CfftError):
    """A required scalar (e.g. the transform length) has no inverse."""


class IndivisibleLength(CfftError):
    """The interleaving factor m does not divide the input length."""


class ShapeMismatch(CfftError):
    """Inconsistent lengths, shapes, or metadata between operands."""


class NoFactorization(CfftError):
    """No per-axis split of m compatible with the tensor shape exists."""


class DegeneratePoints(CfftError):
    """Repeated evaluation points; the generator rows would coincide."""


class NotMds(CfftError):
    """A square submatrix of the generator is singular."""


class InsufficientShares(CfftError):
    """Fewer results than the recovery threshold requires."""


class DuplicateShare(CfftError):
    """Two shares claim the same worker index."""


class InfeasibleThreshold(CfftError):
    """m > N: fewer workers than the recovery threshold."""


class InapplicableBaseline(CfftError):
    """Baseline threshold formula undefined for these (N, m)."""


class WitnessNotFound(CfftError):
    """Exhaustive ambiguity search failed on a valid instance (bug signal)."""


class VectorFileError(CfftError):
    """Malformed or unsupported tensor file."""
