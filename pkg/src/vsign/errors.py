"""Exception types raised by the vsign pipeline.

Every error a caller is expected to handle derives from VsignError, so CLI
and batch code can catch one base class and report a typed record.
"""


class VsignError(Exception):
    """Base class for all pipeline errors."""


class ZeroDimensionError(VsignError):
    """A requested resize would produce an image with a zero dimension."""


class ConstantImageError(VsignError):
    """The image holds a single gray value, so no threshold can split it."""


class DegenerateClustersError(VsignError):
    """All pixels share one color, so two color clusters cannot be formed."""


class MissingClassError(VsignError):
    """Pixel classifier training data lacks foreground or background samples."""


class EmptyMaskError(VsignError):
    """A binary mask holds no foreground pixels."""


class DegenerateTipsError(VsignError):
    """The two fingertip scans landed on the same row or in reversed order."""


class NoValleyError(VsignError):
    """No inter-finger gap pixel exists between the fingertip rows."""


class FingerSeparationError(VsignError):
    """Cutting at the valley column did not isolate two finger regions."""


class EmptyRegionError(VsignError):
    """A moment computation was asked for a region with no pixels."""


class DegenerateShapeError(VsignError):
    """The region's covariance has no positive spread (single pixel)."""


class DimensionMismatchError(VsignError):
    """Two feature vectors (or a vector and stats) differ in length."""


class MethodMismatchError(VsignError):
    """Feature vectors tagged with incompatible extraction methods."""


class EmptyTrainingSetError(VsignError):
    """A classifier or normalizer was fit on zero examples."""


class InsufficientExamplesError(VsignError):
    """A subject has too few examples for the requested train/test split."""


class MalformedNameError(VsignError):
    """A dataset file name does not follow the subject naming convention."""
