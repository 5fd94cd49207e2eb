"""Exception types shared across the package."""


class HopfcheckError(Exception):
    pass


class NotSquare(HopfcheckError):
    pass


class NotInvertible(HopfcheckError):
    pass


class NotScalarMultiple(HopfcheckError):
    """B^t A^t B A is not a scalar multiple of the identity."""


class LambdaNotSquare(HopfcheckError):
    """sqrt(lambda) is irrational, so the pair cannot be normalized."""


class NotNormalized(HopfcheckError):
    """Operation requires lambda = 1 (run normalize_pair first)."""


class NeedsFieldExtension(HopfcheckError):
    """The quadratic has no rational roots."""


class UnitCollapse(HopfcheckError):
    """1 reduces to 0: the ideal is the whole algebra."""


class ExceedsCertifiedDegree(HopfcheckError):
    """Input weight exceeds the certified degree of the rewrite system."""


class UnexpectedHomDimension(HopfcheckError):
    """A Hom space came out with a dimension the pipeline does not expect."""


class ConfigInvalid(HopfcheckError):
    pass


class CacheCorrupt(HopfcheckError):
    pass


class VersionMismatch(HopfcheckError):
    pass
