"""Exception types raised by the library."""


class CMSError(ValueError):
    """Base class for all library errors."""


class InvalidOrderError(CMSError):
    pass


class ShapeError(CMSError):
    pass


class InvalidSpecError(CMSError):
    pass


class InvalidStepError(CMSError):
    pass


class InvalidLevelError(CMSError):
    pass


class NotFoundError(CMSError, LookupError):
    pass


class UndefinedMeasureError(CMSError):
    pass


class VerificationError(CMSError):
    pass
