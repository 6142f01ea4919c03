"""Exception hierarchy shared by every anglekit module."""


class AngleKitError(Exception):
    """Base class for all anglekit errors."""


class CoincidentPoints(AngleKitError):
    pass


class IncompatibleFields(AngleKitError):
    pass


class TooFewPoints(AngleKitError):
    pass


class AllCollinear(AngleKitError):
    pass


class NotASubset(AngleKitError):
    pass


class NotConvex(AngleKitError):
    pass


class NotFourPoints(AngleKitError):
    pass


class DegenerateInput(AngleKitError):
    pass


class NotInterior(AngleKitError):
    pass


class PrecisionExhausted(AngleKitError):
    pass


class UnknownName(AngleKitError):
    pass


class BadParameter(AngleKitError, ValueError):
    pass


class BaseCensusExceedsK(AngleKitError):
    pass


class UniverseTooSmall(AngleKitError):
    pass


class ConfigFormatError(AngleKitError, ValueError):
    """Malformed configuration or report file."""
