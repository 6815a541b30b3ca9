"""Exception types raised by btspin."""


class BtSpinError(ValueError):
    """Base class for invalid input anywhere in the library."""


class ParseError(BtSpinError):
    """Malformed knot notation."""


class DiagramError(BtSpinError):
    """Well-formed notation that does not describe a single knot."""


class PresentationError(BtSpinError):
    pass


class LabelError(BtSpinError):
    """Contradictory or unsupported classification labels."""


class CapExceeded(RuntimeError):
    """A configured resource cap (group order, generator count) was exceeded."""
