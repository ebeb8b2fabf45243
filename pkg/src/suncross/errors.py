"""Exception types shared across the package."""


class SuncrossError(Exception):
    """Base class for all package-specific errors."""


class InvalidParameterError(SuncrossError, ValueError):
    """A parameter violates an operation's precondition."""


class ResourceLimitError(SuncrossError, RuntimeError):
    """An input exceeds a configured size cap."""


class NonPlanarError(SuncrossError, ValueError):
    """An embedding was requested for a graph that has none."""


class StructuralError(SuncrossError, ValueError):
    """A rotation system does not structurally match its graph."""


class BadCrossingError(SuncrossError, ValueError):
    """A crossing specification breaks a good-drawing rule."""


class GeneralPositionError(SuncrossError, ValueError):
    """A geometric drawing is degenerate (overlap, triple point, or an
    interior intersection at a vertex)."""


class UsageError(SuncrossError, ValueError):
    """An operation was called in a way its contract forbids."""


class DrawingValidationError(SuncrossError, ValueError):
    """An operation that requires a valid drawing received an invalid one."""
