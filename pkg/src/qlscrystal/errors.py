"""Exception types shared across the package."""


class NodeCapError(RuntimeError):
    """A closure or enumeration grew past its configured size cap."""


class PathDomainError(ValueError):
    """A root operator was applied to a path outside its domain.

    The operators are only defined on paths whose relevant height function
    has integral local minima and an integral endpoint value.
    """


class InternalInconsistencyError(RuntimeError):
    """Two computations that must agree by construction did not.

    Seeing this exception always indicates a bug in this package, never bad
    user input.
    """
