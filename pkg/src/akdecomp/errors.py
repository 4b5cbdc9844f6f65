"""Exception types shared across the package."""


class DiagramError(ValueError):
    """A node or multipartition does not fit the diagram it is applied to."""


class NotDivisibleError(ArithmeticError):
    """Exact division of Laurent polynomials left a remainder."""


class InvariantError(RuntimeError):
    """An internal invariant failed. This is a bug, never a user error."""
