"""Exception types raised across the package."""


class GrassmannError(Exception):
    """Base class for domain errors."""


class FieldMismatchError(GrassmannError, TypeError):
    """Operands belong to different fields."""


class SignatureMismatchError(GrassmannError, ValueError):
    """Operands belong to different algebras."""


class CharacteristicError(GrassmannError, ValueError):
    """Operation is undefined (or deliberately refused) in this characteristic."""


class MorphismValidationError(GrassmannError, ValueError):
    """Generator images violate the exterior relations.

    ``pair`` is the offending ``(i, j)`` (1-based, ``i == j`` for a nonzero
    square) and ``product`` the nonzero multivector that should have vanished.
    """

    def __init__(self, message, pair, product):
        super().__init__(message)
        self.pair = pair
        self.product = product


class NotAnAutomorphismError(GrassmannError, ValueError):
    pass


class InvalidFormError(GrassmannError, ValueError):
    """Classification parameters violate a side condition."""


class ParseError(GrassmannError, ValueError):
    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position
