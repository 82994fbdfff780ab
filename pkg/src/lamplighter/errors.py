"""Exception types shared across the package."""


class LamplighterError(Exception):
    pass


class RingMismatchError(LamplighterError, TypeError):
    pass


class NotInvertibleError(LamplighterError, ArithmeticError):
    """Raised when a ring element without an inverse is inverted.

    ``value`` holds the offending representative.
    """

    def __init__(self, value, ring=None):
        self.value = value
        self.ring = ring
        where = f" in {ring}" if ring is not None else ""
        super().__init__(f"{value} is not invertible{where}")


class ParseError(LamplighterError, ValueError):
    """Malformed ring string, word or JSON payload; ``pos`` is a 0-based offset."""

    def __init__(self, message, text="", pos=0):
        self.text = text
        self.pos = pos
        super().__init__(f"{message} at position {pos}: {text!r}")


class UnsupportedError(LamplighterError, ValueError):
    pass


class InvalidVertexError(LamplighterError, ValueError):
    pass


class ConfigurationError(LamplighterError, ValueError):
    pass
