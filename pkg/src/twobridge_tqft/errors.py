"""Exception types.  ``InvalidInput`` maps to CLI exit 2, the rest to exit 1."""


class TwoBridgeError(Exception):
    pass


class InvalidInput(TwoBridgeError, ValueError):
    """Parameters outside the documented domain."""


class NotInvertible(TwoBridgeError, ArithmeticError):
    def __init__(self, gcd):
        super().__init__(f"element shares the factor {gcd!r} with the modulus")
        self.gcd = gcd


class VerificationFailure(TwoBridgeError):
    """An identity that must hold exactly did not."""

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class PrecisionExhausted(TwoBridgeError):
    pass
