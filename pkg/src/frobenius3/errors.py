"""Exception hierarchy shared by all frobenius3 modules."""


class Frobenius3Error(Exception):
    """Base class for all errors raised by this package."""


class InvalidInputError(Frobenius3Error, ValueError):
    """Caller passed arguments violating a documented precondition."""


class NotInvertibleError(InvalidInputError):
    """Modular inverse requested for a non-unit; carries the offending gcd."""

    def __init__(self, value: int, modulus: int, gcd: int):
        super().__init__(f"{value} is not invertible mod {modulus}: gcd = {gcd}")
        self.value = value
        self.modulus = modulus
        self.gcd = gcd


class NotPairwiseCoprimeError(InvalidInputError):
    """Two of the given integers share a common factor; names the pair."""

    def __init__(self, x: int, y: int, gcd: int):
        super().__init__(f"({x}, {y}) share common factor {gcd}; inputs must be pairwise coprime")
        self.pair = (x, y)
        self.gcd = gcd


class InvariantViolation(Frobenius3Error, RuntimeError):
    """An internal exact-arithmetic identity failed; indicates a bug, not bad input."""


class StepBudgetExceeded(Frobenius3Error, RuntimeError):
    """The walk did not terminate within its step budget (diagnostic guard)."""


class OracleBoundExceeded(Frobenius3Error, ValueError):
    """Input too large for the brute-force oracle's sieve guard."""


class TripleGenerationError(Frobenius3Error, RuntimeError):
    """Random triple generation exhausted its resampling cap."""
