"""Exception types shared across the package."""


class MvtropError(Exception):
    """Base class for every error this package raises deliberately."""


class StructuralError(MvtropError):
    """Elements of different structures were mixed, or a payload violates its carrier."""


class DomainError(MvtropError):
    """An argument lies outside the mathematical domain of the operation."""


class ModeError(DomainError):
    """An exhaustive check was requested on an infinite carrier."""


class UnsupportedRepresentationError(DomainError):
    """The operation is only defined on representation-aware descriptors."""


class MalformedInputError(DomainError):
    """An explicit structure violates its own closure or constant requirements."""


class BrokenHomomorphismError(DomainError):
    """A map presented as a homomorphism failed a preservation check."""


class WitnessNotFoundError(DomainError):
    """No witness exists in the requested range."""


class ReconstructionError(DomainError):
    """A group could not be rebuilt from the supplied action data."""


class EvaluationError(MvtropError):
    """A term mentions a variable that the valuation does not bind."""


class UsageError(MvtropError):
    """Malformed command-line shorthand or JSON input."""


class TermSyntaxError(MvtropError):
    """Parse failure; carries the character offset and the expected token set."""

    def __init__(self, message: str, position: int, expected: tuple[str, ...] = ()):
        detail = f"{message} at position {position}"
        if expected:
            detail += " (expected one of: " + ", ".join(expected) + ")"
        super().__init__(detail)
        self.position = position
        self.expected = tuple(expected)
