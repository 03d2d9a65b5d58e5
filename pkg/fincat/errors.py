class FincatError(Exception):
    """Base class for errors raised by fincat."""


class ValidationError(FincatError, ValueError):
    """Input does not satisfy the invariants of its type.

    Attributes
    ----------
    witness : dict
        structured description of the offending data
    """

    def __init__(self, message: str, witness: dict = None):
        super().__init__(message)
        self.witness = {} if witness is None else dict(witness)


class MissingComposite(ValidationError):
    pass


class IllTypedComposite(ValidationError):
    pass


class BrokenAssociativity(ValidationError):
    pass


class BrokenIdentity(ValidationError):
    pass


class DanglingReference(ValidationError):
    pass


class InvalidFunctor(ValidationError):
    pass


class NaturalityFailure(ValidationError):
    pass


class ShapeMismatch(ValidationError):
    pass


class SpanNotInCategory(ValidationError):
    pass


class InvalidComplex(ValidationError):
    pass


class InvalidPoset(ValidationError):
    pass


class InvalidGroup(ValidationError):
    pass


class NotNormal(ValidationError):
    """Lst fails to be normal; ``witness`` holds the conjugation."""


class ResourceLimit(FincatError, RuntimeError):
    """A configured budget was exhausted."""

    def __init__(self, budget: str, limit: int, message: str = None):
        if message is None:
            message = f"budget {budget}={limit} exhausted"
        super().__init__(message)
        self.budget = budget
        self.limit = limit


class DisconnectedBasepoint(FincatError, ValueError):
    pass


class RelatorViolation(FincatError, ValueError):
    def __init__(self, message: str, relator=None):
        super().__init__(message)
        self.relator = relator


class EnumerationFailed(FincatError, RuntimeError):
    pass


class WellDefinednessFailure(FincatError, RuntimeError):
    def __init__(self, message: str, witness: dict = None):
        super().__init__(message)
        self.witness = {} if witness is None else dict(witness)


class WorkspaceSyntaxError(FincatError, ValueError):
    def __init__(self, message: str, filename: str, line: int, column: int):
        super().__init__(f"{filename}:{line}:{column}: {message}")
        self.filename = filename
        self.line = line
        self.column = column


class UnresolvedReference(FincatError, ValueError):
    pass
