"""Exception hierarchy shared by every module."""


class DomainError(ValueError):
    """An argument lies outside the domain of the operation."""


class PreconditionError(DomainError):
    """A compatibility condition between several arguments does not hold."""


class PrecisionError(DomainError):
    """A set cannot be represented exactly at the requested dyadic resolution."""

    def __init__(self, message: str, required_k: "int | None"):
        super().__init__(message)
        self.required_k = required_k
