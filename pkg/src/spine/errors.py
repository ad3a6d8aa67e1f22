"""Exception hierarchy shared by every module."""

from __future__ import annotations


class SpineError(Exception):
    """Base class for all library errors."""


class DomainError(SpineError, ValueError):
    """A well-formed request that the mathematics rejects."""


class DimensionMismatchError(DomainError):
    pass


class ModelMismatchError(DomainError):
    pass


class UnknownElementError(DomainError, KeyError):
    def __str__(self) -> str:
        return Exception.__str__(self)


class InvalidHereditarySetError(DomainError):
    pass


class SizeLimitError(DomainError):
    pass


class UnsupportedScopeError(DomainError):
    """The request lies outside what the models can represent exactly."""


class DslSyntaxError(SpineError):
    """Malformed literal text; carries a 1-based line and column."""

    def __init__(self, message: str, text: str = "", pos: int = 0):
        self.message = message
        self.text = text
        self.pos = pos
        before = text[:pos]
        self.line = before.count("\n") + 1
        self.column = pos - (before.rfind("\n") + 1) + 1
        super().__init__(f"{message} at line {self.line}, column {self.column}")


class SemanticError(DomainError):
    """Literal parsed, but its content is invalid (e.g. a singular generator matrix)."""
