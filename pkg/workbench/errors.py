"""Exceptions raised by scenario I/O and rendering."""


class WorkbenchError(Exception):
    """Base exception for workbench failures."""

    pass


class ScenarioParseError(WorkbenchError):
    """The scenario document is not well-formed JSON or not an object."""


class ScenarioValidationError(WorkbenchError):
    """A scenario field is missing, unknown, or violates a geometric invariant."""

    def __init__(self, field: str, reason: str) -> None:
        super().__init__(f"{field}: {reason}")
        self.field = field
        self.reason = reason


class EmptyViewboxError(WorkbenchError):
    """The render viewbox has zero or negative extent."""
