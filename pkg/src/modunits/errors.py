"""Exception types raised by basis construction."""

from __future__ import annotations


class ModunitsError(Exception):
    """Base class for failures the CLI reports with exit code 2."""


class RankDeficientError(ModunitsError):
    def __init__(self, got: int, expected: int, context: str = ""):
        self.got = got
        self.expected = expected
        where = f" ({context})" if context else ""
        super().__init__(f"rank deficient: got {got}, expected {expected}{where}")


class PrecisionError(ModunitsError):
    """The requested precision cannot separate the forms involved."""


class InternalContradiction(ModunitsError):
    """A computed quantity disagrees with a theorem the construction relies on."""
