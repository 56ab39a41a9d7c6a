"""Exception types. Each CLI exit code maps to one branch of this tree."""

from __future__ import annotations


class MemcostError(Exception):
    exit_code = 1


class ValidationError(MemcostError, ValueError):
    """One or more invariant violations.

    ``errors`` holds ``(path, value, message)`` triples, every violation found,
    not only the first.
    """

    exit_code = 2

    def __init__(self, errors):
        self.errors = list(errors)
        lines = [f"{path} = {value!r}: {msg}" for path, value, msg in self.errors]
        super().__init__("; ".join(lines) if lines else "invalid input")


class IngestError(MemcostError, ValueError):
    exit_code = 2


class FitError(MemcostError, ValueError):
    exit_code = 3


class InsufficientDataError(FitError):
    pass


class DegenerateFitError(FitError):
    pass


class GridCapError(MemcostError, ValueError):
    exit_code = 4
