"""Exception hierarchy. `infeasible` is a result value, never one of these."""
from __future__ import annotations

from typing import Any


class DpColorError(Exception):
    """Base class for every error raised by dpcolor."""


class InputError(DpColorError, ValueError):
    """Malformed or inconsistent input (text files, lists, matchings)."""


class GraphFormatError(InputError):
    pass


class EmbeddingError(InputError):
    """Rotation system inconsistent with the graph, or traced genus is not 0."""


class AssignmentError(InputError):
    """List or matching assignment breaks the cover conditions."""


class PreconditionError(DpColorError, ValueError):
    pass


class ClassViolationError(PreconditionError):
    """Graph has a 4-cycle sharing an edge with a 3-cycle."""

    def __init__(self, violation: Any):
        self.violation = violation
        super().__init__(
            f"graph is outside the class: 4-cycle {violation.c4} and 3-cycle {violation.c3} "
            f"share edge {violation.shared_edge}"
        )


class BudgetExceeded(DpColorError, RuntimeError):
    def __init__(self, budget: int, used: int, what: str = "solver nodes"):
        self.budget = budget
        self.used = used
        super().__init__(f"budget exceeded: {used} {what} > budget {budget}")


class NoReducibleConfiguration(DpColorError, RuntimeError):
    """find_reducible returned none on a graph believed to be in the class."""

    def __init__(self, message: str, certificate: Any = None):
        self.certificate = certificate
        super().__init__(message)


class ExtensionError(DpColorError, RuntimeError):
    """A greedy extension got stuck although its precondition held."""


class VerificationError(DpColorError, RuntimeError):
    """A claimed transversal or coloring fails independent re-checking."""


class GenerationError(DpColorError, RuntimeError):
    """The class-member generator ran out of attempts; retry with another seed."""
