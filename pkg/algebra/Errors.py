"""
Exception hierarchy shared by every package of the toolkit.

Purpose
-------
- Give callers one root (``ZeroSumError``) to catch.
- Keep structural mistakes (bad input) apart from search outcomes
  (``InconclusiveSearch``) so the CLI can map them to distinct exit codes.

Notes
-----
- ``StructuralError`` and ``PreconditionError`` also derive from
  ``ValueError`` so plain ``except ValueError`` call sites keep working.
"""

from typing import Any, Optional


class ZeroSumError(Exception):
    """Root of all errors raised by this toolkit."""


class StructuralError(ZeroSumError, ValueError):
    """An element, sequence, weight set or group is malformed or mismatched."""


class ParseError(StructuralError):
    """Textual input could not be parsed."""


class CapacityError(ZeroSumError):
    """A table or enumeration would exceed its configured budget."""


class OracleBoundError(CapacityError):
    """The brute-force oracle refuses an input above its enumeration bound."""


class PreconditionError(ZeroSumError, ValueError):
    """An operation was called with inputs violating its precondition."""


class HypothesisError(PreconditionError):
    """
    A theorem checker was handed an instance outside the theorem's hypotheses.

    Attributes
    ----------
    hypothesis : str
        Machine-readable name of the failed hypothesis.
    """

    def __init__(self, hypothesis: str, message: str) -> None:
        super().__init__(message)
        self.hypothesis = hypothesis


class PostconditionError(ZeroSumError):
    """A checked postcondition failed. Indicates a defect, never bad input."""


class InconclusiveSearch(ZeroSumError):
    """
    An exhaustive search ran out of budget before it could certify a value.

    Attributes
    ----------
    kind : str
        Constant being computed (``"D_A"``, ``"E_A"``, ``"D"``, ``"E"``).
    lower_bound : int
        Best value proven so far: the constant is at least this.
    best_witness : Tuple[Any, ...]
        Longest sequence found that fails the defining predicate.
    nodes_explored : int
        Total search nodes visited before giving up.
    reason : str
        ``"max_nodes"`` or ``"max_length"``.
    """

    def __init__(
        self,
        kind: str,
        lower_bound: int,
        best_witness: Optional[Any],
        nodes_explored: int,
        reason: str,
    ) -> None:
        super().__init__(
            f"Search for {kind} is inconclusive ({reason} budget exhausted "
            f"after {nodes_explored} nodes); value is at least {lower_bound}."
        )
        self.kind = kind
        self.lower_bound = lower_bound
        self.best_witness = best_witness
        self.nodes_explored = nodes_explored
        self.reason = reason
