"""
Exact computation of D_A(G), E_A(G), D(G) and E(G) by exhaustive search.

Purpose
-------
- Find the longest sequence failing a defining predicate (A-zero-sum-free
  for ``D_A``; no exact-``|G|`` weighted zero-sum for ``E_A``). The constant
  is that length plus one, and the sequence is its witness.

Key concepts
------------
- **Canonical enumeration:** entries are appended in non-decreasing flat
  index order, so every multiset is visited once.
- **Heredity:** both failing predicates are inherited by subsequences, so a
  node whose profile already shows a zero-sum is never extended.
- **Incremental profiles:** every node carries its profile; a child costs
  one ``extend_index`` call.
- **Unit pruning (cyclic G):** only roots that are least in their unit
  orbit start a branch. The lexicographically least maximal sequence always
  starts with such a root, so values and witnesses are unchanged.
- **Branches:** each root is an independent task; branches run serially
  or on a process pool and are merged in root order, so the result and the
  node total never depend on the worker count.

Budget
------
- A free sequence reaching ``max_length`` or a node total above
  ``max_nodes`` raises ``InconclusiveSearch``, never a wrong value.
"""

from __future__ import annotations

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from enum import Enum
from typing import Any, Dict, List, Optional, Sequence, Tuple

from algebra.Errors import InconclusiveSearch, PostconditionError, PreconditionError, StructuralError
from algebra.GroupSpec import GroupSpec
from algebra.GSequence import GSequence
from algebra.TextSyntax import format_sequence
from algebra.UnitCanonical import canonical_roots
from algebra.WeightSet import WeightSet
from extremal.SearchTracer import SearchTracer
from sumengine.SumProfile import (
    CollapsedProfile,
    SumProfile,
    has_exact_length_weighted_zero_sum,
    has_weighted_zero_sum,
)

logger = logging.getLogger(__name__)

DEFAULT_MAX_NODES = 10 ** 9


class ConstantKind(str, Enum):
    D_A = "D_A"
    E_A = "E_A"
    D = "D"
    E = "E"


@dataclass(frozen=True)
class SearchBudget:
    """
    Safety caps for the exhaustive searches.

    Attributes
    ----------
    max_length : int
        Longest sequence the search may build.
    max_nodes : int
        Cap on explored nodes, per branch and in total.
    allow_unit_pruning : bool
        Restrict roots to unit-orbit representatives (cyclic groups only).
    """

    max_length: int
    max_nodes: int = DEFAULT_MAX_NODES
    allow_unit_pruning: bool = True

    def __post_init__(self) -> None:
        if self.max_length < 1 or self.max_nodes < 1:
            raise StructuralError(
                f"Search caps must be positive, got max_length={self.max_length}, max_nodes={self.max_nodes}."
            )

    @classmethod
    def for_group(cls, G: GroupSpec, **overrides: Any) -> "SearchBudget":
        """Defaults: ``max_length = 4|G| + 16``, ``max_nodes = 10**9``, unit pruning on."""
        values = {"max_length": 4 * G.order + 16}
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)

    def widened(self, max_length: int) -> "SearchBudget":
        return replace(self, max_length=max_length)


@dataclass(frozen=True)
class ConstantResult:
    """
    A computed invariant with its extremal witness.

    Attributes
    ----------
    kind : ConstantKind
    group : GroupSpec
    weights : WeightSet | None
        Absent for the classical constants.
    value : int
    witness : GSequence
        Length ``value - 1``; fails the defining predicate.
    nodes_explored : int
    elapsed : float
        Seconds.
    """

    kind: ConstantKind
    group: GroupSpec
    weights: Optional[WeightSet]
    value: int
    witness: GSequence
    nodes_explored: int
    elapsed: float

    def __post_init__(self) -> None:
        if self.value < 1:
            raise PostconditionError(f"{self.kind.value} must be >= 1, got {self.value}.")
        if len(self.witness) != self.value - 1:
            raise PostconditionError(
                f"Witness of length {len(self.witness)} does not certify {self.kind.value} = {self.value}."
            )

    def as_dict(self) -> Dict[str, Any]:
        return {
            "kind": self.kind.value,
            "group": self.group.label(),
            "weights": None if self.weights is None else self.weights.text(),
            "value": self.value,
            "witness": format_sequence(self.witness),
            "nodes_explored": self.nodes_explored,
            "elapsed_ms": round(self.elapsed * 1000),
        }


# ---------------------------------------------------------------------
# Branch worker
# ---------------------------------------------------------------------
@dataclass(frozen=True)
class BranchTask:
    group: GroupSpec
    weights: WeightSet
    exact_length: Optional[int]  # None: zero-sum-free search; n: exact-n search
    root: int
    max_length: int
    max_nodes: int


@dataclass(frozen=True)
class BranchOutcome:
    root: int
    best: Tuple[int, ...]
    nodes: int
    length_capped: bool
    node_capped: bool


class _NodeCapReached(Exception):
    pass


def explore_branch(task: BranchTask) -> BranchOutcome:
    """
    Depth-first search of every failing sequence whose least entry is ``task.root``.

    Module-level so process pools can pickle it.
    """
    G = task.group
    n = task.exact_length
    if n is None:
        start = CollapsedProfile.empty(G, task.weights)

        def fails(profile) -> bool:
            return not profile.reach[0]
    else:
        start = SumProfile.empty(G, task.weights, n)

        def fails(profile) -> bool:
            return not profile.table[n, 0]

    root_profile = start.extend_index(task.root)
    if not fails(root_profile):
        return BranchOutcome(task.root, (), 0, False, False)

    order = G.order
    best: List[Tuple[int, ...]] = [(task.root,)]
    nodes = 0
    length_capped = False

    def visit(profile, seq: Tuple[int, ...]) -> None:
        nonlocal nodes, length_capped
        nodes += 1
        if nodes > task.max_nodes:
            raise _NodeCapReached
        if len(seq) > len(best[0]):
            best[0] = seq
        if len(seq) >= task.max_length:
            length_capped = True
            return
        for nxt in range(seq[-1], order):
            child = profile.extend_index(nxt)
            if fails(child):
                visit(child, seq + (nxt,))

    try:
        visit(root_profile, (task.root,))
    except _NodeCapReached:
        return BranchOutcome(task.root, best[0], nodes, length_capped, True)
    return BranchOutcome(task.root, best[0], nodes, length_capped, False)


def _run_branches(tasks: Sequence[BranchTask], jobs: int) -> List[BranchOutcome]:
    if jobs <= 1 or len(tasks) <= 1:
        return [explore_branch(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        return list(ex.map(explore_branch, tasks))


def _search(
    kind: ConstantKind,
    G: GroupSpec,
    A: WeightSet,
    exact_length: Optional[int],
    budget: SearchBudget,
    jobs: int,
    tracer: Optional[SearchTracer],
) -> Tuple[Tuple[int, ...], int]:
    """Run all branches and merge: longest wins, earliest root breaks ties."""
    roots = canonical_roots(G) if budget.allow_unit_pruning else list(range(G.order))
    tasks = [BranchTask(G, A, exact_length, r, budget.max_length, budget.max_nodes) for r in roots]
    outcomes = _run_branches(tasks, jobs)

    best: Tuple[int, ...] = ()
    total = 1  # the empty sequence
    node_capped = False
    length_capped = False
    for outcome in outcomes:
        total += outcome.nodes
        label = format_sequence(GSequence.from_indices(G, (outcome.root,)))
        logger.debug("%s over %s: root %s explored %d nodes, longest %d",
                     kind.value, G.label(), label, outcome.nodes, len(outcome.best))
        if tracer is not None:
            tracer.trace(label, "branch_done", {"nodes": outcome.nodes, "longest": len(outcome.best)}, total)
        if len(outcome.best) > len(best):
            best = outcome.best
            if tracer is not None:
                tracer.trace(label, "new_best", format_sequence(GSequence.from_indices(G, best)), total)
        if outcome.node_capped:
            node_capped = True
            if tracer is not None:
                tracer.trace(label, "node_cap", budget.max_nodes, total)
        if outcome.length_capped:
            length_capped = True
            if tracer is not None:
                tracer.trace(label, "length_cap", budget.max_length, total)

    witness = GSequence.from_indices(G, best)
    if node_capped or total > budget.max_nodes:
        raise InconclusiveSearch(kind.value, len(best) + 1, witness, total, "max_nodes")
    if length_capped:
        raise InconclusiveSearch(kind.value, budget.max_length + 1, witness, total, "max_length")
    return best, total


def _finish(
    kind: ConstantKind,
    G: GroupSpec,
    weights: Optional[WeightSet],
    best: Sequence[int],
    nodes: int,
    started: float,
    tracer: Optional[SearchTracer],
) -> ConstantResult:
    result = ConstantResult(
        kind, G, weights, len(best) + 1, GSequence.from_indices(G, best), nodes, time.perf_counter() - started
    )
    if tracer is not None:
        tracer.trace(None, "result", result.value, nodes)
    logger.info("%s(%s%s) = %d after %d nodes", kind.value, G.label(),
                "" if weights is None else f"; A={weights.text()}", result.value, nodes)
    return result


# ---------------------------------------------------------------------
# Public operations
# ---------------------------------------------------------------------
def max_zero_sum_free_length(
    G: GroupSpec,
    A: WeightSet,
    budget: Optional[SearchBudget] = None,
    jobs: int = 1,
    tracer: Optional[SearchTracer] = None,
    kind: ConstantKind = ConstantKind.D_A,
) -> ConstantResult:
    """``D_A(G)``: one plus the maximal length of an A-zero-sum-free sequence."""
    A.check_group(G)
    budget = budget or SearchBudget.for_group(G)
    started = time.perf_counter()
    if A.contains_zero:
        if tracer is not None:
            tracer.trace(None, "short_circuit", "0 in A", 0)
        return _finish(kind, G, A if kind is ConstantKind.D_A else None, (), 0, started, tracer)
    best, nodes = _search(kind, G, A, None, budget, jobs, tracer)
    return _finish(kind, G, A if kind is ConstantKind.D_A else None, best, nodes, started, tracer)


def egz_constant(
    G: GroupSpec,
    A: WeightSet,
    n: int,
    budget: Optional[SearchBudget] = None,
    jobs: int = 1,
    tracer: Optional[SearchTracer] = None,
    kind: ConstantKind = ConstantKind.E_A,
) -> ConstantResult:
    """
    ``E_A(G)``: least ``t`` such that every length-``t`` sequence has ``n = |G|``
    entries with an A-weighted zero sum. Computed by search, never from ``D_A``.
    """
    if n != G.order:
        raise PreconditionError(f"E_A selections have length |G| = {G.order}, got n = {n}.")
    A.check_group(G)
    budget = budget or SearchBudget.for_group(G)
    started = time.perf_counter()
    weights = A if kind is ConstantKind.E_A else None
    if A.contains_zero:
        if tracer is not None:
            tracer.trace(None, "short_circuit", "0 in A", 0)
        return _finish(kind, G, weights, (0,) * (n - 1), 0, started, tracer)
    best, nodes = _search(kind, G, A, n, budget, jobs, tracer)
    return _finish(kind, G, weights, best, nodes, started, tracer)


def lower_bound_witness(G: GroupSpec, A: WeightSet, W: GSequence) -> GSequence:
    """
    ``0^(n-1) W`` for an A-zero-sum-free ``W``: a sequence of length
    ``n - 1 + |W|`` without an exact-``n`` weighted zero-sum, so
    ``E_A >= D_A + n - 1`` whenever ``|W| = D_A - 1``.
    """
    if has_weighted_zero_sum(W, A, G):
        raise PreconditionError(f"{format_sequence(W)} is not A-zero-sum-free for A={A.text()}.")
    n = G.order
    result = GSequence.repeat(G, G.zero, n - 1).concat(W)
    if has_exact_length_weighted_zero_sum(result, A, G, n):
        raise PostconditionError(
            f"{format_sequence(result)} has an exact-{n} weighted zero-sum for A={A.text()}."
        )
    return result


def classical_constants(
    G: GroupSpec,
    budget: Optional[SearchBudget] = None,
    jobs: int = 1,
    tracer: Optional[SearchTracer] = None,
) -> Tuple[ConstantResult, ConstantResult]:
    """``(D(G), E(G))``: the ``A = {1}`` case with selections of length ``|G|``."""
    ones = WeightSet.for_group((1,), G)
    d = max_zero_sum_free_length(G, ones, budget, jobs, tracer, kind=ConstantKind.D)
    e = egz_constant(G, ones, G.order, budget, jobs, tracer, kind=ConstantKind.E)
    return d, e
