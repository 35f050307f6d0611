"""
Weighted subsequence-sum profiles.

Purpose
-------
- ``SumProfile``: dense boolean table over (length ``k``, element ``g``);
  cell ``(k, g)`` is true iff ``g = sum a_i x_{j_i}`` for some ``k`` distinct
  indices and weights ``a_i`` in ``A`` (weights may repeat across indices).
- ``CollapsedProfile``: one row holding every sum of a *nonempty* weighted
  selection, whatever its length. Enough to decide A-zero-sum-freeness.
- The two predicates defining ``D_A`` and ``E_A``.

Design
------
- Rows are numpy boolean vectors indexed by flat group index. Adding an
  entry ``x`` is a handful of translated ORs, one per distinct ``a x``:
  ``new[k] = old[k] | OR_a old[k-1] shifted by a x``.
- ``extend`` reads only the *old* table, so an entry is never used twice.
- Profiles are immutable; ``extend`` returns a fresh value, which is what
  the depth-first searches push on their stacks.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import FrozenSet, Tuple

import numpy as np

from algebra.Errors import CapacityError, PreconditionError, StructuralError
from algebra.GroupSpec import GroupElement, GroupSpec
from algebra.GSequence import GSequence
from algebra.WeightSet import WeightSet

logger = logging.getLogger(__name__)

TABLE_CELL_BUDGET = 2 ** 28


@dataclass(frozen=True)
class WeightedShifts:
    """
    Per-(group, weights) lookup tables shared by every profile.

    Attributes
    ----------
    orbits : Tuple[np.ndarray, ...]
        ``orbits[i]`` holds the distinct flat indices of ``a * element_at(i)``.
    translation : np.ndarray
        ``GroupSpec.translation_table`` of the group.
    """

    group: GroupSpec
    weights: WeightSet
    orbits: Tuple[np.ndarray, ...]
    translation: np.ndarray


@lru_cache(maxsize=128)
def weighted_shifts(G: GroupSpec, A: WeightSet) -> WeightedShifts:
    A.check_group(G)
    orbits = tuple(
        np.array(sorted({G.scaled_index(a, i) for a in A.weights}), dtype=np.int64)
        for i in range(G.order)
    )
    return WeightedShifts(G, A, orbits, G.translation_table)


def _frozen(array: np.ndarray) -> np.ndarray:
    array.flags.writeable = False
    return array


# -----------------------------
# Full (k, g) profile
# -----------------------------
@dataclass(frozen=True, eq=False)
class SumProfile:
    """
    Attributes
    ----------
    group : GroupSpec
    weights : WeightSet
    max_len : int
        Largest selection length ``L`` tracked; rows ``0..L``.
    table : np.ndarray
        Read-only ``(L + 1, |G|)`` boolean array.
    length : int
        Number of entries folded in so far.
    """

    group: GroupSpec
    weights: WeightSet
    max_len: int
    table: np.ndarray
    length: int = 0

    @classmethod
    def empty(
        cls,
        G: GroupSpec,
        A: WeightSet,
        max_len: int,
        cell_budget: int = TABLE_CELL_BUDGET,
    ) -> "SumProfile":
        """Profile of the empty sequence: only ``(0, 0)`` is true."""
        if max_len < 0:
            raise PreconditionError(f"max_len must be >= 0, got {max_len}.")
        cells = G.order * (max_len + 1)
        if cells > cell_budget:
            raise CapacityError(
                f"A profile over {G.label()} with max_len={max_len} needs {cells} cells; "
                f"the table budget is {cell_budget}."
            )
        A.check_group(G)
        table = np.zeros((max_len + 1, G.order), dtype=bool)
        table[0, 0] = True
        return cls(G, A, max_len, _frozen(table), 0)

    def extend(self, x: GroupElement) -> "SumProfile":
        """Profile of the sequence with one more entry ``x``."""
        return self.extend_index(self.group.index_of(self.group.validate(x)))

    def extend_index(self, index: int) -> "SumProfile":
        shifts = weighted_shifts(self.group, self.weights)
        old = self.table
        new = old.copy()
        if self.max_len > 0:
            lower = old[:-1]
            for y in shifts.orbits[index]:
                new[1:] |= lower[:, shifts.translation[y]]
        return SumProfile(self.group, self.weights, self.max_len, _frozen(new), self.length + 1)

    # -----------------------------
    # Queries
    # -----------------------------
    def contains(self, k: int, g: GroupElement) -> bool:
        if not 0 <= k <= self.max_len:
            return False
        return bool(self.table[k, self.group.index_of(g)])

    def row(self, k: int) -> FrozenSet[GroupElement]:
        """``Sigma_k`` with weights, as a set of elements."""
        if not 0 <= k <= self.max_len:
            return frozenset()
        return frozenset(self.group.element_at(int(i)) for i in np.flatnonzero(self.table[k]))

    def lengths_reaching(self, g: GroupElement) -> Tuple[int, ...]:
        return tuple(int(k) for k in np.flatnonzero(self.table[:, self.group.index_of(g)]))

    def has_zero_sum(self) -> bool:
        """Some nonempty selection (of a tracked length) sums to zero."""
        return bool(self.table[1:, 0].any())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SumProfile):
            return NotImplemented
        return (
            self.group == other.group
            and self.weights == other.weights
            and self.max_len == other.max_len
            and np.array_equal(self.table, other.table)
        )

    __hash__ = None


# -----------------------------
# Length-collapsed row
# -----------------------------
@dataclass(frozen=True, eq=False)
class CollapsedProfile:
    """Sums of all nonempty weighted selections, lengths forgotten."""

    group: GroupSpec
    weights: WeightSet
    reach: np.ndarray
    length: int = 0

    @classmethod
    def empty(cls, G: GroupSpec, A: WeightSet) -> "CollapsedProfile":
        A.check_group(G)
        return cls(G, A, _frozen(np.zeros(G.order, dtype=bool)), 0)

    def extend(self, x: GroupElement) -> "CollapsedProfile":
        return self.extend_index(self.group.index_of(self.group.validate(x)))

    def extend_index(self, index: int) -> "CollapsedProfile":
        shifts = weighted_shifts(self.group, self.weights)
        old = self.reach
        new = old.copy()
        for y in shifts.orbits[index]:
            new |= old[shifts.translation[y]]
            new[y] = True
        return CollapsedProfile(self.group, self.weights, _frozen(new), self.length + 1)

    def has_zero_sum(self) -> bool:
        return bool(self.reach[0])


# -----------------------------
# Public operations
# -----------------------------
def _check_sequence(S: GSequence, G: GroupSpec) -> None:
    if S.group != G:
        raise StructuralError(f"Sequence lives in {S.group.label()}, not {G.label()}.")


def sum_profile(
    S: GSequence,
    A: WeightSet,
    G: GroupSpec,
    max_len: int,
    cell_budget: int = TABLE_CELL_BUDGET,
) -> SumProfile:
    """Exact realizability table of ``S`` with weights ``A`` up to length ``max_len``."""
    _check_sequence(S, G)
    profile = SumProfile.empty(G, A, max_len, cell_budget)
    for i in S.indices:
        profile = profile.extend_index(i)
    return profile


def has_weighted_zero_sum(S: GSequence, A: WeightSet, G: GroupSpec) -> bool:
    """True iff some nonempty subsequence has an A-weighted sum equal to zero."""
    _check_sequence(S, G)
    profile = CollapsedProfile.empty(G, A)
    for i in S.indices:
        profile = profile.extend_index(i)
        if profile.has_zero_sum():
            return True
    return False


def has_exact_length_weighted_zero_sum(S: GSequence, A: WeightSet, G: GroupSpec, n: int) -> bool:
    """True iff exactly ``n`` entries of ``S`` admit an A-weighted sum equal to zero."""
    if n < 1:
        raise PreconditionError(f"Selection length must be >= 1, got {n}.")
    _check_sequence(S, G)
    if len(S) < n:
        return False
    return bool(sum_profile(S, A, G, n).table[n, 0])


# -----------------------------
# Unweighted sumsets
# -----------------------------
def _unit_weights(G: GroupSpec) -> WeightSet:
    return WeightSet.for_group((1,), G)


def sigma_k(S: GSequence, k: int) -> FrozenSet[GroupElement]:
    """``Sigma_k(S)``: sums of ``k``-element subsequences."""
    if k < 0 or k > len(S):
        return frozenset()
    return sum_profile(S, _unit_weights(S.group), S.group, k).row(k)


def sigma_le_k(S: GSequence, k: int) -> FrozenSet[GroupElement]:
    """``Sigma_{<=k}(S)``: union of ``Sigma_i(S)`` for ``1 <= i <= k``."""
    k = min(k, len(S))
    if k < 1:
        return frozenset()
    profile = sum_profile(S, _unit_weights(S.group), S.group, k)
    result = set()
    for i in range(1, k + 1):
        result |= profile.row(i)
    return frozenset(result)


def sigma_all(S: GSequence) -> FrozenSet[GroupElement]:
    """``Sigma(S)``: sums of all nonempty subsequences."""
    return sigma_le_k(S, len(S))
