"""
Sequences of subsets of G, their restricted sumsets, stabilizers, and an
instance checker for the DeVos-Goddyn-Mohar lower bound.

Definitions
-----------
- ``Sigma_l(A_1, ..., A_m)``: all sums ``a_{i_1} + ... + a_{i_l}`` with
  ``i_1 < ... < i_l`` and ``a_{i_j}`` in ``A_{i_j}``; ``{0}`` for ``l = 0``
  and empty for ``l > m``.
- ``stab(X) = {g : g + X = X}``; ``stab(empty) = G``.
- DGM bound: if ``Sigma_l`` is nonempty and ``H = stab(Sigma_l)``, then
  ``|Sigma_l| >= |H| (1 - l + sum over cosets Q of min(l, #{i : A_i meets Q}))``.
  The count is over indices ``i``, not elements.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Tuple

import numpy as np

from algebra.Errors import StructuralError
from algebra.GroupSpec import GroupElement, GroupSpec, add, neg, scale
from algebra.GSequence import GSequence
from algebra.WeightSet import WeightSet, weighted_orbit


@dataclass(frozen=True)
class SetSequence:
    """
    Ordered list of nonempty subsets ``A_1, ..., A_m`` of ``G``.

    Attributes
    ----------
    group : GroupSpec
    sets : Tuple[FrozenSet[GroupElement], ...]
    """

    group: GroupSpec
    sets: Tuple[FrozenSet[GroupElement], ...]

    def __post_init__(self) -> None:
        normalized = []
        for i, members in enumerate(self.sets):
            members = frozenset(members)
            if not members:
                raise StructuralError(f"Set number {i + 1} of the set sequence is empty.")
            for g in members:
                self.group.validate(g)
            normalized.append(members)
        object.__setattr__(self, "sets", tuple(normalized))

    @classmethod
    def from_residues(cls, group: GroupSpec, sets: Iterable[Iterable]) -> "SetSequence":
        built = []
        for members in sets:
            built.append(frozenset(
                group.element(*((v,) if isinstance(v, int) else tuple(v))) for v in members
            ))
        return cls(group, tuple(built))

    @classmethod
    def from_weighted_sequence(cls, S: GSequence, A: WeightSet) -> "SetSequence":
        """``(A x_1, ..., A x_t)`` for ``S = x_1 ... x_t``."""
        return cls(S.group, tuple(weighted_orbit(x, A, S.group) for x in S.entries))

    def __len__(self) -> int:
        return len(self.sets)

    def shifted(self, c: GroupElement) -> "SetSequence":
        """``(A_1 - c, ..., A_m - c)``."""
        minus_c = neg(c, self.group)
        return SetSequence(
            self.group, tuple(frozenset(add(g, minus_c, self.group) for g in members) for members in self.sets)
        )

    def membership_counts(self) -> List[int]:
        """``counts[g] = #{i : g in A_i}`` indexed by flat group index."""
        counts = [0] * self.group.order
        for members in self.sets:
            for g in members:
                counts[self.group.index_of(g)] += 1
        return counts


@dataclass(frozen=True)
class BoundReport:
    """
    Attributes
    ----------
    l : int
    sumset_size : int
        ``|Sigma_l(A)|``.
    stabilizer : FrozenSet[GroupElement]
        ``H = stab(Sigma_l(A))``.
    bound : int
        Right-hand side of the DGM inequality; 0 when ``Sigma_l`` is empty.
    holds : bool
    coset_hits : Tuple[int, ...]
        ``#{i : A_i meets Q}`` per coset, cosets ordered by least representative.
    """

    l: int
    sumset_size: int
    stabilizer: FrozenSet[GroupElement]
    bound: int
    holds: bool
    coset_hits: Tuple[int, ...] = ()


# -----------------------------
# Internal helpers on index masks
# -----------------------------
def _mask(X: Iterable[GroupElement], G: GroupSpec) -> np.ndarray:
    mask = np.zeros(G.order, dtype=bool)
    for g in X:
        mask[G.index_of(G.validate(g))] = True
    return mask


def _elements(mask: np.ndarray, G: GroupSpec) -> FrozenSet[GroupElement]:
    return frozenset(G.element_at(int(i)) for i in np.flatnonzero(mask))


def _sumset_mask(l: int, A: SetSequence, G: GroupSpec) -> np.ndarray:
    """DP over (prefix, count): ``reach[k]`` = sums of ``k`` terms from distinct members."""
    if l < 0 or l > len(A):
        return np.zeros(G.order, dtype=bool)
    T = G.translation_table
    reach = np.zeros((l + 1, G.order), dtype=bool)
    reach[0, 0] = True
    for members in A.sets:
        if l == 0:
            break
        old = reach.copy()
        for g in members:
            reach[1:] |= old[:-1][:, T[G.index_of(g)]]
    return reach[l]


def _stabilizer_mask(mask: np.ndarray, G: GroupSpec) -> np.ndarray:
    if not mask.any():
        return np.ones(G.order, dtype=bool)
    T = G.translation_table
    return np.array([np.array_equal(mask[T[g]], mask) for g in range(G.order)], dtype=bool)


def cosets(H: FrozenSet[GroupElement], G: GroupSpec) -> List[FrozenSet[GroupElement]]:
    """Cosets of the subgroup ``H``, ordered by least representative."""
    covered = set()
    result = []
    for g in G.elements():
        if g in covered:
            continue
        coset = frozenset(add(g, h, G) for h in H)
        covered |= coset
        result.append(coset)
    return result


# -----------------------------
# Public operations
# -----------------------------
def setseq_sum(l: int, A: SetSequence, G: GroupSpec) -> FrozenSet[GroupElement]:
    """``Sigma_l(A)``; ``{0}`` for ``l = 0``, empty for ``l > |A|``."""
    if A.group != G:
        raise StructuralError(f"Set sequence lives in {A.group.label()}, not {G.label()}.")
    return _elements(_sumset_mask(l, A, G), G)


def stabilizer(X: Iterable[GroupElement], G: GroupSpec) -> FrozenSet[GroupElement]:
    """``{g : g + X = X}``; the whole group for empty ``X``."""
    return _elements(_stabilizer_mask(_mask(X, G), G), G)


def dgm_bound_check(l: int, A: SetSequence, G: GroupSpec) -> BoundReport:
    """Evaluate both sides of the DGM inequality on one instance."""
    sumset = setseq_sum(l, A, G)
    if not sumset:
        return BoundReport(l, 0, frozenset(G.elements()), 0, True)
    H = stabilizer(sumset, G)
    hits = tuple(sum(1 for members in A.sets if members & Q) for Q in cosets(H, G))
    bound = len(H) * (1 - l + sum(min(l, hit) for hit in hits))
    return BoundReport(l, len(sumset), H, bound, len(sumset) >= bound, hits)


def translation_shift_check(l: int, A: SetSequence, c: GroupElement, G: GroupSpec) -> bool:
    """``Sigma_l(A_1 - c, ..., A_m - c) == Sigma_l(A) - l c``."""
    shifted = setseq_sum(l, A.shifted(c), G)
    minus_lc = neg(scale(l, c, G), G)
    expected = frozenset(add(g, minus_lc, G) for g in setseq_sum(l, A, G))
    return shifted == expected
