"""
Sequences over a finite abelian group (finite multisets with multiplicity).

Entries are kept sorted lexicographically by residue tuple, so two
sequences with the same multiset content are equal and hash equally.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import FrozenSet, Iterable, Iterator, Tuple

from algebra.Errors import StructuralError
from algebra.GroupSpec import GroupElement, GroupSpec, add, scale


@dataclass(frozen=True)
class GSequence:
    """
    A sequence ``S = g_1 ... g_k`` in ``G``.

    Attributes
    ----------
    group : GroupSpec
        Ambient group.
    entries : Tuple[GroupElement, ...]
        Entries in non-decreasing lexicographic order.
    """

    group: GroupSpec
    entries: Tuple[GroupElement, ...] = ()

    def __post_init__(self) -> None:
        for g in self.entries:
            if not isinstance(g, GroupElement):
                raise StructuralError(f"Sequence entries must be GroupElement, got {g!r}.")
            self.group.validate(g)
        object.__setattr__(self, "entries", tuple(sorted(self.entries)))

    @classmethod
    def from_residues(cls, group: GroupSpec, values: Iterable) -> "GSequence":
        """Build from integers (cyclic) or residue tuples, reducing each entry."""
        entries = []
        for v in values:
            residues = (v,) if isinstance(v, int) else tuple(v)
            entries.append(group.element(*residues))
        return cls(group, tuple(entries))

    @classmethod
    def from_indices(cls, group: GroupSpec, indices: Iterable[int]) -> "GSequence":
        return cls(group, tuple(group.element_at(i) for i in indices))

    @classmethod
    def repeat(cls, group: GroupSpec, g: GroupElement, k: int) -> "GSequence":
        """``g^k``."""
        return cls(group, (g,) * k)

    # -----------------------------
    # Accessors (v_g, h, supp, sigma)
    # -----------------------------
    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[GroupElement]:
        return iter(self.entries)

    @property
    def length(self) -> int:
        return len(self.entries)

    @cached_property
    def _counts(self) -> Counter:
        return Counter(self.entries)

    def multiplicity(self, g: GroupElement) -> int:
        return self._counts.get(g, 0)

    @property
    def max_multiplicity(self) -> int:
        """``h(S)``; 0 for the empty sequence."""
        return max(self._counts.values(), default=0)

    @property
    def support(self) -> FrozenSet[GroupElement]:
        return frozenset(self._counts)

    @property
    def total(self) -> GroupElement:
        """``sigma(S)``."""
        acc = self.group.zero
        for g in self.entries:
            acc = add(acc, g, self.group)
        return acc

    def is_zero_sum(self) -> bool:
        return self.total.is_zero

    @property
    def indices(self) -> Tuple[int, ...]:
        """Flat group indices of the entries, non-decreasing."""
        return self.group.indices_of(self.entries)

    # -----------------------------
    # Derived sequences
    # -----------------------------
    def translate(self, g: GroupElement) -> "GSequence":
        """``g + S = (g + g_1) ... (g + g_k)``."""
        return GSequence(self.group, tuple(add(g, x, self.group) for x in self.entries))

    def scaled(self, a: int) -> "GSequence":
        """``aS``: every entry multiplied by ``a``, re-sorted."""
        return GSequence(self.group, tuple(scale(a, x, self.group) for x in self.entries))

    def concat(self, other: "GSequence") -> "GSequence":
        if other.group != self.group:
            raise StructuralError(
                f"Cannot concatenate sequences over {self.group.label()} and {other.group.label()}."
            )
        return GSequence(self.group, self.entries + other.entries)

    def without(self, g: GroupElement) -> "GSequence":
        """Remove one occurrence of ``g``."""
        entries = list(self.entries)
        try:
            entries.remove(g)
        except ValueError as exc:
            raise StructuralError(f"{g.residues} does not occur in the sequence.") from exc
        return GSequence(self.group, tuple(entries))

    def sort_key(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(g.residues for g in self.entries)
