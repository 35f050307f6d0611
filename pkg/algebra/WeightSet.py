"""
Weight sets ``A``, stored as residues modulo the group exponent.

``a * x`` only depends on ``a`` modulo the exponent, so reducing there
makes one weight set usable across all factors of a product group.
Repeated weights collapse; negative inputs such as ``-1`` reduce to
``exponent - 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, Iterable, Tuple

from algebra.Errors import StructuralError
from algebra.GroupSpec import GroupElement, GroupSpec, scale


@dataclass(frozen=True)
class WeightSet:
    """
    Attributes
    ----------
    weights : Tuple[int, ...]
        Sorted distinct residues in ``[0, exponent)``.
    exponent : int
        Modulus the weights were reduced by.
    """

    weights: Tuple[int, ...]
    exponent: int

    def __post_init__(self) -> None:
        if self.exponent < 1:
            raise StructuralError(f"Weight modulus must be >= 1, got {self.exponent}.")
        if not self.weights:
            raise StructuralError("A weight set must be nonempty.")
        reduced = tuple(sorted({int(a) % self.exponent for a in self.weights}))
        object.__setattr__(self, "weights", reduced)

    @classmethod
    def for_group(cls, values: Iterable[int], G: GroupSpec) -> "WeightSet":
        return cls(tuple(values), G.exponent)

    @property
    def contains_zero(self) -> bool:
        return 0 in self.weights

    def __len__(self) -> int:
        return len(self.weights)

    def __iter__(self):
        return iter(self.weights)

    def text(self) -> str:
        """Canonical text, e.g. ``1,7``."""
        return ",".join(str(a) for a in self.weights)

    def check_group(self, G: GroupSpec) -> "WeightSet":
        if G.exponent != self.exponent:
            raise StructuralError(
                f"Weights were reduced modulo {self.exponent} but group {G.label()} "
                f"has exponent {G.exponent}."
            )
        return self

    def is_subset_of(self, other: "WeightSet") -> bool:
        return set(self.weights) <= set(other.weights)


def weighted_orbit(x: GroupElement, A: WeightSet, G: GroupSpec) -> FrozenSet[GroupElement]:
    """``A x = {a x : a in A}`` with duplicates collapsed."""
    A.check_group(G)
    return frozenset(scale(a, x, G) for a in A.weights)
