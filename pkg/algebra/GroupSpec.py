"""
Finite abelian groups given as direct products of cyclic factors.

Purpose
-------
- Describe ``G = Z/m1 x Z/m2 x ... x Z/ml`` by its factor orders.
- Provide the group law (``add``, ``neg``, ``scale``) on immutable elements.
- Map elements to flat row-major indices so numeric code can work on
  dense arrays; lexicographic residue order equals index order.

Notes
-----
- The one-factor case ``orders=(n,)`` is the cyclic group ``Z/nZ``.
- Index tables are computed lazily and cached on the (frozen) spec.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, List, Sequence, Tuple

import numpy as np

from algebra.Errors import StructuralError


@dataclass(frozen=True, order=True)
class GroupElement:
    """An element of a product of cyclic groups, as a tuple of residues."""

    residues: Tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "residues", tuple(int(r) for r in self.residues))

    @property
    def is_zero(self) -> bool:
        return not any(self.residues)


@dataclass(frozen=True)
class GroupSpec:
    """
    A finite abelian group as an ordered list of cyclic factor orders.

    Attributes
    ----------
    orders : Tuple[int, ...]
        Cyclic factor orders, each at least 1, in fixed order.
    """

    orders: Tuple[int, ...]

    def __post_init__(self) -> None:
        orders = tuple(self.orders)
        if not orders:
            raise StructuralError("A group needs at least one cyclic factor.")
        for m in orders:
            if not isinstance(m, (int, np.integer)) or isinstance(m, bool) or m < 1:
                raise StructuralError(f"Cyclic factor orders must be integers >= 1, got {m!r}.")
        object.__setattr__(self, "orders", tuple(int(m) for m in orders))

    @classmethod
    def cyclic(cls, n: int) -> "GroupSpec":
        """Return ``Z/nZ``."""
        return cls((n,))

    # -----------------------------
    # Structure
    # -----------------------------
    @property
    def order(self) -> int:
        return math.prod(self.orders)

    @property
    def exponent(self) -> int:
        return math.lcm(*self.orders)

    @property
    def rank(self) -> int:
        return len(self.orders)

    @property
    def is_cyclic(self) -> bool:
        """True for the single-factor presentation ``Z/nZ``."""
        return len(self.orders) == 1

    @property
    def zero(self) -> GroupElement:
        return GroupElement((0,) * self.rank)

    def units(self) -> List[int]:
        """Residues coprime to the order. Only meaningful for cyclic groups."""
        n = self.order
        if n == 1:
            return [0]
        return [u for u in range(1, n) if math.gcd(u, n) == 1]

    def label(self) -> str:
        """Text form used on the command line, e.g. ``8`` or ``2x4``."""
        return "x".join(str(m) for m in self.orders)

    # -----------------------------
    # Elements and indices
    # -----------------------------
    def element(self, *residues: int) -> GroupElement:
        """Build an element, reducing every residue modulo its factor."""
        if len(residues) != self.rank:
            raise StructuralError(
                f"Element has {len(residues)} components but group {self.label()} has {self.rank}."
            )
        return GroupElement(tuple(int(r) % m for r, m in zip(residues, self.orders)))

    def validate(self, g: GroupElement) -> GroupElement:
        """Return ``g`` unchanged if it is a reduced element of this group."""
        if len(g.residues) != self.rank:
            raise StructuralError(
                f"Element {g.residues} has {len(g.residues)} components "
                f"but group {self.label()} has {self.rank}."
            )
        for r, m in zip(g.residues, self.orders):
            if not 0 <= r < m:
                raise StructuralError(f"Residue {r} is out of range for factor Z/{m} in {g.residues}.")
        return g

    def elements(self) -> Iterator[GroupElement]:
        """All elements in lexicographic (= flat index) order."""
        for i in range(self.order):
            yield self.element_at(i)

    @cached_property
    def _strides(self) -> Tuple[int, ...]:
        strides = []
        acc = 1
        for m in reversed(self.orders):
            strides.append(acc)
            acc *= m
        return tuple(reversed(strides))

    def index_of(self, g: GroupElement) -> int:
        return sum(r * s for r, s in zip(g.residues, self._strides))

    def element_at(self, index: int) -> GroupElement:
        residues = []
        for s, m in zip(self._strides, self.orders):
            residues.append((index // s) % m)
        return GroupElement(tuple(residues))

    @cached_property
    def residue_matrix(self) -> np.ndarray:
        """``(order, rank)`` array whose row ``i`` holds the residues of element ``i``."""
        grids = np.indices(self.orders).reshape(self.rank, -1).T
        return grids.astype(np.int64)

    @cached_property
    def translation_table(self) -> np.ndarray:
        """
        ``T[g, h] = index(h - g)``.

        Indexing a boolean row with ``T[g]`` yields the row translated by
        ``+g``: ``row[T[g]][h] == row[h - g]``.
        """
        res = self.residue_matrix
        mods = np.array(self.orders, dtype=np.int64)
        diff = (res[None, :, :] - res[:, None, :]) % mods
        return diff @ np.array(self._strides, dtype=np.int64)

    def scaled_index(self, a: int, index: int) -> int:
        """Flat index of ``a * element_at(index)``."""
        res = self.residue_matrix[index]
        mods = np.array(self.orders, dtype=np.int64)
        return int(((res * (a % self.exponent)) % mods) @ np.array(self._strides, dtype=np.int64))

    def indices_of(self, elements: Sequence[GroupElement]) -> Tuple[int, ...]:
        return tuple(self.index_of(g) for g in elements)


# -----------------------------
# Group law
# -----------------------------
def add(g: GroupElement, h: GroupElement, G: GroupSpec) -> GroupElement:
    """Componentwise sum modulo the factor orders."""
    G.validate(g)
    G.validate(h)
    return GroupElement(tuple((a + b) % m for a, b, m in zip(g.residues, h.residues, G.orders)))


def neg(g: GroupElement, G: GroupSpec) -> GroupElement:
    G.validate(g)
    return GroupElement(tuple((-a) % m for a, m in zip(g.residues, G.orders)))


def scale(a: int, g: GroupElement, G: GroupSpec) -> GroupElement:
    """``a * g`` for any integer ``a``; depends only on ``a`` modulo the exponent."""
    G.validate(g)
    a = int(a) % G.exponent
    return GroupElement(tuple((a * r) % m for r, m in zip(g.residues, G.orders)))
