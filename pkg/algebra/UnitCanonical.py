"""
Unit-scaling canonical form for sequences in a cyclic group.

For a unit ``u`` of ``Z/nZ`` and any weights, ``sum a_i (u x_i) = u sum a_i x_i``,
so ``S`` and ``uS`` have the same weighted zero-sum structure. Searches only
need one representative per orbit ``{uS}``: the lexicographically least.
"""

from typing import List

from algebra.GroupSpec import GroupSpec
from algebra.GSequence import GSequence


def canonicalize_under_units(S: GSequence, G: GroupSpec) -> GSequence:
    """
    Lexicographically least sequence among ``{uS : u a unit of Z/nZ}``.

    Non-cyclic groups are returned unchanged (no automorphism reduction).
    """
    if not G.is_cyclic or not S.entries:
        return S
    best = S
    for u in G.units():
        candidate = S.scaled(u)
        if candidate.sort_key() < best.sort_key():
            best = candidate
    return best


def canonical_roots(G: GroupSpec) -> List[int]:
    """
    Flat indices ``x`` that are least in their unit orbit ``{ux}``.

    Every unit orbit of sequences contains a member whose smallest entry is
    such a root, and the lexicographically least member of the orbit has one.
    """
    if not G.is_cyclic:
        return list(range(G.order))
    n = G.order
    units = G.units()
    return [x for x in range(n) if all((u * x) % n >= x for u in units)]
