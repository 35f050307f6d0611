import random
from typing import List, Optional, Tuple

from algebra.GroupSpec import GroupElement, GroupSpec
from algebra.GSequence import GSequence
from algebra.WeightSet import WeightSet
from lemmas.SetSequence import SetSequence


def build_group(order_max: int, rng: Optional[random.Random] = None, allow_products: bool = True) -> GroupSpec:
    """
    Random small group: cyclic ``Z/n`` or a two-factor product ``Z/a x Z/b``.

    Intent
    ------
    - Cover cyclic and non-cyclic presentations with one call.
    - Fail fast on impossible requests.

    Parameters
    ----------
    order_max : int
        Largest allowed group order (must be >= 1).
    rng : Optional[random.Random]
        Seeded generator for reproducible suites. Defaults to `random`.
    allow_products : bool
        Whether two-factor products may be drawn.

    Raises
    ------
    ValueError
        If `order_max` is not positive.
    """
    if order_max < 1:
        raise ValueError("order_max must be a positive integer")

    rng = rng or random
    products: List[Tuple[int, int]] = [
        (a, b) for a in range(2, order_max + 1) for b in range(a, order_max + 1) if a * b <= order_max
    ]
    if allow_products and products and rng.random() < 0.5:
        return GroupSpec(rng.choice(products))
    return GroupSpec.cyclic(rng.randint(1, order_max))


def build_set_sequence(
    G: GroupSpec,
    m: int,
    rng: Optional[random.Random] = None,
    max_set_size: Optional[int] = None,
) -> SetSequence:
    """
    Random sequence of `m` nonempty subsets of `G`.

    Raises
    ------
    ValueError
        If `m` is negative or `max_set_size` is below 1.
    """
    if m < 0:
        raise ValueError("m must be non-negative")
    limit = G.order if max_set_size is None else min(max_set_size, G.order)
    if limit < 1:
        raise ValueError("max_set_size must be at least 1")

    rng = rng or random
    elements = list(G.elements())
    sets = []
    for _ in range(m):
        size = rng.randint(1, limit)
        sets.append(frozenset(rng.sample(elements, size)))
    return SetSequence(G, tuple(sets))


def build_sequence(G: GroupSpec, length: int, rng: Optional[random.Random] = None) -> GSequence:
    """Random sequence of the given length (entries drawn uniformly with replacement)."""
    if length < 0:
        raise ValueError("length must be non-negative")
    rng = rng or random
    return GSequence.from_indices(G, [rng.randrange(G.order) for _ in range(length)])


def build_weights(G: GroupSpec, max_size: int, rng: Optional[random.Random] = None, nonzero: bool = True) -> WeightSet:
    """Random weight set of 1..`max_size` residues modulo the exponent."""
    if max_size < 1:
        raise ValueError("max_size must be at least 1")
    rng = rng or random
    pool = list(range(1 if nonzero else 0, G.exponent)) or [0]
    size = rng.randint(1, min(max_size, len(pool)))
    return WeightSet.for_group(rng.sample(pool, size), G)


def build_element(G: GroupSpec, rng: Optional[random.Random] = None) -> GroupElement:
    rng = rng or random
    return G.element_at(rng.randrange(G.order))
