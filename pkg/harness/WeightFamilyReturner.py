import logging
import math
import random
from itertools import combinations
from typing import Callable, Dict, List, Tuple

from algebra.Errors import StructuralError
from algebra.GroupSpec import GroupSpec
from algebra.TextSyntax import parse_family
from algebra.WeightSet import WeightSet

logger = logging.getLogger(__name__)


class WeightFamilyReturner:
    """
    Resolve weight family descriptors to the weight sets of one cyclic order.

    Responsibilities
    ----------------
    - Map a descriptor (``singleton``, ``pm1``, ``units``, ``all-subsets``,
      ``gcd-diff``, ``random:k:count``, ``explicit:1,3``) to a generator.
    - Enforce a simple naming convention: family ``name`` is produced by the
      method ``_family_<name with '-' as '_'>``.
    - Return sorted, deduplicated ``WeightSet`` lists so campaign cells are
      reproducible.

    Notes
    -----
    - ``all-subsets`` and ``gcd-diff`` grow like ``2^(n-1)`` and are gated to
      ``n <= all_subsets_max_n``; above the gate they yield nothing.
    - ``random`` families draw from a generator seeded by
      ``(seed, descriptor, n)``, so results do not depend on call order.
    - Resolved descriptors are cached per ``(descriptor, n)``.
    """

    def __init__(self, seed: int = 0, all_subsets_max_n: int = 8) -> None:
        """
        Parameters
        ----------
        seed : int
            Campaign seed used by ``random:k:count`` families.
        all_subsets_max_n : int
            Largest order for which exhaustive subset families are generated.
        """
        self.seed = seed
        self.all_subsets_max_n = all_subsets_max_n
        self._cache: Dict[Tuple[str, int], List[WeightSet]] = {}

    # ------------------------------------------------------------------ #
    # Internal helpers                                                   #
    # ------------------------------------------------------------------ #

    def _resolve_generator(self, name: str) -> Callable[[GroupSpec, Tuple[int, ...], str], List[WeightSet]]:
        """
        Return the generator method for a family name.

        Raises
        ------
        StructuralError
            If no method follows the naming convention for ``name``.
        """
        generator = getattr(self, f"_family_{name.replace('-', '_')}", None)
        if generator is None:
            raise StructuralError(
                f"Unknown weight family {name!r}. Expected one of singleton, pm1, units, "
                f"all-subsets, gcd-diff, random:k:count, explicit:<weights>."
            )
        return generator

    def _gated(self, G: GroupSpec, name: str) -> bool:
        if G.order > self.all_subsets_max_n:
            logger.warning("Family %s skipped for n=%d (gate is n <= %d).", name, G.order, self.all_subsets_max_n)
            return False
        return True

    @staticmethod
    def _nonzero_subsets(n: int):
        for size in range(1, n):
            yield from combinations(range(1, n), size)

    # ------------------------------------------------------------------ #
    # Families                                                           #
    # ------------------------------------------------------------------ #

    def _family_singleton(self, G, params, descriptor):
        return [WeightSet.for_group((1,), G)]

    def _family_pm1(self, G, params, descriptor):
        return [WeightSet.for_group((1, -1), G)]

    def _family_units(self, G, params, descriptor):
        return [WeightSet.for_group(G.units(), G)]

    def _family_all_subsets(self, G, params, descriptor):
        if not self._gated(G, descriptor):
            return []
        return [WeightSet.for_group(c, G) for c in self._nonzero_subsets(G.order)]

    def _family_gcd_diff(self, G, params, descriptor):
        """Sets with ``gcd(a_2 - a_1, ..., a_r - a_1, n) = 1``."""
        if not self._gated(G, descriptor):
            return []
        n = G.order
        return [
            WeightSet.for_group(c, G) for c in self._nonzero_subsets(n)
            if math.gcd(n, *(a - c[0] for a in c[1:])) == 1
        ]

    def _family_random(self, G, params, descriptor):
        k, count = params
        pool = list(range(1, G.order))
        if not 1 <= k <= len(pool):
            logger.warning("Family %s skipped for n=%d (k outside 1..%d).", descriptor, G.order, len(pool))
            return []
        rng = random.Random(f"{self.seed}:{descriptor}:{G.order}")
        return [WeightSet.for_group(rng.sample(pool, k), G) for _ in range(count)]

    def _family_explicit(self, G, params, descriptor):
        return [WeightSet.for_group(params, G)]

    # ------------------------------------------------------------------ #
    # Public API                                                         #
    # ------------------------------------------------------------------ #

    def return_weight_sets(self, descriptor: str, n: int) -> List[WeightSet]:
        """
        Weight sets of one family for ``Z/nZ``, sorted and deduplicated.

        Raises
        ------
        ParseError
            If the descriptor is not syntactically valid.
        StructuralError
            If the family name is unknown.
        """
        key = (descriptor, n)
        if key in self._cache:
            return self._cache[key]

        name, params = parse_family(descriptor)
        generator = self._resolve_generator(name)
        G = GroupSpec.cyclic(n)
        result = sorted(set(generator(G, params, descriptor)), key=lambda A: A.weights)

        self._cache[key] = result
        return result
