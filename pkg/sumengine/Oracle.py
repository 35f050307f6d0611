"""
Brute-force oracle for weighted sum profiles.

Enumerates every subset of indices and every weight assignment, with no
shared code path with the dynamic programme in ``SumProfile``. Test use only.
"""

from itertools import combinations, product

import numpy as np

from algebra.Errors import OracleBoundError
from algebra.GroupSpec import GroupSpec, add, scale
from algebra.GSequence import GSequence
from algebra.WeightSet import WeightSet
from sumengine.SumProfile import SumProfile

ORACLE_MAX_LENGTH = 14
ORACLE_MAX_WEIGHTS = 4


def oracle_weighted_sums(
    S: GSequence,
    A: WeightSet,
    G: GroupSpec,
    max_length: int = ORACLE_MAX_LENGTH,
    max_weights: int = ORACLE_MAX_WEIGHTS,
) -> SumProfile:
    """
    Profile of ``S`` with rows ``0..|S|``, computed by explicit enumeration.

    Raises
    ------
    OracleBoundError
        If ``|S| > max_length`` or ``|A| > max_weights``.
    """
    if len(S) > max_length or len(A) > max_weights:
        raise OracleBoundError(
            f"Oracle enumeration is bounded to |S| <= {max_length} and |A| <= {max_weights}; "
            f"got |S| = {len(S)}, |A| = {len(A)}."
        )
    A.check_group(G)
    entries = S.entries
    table = np.zeros((len(entries) + 1, G.order), dtype=bool)
    for k in range(len(entries) + 1):
        for chosen in combinations(entries, k):
            for assignment in product(A.weights, repeat=k):
                total = G.zero
                for a, x in zip(assignment, chosen):
                    total = add(total, scale(a, x, G), G)
                table[k, G.index_of(total)] = True
    table.flags.writeable = False
    return SumProfile(G, A, len(entries), table, len(entries))
