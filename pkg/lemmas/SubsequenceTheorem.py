"""
Instance checker for the Yuan-Zeng subsequence theorem and its corollary.

Statement checked
-----------------
Let ``|G| = n``, ``S`` a sequence whose maximal multiplicity is attained by
0, and ``|S| = t >= n + D(G) - 1``. Then some subsequence ``S_1`` has
``|S_1| >= t + 1 - D(G)`` and ``0 in Sigma_k(S_1)`` for every
``1 <= k <= |S_1|``.

Corollary: for every ``S`` with ``|S| >= n + D(G) - 1`` and ``m`` the exponent,
``0 in Sigma_{km}(S)`` for every ``1 <= k <= (|S| + 1 - D(G)) / m``.

``D(G)`` is an input (computed by ``extremal.ExtremalSearch``), not recomputed.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import List, Union

from algebra.Errors import HypothesisError
from algebra.GroupSpec import GroupSpec
from algebra.GSequence import GSequence
from algebra.TextSyntax import format_sequence
from algebra.WeightSet import WeightSet
from sumengine.SumProfile import sum_profile

logger = logging.getLogger(__name__)

ZERO_ATTAINS_MAX = "zero_attains_max_multiplicity"
LENGTH_BOUND = "length_at_least_n_plus_D_minus_1"


@dataclass(frozen=True)
class AbsenceReport:
    """No valid ``S_1`` exists: a falsifying instance of the theorem."""

    sequence: GSequence
    davenport: int
    min_length: int

    def describe(self) -> str:
        return (
            f"no subsequence of length >= {self.min_length} of {format_sequence(self.sequence)} "
            f"over {self.sequence.group.label()} (D(G)={self.davenport}) has 0 in every Sigma_k"
        )


def zero_in_every_sigma_k(T: GSequence) -> bool:
    """``0 in Sigma_k(T)`` for every ``1 <= k <= |T|`` (unweighted)."""
    if not len(T):
        return True
    G = T.group
    profile = sum_profile(T, WeightSet.for_group((1,), G), G, len(T))
    return bool(profile.table[1:, 0].all())


def check_yz_hypotheses(S: GSequence, G: GroupSpec, DG: int) -> None:
    """Raise ``HypothesisError`` naming the first failed hypothesis."""
    if S.multiplicity(G.zero) != S.max_multiplicity or not len(S):
        raise HypothesisError(
            ZERO_ATTAINS_MAX,
            f"The maximal multiplicity of {format_sequence(S)} is not attained by 0.",
        )
    if len(S) < G.order + DG - 1:
        raise HypothesisError(
            LENGTH_BOUND,
            f"|S| = {len(S)} is below |G| + D(G) - 1 = {G.order + DG - 1}.",
        )


def yz_find_subsequence(S: GSequence, G: GroupSpec, DG: int) -> Union[GSequence, AbsenceReport]:
    """
    First subsequence ``S_1`` (longest first, then lexicographic) with
    ``|S_1| >= |S| + 1 - DG`` and ``0`` in every ``Sigma_k(S_1)``.

    Returns an ``AbsenceReport`` if there is none; that contradicts the
    theorem and is logged as an error.
    """
    check_yz_hypotheses(S, G, DG)
    min_length = max(len(S) + 1 - DG, 0)
    for length in range(len(S), min_length - 1, -1):
        seen = set()
        for chosen in combinations(S.entries, length):
            if chosen in seen:
                continue
            seen.add(chosen)
            candidate = GSequence(G, chosen)
            if zero_in_every_sigma_k(candidate):
                return candidate
    report = AbsenceReport(S, DG, min_length)
    logger.error("Subsequence theorem falsification candidate: %s", report.describe())
    return report


def yz_corollary_check(S: GSequence, G: GroupSpec, DG: int) -> List[int]:
    """
    Values ``k`` with ``0 not in Sigma_{km}(S)``; empty means the corollary holds.

    Raises ``HypothesisError`` if ``|S| < |G| + DG - 1``.
    """
    if len(S) < G.order + DG - 1:
        raise HypothesisError(
            LENGTH_BOUND,
            f"|S| = {len(S)} is below |G| + D(G) - 1 = {G.order + DG - 1}.",
        )
    m = G.exponent
    k_max = (len(S) + 1 - DG) // m
    if k_max < 1:
        return []
    profile = sum_profile(S, WeightSet.for_group((1,), G), G, k_max * m)
    return [k for k in range(1, k_max + 1) if not profile.table[k * m, 0]]
