"""
Randomized and exhaustive suites over the instance checkers.

Every suite takes its own seed, builds a private ``random.Random``, and
returns a ``SuiteReport`` whose failures carry everything needed to
reproduce the instance. A failure is a defect to investigate, never noise.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement
from typing import Any, Dict, Iterator, List, Optional, Tuple

import numpy as np
from tqdm import tqdm

from algebra.GroupSpec import GroupSpec
from algebra.GSequence import GSequence
from algebra.TextSyntax import format_element, format_sequence
from algebra.WeightSet import WeightSet
from extremal.ExtremalSearch import SearchBudget, max_zero_sum_free_length
from lemmas import InstanceBuilder
from lemmas.SetSequence import SetSequence, dgm_bound_check, translation_shift_check
from lemmas.SubsequenceTheorem import AbsenceReport, yz_corollary_check, yz_find_subsequence
from sumengine.Oracle import oracle_weighted_sums
from sumengine.SumProfile import sum_profile

logger = logging.getLogger(__name__)


@dataclass
class SuiteReport:
    """
    Attributes
    ----------
    name : str
    instances : int
        Instances actually checked.
    failures : List[Dict[str, Any]]
        Serialized failing instances.
    seed : int | None
    parameters : Dict[str, Any]
    """

    name: str
    instances: int = 0
    failures: List[Dict[str, Any]] = field(default_factory=list)
    seed: Optional[int] = None
    parameters: Dict[str, Any] = field(default_factory=dict)
    skipped: int = 0

    @property
    def passed(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        ok = self.instances - len(self.failures)
        text = f"{self.name}: {ok}/{self.instances} hold (seed={self.seed})"
        if self.skipped:
            text += f", {self.skipped} vacuous"
        return text

    def as_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "instances": self.instances,
            "failures": self.failures,
            "seed": self.seed,
            "parameters": self.parameters,
            "skipped": self.skipped,
        }

    def as_record(self) -> Dict[str, Any]:
        """One flat row for tabular output; failing instances are left out."""
        return {
            "name": self.name,
            "instances": self.instances,
            "hold": self.instances - len(self.failures),
            "failed": len(self.failures),
            "skipped": self.skipped,
            "seed": self.seed,
        }


def _progress(iterable, total: Optional[int], desc: str, quiet: bool):
    return tqdm(iterable, total=total, desc=desc, disable=quiet, leave=False)


def _serialize_sets(A: SetSequence) -> List[List[str]]:
    return [sorted(format_element(g) for g in members) for members in A.sets]


def _finish(report: SuiteReport) -> SuiteReport:
    if report.passed:
        logger.info(report.summary())
    else:
        logger.error("%s; first failure: %s", report.summary(), report.failures[0])
    return report


# ---------------------------------------------------------------------
# DGM
# ---------------------------------------------------------------------
def _dgm_instance(report: SuiteReport, l: int, A: SetSequence) -> None:
    result = dgm_bound_check(l, A, A.group)
    report.instances += 1
    if result.sumset_size == 0:
        report.skipped += 1
    if not result.holds:
        report.failures.append({
            "group": A.group.label(),
            "l": l,
            "sets": _serialize_sets(A),
            "sumset_size": result.sumset_size,
            "bound": result.bound,
        })


def _small_groups(order_max: int) -> Iterator[GroupSpec]:
    for n in range(1, order_max + 1):
        yield GroupSpec.cyclic(n)
    for a in range(2, order_max + 1):
        for b in range(a, order_max + 1):
            if a * b <= order_max:
                yield GroupSpec((a, b))


def run_dgm_suite(
    order_max: int = 36,
    instances: int = 1000,
    seed: int = 7,
    m_max: int = 8,
    exhaustive_order_max: int = 0,
    exhaustive_m_max: int = 4,
    exhaustive_set_size: int = 2,
    quiet: bool = True,
) -> SuiteReport:
    """
    Random DGM instances, then (optionally) an exhaustive grid.

    The grid covers every group of order ``<= exhaustive_order_max``, every
    multiset of at most ``exhaustive_m_max`` subsets of size
    ``<= exhaustive_set_size`` (the bound is symmetric in the sets), and every
    ``l <= m``.
    """
    rng = random.Random(seed)
    report = SuiteReport("dgm", seed=seed, parameters={
        "order_max": order_max, "instances": instances, "m_max": m_max,
        "exhaustive_order_max": exhaustive_order_max, "exhaustive_m_max": exhaustive_m_max,
        "exhaustive_set_size": exhaustive_set_size,
    })
    for _ in _progress(range(instances), instances, "dgm random", quiet):
        G = InstanceBuilder.build_group(order_max, rng)
        m = rng.randint(1, m_max)
        A = InstanceBuilder.build_set_sequence(G, m, rng, max_set_size=rng.randint(1, G.order))
        _dgm_instance(report, rng.randint(1, m), A)

    for G in _small_groups(exhaustive_order_max):
        elements = list(G.elements())
        subsets = [
            frozenset(c) for size in range(1, min(exhaustive_set_size, G.order) + 1)
            for c in combinations(elements, size)
        ]
        for m in range(1, exhaustive_m_max + 1):
            grid = combinations_with_replacement(range(len(subsets)), m)
            for picks in _progress(grid, None, f"dgm {G.label()} m={m}", quiet):
                A = SetSequence(G, tuple(subsets[i] for i in picks))
                for l in range(1, m + 1):
                    _dgm_instance(report, l, A)
    return _finish(report)


# ---------------------------------------------------------------------
# Translation shift
# ---------------------------------------------------------------------
def run_shift_suite(n: int = 6, instances: int = 200, seed: int = 1, m_max: int = 8, quiet: bool = True) -> SuiteReport:
    """Random ``(l, A, c)`` in ``Z/n``; every third instance uses ``l = n``."""
    rng = random.Random(seed)
    G = GroupSpec.cyclic(n)
    report = SuiteReport("shift", seed=seed, parameters={"n": n, "instances": instances, "m_max": m_max})
    for i in _progress(range(instances), instances, "shift", quiet):
        m = rng.randint(1, m_max)
        A = InstanceBuilder.build_set_sequence(G, m, rng)
        l = n if i % 3 == 0 else rng.randint(0, m)
        c = InstanceBuilder.build_element(G, rng)
        report.instances += 1
        if not translation_shift_check(l, A, c, G):
            report.failures.append({
                "group": G.label(), "l": l, "sets": _serialize_sets(A), "c": format_element(c),
            })
    return _finish(report)


# ---------------------------------------------------------------------
# Subsequence theorem
# ---------------------------------------------------------------------
def _zero_heavy_multisets(n: int, t: int) -> Iterator[Tuple[int, ...]]:
    """Sorted index tuples of length ``t`` over ``Z/n`` whose top multiplicity is at 0."""
    def fill(position: int, remaining: int, cap: int, counts: List[int]) -> Iterator[List[int]]:
        if position == n:
            if remaining == 0:
                yield counts
            return
        for c in range(min(cap, remaining), -1, -1):
            counts.append(c)
            yield from fill(position + 1, remaining - c, cap, counts)
            counts.pop()

    for v0 in range(t, -1, -1):
        if v0 * n < t:
            break
        for counts in fill(1, t - v0, v0, [v0]):
            yield tuple(i for i, c in enumerate(counts) for _ in range(c))


def _is_unit_canonical(seq: Tuple[int, ...], n: int, units: List[int]) -> bool:
    return all(tuple(sorted((u * i) % n for i in seq)) >= seq for u in units)


def davenport_of(G: GroupSpec, budget: Optional[SearchBudget] = None) -> int:
    """``D(G)`` by search."""
    ones = WeightSet.for_group((1,), G)
    return max_zero_sum_free_length(G, ones, budget or SearchBudget.for_group(G)).value


def run_yz_suite(n_max: int = 8, extra_lengths: int = 2, quiet: bool = True) -> SuiteReport:
    """
    Every hypothesis-satisfying sequence over ``Z/n`` (``n <= n_max``) of length
    ``n + D - 1`` to ``n + D - 1 + extra_lengths``, one per unit orbit.
    """
    report = SuiteReport("yz", parameters={"n_max": n_max, "extra_lengths": extra_lengths})
    for n in range(1, n_max + 1):
        G = GroupSpec.cyclic(n)
        D = davenport_of(G)
        units = G.units()
        for t in range(n + D - 1, n + D + extra_lengths):
            for seq in _progress(_zero_heavy_multisets(n, t), None, f"yz n={n} t={t}", quiet):
                if not _is_unit_canonical(seq, n, units):
                    continue
                S = GSequence.from_indices(G, seq)
                report.instances += 1
                outcome = yz_find_subsequence(S, G, D)
                if isinstance(outcome, AbsenceReport):
                    report.failures.append({"group": G.label(), "D": D, "sequence": format_sequence(S)})
    return _finish(report)


def run_yz_corollary_suite(
    order_max: int = 8,
    instances: int = 200,
    seed: int = 3,
    extra_lengths: int = 3,
    quiet: bool = True,
) -> SuiteReport:
    """Random sequences of length ``>= |G| + D(G) - 1`` over small cyclic and product groups."""
    rng = random.Random(seed)
    report = SuiteReport("yz-corollary", seed=seed, parameters={
        "order_max": order_max, "instances": instances, "extra_lengths": extra_lengths,
    })
    davenport: Dict[GroupSpec, int] = {}
    for _ in _progress(range(instances), instances, "yz corollary", quiet):
        G = InstanceBuilder.build_group(order_max, rng)
        if G not in davenport:
            davenport[G] = davenport_of(G)
        D = davenport[G]
        S = InstanceBuilder.build_sequence(G, G.order + D - 1 + rng.randint(0, extra_lengths), rng)
        report.instances += 1
        missing = yz_corollary_check(S, G, D)
        if missing:
            report.failures.append({"group": G.label(), "D": D, "sequence": format_sequence(S), "k": missing})
    return _finish(report)


# ---------------------------------------------------------------------
# Oracle equivalence
# ---------------------------------------------------------------------
def _compare_with_oracle(report: SuiteReport, S: GSequence, A: WeightSet) -> None:
    G = S.group
    fast = sum_profile(S, A, G, len(S))
    slow = oracle_weighted_sums(S, A, G)
    report.instances += 1
    if not np.array_equal(fast.table, slow.table):
        report.failures.append({"group": G.label(), "weights": A.text(), "sequence": format_sequence(S)})


def run_oracle_suite(
    n_max: int = 12,
    length_max: int = 7,
    instances: int = 1000,
    seed: int = 11,
    weights_max: int = 2,
    exhaustive_n_max: int = 0,
    exhaustive_length_max: int = 6,
    quiet: bool = True,
) -> SuiteReport:
    """
    DP profile vs. brute-force oracle on random instances, then (optionally)
    every sequence of length ``<= exhaustive_length_max`` over ``Z/n`` for
    ``n <= exhaustive_n_max`` with every ``A`` of size ``<= 2``.
    """
    rng = random.Random(seed)
    report = SuiteReport("oracle", seed=seed, parameters={
        "n_max": n_max, "length_max": length_max, "instances": instances, "weights_max": weights_max,
        "exhaustive_n_max": exhaustive_n_max, "exhaustive_length_max": exhaustive_length_max,
    })
    for _ in _progress(range(instances), instances, "oracle random", quiet):
        G = GroupSpec.cyclic(rng.randint(1, n_max))
        A = InstanceBuilder.build_weights(G, weights_max, rng)
        S = InstanceBuilder.build_sequence(G, rng.randint(0, length_max), rng)
        _compare_with_oracle(report, S, A)

    for n in range(2, exhaustive_n_max + 1):
        G = GroupSpec.cyclic(n)
        weight_sets = [WeightSet.for_group(c, G) for size in (1, 2) for c in combinations(range(1, n), size)]
        for length in range(exhaustive_length_max + 1):
            grid = combinations_with_replacement(range(n), length)
            for seq in _progress(grid, None, f"oracle n={n} len={length}", quiet):
                S = GSequence.from_indices(G, seq)
                for A in weight_sets:
                    _compare_with_oracle(report, S, A)
    return _finish(report)

