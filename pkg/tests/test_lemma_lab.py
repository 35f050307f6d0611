import random

import pytest

from algebra.Errors import HypothesisError, StructuralError
from algebra.GroupSpec import GroupSpec
from algebra.GSequence import GSequence
from lemmas import InstanceBuilder
from lemmas.LemmaSuites import (
    SuiteReport,
    davenport_of,
    run_dgm_suite,
    run_oracle_suite,
    run_shift_suite,
    run_yz_corollary_suite,
    run_yz_suite,
)
from lemmas.SetSequence import (
    SetSequence,
    cosets,
    dgm_bound_check,
    setseq_sum,
    stabilizer,
    translation_shift_check,
)
from lemmas.SubsequenceTheorem import (
    LENGTH_BOUND,
    ZERO_ATTAINS_MAX,
    AbsenceReport,
    check_yz_hypotheses,
    yz_corollary_check,
    yz_find_subsequence,
    zero_in_every_sigma_k,
)


def _elements(G, values):
    return frozenset(G.element(v) for v in values)


def _seq(G, values):
    return GSequence.from_residues(G, values)


# -----------------------------
# Restricted sumsets
# -----------------------------
def test_setseq_sum_examples(z5, z6):
    assert setseq_sum(1, SetSequence.from_residues(z5, [[1, 2]]), z5) == _elements(z5, [1, 2])
    A = SetSequence.from_residues(z6, [[1], [2], [3]])
    assert setseq_sum(2, A, z6) == _elements(z6, [3, 4, 5])
    assert setseq_sum(3, A, z6) == _elements(z6, [0])
    assert setseq_sum(0, A, z6) == _elements(z6, [0])
    assert setseq_sum(4, A, z6) == frozenset()


def test_setseq_sum_uses_distinct_indices(z5):
    # one set cannot contribute twice
    A = SetSequence.from_residues(z5, [[1, 2]])
    assert setseq_sum(2, A, z5) == frozenset()


def test_set_sequence_validation(z5):
    with pytest.raises(StructuralError):
        SetSequence.from_residues(z5, [[1], []])
    with pytest.raises(StructuralError):
        setseq_sum(1, SetSequence.from_residues(z5, [[1]]), GroupSpec.cyclic(6))


def test_stabilizer_examples(z6, klein):
    assert stabilizer(frozenset(z6.elements()), z6) == frozenset(z6.elements())
    assert stabilizer(_elements(z6, [4]), z6) == _elements(z6, [0])
    assert stabilizer(_elements(z6, [0, 2, 4]), z6) == _elements(z6, [0, 2, 4])
    assert stabilizer(frozenset(), z6) == frozenset(z6.elements())
    X = frozenset({klein.element(0, 0), klein.element(1, 0)})
    assert stabilizer(X, klein) == X


def test_cosets_are_ordered_by_least_representative(z6):
    parts = cosets(_elements(z6, [0, 3]), z6)
    assert parts == [_elements(z6, [0, 3]), _elements(z6, [1, 4]), _elements(z6, [2, 5])]


# -----------------------------
# DGM bound
# -----------------------------
def test_dgm_single_set(z5):
    report = dgm_bound_check(1, SetSequence.from_residues(z5, [[1, 2]]), z5)
    assert report.stabilizer == _elements(z5, [0])
    assert report.bound == 2
    assert report.sumset_size == 2
    assert report.holds


def test_dgm_saturated_sets(z6):
    A = SetSequence(z6, (frozenset(z6.elements()),) * 4)
    for l in range(1, 5):
        report = dgm_bound_check(l, A, z6)
        assert report.sumset_size == 6
        assert report.bound == 6
        assert report.holds


def test_dgm_empty_sumset_is_vacuous(z6):
    report = dgm_bound_check(3, SetSequence.from_residues(z6, [[1]]), z6)
    assert report.sumset_size == 0
    assert report.holds


def test_dgm_random_instances():
    report = run_dgm_suite(order_max=24, instances=300, seed=7)
    assert report.instances == 300
    assert report.passed, report.failures[:3]


def test_dgm_small_exhaustive_grid():
    report = run_dgm_suite(order_max=6, instances=0, exhaustive_order_max=4, exhaustive_m_max=3)
    assert report.instances > 0
    assert report.passed, report.failures[:3]


@pytest.mark.slow
def test_dgm_acceptance_suite():
    report = run_dgm_suite(order_max=36, instances=1000, seed=7, m_max=8,
                           exhaustive_order_max=8, exhaustive_m_max=4)
    assert report.passed, report.failures[:3]


# -----------------------------
# Translation shift
# -----------------------------
def test_shift_example(z6):
    A = SetSequence.from_residues(z6, [[1], [2], [3]])
    c = z6.element(1)
    assert setseq_sum(2, A.shifted(c), z6) == _elements(z6, [1, 2, 3])
    assert translation_shift_check(2, A, c, z6)
    assert translation_shift_check(2, A, z6.zero, z6)


def test_shift_with_l_equal_to_order_leaves_sumset_fixed(z4, rng):
    for _ in range(30):
        A = InstanceBuilder.build_set_sequence(z4, rng.randint(4, 7), rng)
        c = InstanceBuilder.build_element(z4, rng)
        assert setseq_sum(4, A.shifted(c), z4) == setseq_sum(4, A, z4)


def test_shift_suite():
    report = run_shift_suite(n=6, instances=200, seed=1)
    assert report.instances == 200
    assert report.passed
    assert report.summary() == "shift: 200/200 hold (seed=1)"


# -----------------------------
# Subsequence theorem
# -----------------------------
def test_zero_in_every_sigma_k():
    z3 = GroupSpec.cyclic(3)
    assert zero_in_every_sigma_k(_seq(z3, [0, 1, 2]))
    assert not zero_in_every_sigma_k(_seq(z3, [0, 1, 1]))
    assert zero_in_every_sigma_k(GSequence(z3))


def test_yz_example_z3():
    z3 = GroupSpec.cyclic(3)
    S1 = yz_find_subsequence(_seq(z3, [0, 0, 1, 1, 2]), z3, 3)
    assert S1 == _seq(z3, [0, 0, 1, 2])
    assert len(S1) >= 5 + 1 - 3
    assert zero_in_every_sigma_k(S1)


def test_yz_example_z2_and_all_zero():
    z2 = GroupSpec.cyclic(2)
    S = _seq(z2, [0, 0, 1, 1])
    assert yz_find_subsequence(S, z2, 2) == S
    z5 = GroupSpec.cyclic(5)
    zeros = GSequence.repeat(z5, z5.zero, 9)
    assert yz_find_subsequence(zeros, z5, 5) == zeros


def test_yz_hypotheses(z4):
    with pytest.raises(HypothesisError) as info:
        check_yz_hypotheses(_seq(z4, [0, 1, 1, 1, 2, 3, 3]), z4, 4)
    assert info.value.hypothesis == ZERO_ATTAINS_MAX
    with pytest.raises(HypothesisError) as info:
        check_yz_hypotheses(_seq(z4, [0, 0, 1]), z4, 4)
    assert info.value.hypothesis == LENGTH_BOUND


def test_absence_report_describes_instance(z4):
    report = AbsenceReport(_seq(z4, [0, 1]), 4, 3)
    assert "0,1" in report.describe()


def test_yz_corollary(z6):
    S = _seq(z6, [0, 0, 1, 1, 2, 2, 3, 3, 4, 5, 5])
    assert yz_corollary_check(S, z6, 6) == []
    with pytest.raises(HypothesisError):
        yz_corollary_check(_seq(z6, [1, 2]), z6, 6)


def test_yz_suite_small():
    report = run_yz_suite(n_max=5, extra_lengths=1)
    assert report.instances > 0
    assert report.passed, report.failures[:3]


def test_yz_corollary_suite():
    report = run_yz_corollary_suite(order_max=6, instances=60, seed=3)
    assert report.passed, report.failures[:3]


@pytest.mark.slow
def test_yz_acceptance_suite():
    report = run_yz_suite(n_max=8, extra_lengths=2)
    assert report.passed, report.failures[:3]


def test_davenport_of_matches_cyclic_order():
    assert davenport_of(GroupSpec.cyclic(5)) == 5
    assert davenport_of(GroupSpec((2, 2))) == 3


# -----------------------------
# Instance builders and reports
# -----------------------------
def test_instance_builders_are_reproducible():
    a, b = random.Random(5), random.Random(5)
    assert InstanceBuilder.build_group(20, a) == InstanceBuilder.build_group(20, b)
    G = GroupSpec.cyclic(7)
    assert InstanceBuilder.build_sequence(G, 6, a) == InstanceBuilder.build_sequence(G, 6, b)
    assert InstanceBuilder.build_set_sequence(G, 3, a) == InstanceBuilder.build_set_sequence(G, 3, b)


def test_instance_builders_fail_fast(z5):
    with pytest.raises(ValueError):
        InstanceBuilder.build_group(0)
    with pytest.raises(ValueError):
        InstanceBuilder.build_sequence(z5, -1)
    with pytest.raises(ValueError):
        InstanceBuilder.build_set_sequence(z5, 2, max_set_size=0)
    with pytest.raises(ValueError):
        InstanceBuilder.build_weights(z5, 0)


def test_build_group_respects_order_bound(rng):
    for _ in range(100):
        assert InstanceBuilder.build_group(12, rng).order <= 12
    assert InstanceBuilder.build_group(12, rng, allow_products=False).is_cyclic


def test_weights_never_zero_by_default(rng):
    G = GroupSpec.cyclic(9)
    for _ in range(50):
        assert not InstanceBuilder.build_weights(G, 4, rng).contains_zero


def test_oracle_suite_small():
    report = run_oracle_suite(n_max=6, length_max=5, instances=100, seed=11,
                              exhaustive_n_max=3, exhaustive_length_max=3)
    assert report.passed


def test_suite_report_serialisation():
    report = SuiteReport("dgm", instances=3, failures=[{"l": 1}], seed=9)
    assert not report.passed
    assert report.summary() == "dgm: 2/3 hold (seed=9)"
    assert report.as_dict()["failures"] == [{"l": 1}]
