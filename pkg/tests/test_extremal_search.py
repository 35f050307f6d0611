from itertools import combinations

import pytest

from algebra.Errors import InconclusiveSearch, PostconditionError, PreconditionError, StructuralError
from algebra.GroupSpec import GroupSpec
from algebra.GSequence import GSequence
from algebra.WeightSet import WeightSet
from extremal.ExtremalSearch import (
    ConstantKind,
    ConstantResult,
    SearchBudget,
    classical_constants,
    egz_constant,
    lower_bound_witness,
    max_zero_sum_free_length,
)
from extremal.SearchTracer import SearchTracer
from sumengine.SumProfile import has_exact_length_weighted_zero_sum, has_weighted_zero_sum


def _weights(G, values):
    return WeightSet.for_group(values, G)


def _seq(G, values):
    return GSequence.from_residues(G, values)


# -----------------------------
# D_A
# -----------------------------
def test_davenport_trivial_group():
    z1 = GroupSpec.cyclic(1)
    result = max_zero_sum_free_length(z1, _weights(z1, (1,)))
    assert result.value == 1
    assert len(result.witness) == 0


def test_davenport_z4(z4):
    result = max_zero_sum_free_length(z4, _weights(z4, (1,)))
    assert result.value == 4
    assert result.witness == _seq(z4, [1, 1, 1])
    assert result.kind is ConstantKind.D_A
    assert not has_weighted_zero_sum(result.witness, _weights(z4, (1,)), z4)


def test_plus_minus_davenport_z8():
    z8 = GroupSpec.cyclic(8)
    A = _weights(z8, (1, -1))
    result = max_zero_sum_free_length(z8, A)
    assert result.value == 4
    assert not has_weighted_zero_sum(result.witness, A, z8)


@pytest.mark.parametrize("n", range(1, 9))
def test_davenport_of_cyclic_groups_is_n(n):
    G = GroupSpec.cyclic(n)
    assert max_zero_sum_free_length(G, _weights(G, (1,))).value == n


def test_zero_weight_short_circuits(z6):
    tracer = SearchTracer()
    result = max_zero_sum_free_length(z6, _weights(z6, (0, 1)), tracer=tracer)
    assert result.value == 1
    assert result.nodes_explored == 0
    assert tracer.of_type("short_circuit")


def test_mismatched_weights_rejected(z6):
    with pytest.raises(StructuralError):
        max_zero_sum_free_length(z6, WeightSet.for_group((1,), GroupSpec.cyclic(4)))


# -----------------------------
# E_A
# -----------------------------
def test_egz_trivial_group():
    z1 = GroupSpec.cyclic(1)
    assert egz_constant(z1, _weights(z1, (1,)), 1).value == 1


def test_egz_z4(z4):
    result = egz_constant(z4, _weights(z4, (1,)), 4)
    assert result.value == 7
    assert result.witness == _seq(z4, [0, 0, 0, 1, 1, 1])
    assert not has_exact_length_weighted_zero_sum(result.witness, _weights(z4, (1,)), z4, 4)


def test_plus_minus_egz_z8():
    z8 = GroupSpec.cyclic(8)
    A = _weights(z8, (1, 7))
    assert egz_constant(z8, A, 8).value == 11


def test_egz_requires_group_order(z4):
    with pytest.raises(PreconditionError):
        egz_constant(z4, _weights(z4, (1,)), 3)


def test_egz_with_zero_weight(z5):
    result = egz_constant(z5, _weights(z5, (0,)), 5)
    assert result.value == 5
    assert result.witness == GSequence.repeat(z5, z5.zero, 4)


# -----------------------------
# Lower-bound witness
# -----------------------------
def test_lower_bound_witness_examples(z4, z5):
    built = lower_bound_witness(z4, _weights(z4, (1,)), _seq(z4, [1, 1, 1]))
    assert built == _seq(z4, [0, 0, 0, 1, 1, 1])

    z2 = GroupSpec.cyclic(2)
    assert lower_bound_witness(z2, _weights(z2, (1,)), _seq(z2, [1])) == _seq(z2, [0, 1])

    built = lower_bound_witness(z5, _weights(z5, (1, 4)), _seq(z5, [1, 2]))
    assert built == _seq(z5, [0, 0, 0, 0, 1, 2])


def test_lower_bound_witness_rejects_non_free_sequences(z4, z5):
    # 1 - 1 = 0
    with pytest.raises(PreconditionError):
        lower_bound_witness(z5, _weights(z5, (1, 4)), _seq(z5, [1, 1]))
    with pytest.raises(PreconditionError):
        lower_bound_witness(z4, _weights(z4, (1,)), _seq(z4, [1, 3]))


# -----------------------------
# Classical constants
# -----------------------------
@pytest.mark.parametrize("orders, d, e", [((2, 2), 3, 6), ((6,), 6, 11), ((1,), 1, 1)])
def test_classical_constants(orders, d, e):
    G = GroupSpec(orders)
    d_result, e_result = classical_constants(G)
    assert (d_result.value, e_result.value) == (d, e)
    assert d_result.kind is ConstantKind.D
    assert e_result.kind is ConstantKind.E
    assert d_result.weights is None


@pytest.mark.parametrize(
    "orders",
    [(2, 2), pytest.param((2, 4), marks=pytest.mark.slow), pytest.param((3, 3), marks=pytest.mark.slow)]
    + [(n,) for n in range(1, 9)],
)
def test_classical_identity_on_small_groups(orders):
    G = GroupSpec(orders)
    d, e = classical_constants(G)
    assert e.value == d.value + G.order - 1


# -----------------------------
# Budgets, determinism, tracing
# -----------------------------
def test_budget_validation_and_defaults(z4):
    budget = SearchBudget.for_group(z4)
    assert budget.max_length == 32
    assert budget.allow_unit_pruning
    assert SearchBudget.for_group(z4, max_nodes=None, max_length=5).max_length == 5
    assert budget.widened(40).max_length == 40
    with pytest.raises(StructuralError):
        SearchBudget(max_length=0)


def test_length_cap_is_inconclusive(z6):
    with pytest.raises(InconclusiveSearch) as info:
        max_zero_sum_free_length(z6, _weights(z6, (1,)), SearchBudget(max_length=3))
    assert info.value.reason == "max_length"
    assert info.value.lower_bound == 4
    assert len(info.value.best_witness) == 3


def test_node_cap_is_inconclusive(z6):
    with pytest.raises(InconclusiveSearch) as info:
        egz_constant(z6, _weights(z6, (1,)), 6, SearchBudget.for_group(z6, max_nodes=5))
    assert info.value.reason == "max_nodes"
    assert info.value.lower_bound >= 1


def test_results_do_not_depend_on_jobs():
    G = GroupSpec.cyclic(7)
    A = _weights(G, (1, 3))
    serial_d = max_zero_sum_free_length(G, A, jobs=1)
    parallel_d = max_zero_sum_free_length(G, A, jobs=3)
    assert (serial_d.value, serial_d.witness, serial_d.nodes_explored) == (
        parallel_d.value, parallel_d.witness, parallel_d.nodes_explored
    )
    assert egz_constant(G, A, 7, jobs=1).witness == egz_constant(G, A, 7, jobs=3).witness


def _nonzero_weight_sets(G, max_size=None):
    n = G.order
    top = n - 1 if max_size is None else min(max_size, n - 1)
    return [_weights(G, c) for size in range(1, top + 1) for c in combinations(range(1, n), size)]


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6, 7, pytest.param(8, marks=pytest.mark.slow)])
def test_unit_pruning_is_sound_for_small_weight_sets(n):
    G = GroupSpec.cyclic(n)
    full = SearchBudget.for_group(G, allow_unit_pruning=False)
    for A in _nonzero_weight_sets(G, max_size=2):
        assert max_zero_sum_free_length(G, A).value == max_zero_sum_free_length(G, A, full).value
        assert egz_constant(G, A, n).value == egz_constant(G, A, n, full).value


@pytest.mark.parametrize("n", range(2, 7))
def test_larger_weight_sets_never_raise_the_constants(n):
    G = GroupSpec.cyclic(n)
    weight_sets = _nonzero_weight_sets(G)
    d = {A: max_zero_sum_free_length(G, A).value for A in weight_sets}
    e = {A: egz_constant(G, A, n).value for A in weight_sets}
    pairs = [(A, B) for A in weight_sets for B in weight_sets if A.is_subset_of(B)]
    assert pairs
    for A, B in pairs:
        assert d[B] <= d[A]
        assert e[B] <= e[A]


@pytest.mark.parametrize("n", range(2, 9))
def test_every_extension_of_a_witness_reaches_the_threshold(n):
    G = GroupSpec.cyclic(n)
    for A in [_weights(G, (1,)), _weights(G, (1, -1)), _weights(G, G.units())]:
        d = max_zero_sum_free_length(G, A)
        e = egz_constant(G, A, n)
        assert not has_weighted_zero_sum(d.witness, A, G)
        assert not has_exact_length_weighted_zero_sum(e.witness, A, G, n)
        for i in range(n):
            x = GSequence.from_indices(G, [i])
            assert has_weighted_zero_sum(d.witness.concat(x), A, G)
            assert has_exact_length_weighted_zero_sum(e.witness.concat(x), A, G, n)


def test_tracer_records_branches(z4):
    tracer = SearchTracer()
    max_zero_sum_free_length(z4, _weights(z4, (1,)), tracer=tracer)
    added = [r["branch"] for r in tracer.of_type("branch_added")]
    assert added == ["0", "1", "2"]
    assert tracer.of_type("result")[0]["event"] == 4
    assert all(set(r) == {"timestamp", "type", "event", "branch"} for r in tracer.get_logs())


def test_constant_result_postconditions(z4):
    with pytest.raises(PostconditionError):
        ConstantResult(ConstantKind.D_A, z4, None, 4, _seq(z4, [1]), 0, 0.0)
    result = max_zero_sum_free_length(z4, _weights(z4, (1,)))
    record = result.as_dict()
    assert record["kind"] == "D_A"
    assert record["value"] == 4
    assert record["witness"] == "1,1,1"
    assert record["weights"] == "1"
