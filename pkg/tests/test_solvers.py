from __future__ import annotations

import itertools
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pivotlab.core import PivotingRule, build_transition_graph, from_indices, verify_improving_sequence
from pivotlab.generators import random_circuit, random_swop
from pivotlab.problems import (CONST, INPUT, OR, Certifier, CircuitInstance, Gate, SwopInstance, identity_circuit,
                               independent_set_instance)
from pivotlab.reductions import MulticoloredGraph, reduce_mis_to_wis_pivot
from pivotlab.solvers import (BUDGET_EXHAUSTED, LOCAL_OPTIMUM, PROMISE_VIOLATED, ResourceError,
                              bound_steps_by_output_degree, circuit_output_bounded_solve, fpt_distinct_weights_solve,
                              output_degrees, pivot_search_bounded, reduce_swop_weights, standard_local_search,
                              weight_rank_potential)
from pivotlab.verify import transition_graphs_equal


def test_standard_examples(edge_wis, cycle5):
    rep = standard_local_search(edge_wis, 0b01)
    assert rep.steps == 0 and rep.outcome == LOCAL_OPTIMUM
    rep = standard_local_search(edge_wis, 0, PivotingRule.best())
    assert rep.sequence.steps == (0, 0b01)
    rep = standard_local_search(cycle5, 0, PivotingRule.first())
    # the first improving move in lexicographic order adds the last vertex, then vertex 2
    assert rep.sequence.steps == (0, from_indices([4], 5), from_indices([2, 4], 5))


def test_standard_budget(cycle5):
    rep = standard_local_search(cycle5, 0, step_budget=1)
    assert rep.outcome == BUDGET_EXHAUSTED and rep.steps == 1
    assert verify_improving_sequence(cycle5, rep.sequence).ok


def test_pivot_bounded_examples(edge_wis):
    rep = pivot_search_bounded(edge_wis, 0b01, 0)
    assert rep.outcome == LOCAL_OPTIMUM and rep.steps == 0
    assert pivot_search_bounded(edge_wis, 0, 0).outcome == PROMISE_VIOLATED
    with pytest.raises(ValueError):
        pivot_search_bounded(edge_wis, 0, -1)


def test_pivot_bounded_on_multicolored_yes_instance():
    seed = independent_set_instance(3, [(0, 1), (1, 2)], [2, 3, 2], c=3)
    res = reduce_mis_to_wis_pivot(MulticoloredGraph.from_sizes([2, 2, 1]), seed, from_indices([1], 3))
    rep = pivot_search_bounded(res.instance, res.start, 3, accept=res.is_multicolored_solution)
    assert rep.found and rep.steps <= 3


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 2 ** 20), st.integers(0, 4))
def test_pivot_bounded_is_complete(seed, ell):
    rng = np.random.default_rng(seed)
    inst = random_swop(rng, int(rng.integers(1, 7)), int(rng.integers(1, 3)), ("independent-set",), lo=-3, hi=8)
    g = build_transition_graph(inst)
    dist = g.distances_from(0)
    reachable_sink = min((d for i, d in dist.items() if not g.edges[i]), default=None)
    rep = pivot_search_bounded(inst, g.nodes[0], ell)
    if reachable_sink is not None and reachable_sink <= ell:
        assert rep.found and rep.steps <= ell
        assert verify_improving_sequence(inst, rep.sequence, require_maximal=True).ok
    else:
        assert rep.outcome == PROMISE_VIOLATED


def test_fpt_equal_weights():
    inst = independent_set_instance(6, [(0, 1), (2, 3)], [Fraction(7, 3)] * 6, c=2)
    rep = fpt_distinct_weights_solve(inst, 0)
    assert set(rep.meta["reduced_weights"]) == {1}
    assert rep.steps <= 6
    assert verify_improving_sequence(inst, rep.sequence, require_maximal=True).ok


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2 ** 20))
def test_fpt_graph_identical_and_replays(seed):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(1, 9))
    values = [Fraction(int(rng.integers(-9, 10)), int(rng.integers(1, 5))) for _ in range(int(rng.integers(1, 4)))]
    kind = ("independent-set", "all-subsets", "clique")[seed % 3]
    from pivotlab.generators import graph_edges
    edges = graph_edges(n, "random", rng, 0.4)
    inst = SwopInstance(n, edges, [values[int(rng.integers(len(values)))] for _ in range(n)], (Certifier(kind),),
                        min(2, n), include_edges=False)
    reduced, rw = reduce_swop_weights(inst)
    assert transition_graphs_equal(inst, reduced)
    start = next(iter(inst.solutions()))
    rep = fpt_distinct_weights_solve(inst, start)
    assert verify_improving_sequence(inst, rep.sequence, require_maximal=True).ok


def test_circuit_identity_trace():
    inst = identity_circuit(3)
    rep = circuit_output_bounded_solve(inst, 0, PivotingRule.best())
    assert rep.sequence.steps == (0b000, 0b001, 0b011, 0b111)


def test_circuit_single_output_and_constant():
    rng = np.random.default_rng(0)
    for _ in range(50):
        inst = random_circuit(rng, 4, 6, 1)
        for s in range(16):
            assert circuit_output_bounded_solve(inst, s).steps <= 1
    const = CircuitInstance((Gate(INPUT, (0,)), Gate(CONST, (1,))), (1,), (1,))
    assert circuit_output_bounded_solve(const, 0).steps == 0


def test_output_bits_cap():
    gates = (Gate(INPUT, (0,)),)
    wide = CircuitInstance(gates, (0,) * 65, (1,) * 65)
    with pytest.raises(ResourceError):
        circuit_output_bounded_solve(wide, 0)


def test_output_degree():
    assert bound_steps_by_output_degree(identity_circuit(3)).t == 1
    fan = CircuitInstance((Gate(INPUT, (0,)), Gate(INPUT, (1,)), Gate(OR, (0, 1)), Gate(OR, (0,))), (2, 3), (1, 2))
    assert output_degrees(fan) == [2, 1]
    assert bound_steps_by_output_degree(fan).t == 2


def test_output_degree_matches_reachability():
    rng = np.random.default_rng(5)
    for _ in range(30):
        inst = random_circuit(rng, 4, 8, 3)
        n = inst.n_inputs
        brute = []
        for i in range(n):
            # input i matters for an output if flipping it changes that output somewhere
            count = 0
            for k in range(inst.m):
                if any(inst.evaluate(x)[0][k] != inst.evaluate(x ^ (1 << (n - 1 - i)))[0][k] for x in range(1 << n)):
                    count += 1
            brute.append(count)
        degs = output_degrees(inst)
        # structural dependence bounds semantic dependence from above
        assert all(b <= d for b, d in zip(brute, degs))


def test_output_degree_reduction_keeps_graph():
    rng = np.random.default_rng(6)
    for _ in range(20):
        inst = random_circuit(rng, 4, 8, 3, weights=[Fraction(int(rng.integers(-9, 10)), 3) for _ in range(3)])
        bound = bound_steps_by_output_degree(inst)
        assert transition_graphs_equal(inst, bound.reduced_instance)


def test_rank_potential_increases():
    rng = np.random.default_rng(9)
    for _ in range(30):
        inst = random_swop(rng, 8, 2, ("independent-set",))
        rep = standard_local_search(inst, 0, PivotingRule.best())
        pots = [weight_rank_potential(inst, s) for s in rep.sequence.steps]
        assert all(b > a for a, b in zip(pots, pots[1:]))
