from __future__ import annotations

import itertools
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pivotlab.core import ArityError, build_transition_graph, from_indices
from pivotlab.generators import random_circuit
from pivotlab.problems import (AND, CONST, INPUT, NOT, Certifier, CircuitInstance, Gate, MaxCutInstance, SwopInstance,
                               circuit_evaluate, cut_value, embed_maxcut_as_swop, identity_circuit,
                               independent_set_instance, max_circuit_weights)

from conftest import all_subsets


def test_all_subsets_neighbors():
    inst = all_subsets(2, [1, 1], c=1)
    assert inst.neighbors(0) == [0b01, 0b10]


def test_independent_set_neighbors_on_edge():
    inst = independent_set_instance(2, [(0, 1)], [1, 1], c=2)
    assert inst.neighbors(0b10) == [0b00, 0b01]


def test_cycle_neighbors_match_brute_force(cycle5):
    brute = sorted(from_indices(idx, 5) for k in range(1, 4) for idx in itertools.combinations(range(5), k)
                   if cycle5.is_valid(from_indices(idx, 5)))
    assert cycle5.neighbors(0) == brute


def test_identity_circuit_binary_value():
    inst = identity_circuit(3)
    ys, obj = circuit_evaluate(inst, "101")
    assert ys == (1, 0, 1) and obj == 5


def test_constant_outputs_are_zero():
    inst = CircuitInstance((Gate(INPUT, (0,)), Gate(INPUT, (1,)), Gate(CONST, (0,))), (2, 2), (1, 2))
    assert all(inst.evaluate(x)[1] == 0 for x in range(4))


def _reference_eval(inst: CircuitInstance, bits):
    vals = []
    for g in inst.gates:
        if g.kind == INPUT:
            vals.append(bits[g.args[0]])
        elif g.kind == CONST:
            vals.append(g.args[0])
        elif g.kind == NOT:
            vals.append(1 - vals[g.args[0]])
        elif g.kind == AND:
            vals.append(int(all(vals[a] for a in g.args)))
        else:
            vals.append(int(any(vals[a] for a in g.args)))
    return tuple(vals[o] for o in inst.outputs)


def test_random_dag_matches_truth_table():
    rng = np.random.default_rng(3)
    for _ in range(40):
        n = int(rng.integers(1, 5))
        inst = random_circuit(rng, n, 8, 3)
        for x in range(1 << n):
            bits = [x >> (n - 1 - i) & 1 for i in range(n)]
            assert inst.evaluate(x)[0] == _reference_eval(inst, bits)
            assert inst.objective(x) == inst.evaluate(x)[1]


def test_max_circuit_weights():
    assert max_circuit_weights(1) == (1,)
    assert max_circuit_weights(3) == (1, 2, 4)
    assert max_circuit_weights(3, minimize=True) == (-1, -2, -4)


def test_cut_values():
    edge = MaxCutInstance(2, [(0, 1)], [7])
    assert cut_value(edge, ["A", "B"]) == 7
    assert cut_value(edge, ["A", "A"]) == 0
    tri = MaxCutInstance(3, [(0, 1), (1, 2), (0, 2)], [1, 1, 1])
    assert all(cut_value(tri, sides) == 2 for sides in (["A", "A", "B"], ["B", "A", "B"], ["A", "B", "A"]))


def test_maxcut_rejects_bad_input():
    with pytest.raises(ValueError):
        MaxCutInstance(2, [(0, 1)], [Fraction(1, 2)])
    with pytest.raises(ValueError):
        MaxCutInstance(2, [(0, 1), (1, 0)], [1, 1])
    with pytest.raises(ArityError):
        MaxCutInstance(2, [(0, 1)], [1, 2])


def test_swop_rejects_floats_and_bad_arity():
    with pytest.raises(TypeError):
        independent_set_instance(1, [], [0.5])
    with pytest.raises(ArityError):
        independent_set_instance(2, [], [1])


def test_circuit_rejects_forward_references():
    with pytest.raises(ValueError):
        CircuitInstance((Gate(INPUT, (0,)), Gate(NOT, (2,)), Gate(NOT, (0,))), (1,), (1,))


def _flip_graph_matches(inst: MaxCutInstance) -> bool:
    emb = embed_maxcut_as_swop(inst)
    g_cut = build_transition_graph(inst)
    g_swop = build_transition_graph(emb.target)
    mapped = {(emb.to_swop(a), emb.to_swop(b)) for a, b in g_cut.edge_set()}
    nodes = {emb.to_swop(s) for s in g_cut.nodes}
    return nodes == set(g_swop.nodes) and mapped == g_swop.edge_set() and all(
        emb.to_cut(emb.to_swop(s)) == s for s in g_cut.nodes)


def test_embedding_single_edge():
    inst = MaxCutInstance(2, [(0, 1)], [3])
    emb = embed_maxcut_as_swop(inst)
    assert emb.target.n_vertices == 4 and emb.target.c == 3
    start = emb.to_swop(0)
    assert len(emb.target.improving_neighbors(start)) == 2
    assert _flip_graph_matches(inst)


def test_embedding_triangle():
    tri = MaxCutInstance(3, [(0, 1), (1, 2), (0, 2)], [1, 1, 1])
    emb = embed_maxcut_as_swop(tri)
    assert emb.target.n_vertices == 9 and emb.target.c == 5
    assert _flip_graph_matches(tri)


@st.composite
def small_cut(draw):
    n = draw(st.integers(2, 4))
    pairs = list(itertools.combinations(range(n), 2))
    edges = [p for p in pairs if draw(st.booleans())] or [pairs[0]]
    ws = draw(st.lists(st.integers(0, 5), min_size=len(edges), max_size=len(edges)))
    return MaxCutInstance(n, edges, ws)


@settings(max_examples=25, deadline=None)
@given(small_cut())
def test_embedding_faithful(inst):
    assert _flip_graph_matches(inst)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2 ** 16), st.integers(1, 5))
def test_flip_involution_and_unused_inputs(seed, n):
    rng = np.random.default_rng(seed)
    inst = random_circuit(rng, n, 6, 2)
    deps = inst.input_dependencies()
    used = 0
    for o in inst.outputs:
        used |= deps[o]
    for x in range(1 << n):
        for i in range(n):
            bit = 1 << (n - 1 - i)
            assert (x ^ bit) ^ bit == x
            if not used >> i & 1:
                assert inst.objective(x ^ bit) == inst.objective(x)
