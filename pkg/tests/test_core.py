from __future__ import annotations

import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pivotlab.core import (CertificationError, EnumerationOverflow, ImprovingSequence, PivotingRule,
                           apply_pivot, build_transition_graph, from_bitstring, from_indices, is_local_optimum,
                           to_bitstring, to_indices, verify_improving_sequence)
from pivotlab.problems import Certifier, MaxCutInstance, SwopInstance, independent_set_instance

U, V = 0b10, 0b01  # coordinate 0 is the most significant bit


def single_vertex():
    return independent_set_instance(1, [], [1])


def path4():
    return independent_set_instance(4, [(0, 1), (1, 2), (2, 3)], [1, 1, 1, 1], c=3)


def test_bit_helpers_round_trip():
    assert from_indices([0, 2], 4) == 0b1010
    assert to_indices(0b1010, 4) == [0, 2]
    assert to_bitstring(0b0011, 4) == "0011"
    assert from_bitstring("0011") == 3


def test_local_optimum_single_vertex():
    inst = single_vertex()
    assert is_local_optimum(inst, 1)
    assert not is_local_optimum(inst, 0)


def test_local_optimum_rejects_invalid_solution(edge_wis):
    with pytest.raises(CertificationError) as exc:
        is_local_optimum(edge_wis, U | V)
    assert "independent-set" in str(exc.value)


def test_local_optimum_matches_brute_force_on_path():
    inst = path4()
    n = 4
    for s in inst.solutions():
        brute = False
        f = inst.objective(s)
        for k in range(1, 4):
            for idx in itertools.combinations(range(n), k):
                t = s ^ from_indices(idx, n)
                if inst.is_valid(t) and inst.objective(t) > f:
                    brute = True
        assert is_local_optimum(inst, s) == (not brute)


def test_transition_graph_single_edge(edge_wis):
    g = build_transition_graph(edge_wis)
    assert g.nodes == [0, V, U]  # lexicographic: 00, 01, 10
    assert g.edge_set() == {(0, U), (0, V), (U, V)}
    assert [g.nodes[i] for i in g.sinks] == [V]
    assert all(out == sorted(out) for out in g.edges)


def test_transition_graph_exactly_one_valid_solution():
    # the pair must move together and cover the edge, so only {0, 1} survives
    inst = SwopInstance(2, ((0, 1),), (1, 1), (Certifier("grouped-all-or-none", [(0, 1)]), Certifier("vertex-cover")),
                        2, include_edges=False)
    g = build_transition_graph(inst)
    assert g.nodes == [0b11] and g.edge_count == 0 and g.sinks == [0]


def test_maxcut_single_edge_graph(single_edge_cut):
    g = build_transition_graph(single_edge_cut)
    assert len(g) == 4
    assert sorted(g.nodes[i] for i in g.sinks) == [0b01, 0b10]


def test_budget_overflow(cycle5):
    with pytest.raises(EnumerationOverflow) as exc:
        build_transition_graph(cycle5, solution_budget=3)
    assert exc.value.reached == 4


def test_verify_sequence_kinds(edge_wis):
    assert verify_improving_sequence(edge_wis, [V], require_maximal=True).ok
    rep = verify_improving_sequence(edge_wis, [0, 0])
    assert (rep.ok, rep.index, rep.kind) == (False, 1, "not-improving")
    rep = verify_improving_sequence(edge_wis, [0, U])
    assert rep.ok
    rep = verify_improving_sequence(edge_wis, [0, U], require_maximal=True)
    assert rep.kind == "not-maximal"
    rep = verify_improving_sequence(edge_wis, [0, U | V])
    assert rep.kind == "invalid-solution"
    c1 = independent_set_instance(2, [], [1, 2], c=1)
    rep = verify_improving_sequence(c1, [0, U | V])
    assert rep.kind == "not-neighbor"


def test_apply_pivot_rules(edge_wis):
    assert apply_pivot(single_vertex(), 0, PivotingRule.first()) == 1
    assert apply_pivot(edge_wis, 0, PivotingRule.best()) == V
    assert apply_pivot(edge_wis, V, PivotingRule.best()) is None
    r = PivotingRule.random(5)
    assert apply_pivot(edge_wis, 0, r) == apply_pivot(edge_wis, 0, r)
    with pytest.raises(ValueError):
        PivotingRule("random")
    with pytest.raises(ValueError):
        PivotingRule("steepest")


def test_improving_sequence_counts_moves(edge_wis):
    seq = ImprovingSequence.of(edge_wis, [0, U, V])
    assert len(seq) == 2 and seq.last == V
    assert seq.objectives == (0, 1, 2)


weights = st.lists(st.integers(-3, 5), min_size=1, max_size=6)


@st.composite
def small_swop(draw):
    n = draw(st.integers(1, 6))
    pairs = list(itertools.combinations(range(n), 2))
    edges = tuple(p for p in pairs if draw(st.booleans()))
    ws = draw(st.lists(st.integers(-3, 6), min_size=n, max_size=n))
    kind = draw(st.sampled_from(["independent-set", "all-subsets", "clique", "vertex-cover"]))
    c = draw(st.integers(1, min(3, n)))
    return SwopInstance(n, edges, ws, (Certifier(kind),), c, include_edges=False)


@settings(max_examples=60, deadline=None)
@given(small_swop())
def test_graph_invariants(inst):
    g = build_transition_graph(inst)
    assert g.is_acyclic()
    for i, s in enumerate(g.nodes):
        assert (not g.edges[i]) == is_local_optimum(inst, s)
        for j in g.edges[i]:
            assert g.nodes[j] in inst.neighbors(s)
            assert inst.objective(g.nodes[j]) > inst.objective(s)
    for i, s in enumerate(g.nodes):
        for t in inst.neighbors(s):
            assert s in inst.neighbors(t)


@settings(max_examples=60, deadline=None)
@given(small_swop(), st.sampled_from(["first", "best", "random"]), st.integers(0, 2 ** 32))
def test_pivot_consistency_and_path_round_trip(inst, kind, seed):
    rule = PivotingRule(kind, seed if kind == "random" else None)
    g = build_transition_graph(inst)
    path = [0]
    s = g.nodes[0]
    while True:
        t = apply_pivot(inst, s, rule)
        if t is None:
            assert is_local_optimum(inst, s)
            break
        assert t in inst.improving_neighbors(s)
        path.append(g.index[t])
        s = t
    assert verify_improving_sequence(inst, g.path_sequence(path), require_maximal=True).ok
