from __future__ import annotations

import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pivotlab.core import Sense, coord_bit, from_indices, is_local_optimum, verify_improving_sequence
from pivotlab.generators import connected_graphs
from pivotlab.problems import Certifier, MaxCutInstance, SwopInstance, independent_set_instance
from pivotlab.reductions import (InputContractError, MulticoloredGraph, PartitionBudgetExceeded, decode_structured,
                                 direct_sequence, h_value, psi_value, reduce_maxcut_to_wis, reduce_mis_to_wis_pivot,
                                 reduce_swop_to_maxcircuit, structured_strings, walk_strings)
from pivotlab.reductions.swop_circuit import join

from conftest import all_subsets


# -- max cut to weighted independent set -------------------------------------------

def test_single_edge_sizes(single_edge_cut):
    b = reduce_maxcut_to_wis(single_edge_cut, normalize=False)
    assert len(b.C) == 14
    # two improving partitions per vertex direction pair: 4 simulators of 1 + 1 + 2 vertices
    assert len(b.simulators) == 4 and len(b.D) == 16
    assert b.target.ground_size == 30 and b.alpha == 8


def test_g_is_independent_and_psi_inverts():
    for n in (2, 3, 4):
        for edges in connected_graphs(n)[:6]:
            src = MaxCutInstance(n, edges, [2 * n] * len(edges))
            b = reduce_maxcut_to_wis(src)
            for s in src.solutions():
                t = b.g(s)
                assert b.target.is_valid(t)
                assert b.psi(t) == s and b.r_member(t)


def test_direct_sequence_single_edge(single_edge_cut):
    b = reduce_maxcut_to_wis(single_edge_cut)
    both_a = single_edge_cut.from_partition({0, 1})
    seq = direct_sequence(b, b.g(both_a), 1)
    assert len(seq) == 5
    assert seq.last == b.g(single_edge_cut.from_partition({0}, {1}))
    assert verify_improving_sequence(b.target, seq).ok
    assert b.r_member(seq.last)


def test_sinks_map_to_local_optima_triangle():
    src = MaxCutInstance(3, [(0, 1), (1, 2), (0, 2)], [6, 6, 12])
    b = reduce_maxcut_to_wis(src)
    for t in b.target.candidate_sinks():
        if is_local_optimum(b.target, t):
            assert is_local_optimum(src, b.psi(t))


def test_solutions_with_d_vertices_are_never_optimal(single_edge_cut):
    b = reduce_maxcut_to_wis(single_edge_cut)
    n = b.target.ground_size
    d_mask = sum(coord_bit(x, n) for x in b.D)
    hits = 0
    for t in b.target.solutions():
        if t & d_mask:
            hits += 1
            assert b.target.has_improving_neighbor(t)
    assert hits > 0


def test_partition_budget():
    star = MaxCutInstance(5, [(0, i) for i in range(1, 5)], [10] * 4)
    with pytest.raises(PartitionBudgetExceeded):
        reduce_maxcut_to_wis(star, partition_budget=8)


def test_rejects_edgeless_and_zero_weights():
    with pytest.raises(ValueError):
        reduce_maxcut_to_wis(MaxCutInstance(2, [], []))
    with pytest.raises(ValueError):
        reduce_maxcut_to_wis(MaxCutInstance(2, [(0, 1)], [0]))


# -- subset problems to circuits -------------------------------------------------------

def test_h_values_two_elements():
    inst = all_subsets(2, [1, 2], c=1)
    n, offset = 2, 3 * 2 + 5
    u = 0b11  # weight 3
    assert h_value(join(u, u, 0, 0, n), inst) - offset == 24
    assert h_value(join(u, u, 1, 0, n), inst) - offset == 23


def test_all_ones_unstructured():
    inst = independent_set_instance(2, [(0, 1)], [1, 1], c=1)
    x = 0b111111
    assert not decode_structured(x, inst).structured
    assert h_value(x, inst) == (2 * 2 + 2) - 6


def test_decode_forms():
    inst = all_subsets(3, [1, 2, 4], c=2)
    n = 3
    u = 0b100
    assert decode_structured(join(u, u, 0, 0, n), inst).form == "uu00"
    w = 0b111  # better than u by a 2-swap
    v = walk_strings(u, w, n)[0]
    d = decode_structured(join(u, v, 0, 0, n), inst)
    # several targets can share an intermediate; the decoder reports one whose walk passes v
    assert d.form == "uv00" and v in walk_strings(u, d.w, n)
    assert inst.objective(d.w) > inst.objective(u) and (u ^ d.w).bit_count() <= inst.c
    assert decode_structured(join(u, w, 1, 0, n), inst).form == "uw10"
    assert decode_structured(join(u, u, 1, 0, n), inst).form == "uu10"
    assert decode_structured(join(u, w, 1, 1, n), inst).form == "vu11"
    is_inst = independent_set_instance(2, [(0, 1)], [1, 1], c=1)
    assert decode_structured(join(0b11, 0b11, 0, 0, 2), is_inst).form == "unstructured"


@st.composite
def tiny_swop(draw):
    n = draw(st.integers(1, 3))
    kind = draw(st.sampled_from(["independent-set", "all-subsets"]))
    pairs = list(itertools.combinations(range(n), 2))
    edges = tuple(p for p in pairs if draw(st.booleans()))
    ws = draw(st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=3), min_size=n, max_size=n))
    c = draw(st.integers(1, min(2, n)))
    sense = draw(st.sampled_from([Sense.MAX, Sense.MIN]))
    return SwopInstance(n, edges, ws, (Certifier(kind),), c, include_edges=False, sense=sense)


@settings(max_examples=40, deadline=None)
@given(tiny_swop())
def test_circuit_matches_h_and_psi_inverts(inst):
    b = reduce_swop_to_maxcircuit(inst)
    n = inst.ground_size
    for x in range(1 << (2 * n + 2)):
        assert b.target.objective(x) == h_value(x, inst)
    for u in inst.solutions():
        assert b.psi(b.embed(u)) == u and b.r_member(b.embed(u))
    scanned = {x for x in range(1 << (2 * n + 2)) if decode_structured(x, inst).structured}
    assert set(structured_strings(inst)) == scanned
    assert all(inst.is_valid(psi_value(x, inst)) for x in range(1 << (2 * n + 2)))


# -- multicolored independent set to a pivoting instance -------------------------------

def _seed():
    return independent_set_instance(3, [(0, 1), (1, 2)], [2, 3, 2], c=3), from_indices([1], 3)


def test_mis_input_contract():
    seed, start = _seed()
    with pytest.raises(InputContractError):
        reduce_mis_to_wis_pivot(MulticoloredGraph.from_sizes([1, 1]), seed, start)
    with pytest.raises(InputContractError):
        reduce_mis_to_wis_pivot(MulticoloredGraph.from_sizes([1, 1, 2]), seed, start)
    with pytest.raises(InputContractError):
        reduce_mis_to_wis_pivot(MulticoloredGraph(((0, 1), (2,), (3,)), ()), seed, start)
    bad_seed = SwopInstance(2, (), (1, 1), (Certifier("all-subsets"),), 1, include_edges=False)
    with pytest.raises(InputContractError):
        reduce_mis_to_wis_pivot(MulticoloredGraph.from_sizes([1, 1, 1]), bad_seed, 0)


def test_mis_layout_and_start():
    seed, start = _seed()
    mis = MulticoloredGraph.from_sizes([2, 2, 2, 1])
    res = reduce_mis_to_wis_pivot(mis, seed, start)
    lay = res.layout
    assert len(lay.X) == 2 and len(lay.Y) == 1
    assert lay.scale == 8 * mis.n
    inst = res.instance
    n = inst.ground_size
    assert inst.weights[lay.w_star] == 3 * lay.meta["w_max"] + 1
    assert inst.weights[lay.v_star] == 2 * lay.meta["w_max"]
    expected = from_indices(list(lay.S) + list(lay.V[-1]) + [lay.v_star], n)
    assert res.start == expected and inst.is_valid(res.start)


def test_mis_fractional_seed_weights_scale_to_integers():
    seed = independent_set_instance(2, [(0, 1)], [Fraction(1, 2), Fraction(1, 3)], c=3)
    res = reduce_mis_to_wis_pivot(MulticoloredGraph.from_sizes([1, 1, 1]), seed, 0)
    assert all(w.denominator == 1 for w in res.instance.weights)
    assert res.layout.scale == 8 * 3 * 6
