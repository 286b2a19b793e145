from __future__ import annotations

import dataclasses

from pivotlab.core import from_indices
from pivotlab.problems import Certifier, MaxCutInstance, SwopInstance, identity_circuit, independent_set_instance
from pivotlab.reductions import identity_bundle, reduce_maxcut_to_wis, reduce_swop_to_maxcircuit
from pivotlab.verify import (check_l_tight, check_tight_reduction, growth_experiment, measure_shortest_max_sequence,
                             transition_graphs_equal)


def test_single_edge_bundle_is_tight(single_edge_cut):
    b = reduce_maxcut_to_wis(single_edge_cut)
    rep = check_tight_reduction(single_edge_cut, b)
    assert rep.ok, rep.summary()
    assert rep.source_solutions == 4 and rep.r_size == 4 and rep.target_solutions == 641
    exhaustive = check_tight_reduction(single_edge_cut, b, exhaustive=True)
    assert exhaustive.ok and exhaustive.target_solutions == 641


def test_corrupted_turn_weight_is_caught(single_edge_cut):
    b = reduce_maxcut_to_wis(single_edge_cut)
    sim = next(iter(b.simulators.values()))
    ws = list(b.target.weights)
    ws[sim.turn] += 2
    broken = dataclasses.replace(b, target=b.target.with_weights(ws))
    rep = check_tight_reduction(single_edge_cut, broken)
    failure = rep.first_failure()
    assert failure is not None and failure.name == "sinks-in-R"
    assert failure.counterexample


def test_wrong_psi_is_caught(single_edge_cut):
    b = reduce_maxcut_to_wis(single_edge_cut)
    broken = dataclasses.replace(b, psi=lambda t: 0)
    rep = check_tight_reduction(single_edge_cut, broken)
    assert not rep.conditions["embed-psi"].ok


def test_identity_bundle_passes(cycle5):
    rep = check_tight_reduction(cycle5, identity_bundle(cycle5))
    assert rep.ok


def test_l_tight_maxcut(single_edge_cut):
    b = reduce_maxcut_to_wis(single_edge_cut)
    assert b.tightness == 5
    assert check_l_tight(single_edge_cut, b).ok
    zero = check_l_tight(single_edge_cut, b, ell=0)
    assert not zero.ok and zero.conditions["l-tight"].counterexample


def test_l_tight_circuit_small():
    for kind in ("independent-set", "all-subsets"):
        for c in (1, 2):
            inst = SwopInstance(3, ((0, 1),), (2, -1, 3), (Certifier(kind),), c, include_edges=False)
            b = reduce_swop_to_maxcircuit(inst)
            assert check_l_tight(inst, b, 4 * c + 4).ok
            assert not check_l_tight(inst, b, 0).ok


def test_shortest_sequences(edge_wis):
    assert measure_shortest_max_sequence(edge_wis, 0b01) == 0
    assert measure_shortest_max_sequence(edge_wis, 0) == 1
    assert measure_shortest_max_sequence(identity_circuit(2), 0) == 2


def test_growth_constant_and_increasing(edge_wis):
    flat = growth_experiment(lambda n: (edge_wis, 0), [1, 2, 3])
    assert flat.lengths() == [1, 1, 1] and abs(flat.log2_slope) < 1e-9
    rising = growth_experiment(lambda n: (identity_circuit(n), 0), [1, 2, 4, 8])
    lengths = rising.lengths()
    assert all(b > a for a, b in zip(lengths, lengths[1:]))
    assert rising.log2_slope > 0


def test_growth_records_overflow():
    table = growth_experiment(lambda n: (identity_circuit(n), 0), [2, 6], budget=10)
    assert table.rows[0].length == 2 and table.rows[1].length is None and table.rows[1].error


def test_tightness_transfers_distances():
    for src in (MaxCutInstance(2, [(0, 1)], [4]), MaxCutInstance(3, [(0, 1), (1, 2)], [6, 12])):
        b = reduce_maxcut_to_wis(src)
        for s in src.solutions():
            assert measure_shortest_max_sequence(b.target, b.g(s)) >= measure_shortest_max_sequence(src, s)


def test_graph_equality_detects_difference():
    a = independent_set_instance(2, [(0, 1)], [1, 2])
    assert transition_graphs_equal(a, a.with_weights([2, 4]))
    assert not transition_graphs_equal(a, a.with_weights([2, 1]))
    assert from_indices([], 2) == 0
