from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pivotlab.core import ArityError, from_indices
from pivotlab.gadgets import (GadgetPreconditionError, GraphBuilder, NoStepError, NotImprovingPartition,
                              attach_elevator, elevator_improving_step, elevator_level_weights)
from pivotlab.problems import MaxCutInstance
from pivotlab.reductions import reduce_maxcut_to_wis


def _elevator(direction, weights, external=()):
    b = GraphBuilder()
    X = [b.add_vertex(w, ("x", i)) for i, w in enumerate(weights)]
    ext = [b.add_vertex(1, ("e", i)) for i in range(len(external))]
    elev = attach_elevator(b, direction, X, ext)
    return b, X, ext, elev


def test_figure_weights():
    assert elevator_level_weights("up", (2, 5, 9, 1)) == [8, 18, 20]
    assert elevator_level_weights("down", (3, 4, 2, 9)) == [6, 7, 15]
    assert elevator_level_weights("up", (0, 0)) == [1]
    with pytest.raises(ArityError):
        elevator_level_weights("up", (3,))
    with pytest.raises(ValueError):
        elevator_level_weights("sideways", (1, 2))


def test_figure_steps():
    b, X, _, elev = _elevator("up", (2, 5, 9, 1))
    inst = b.to_instance()
    n = inst.ground_size
    s = from_indices([elev.levels[0]], n)
    t = elevator_improving_step(inst, elev, s, 1)
    assert inst.objective(s) == 8 and inst.objective(t) == 18
    s2 = from_indices([elev.levels[0], X[2]], n)
    t2 = elevator_improving_step(inst, elev, s2, 1)
    assert inst.objective(t2) - inst.objective(s2) == 1
    with pytest.raises(NoStepError):
        elevator_improving_step(inst, elev, from_indices([elev.top], n), 3)
    with pytest.raises(GadgetPreconditionError):
        elevator_improving_step(inst, elev, 0, 1)


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(["up", "down"]), st.lists(st.integers(0, 100), min_size=2, max_size=8), st.integers(0, 3))
def test_elevator_structure(direction, weights, n_ext):
    b, X, ext, elev = _elevator(direction, weights, [None] * n_ext)
    delta = 1 if direction == "up" else -1
    for i, lv in enumerate(elev.levels, start=1):
        assert b.weights[lv] == sum(weights[: i + 1]) + delta * i
        assert {x for x in X if x in b.adj[lv]} == set(X[: i + 1])
        assert {e for e in ext if e in b.adj[lv]} == set(ext)
        assert set(elev.levels) - {lv} <= b.adj[lv]


@settings(max_examples=80, deadline=None)
@given(st.lists(st.integers(0, 100), min_size=3, max_size=6), st.data())
def test_up_step_improves(weights, data):
    b, X, _, elev = _elevator("up", weights)
    inst = b.to_instance()
    n = inst.ground_size
    i = data.draw(st.integers(1, len(elev.levels) - 1))
    free = data.draw(st.lists(st.sampled_from(X[i + 1:]), unique=True))
    s = from_indices([elev.levels[i - 1]] + free, n)
    t = elevator_improving_step(inst, elev, s, i)
    assert inst.is_valid(t) and inst.objective(t) > inst.objective(s)


def test_single_edge_simulator_weights():
    inst = MaxCutInstance(2, [(0, 1)], [4])
    b = reduce_maxcut_to_wis(inst, normalize=False)
    assert b.alpha == 8
    sim = b.simulator(0, (), (1,), "A2B")
    assert sim.up.level_weights == (17,)
    assert sim.down.level_weights == (15, 18)
    assert sim.turn_weight == 81
    # 17 + 1 < 18 fails, which is why the default pipeline rescales the weights first
    assert not sim.margin_holds
    normalized = reduce_maxcut_to_wis(inst)
    assert normalized.scale == 2
    assert all(s.margin_holds for s in normalized.simulators.values())


def test_empty_p_gives_one_up_level():
    b = reduce_maxcut_to_wis(MaxCutInstance(3, [(0, 1), (1, 2)], [6, 6]))
    for (direction, v, P, Q), sim in b.simulators.items():
        assert len(sim.up.levels) == len(P) + 1
        assert len(sim.down.levels) == len(Q) + 1
        assert set(sim.up.levels) | set(sim.down.levels) <= set(b.D)


def test_non_improving_partition_rejected():
    from pivotlab.gadgets import build_simulator
    b = reduce_maxcut_to_wis(MaxCutInstance(2, [(0, 1)], [4]))
    with pytest.raises(NotImprovingPartition):
        build_simulator(b.core, 0, (1,), (), "A2B")
