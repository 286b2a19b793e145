"""Algorithms that output a maximal improving sequence from a start."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .core import (ImprovingSequence, LocalSearchInstance, PivotingRule, Sense, Solution, apply_pivot, coord_bit)
from .problems import CircuitInstance, SwopInstance
from .weight_reduction import ReducedWeights, frank_tardos_reduce

DEFAULT_STEP_BUDGET = 10 ** 7
LOCAL_OPTIMUM = "local-optimum-found"
BUDGET_EXHAUSTED = "budget-exhausted"
PROMISE_VIOLATED = "promise-violated"
MAX_OUTPUT_BITS = 64


class InvariantViolation(AssertionError):
    """A bound that the theory guarantees was exceeded."""


class ResourceError(RuntimeError):
    pass


@dataclass(frozen=True)
class SolveReport:
    sequence: ImprovingSequence
    outcome: str
    evaluations: int = 0
    meta: dict | None = None

    @property
    def steps(self) -> int:
        return len(self.sequence)

    @property
    def found(self) -> bool:
        return self.outcome == LOCAL_OPTIMUM


def standard_local_search(instance: LocalSearchInstance, start: Solution, rule: PivotingRule | None = None,
                          step_budget: int = DEFAULT_STEP_BUDGET) -> SolveReport:
    """Apply ``rule`` until no improving neighbor is left or the budget runs out;
    the partial trace is kept either way."""
    rule = rule or PivotingRule.first()
    instance.certify(start)
    steps = [start]
    cur = start
    calls = 0
    while True:
        calls += 1
        nxt = apply_pivot(instance, cur, rule)
        if nxt is None:
            return SolveReport(ImprovingSequence.of(instance, steps), LOCAL_OPTIMUM, calls)
        if len(steps) - 1 >= step_budget:
            return SolveReport(ImprovingSequence.of(instance, steps), BUDGET_EXHAUSTED, calls)
        steps.append(nxt)
        cur = nxt


def pivot_search_bounded(instance: LocalSearchInstance, start: Solution, ell: int,
                         accept: Callable[[Solution], bool] | None = None) -> SolveReport:
    """First maximal improving sequence of length <= ``ell`` in lexicographic
    path order, by depth-first search over improving neighbors.

    ``accept`` restricts which local optima may end the sequence.  A
    (solution, remaining depth) pair that failed once is never expanded again.
    """
    if ell < 0:
        raise ValueError("the depth bound must be nonnegative")
    instance.certify(start)
    failed: set[tuple[Solution, int]] = set()
    nbr_cache: dict[Solution, list[Solution]] = {}
    evaluations = 0

    def improving(s: Solution) -> list[Solution]:
        nonlocal evaluations
        if s not in nbr_cache:
            evaluations += 1
            nbr_cache[s] = instance.improving_neighbors(s)
        return nbr_cache[s]

    def dfs(s: Solution, left: int) -> list[Solution] | None:
        nbrs = improving(s)
        if not nbrs:
            return [s] if accept is None or accept(s) else None
        if left == 0 or (s, left) in failed:
            return None
        for t in nbrs:
            tail = dfs(t, left - 1)
            if tail is not None:
                return [s] + tail
        failed.add((s, left))
        return None

    path = dfs(start, ell)
    if path is None:
        return SolveReport(ImprovingSequence.of(instance, [start]), PROMISE_VIOLATED, evaluations)
    return SolveReport(ImprovingSequence.of(instance, path), LOCAL_OPTIMUM, evaluations)


# -- distinct weights -------------------------------------------------------------

def distinct_values(weights: Sequence) -> tuple[list[Fraction], list[int]]:
    """Distinct values in order of first occurrence, plus the class of each entry."""
    values: list[Fraction] = []
    index: dict[Fraction, int] = {}
    classes = []
    for w in weights:
        w = Fraction(w)
        if w not in index:
            index[w] = len(values)
            values.append(w)
        classes.append(index[w])
    return values, classes


def reduce_swop_weights(inst: SwopInstance) -> tuple[SwopInstance, ReducedWeights]:
    """Same instance with each distinct weight replaced by its Frank-Tardos
    image for N = c+1, so every swap keeps its improvement status."""
    values, classes = distinct_values(inst.weights)
    reduced = frank_tardos_reduce(values, inst.c + 1)
    return inst.with_weights([reduced[j] for j in classes]), reduced


def fpt_distinct_weights_solve(inst: SwopInstance, start: Solution, rule: PivotingRule | None = None,
                               step_budget: int = DEFAULT_STEP_BUDGET) -> SolveReport:
    reduced_inst, reduced = reduce_swop_weights(inst)
    rep = standard_local_search(reduced_inst, start, rule, step_budget)
    bound = inst.ground_size * 2 * max((abs(x) for x in reduced.entries), default=0)
    if rep.steps > bound:
        raise InvariantViolation(f"{rep.steps} steps exceed the reduced-weight bound {bound}")
    seq = ImprovingSequence.of(inst, rep.sequence.steps)
    return SolveReport(seq, rep.outcome, rep.evaluations,
                       {"reduced_weights": reduced.entries, "distinct": len(reduced), "step_bound": bound})


# -- circuits -------------------------------------------------------------------

def circuit_output_bounded_solve(inst: CircuitInstance, start: Solution, rule: PivotingRule | None = None) -> SolveReport:
    """Local search on a circuit with the hard ceiling of 2^m steps: the
    objective depends only on the m output bits, so no strictly improving
    sequence can visit more than 2^m output states."""
    m = inst.m
    if m > MAX_OUTPUT_BITS:
        raise ResourceError(f"m = {m} outputs is above the supported {MAX_OUTPUT_BITS}")
    ceiling = 1 << m
    rep = standard_local_search(inst, start, rule, step_budget=ceiling)
    if rep.steps >= ceiling:
        raise InvariantViolation(f"{rep.steps} steps reach the 2^m = {ceiling} ceiling")
    return rep


@dataclass(frozen=True)
class OutputDegreeBound:
    t: int
    k: int
    reduced_weights: tuple[int, ...]
    reduced_instance: CircuitInstance
    step_bound: int


def output_degrees(inst: CircuitInstance) -> list[int]:
    """Per input, the number of outputs that depend on it."""
    deps = inst.input_dependencies()
    n = inst.n_inputs
    return [sum(1 for o in inst.outputs if deps[o] >> i & 1) for i in range(n)]


def bound_steps_by_output_degree(inst: CircuitInstance) -> OutputDegreeBound:
    """A flip changes at most t outputs, so output weights reduced with
    N = t+1 keep every flip's improvement status."""
    t = max(output_degrees(inst), default=0)
    values, classes = distinct_values(inst.weights)
    reduced = frank_tardos_reduce(values, max(t, 1) + 1)
    new_w = [reduced[j] for j in classes]
    red_inst = inst.with_weights(new_w)
    bound = 2 * sum(abs(x) for x in new_w)
    return OutputDegreeBound(t, len(values), tuple(new_w), red_inst, bound)


# -- quadratic bound potential --------------------------------------------------

def weight_rank_potential(inst: SwopInstance, s: Solution) -> int:
    """Sum of 1-based weight ranks of the chosen elements (ties by index);
    every improving 2-swap raises it when all weights are positive."""
    n = inst.ground_size
    order = sorted(range(n), key=lambda i: (inst.weights[i], i))
    rank = {v: r + 1 for r, v in enumerate(order)}
    if inst.sense is Sense.MIN:
        rank = {v: n - r + 1 for v, r in rank.items()}
    return sum(rank[i] for i in range(n) if s & coord_bit(i, n))
