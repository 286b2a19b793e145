"""Brute-force checks of reduction properties and sequence-length growth."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np

from .core import (EnumerationOverflow, LocalSearchInstance, Solution, build_transition_graph, default_budget)
from .reductions.bundle import ReductionBundle


@dataclass
class ConditionResult:
    name: str
    ok: bool = True
    counterexample: tuple | None = None
    detail: str = ""

    def fail(self, counterexample: tuple, detail: str) -> None:
        if self.ok:
            self.ok = False
            self.counterexample = counterexample
            self.detail = detail


@dataclass
class TightnessReport:
    conditions: dict[str, ConditionResult] = field(default_factory=dict)
    source_solutions: int = 0
    target_solutions: int = 0
    r_size: int = 0
    explored: int = 0

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.conditions.values())

    def __bool__(self) -> bool:
        return self.ok

    def first_failure(self) -> ConditionResult | None:
        for c in self.conditions.values():
            if not c.ok:
                return c
        return None

    def summary(self) -> str:
        parts = [f"{name}={'pass' if c.ok else 'FAIL'}" for name, c in self.conditions.items()]
        return ", ".join(parts) + f" (source {self.source_solutions}, target {self.target_solutions}, R {self.r_size})"


def _enumerate(instance: LocalSearchInstance, budget: int, what: str) -> list[Solution]:
    out = []
    for s in instance.solutions():
        out.append(s)
        if len(out) > budget:
            raise EnumerationOverflow(len(out), budget, what)
    return out


def _source_edge(source: LocalSearchInstance, a: Solution, b: Solution) -> bool:
    return b in source.improving_neighbors(a)


def check_tight_reduction(source: LocalSearchInstance, bundle: ReductionBundle,
                          budget: int | None = None, exhaustive: bool = False) -> TightnessReport:
    """Check that R holds every sink, that embed lands in R with psi as a
    left inverse, and that R-to-R paths avoiding R inside map to equal or
    adjacent source solutions.

    Sinks are looked for among ``target.candidate_sinks()`` when the target
    can count its solutions without listing them (for positive independent
    set weights those are the maximal sets; any other set can still grow).
    ``exhaustive=True`` tests every listed solution instead.  Improving
    edges are expanded from each R node through non-R nodes only, which is
    exactly the part of the transition graph the path condition looks at.
    """
    budget = default_budget() if budget is None else budget
    target = bundle.target
    report = TightnessReport()
    c1 = report.conditions["sinks-in-R"] = ConditionResult("sinks-in-R")
    c2 = report.conditions["embed-psi"] = ConditionResult("embed-psi")
    c3 = report.conditions["R-paths"] = ConditionResult("R-paths")

    src_solutions = _enumerate(source, budget, "source solutions")
    report.source_solutions = len(src_solutions)
    for s in src_solutions:
        t = bundle.embed(s)
        if not target.is_valid(t):
            c2.fail((s, t), "embed produced an invalid target solution")
        elif not bundle.r_member(t):
            c2.fail((s, t), "embed produced a solution outside R")
        elif bundle.psi(t) != s:
            c2.fail((s, t), "psi(embed(s)) differs from s")

    is_r: dict[Solution, bool] = {}
    counted = None if exhaustive else getattr(target, "count_solutions", lambda: None)()
    if counted is not None:
        if counted > budget:
            raise EnumerationOverflow(counted, budget, "target solutions")
        pool, report.target_solutions = target.candidate_sinks(), counted
    else:
        pool = target.solutions()
    count = 0
    for t in pool:
        count += 1
        if count > budget:
            raise EnumerationOverflow(count, budget, "target solutions")
        if not target.has_improving_neighbor(t):
            r = bundle.r_member(t)
            is_r[t] = r
            if not r:
                c1.fail((t,), "a local optimum of the target lies outside R")
    if counted is None:
        report.target_solutions = count

    r_nodes = bundle.members_of_r()
    report.r_size = len(r_nodes)

    def in_r(t: Solution) -> bool:
        hit = is_r.get(t)
        if hit is None:
            hit = is_r[t] = bundle.r_member(t)
        return hit

    explored = 0
    for start in r_nodes:
        p0 = bundle.psi(start)
        parent = {start: None}
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in target.improving_neighbors(x):
                if y in parent:
                    continue
                parent[y] = x
                explored += 1
                if explored > budget:
                    raise EnumerationOverflow(explored, budget, "explored target edges")
                if in_r(y):
                    p1 = bundle.psi(y)
                    if p1 != p0 and not _source_edge(source, p0, p1):
                        path, z = [], y
                        while z is not None:
                            path.append(z)
                            z = parent[z]
                        c3.fail(tuple(reversed(path)), "an R-to-R path maps to non-adjacent source solutions")
                else:
                    queue.append(y)
    report.explored = explored
    return report


def check_l_tight(source: LocalSearchInstance, bundle: ReductionBundle, ell: int | None = None,
                  metric: str | None = None, budget: int | None = None) -> TightnessReport:
    """For R pairs whose psi images are equal or source-adjacent, check the
    target distance is at most ``ell``.

    ``metric="transition"`` measures directed distance in the target
    transition graph and only looks at source-adjacent pairs (equal images
    have no direction to follow); ``metric="neighborhood"`` measures
    distance in the target neighborhood graph, which for single flips is
    the Hamming distance, and covers equal images as well.
    """
    budget = default_budget() if budget is None else budget
    ell = bundle.tightness if ell is None else ell
    metric = metric or bundle.metric
    target = bundle.target
    report = TightnessReport()
    c4 = report.conditions["l-tight"] = ConditionResult("l-tight", detail=f"ell={ell}, metric={metric}")
    r_nodes = bundle.members_of_r()
    report.r_size = len(r_nodes)
    if len(r_nodes) > budget:
        raise EnumerationOverflow(len(r_nodes), budget, "R members")
    by_psi: dict[Solution, list[Solution]] = {}
    for x in r_nodes:
        by_psi.setdefault(bundle.psi(x), []).append(x)
    report.source_solutions = len(by_psi)
    src_adj = {p: set(source.improving_neighbors(p)) for p in by_psi}

    if metric == "neighborhood":
        for p, xs in by_psi.items():
            partners = [p] + [q for q in src_adj[p] if q in by_psi]
            for q in partners:
                for x in xs:
                    for y in by_psi[q]:
                        if (x ^ y).bit_count() > ell:
                            c4.fail((x, y), f"Hamming distance {(x ^ y).bit_count()} exceeds {ell}")
        return report
    if metric != "transition":
        raise ValueError(f"unknown metric {metric!r}")

    explored = 0
    for p, xs in by_psi.items():
        goals = {y: q for q in src_adj[p] if q in by_psi for y in by_psi[q]}
        for x in xs:
            dist = {x: 0}
            frontier = [x]
            for depth in range(1, ell + 1):
                nxt = []
                for z in frontier:
                    for y in target.improving_neighbors(z):
                        if y not in dist:
                            dist[y] = depth
                            nxt.append(y)
                explored += len(nxt)
                if explored > budget:
                    raise EnumerationOverflow(explored, budget, "explored target solutions")
                frontier = nxt
            for y in goals:
                if y not in dist:
                    c4.fail((x, y), f"no improving path of length <= {ell}")
    report.explored = explored
    return report


def measure_shortest_max_sequence(instance: LocalSearchInstance, start: Solution,
                                  budget: int | None = None) -> int:
    """BFS distance from ``start`` to the nearest sink it can reach."""
    budget = default_budget() if budget is None else budget
    instance.certify(start)
    dist = {start: 0}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        nbrs = instance.improving_neighbors(x)
        if not nbrs:
            return dist[x]
        for y in nbrs:
            if y not in dist:
                dist[y] = dist[x] + 1
                if len(dist) > budget:
                    raise EnumerationOverflow(len(dist), budget, "reachable solutions")
                queue.append(y)
    raise AssertionError("a finite improving graph always reaches a sink")


@dataclass
class GrowthRow:
    instance_id: str
    size: int
    length: int | None
    error: str | None = None


@dataclass
class GrowthTable:
    rows: list[GrowthRow]
    log2_slope: float | None

    def lengths(self) -> list[int | None]:
        return [r.length for r in self.rows]


def growth_experiment(family: Callable[[int], tuple[LocalSearchInstance, Solution]], sizes: Sequence[int],
                      budget: int | None = None, label: str = "family") -> GrowthTable:
    """Shortest maximal sequence length per size, with a least-squares slope
    of log2(length) against size.  Budget overruns become row errors."""
    rows = []
    for size in sizes:
        try:
            inst, start = family(size)
            rows.append(GrowthRow(f"{label}-{size}", size, measure_shortest_max_sequence(inst, start, budget)))
        except EnumerationOverflow as exc:
            rows.append(GrowthRow(f"{label}-{size}", size, None, str(exc)))
    pts = [(r.size, math.log2(r.length)) for r in rows if r.length]
    slope = None
    if len(pts) >= 2 and len({x for x, _ in pts}) >= 2:
        xs, ys = np.array(pts, dtype=float).T
        slope = float(np.polyfit(xs, ys, 1)[0])
    return GrowthTable(rows, slope)


def transition_graphs_equal(a: LocalSearchInstance, b: LocalSearchInstance, budget: int | None = None) -> bool:
    ga, gb = build_transition_graph(a, budget), build_transition_graph(b, budget)
    return ga.nodes == gb.nodes and ga.edge_set() == gb.edge_set()
