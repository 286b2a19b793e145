"""Pivoting instance of weighted independent set under 3-swaps built from a
multicolored independent set instance and a seed instance with a start.

A multicolored independent set of size k lets local search stop within k
improving swaps from the start.  Without one, every maximal improving
sequence is forced through S plus w*, after which it must walk the seed's
own improving graph from S.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

from ..core import Solution, coord_bit, from_indices
from ..gadgets import GraphBuilder, attach_elevator
from ..problems import SwopInstance


class InputContractError(ValueError):
    pass


@dataclass(frozen=True)
class MulticoloredGraph:
    """Graph on color classes V_1..V_k; vertex ids run through the classes in order."""

    classes: tuple[tuple[int, ...], ...]
    edges: tuple[tuple[int, int], ...]

    @classmethod
    def from_sizes(cls, sizes, extra_edges=()) -> MulticoloredGraph:
        """Classes of the given sizes with class-internal clique edges added."""
        classes, nxt = [], 0
        for sz in sizes:
            classes.append(tuple(range(nxt, nxt + sz)))
            nxt += sz
        edges = {tuple(sorted(e)) for cl in classes for e in itertools.combinations(cl, 2)}
        edges |= {tuple(sorted(e)) for e in extra_edges}
        return cls(tuple(classes), tuple(sorted(edges)))

    @property
    def k(self) -> int:
        return len(self.classes)

    @property
    def n(self) -> int:
        return sum(len(c) for c in self.classes)

    def color_of(self) -> dict[int, int]:
        return {v: i for i, cl in enumerate(self.classes) for v in cl}

    def validate(self) -> None:
        if self.k < 3:
            raise InputContractError(f"need at least 3 color classes, got {self.k}")
        ids = sorted(v for cl in self.classes for v in cl)
        if ids != list(range(len(ids))):
            raise InputContractError("vertex ids must be 0..n-1, each in exactly one class")
        if any(not cl for cl in self.classes):
            raise InputContractError("color classes must be nonempty")
        if len(self.classes[-1]) != 1:
            raise InputContractError(f"the last color class must have exactly one vertex, got {len(self.classes[-1])}")
        eset = set()
        for u, v in self.edges:
            if u == v or not (0 <= u < self.n and 0 <= v < self.n):
                raise InputContractError(f"bad edge ({u}, {v})")
            eset.add((min(u, v), max(u, v)))
        for i, cl in enumerate(self.classes):
            for u, v in itertools.combinations(sorted(cl), 2):
                if (u, v) not in eset:
                    raise InputContractError(f"color class {i + 1} is not a clique: {u} and {v} are not adjacent")

    def multicolored_independent_sets(self) -> list[tuple[int, ...]]:
        """Every independent set with one vertex per class, by brute force."""
        eset = {(min(u, v), max(u, v)) for u, v in self.edges}
        out = []
        for pick in itertools.product(*self.classes):
            if all((min(u, v), max(u, v)) not in eset for u, v in itertools.combinations(pick, 2)):
                out.append(pick)
        return out


@dataclass
class MisWisLayout:
    """Where each part of the construction lives in the target ground set."""

    V: tuple[tuple[int, ...], ...]
    U: tuple[int, ...]
    X: tuple[int, ...]
    Y: tuple[int, ...]
    v_star: int
    w_star: int
    S: tuple[int, ...]
    scale: int
    meta: dict = field(default_factory=dict)

    @property
    def all_V(self) -> tuple[int, ...]:
        return tuple(v for cl in self.V for v in cl)


@dataclass
class MisWisResult:
    instance: SwopInstance
    start: Solution
    layout: MisWisLayout

    def s_plus_w_star(self) -> Solution:
        n = self.instance.ground_size
        return from_indices(self.layout.S + (self.layout.w_star,), n)

    def v_part(self, t: Solution) -> tuple[int, ...]:
        n = self.instance.ground_size
        return tuple(v for v in self.layout.all_V if t & coord_bit(v, n))

    def is_multicolored_solution(self, t: Solution) -> bool:
        """T-bar with T-bar restricted to V an independent set of size k."""
        return len(self.v_part(t)) == len(self.layout.V)


def reduce_mis_to_wis_pivot(mis: MulticoloredGraph, seed: SwopInstance, seed_start: Solution) -> MisWisResult:
    mis.validate()
    kinds = seed.certifier_kinds()
    if seed.include_edges or set(kinds) != {"independent-set"}:
        raise InputContractError("the seed must be a weighted independent set instance over its vertices")
    seed.certify(seed_start)
    if any(w <= 0 for w in seed.weights):
        raise InputContractError("seed weights must be positive")
    n = mis.n
    k = mis.k
    lcm = 1
    for w in seed.weights:
        lcm = lcm * w.denominator // math.gcd(lcm, w.denominator)
    scale = 8 * n * lcm
    seed_w = [int(w * scale) for w in seed.weights]
    w_max = max(seed_w)
    S_seed = [i for i in range(seed.n_vertices) if seed_start & coord_bit(i, seed.ground_size)]

    b = GraphBuilder()
    color = mis.color_of()
    for v in range(n):
        b.add_vertex(1, ("V", color[v] + 1, v))
    for u, v in mis.edges:
        b.add_edge(u, v)
    U = [b.add_vertex(w, ("U", i)) for i, w in enumerate(seed_w)]
    for u, v in seed.edges:
        b.add_edge(U[u], U[v])
    X = []
    for i in range(2, k):
        x = b.add_vertex(3, ("x", i))
        X.append(x)
        for j in (i - 1, i, i + 1):
            b.connect([x], mis.classes[j - 1])
    S = [U[i] for i in S_seed]
    U_minus_S = [u for u in U if u not in S]
    Y = []
    external_y = list(range(n)) + U_minus_S
    if len(X) >= 2:
        elev = attach_elevator(b, "up", X, external_y, owner="y")
        Y = list(elev.levels)
        for i, y in enumerate(Y, start=3):
            del b._by_label[b.labels[y]]
            b.labels[y] = ("y", i)
            b._by_label[("y", i)] = y
    v_star = b.add_vertex(2 * w_max, ("v*",))
    w_star = b.add_vertex(3 * w_max + 1, ("w*",))
    b.add_edge(v_star, w_star)
    b.connect([w_star], list(range(n)) + X + Y)
    b.connect(list(range(n)) + X + Y + [v_star], U_minus_S)
    max_y = max((b.weights[y] for y in Y), default=0)
    if not k + 3 * (k - 2) + max_y < 8 * n:
        raise AssertionError("the weight of V, X and Y together must stay below 8n")
    inst = b.to_instance(c=3)
    N = inst.ground_size
    start = from_indices(S + list(mis.classes[-1]) + [v_star], N)
    inst.certify(start)
    layout = MisWisLayout(
        V=tuple(tuple(cl) for cl in mis.classes),
        U=tuple(U), X=tuple(X), Y=tuple(Y), v_star=v_star, w_star=w_star, S=tuple(S), scale=scale,
        meta={"w_max": w_max, "labels": list(b.labels)},
    )
    return MisWisResult(inst, start, layout)
