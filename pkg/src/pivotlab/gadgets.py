"""Elevator and simulator gadgets for weighted independent set constructions."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Hashable, Iterable, Sequence

from .core import ArityError, Solution, coord_bit
from .problems import Certifier, INDEPENDENT_SET, SwopInstance


class GadgetPreconditionError(ValueError):
    pass


class NoStepError(GadgetPreconditionError):
    pass


class GraphBuilder:
    """Mutable vertex-weighted graph with provenance labels.

    Vertex ids are insertion indices and become ground coordinates of the
    finished instance.  ``order_key`` realizes the fixed global vertex order
    that elevators refer to: vertices added with ``early=True`` come first,
    everything else follows in insertion order.
    """

    def __init__(self):
        self.weights: list[Fraction] = []
        self.labels: list[tuple] = []
        self.early: list[bool] = []
        self.adj: list[set[int]] = []
        self._by_label: dict[tuple, int] = {}

    def __len__(self) -> int:
        return len(self.weights)

    def add_vertex(self, weight, label: Hashable, early: bool = False) -> int:
        label = label if isinstance(label, tuple) else (label,)
        if label in self._by_label:
            raise ValueError(f"duplicate vertex label {label}")
        self.weights.append(Fraction(weight))
        self.labels.append(label)
        self.early.append(early)
        self.adj.append(set())
        self._by_label[label] = len(self.weights) - 1
        return len(self.weights) - 1

    def vertex(self, *label) -> int:
        return self._by_label[tuple(label)]

    def has(self, *label) -> bool:
        return tuple(label) in self._by_label

    def add_edge(self, u: int, v: int) -> None:
        if u == v:
            raise ValueError("loops are not allowed")
        self.adj[u].add(v)
        self.adj[v].add(u)

    def connect(self, vs: Iterable[int], ws: Iterable[int]) -> None:
        ws = list(ws)
        for u in vs:
            for v in ws:
                if u != v:
                    self.add_edge(u, v)

    def make_clique(self, vs: Iterable[int]) -> None:
        vs = list(vs)
        for i, u in enumerate(vs):
            for v in vs[i + 1:]:
                self.add_edge(u, v)

    def order_key(self, v: int) -> tuple[int, int]:
        return (0 if self.early[v] else 1, v)

    def in_order(self, vs: Iterable[int]) -> list[int]:
        return sorted(vs, key=self.order_key)

    def edges(self) -> list[tuple[int, int]]:
        return sorted((u, v) for u in range(len(self.adj)) for v in self.adj[u] if u < v)

    def to_instance(self, c: int = 3) -> SwopInstance:
        return SwopInstance(len(self.weights), tuple(self.edges()), tuple(self.weights),
                            (Certifier(INDEPENDENT_SET),), c, include_edges=False)


@dataclass(frozen=True)
class Elevator:
    direction: str
    base: tuple[int, ...]
    levels: tuple[int, ...]
    level_weights: tuple[Fraction, ...]
    external: frozenset[int] = field(default_factory=frozenset)

    @property
    def top(self) -> int:
        return self.levels[-1]

    @property
    def bottom(self) -> int:
        return self.levels[0]

    def prefix(self, i: int) -> tuple[int, ...]:
        """Base vertices adjacent to level i (1-based)."""
        return self.base[: i + 1]


def elevator_level_weights(direction: str, base_weights: Sequence) -> list[Fraction]:
    if direction not in ("up", "down"):
        raise ValueError(f"direction must be 'up' or 'down', got {direction!r}")
    if len(base_weights) < 2:
        raise ArityError(f"an elevator needs a base of at least 2 vertices, got {len(base_weights)}")
    delta = 1 if direction == "up" else -1
    ws = [Fraction(w) for w in base_weights]
    out = [ws[0] + ws[1] + delta]
    for i in range(2, len(ws)):
        out.append(out[-1] + ws[i] + delta)
    return out


def attach_elevator(builder: GraphBuilder, direction: str, base: Sequence[int], external: Iterable[int],
                    owner: Hashable = None) -> Elevator:
    """Add levels over ``base`` (in the given order) with clique, prefix and
    shared external edges."""
    base = tuple(base)
    weights = elevator_level_weights(direction, [builder.weights[x] for x in base])
    owner = owner if owner is not None else ("elevator", len(builder))
    levels = []
    for i, w in enumerate(weights, start=1):
        levels.append(builder.add_vertex(w, (owner, direction, i)))
    builder.make_clique(levels)
    for i, lv in enumerate(levels, start=1):
        builder.connect([lv], base[: i + 1])
    external = frozenset(external) - set(base) - set(levels)
    builder.connect(levels, external)
    return Elevator(direction, base, tuple(levels), tuple(weights), external)


def elevator_improving_step(inst: SwopInstance, elev: Elevator, s: Solution, i: int) -> Solution:
    """Move from level i to level i+1 of an up-elevator, dropping X[i+2]."""
    if elev.direction != "up":
        raise GadgetPreconditionError("the level step applies to up-elevators")
    if not 1 <= i <= len(elev.levels):
        raise GadgetPreconditionError(f"level index {i} outside 1..{len(elev.levels)}")
    if i == len(elev.levels):
        raise NoStepError("the top level has no level above it")
    n = inst.ground_size
    cur = coord_bit(elev.levels[i - 1], n)
    if not s & cur:
        raise GadgetPreconditionError(f"level {i} is not in the solution")
    inst.certify(s)
    drop = cur | coord_bit(elev.base[i + 1], n)
    return (s & ~drop) | coord_bit(elev.levels[i], n)


# -- simulators ---------------------------------------------------------------

SIDES = ("A", "B")


class CutCore:
    """Lookup of the core vertices of the max cut to independent set graph.

    ``side(v, s, k)`` is v_s (k=0), v_s' (k=1) or v_s'' (k=2);
    ``x(u, v)`` is the vertex x_{u,v} for an edge uv.
    """

    def __init__(self, builder: GraphBuilder, neighbors: Sequence[Sequence[int]], edge_weight):
        self.builder = builder
        self.neighbors = [sorted(ns) for ns in neighbors]
        self.edge_weight = edge_weight

    def side(self, v: int, s: str, k: int = 0) -> int:
        return self.builder.vertex("core", v, s, k)

    def side_set(self, v: int, s: str) -> list[int]:
        return [self.side(v, s, k) for k in range(3)]

    def primes(self, v: int, s: str) -> list[int]:
        return [self.side(v, s, 1), self.side(v, s, 2)]

    def x(self, u: int, v: int) -> int:
        return self.builder.vertex("x", u, v)


@dataclass(frozen=True)
class Simulator:
    owner: int
    P: tuple[int, ...]
    Q: tuple[int, ...]
    direction: str
    up: Elevator
    turn: int
    turn_weight: Fraction
    down: Elevator

    @property
    def source_side(self) -> str:
        return "A" if self.direction == "A2B" else "B"

    @property
    def target_side(self) -> str:
        return "B" if self.direction == "A2B" else "A"

    @property
    def margin_holds(self) -> bool:
        """Top up-level weight plus one stays below the top down-level weight."""
        return self.up.level_weights[-1] + 1 < self.down.level_weights[-1]

    @property
    def vertices(self) -> tuple[int, ...]:
        return self.up.levels + (self.turn,) + self.down.levels

    def walk(self) -> list[int]:
        """Up levels bottom to top, the turn vertex, then down levels top to bottom."""
        return list(self.up.levels) + [self.turn] + list(reversed(self.down.levels))


class NotImprovingPartition(ValueError):
    def __init__(self, v: int, sum_p, sum_q):
        self.sum_p, self.sum_q = sum_p, sum_q
        super().__init__(f"(P, Q) is not in R_{v}: sum over P = {sum_p} is not below sum over Q = {sum_q}")


def build_simulator(core: CutCore, v: int, P: Sequence[int], Q: Sequence[int], direction: str) -> Simulator:
    """Add an A2B or B2A simulator of ``v`` for the neighbor partition (P, Q).

    B2A swaps the side labels and reads every x_{r,s} as x_{s,r}.  The turn
    margin inequality is reported through ``Simulator.margin_holds`` rather
    than enforced, so raw constructions that violate it stay inspectable.
    """
    if direction not in ("A2B", "B2A"):
        raise ValueError(f"direction must be A2B or B2A, got {direction!r}")
    P, Q = tuple(sorted(P)), tuple(sorted(Q))
    nbrs = core.neighbors[v]
    if sorted(P + Q) != nbrs:
        raise GadgetPreconditionError(f"(P, Q) must partition the neighborhood {nbrs} of {v}")
    sum_p = sum(core.edge_weight(v, p) for p in P)
    sum_q = sum(core.edge_weight(v, q) for q in Q)
    if not sum_p < sum_q:
        raise NotImprovingPartition(v, sum_p, sum_q)
    b = core.builder
    s1, s2 = ("A", "B") if direction == "A2B" else ("B", "A")

    def x(a: int, c: int) -> int:
        return core.x(a, c) if direction == "A2B" else core.x(c, a)

    x_up = core.primes(v, s1) + b.in_order(x(v, p) for p in P)
    x_down = core.primes(v, s2) + b.in_order(x(q, v) for q in Q)
    M = [u for p in P for u in core.side_set(p, s1)] + [u for q in Q for u in core.side_set(q, s2)]
    ext_up = set(M) | set(core.side_set(v, s2)) | {x(v, q) for q in Q} | {x(r, v) for r in nbrs}
    ext_down = set(M) | set(core.side_set(v, s1)) | {x(p, v) for p in P} | {x(v, r) for r in nbrs}
    tag = ("sim", direction, v, P, Q)
    up = attach_elevator(b, "up", x_up, ext_up, owner=tag)
    down = attach_elevator(b, "down", x_down, ext_down, owner=tag)
    b.connect(up.levels, down.levels)
    t_weight = down.level_weights[-1] + b.weights[core.side(v, s1)] - 1
    t = b.add_vertex(t_weight, tag + ("turn",))
    n_pq = (set(M) | set(core.primes(v, "A")) | set(core.primes(v, "B"))
            | {core.x(v, r) for r in nbrs} | {core.x(r, v) for r in nbrs}
            | set(up.levels) | set(down.levels))
    b.connect([t], n_pq | {core.side(v, "A"), core.side(v, "B")})
    return Simulator(v, P, Q, direction, up, t, t_weight, down)
