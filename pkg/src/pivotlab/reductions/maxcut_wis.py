"""Tight reduction from max cut under flips to weighted independent set
under 3-swaps, built from a core graph plus one A2B and one B2A simulator per
improving neighbor partition."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..core import ImprovingSequence, Solution, coord_bit
from ..gadgets import CutCore, GraphBuilder, Simulator, build_simulator
from ..problems import MaxCutInstance, SwopInstance
from .bundle import ReductionBundle

DEFAULT_PARTITION_BUDGET = 1 << 16


class PartitionBudgetExceeded(RuntimeError):
    def __init__(self, total: int, budget: int):
        self.total = total
        self.budget = budget
        super().__init__(f"sum over v of 2^deg(v) is {total}, above the partition budget {budget}")


class NotAnImprovingFlip(ValueError):
    pass


def improving_partitions(inst: MaxCutInstance, v: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """R_v: neighbor partitions (P, Q) with weight(P) < weight(Q), in subset-mask order."""
    nbrs = inst.neighbors_of(v)
    out = []
    for mask in range(1 << len(nbrs)):
        P = tuple(u for i, u in enumerate(nbrs) if mask >> i & 1)
        Q = tuple(u for i, u in enumerate(nbrs) if not mask >> i & 1)
        if sum(inst.edge_weight(v, p) for p in P) < sum(inst.edge_weight(v, q) for q in Q):
            out.append((P, Q))
    return out


def normalization_scale(inst: MaxCutInstance) -> int:
    """Factor that makes every weight a multiple of 2n and leaves room for
    the +-1 margins of every simulator (the margin check only bites when n <= 2)."""
    n = inst.n
    scale = 1 if all(w % (2 * n) == 0 for w in inst.weights) else 2 * n

    def tight(scale: int) -> bool:
        for v in range(n):
            for P, Q in improving_partitions(inst, v):
                gap = scale * (sum(inst.edge_weight(v, q) for q in Q) - sum(inst.edge_weight(v, p) for p in P))
                if gap <= len(P) + len(Q) + 3:
                    return True
        return False

    while tight(scale):
        scale *= 2
    return scale


@dataclass
class MaxCutWisBundle(ReductionBundle):
    core: CutCore | None = None
    simulators: dict = field(default_factory=dict)
    scaled_source: MaxCutInstance | None = None
    scale: int = 1
    alpha: int = 0

    def g(self, s: Solution) -> Solution:
        return self.embed(s)

    def simulator(self, v: int, P, Q, direction: str) -> Simulator:
        return self.simulators[(direction, v, tuple(sorted(P)), tuple(sorted(Q)))]

    @property
    def C(self) -> list[int]:
        return self.meta["C"]

    @property
    def D(self) -> list[int]:
        return self.meta["D"]


def reduce_maxcut_to_wis(inst: MaxCutInstance, normalize: bool = True,
                         partition_budget: int = DEFAULT_PARTITION_BUDGET) -> MaxCutWisBundle:
    """Build the weighted independent set instance, psi, g and R.

    With ``normalize`` the edge weights are first multiplied by
    ``normalization_scale``; cut values scale uniformly, so flips keep their
    improving status.  ``normalize=False`` builds the graph from the weights
    as given.
    """
    n = inst.n
    if inst.max_degree < 1:
        raise ValueError("the reduction needs at least one edge")
    if any(w <= 0 for w in inst.weights):
        raise ValueError("edge weights must be positive")
    total = sum(1 << len(inst.neighbors_of(v)) for v in range(n))
    if total > partition_budget:
        raise PartitionBudgetExceeded(total, partition_budget)
    scale = normalization_scale(inst) if normalize else 1
    src = MaxCutInstance(n, inst.edges, tuple(w * scale for w in inst.weights))
    alpha = 2 * sum(src.weights)
    b = GraphBuilder()
    for v in range(n):
        for s in ("A", "B"):
            for k in range(3):
                b.add_vertex(4 * alpha * n if k == 0 else alpha, ("core", v, s, k), early=k > 0)
    for (u, v), w in zip(src.edges, src.weights):
        b.add_vertex(w, ("x", u, v))
        b.add_vertex(w, ("x", v, u))
    nbrs = [src.neighbors_of(v) for v in range(n)]
    core = CutCore(b, nbrs, src.edge_weight)
    for v in range(n):
        b.connect(core.side_set(v, "A"), core.side_set(v, "B"))
        for u in nbrs[v]:
            b.connect([core.x(u, v)], core.side_set(v, "A") + [core.x(v, w) for w in nbrs[v]])
            b.connect([core.x(v, u)], core.side_set(v, "B") + [core.x(w, v) for w in nbrs[v]])
    c_vertices = list(range(len(b)))
    sims: dict = {}
    for v in range(n):
        for P, Q in improving_partitions(src, v):
            for direction in ("A2B", "B2A"):
                sims[(direction, v, P, Q)] = build_simulator(core, v, P, Q, direction)
    d_vertices = list(range(len(c_vertices), len(b)))
    b.make_clique(d_vertices)
    target = b.to_instance(c=3)
    N = target.ground_size

    def bit(x: int) -> int:
        return coord_bit(x, N)

    a_sets = [sum(bit(x) for x in core.side_set(v, "A")) for v in range(n)]

    def embed(s: Solution) -> Solution:
        out = 0
        for v in range(n):
            side = "B" if src.side_b(s, v) else "A"
            for x in core.side_set(v, side):
                out |= bit(x)
        for u, v in src.edges:
            for p, q in ((u, v), (v, u)):
                if not src.side_b(s, p) and src.side_b(s, q):
                    out |= bit(core.x(p, q))
        return out

    def psi(t: Solution) -> Solution:
        out = 0
        for v in range(n):
            if not t & a_sets[v]:
                out |= coord_bit(v, n)
        return out

    def r_member(t: Solution) -> bool:
        return target.is_valid(t) and embed(psi(t)) == t

    ell = max(len(x) for x in nbrs) + 4
    bundle = MaxCutWisBundle(
        name="maxcut-to-wis",
        source=inst,
        target=target,
        psi=psi,
        embed=embed,
        r_member=r_member,
        tightness=ell,
        tightness_expr="max_v deg(v) + 4 (|P|+|Q|+4 per flip)",
        metric="transition",
        r_nodes=lambda: (embed(s) for s in inst.solutions()),
        meta={"C": c_vertices, "D": d_vertices, "labels": list(b.labels), "partitions": total},
        core=core,
        simulators=sims,
        scaled_source=src,
        scale=scale,
        alpha=alpha,
    )
    return bundle


def direct_sequence(bundle: MaxCutWisBundle, s_target: Solution, v: int) -> ImprovingSequence:
    """The |P|+|Q|+4 step walk through v's simulator from g(A,B) to the g of
    the flipped cut."""
    target = bundle.target
    src = bundle.scaled_source
    core = bundle.core
    if not bundle.r_member(s_target):
        raise ValueError("the start must be g(A,B) for some cut (A,B)")
    cut = bundle.psi(s_target)
    if src.flip_gain(cut, v) <= 0:
        raise NotAnImprovingFlip(f"flipping {v} does not improve the cut")
    N = target.ground_size
    s1 = "B" if src.side_b(cut, v) else "A"
    s2 = "A" if s1 == "B" else "B"
    P = tuple(u for u in src.neighbors_of(v) if src.side_b(cut, u) != src.side_b(cut, v))
    Q = tuple(u for u in src.neighbors_of(v) if src.side_b(cut, u) == src.side_b(cut, v))
    sim = bundle.simulator(v, P, Q, "A2B" if s1 == "A" else "B2A")
    x_up, x_down = sim.up.base, sim.down.base
    walk = sim.walk()

    def mask(vs) -> int:
        return sum(coord_bit(x, N) for x in vs)

    S = s_target
    v1, v2 = coord_bit(core.side(v, s1), N), coord_bit(core.side(v, s2), N)
    np_ = len(P)
    steps = [S]
    for i in range(1, len(walk) + 1):
        t = S | coord_bit(walk[i - 1], N)
        if i <= np_ + 1:
            t &= ~mask(x_up[: i + 1])
        elif i == np_ + 2:
            t &= ~(mask(x_up) | v1)
        else:
            t &= ~(mask(x_up) | v1)
            k = i - np_ - 3
            t |= v2 | mask(x_down[len(x_down) - k:] if k else ())
        steps.append(t)
    steps.append((S & ~(mask(x_up) | v1)) | v2 | mask(x_down))
    return ImprovingSequence.of(target, steps)
