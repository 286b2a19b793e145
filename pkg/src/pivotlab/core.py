"""Problem-agnostic local search machinery.

Solutions are plain ``int`` bitsets.  Coordinate ``i`` of a solution over a
ground set of size ``n`` lives in bit ``n - 1 - i``, so comparing two
solutions as integers is the same as comparing them lexicographically with
coordinate 0 most significant.  That order is the canonical enumeration and
tie-break order everywhere in the package.
"""

from __future__ import annotations

import os
from abc import ABC, abstractmethod
from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

import numpy as np

Solution = int

DEFAULT_BUDGET = 1 << 22
BUDGET_ENV = "PIVOTLAB_BUDGET"
RNG_ALGORITHM = "numpy-PCG64/SeedSequence(seed, solution-words)"


def default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    return int(raw) if raw else DEFAULT_BUDGET


class Sense(str, Enum):
    MAX = "max"
    MIN = "min"


class CertificationError(ValueError):
    """A solution was rejected by one of the instance's certifiers."""

    def __init__(self, certifier: str, solution: Solution, detail: str = ""):
        self.certifier = certifier
        self.solution = solution
        msg = f"solution {solution:#x} rejected by certifier {certifier!r}"
        super().__init__(f"{msg}: {detail}" if detail else msg)


class EnumerationOverflow(RuntimeError):
    def __init__(self, reached: int, budget: int, what: str = "solutions"):
        self.reached = reached
        self.budget = budget
        super().__init__(f"enumeration of {what} exceeded budget {budget} (reached {reached})")


class ArityError(ValueError):
    pass


# -- bitset helpers ---------------------------------------------------------

def coord_bit(i: int, n: int) -> int:
    return 1 << (n - 1 - i)


def from_indices(indices: Iterable[int], n: int) -> Solution:
    s = 0
    for i in indices:
        if not 0 <= i < n:
            raise ArityError(f"coordinate {i} outside ground set of size {n}")
        s |= 1 << (n - 1 - i)
    return s


def to_indices(s: Solution, n: int) -> list[int]:
    return [i for i in range(n) if s >> (n - 1 - i) & 1]


def to_bitstring(s: Solution, n: int) -> str:
    return format(s, f"0{n}b") if n else ""


def from_bitstring(bits: str) -> Solution:
    bits = bits.strip()
    if bits and set(bits) - {"0", "1"}:
        raise ValueError(f"not a bit string: {bits!r}")
    return int(bits, 2) if bits else 0


class LocalSearchInstance(ABC):
    """One instance of a local search problem family.

    Subclasses supply certification, the objective and the neighbor
    enumeration; everything else (improving moves, pivoting, enumeration of
    the transition graph) is generic.
    """

    ground_size: int
    sense: Sense = Sense.MAX

    @abstractmethod
    def violated_certifier(self, s: Solution) -> str | None:
        """Name of the first certifier that rejects ``s``, or None."""

    @abstractmethod
    def objective(self, s: Solution) -> Fraction: ...

    @abstractmethod
    def neighbors(self, s: Solution) -> list[Solution]:
        """Valid neighbors of a valid ``s`` in canonical order, ``s`` excluded."""

    @property
    def neighborhood_arity_bound(self) -> str:
        return "?"

    def objective_key(self, s: Solution):
        """A fast stand-in for ``objective``: any positive multiple of it
        (plus a constant) works, since only comparisons and gain ratios are
        taken from it."""
        return self.objective(s)

    def is_valid(self, s: Solution) -> bool:
        return 0 <= s < (1 << self.ground_size) and self.violated_certifier(s) is None

    def certify(self, s: Solution) -> None:
        if not 0 <= s < (1 << self.ground_size):
            raise CertificationError("arity", s, f"payload wider than {self.ground_size} bits")
        name = self.violated_certifier(s)
        if name is not None:
            raise CertificationError(name, s)

    def solutions(self) -> Iterator[Solution]:
        """All valid solutions in ascending (lexicographic) order."""
        for s in range(1 << self.ground_size):
            if self.violated_certifier(s) is None:
                yield s

    def better(self, a: Fraction, b: Fraction) -> bool:
        """True iff objective value ``a`` is strictly better than ``b``."""
        return a > b if self.sense is Sense.MAX else a < b

    def gain(self, before: Fraction, after: Fraction) -> Fraction:
        return after - before if self.sense is Sense.MAX else before - after

    def improving_neighbors(self, s: Solution) -> list[Solution]:
        key = self.objective_key
        f = key(s)
        if self.sense is Sense.MAX:
            return [t for t in self.neighbors(s) if key(t) > f]
        return [t for t in self.neighbors(s) if key(t) < f]

    def has_improving_neighbor(self, s: Solution) -> bool:
        return bool(self.improving_neighbors(s))

    def candidate_sinks(self) -> Iterator[Solution]:
        """A superset of the local optima, in ascending order.

        Families that can rule out solutions cheaply override this; the
        default is every valid solution.
        """
        return self.solutions()

    def format_solution(self, s: Solution) -> str:
        return to_bitstring(s, self.ground_size)


# -- operations -------------------------------------------------------------

def is_local_optimum(instance: LocalSearchInstance, s: Solution) -> bool:
    instance.certify(s)
    return not instance.has_improving_neighbor(s)


@dataclass(frozen=True)
class PivotingRule:
    kind: str = "first"
    seed: int | None = None

    KINDS = ("first", "best", "random")

    def __post_init__(self):
        if self.kind not in self.KINDS:
            raise ValueError(f"unknown pivoting rule {self.kind!r}")
        if self.kind == "random" and self.seed is None:
            raise ValueError("random pivoting needs an explicit seed")

    @classmethod
    def first(cls) -> PivotingRule:
        return cls("first")

    @classmethod
    def best(cls) -> PivotingRule:
        return cls("best")

    @classmethod
    def random(cls, seed: int) -> PivotingRule:
        return cls("random", seed)

    def describe(self) -> str:
        if self.kind == "random":
            return f"random(seed={self.seed}, rng={RNG_ALGORITHM})"
        return self.kind


def _solution_rng(seed: int, s: Solution) -> np.random.Generator:
    words = []
    x = s
    while True:
        words.append(x & 0xFFFFFFFF)
        x >>= 32
        if not x:
            break
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed & 0xFFFFFFFFFFFFFFFF, len(words), *words])))


def apply_pivot(instance: LocalSearchInstance, s: Solution, rule: PivotingRule) -> Solution | None:
    """The improving neighbor chosen by ``rule``, or None at a local optimum.

    ``best`` maximizes the gain and keeps the first neighbor in canonical
    order among ties.  ``random`` draws uniformly from the improving
    neighbors with a generator seeded by ``(rule.seed, s)``, so the choice is
    a pure function of the rule and the solution.
    """
    instance.certify(s)
    key = instance.objective_key
    f = key(s)
    if rule.kind == "first":
        for t in instance.neighbors(s):
            if instance.better(key(t), f):
                return t
        return None
    if rule.kind == "best":
        chosen, best_gain = None, 0
        for t in instance.neighbors(s):
            g = instance.gain(f, key(t))
            if g > best_gain:
                chosen, best_gain = t, g
        return chosen
    options = instance.improving_neighbors(s)
    if not options:
        return None
    return options[int(_solution_rng(rule.seed, s).integers(len(options)))]


@dataclass(frozen=True)
class ImprovingSequence:
    steps: tuple[Solution, ...]
    objectives: tuple[Fraction, ...] = ()

    @classmethod
    def of(cls, instance: LocalSearchInstance, steps: Sequence[Solution]) -> ImprovingSequence:
        return cls(tuple(steps), tuple(instance.objective(s) if instance.is_valid(s) else None for s in steps))

    def __len__(self) -> int:
        """Number of moves (one less than the number of solutions)."""
        return max(len(self.steps) - 1, 0)

    @property
    def last(self) -> Solution:
        return self.steps[-1]


@dataclass(frozen=True)
class SequenceCheck:
    ok: bool
    index: int | None = None
    kind: str | None = None  # not-neighbor | not-improving | not-maximal | invalid-solution

    def __bool__(self) -> bool:
        return self.ok


def verify_improving_sequence(instance: LocalSearchInstance, seq: ImprovingSequence | Sequence[Solution],
                              require_maximal: bool = False) -> SequenceCheck:
    steps = seq.steps if isinstance(seq, ImprovingSequence) else tuple(seq)
    if not steps:
        return SequenceCheck(False, 0, "invalid-solution")
    for i, s in enumerate(steps):
        if not instance.is_valid(s):
            return SequenceCheck(False, i, "invalid-solution")
    for i in range(1, len(steps)):
        prev, cur = steps[i - 1], steps[i]
        if not instance.better(instance.objective(cur), instance.objective(prev)):
            return SequenceCheck(False, i, "not-improving")
        if cur not in instance.neighbors(prev):
            return SequenceCheck(False, i, "not-neighbor")
    if require_maximal and instance.has_improving_neighbor(steps[-1]):
        return SequenceCheck(False, len(steps) - 1, "not-maximal")
    return SequenceCheck(True)


@dataclass
class TransitionGraph:
    nodes: list[Solution]
    edges: list[list[int]]
    objectives: list[Fraction] = field(repr=False, default_factory=list)

    def __post_init__(self):
        self.index = {s: i for i, s in enumerate(self.nodes)}
        self.sinks = [i for i, out in enumerate(self.edges) if not out]

    def __len__(self) -> int:
        return len(self.nodes)

    @property
    def edge_count(self) -> int:
        return sum(map(len, self.edges))

    def edge_set(self) -> set[tuple[Solution, Solution]]:
        return {(self.nodes[i], self.nodes[j]) for i, out in enumerate(self.edges) for j in out}

    def topological_order(self) -> list[int] | None:
        """Kahn's algorithm; None when a cycle exists."""
        indeg = [0] * len(self.nodes)
        for out in self.edges:
            for j in out:
                indeg[j] += 1
        queue = deque(i for i, d in enumerate(indeg) if d == 0)
        order = []
        while queue:
            i = queue.popleft()
            order.append(i)
            for j in self.edges[i]:
                indeg[j] -= 1
                if indeg[j] == 0:
                    queue.append(j)
        return order if len(order) == len(self.nodes) else None

    def is_acyclic(self) -> bool:
        return self.topological_order() is not None

    def distances_from(self, src: int) -> dict[int, int]:
        dist = {src: 0}
        queue = deque([src])
        while queue:
            i = queue.popleft()
            for j in self.edges[i]:
                if j not in dist:
                    dist[j] = dist[i] + 1
                    queue.append(j)
        return dist

    def path_sequence(self, path: Sequence[int]) -> ImprovingSequence:
        return ImprovingSequence(tuple(self.nodes[i] for i in path), tuple(self.objectives[i] for i in path))


def build_transition_graph(instance: LocalSearchInstance, solution_budget: int | None = None) -> TransitionGraph:
    """Enumerate every valid solution and every improving move."""
    budget = default_budget() if solution_budget is None else solution_budget
    nodes = []
    for s in instance.solutions():
        nodes.append(s)
        if len(nodes) > budget:
            raise EnumerationOverflow(len(nodes), budget)
    nodes.sort()
    index = {s: i for i, s in enumerate(nodes)}
    objectives = [instance.objective(s) for s in nodes]
    edges = []
    for i, s in enumerate(nodes):
        edges.append(sorted(index[t] for t in instance.improving_neighbors(s)))
    return TransitionGraph(nodes, edges, objectives)
