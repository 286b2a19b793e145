"""Concrete problem families: subset weight optimization under c-swaps,
weighted circuits under flips, and max cut under flips."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Sequence

from .core import (
    ArityError,
    LocalSearchInstance,
    Sense,
    Solution,
    coord_bit,
    from_indices,
    to_indices,
)

# -- certifiers ---------------------------------------------------------------

INDEPENDENT_SET = "independent-set"
CLIQUE = "clique"
VERTEX_COVER = "vertex-cover"
ALL_SUBSETS = "all-subsets"
GROUPED = "grouped-all-or-none"
CUT_WITH_BOUNDARY = "cut-with-boundary"
CERTIFIER_KINDS = (INDEPENDENT_SET, CLIQUE, VERTEX_COVER, ALL_SUBSETS, GROUPED, CUT_WITH_BOUNDARY)
# these three admit vertices only; any selected edge element is rejected
VERTEX_ONLY = (INDEPENDENT_SET, CLIQUE, VERTEX_COVER)


@dataclass(frozen=True)
class Certifier:
    kind: str
    groups: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        if self.kind not in CERTIFIER_KINDS:
            raise ValueError(f"unknown certifier {self.kind!r}; expected one of {CERTIFIER_KINDS}")
        if self.groups and self.kind != GROUPED:
            raise ValueError("only the grouped certifier takes groups")
        object.__setattr__(self, "groups", tuple(tuple(g) for g in self.groups))

    @classmethod
    def of(cls, kind: str, groups=()) -> Certifier:
        return cls(kind, tuple(tuple(g) for g in groups))


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floating point weights are not accepted; pass ints, Fractions or 'p/q' strings")
    return Fraction(x)


def _common_scale(weights: Sequence[Fraction]) -> tuple[int, list[int]]:
    den = 1
    for w in weights:
        den = den * w.denominator // math.gcd(den, w.denominator)
    return den, [int(w * den) for w in weights]


def _iter_bits(x: int) -> Iterator[int]:
    """Positions (LSB = 0) of the set bits of ``x``."""
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


# -- subset weight optimization ----------------------------------------------

@dataclass(frozen=True, eq=False)
class SwopInstance(LocalSearchInstance):
    """Subset weight optimization with the c-swap neighborhood.

    The ground set lists the vertices first and then (when ``include_edges``)
    the edges in input order.  Families whose solutions never contain edges,
    such as the weighted independent set targets built by the reductions, set
    ``include_edges=False`` so the ground set is just the vertex set.
    """

    n_vertices: int
    edges: tuple[tuple[int, int], ...]
    weights: tuple[Fraction, ...]
    certifiers: tuple[Certifier, ...]
    c: int
    directed: bool = False
    include_edges: bool = True
    sense: Sense = Sense.MAX
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple((int(u), int(v)) for u, v in self.edges))
        object.__setattr__(self, "weights", tuple(_frac(w) for w in self.weights))
        certs = self.certifiers
        if isinstance(certs, Certifier):
            certs = (certs,)
        object.__setattr__(self, "certifiers", tuple(certs))
        if self.c < 1:
            raise ValueError("swap bound c must be a positive integer")
        for u, v in self.edges:
            if not (0 <= u < self.n_vertices and 0 <= v < self.n_vertices):
                raise ValueError(f"edge ({u}, {v}) references a missing vertex")
        if len(self.weights) != self.ground_size:
            raise ArityError(f"expected {self.ground_size} weights, got {len(self.weights)}")
        kinds = {cert.kind for cert in self.certifiers}
        if CUT_WITH_BOUNDARY in kinds and not self.include_edges:
            raise ValueError("the cut-with-boundary certifier needs edge elements in the ground set")
        for cert in self.certifiers:
            for g in cert.groups:
                for i in g:
                    if not 0 <= i < self.ground_size:
                        raise ValueError(f"group element {i} outside the ground set")
        self._precompute()

    # ground set layout
    @property
    def ground_size(self) -> int:
        return self.n_vertices + (len(self.edges) if self.include_edges else 0)

    @property
    def neighborhood_arity_bound(self) -> str:
        return f"n^{self.c}"

    def vertex_bit(self, v: int) -> int:
        return coord_bit(v, self.ground_size)

    def edge_bit(self, j: int) -> int:
        return coord_bit(self.n_vertices + j, self.ground_size)

    def _precompute(self):
        n = self.ground_size
        nv = self.n_vertices
        vbit = [coord_bit(v, n) for v in range(nv)]
        adj = [0] * nv
        for u, v in self.edges:
            adj[u] |= vbit[v]
            adj[v] |= vbit[u]
        vmask = sum(vbit)
        emask = ((1 << n) - 1) ^ vmask
        den, iw = _common_scale(self.weights)
        # indexed by LSB position
        w_by_pos = [0] * n
        for i in range(n):
            w_by_pos[n - 1 - i] = iw[i]
        adj_by_pos = [0] * n
        for v in range(nv):
            adj_by_pos[n - 1 - v] = adj[v]
        c = self._cache
        c.update(vbit=vbit, adj=adj, vmask=vmask, emask=emask, den=den, iw=iw,
                 w_by_pos=w_by_pos, adj_by_pos=adj_by_pos)
        group_masks = []
        for cert in self.certifiers:
            if cert.kind == GROUPED:
                for g in cert.groups:
                    group_masks.append(sum(coord_bit(i, n) for i in set(g)))
        c["group_masks"] = group_masks

    # certification
    def violated_certifier(self, s: Solution) -> str | None:
        if s < 0 or s >> self.ground_size:
            return "arity"
        for cert in self.certifiers:
            if not self._check(cert.kind, s):
                return cert.kind
        return None

    def _check(self, kind: str, s: Solution) -> bool:
        c = self._cache
        if kind == ALL_SUBSETS:
            return True
        if kind == GROUPED:
            return all((s & g) in (0, g) for g in c["group_masks"])
        if kind in VERTEX_ONLY and s & c["emask"]:
            return False
        vbit, adj = c["vbit"], c["adj"]
        if kind == INDEPENDENT_SET:
            adj_by_pos = c["adj_by_pos"]
            return all(not (s & adj_by_pos[p]) for p in _iter_bits(s))
        if kind == CLIQUE:
            sel = [v for v in range(self.n_vertices) if s & vbit[v]]
            return all(adj[u] & vbit[v] for u, v in itertools.combinations(sel, 2))
        if kind == VERTEX_COVER:
            return all(s & (vbit[u] | vbit[v]) for u, v in self.edges)
        if kind == CUT_WITH_BOUNDARY:
            for j, (u, v) in enumerate(self.edges):
                crossing = bool(s & vbit[u]) != bool(s & vbit[v])
                if bool(s & self.edge_bit(j)) != crossing:
                    return False
            return True
        raise AssertionError(kind)

    # objective
    def objective_key(self, s: Solution) -> int:
        w = self._cache["w_by_pos"]
        return sum(w[p] for p in _iter_bits(s))

    def objective(self, s: Solution) -> Fraction:
        return Fraction(self.objective_key(s), self._cache["den"])

    def weight_of(self, indices) -> Fraction:
        return sum((self.weights[i] for i in indices), Fraction(0))

    # enumeration
    def _independent_set_only(self) -> bool:
        c = self._cache
        if "is_only" not in c:
            c["is_only"] = {cert.kind for cert in self.certifiers} - {ALL_SUBSETS} == {INDEPENDENT_SET}
        return c["is_only"]

    def _maximal_only_ok(self) -> bool:
        c = self._cache
        if "maximal_only" not in c:
            c["maximal_only"] = (self._independent_set_only() and self.sense is Sense.MAX
                                 and all(w > 0 for w in self.weights[: self.n_vertices]))
        return c["maximal_only"]

    def solutions(self) -> Iterator[Solution]:
        if self._independent_set_only():
            return iter(sorted(self._independent_sets()))
        return iter(self._structured_solutions())

    def _independent_sets(self) -> Iterator[Solution]:
        """Branch on the lowest free coordinate: take it (blocking its
        neighbors) or skip it.  Every leaf is a distinct independent set."""
        adj_by_pos = self._cache["adj_by_pos"]
        stack = [(0, self._cache["vmask"])]
        while stack:
            cur, free = stack.pop()
            if not free:
                yield cur
                continue
            p = free.bit_length() - 1
            rest = free ^ (1 << p)
            stack.append((cur, rest))
            stack.append((cur | (1 << p), rest & ~adj_by_pos[p]))

    def count_solutions(self) -> int | None:
        """Number of valid solutions when it can be counted without listing them."""
        if not self._independent_set_only():
            return None
        adj_by_pos = self._cache["adj_by_pos"]
        memo: dict[int, int] = {}

        def count(free: int) -> int:
            if not free:
                return 1
            hit = memo.get(free)
            if hit is None:
                p = free.bit_length() - 1
                rest = free ^ (1 << p)
                hit = memo[free] = count(rest) + count(rest & ~adj_by_pos[p])
            return hit

        return count(self._cache["vmask"])

    def _structured_solutions(self) -> list[Solution]:
        """Product over all-or-none blocks and free coordinates; edge
        coordinates are derived when the boundary certifier fixes them."""
        n = self.ground_size
        kinds = {cert.kind for cert in self.certifiers}
        derived_edges = CUT_WITH_BOUNDARY in kinds
        zero_edges = bool(kinds & set(VERTEX_ONLY))
        blocks: list[int] = []
        covered = 0
        # merge overlapping groups into blocks
        for g in self._cache["group_masks"]:
            merged = g
            rest = []
            for b in blocks:
                if b & merged:
                    merged |= b
                else:
                    rest.append(b)
            blocks = rest + [merged]
        for b in blocks:
            covered |= b
        emask = self._cache["emask"]
        fixed = emask if (derived_edges or zero_edges) else 0
        if derived_edges and covered & emask:
            fixed = 0  # grouped edges: fall back to plain filtering
        units = blocks + [coord_bit(i, n) for i in range(n) if not (covered | fixed) & coord_bit(i, n)]
        out = []
        vbit = self._cache["vbit"]
        for choice in itertools.product((0, 1), repeat=len(units)):
            s = 0
            for take, u in zip(choice, units):
                if take:
                    s |= u
            if derived_edges and fixed:
                for j, (u, v) in enumerate(self.edges):
                    if bool(s & vbit[u]) != bool(s & vbit[v]):
                        s |= self.edge_bit(j)
            if self.violated_certifier(s) is None:
                out.append(s)
        out.sort()
        return out

    def _solution_cache(self, cap: int = 1 << 14) -> list[Solution] | None:
        c = self._cache
        if "solutions" not in c:
            c["solutions"] = None
            if self._independent_set_only():
                sols = []
                for s in self._independent_sets():
                    sols.append(s)
                    if len(sols) > cap:
                        break
                else:
                    c["solutions"] = sorted(sols)
            else:
                units = self._enumeration_width()
                if units <= 16:
                    c["solutions"] = self._structured_solutions()
        return c["solutions"]

    def _enumeration_width(self) -> int:
        n = self.ground_size
        kinds = {cert.kind for cert in self.certifiers}
        covered = 0
        for g in self._cache["group_masks"]:
            covered |= g
        nblocks = len(self._cache["group_masks"])
        emask = self._cache["emask"]
        fixed = emask if kinds & ({CUT_WITH_BOUNDARY} | set(VERTEX_ONLY)) else 0
        free = sum(1 for i in range(n) if not (covered | fixed) & coord_bit(i, n))
        return nblocks + free

    def _mask_count(self) -> int:
        n = self.ground_size
        return sum(math.comb(n, j) for j in range(1, min(self.c, n) + 1))

    # neighborhoods
    def neighbors(self, s: Solution) -> list[Solution]:
        if self._independent_set_only():
            return sorted(self._is_moves(s, improving_only=False))
        cached = self._solution_cache()
        c = self.c
        if cached is not None and len(cached) <= self._mask_count():
            return [t for t in cached if t != s and (t ^ s).bit_count() <= c]
        n = self.ground_size
        out = []
        for j in range(1, min(c, n) + 1):
            for idx in itertools.combinations(range(n), j):
                t = s ^ from_indices(idx, n)
                if self.violated_certifier(t) is None:
                    out.append(t)
        out.sort()
        return out

    def improving_neighbors(self, s: Solution) -> list[Solution]:
        if self._independent_set_only():
            return sorted(self._is_moves(s, improving_only=True))
        return super().improving_neighbors(s)

    def is_maximal_independent(self, s: Solution) -> bool:
        adj_by_pos = self._cache["adj_by_pos"]
        closed = s
        for p in _iter_bits(s):
            closed |= adj_by_pos[p]
        return closed == self._cache["vmask"]

    def has_improving_neighbor(self, s: Solution) -> bool:
        if self._maximal_only_ok() and not self.is_maximal_independent(s):
            return True
        return bool(self.improving_neighbors(s))

    def _is_moves(self, s: Solution, improving_only: bool) -> set[Solution]:
        """Independent sets within symmetric difference c of ``s``.

        A move adds an independent set A of non-members, must drop the
        forced members N(A) and may drop further members.  With
        ``improving_only`` only strictly heavier results are kept and the
        optional removals are pruned by weight.
        """
        c = self.c
        cache = self._cache
        adj_by_pos, w = cache["adj_by_pos"], cache["w_by_pos"]
        maximize = self.sense is Sense.MAX
        sign = 1 if maximize else -1
        vmask = cache["vmask"]
        members = list(_iter_bits(s))
        outside = [p for p in _iter_bits(vmask & ~s)]
        nonneg = all(sign * w[p] >= 0 for p in members)
        out: set[Solution] = set()

        def extras(t: int, budget: int, gain: int, pool: list[int]):
            # t already independent; try dropping up to ``budget`` more members
            if not improving_only or gain > 0:
                out.add(t)
            if budget == 0:
                return
            cands = pool
            if improving_only and nonneg:
                cands = [p for p in pool if sign * w[p] < gain]
            for r in range(1, min(budget, len(cands)) + 1):
                for drop in itertools.combinations(cands, r):
                    g = gain - sign * sum(w[p] for p in drop)
                    if improving_only and g <= 0:
                        continue
                    tt = t
                    for p in drop:
                        tt ^= 1 << p
                    out.add(tt)

        # pure removals
        if not improving_only or not nonneg:
            for r in range(1, min(c, len(members)) + 1):
                for drop in itertools.combinations(members, r):
                    g = -sign * sum(w[p] for p in drop)
                    if improving_only and g <= 0:
                        continue
                    t = s
                    for p in drop:
                        t ^= 1 << p
                    out.add(t)

        def grow(start: int, added: list[int], amask: int, forced: int):
            for idx in range(start, len(outside)):
                p = outside[idx]
                if amask & adj_by_pos[p]:
                    continue
                f2 = forced | (adj_by_pos[p] & s)
                na = len(added) + 1
                nf = f2.bit_count()
                if na + nf > c:
                    continue
                a2 = amask | (1 << p)
                t = (s & ~f2) | a2
                gain = sign * (sum(w[q] for q in _iter_bits(a2)) - sum(w[q] for q in _iter_bits(f2)))
                pool = [q for q in members if not f2 >> q & 1]
                extras(t, c - na - nf, gain, pool)
                if na < c:
                    grow(idx + 1, added + [p], a2, f2)

        grow(0, [], 0, 0)
        out.discard(s)
        return out

    def candidate_sinks(self) -> Iterator[Solution]:
        """Maximal independent sets when every vertex weight is positive
        (a non-maximal set can always add a vertex); otherwise all solutions."""
        if self._maximal_only_ok():
            return iter(sorted(maximal_independent_sets(self)))
        return self.solutions()

    def format_solution(self, s: Solution) -> str:
        names = []
        for i in to_indices(s, self.ground_size):
            if i < self.n_vertices:
                names.append(str(i))
            else:
                u, v = self.edges[i - self.n_vertices]
                names.append(f"e{u}-{v}")
        return "{" + ",".join(names) + "}"

    def with_weights(self, weights: Sequence) -> SwopInstance:
        return SwopInstance(self.n_vertices, self.edges, tuple(weights), self.certifiers, self.c,
                            self.directed, self.include_edges, self.sense)

    def certifier_kinds(self) -> tuple[str, ...]:
        return tuple(cert.kind for cert in self.certifiers)


def maximal_independent_sets(inst: SwopInstance) -> list[Solution]:
    """Bron-Kerbosch with pivoting, run on the complement graph."""
    cache = inst._cache
    vbit, adj = cache["vbit"], cache["adj"]
    pos_of = {b.bit_length() - 1: v for v, b in enumerate(vbit)}
    out = []

    def rec(r: int, p: int, x: int):
        if not p and not x:
            out.append(r)
            return
        # pivot maximizing the number of non-neighbors left in p
        best, best_cnt = None, -1
        for q in _iter_bits(p | x):
            cnt = (p & ~adj[pos_of[q]] & ~(1 << q)).bit_count()
            if cnt > best_cnt:
                best, best_cnt = q, cnt
        branch = p & (adj[pos_of[best]] | (1 << best))
        for q in _iter_bits(branch):
            v = pos_of[q]
            keep = ~(adj[v] | (1 << q))
            rec(r | (1 << q), p & keep, x & keep)
            p &= ~(1 << q)
            x |= 1 << q

    rec(0, cache["vmask"], 0)
    return out


def independent_set_instance(n: int, edges, weights, c: int = 3) -> SwopInstance:
    """Vertex-weighted independent set with the ground set equal to the vertices."""
    return SwopInstance(n, tuple(edges), tuple(weights), (Certifier(INDEPENDENT_SET),), c,
                        include_edges=False)


# -- weighted circuits ---------------------------------------------------------

INPUT, CONST, NOT, AND, OR = "input", "const", "not", "and", "or"
GATE_KINDS = (INPUT, CONST, NOT, AND, OR)


@dataclass(frozen=True)
class Gate:
    kind: str
    args: tuple[int, ...] = ()

    def __post_init__(self):
        if self.kind not in GATE_KINDS:
            raise ValueError(f"unknown gate kind {self.kind!r}")
        object.__setattr__(self, "args", tuple(int(a) for a in self.args))


def max_circuit_weights(m: int, minimize: bool = False) -> tuple[Fraction, ...]:
    """Weights 2^(i-1) turning the outputs into a binary number (negated for Min)."""
    if m < 1:
        raise ValueError("m must be at least 1")
    sign = -1 if minimize else 1
    return tuple(Fraction(sign * (1 << i)) for i in range(m))


def _column(i: int, n: int) -> int:
    """Truth-table column of input coordinate i over all 2^n assignments."""
    b = 1 << (n - 1 - i)
    period = 2 * b
    unit = ((1 << b) - 1) << b
    total = 1 << n
    reps = ((1 << total) - 1) // ((1 << period) - 1)
    return unit * reps


@dataclass(frozen=True, eq=False)
class CircuitInstance(LocalSearchInstance):
    """Boolean circuit with weighted outputs under the single-flip neighborhood.

    Input coordinate ``i`` of a solution is the circuit input x_{i+1}.
    """

    gates: tuple[Gate, ...]
    outputs: tuple[int, ...]
    weights: tuple[Fraction, ...]
    sense: Sense = Sense.MAX
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    TABLE_LIMIT = 16

    def __post_init__(self):
        object.__setattr__(self, "gates", tuple(g if isinstance(g, Gate) else Gate(g[0], tuple(g[1])) for g in self.gates))
        object.__setattr__(self, "outputs", tuple(int(o) for o in self.outputs))
        object.__setattr__(self, "weights", tuple(_frac(w) for w in self.weights))
        if len(self.weights) != len(self.outputs):
            raise ArityError(f"{len(self.outputs)} outputs but {len(self.weights)} weights")
        seen_inputs = set()
        for k, g in enumerate(self.gates):
            if g.kind == INPUT:
                if len(g.args) != 1:
                    raise ValueError(f"gate {k}: an input gate carries exactly its input index")
                seen_inputs.add(g.args[0])
            elif g.kind == CONST:
                if len(g.args) != 1 or g.args[0] not in (0, 1):
                    raise ValueError(f"gate {k}: a constant gate carries 0 or 1")
            else:
                if g.kind == NOT and len(g.args) != 1:
                    raise ValueError(f"gate {k}: NOT takes one argument")
                if g.kind in (AND, OR) and not g.args:
                    raise ValueError(f"gate {k}: {g.kind} needs at least one argument")
                for a in g.args:
                    if not 0 <= a < k:
                        raise ValueError(f"gate {k} references gate {a}, which is not strictly earlier")
        n = len(seen_inputs)
        if seen_inputs != set(range(n)):
            raise ValueError(f"input gates must carry indices 0..{n - 1}, got {sorted(seen_inputs)}")
        for o in self.outputs:
            if not 0 <= o < len(self.gates):
                raise ValueError(f"output references missing gate {o}")
        den, iw = _common_scale(self.weights)
        self._cache.update(n=n, den=den, iw=iw)

    @property
    def n_inputs(self) -> int:
        return self._cache["n"]

    @property
    def m(self) -> int:
        return len(self.outputs)

    @property
    def ground_size(self) -> int:
        return self.n_inputs

    @property
    def neighborhood_arity_bound(self) -> str:
        return "n"

    def violated_certifier(self, s: Solution) -> str | None:
        return None if 0 <= s < (1 << self.n_inputs) else "arity"

    def solutions(self) -> Iterator[Solution]:
        return iter(range(1 << self.n_inputs))

    def _run(self, inputs: Sequence[int], ones: int) -> list[int]:
        vals: list[int] = []
        for g in self.gates:
            k = g.kind
            if k == INPUT:
                vals.append(inputs[g.args[0]])
            elif k == CONST:
                vals.append(ones if g.args[0] else 0)
            elif k == NOT:
                vals.append(ones ^ vals[g.args[0]])
            elif k == AND:
                acc = ones
                for a in g.args:
                    acc &= vals[a]
                vals.append(acc)
            else:
                acc = 0
                for a in g.args:
                    acc |= vals[a]
                vals.append(acc)
        return vals

    def evaluate(self, x) -> tuple[tuple[int, ...], Fraction]:
        """Output bits y_1..y_m and the weighted objective for one input vector."""
        s = self._as_solution(x)
        n = self.n_inputs
        vals = self._run([s >> (n - 1 - i) & 1 for i in range(n)], 1)
        ys = tuple(vals[o] for o in self.outputs)
        obj = sum((w for w, y in zip(self.weights, ys) if y), Fraction(0))
        return ys, obj

    def _as_solution(self, x) -> Solution:
        n = self.n_inputs
        if isinstance(x, int):
            if not 0 <= x < (1 << n):
                raise ArityError(f"input does not fit in {n} bits")
            return x
        if isinstance(x, str):
            x = [int(ch) for ch in x]
        bits = list(x)
        if len(bits) != n:
            raise ArityError(f"expected {n} input bits, got {len(bits)}")
        s = 0
        for b in bits:
            s = (s << 1) | (1 if b else 0)
        return s

    def output_columns(self) -> list[int]:
        """Bit-parallel truth tables of the outputs (bit x = value on input x)."""
        c = self._cache
        if "columns" not in c:
            n = self.n_inputs
            ones = (1 << (1 << n)) - 1
            vals = self._run([_column(i, n) for i in range(n)], ones)
            c["columns"] = [vals[o] for o in self.outputs]
        return c["columns"]

    def objective_table(self) -> list[int] | None:
        """Scaled objective of every input, or None when 2^n is too large."""
        c = self._cache
        if "table" not in c:
            n = self.n_inputs
            if n > self.TABLE_LIMIT:
                c["table"] = None
            else:
                size = 1 << n
                table = [0] * size
                for w, col in zip(c["iw"], self.output_columns()):
                    if not w or not col:
                        continue
                    for x in _iter_bits(col):
                        table[x] += w
                c["table"] = table
        return c["table"]

    def objective_key(self, s: Solution) -> int:
        table = self.objective_table()
        if table is not None:
            return table[s]
        n = self.n_inputs
        vals = self._run([s >> (n - 1 - i) & 1 for i in range(n)], 1)
        return sum(w for w, o in zip(self._cache["iw"], self.outputs) if vals[o])

    def objective(self, s: Solution) -> Fraction:
        return Fraction(self.objective_key(s), self._cache["den"])

    def neighbors(self, s: Solution) -> list[Solution]:
        n = self.n_inputs
        return sorted(s ^ (1 << i) for i in range(n))

    def input_dependencies(self) -> list[int]:
        """Per gate, the bitmask (LSB = input index) of inputs it depends on."""
        deps = []
        for g in self.gates:
            if g.kind == INPUT:
                deps.append(1 << g.args[0])
            elif g.kind == CONST:
                deps.append(0)
            else:
                acc = 0
                for a in g.args:
                    acc |= deps[a]
                deps.append(acc)
        return deps

    def with_weights(self, weights: Sequence) -> CircuitInstance:
        return CircuitInstance(self.gates, self.outputs, tuple(weights), self.sense)


def identity_circuit(n: int, weights=None) -> CircuitInstance:
    gates = [Gate(INPUT, (i,)) for i in range(n)]
    w = max_circuit_weights(n) if weights is None else tuple(weights)
    return CircuitInstance(tuple(gates), tuple(range(n)), w)


def circuit_evaluate(inst: CircuitInstance, x) -> tuple[tuple[int, ...], Fraction]:
    return inst.evaluate(x)


# -- max cut -------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class MaxCutInstance(LocalSearchInstance):
    """Weighted max cut under single-vertex flips.

    Coordinate ``v`` of a solution is 1 iff vertex v lies on side B.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    weights: tuple[int, ...]
    sense: Sense = Sense.MAX
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        object.__setattr__(self, "edges", edges)
        ws = []
        for w in self.weights:
            w = _frac(w)
            if w.denominator != 1 or w < 0:
                raise ValueError(f"max cut weights must be nonnegative integers, got {w}")
            ws.append(int(w))
        object.__setattr__(self, "weights", tuple(ws))
        if len(ws) != len(edges):
            raise ArityError(f"{len(edges)} edges but {len(ws)} weights")
        seen = set()
        for u, v in edges:
            if u == v:
                raise ValueError("max cut graphs must not contain loops")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) references a missing vertex")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ValueError(f"duplicate edge {key}; max cut graphs are simple")
            seen.add(key)
        nbrs = [[] for _ in range(self.n)]
        for j, (u, v) in enumerate(edges):
            nbrs[u].append((v, j))
            nbrs[v].append((u, j))
        self._cache["nbrs"] = nbrs

    @property
    def ground_size(self) -> int:
        return self.n

    @property
    def neighborhood_arity_bound(self) -> str:
        return "n"

    @property
    def max_degree(self) -> int:
        return max((len(x) for x in self._cache["nbrs"]), default=0)

    def neighbors_of(self, v: int) -> list[int]:
        return sorted(u for u, _ in self._cache["nbrs"][v])

    def edge_weight(self, u: int, v: int) -> int:
        for x, j in self._cache["nbrs"][u]:
            if x == v:
                return self.weights[j]
        raise KeyError((u, v))

    def side_b(self, s: Solution, v: int) -> bool:
        return bool(s >> (self.n - 1 - v) & 1)

    def partition(self, s: Solution) -> tuple[frozenset, frozenset]:
        b = frozenset(to_indices(s, self.n))
        return frozenset(range(self.n)) - b, b

    def from_partition(self, a, b=None) -> Solution:
        if b is None:
            b = set(range(self.n)) - set(a)
        if set(a) & set(b) or set(a) | set(b) != set(range(self.n)):
            raise ValueError("not a partition of the vertex set")
        return from_indices(b, self.n)

    def violated_certifier(self, s: Solution) -> str | None:
        return None if 0 <= s < (1 << self.n) else "arity"

    def solutions(self) -> Iterator[Solution]:
        return iter(range(1 << self.n))

    def objective_key(self, s: Solution) -> int:
        n = self.n
        return sum(w for (u, v), w in zip(self.edges, self.weights)
                   if (s >> (n - 1 - u) & 1) != (s >> (n - 1 - v) & 1))

    def objective(self, s: Solution) -> Fraction:
        return Fraction(self.objective_key(s))

    def neighbors(self, s: Solution) -> list[Solution]:
        return sorted(s ^ (1 << i) for i in range(self.n))

    def flip(self, s: Solution, v: int) -> Solution:
        return s ^ coord_bit(v, self.n)

    def flip_gain(self, s: Solution, v: int) -> int:
        same = other = 0
        for u, j in self._cache["nbrs"][v]:
            if self.side_b(s, u) == self.side_b(s, v):
                same += self.weights[j]
            else:
                other += self.weights[j]
        return same - other


def cut_value(inst: MaxCutInstance, partition) -> int:
    """Total weight of crossing edges; ``partition`` is a solution int, an
    (A, B) pair of vertex sets, or a per-vertex side sequence ('A'/'B' or 0/1)."""
    if isinstance(partition, int):
        s = partition
    elif isinstance(partition, tuple) and len(partition) == 2 and all(isinstance(p, (set, frozenset)) for p in partition):
        s = inst.from_partition(*partition)
    else:
        sides = list(partition)
        if len(sides) != inst.n:
            raise ArityError(f"expected {inst.n} sides")
        s = from_indices([v for v, side in enumerate(sides) if side in (1, "B", True)], inst.n)
    return inst.objective_key(s)


@dataclass(frozen=True)
class MaxCutEmbedding:
    """Max cut expressed as a subset weight problem with boundary edges."""

    source: MaxCutInstance
    target: SwopInstance
    delta: int

    def companion(self, v: int, i: int) -> int:
        return self.source.n + v * self.delta + i

    def to_swop(self, s: Solution) -> Solution:
        """Side-B vertices, their companions and the cut edges."""
        src, tgt = self.source, self.target
        idx = []
        for v in range(src.n):
            if src.side_b(s, v):
                idx.append(v)
                idx.extend(self.companion(v, i) for i in range(self.delta))
        for j, (u, v) in enumerate(src.edges):
            if src.side_b(s, u) != src.side_b(s, v):
                idx.append(tgt.n_vertices + j)
        return from_indices(idx, tgt.ground_size)

    def to_cut(self, t: Solution) -> Solution:
        tgt = self.target
        return from_indices([v for v in range(self.source.n) if t & tgt.vertex_bit(v)], self.source.n)


def embed_maxcut_as_swop(inst: MaxCutInstance) -> MaxCutEmbedding:
    """Each vertex gets Delta isolated companions that must move with it, so a
    (2 Delta + 1)-swap can only flip one original vertex."""
    delta = inst.max_degree
    if delta < 1:
        raise ValueError("the embedding needs at least one edge (maximum degree >= 1)")
    n = inst.n
    nv = n + n * delta
    groups = tuple((v,) + tuple(n + v * delta + i for i in range(delta)) for v in range(n))
    weights = (0,) * nv + tuple(inst.weights)
    target = SwopInstance(nv, inst.edges, weights,
                          (Certifier(CUT_WITH_BOUNDARY), Certifier(GROUPED, groups)), 2 * delta + 1)
    return MaxCutEmbedding(inst, target, delta)
