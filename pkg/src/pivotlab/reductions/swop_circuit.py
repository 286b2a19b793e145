"""Reduction from subset weight optimization under c-swaps to Max-Circuit
under flips.

A target string has length 2n+2 and is read as ``a . b . c1 c2`` with two
length-n halves and two control bits.  Structured strings encode a position
on a slow walk from a solution u to an improving swap partner w: first the
second half moves from u to w one bit at a time (control 00), then the
control switches to 10, then to 11, and then the first half catches up, and
finally the control goes back to 00.  Every other string is unstructured and
only drifts toward a fixed structured string.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from ..circuits import CircuitBuilder, Word
from ..core import Sense, Solution, coord_bit
from ..problems import (ALL_SUBSETS, CLIQUE, CUT_WITH_BOUNDARY, GROUPED, INDEPENDENT_SET, VERTEX_COVER,
                        VERTEX_ONLY, CircuitInstance, SwopInstance, max_circuit_weights)
from .bundle import ReductionBundle

FORMS = ("uu00", "uv00", "uw10", "vu11", "uu10", "unstructured")


@dataclass(frozen=True)
class StructuredString:
    raw: int
    n: int
    form: str
    u: Solution | None = None
    v: Solution | None = None
    w: Solution | None = None

    @property
    def structured(self) -> bool:
        return self.form != "unstructured"

    def bits(self) -> str:
        return format(self.raw, f"0{2 * self.n + 2}b")


def split(x: int, n: int) -> tuple[int, int, int, int]:
    mask = (1 << n) - 1
    return x >> (n + 2), (x >> 2) & mask, (x >> 1) & 1, x & 1


def join(a: int, b: int, c1: int, c2: int, n: int) -> int:
    return (a << (n + 2)) | (b << 2) | (c1 << 1) | c2


def walk_strings(u: Solution, w: Solution, n: int) -> list[Solution]:
    """The H(u, w) strings met while turning u into w one differing
    coordinate at a time, lowest coordinate first; w is the last entry."""
    out, cur = [], u
    for i in range(n):
        bit = coord_bit(i, n)
        if (u ^ w) & bit:
            cur ^= bit
            out.append(cur)
    return out


class _Oracle:
    """Signed integer weights and the improving-swap relation of a SWOP instance."""

    def __init__(self, inst: SwopInstance):
        self.inst = inst
        self.n = inst.ground_size
        sign = 1 if inst.sense is Sense.MAX else -1
        self.sw = [sign * w for w in inst._cache["iw"]]
        self.neg = sum(w for w in self.sw if w < 0)
        self._better: dict[int, list[int]] = {}
        self._worse: dict[int, list[int]] = {}

    def weight(self, s: Solution) -> int:
        """Shifted weight, always >= 0."""
        return sum(self.sw[i] for i in range(self.n) if s & coord_bit(i, self.n)) - self.neg

    def valid(self, s: Solution) -> bool:
        return self.inst.is_valid(s)

    def better(self, u: Solution) -> list[Solution]:
        """B(u): solutions reached from u by an improving swap."""
        if u not in self._better:
            wu = self.weight(u)
            self._better[u] = [t for t in self.inst.neighbors(u) if self.weight(t) > wu]
        return self._better[u]

    def worse(self, u: Solution) -> list[Solution]:
        """Solutions w with u in B(w)."""
        if u not in self._worse:
            wu = self.weight(u)
            self._worse[u] = [t for t in self.inst.neighbors(u) if self.weight(t) < wu]
        return self._worse[u]

    def smallest_solution(self) -> Solution:
        for s in self.inst.solutions():
            return s
        raise ValueError("the source instance has no valid solution")


def _oracle(inst: SwopInstance) -> _Oracle:
    o = inst._cache.get("circuit_oracle")
    if o is None:
        o = inst._cache["circuit_oracle"] = _Oracle(inst)
    return o


def decode_structured(raw, inst: SwopInstance) -> StructuredString:
    """Classify a target string; forms are tried in the order of ``FORMS``."""
    n = inst.ground_size
    if isinstance(raw, str):
        if len(raw) != 2 * n + 2:
            raise ValueError(f"expected a string of length {2 * n + 2}, got {len(raw)}")
        raw = int(raw, 2)
    if not 0 <= raw < 1 << (2 * n + 2):
        raise ValueError("string wider than 2n+2 bits")
    o = _oracle(inst)
    a, b, c1, c2 = split(raw, n)
    if (c1, c2) == (0, 0) and o.valid(a):
        if a == b:
            return StructuredString(raw, n, "uu00", a, a)
        for w in o.better(a):
            if b in walk_strings(a, w, n):
                return StructuredString(raw, n, "uv00", a, b, w)
    if (c1, c2) == (1, 0) and o.valid(a):
        if a == b:
            return StructuredString(raw, n, "uu10", a, a)
        if b in o.better(a):
            return StructuredString(raw, n, "uw10", a, None, b)
    if (c1, c2) == (1, 1) and o.valid(b):
        for w in o.worse(b):
            if a == w or a in walk_strings(w, b, n):
                return StructuredString(raw, n, "vu11", b, a, w)
    return StructuredString(raw, n, "unstructured")


def _base_value(inst: SwopInstance, u: Solution) -> int:
    n = inst.ground_size
    return (2 * n + 4) * _oracle(inst).weight(u)


def h_value(raw: int, inst: SwopInstance) -> int:
    """Output value of the target circuit, computed directly.

    Structured values are (2n+4) times the shifted weight plus 3n+5 plus the
    offset of the form, so every structured value exceeds 2n+2, the largest
    unstructured value.
    """
    n = inst.ground_size
    d = decode_structured(raw, inst)
    base = 3 * n + 5
    if d.form == "uu00":
        return _base_value(inst, d.u) + base
    if d.form == "uv00":
        return _base_value(inst, d.u) + base + (d.u ^ d.v).bit_count()
    if d.form == "uw10":
        return _base_value(inst, d.u) + base + n + 1
    if d.form == "uu10":
        return _base_value(inst, d.u) + base - 1
    if d.form == "vu11":
        return _base_value(inst, d.u) + base - 2 - (d.u ^ d.v).bit_count()
    z = _oracle(inst).smallest_solution()
    return 2 * n + 2 - (raw ^ join(z, z, 0, 0, n)).bit_count()


def psi_value(raw: int, inst: SwopInstance) -> Solution:
    d = decode_structured(raw, inst)
    if d.structured:
        return d.u
    return _oracle(inst).smallest_solution()


def structured_strings(inst: SwopInstance) -> Iterator[int]:
    """Every structured string, generated from the source solutions."""
    n = inst.ground_size
    o = _oracle(inst)
    seen = set()
    for u in inst.solutions():
        cands = [join(u, u, 0, 0, n), join(u, u, 1, 0, n)]
        for w in o.better(u):
            cands += [join(u, v, 0, 0, n) for v in walk_strings(u, w, n)]
            cands.append(join(u, w, 1, 0, n))
        for w in o.worse(u):
            cands += [join(v, u, 1, 1, n) for v in [w] + walk_strings(w, u, n)]
        for x in cands:
            if x not in seen:
                seen.add(x)
                yield x


# -- circuit ----------------------------------------------------------------

class _HCircuit:
    def __init__(self, inst: SwopInstance):
        self.inst = inst
        self.n = n = inst.ground_size
        self.cb = CircuitBuilder(2 * n + 2)
        self.a = [self.cb.input(i) for i in range(n)]
        self.b = [self.cb.input(n + i) for i in range(n)]
        self.c1 = self.cb.input(2 * n)
        self.c2 = self.cb.input(2 * n + 1)
        self.o = _oracle(inst)
        self.adj = [[False] * inst.n_vertices for _ in range(inst.n_vertices)]
        for u, v in inst.edges:
            self.adj[u][v] = self.adj[v][u] = True

    def valid(self, bits: list[int], flip: frozenset = frozenset()) -> int:
        """Certification circuit for ``bits`` with the coordinates in ``flip`` inverted."""
        cb, inst = self.cb, self.inst

        def lit(i: int, positive: bool = True) -> int:
            return cb.literal(bits[i], positive != (i in flip))

        nv = inst.n_vertices
        clauses = []
        for cert in inst.certifiers:
            kind = cert.kind
            if kind == ALL_SUBSETS:
                continue
            if kind == GROUPED:
                for g in cert.groups:
                    g = sorted(set(g))
                    clauses.append(cb.or_(cb.and_(*(lit(i) for i in g)), cb.and_(*(lit(i, False) for i in g))))
                continue
            if kind in VERTEX_ONLY:
                clauses += [lit(i, False) for i in range(nv, self.n)]
            if kind == INDEPENDENT_SET:
                clauses += [cb.or_(lit(u, False), lit(v, False)) for u, v in inst.edges if u != v]
            elif kind == CLIQUE:
                clauses += [cb.or_(lit(u, False), lit(v, False))
                            for u, v in itertools.combinations(range(nv), 2) if not self.adj[u][v]]
            elif kind == VERTEX_COVER:
                clauses += [cb.or_(lit(u), lit(v)) for u, v in inst.edges]
            elif kind == CUT_WITH_BOUNDARY:
                for j, (u, v) in enumerate(inst.edges):
                    clauses.append(cb.xnor(lit(nv + j), cb.xor(lit(u), lit(v))))
        return cb.and_(*clauses)

    def weight_word(self, bits: list[int]) -> Word:
        cb = self.cb
        parts = []
        for i, w in enumerate(self.o.sw):
            if w > 0:
                parts.append(cb.gate_word(w, bits[i]))
            elif w < 0:
                parts.append(cb.gate_word(-w, cb.not_(bits[i])))
        return cb.add_many(parts)

    def gain_sign(self, bits: list[int], mask: tuple[int, ...], positive: bool) -> int:
        """1 iff flipping ``mask`` in ``bits`` raises (positive) or lowers the weight."""
        cb = self.cb
        terms = []
        for pattern in itertools.product((0, 1), repeat=len(mask)):
            g = sum(self.o.sw[i] * (1 - 2 * p) for i, p in zip(mask, pattern))
            if (g > 0) if positive else (g < 0):
                terms.append(cb.and_(*(cb.literal(bits[i], bool(p)) for i, p in zip(mask, pattern))))
        return cb.or_(*terms)

    def diff_is(self, d: list[int], coords) -> int:
        coords = set(coords)
        return self.cb.and_(*(self.cb.literal(d[i], i in coords) for i in range(self.n)))

    def build(self) -> CircuitInstance:
        cb, n, a, b = self.cb, self.n, self.a, self.b
        c = min(self.inst.c, n)
        d = [cb.xor(x, y) for x, y in zip(a, b)]
        eq = cb.and_(*(cb.not_(x) for x in d))
        va, vb = self.valid(a), self.valid(b)
        k00 = cb.and_(cb.not_(self.c1), cb.not_(self.c2))
        k10 = cb.and_(self.c1, cb.not_(self.c2))
        k11 = cb.and_(self.c1, self.c2)
        prefix_terms, full_terms, suffix_terms = [], [], []
        for size in range(1, c + 1):
            for mask in itertools.combinations(range(n), size):
                flip = frozenset(mask)
                up = cb.and_(self.valid(a, flip), self.gain_sign(a, mask, True))
                down = cb.and_(self.valid(b, flip), self.gain_sign(b, mask, False))
                for k in range(1, size + 1):
                    prefix_terms.append(cb.and_(up, self.diff_is(d, mask[:k])))
                full_terms.append(cb.and_(up, self.diff_is(d, mask)))
                for k in range(size + 1):
                    suffix_terms.append(cb.and_(down, self.diff_is(d, mask[k:])))
        s_uu00 = cb.and_(k00, va, eq)
        s_uv00 = cb.and_(k00, va, cb.or_(*prefix_terms))
        s_uu10 = cb.and_(k10, va, eq)
        s_uw10 = cb.and_(k10, va, cb.or_(*full_terms))
        s_vu11 = cb.and_(k11, vb, cb.or_(*suffix_terms))
        s_any = cb.or_(s_uu00, s_uv00, s_uu10, s_uw10, s_vu11)
        s_none = cb.not_(s_any)
        scale = 2 * n + 4
        wa = cb.mul_const(self.weight_word(a), scale)
        wb = cb.mul_const(self.weight_word(b), scale)
        hd = cb.popcount(d)
        base = 3 * n + 5
        z = self.o.smallest_solution()
        zbits = join(z, z, 0, 0, n)
        total = 2 * n + 2
        xs = a + b + [self.c1, self.c2]
        dist = cb.popcount([cb.literal(x, not zbits >> (total - 1 - i) & 1) for i, x in enumerate(xs)])
        cases = [
            (s_uu00, cb.add(wa, cb.const_word(base))),
            (s_uv00, cb.add(wa, cb.add(cb.const_word(base), hd))),
            (s_uu10, cb.add(wa, cb.const_word(base - 1))),
            (s_uw10, cb.add(wa, cb.const_word(base + n + 1))),
            (s_vu11, cb.add(wb, cb.sub(cb.const_word(base - 2), hd))),
            (s_none, cb.sub(cb.const_word(2 * n + 2), dist)),
        ]
        out = cb.trim(cb.select(cases))
        return cb.build(out, max_circuit_weights(len(out)))


def build_h_circuit(inst: SwopInstance) -> CircuitInstance:
    return _HCircuit(inst).build()


def reduce_swop_to_maxcircuit(inst: SwopInstance) -> ReductionBundle:
    """Circuit over 2n+2 inputs whose binary output is ``h_value``.

    Weights are integer-scaled by their common denominator and sign-flipped
    for minimization, which leaves every comparison intact.
    """
    n = inst.ground_size
    target = build_h_circuit(inst)
    o = _oracle(inst)
    o.smallest_solution()

    def embed(u: Solution) -> Solution:
        return join(u, u, 0, 0, n)

    return ReductionBundle(
        name="swop-to-maxcircuit",
        source=inst,
        target=target,
        psi=lambda x: psi_value(x, inst),
        embed=embed,
        r_member=lambda x: decode_structured(x, inst).structured,
        tightness=4 * inst.c + 4,
        tightness_expr="4c+4",
        metric="neighborhood",
        r_nodes=lambda: structured_strings(inst),
        meta={"z0": o.smallest_solution()},
    )
