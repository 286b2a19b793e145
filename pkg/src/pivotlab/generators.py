"""Seeded instance generators shared by the command line and the tests."""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Sequence

import numpy as np

from .problems import (AND, CONST, INPUT, NOT, OR, Certifier, CircuitInstance, Gate, MaxCutInstance, SwopInstance,
                       max_circuit_weights)

TOPOLOGIES = ("path", "cycle", "complete", "random", "empty")


def graph_edges(n: int, topology: str, rng: np.random.Generator | None = None,
                density: float = 0.5) -> tuple[tuple[int, int], ...]:
    if topology == "path":
        return tuple((i, i + 1) for i in range(n - 1))
    if topology == "cycle":
        if n < 3:
            return graph_edges(n, "path")
        return tuple((i, i + 1) for i in range(n - 1)) + ((0, n - 1),)
    if topology == "complete":
        return tuple(itertools.combinations(range(n), 2))
    if topology == "empty":
        return ()
    if topology == "random":
        rng = rng if rng is not None else np.random.default_rng(0)
        return tuple(e for e in itertools.combinations(range(n), 2) if rng.random() < density)
    raise ValueError(f"unknown topology {topology!r}; expected one of {TOPOLOGIES}")


def connected_graphs(n: int) -> list[tuple[tuple[int, int], ...]]:
    """All connected labelled simple graphs on n vertices, edges in sorted order."""
    pairs = list(itertools.combinations(range(n), 2))
    out = []
    for mask in range(1 << len(pairs)):
        edges = tuple(p for i, p in enumerate(pairs) if mask >> i & 1)
        if _connected(n, edges):
            out.append(edges)
    return out


def _connected(n: int, edges) -> bool:
    adj = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    seen, stack = {0}, [0]
    while stack:
        for y in adj[stack.pop()]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == n


def random_weights(rng: np.random.Generator, count: int, lo: int, hi: int, rational: bool = False) -> list[Fraction]:
    out = []
    for _ in range(count):
        w = Fraction(int(rng.integers(lo, hi + 1)))
        if rational:
            w /= int(rng.integers(1, 6))
        out.append(w)
    return out


def random_swop(rng: np.random.Generator, n: int, c: int, kinds: Sequence[str] = ("independent-set",),
                lo: int = 1, hi: int = 20, density: float = 0.4, include_edges: bool = False) -> SwopInstance:
    edges = graph_edges(n, "random", rng, density)
    ground = n + (len(edges) if include_edges else 0)
    ws = random_weights(rng, ground, lo, hi)
    return SwopInstance(n, edges, tuple(ws), tuple(Certifier(k) for k in kinds), c, include_edges=include_edges)


def random_maxcut(rng: np.random.Generator, n: int, lo: int = 1, hi: int = 10, density: float = 0.5) -> MaxCutInstance:
    edges = graph_edges(n, "random", rng, density)
    return MaxCutInstance(n, edges, tuple(int(rng.integers(lo, hi + 1)) for _ in edges))


def random_circuit(rng: np.random.Generator, n_inputs: int, n_gates: int, m: int,
                   weights: Sequence | None = None) -> CircuitInstance:
    """Inputs first, then ``n_gates`` random NOT/AND/OR gates over earlier
    gates; the outputs are distinct gates drawn from the whole list."""
    gates = [Gate(INPUT, (i,)) for i in range(n_inputs)]
    if n_inputs == 0:
        gates.append(Gate(CONST, (0,)))
    for _ in range(n_gates):
        kind = (NOT, AND, OR)[int(rng.integers(3))]
        k = len(gates)
        if kind == NOT:
            args = (int(rng.integers(k)),)
        else:
            arity = min(int(rng.integers(2, 4)), k)
            args = tuple(int(a) for a in rng.choice(k, size=arity, replace=False))
        gates.append(Gate(kind, args))
    if m > len(gates):
        raise ValueError(f"cannot pick {m} distinct outputs from {len(gates)} gates")
    outs = tuple(int(o) for o in rng.choice(len(gates), size=m, replace=False))
    ws = tuple(weights) if weights is not None else max_circuit_weights(m)
    return CircuitInstance(tuple(gates), outs, ws)
