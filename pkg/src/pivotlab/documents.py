"""Versioned JSON documents for instances, traces, bundles and reports.

Canonical form is compact JSON with sorted keys.  Rationals are written as
"p/q" strings (plain "p" when integral), big integers as decimal strings,
and solutions as bitstrings with coordinate 0 first.  Parsing rejects any
field it does not know, so emit(parse(text)) == text on canonical input.
"""

from __future__ import annotations

import hashlib
import json
from fractions import Fraction
from typing import Any

from .core import ImprovingSequence, LocalSearchInstance, Sense, Solution, from_bitstring, to_bitstring
from .problems import Certifier, CircuitInstance, Gate, MaxCutInstance, SwopInstance
from .reductions.mis_wis import MulticoloredGraph

VERSION = 1


class DocumentError(ValueError):
    """A document that does not parse or does not match its schema."""


# -- scalars ------------------------------------------------------------------

def emit_rational(x) -> str:
    return str(Fraction(x))


def parse_rational(s: Any, where: str) -> Fraction:
    if not isinstance(s, str):
        raise DocumentError(f"{where}: expected a 'p/q' string, got {type(s).__name__}")
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise DocumentError(f"{where}: {s!r} is not a rational") from exc


def parse_integer(s: Any, where: str) -> int:
    if not isinstance(s, str) or not s.lstrip("-").isdigit():
        raise DocumentError(f"{where}: expected a decimal integer string, got {s!r}")
    return int(s)


def emit_solution(s: Solution, n: int) -> str:
    return to_bitstring(s, n)


def parse_solution(bits: Any, n: int, where: str = "solution") -> Solution:
    if not isinstance(bits, str) or len(bits) != n or set(bits) - {"0", "1"}:
        raise DocumentError(f"{where}: expected a bitstring of length {n}, got {bits!r}")
    return from_bitstring(bits)


# -- canonical text -------------------------------------------------------------

def canonical(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":"), ensure_ascii=True)


def digest(doc: dict) -> str:
    return "sha256:" + hashlib.sha256(canonical(doc).encode("ascii")).hexdigest()


def loads(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise DocumentError("a document must be a JSON object")
    if doc.get("version") != VERSION:
        raise DocumentError(f"unsupported or missing version {doc.get('version')!r}; expected {VERSION}")
    if not isinstance(doc.get("kind"), str):
        raise DocumentError("missing document kind")
    return doc


def _fields(doc: dict, required: set[str], optional: set[str] = frozenset()) -> None:
    keys = set(doc)
    missing = required - keys
    if missing:
        raise DocumentError(f"{doc.get('kind')} document is missing {sorted(missing)}")
    unknown = keys - required - optional
    if unknown:
        raise DocumentError(f"{doc.get('kind')} document has unknown fields {sorted(unknown)}")


def _int(x: Any, where: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise DocumentError(f"{where}: expected an integer")
    return x


def _edges(xs: Any, where: str = "edges") -> tuple[tuple[int, int], ...]:
    if not isinstance(xs, list) or any(not isinstance(e, list) or len(e) != 2 for e in xs):
        raise DocumentError(f"{where}: expected a list of [u, v] pairs")
    return tuple((_int(u, where), _int(v, where)) for u, v in xs)


def _sense(x: Any) -> Sense:
    try:
        return Sense(x)
    except ValueError as exc:
        raise DocumentError(f"sense must be 'max' or 'min', got {x!r}") from exc


# -- instances ---------------------------------------------------------------------

INSTANCE_KINDS = ("swop", "circuit", "maxcut", "multicolored-graph")


def instance_to_doc(inst) -> dict:
    if isinstance(inst, SwopInstance):
        return {
            "kind": "swop", "version": VERSION,
            "n_vertices": inst.n_vertices,
            "edges": [list(e) for e in inst.edges],
            "weights": [emit_rational(w) for w in inst.weights],
            "certifiers": [{"kind": c.kind, "groups": [list(g) for g in c.groups]} for c in inst.certifiers],
            "c": inst.c,
            "directed": inst.directed,
            "include_edges": inst.include_edges,
            "sense": inst.sense.value,
        }
    if isinstance(inst, CircuitInstance):
        return {
            "kind": "circuit", "version": VERSION,
            "gates": [[g.kind, list(g.args)] for g in inst.gates],
            "outputs": list(inst.outputs),
            "weights": [emit_rational(w) for w in inst.weights],
            "sense": inst.sense.value,
        }
    if isinstance(inst, MaxCutInstance):
        return {
            "kind": "maxcut", "version": VERSION,
            "n": inst.n,
            "edges": [list(e) for e in inst.edges],
            "weights": [str(w) for w in inst.weights],
            "sense": inst.sense.value,
        }
    if isinstance(inst, MulticoloredGraph):
        return {
            "kind": "multicolored-graph", "version": VERSION,
            "classes": [list(c) for c in inst.classes],
            "edges": [list(e) for e in inst.edges],
        }
    raise TypeError(f"no document form for {type(inst).__name__}")


def instance_from_doc(doc: dict):
    kind = doc.get("kind")
    try:
        if kind == "swop":
            _fields(doc, {"kind", "version", "n_vertices", "edges", "weights", "certifiers", "c", "directed",
                          "include_edges", "sense"})
            certs = []
            for c in doc["certifiers"]:
                if not isinstance(c, dict):
                    raise DocumentError("certifiers must be objects")
                _fields(c, {"kind", "groups"})
                certs.append(Certifier.of(c["kind"], [[_int(i, "group") for i in g] for g in c["groups"]]))
            return SwopInstance(
                _int(doc["n_vertices"], "n_vertices"), _edges(doc["edges"]),
                tuple(parse_rational(w, "weights") for w in doc["weights"]), tuple(certs),
                _int(doc["c"], "c"), bool(doc["directed"]), bool(doc["include_edges"]), _sense(doc["sense"]))
        if kind == "circuit":
            _fields(doc, {"kind", "version", "gates", "outputs", "weights", "sense"})
            gates = []
            for g in doc["gates"]:
                if not isinstance(g, list) or len(g) != 2 or not isinstance(g[1], list):
                    raise DocumentError("gates must be [kind, [args]] pairs")
                gates.append(Gate(g[0], tuple(_int(a, "gate argument") for a in g[1])))
            return CircuitInstance(tuple(gates), tuple(_int(o, "outputs") for o in doc["outputs"]),
                                   tuple(parse_rational(w, "weights") for w in doc["weights"]), _sense(doc["sense"]))
        if kind == "maxcut":
            _fields(doc, {"kind", "version", "n", "edges", "weights", "sense"})
            return MaxCutInstance(_int(doc["n"], "n"), _edges(doc["edges"]),
                                  tuple(parse_integer(w, "weights") for w in doc["weights"]), _sense(doc["sense"]))
        if kind == "multicolored-graph":
            _fields(doc, {"kind", "version", "classes", "edges"})
            g = MulticoloredGraph(tuple(tuple(_int(v, "classes") for v in c) for c in doc["classes"]),
                                  _edges(doc["edges"]))
            g.validate()
            return g
    except DocumentError:
        raise
    except (ValueError, TypeError) as exc:
        raise DocumentError(f"invalid {kind} instance: {exc}") from exc
    raise DocumentError(f"unknown instance kind {kind!r}; expected one of {INSTANCE_KINDS}")


# -- traces ------------------------------------------------------------------------

def trace_to_doc(instance: LocalSearchInstance, instance_hash: str, seq: ImprovingSequence, outcome: str,
                 solver: str, rule: str) -> dict:
    n = instance.ground_size
    steps = []
    for a, b in zip(seq.steps, seq.steps[1:]):
        moved = [i for i in range(n) if (a ^ b) >> (n - 1 - i) & 1]
        steps.append({"move": moved, "solution": emit_solution(b, n), "objective": emit_rational(instance.objective(b))})
    return {
        "kind": "trace", "version": VERSION,
        "instance": instance_hash,
        "start": emit_solution(seq.steps[0], n),
        "start_objective": emit_rational(instance.objective(seq.steps[0])),
        "steps": steps,
        "outcome": outcome,
        "solver": solver,
        "rule": rule,
    }


def trace_from_doc(doc: dict, instance: LocalSearchInstance) -> list[Solution]:
    """Solutions of a trace, checking that each move descriptor and objective
    agrees with the instance."""
    _fields(doc, {"kind", "version", "instance", "start", "start_objective", "steps", "outcome", "solver", "rule"})
    if doc["kind"] != "trace":
        raise DocumentError(f"expected a trace document, got {doc['kind']!r}")
    n = instance.ground_size
    cur = parse_solution(doc["start"], n, "start")
    out = [cur]
    for i, st in enumerate(doc["steps"]):
        if not isinstance(st, dict):
            raise DocumentError(f"step {i} must be an object")
        _fields(st, {"move", "solution", "objective"})
        nxt = parse_solution(st["solution"], n, f"step {i}")
        moved = [i for i in range(n) if (cur ^ nxt) >> (n - 1 - i) & 1]
        if moved != st["move"]:
            raise DocumentError(f"step {i}: move descriptor {st['move']} does not match the solutions")
        if instance.is_valid(nxt) and parse_rational(st["objective"], f"step {i}") != instance.objective(nxt):
            raise DocumentError(f"step {i}: recorded objective differs from the instance")
        out.append(nxt)
        cur = nxt
    return out


# -- reports -----------------------------------------------------------------------

def report_to_doc(report, n_source: int, n_target: int, bundle_hash: str, checks: list[str]) -> dict:
    conds = {}
    for name, c in report.conditions.items():
        cex = None
        if c.counterexample is not None:
            # embed-psi pairs a source solution with its image; the rest are target solutions
            widths = [n_source, n_target] if name == "embed-psi" else [n_target] * len(c.counterexample)
            cex = [emit_solution(x, w) for x, w in zip(c.counterexample, widths)]
        conds[name] = {"ok": c.ok, "counterexample": cex, "detail": c.detail}
    return {
        "kind": "tightness-report", "version": VERSION,
        "bundle": bundle_hash,
        "checks": checks,
        "conditions": conds,
        "ok": report.ok,
        "source_solutions": str(report.source_solutions),
        "target_solutions": str(report.target_solutions),
        "r_size": str(report.r_size),
    }


def read_document(path) -> dict:
    with open(path, encoding="ascii") as fh:
        return loads(fh.read())


def write_document(path, doc: dict) -> str:
    text = canonical(doc)
    with open(path, "w", encoding="ascii") as fh:
        fh.write(text)
    return text
