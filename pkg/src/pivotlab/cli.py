"""Command line: generate, reduce, solve, replay, export-dot and verify.

Exit codes: 0 ok, 1 usage or parse error, 2 resource limit, 3 promise
violated, 4 verification failed.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction
from pathlib import Path

import numpy as np

from . import documents as docs
from .core import (CertificationError, EnumerationOverflow, PivotingRule, Solution, build_transition_graph,
                   default_budget, to_bitstring, verify_improving_sequence)
from .generators import TOPOLOGIES, graph_edges, random_circuit
from .problems import (CERTIFIER_KINDS, CUT_WITH_BOUNDARY, Certifier, CircuitInstance, MaxCutInstance, SwopInstance,
                       identity_circuit, max_circuit_weights)
from .reductions import (InputContractError, MulticoloredGraph, PartitionBudgetExceeded, reduce_maxcut_to_wis,
                         reduce_mis_to_wis_pivot, reduce_swop_to_maxcircuit)
from .reductions.swop_circuit import FORMS
from .solvers import (BUDGET_EXHAUSTED, DEFAULT_STEP_BUDGET, LOCAL_OPTIMUM, PROMISE_VIOLATED, InvariantViolation,
                      ResourceError, circuit_output_bounded_solve, fpt_distinct_weights_solve, pivot_search_bounded,
                      standard_local_search)
from .verify import ConditionResult, TightnessReport, check_l_tight, check_tight_reduction

EXIT_OK, EXIT_USAGE, EXIT_RESOURCE, EXIT_PROMISE, EXIT_VERIFY = 0, 1, 2, 3, 4

MAX_VERTICES = 24
MAX_CIRCUIT_INPUTS = 24
MAX_GATES = 10_000

REDUCTIONS = ("maxcut-to-wis", "swop-to-circuit", "mis-to-wis-pivot")
REDUCTION_SOURCE = {"maxcut-to-wis": "maxcut", "swop-to-circuit": "swop", "mis-to-wis-pivot": "multicolored-graph"}
SOLVERS = ("standard", "pivot-bounded", "fpt-distinct-weights", "circuit-output-bounded")


class UsageError(Exception):
    pass


class Verification(Exception):
    pass


def _out(text: str = "") -> None:
    sys.stdout.write(text + "\n")


def _err(text: str) -> None:
    sys.stderr.write(f"pivotlab: {text}\n")


# -- parsing helpers ------------------------------------------------------------------

def _int_list(text: str, what: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise UsageError(f"{what}: expected comma separated integers, got {text!r}") from exc


def _rational_list(text: str, what: str) -> list[Fraction]:
    try:
        return [Fraction(x.strip()) for x in text.split(",") if x.strip()]
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"{what}: expected comma separated rationals, got {text!r}") from exc


def _edge_list(text: str) -> list[tuple[int, int]]:
    out = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        try:
            u, v = part.split("-")
            out.append((int(u), int(v)))
        except ValueError as exc:
            raise UsageError(f"edges: expected items like 0-1, got {part!r}") from exc
    return out


def _load(path: str) -> dict:
    if not Path(path).is_file():
        raise UsageError(f"no such file: {path}")
    try:
        return docs.read_document(path)
    except (OSError, UnicodeDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc


def _load_instance(path: str):
    doc = _load(path)
    return docs.instance_from_doc(doc), docs.digest(doc)


def _write(path: str | None, doc: dict) -> None:
    text = docs.canonical(doc)
    if path is None or path == "-":
        _out(text)
    else:
        Path(path).write_text(text, encoding="ascii")


def _budget(args) -> int:
    return args.budget if getattr(args, "budget", None) is not None else default_budget()


# -- generate ----------------------------------------------------------------------------

def _weights_for(args, count: int, rng: np.random.Generator) -> list[Fraction]:
    if args.unit_weights:
        return [Fraction(1)] * count
    if args.random_weights:
        lo, hi = args.random_weights
        if lo > hi:
            raise UsageError("--random-weights needs LO <= HI")
        return [Fraction(int(rng.integers(lo, hi + 1))) for _ in range(count)]
    if args.weights:
        ws = _rational_list(args.weights, "--weights")
        if len(ws) == 1:
            return ws * count
        if len(ws) != count:
            raise UsageError(f"--weights lists {len(ws)} values but {count} are needed")
        return ws
    return [Fraction(1)] * count


def _graph_for(args, rng: np.random.Generator) -> tuple[int, list[tuple[int, int]]]:
    n, topology = args.n, args.graph
    for flag in ("cycle", "path", "complete"):
        val = getattr(args, flag)
        if val is not None:
            n, topology = val, flag
    if n is None:
        raise UsageError("give the vertex count with --n (or --cycle/--path/--complete N)")
    if not 1 <= n <= MAX_VERTICES:
        raise UsageError(f"vertex count must lie in [1, {MAX_VERTICES}], got {n}")
    if args.edges is not None:
        return n, _edge_list(args.edges)
    if not 0 <= args.density <= 1:
        raise UsageError("--density must lie in [0, 1]")
    return n, list(graph_edges(n, topology, rng, args.density))


def cmd_generate(args) -> int:
    rng = np.random.default_rng(args.seed)
    if args.kind == "maxcut":
        n, edges = _graph_for(args, rng)
        ws = _weights_for(args, len(edges), rng)
        if any(w.denominator != 1 or w < 0 for w in ws):
            raise UsageError("max cut weights must be nonnegative integers")
        inst = MaxCutInstance(n, tuple(edges), tuple(int(w) for w in ws))
    elif args.kind == "swop":
        n, edges = _graph_for(args, rng)
        kinds = args.certifier or ["independent-set"]
        include_edges = args.include_edges or CUT_WITH_BOUNDARY in kinds
        ground = n + (len(edges) if include_edges else 0)
        c = min(3, ground) if args.c is None else args.c
        if not 1 <= c <= max(ground, 1):
            raise UsageError(f"-c must lie in [1, {ground}], got {c}")
        inst = SwopInstance(n, tuple(edges), tuple(_weights_for(args, ground, rng)),
                            tuple(Certifier(k) for k in kinds), c, include_edges=include_edges,
                            sense=docs.Sense.MIN if args.minimize else docs.Sense.MAX)
    elif args.kind == "circuit":
        if not 1 <= args.inputs <= MAX_CIRCUIT_INPUTS:
            raise UsageError(f"--inputs must lie in [1, {MAX_CIRCUIT_INPUTS}], got {args.inputs}")
        if args.identity:
            inst = identity_circuit(args.inputs)
        else:
            if not 0 <= args.gates <= MAX_GATES:
                raise UsageError(f"--gates must lie in [0, {MAX_GATES}], got {args.gates}")
            if not 1 <= args.outputs <= args.inputs + args.gates:
                raise UsageError("--outputs must lie in [1, inputs + gates]")
            inst = random_circuit(rng, args.inputs, args.gates, args.outputs)
        if args.weights or args.unit_weights or args.random_weights:
            inst = inst.with_weights(_weights_for(args, inst.m, rng))
        if args.minimize:
            inst = CircuitInstance(inst.gates, inst.outputs, inst.weights, docs.Sense.MIN)
    else:
        if not args.sizes:
            raise UsageError("multicolored graphs need --sizes, e.g. --sizes 2,2,1")
        sizes = _int_list(args.sizes, "--sizes")
        extra = _edge_list(args.edges) if args.edges else []
        inst = MulticoloredGraph.from_sizes(sizes, extra)
        inst.validate()
    _write(args.out, docs.instance_to_doc(inst))
    return EXIT_OK


# -- reduce ------------------------------------------------------------------------------

def _psi_descriptor(name: str, bundle_or_result) -> dict:
    if name == "maxcut-to-wis":
        b = bundle_or_result
        n = b.source.n
        return {
            "rule": "source vertex v lies on side A iff the target set meets its side-A core vertices",
            "a_side": [b.core.side_set(v, "A") for v in range(n)],
        }
    if name == "swop-to-circuit":
        b = bundle_or_result
        return {
            "rule": "split x as a,b,c1,c2 with |a|=|b|=n; structured forms map to a (forms ending 00 or 10) "
                    "or b (form vu11); unstructured strings map to z0",
            "forms": list(FORMS),
            "z0": to_bitstring(b.meta["z0"], b.source.ground_size),
        }
    return {"rule": "no solution map; the instance is a pivoting instance with a designated start"}


def _r_descriptor(name: str, bundle_or_result) -> dict:
    if name == "maxcut-to-wis":
        b = bundle_or_result
        n_t = b.target.ground_size
        return {"rule": "R is the image of g", "members": [to_bitstring(x, n_t) for x in b.members_of_r()]}
    if name == "swop-to-circuit":
        return {"rule": "R is the set of structured strings (forms uu00, uv00, uw10, uu10, vu11)"}
    return {"rule": "none"}


def _build(name: str, source, args) -> tuple[object, object]:
    """(bundle or pivot result, target instance)"""
    if name == "maxcut-to-wis":
        b = reduce_maxcut_to_wis(source)
        return b, b.target
    if name == "swop-to-circuit":
        b = reduce_swop_to_maxcircuit(source)
        return b, b.target
    seed_path = getattr(args, "seed_file", None)
    if not seed_path:
        raise UsageError("mis-to-wis-pivot needs --seed-file with the seed independent set instance")
    seed, _ = _load_instance(seed_path)
    if not isinstance(seed, SwopInstance):
        raise UsageError("the seed file must hold a swop instance")
    start = docs.parse_solution(args.seed_start or "0" * seed.ground_size, seed.ground_size, "--seed-start")
    res = reduce_mis_to_wis_pivot(source, seed, start)
    return res, res.instance


def cmd_reduce(args) -> int:
    source, src_hash = _load_instance(args.input)
    kind = docs.instance_to_doc(source)["kind"]
    want = REDUCTION_SOURCE[args.reduction]
    if kind != want:
        raise UsageError(f"{args.reduction} reduces from {want} instances, but {args.input} holds a {kind} instance")
    result, target = _build(args.reduction, source, args)
    target_doc = docs.instance_to_doc(target)
    prefix = args.out
    target_path = Path(f"{prefix}.target.json")
    target_path.write_text(docs.canonical(target_doc), encoding="ascii")
    manifest = {
        "kind": "bundle", "version": docs.VERSION,
        "reduction": args.reduction,
        "source": os.path.relpath(Path(args.input).resolve(), Path(prefix).resolve().parent),
        "source_hash": src_hash,
        "target": target_path.name,
        "target_hash": docs.digest(target_doc),
        "psi": _psi_descriptor(args.reduction, result),
        "r": _r_descriptor(args.reduction, result),
    }
    if args.reduction == "mis-to-wis-pivot":
        manifest["tightness"] = None
        manifest["tightness_expr"] = "none (pivoting instance)"
        manifest["metric"] = None
        manifest["start"] = to_bitstring(result.start, target.ground_size)
        manifest["seed"] = os.path.relpath(Path(args.seed_file).resolve(), Path(prefix).resolve().parent)
        manifest["seed_start"] = args.seed_start
        lay = result.layout
        manifest["layout"] = {"V": [list(c) for c in lay.V], "U": list(lay.U), "X": list(lay.X), "Y": list(lay.Y),
                              "v_star": lay.v_star, "w_star": lay.w_star, "S": list(lay.S)}
    else:
        manifest["tightness"] = result.tightness
        manifest["tightness_expr"] = result.tightness_expr
        manifest["metric"] = result.metric
    Path(f"{prefix}.bundle.json").write_text(docs.canonical(manifest), encoding="ascii")
    size = target.ground_size
    noun = "inputs" if isinstance(target, CircuitInstance) else "vertices"
    _out(f"{args.reduction}: target {docs.instance_to_doc(target)['kind']} instance with {size} {noun}")
    _out(f"wrote {target_path} and {prefix}.bundle.json")
    return EXIT_OK


# -- solve ------------------------------------------------------------------------------

def _rule(args) -> PivotingRule:
    if args.rule == "random":
        if args.seed is None:
            raise UsageError("--rule random needs --seed")
        return PivotingRule.random(args.seed)
    return PivotingRule(args.rule)


def _parse_start(inst, text: str | None) -> Solution:
    n = inst.ground_size
    s = docs.parse_solution(text if text is not None else "0" * n, n, "--start")
    try:
        inst.certify(s)
    except CertificationError as exc:
        raise UsageError(f"start {to_bitstring(s, n)} is not a valid solution: {exc}") from exc
    return s


def cmd_solve(args) -> int:
    inst, inst_hash = _load_instance(args.instance)
    if isinstance(inst, MulticoloredGraph):
        raise UsageError("a multicolored graph is not a local search instance")
    start = _parse_start(inst, args.start)
    rule = _rule(args)
    budget = args.max_steps if args.max_steps is not None else DEFAULT_STEP_BUDGET
    meta = None
    if args.solver == "standard":
        rep = standard_local_search(inst, start, rule, budget)
    elif args.solver == "pivot-bounded":
        if args.depth is None or args.depth < 0:
            raise UsageError("pivot-bounded needs --depth L with L >= 0")
        rep = pivot_search_bounded(inst, start, args.depth)
    elif args.solver == "fpt-distinct-weights":
        if not isinstance(inst, SwopInstance):
            raise UsageError("fpt-distinct-weights runs on swop instances")
        rep = fpt_distinct_weights_solve(inst, start, rule, budget)
        meta = rep.meta
    else:
        if not isinstance(inst, CircuitInstance):
            raise UsageError("circuit-output-bounded runs on circuit instances")
        rep = circuit_output_bounded_solve(inst, start, rule)
    trace = docs.trace_to_doc(inst, inst_hash, rep.sequence, rep.outcome, args.solver, rule.describe())
    if args.out:
        Path(args.out).write_text(docs.canonical(trace), encoding="ascii")
    n = inst.ground_size
    _out(f"{'step':>5}  {'move':<16} {'solution':<{max(n, 8)}}  objective")
    _out(f"{0:>5}  {'-':<16} {to_bitstring(start, n):<{max(n, 8)}}  {inst.objective(start)}")
    for i, st in enumerate(trace["steps"], start=1):
        _out(f"{i:>5}  {','.join(map(str, st['move'])):<16} {st['solution']:<{max(n, 8)}}  {st['objective']}")
    _out(f"outcome: {rep.outcome} after {rep.steps} steps")
    if meta:
        _out("reduced weights: " + " ".join(map(str, meta["reduced_weights"])))
    return {LOCAL_OPTIMUM: EXIT_OK, BUDGET_EXHAUSTED: EXIT_RESOURCE, PROMISE_VIOLATED: EXIT_PROMISE}[rep.outcome]


def cmd_replay(args) -> int:
    inst, inst_hash = _load_instance(args.instance)
    trace = _load(args.trace)
    if trace.get("instance") != inst_hash:
        raise Verification("the trace was recorded on a different instance")
    steps = docs.trace_from_doc(trace, inst)
    check = verify_improving_sequence(inst, steps, require_maximal=trace["outcome"] == LOCAL_OPTIMUM)
    if not check:
        raise Verification(f"replay failed at index {check.index}: {check.kind}")
    _out(f"replay ok: {len(steps) - 1} steps, outcome {trace['outcome']}")
    return EXIT_OK


# -- export-dot -----------------------------------------------------------------------------

def _dot_escape(s: str) -> str:
    return s.replace("\\", "\\\\").replace('"', '\\"')


def transition_graph_dot(inst, shaded: set[Solution] = frozenset(), budget: int | None = None) -> str:
    g = build_transition_graph(inst, budget)
    n = inst.ground_size
    sinks = set(g.sinks)
    lines = ["digraph transition {", "  node [shape=circle];"]
    for i, s in enumerate(g.nodes):
        attrs = [f'label="{_dot_escape(to_bitstring(s, n))}\\n{inst.objective(s)}"']
        if i in sinks:
            attrs.append("shape=doublecircle")
        if s in shaded:
            attrs.append("style=filled")
            attrs.append('fillcolor="gray80"')
        lines.append(f"  n{i} [{', '.join(attrs)}];")
    for i, outs in enumerate(g.edges):
        for j in outs:
            lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _bundle_r_members(manifest_path: str, target_hash: str) -> set[Solution]:
    manifest = _load(manifest_path)
    if manifest.get("kind") != "bundle":
        raise UsageError(f"{manifest_path} is not a bundle manifest")
    if manifest["target_hash"] != target_hash:
        raise UsageError("the bundle describes a different target instance")
    b, _, _ = _rebuild(manifest_path, manifest)
    if not hasattr(b, "members_of_r"):
        raise UsageError("this bundle has no R set to shade")
    return set(b.members_of_r())


def cmd_export_dot(args) -> int:
    inst, inst_hash = _load_instance(args.instance)
    if isinstance(inst, MulticoloredGraph):
        raise UsageError("a multicolored graph is not a local search instance")
    shaded = _bundle_r_members(args.bundle, inst_hash) if args.bundle else set()
    text = transition_graph_dot(inst, shaded, _budget(args))
    if args.out:
        Path(args.out).write_text(text, encoding="ascii")
    else:
        sys.stdout.write(text)
    return EXIT_OK


# -- verify -----------------------------------------------------------------------------------

def _rebuild(manifest_path: str, manifest: dict):
    """Rerun the reduction recorded in a manifest and check it reproduces the target."""
    base = Path(manifest_path).resolve().parent
    source, src_hash = _load_instance(str(base / manifest["source"]))
    if src_hash != manifest["source_hash"]:
        raise Verification("the source file changed since the bundle was written")
    name = manifest["reduction"]
    if name not in REDUCTIONS:
        raise UsageError(f"unknown reduction {name!r}")
    ns = argparse.Namespace(seed_file=str(base / manifest["seed"]) if "seed" in manifest else None,
                            seed_start=manifest.get("seed_start") or None)
    result, target = _build(name, source, ns)
    if docs.digest(docs.instance_to_doc(target)) != manifest["target_hash"]:
        raise Verification("rebuilding the reduction does not reproduce the recorded target")
    return result, target, source


def cmd_verify(args) -> int:
    manifest = _load(args.manifest)
    if manifest.get("kind") != "bundle":
        raise UsageError(f"{args.manifest} is not a bundle manifest")
    result, target, source = _rebuild(args.manifest, manifest)
    default = "short-sequence" if manifest.get("reduction") == "mis-to-wis-pivot" else "tight"
    checks = [c.strip() for c in (args.checks or default).split(",") if c.strip()]
    unknown = set(checks) - {"tight", "l-tight", "short-sequence"}
    if unknown:
        raise UsageError(f"unknown checks {sorted(unknown)}")
    report = TightnessReport()
    budget = _budget(args)
    if manifest["reduction"] == "mis-to-wis-pivot":
        if set(checks) - {"short-sequence"}:
            raise UsageError("mis-to-wis-pivot bundles support only the short-sequence check")
        report = _short_sequence_report(result, source)
        n_source = target.ground_size
    else:
        n_source = result.source.ground_size
        if "tight" in checks:
            rep = check_tight_reduction(result.source, result, budget)
            report.conditions.update(rep.conditions)
            report.source_solutions, report.target_solutions = rep.source_solutions, rep.target_solutions
            report.r_size = rep.r_size
        if "l-tight" in checks:
            rep = check_l_tight(result.source, result, args.ell, budget=budget)
            report.conditions.update(rep.conditions)
            report.r_size = rep.r_size
    out = docs.report_to_doc(report, n_source, target.ground_size, docs.digest(manifest), checks)
    if args.out:
        Path(args.out).write_text(docs.canonical(out), encoding="ascii")
    for name, c in report.conditions.items():
        line = f"{name}: {'pass' if c.ok else 'FAIL'}"
        if not c.ok:
            line += f" ({c.detail})"
        _out(line)
    return EXIT_OK if report.ok else EXIT_VERIFY


def _short_sequence_report(result, mis: MulticoloredGraph) -> TightnessReport:
    """A maximal improving sequence of length at most k from the start exists
    exactly when the multicolored graph has an independent set of size k."""
    k = mis.k
    rep = pivot_search_bounded(result.instance, result.start, k, accept=result.is_multicolored_solution)
    found = rep.found
    expected = bool(mis.multicolored_independent_sets())
    c = ConditionResult("short-sequence", detail=f"k={k}, multicolored solution {'exists' if expected else 'absent'}")
    if found != expected:
        c.fail(tuple(rep.sequence.steps), "short sequence found" if found else "no short sequence despite a solution")
    return TightnessReport({"short-sequence": c})


# -- argument parser ---------------------------------------------------------------------------

def _add_graph_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n", type=int, help="vertex count")
    p.add_argument("--graph", choices=TOPOLOGIES, default="path", help="topology for --n (default path)")
    p.add_argument("--cycle", type=int, metavar="N", help="cycle on N vertices")
    p.add_argument("--path", type=int, metavar="N", help="path on N vertices")
    p.add_argument("--complete", type=int, metavar="N", help="complete graph on N vertices")
    p.add_argument("--edges", help="explicit edge list such as 0-1,1-2")
    p.add_argument("--density", type=float, default=0.5, help="edge probability for --graph random")


def _add_weight_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--weights", help="one value for all, or a comma separated list (rationals allowed)")
    p.add_argument("--unit-weights", action="store_true")
    p.add_argument("--random-weights", nargs=2, type=int, metavar=("LO", "HI"))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pivotlab", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="write an instance document")
    gk = g.add_subparsers(dest="kind", required=True)
    mc = gk.add_parser("maxcut")
    _add_graph_flags(mc)
    _add_weight_flags(mc)
    sw = gk.add_parser("swop")
    _add_graph_flags(sw)
    _add_weight_flags(sw)
    sw.add_argument("--certifier", action="append", choices=CERTIFIER_KINDS)
    sw.add_argument("-c", type=int, help="swap bound (default min(3, ground size))")
    sw.add_argument("--include-edges", action="store_true", help="put the edges into the ground set")
    sw.add_argument("--minimize", action="store_true")
    ci = gk.add_parser("circuit")
    ci.add_argument("--inputs", type=int, required=True)
    ci.add_argument("--gates", type=int, default=0)
    ci.add_argument("--outputs", type=int, default=1)
    ci.add_argument("--identity", action="store_true", help="one output per input")
    ci.add_argument("--minimize", action="store_true")
    _add_weight_flags(ci)
    mg = gk.add_parser("multicolored")
    mg.add_argument("--sizes", help="class sizes such as 2,2,1 (the last class must have one vertex)")
    mg.add_argument("--edges", help="edges between classes such as 0-2,1-3")
    for p in (mc, sw, ci, mg):
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--out", "-o", help="output file (default standard output)")

    r = sub.add_parser("reduce", help="apply a reduction and write the target plus a bundle manifest")
    r.add_argument("input")
    r.add_argument("--reduction", required=True, choices=REDUCTIONS)
    r.add_argument("--out", "-o", required=True, help="output prefix")
    r.add_argument("--seed-file", help="seed independent set instance (mis-to-wis-pivot)")
    r.add_argument("--seed-start", help="seed start bitstring (default empty set)")

    s = sub.add_parser("solve", help="run a solver and print the trace")
    s.add_argument("instance")
    s.add_argument("--start", help="start bitstring (default all zeros)")
    s.add_argument("--solver", choices=SOLVERS, default="standard")
    s.add_argument("--rule", choices=PivotingRule.KINDS, default="first")
    s.add_argument("--seed", type=int, help="seed for --rule random")
    s.add_argument("--depth", type=int, help="length bound for pivot-bounded")
    s.add_argument("--max-steps", type=int, help="step budget for standard and fpt solvers")
    s.add_argument("--out", "-o", help="trace document path")

    rp = sub.add_parser("replay", help="check that a trace document replays on its instance")
    rp.add_argument("instance")
    rp.add_argument("trace")

    d = sub.add_parser("export-dot", help="write the transition graph in DOT format")
    d.add_argument("instance")
    d.add_argument("--bundle", help="shade the R members of this bundle manifest")
    d.add_argument("--budget", type=int)
    d.add_argument("--out", "-o")

    v = sub.add_parser("verify", help="check a bundle manifest")
    v.add_argument("manifest")
    v.add_argument("--checks", default=None, help="comma separated: tight, l-tight, short-sequence")
    v.add_argument("--ell", type=int, help="distance bound for l-tight (default: the declared one)")
    v.add_argument("--budget", type=int)
    v.add_argument("--out", "-o", help="report document path")
    return parser


COMMANDS = {"generate": cmd_generate, "reduce": cmd_reduce, "solve": cmd_solve, "replay": cmd_replay,
            "export-dot": cmd_export_dot, "verify": cmd_verify}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return COMMANDS[args.command](args)
    except (UsageError, docs.DocumentError, InputContractError, CertificationError) as exc:
        _err(str(exc))
        return EXIT_USAGE
    except (EnumerationOverflow, PartitionBudgetExceeded, ResourceError) as exc:
        _err(str(exc))
        return EXIT_RESOURCE
    except (Verification, InvariantViolation) as exc:
        _err(str(exc))
        return EXIT_VERIFY
    except (ValueError, TypeError) as exc:
        _err(str(exc))
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
