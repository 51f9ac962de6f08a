"""Command-line interface.

Exit codes: 0 success/yes, 1 no (not isomorphic, rejected, failing
verdict, corpus counterexample), 2 input error, 3 realizability conditions
fail, 4 internal inconsistency. JSON goes to stdout only with exit 0 or 1;
notices go to stderr.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from typing import Any

from .algebra import from_hypergraph
from .bits import members
from .errors import (
    BoundsTooLarge,
    ConditionsFail,
    ImplAlgError,
    InternalInconsistency,
    RealizationError,
)
from .formats import (
    InputError,
    dumps,
    family_to_json,
    hypergraph_from_json,
    hypergraph_to_json,
    loads,
    profile_from_json,
    profile_to_json,
    rho_from_json,
    rho_to_json,
    to_dot,
)
from .hypergraph import Hypergraph
from .iso import hypergraph_iso_witness
from .polymatroid import recognize_boolean, rho_of_hypergraph
from .profile import Verdict, Violation, check_realizability_conditions, compute_profile
from .synth import realize_to_hypergraph
from .verify import verify_corpus


@dataclass
class CommandResult:
    exit_code: int
    payload: Any = None
    diagnostics: list[str] = field(default_factory=list)
    # hypergraph to draw when --dot is given
    dot: Hypergraph | None = None


def _read(path: str) -> Any:
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    return loads(text)


def _load_hypergraph(path: str) -> Hypergraph:
    h = hypergraph_from_json(_read(path))
    if not h.edges:
        raise InputError(f"{path}: hypergraph has no edges")
    return h


def _note_reduction(path: str, h: Hypergraph, notes: list[str]):
    alg = from_hypergraph(h)
    if alg.n != h.n_edges:
        notes.append(f"{path}: input not Sperner; reduced {h.n_edges} -> {alg.n} edges")
    return alg


def _violation_json(v: Violation) -> dict:
    return {"kind": v.kind, "pair": [members(v.s1), members(v.s2)]}


def verdict_json(v: Verdict) -> dict:
    if v.passed:
        return {"verdict": "pass"}
    out = {"verdict": "fail", "clause": v.clause, **_violation_json(v.violation)}
    out["A"] = members(v.A) if v.A is not None else None
    return out


def _hypergraph_payload(h: Hypergraph, family, report) -> dict:
    out = hypergraph_to_json(h)
    out["indexed_edges"] = family_to_json(family)
    out["degeneracy"] = report.entries()
    return out


def cmd_profile(path: str) -> CommandResult:
    notes: list[str] = []
    alg = _note_reduction(path, _load_hypergraph(path), notes)
    return CommandResult(0, profile_to_json(compute_profile(alg)), notes)


def cmd_rho(path: str) -> CommandResult:
    h = _load_hypergraph(path)
    return CommandResult(0, rho_to_json(rho_of_hypergraph(h)))


def cmd_iso(path1: str, path2: str) -> CommandResult:
    notes: list[str] = []
    h1 = _load_hypergraph(path1)
    h2 = _load_hypergraph(path2)
    _note_reduction(path1, h1, notes)
    _note_reduction(path2, h2, notes)
    w = hypergraph_iso_witness(h1, h2)
    if w is None:
        return CommandResult(1, {"isomorphic": False}, notes)
    return CommandResult(0, {"isomorphic": True, "mapping": [list(pair) for pair in w.mapping]}, notes)


def cmd_check_profile(path: str) -> CommandResult:
    p = profile_from_json(_read(path))
    v = check_realizability_conditions(p)
    return CommandResult(0 if v else 1, verdict_json(v))


def cmd_realize(path: str) -> CommandResult:
    p = profile_from_json(_read(path))
    try:
        h, family, report = realize_to_hypergraph(p)
    except ConditionsFail as exc:
        return CommandResult(3, None, [f"conditions fail: {exc.verdict}"])
    except RealizationError as exc:
        return CommandResult(4, None, [f"internal inconsistency: {exc}"])
    notes = [report.summary()] if report.degenerate else []
    return CommandResult(0, _hypergraph_payload(h, family, report), notes, dot=h)


def cmd_recognize(path: str) -> CommandResult:
    r = rho_from_json(_read(path))
    try:
        res = recognize_boolean(r)
    except InternalInconsistency as exc:
        return CommandResult(4, None, [f"internal inconsistency: {exc}"])
    if not res:
        witness = res.witness
        if isinstance(witness, Violation):
            witness = _violation_json(witness)
        elif isinstance(witness, Verdict):
            witness = verdict_json(witness)
        elif isinstance(witness, int):
            witness = members(witness)
        payload = {"recognized": False, "stage": res.stage, "reason": res.reason, "witness": witness}
        return CommandResult(1, payload)
    payload = _hypergraph_payload(res.hypergraph, res.family, res.report)
    payload["recognized"] = True
    payload["distinct_edges"] = res.distinct_edges
    notes = [res.report.summary()] if res.report.degenerate else []
    return CommandResult(0, payload, notes, dot=res.hypergraph)


def cmd_verify_corpus(max_vertices: int, max_edges: int) -> CommandResult:
    try:
        report = verify_corpus(max_vertices, max_edges)
    except BoundsTooLarge as exc:
        raise InputError(str(exc)) from exc
    notes = [
        f"{name}: {r['passed']} passed, {r['failed']} failed"
        for name, r in report["checks"].items()
    ]
    return CommandResult(0 if report["all_passed"] else 1, report, notes)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", default=argparse.SUPPRESS, help="indented JSON")
    common.add_argument("--dot", action="store_true", default=argparse.SUPPRESS,
                        help="emit Graphviz incidence text for hypergraph outputs")

    ap = argparse.ArgumentParser(
        prog="implalg",
        description="Implication algebras, hypergraphs and Boolean polymatroids.",
        parents=[common],
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("profile", parents=[common], help="implication profile of a hypergraph")
    p.add_argument("file")
    p = sub.add_parser("rho", parents=[common], help="graphical polymatroid of a hypergraph")
    p.add_argument("file")
    p = sub.add_parser("iso", parents=[common], help="decide hypergraph isomorphism")
    p.add_argument("file1")
    p.add_argument("file2")
    p = sub.add_parser("check-profile", parents=[common], help="check the realizability conditions")
    p.add_argument("file")
    p = sub.add_parser("realize", parents=[common], help="build a hypergraph with a given profile")
    p.add_argument("file")
    p = sub.add_parser("recognize", parents=[common], help="recognize a Boolean polymatroid")
    p.add_argument("file")
    p = sub.add_parser("verify-corpus", parents=[common], help="run all checks on small hypergraphs")
    p.add_argument("max_vertices", type=int)
    p.add_argument("max_edges", type=int)
    return ap


def run(args: argparse.Namespace) -> CommandResult:
    try:
        if args.command == "profile":
            return cmd_profile(args.file)
        if args.command == "rho":
            return cmd_rho(args.file)
        if args.command == "iso":
            return cmd_iso(args.file1, args.file2)
        if args.command == "check-profile":
            return cmd_check_profile(args.file)
        if args.command == "realize":
            return cmd_realize(args.file)
        if args.command == "recognize":
            return cmd_recognize(args.file)
        if args.command == "verify-corpus":
            return cmd_verify_corpus(args.max_vertices, args.max_edges)
    except InternalInconsistency as exc:
        return CommandResult(4, None, [f"internal inconsistency: {exc}"])
    except ImplAlgError as exc:
        return CommandResult(2, None, [f"input error: {exc}"])
    raise AssertionError(args.command)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    pretty = getattr(args, "pretty", False)
    want_dot = getattr(args, "dot", False)
    result = run(args)
    for note in result.diagnostics:
        print(note, file=sys.stderr)
    if result.payload is not None:
        if want_dot and result.dot is not None:
            sys.stdout.write(to_dot(result.dot))
        else:
            if want_dot:
                print("--dot ignored: output is not a hypergraph", file=sys.stderr)
            sys.stdout.write(dumps(result.payload, pretty) + "\n")
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
