"""Command-line front end.

Exit codes: 0 reachable / valid, 1 unreachable / invalid, 2 malformed input
or misuse, 3 budget exhausted, 4 internal assertion (including a failed
self-test).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from . import dispatch
from .errors import MalformedInput, ReconfError
from .graph import nd_partition, parse_graph_lines
from .ilp import encode_ilp, export_lp, variable_bound
from .model import (
    format_instance,
    format_sequence,
    parse_ds_instance,
    parse_instance,
    parse_sequence,
    validate_sequence,
)
from .monotonicity import idp_oa_tar_tj_bridge, tar_to_tj, tj_to_tar
from .oracle import DEFAULT_BUDGET
from .reductions import TARGETS, ReductionSpec, reduce

EXIT_OK, EXIT_NO, EXIT_INPUT, EXIT_BUDGET, EXIT_INTERNAL = 0, 1, 2, 3, 4


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise MalformedInput(f"cannot read {path}: {exc.strerror}") from None


def _write(path: str, text: str) -> None:
    try:
        Path(path).write_text(text)
    except OSError as exc:
        raise MalformedInput(f"cannot write {path}: {exc.strerror}") from None


def report(out) -> dict:
    """The stable JSON report for a solver outcome."""
    return {
        "verdict": "reachable" if out.reachable else "unreachable",
        "moves": out.min_moves,
        "config_count": out.config_count,
        "solver": out.solver,
        "budget_used": out.states,
    }


def cmd_solve(args, stdout) -> int:
    inst = parse_instance(_read(args.input))
    if args.max_moves is not None:
        if args.max_moves < 0:
            raise MalformedInput("--max-moves must be non-negative")
        inst = inst.with_bound(args.max_moves)
    out = dispatch.solve(inst, args.solver, args.budget)
    if args.emit_sequence and out.reachable:
        _write(args.emit_sequence, format_sequence(out.witness))
    if args.json:
        print(json.dumps(report(out), sort_keys=True), file=stdout)
    elif out.reachable:
        print(
            f"reachable: {out.min_moves} moves ({out.config_count} configurations), "
            f"solver {out.solver}, {out.states} states",
            file=stdout,
        )
    else:
        print(f"unreachable: solver {out.solver}, {out.states} states", file=stdout)
    return EXIT_OK if out.reachable else EXIT_NO


def cmd_verify(args, stdout) -> int:
    inst = parse_instance(_read(args.input))
    seq = parse_sequence(_read(args.sequence))
    bad = validate_sequence(inst, seq)
    if bad is None:
        print(f"valid: {len(seq) - 1} moves", file=stdout)
        return EXIT_OK
    print(f"invalid: {bad}", file=stdout)
    return EXIT_NO


def cmd_reduce(args, stdout) -> int:
    g, d_s, d_t, bound = parse_ds_instance(_read(args.input))
    red = reduce(ReductionSpec(args.target, args.rule or ""), g, d_s, d_t, bound)
    _write(args.output, format_instance(red.instance))
    if args.names:
        lines = [f"{i} {' '.join(str(x) for x in lab)}" for i, lab in enumerate(red.names, 1)]
        _write(args.names, "\n".join(lines) + "\n")
    inst = red.instance
    print(
        f"{args.target}: {inst.g.n} vertices, {len(inst.g.edges)} edges, "
        f"{len(inst.start)} tokens, {inst.variant.label}-{inst.rule.kind}",
        file=stdout,
    )
    return EXIT_OK


def cmd_nd(args, stdout) -> int:
    text = _read(args.input)
    inst = None
    try:
        inst = parse_instance(text)
        g = inst.g
    except MalformedInput:
        g, rest = parse_graph_lines(text.splitlines())
        if rest and args.ilp_out:
            raise
    part = nd_partition(g)
    if args.partition or not args.ilp_out:
        print(f"nd {part.size}", file=stdout)
        for i, cls in enumerate(part.classes):
            kind = "clique" if part.clique_flags[i] else "independent"
            print(f"class {i + 1} {kind}: {' '.join(map(str, sorted(cls)))}", file=stdout)
    if args.ilp_out:
        if inst is None:
            raise MalformedInput("--ilp-out needs a full instance file")
        if args.steps is None or args.steps < 1:
            raise MalformedInput("--ilp-out needs --steps L with L >= 1")
        model = encode_ilp(inst, args.steps, args.mode)
        _write(args.ilp_out, export_lp(model))
        print(
            f"ilp: {len(model.variables)} variables (bound {variable_bound(part.size, args.steps)}), "
            f"{len(model.constraints)} constraints, mode {model.mode}",
            file=stdout,
        )
    return EXIT_OK


def cmd_transform(args, stdout) -> int:
    inst = parse_instance(_read(args.input))
    seq = parse_sequence(_read(args.sequence))
    v = inst.variant
    idp = v.base == "off" and v.independent
    if args.to == "tar":
        out = idp_oa_tar_tj_bridge(seq, "tj_to_tar", inst.g, v) if idp else tj_to_tar(seq, inst.g, v)
    else:
        if idp:
            out = idp_oa_tar_tj_bridge(seq, "tar_to_tj", inst.g, v)
        else:
            out = tar_to_tj(seq, len(seq[0]) if seq else 0, inst.g, v)
    text = format_sequence(out)
    if args.output:
        _write(args.output, text)
    else:
        stdout.write(text)
    return EXIT_OK


def cmd_selftest(args, stdout) -> int:
    from .sweep import run_sweep

    rep = run_sweep(args.max_n, args.workers)
    for line in rep.failures[:20]:
        print(f"FAIL {line}", file=stdout)
    print(f"selftest: {rep.checks} checks, {len(rep.failures)} failures", file=stdout)
    return EXIT_OK if not rep.failures else EXIT_INTERNAL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="alliance-reconf", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="decide reachability and print a shortest witness length")
    s.add_argument("--input", required=True)
    s.add_argument("--solver", choices=("auto",) + dispatch.FAMILIES, default="auto")
    s.add_argument("--max-moves", type=int)
    s.add_argument("--emit-sequence")
    s.add_argument("--json", action="store_true")
    s.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    s.set_defaults(run=cmd_solve)

    s = sub.add_parser("verify", help="check a sequence against an instance")
    s.add_argument("--input", required=True)
    s.add_argument("--sequence", required=True)
    s.set_defaults(run=cmd_verify)

    s = sub.add_parser("reduce", help="build an alliance instance from a dominating-set instance")
    s.add_argument("--target", required=True, choices=TARGETS)
    s.add_argument("--rule", choices=("TS", "TJ"))
    s.add_argument("--input", required=True)
    s.add_argument("--output", required=True)
    s.add_argument("--names", help="also write the vertex-name map")
    s.set_defaults(run=cmd_reduce)

    s = sub.add_parser("nd", help="neighbourhood-diversity partition and ILP export")
    s.add_argument("--input", required=True)
    s.add_argument("--partition", action="store_true")
    s.add_argument("--ilp-out")
    s.add_argument("--steps", type=int)
    s.add_argument("--mode", choices=("literal", "validated"), default="validated")
    s.set_defaults(run=cmd_nd)

    s = sub.add_parser("transform", help="convert a witness between TJ and TAR")
    s.add_argument("--input", required=True)
    s.add_argument("--sequence", required=True)
    s.add_argument("--to", required=True, choices=("tar", "tj"))
    s.add_argument("--output")
    s.set_defaults(run=cmd_transform)

    s = sub.add_parser("selftest", help="run the small-graph property sweep")
    s.add_argument("--max-n", type=int, default=4)
    s.add_argument("--workers", type=int, default=1)
    s.set_defaults(run=cmd_selftest)
    return p


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        return args.run(args, stdout)
    except ReconfError as exc:
        print(f"error: {exc}", file=stderr)
        return exc.exit_code
    except AssertionError as exc:
        print(f"internal assertion: {exc}", file=stderr)
        return EXIT_INTERNAL


def main() -> None:
    sys.exit(run())
