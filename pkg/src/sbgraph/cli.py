"""Command-line entry point.

Exit codes: 0 success or ACCEPTED, 1 negative verdict, 2 usage or parse
error, 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .coloring import optimal_coloring
from .core import GraphError
from .derivations import check, gen_lemma_bicomplete, gen_lemma_nabla, parse_script, serialize_script
from .derivations.script import ScriptError, parse_step, tokens
from .derivations.search import search_derivation
from .fuzz import OPS, fuzz_closure
from .hajos import AddEdge, AddVertex, Contract, Identify, OperationError, RemoveVertex, Switch, apply_step
from .sbg_format import FormatError, read_sbg, serialize_sbg
from .signatures import is_antibalanced, is_balanced
from .structure import completeness_class, find_triples, is_nabla_complete, thinness

OK, REJECTED, USAGE, INTERNAL = 0, 1, 2, 3
SINGLE_OPERAND = (AddVertex, AddEdge, Identify, Switch, RemoveVertex, Contract)


def _flag(b: bool) -> str:
    return "true" if b else "false"


def _read_text(path: str) -> str:
    return sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")


def cmd_chroma(args) -> int:
    g = read_sbg(args.file)
    c = optimal_coloring(g)
    print(f"chi = {0 if c is None else c.k}")
    if c is not None:
        for v in sorted(g.vertices):
            print(f"{v} {c[v]}")
    return OK


def cmd_analyze(args) -> int:
    g = read_sbg(args.file)
    t = thinness(g)
    print(f"vertices: {g.order()}")
    print(f"edges: {g.size()}")
    print(f"balanced: {_flag(is_balanced(g))}")
    print(f"antibalanced: {_flag(is_antibalanced(g))}")
    print(f"completeness: {completeness_class(g)}")
    print(f"thin: {'none' if t is None else t}")
    print(f"nabla_complete: {_flag(is_nabla_complete(g) is not None)}")
    print(f"triples: {len(find_triples(g))}")
    return OK


def cmd_apply(args) -> int:
    g = read_sbg(args.file)
    toks = tokens(" ".join(args.op))
    if not toks:
        print("apply: missing operation", file=sys.stderr)
        return USAGE
    step = parse_step(toks[0], ["_"] + toks[1:])
    if not isinstance(step, SINGLE_OPERAND):
        print(f"apply: {toks[0]} needs more than one graph; use a script", file=sys.stderr)
        return USAGE
    if isinstance(step, (RemoveVertex, Contract)) and args.q is None:
        print("apply: sb5 operations need --q", file=sys.stderr)
        return USAGE
    try:
        out = apply_step(step, {"_": g}, args.q or 0).graph
    except OperationError as exc:
        print(f"precondition failed: {exc}", file=sys.stderr)
        return REJECTED
    sys.stdout.write(serialize_sbg(out))
    return OK


def cmd_check(args) -> int:
    base = Path.cwd() if args.script == "-" else Path(args.script).resolve().parent
    try:
        script = parse_script(_read_text(args.script), base_dir=base)
    except ScriptError as exc:
        print(f"error: {exc}")
        print("REJECTED")
        return REJECTED
    report = check(script, verify_colorability=args.verify_colorability)
    print(report.summary())
    if report.invariant_violation:
        return INTERNAL
    return OK if report.accepted else REJECTED


def cmd_gen(args) -> int:
    gen = {"lemma-nabla": gen_lemma_nabla, "lemma-bicomplete": gen_lemma_bicomplete}[args.lemma]
    try:
        script = gen(args.r)
    except ValueError as exc:
        print(f"gen: {exc}", file=sys.stderr)
        return USAGE
    sys.stdout.write(serialize_script(script))
    return OK


def cmd_search(args) -> int:
    target = read_sbg(args.target)
    try:
        script = search_derivation(target, args.q, args.steps, args.size, target_source=args.target)
    except ValueError as exc:
        print(f"search: {exc}", file=sys.stderr)
        return USAGE
    if script is None:
        print("no derivation found within budget", file=sys.stderr)
        return REJECTED
    sys.stdout.write(serialize_script(script))
    return OK


def cmd_fuzz(args) -> int:
    summary = fuzz_closure(args.n, args.q, args.trials, args.seed)
    print(f"closure fuzz: n<={args.n} q={args.q} trials={args.trials} seed={args.seed}")
    print(f"{'op':<6}{'applied':>9}{'skipped':>9}{'violations':>12}")
    for op in OPS:
        st = summary.stats[op]
        print(f"{op:<6}{st.trials:>9}{st.skipped:>9}{st.violations:>12}")
    print(f"total violations: {summary.violations}")
    if summary.violations:
        for op in OPS:
            case = summary.stats[op].counterexample
            if case is None:
                continue
            print(f"# counterexample for {op}, params {case.params}")
            for g in case.inputs:
                sys.stdout.write(serialize_sbg(g))
        return REJECTED
    return OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sbg", description="Signed bi-graph coloring and Hajós-like derivations")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("chroma", help="chromatic number and an optimal coloring")
    p.add_argument("file")
    p.set_defaults(func=cmd_chroma)

    p = sub.add_parser("analyze", help="balance, completeness, thinness and triples")
    p.add_argument("file")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("apply", help="apply one single-graph operation, e.g. 'sb4 v1'")
    p.add_argument("--q", type=int, default=None, help="colour class for sb5even/sb5odd")
    p.add_argument("file")
    p.add_argument("op", nargs=argparse.REMAINDER)
    p.set_defaults(func=cmd_apply)

    p = sub.add_parser("check", help="check a derivation script ('-' reads stdin)")
    p.add_argument("script")
    p.add_argument("--verify-colorability", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("gen", help="print the derivation script of a construction lemma")
    p.add_argument("lemma", choices=["lemma-nabla", "lemma-bicomplete"])
    p.add_argument("r", type=int)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("search", help="bounded search for a derivation of a target graph")
    p.add_argument("target")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--steps", type=int, default=3)
    p.add_argument("--size", type=int, default=8)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("fuzz", help="closure fuzzing of the five operations")
    p.add_argument("--n", type=int, default=6)
    p.add_argument("--q", type=int, default=3)
    p.add_argument("--trials", type=int, default=500)
    p.add_argument("--seed", type=int, required=True)
    p.set_defaults(func=cmd_fuzz)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (FormatError, GraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except AssertionError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return INTERNAL


if __name__ == "__main__":
    sys.exit(main())
