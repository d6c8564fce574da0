"""``n3s`` command line: parse, reason, query, prove, check-proof, oracle.

Exit codes: 0 ok/proved, 1 parse or usage error, 2 inference fuse,
3 limit exceeded, 4 no query surface, 5 not proved/invalid, 6 too large.
"""

from __future__ import annotations

import argparse
import sys
from importlib.metadata import PackageNotFoundError, version

from .calculus import LimitExceeded, Limits, check_proof, saturate
from .normalize import FreshLabelSource, PrefixCollision, merge_documents, normalize
from .oracle import Entailment, TooLarge, entails, smallest_model, to_formula
from .parser import ParseError, parse_document, serialize_document, serialize_turtle
from .proofscript import ScriptError, format_step, parse_script
from .query import NoQuerySurface, Verdict, answer_query_surfaces, prove_by_contradiction, prove_by_negation
from .terms import Document

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_FUSE = 2
EXIT_LIMIT = 3
EXIT_NO_QUERY = 4
EXIT_NOT_PROVED = 5
EXIT_TOO_LARGE = 6


class _Fail(Exception):
    def __init__(self, code: int, message: str) -> None:
        super().__init__(message)
        self.code = code


class _ArgParser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.buffer.read().decode("utf-8")
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except (OSError, UnicodeDecodeError) as e:
        raise _Fail(EXIT_USAGE, f"{path}: {e}") from None


def _parse(path: str, prefixes: dict[str, str] | None = None) -> Document:
    try:
        return parse_document(_read(path), prefixes=prefixes)
    except ParseError as e:
        raise _Fail(EXIT_USAGE, f"{path}:{e}") from None


def load_inputs(paths: list[str]) -> Document:
    """Parse and merge input files; later files see earlier prefixes."""
    fresh = FreshLabelSource("v")
    prefixes: dict[str, str] = {}
    merged: Document | None = None
    for path in paths:
        doc = _parse(path, prefixes)
        for p, ns in doc.prefixes:
            prefixes.setdefault(p, ns)
        try:
            merged = doc if merged is None else merge_documents(merged, doc, fresh)
        except PrefixCollision as e:
            raise _Fail(EXIT_USAGE, f"{path}: {e}") from None
    assert merged is not None
    return merged


class _Out:
    def __init__(self, args) -> None:
        self.verbose = args.verbose
        self.trace_stream = sys.stdout if getattr(args, "trace_to_stdout", False) else sys.stderr

    def data(self, text: str) -> None:
        if text:
            sys.stdout.write(text if text.endswith("\n") else text + "\n")

    def diag(self, text: str) -> None:
        print(text, file=sys.stderr)

    def trace(self, trace, prefixes) -> None:
        if not self.verbose or trace is None:
            return
        for i, step in enumerate(trace.steps):
            print(f"[{i}] {format_step(step, prefixes)}", file=self.trace_stream)


def _limits(args) -> Limits:
    try:
        limits = Limits.from_env()
        if args.limits:
            limits = Limits.parse(args.limits, limits)
        return limits
    except ValueError as e:
        raise _Fail(EXIT_USAGE, f"bad limits: {e}") from None


def cmd_parse(args, out: _Out) -> int:
    prefixes: dict[str, str] = {}
    for path in args.inputs:
        doc = _parse(path, prefixes)
        prefixes.update(doc.prefix_map)
        out.data(serialize_document(doc))
    return EXIT_OK


def cmd_reason(args, out: _Out) -> int:
    doc = load_inputs(args.inputs)
    prefixes = doc.prefix_map
    try:
        end, trace = saturate(doc, _limits(args))
    except LimitExceeded as e:
        out.trace(e.trace, prefixes)
        out.data(serialize_turtle(e.trace.derived_facts, prefixes))
        out.diag(f"limit exceeded: {e.reason}")
        return EXIT_LIMIT
    out.trace(trace, prefixes)
    if args.format == "n3s":
        out.data(serialize_document(end))
    elif args.format == "trace-text":
        out.data("\n".join(format_step(s, prefixes) for s in trace.steps))
    else:
        out.data(serialize_turtle(trace.derived_facts, prefixes))
    if trace.fuse:
        _report_fuse(out, trace, prefixes)
        return EXIT_FUSE
    return EXIT_OK


def _report_fuse(out: _Out, trace, prefixes) -> None:
    fuse = trace.fuse
    out.diag(f"inference fuse: {fuse.describe()}")
    if 0 <= fuse.trace_index < len(trace.steps):
        out.diag(f"  last step: {format_step(trace.steps[fuse.trace_index], prefixes)}")


def cmd_query(args, out: _Out) -> int:
    doc = load_inputs(args.inputs)
    prefixes = doc.prefix_map
    try:
        result = answer_query_surfaces(doc, _limits(args))
    except NoQuerySurface as e:
        out.diag(str(e))
        return EXIT_NO_QUERY
    out.trace(result.trace, prefixes)
    if result.fuse:
        _report_fuse(out, result.trace, prefixes)
        return EXIT_FUSE
    out.data(serialize_turtle(result.triples, prefixes))
    if not result.complete:
        out.diag(f"limit exceeded, answers may be partial: {result.reason}")
        return EXIT_LIMIT
    return EXIT_OK


def cmd_prove(args, out: _Out) -> int:
    kb = load_inputs(args.inputs)
    goal = _parse(args.goal, kb.prefix_map)
    prove = prove_by_contradiction if args.mode == "contradiction" else prove_by_negation
    result = prove(kb, goal, _limits(args))
    out.trace(result.trace, kb.prefix_map)
    out.data(result.verdict.value)
    if result.verdict is Verdict.PROVED:
        if out.verbose:
            _report_fuse(out, result.trace, kb.prefix_map)
        return EXIT_OK
    if result.verdict is Verdict.UNKNOWN:
        out.diag(f"limit exceeded: {result.reason}")
        return EXIT_LIMIT
    return EXIT_NOT_PROVED


def cmd_check_proof(args, out: _Out) -> int:
    doc = normalize(load_inputs(args.inputs))
    try:
        steps = parse_script(_read(args.script), doc.prefix_map)
    except ScriptError as e:
        out.diag(f"{args.script}: {e}")
        return EXIT_USAGE
    ok, index = check_proof(doc, steps)
    if ok:
        out.data(f"valid: {len(steps)} steps")
        return EXIT_OK
    out.data(f"invalid at step {index}: {format_step(steps[index], doc.prefix_map)}")
    return EXIT_NOT_PROVED


def cmd_oracle(args, out: _Out) -> int:
    kb = load_inputs(args.inputs)
    prefixes = kb.prefix_map
    try:
        if args.goal is None:
            model = smallest_model(to_formula(kb), args.domain, args.force)
            if model is None:
                out.data(f"Unsatisfiable-at-{args.domain}")
                return EXIT_NOT_PROVED
            out.data("Satisfiable")
            out.data(model.describe(prefixes))
            return EXIT_OK
        goal = _parse(args.goal, prefixes)
        result = entails(kb, goal, args.domain, args.force)
    except TooLarge as e:
        out.diag(f"too large: {e}; pass --force to try anyway")
        return EXIT_TOO_LARGE
    out.data(str(result))
    if result.status is Entailment.ENTAILED:
        return EXIT_OK
    out.data("counter-model:")
    out.data(result.counter_model.describe(prefixes))
    return EXIT_NOT_PROVED


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def _version() -> str:
    try:
        return version("artifact")
    except PackageNotFoundError:  # pragma: no cover
        return "unknown"


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("inputs", nargs="+", help="input files, '-' for standard input")
    common.add_argument("-v", "--verbose", action="count", default=0, help="print the derivation trace")
    common.add_argument(
        "--limits", help="iters=N,blanks=N,depth=N (overrides N3S_LIMITS)", default=None
    )
    common.add_argument("--trace-to-stdout", action="store_true", help="send traces to stdout")

    parser = _ArgParser(prog="n3s", description="RDF Surfaces reasoning from the command line.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {_version()}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgParser)

    p = sub.add_parser("parse", parents=[common], help="parse and print canonical N3S")
    p.set_defaults(func=cmd_parse)

    p = sub.add_parser("reason", parents=[common], help="saturate and print derived triples")
    p.add_argument("--format", choices=["turtle", "n3s", "trace-text"], default="turtle")
    p.set_defaults(func=cmd_reason)

    p = sub.add_parser("query", parents=[common], help="answer query surfaces")
    p.set_defaults(func=cmd_query)

    p = sub.add_parser("prove", parents=[common], help="prove a goal")
    p.add_argument("--goal", required=True, help="file whose root facts form the goal")
    p.add_argument("--mode", choices=["contradiction", "negation"], default="contradiction")
    p.set_defaults(func=cmd_prove)

    p = sub.add_parser("check-proof", parents=[common], help="validate a proof script")
    p.add_argument("--script", required=True)
    p.set_defaults(func=cmd_check_proof)

    p = sub.add_parser("oracle", parents=[common], help="finite-model entailment check")
    p.add_argument("--goal", default=None, help="goal file; without it, check satisfiability")
    p.add_argument("--domain", "-k", type=_positive, default=3, help="largest domain size (default 3)")
    p.add_argument("--force", action="store_true", help="lift the size guard")
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = _Out(args)
    try:
        return args.func(args, out)
    except _Fail as e:
        print(f"n3s: {e}", file=sys.stderr)
        return e.code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
