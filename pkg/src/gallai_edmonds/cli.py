"""Command-line entry point.

Exit codes: 0 success, 1 verification failure (witness on stdout),
2 input or parse error, 3 size-guard error.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Sequence

from .decomposition import VerificationReport, check_decomposition, gallai_edmonds
from .errors import GraphError, MinorUndefinedError, SizeGuardError
from .formats import (
    emit_decomposition_json,
    emit_decomposition_text,
    emit_dimacs,
    emit_dot,
    emit_edgelist,
    parse_graph,
)
from .generators import enumerate_labeled_graphs, random_graph
from .graph import Graph
from .oracle import MAX_ENUM_EDGES, MAX_THEOREM_VERTICES, exhaustive_sweep, verify_structure_theorem

EXIT_OK, EXIT_VERIFY, EXIT_INPUT, EXIT_GUARD = 0, 1, 2, 3


def parse_probability(text: str) -> tuple[int, int]:
    """``"a/b"`` kept unreduced (the denominator drives the generator), or ``"0"``/``"1"``."""
    num, _, den = text.partition("/")
    try:
        p = (int(num), int(den) if den else 1)
    except ValueError:
        raise argparse.ArgumentTypeError(f"probability must look like a/b, got {text!r}") from None
    if p[1] <= 0 or not 0 <= p[0] <= p[1]:
        raise argparse.ArgumentTypeError(f"probability out of range: {text!r}")
    return p


def _seed(text: str) -> int:
    value = int(text, 0)
    if not 0 <= value < 1 << 64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return value


def _read_graph(args: argparse.Namespace) -> Graph:
    if args.input is not None:
        if args.input == "-":
            text = sys.stdin.read()
        else:
            try:
                with open(args.input) as fh:
                    text = fh.read()
            except OSError as exc:
                raise GraphError(str(exc)) from None
        return parse_graph(text, name=args.input).graph
    if getattr(args, "n", None) is not None:
        return random_graph(args.n, *args.p, seed=args.seed)
    raise GraphError("no input: pass --input FILE or generator parameters --n/--p")


def _write(args: argparse.Namespace, text: str) -> None:
    if args.output is None or args.output == "-":
        sys.stdout.write(text)
    else:
        with open(args.output, "w") as fh:
            fh.write(text)


def _report_text(report: VerificationReport, mode: str) -> str:
    lines = [f"mode: {mode}"]
    lines += [f"{'PASS' if ok else 'FAIL'} {name}" for name, ok in report.clauses.items()]
    lines.append("result: " + ("PASS" if report.passed else "FAIL"))
    if report.witness is not None:
        lines.append("witness: " + json.dumps(report.witness, sort_keys=True))
    return "\n".join(lines) + "\n"


def cmd_decompose(args: argparse.Namespace) -> int:
    g = _read_graph(args)
    d = gallai_edmonds(g)
    if args.format == "json":
        text = emit_decomposition_json(d) + "\n"
    elif args.format == "dot":
        text = emit_dot(g, d)
    else:
        text = emit_decomposition_text(d)
    _write(args, text)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    g = _read_graph(args)
    if args.max_edges > MAX_ENUM_EDGES:
        raise SizeGuardError(f"--max-edges cannot exceed {MAX_ENUM_EDGES}")
    if g.n <= MAX_THEOREM_VERTICES and g.m <= args.max_edges:
        mode, report = "structure-theorem", verify_structure_theorem(g)
    else:
        mode, report = "decomposition", check_decomposition(g)
    if args.format == "json":
        text = json.dumps({"mode": mode, **report.to_dict()}, sort_keys=True) + "\n"
    else:
        text = _report_text(report, mode)
    _write(args, text)
    return EXIT_OK if report.passed else EXIT_VERIFY


def cmd_oracle(args: argparse.Namespace) -> int:
    summary = exhaustive_sweep(args.max_n, jobs=args.jobs)
    if args.format == "json":
        text = json.dumps(summary, sort_keys=True) + "\n"
    else:
        lines = [f"n={n}: {count} graphs" for n, count in summary["graphs"].items()]
        lines.append(f"total: {summary['total']} graphs, {summary['failures']} failures")
        for w in summary["witnesses"]:
            lines.append("witness: " + json.dumps(w, sort_keys=True))
        lines.append("result: " + ("PASS" if summary["passed"] else "FAIL"))
        text = "\n".join(lines) + "\n"
    _write(args, text)
    return EXIT_OK if summary["passed"] else EXIT_VERIFY


def _graph_json(g: Graph) -> str:
    return json.dumps({"n": g.n, "edges": [list(e) for e in g.edges]}, separators=(",", ":"))


def cmd_random(args: argparse.Namespace) -> int:
    if args.n is None:
        raise GraphError("random needs --n")
    g = random_graph(args.n, *args.p, seed=args.seed)
    if args.format == "json":
        text = _graph_json(g) + "\n"
    elif args.format == "dimacs":
        text = emit_dimacs(g)
    else:
        text = emit_edgelist(g)
    _write(args, text)
    return EXIT_OK


def cmd_enumerate(args: argparse.Namespace) -> int:
    if args.n is None:
        raise GraphError("enumerate needs --n")
    chunks = []
    for i, g in enumerate(enumerate_labeled_graphs(args.n)):
        if args.format == "json":
            chunks.append(_graph_json(g) + "\n")
        else:
            chunks.append(f"# graph {i}\n" + emit_edgelist(g))
    _write(args, "".join(chunks))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gallai-edmonds",
        description="Maximum matchings and the Gallai-Edmonds decomposition, with a brute-force checker.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, formats: Sequence[str], default: str) -> None:
        p.add_argument("--format", choices=formats, default=default)
        p.add_argument("--output", help="write here instead of stdout")

    def generator(p: argparse.ArgumentParser) -> None:
        p.add_argument("--n", type=int, help="vertex count for generated graphs")
        p.add_argument("--p", type=parse_probability, default=(1, 2), help="edge probability a/b")
        p.add_argument("--seed", type=_seed, default=0)

    p = sub.add_parser("decompose", help="decompose a graph file")
    p.add_argument("--input", required=True, help="edge-list or DIMACS file, '-' for stdin")
    common(p, ("json", "dot", "text"), "json")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("verify", help="check the structure theorem on one graph")
    p.add_argument("--input", help="edge-list or DIMACS file, '-' for stdin")
    generator(p)
    p.add_argument("--max-edges", type=int, default=MAX_ENUM_EDGES,
                   help="largest edge count for full matching enumeration")
    common(p, ("text", "json"), "text")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="exhaustive check over all small labeled graphs")
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--jobs", type=int, default=1)
    common(p, ("text", "json"), "text")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("random", help="emit a splitmix64 random graph")
    generator(p)
    common(p, ("text", "json", "dimacs"), "text")
    p.set_defaults(func=cmd_random)

    p = sub.add_parser("enumerate", help="stream every labeled graph on n vertices")
    p.add_argument("--n", type=int)
    common(p, ("text", "json"), "text")
    p.set_defaults(func=cmd_enumerate)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SizeGuardError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (GraphError, MinorUndefinedError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
