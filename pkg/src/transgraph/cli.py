"""Command-line front end.

Subcommands
-----------
transform
    Build a classical (``--classical +-+``) or generalised
    (``--r/--s/--x/--y/--z``) transformation graph; write DOT or an edge list.
index
    Print n, m, M1, M2 and F of a graph.
verify
    Oracle sweep of the closed-form M1 formulas; writes a JSON report.

Exit status: 0 success, 1 input error, 2 usage error, 3 derived-formula mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__
from .errors import TransgraphError, ValidationError
from .graph import Graph, format_edge_list, parse_edge_list
from .indices import index_bundle
from .transform import Sign, TransformSpec, classical_transform, generalized_transform
from .verify import sweep, sweep_graph_list, sweep_graphs

SCHEMA_VERSION = "1.0"

EXIT_OK, EXIT_INPUT, EXIT_USAGE, EXIT_MISMATCH = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _read_graph(path: str) -> Graph:
    return parse_edge_list(Path(path).read_text(encoding="utf-8"))


def _emit(text: str, output: str | None) -> None:
    if output is None or output == "-":
        sys.stdout.write(text)
    else:
        Path(output).write_text(text, encoding="utf-8")


def _document(inputs: dict, **body) -> str:
    doc = {"schema_version": SCHEMA_VERSION, "tool_version": __version__, "inputs": inputs, **body}
    return json.dumps(doc, indent=2) + "\n"


def _spec_from_args(args: argparse.Namespace) -> TransformSpec:
    general = [args.r, args.s, args.x, args.y, args.z]
    if args.classical is not None:
        if any(v is not None for v in general):
            raise UsageError("--classical cannot be combined with --r/--s/--x/--y/--z")
        if len(args.classical) != 3:
            raise UsageError(f"--classical needs exactly three signs, got {args.classical!r}")
        try:
            return TransformSpec.classical(*Sign.parse(args.classical))
        except ValidationError as exc:
            raise UsageError(str(exc)) from None
    if any(v is None for v in general):
        raise UsageError("give either --classical or all of --r --s --x --y --z")
    if args.r < 1 or args.s < 1:
        raise UsageError("--r and --s must be >= 1")
    if len(args.x) != args.r:
        raise UsageError(f"--x has {len(args.x)} signs, expected r = {args.r}")
    if len(args.y) != args.s:
        raise UsageError(f"--y has {len(args.y)} signs, expected s = {args.s}")
    if len(args.z) != args.r * args.s:
        raise UsageError(f"--z has {len(args.z)} signs, expected r*s = {args.r * args.s}")
    try:
        return TransformSpec.from_strings(args.x, args.y, args.z)
    except ValidationError as exc:
        raise UsageError(str(exc)) from None


def cmd_transform(args: argparse.Namespace) -> int:
    spec = _spec_from_args(args)
    g = _read_graph(args.input)
    if args.classical is not None:
        tg = classical_transform(g, *spec.x, *spec.y, spec.z[0][0])
    else:
        tg = generalized_transform(g, spec)
    if args.format == "dot":
        text = tg.to_dot()
    else:
        comments = [str(spec)] + [f"{i} {tg.dot_label(lab)}" for i, lab in enumerate(tg.labels, start=1)]
        text = format_edge_list(tg.graph, comments)
    _emit(text, args.output)
    return EXIT_OK


def cmd_index(args: argparse.Namespace) -> int:
    b = index_bundle(_read_graph(args.input))
    if args.json:
        indices = {"n": b.n, "m": b.m, "M1": b.m1, "M2": b.m2, "F": b.f}
        sys.stdout.write(_document({"input": args.input}, indices=indices))
    else:
        print(f"n={b.n} m={b.m} M1={b.m1} M2={b.m2} F={b.f}")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    if args.r_max < 1 or args.s_max < 1:
        raise UsageError("--r-max and --s-max must be >= 1")
    if args.graph is not None:
        graphs = [_read_graph(args.graph)]
        inputs = {"graph": args.graph, "r_max": args.r_max, "s_max": args.s_max}
        report = sweep_graphs(graphs, args.r_max, args.s_max)
    else:
        if args.n_min < 1 or args.n_max < args.n_min:
            raise UsageError("need 1 <= --n-min <= --n-max")
        if args.trials < 0:
            raise UsageError("--trials must be >= 0")
        if not 0 <= args.edge_prob <= 1:
            raise UsageError("--edge-prob must lie in [0, 1]")
        inputs = {
            "n_min": args.n_min,
            "n_max": args.n_max,
            "trials": args.trials,
            "edge_prob": str(args.edge_prob),
            "seed": args.seed,
            "r_max": args.r_max,
            "s_max": args.s_max,
            "require_connected": not args.allow_disconnected,
        }
        report = sweep(
            args.n_min, args.n_max, args.trials, args.edge_prob, args.seed,
            args.r_max, args.s_max, require_connected=not args.allow_disconnected,
        )
    text = _document(inputs, records=[rec.as_dict() for rec in report.records], summary=report.summary())
    _emit(text, args.report)
    for family, stats in report.family_stats.items():
        print(
            f"{family}: {stats['records']} records, derived {stats['derived_matches']}, "
            f"printed {stats['printed_matches']}",
            file=sys.stderr,
        )
    return EXIT_OK if report.derived_ok else EXIT_MISMATCH


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="transgraph", description=__doc__.split("\n")[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    t = sub.add_parser("transform", help="construct a transformation graph")
    t.add_argument("--input", required=True, help="edge-list file")
    t.add_argument("--classical", help="three signs u v w, e.g. '+-+'")
    t.add_argument("--r", type=int)
    t.add_argument("--s", type=int)
    t.add_argument("--x", help="r signs for the vertex copies")
    t.add_argument("--y", help="s signs for the edge copies")
    t.add_argument("--z", help="r*s incidence signs, row-major")
    t.add_argument("--format", choices=("dot", "edges"), default="dot")
    t.add_argument("--output", help="output path (default: stdout)")
    t.set_defaults(func=cmd_transform)

    i = sub.add_parser("index", help="print n, m, M1, M2, F")
    i.add_argument("--input", required=True)
    i.add_argument("--json", action="store_true")
    i.set_defaults(func=cmd_index)

    v = sub.add_parser("verify", help="oracle sweep of the closed forms")
    v.add_argument("--n-min", type=int, default=2)
    v.add_argument("--n-max", type=int, default=8)
    v.add_argument("--trials", type=int, default=50)
    v.add_argument("--edge-prob", type=_fraction, default=Fraction(1, 2))
    v.add_argument("--seed", type=int, default=42)
    v.add_argument("--r-max", type=int, default=3)
    v.add_argument("--s-max", type=int, default=3)
    v.add_argument("--allow-disconnected", action="store_true", help="do not reject disconnected samples")
    v.add_argument("--graph", help="verify this edge-list file instead of random trials")
    v.add_argument("--report", help="JSON report path (default: stdout)")
    v.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))  # exits with status 2
    except (TransgraphError, OSError) as exc:
        print(f"transgraph: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
