"""Command-line front end.

Graphs are supplied with ``--graph`` using a colon-separated mini-grammar that
composes generators and transforms in one token, e.g.::

    --graph cycle:6
    --graph complete_bipartite:2:3
    --graph splitting:cycle:4:k=2
    --graph subdivision:shadow:complete:4:k=2:
    --graph file:path/to/graph.txt

Output is JSON on stdout (floats at 15 significant digits); ``--csv`` switches
to a CSV/edge-list rendering. Exit codes: 0 success, 1 when a verification
check whose variant is ``corrected`` or ``single`` fails, 2 on usage or I/O
errors.
"""

import argparse
import json
import os
import re
import sys

from .graphs import (
    degree_sequence,
    generate,
    is_connected,
    load_graph,
    adjacency_matrix,
    to_edge_list_text,
    to_json_dict,
)
from . import linalg
from .indices import all_indices
from .spectra import abs_matrix, path_abs_charpoly, spectrum_report
from .transforms import TRANSFORM_KINDS, apply_transform
from .verifier import (
    DEFAULT_TOL,
    default_suite,
    has_key_failure,
    reports_to_csv,
    reports_to_json,
    run_check,
    run_suite,
)

_GENERATOR_ARITY = {"complete": 1, "cycle": 1, "path": 1, "star": 1, "complete_bipartite": 2}
_K_TOKEN = re.compile(r"^k=(\d+)$")


class GraphSpecError(ValueError):
    """A ``--graph`` mini-grammar string could not be parsed."""


def parse_graph_spec(spec):
    """Parse the colon-separated graph grammar into a graph."""
    graph, rest = _parse_tokens(spec.split(":"))
    if rest:
        raise GraphSpecError(f"unexpected trailing tokens {':'.join(rest)!r} in graph spec {spec!r}")
    return graph


def _take_int(tokens, what):
    if not tokens:
        raise GraphSpecError(f"missing integer parameter for {what}")
    try:
        return int(tokens[0]), tokens[1:]
    except ValueError:
        raise GraphSpecError(f"expected an integer for {what}, got {tokens[0]!r}") from None


def _parse_tokens(tokens):
    if not tokens or not tokens[0]:
        raise GraphSpecError("empty graph spec")
    head, rest = tokens[0], tokens[1:]
    if head == "file":
        if not rest:
            raise GraphSpecError("file: needs a path")
        # leave trailing k=N tokens to an enclosing splitting/shadow clause
        path_tokens = list(rest)
        leftover = []
        while path_tokens and _K_TOKEN.match(path_tokens[-1]):
            leftover.insert(0, path_tokens.pop())
        if not path_tokens:
            raise GraphSpecError("file: needs a path")
        return load_graph(":".join(path_tokens)), leftover
    if head in _GENERATOR_ARITY:
        params = []
        for _ in range(_GENERATOR_ARITY[head]):
            value, rest = _take_int(rest, head)
            params.append(value)
        return generate(head, *params), rest
    if head in ("subdivision", "semitotal_point", "semitotal_line"):
        inner, rest = _parse_tokens(rest)
        return apply_transform(head, inner), rest
    if head in ("splitting", "shadow"):
        inner, rest = _parse_tokens(rest)
        if not rest or not _K_TOKEN.match(rest[0]):
            raise GraphSpecError(f"{head}: expects :k=K after the inner graph spec")
        k = int(_K_TOKEN.match(rest[0]).group(1))
        return apply_transform(head, inner, k), rest[1:]
    raise GraphSpecError(f"unknown graph spec head {head!r}")


def _round15(value):
    return 0.0 if value == 0 else float(f"{value:.15g}")


def _json_ready(obj):
    if isinstance(obj, float):
        return _round15(obj)
    if isinstance(obj, dict):
        return {k: _json_ready(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_json_ready(v) for v in obj]
    return obj


def _print_json(obj):
    print(json.dumps(_json_ready(obj), indent=2))


def _emit_graph(graph, csv_mode):
    if csv_mode:
        sys.stdout.write(to_edge_list_text(graph))
    else:
        _print_json(to_json_dict(graph))


def _graph_from_args(args):
    return parse_graph_spec(args.graph)


def _select_matrix(args, graph):
    return abs_matrix(graph) if args.abs else adjacency_matrix(graph)


def _cmd_gen(args):
    _emit_graph(generate(args.kind, *args.params), args.csv)
    return 0


def _cmd_load(args):
    _emit_graph(load_graph(args.path), args.csv)
    return 0


def _cmd_transform(args):
    graph = _graph_from_args(args)
    _emit_graph(apply_transform(args.kind, graph, args.k), args.csv)
    return 0


def _cmd_matrix(args):
    matrix = _select_matrix(args, _graph_from_args(args))
    if args.csv:
        for row in matrix:
            print(",".join(f"{_round15(v):.15g}" for v in row))
    else:
        _print_json({"order": matrix.shape[0], "rows": [list(row) for row in matrix]})
    return 0


def _cmd_spectrum(args):
    report = spectrum_report(_graph_from_args(args), "abs" if args.abs else "adjacency")
    if args.csv:
        print("spectrum," + ",".join(f"{_round15(v):.15g}" for v in report["spectrum"]))
        for key in ("energy", "trace_sq", "harmonic_check"):
            print(f"{key},{_round15(report[key]):.15g}")
    else:
        _print_json(report)
    return 0


def _cmd_indices(args):
    values = all_indices(_graph_from_args(args))
    if args.csv:
        for kind, value in values.items():
            print(f"{kind},{_round15(value):.15g}")
    else:
        _print_json(values)
    return 0


def _cmd_charpoly(args):
    graph = _graph_from_args(args)
    matrix = _select_matrix(args, graph)
    if args.via == "fl":
        coeffs = linalg.char_poly(matrix)
    elif args.via == "roots":
        coeffs = linalg.poly_from_roots(linalg.eigenvalues_symmetric(matrix))
    else:  # recurrence
        if not args.abs:
            raise ValueError("--via recurrence only applies to the ABS matrix (--abs)")
        degs = degree_sequence(graph)
        if not (is_connected(graph) and graph.m == graph.n - 1 and all(d <= 2 for d in degs)):
            raise ValueError("--via recurrence needs a path graph")
        coeffs = path_abs_charpoly(graph.n)
    if args.csv:
        print("coeffs," + ",".join(f"{_round15(v):.15g}" for v in coeffs))
    else:
        _print_json({"order": len(coeffs) - 1, "coeffs": list(coeffs)})
    return 0


def _cmd_verify(args):
    tol = args.tol
    if tol is None:
        tol = float(os.environ.get("ABS_SPECTRA_TOL", DEFAULT_TOL))
    if args.suite:
        reports = run_suite(default_suite(), tol)
    elif args.check:
        if not args.graph:
            raise ValueError("verify --check needs --graph")
        graph = _graph_from_args(args)
        params = {"descriptor": args.graph}
        if args.k is not None:
            params["k"] = args.k
        reports = run_check(args.check, graph, params, tol)
    else:
        raise ValueError("verify needs --suite default or --check ID")
    sys.stdout.write(reports_to_csv(reports) if args.csv else reports_to_json(reports) + "\n")
    return 1 if has_key_failure(reports) else 0


def _add_graph_option(parser, required=True):
    parser.add_argument("--graph", required=required, help="graph spec (see module help)")


def _add_matrix_selector(parser):
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--abs", action="store_true", help="use the ABS matrix")
    group.add_argument("--adjacency", action="store_true", help="use the adjacency matrix")


def build_parser():
    parser = argparse.ArgumentParser(prog="absspectra", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a named graph family member")
    p.add_argument("kind", choices=sorted(_GENERATOR_ARITY))
    p.add_argument("params", nargs="+", type=int, help="size parameters")
    p.add_argument("--csv", action="store_true")
    p.set_defaults(handler=_cmd_gen)

    p = sub.add_parser("load", help="load a graph from a file and echo it")
    p.add_argument("path")
    p.add_argument("--csv", action="store_true")
    p.set_defaults(handler=_cmd_load)

    p = sub.add_parser("transform", help="apply a transform to a graph")
    p.add_argument("kind", choices=TRANSFORM_KINDS)
    p.add_argument("--k", type=int, default=None, help="copy count for splitting/shadow")
    _add_graph_option(p)
    p.add_argument("--csv", action="store_true")
    p.set_defaults(handler=_cmd_transform)

    p = sub.add_parser("matrix", help="emit the ABS or adjacency matrix")
    _add_matrix_selector(p)
    _add_graph_option(p)
    p.add_argument("--csv", action="store_true")
    p.set_defaults(handler=_cmd_matrix)

    for name, help_text in (("spectrum", "emit the spectrum report"), ("energy", "emit the energy report")):
        p = sub.add_parser(name, help=help_text)
        _add_matrix_selector(p)
        _add_graph_option(p)
        p.add_argument("--csv", action="store_true")
        p.set_defaults(handler=_cmd_spectrum)

    p = sub.add_parser("indices", help="emit all degree-based indices")
    _add_graph_option(p)
    p.add_argument("--csv", action="store_true")
    p.set_defaults(handler=_cmd_indices)

    p = sub.add_parser("charpoly", help="emit characteristic polynomial coefficients (ascending)")
    _add_matrix_selector(p)
    p.add_argument("--via", choices=("fl", "roots", "recurrence"), default="fl")
    _add_graph_option(p)
    p.add_argument("--csv", action="store_true")
    p.set_defaults(handler=_cmd_charpoly)

    p = sub.add_parser("verify", help="run identity checks and report verdicts")
    p.add_argument("--suite", choices=("default",), default=None)
    p.add_argument("--check", default=None, help="single check id, e.g. THM_CYCLE")
    _add_graph_option(p, required=False)
    p.add_argument("--k", type=int, default=None, help="copy count for the energy checks")
    p.add_argument("--tol", type=float, default=None, help="tolerance (default 1e-8, env ABS_SPECTRA_TOL)")
    p.add_argument("--csv", action="store_true")
    p.set_defaults(handler=_cmd_verify)

    return parser


def main(argv=None):
    """Entry point; returns the process exit code instead of raising SystemExit."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 2
    try:
        return args.handler(args)
    except (GraphSpecError, ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
