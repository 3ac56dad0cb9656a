"""Command-line entry point: ``totalgraphs <subcommand> ...``.

Exit codes: 0 valid, 1 invalid artifact, 2 precondition or parse error,
3 size guard or search budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import generators
from .coloring.oracles import (
    DEFAULT_MAX_ELEMENTS,
    brute_force_total_chromatic,
    chromatic_index,
    chromatic_number,
)
from .coloring.total import ElementColoring, trails_to_json, verify_total_coloring, weak_tcc_total_coloring
from .coloring.vertex import DEFAULT_BUDGET
from .derived import EVertex, line_graph, square, subdivision, to_dot, total_graph
from .errors import BudgetExceededError, InvariantViolation, PreconditionError, SizeGuardError
from .graph import Graph, max_degree, parse_graph, write_graph
from .minors import (
    MinorCertificate,
    is_total_critical,
    minor_certificate_from_connectivity,
    minor_from_critical_delta_plus_2,
    minor_from_critical_delta_plus_3,
    verify_minor_certificate,
)

EXIT_OK, EXIT_INVALID, EXIT_PRECONDITION, EXIT_GUARD = 0, 1, 2, 3


class UsageError(PreconditionError):
    pass


# ---------------------------------------------------------------------------
# I/O helpers

def _read_text(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fp:
            return fp.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _read_json(path: str):
    try:
        return json.loads(_read_text(path))
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: invalid JSON ({exc})") from None


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fp:
            fp.write(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _graph_json(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edges]}


def _render_graph(g: Graph, fmt: str, comments=(), extra: dict | None = None, dot_source=None) -> str:
    if fmt == "text":
        return write_graph(g, comments)
    if fmt == "dot":
        return to_dot(dot_source if dot_source is not None else g)
    obj = _graph_json(g)
    obj.update(extra or {})
    return _dump(obj)


def _load_graph(args) -> Graph:
    return parse_graph(_read_text(args.input))


# ---------------------------------------------------------------------------
# Subcommands

def cmd_derive(args) -> int:
    g = _load_graph(args)
    if args.which == "total":
        t = total_graph(g)
        comments = []
        for i, el in enumerate(t.elements()):
            if isinstance(el, EVertex):
                comments.append(f"element {i} e {el.u} {el.v}")
            else:
                comments.append(f"element {i} v {el.id}")
        out = _render_graph(t.graph, args.format, comments, {"element_map": t.element_map_json()}, t)
    elif args.which == "line":
        h, edges = line_graph(g)
        comments = [f"vertex {r} edge {u} {v}" for r, (u, v) in enumerate(edges)]
        out = _render_graph(h, args.format, comments, {"edge_of_vertex": [list(e) for e in edges]})
    elif args.which == "subdivision":
        h, middle = subdivision(g)
        comments = [f"vertex {w} subdivides {u} {v}" for (u, v), w in middle.items()]
        out = _render_graph(h, args.format, comments)
    else:
        out = _render_graph(square(g), args.format)
    _write(args.output, out)
    return EXIT_OK


def _parse_vertex_coloring(obj, n: int) -> list[int]:
    colors = obj.get("vertex_colors") if isinstance(obj, dict) else obj
    if not isinstance(colors, list) or not all(isinstance(c, int) for c in colors):
        raise UsageError("external coloring must be a list of integers or {\"vertex_colors\": [...]}")
    if len(colors) != n:
        raise UsageError(f"external coloring has {len(colors)} entries for {n} vertices")
    return colors


def cmd_color_total(args) -> int:
    g = _load_graph(args)
    external = None
    if args.external_coloring:
        external = _parse_vertex_coloring(_read_json(args.external_coloring), g.n)
    result = weak_tcc_total_coloring(g, external, check_invariants=args.check_invariants, budget=args.budget)
    bound = max_degree(g) + 3
    _write(args.output, _dump(result.coloring.to_json()))
    if args.trails:
        _write(args.trails, trails_to_json(result.trails) + "\n")
    report = result.report.to_json()
    report.update(bound=bound, within_bound=result.report.max_color <= bound, stats=result.stats)
    print(json.dumps(report), file=sys.stderr)
    return EXIT_OK if result.report.valid and result.report.max_color <= bound else EXIT_INVALID


def cmd_minor(args) -> int:
    g = _load_graph(args)
    if args.mode == "connectivity":
        if args.k is None:
            raise UsageError("--k is required for connectivity mode")
        cert = minor_certificate_from_connectivity(g, args.k)
    elif args.mode == "critical2":
        cert = minor_from_critical_delta_plus_2(g)
    else:
        cert = minor_from_critical_delta_plus_3(g, relaxed=args.relaxed,
                                              max_elements=args.max_elements or DEFAULT_MAX_ELEMENTS)
    _write(args.output, _dump(cert.to_json()))
    return EXIT_OK


def _render_report(obj: dict, fmt: str) -> str:
    if fmt == "json":
        return _dump(obj)
    lines = [f"valid: {str(obj['valid']).lower()}"]
    for key, value in obj.items():
        if key in ("valid", "failures", "violations"):
            continue
        lines.append(f"{key}: {value}")
    for item in obj.get("failures", []):
        lines.append(f"failure: {item}")
    for a, b in obj.get("violations", []):
        lines.append(f"violation: {json.dumps(a)} {json.dumps(b)}")
    return "\n".join(lines) + "\n"


def cmd_verify(args) -> int:
    g = _load_graph(args)
    obj = _read_json(args.artifact)
    if not isinstance(obj, dict):
        raise UsageError("artifact must be a JSON object")
    if args.kind == "coloring":
        try:
            coloring = ElementColoring.from_json(g, obj)
        except (KeyError, TypeError) as exc:
            raise UsageError(f"coloring does not match the schema: {exc}") from None
        report = verify_total_coloring(g, coloring).to_json()
        report["bound"] = max_degree(g) + 3
    else:
        try:
            cert = MinorCertificate.from_json(obj)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        report = verify_minor_certificate(total_graph(g), cert).to_json()
        report["provenance"] = cert.provenance
    _write(args.output, _render_report(report, args.format))
    return EXIT_OK if report["valid"] else EXIT_INVALID


def cmd_oracle(args) -> int:
    g = _load_graph(args)
    limit = args.max_elements
    q = args.quantity
    if q == "chi":
        value = chromatic_number(g, limit or 16)
    elif q == "chi_prime":
        value = chromatic_index(g, limit or 16)
    elif q == "chi_double_prime":
        value = brute_force_total_chromatic(g, limit or DEFAULT_MAX_ELEMENTS)
    else:
        if args.t is None:
            raise UsageError("--t is required for criticality")
        value = is_total_critical(g, args.t, limit or DEFAULT_MAX_ELEMENTS)
    if args.format == "json":
        out = _dump({"quantity": q, "value": value} | ({"t": args.t} if q == "criticality" else {}))
    else:
        out = f"{str(value).lower() if isinstance(value, bool) else value}\n"
    _write(args.output, out)
    return EXIT_OK


def _gen_params(family: str, params: list[str]) -> list:
    if family == "random_5_partite":
        if len(params) != 2:
            raise UsageError("random_5_partite takes parameters: n p")
        kinds = (int, float)
    elif family in generators.FAMILIES:
        kinds = generators.FAMILIES[family][1]
    else:
        raise UsageError(f"unknown family {family!r}")
    if len(params) != len(kinds):
        raise UsageError(f"{family} takes {len(kinds)} parameter(s), got {len(params)}")
    try:
        values = [kind(p) for kind, p in zip(kinds, params)]
    except ValueError:
        raise UsageError(f"invalid parameters for {family}: {' '.join(params)}") from None
    return values


def cmd_gen(args) -> int:
    values = _gen_params(args.family, args.params)
    comments = [f"family {args.family} {' '.join(args.params)}".rstrip()]
    extra = {}
    try:
        if args.family == "random_5_partite":
            g, planted = generators.random_5_partite(values[0], values[1], args.seed)
            comments.append(f"seed {args.seed}")
            comments.append("planted " + " ".join(map(str, planted)))
            extra["planted_coloring"] = planted
            if args.planted_output:
                _write(args.planted_output, _dump({"vertex_colors": planted}))
        else:
            g = generators.FAMILIES[args.family][0](*values)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _write(args.output, _render_graph(g, args.format, comments, extra))
    return EXIT_OK


# ---------------------------------------------------------------------------
# Parser

def _positive(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", "-i", help="graph file in edge-list format ('-' for stdin)")
    common.add_argument("--output", "-o", help="output path (default stdout)")
    common.add_argument("--format", choices=("json", "dot", "text"), default="text")
    common.add_argument("--max-elements", type=_positive, default=None,
                        help="size guard for brute-force computations")

    parser = argparse.ArgumentParser(prog="totalgraphs", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("derive", parents=[common], help="build a derived graph")
    p.add_argument("--which", choices=("total", "line", "subdivision", "square"), default="total")
    p.set_defaults(func=cmd_derive)

    p = sub.add_parser("color-total", parents=[common], help="(Delta+3)-total coloring of a 5-colorable graph")
    p.add_argument("--external-coloring", help="JSON file with a proper vertex 5-coloring")
    p.add_argument("--trails", help="write the trail audit records to this JSON file")
    p.add_argument("--check-invariants", action="store_true", help="check the shift invariants after every fix")
    p.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET, help="node budget for the 5-coloring search")
    p.set_defaults(func=cmd_color_total)

    p = sub.add_parser("minor", parents=[common], help="build a clique-minor certificate")
    p.add_argument("--mode", choices=("connectivity", "critical2", "critical3"), required=True)
    p.add_argument("--k", type=_positive)
    p.add_argument("--relaxed", action="store_true", help="critical3: accept any 2-connected graph with min degree >= 3")
    p.set_defaults(func=cmd_minor)

    p = sub.add_parser("verify", parents=[common], help="check a coloring or certificate against a graph")
    p.add_argument("--artifact", required=True)
    p.add_argument("--kind", choices=("coloring", "certificate"), required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", parents=[common], help="brute-force chromatic quantities")
    p.add_argument("--quantity", choices=("chi", "chi_prime", "chi_double_prime", "criticality"), required=True)
    p.add_argument("--t", type=_positive)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("gen", parents=[common], help="generate a graph family")
    p.add_argument("family", choices=("random_5_partite", *generators.FAMILIES))
    p.add_argument("params", nargs="*")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--planted-output", help="random_5_partite: write the planted coloring JSON here")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (SizeGuardError, BudgetExceededError) as exc:
        print(f"error: too large: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except InvariantViolation as exc:
        print(f"error: internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except ValueError as exc:           # parse, precondition and infeasibility errors
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
