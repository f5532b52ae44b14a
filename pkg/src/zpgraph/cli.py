"""Command-line front end.

Subcommands print one JSON report (schema ``zpgraph/1``) on standard output,
or JSON lines for ``enumerate``, or DOT for ``export-dot``.  Exit codes: 0 on
success, 2 when ``--require`` is given and the verdict is false, 1 on errors,
64 on bad usage.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from . import __version__
from .canonical import canonical_code
from .criteria import CRITERIA, STRONG, WEAK, n_max, remark_margin, theorem_margin
from .determinantal import empirical_codim, prime_powers, rank_count_table
from .enumeration import EnumerationQuery, EnumerationStats, enumerate_codes, minimal_genus
from .canonical import graph_from_code
from .graph import GraphError, betti1, stability_check, total_genus
from .io import GraphDocument, graph_to_json, load_graph, to_dot
from .residue_model import (
    build_section_space,
    edge,
    h1dr_counts,
    prop1_witness_dim,
    restriction_kernel_dim,
    vertex,
)

SCHEMA = "zpgraph/1"
EX_USAGE = 64

CAVEATS = [
    "verdicts concern the dual graph only; the endomorphism-ring hypothesis on the Jacobian is not checked",
    "residue-model dimensions are model dimensions, not dimensions of spaces of differentials",
]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EX_USAGE, f"{self.prog}: error: {message}\n")


def _emit(obj):
    sys.stdout.write(json.dumps(obj, indent=2, sort_keys=False) + "\n")


def _input_echo(doc: GraphDocument) -> dict:
    return {
        "name": doc.name,
        "notes": list(doc.notes),
        "graph": graph_to_json(doc.graph),
        "canonical_code": canonical_code(doc.graph).hex(),
    }


def analysis_report(doc: GraphDocument, n: int, residue: bool = True) -> dict:
    G = doc.graph
    stab = stability_check(G)
    report = {
        "schema": SCHEMA,
        "command": "analyze",
        "input": _input_echo(doc),
        "genus": {"op": "total_genus", "value": total_genus(G)},
        "betti1": {"op": "betti1", "value": betti1(G)},
        "stability": {
            "op": "stability_check",
            "stable": stab.stable,
            "violations": [G.names[v] for v in stab.violations],
        },
    }
    if not stab:
        raise GraphError("criterion defined for stable curves only")
    strong = theorem_margin(G, n)
    weak = remark_margin(G, n)
    report["strong"] = {"op": "theorem_margin", **strong.as_dict(G)}
    report["weak"] = {"op": "remark_margin", **weak.as_dict(G)}
    report["n_max"] = {"op": "n_max", STRONG: n_max(G, STRONG), WEAK: n_max(G, WEAK)}
    if residue:
        model = build_section_space(G)
        report["residue_model"] = {
            "section_space": {"op": "build_section_space", "dimension": model.dimension},
            "witness_kernels": {
                tag: {
                    "op": "restriction_kernel_dim",
                    "subset": [G.names[v] for v in rep.witness],
                    "value": restriction_kernel_dim(G, rep.witness, model),
                }
                for tag, rep in ((STRONG, strong), (WEAK, weak))
            },
            "h1dr_counts": [
                {"op": "h1dr_counts", "vertex": G.names[v],
                 **{k: x for k, x in h1dr_counts(G, v).items() if k != "vertex"}}
                for v in range(G.num_vertices)
            ],
        }
    report["caveats"] = CAVEATS
    return report


def _cmd_analyze(args):
    doc = load_graph(args.graph)
    report = analysis_report(doc, args.n, residue=not args.no_residue)
    _emit(report)
    chosen = report[args.criterion] if args.criterion else report[STRONG]
    if args.require and not chosen["verdict"]:
        return 2
    return 0


def _cmd_nmax(args):
    doc = load_graph(args.graph)
    G = doc.graph
    tags = [args.criterion] if args.criterion else list(CRITERIA)
    report = {
        "schema": SCHEMA,
        "command": "nmax",
        "input": _input_echo(doc),
        "genus": {"op": "total_genus", "value": total_genus(G)},
        "n_max": {"op": "n_max", **{tag: n_max(G, tag) for tag in tags}},
    }
    _emit(report)
    if args.require and any(report["n_max"][tag] == 0 for tag in tags):
        return 2
    return 0


def _cmd_enumerate(args):
    if (args.criterion is None) != (args.n is None):
        raise UsageError("--criterion and --n must be given together")
    query = EnumerationQuery(args.genus, args.genus_zero, args.max_vertices, args.criterion, args.n)
    stats = EnumerationStats(args.genus)
    for code in enumerate_codes(query, jobs=args.jobs, stats=stats):
        G = graph_from_code(code)
        line = {"schema": SCHEMA, "op": "enumerate_stable_graphs", "code": code.hex(), "graph": graph_to_json(G)}
        sys.stdout.write(json.dumps(line) + "\n")
    logging.getLogger(__name__).info("enumeration stats: %s", stats.as_dict())
    return 0


def _cmd_search(args):
    cert = minimal_genus(args.n, args.criterion, args.max_genus, jobs=args.jobs)
    _emit({"schema": SCHEMA, "command": "search", "op": "minimal_genus", **cert.as_dict()})
    if args.require and cert.claim != "exists":
        return 2
    return 0


def _parse_location(G, text):
    kind, _, ref = text.partition(":")
    if kind == "v":
        return vertex(G.vertex_index(ref))
    if kind == "e":
        try:
            idx = int(ref)
        except ValueError:
            raise UsageError(f"edge location needs an index, got {text!r}") from None
        if not 0 <= idx < G.num_edges:
            raise GraphError(f"edge {idx} not in graph")
        return edge(idx)
    raise UsageError(f"location must look like v:<name> or e:<index>, got {text!r}")


def _cmd_witnessdim(args):
    doc = load_graph(args.graph)
    G = doc.graph
    locs = [_parse_location(G, x) for x in args.loc]
    space = prop1_witness_dim(G, locs)
    n = len(locs)
    report = {
        "schema": SCHEMA,
        "command": "witnessdim",
        "input": _input_echo(doc),
        "locations": [G.names[x.index] if x.kind == "v" else f"e{x.index}" for x in locs],
        "n": n,
        "model_dimension": {"op": "prop1_witness_dim", "value": space.dimension},
        "constraints": len(space.constraints),
        "at_least_n": space.dimension >= n,
    }
    _emit(report)
    if args.require and space.dimension < n:
        return 2
    return 0


def _cmd_detcount(args):
    qs = args.q or [2]
    tables = []
    for q in qs:
        table = rank_count_table(args.n, args.g, q)
        tables.append({
            "op": "rank_count_exact",
            "q": q,
            "counts": list(table.counts),
            "rank_below_n": table.below(args.n),
            "total": q ** (args.n * args.g),
        })
    need = args.n * args.g + 1
    qvals = sorted(set(qs)) if len(set(qs)) >= need else prime_powers(need)
    codim = empirical_codim(args.n, args.g, qvals)
    _emit({
        "schema": SCHEMA,
        "command": "detcount",
        "n": args.n,
        "g": args.g,
        "tables": tables,
        "codimension": {"op": "empirical_codim", **codim.as_dict()},
    })
    return 0


def _cmd_export_dot(args):
    doc = load_graph(args.graph)
    sys.stdout.write(to_dot(doc.graph, doc.name or "dual"))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="zpgraph", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def graph_cmd(name, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("--graph", required=True, help=".zpg or .json graph file")
        return p

    p = graph_cmd("analyze", "criteria, n_max and residue diagnostics for one graph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--criterion", choices=CRITERIA, help="verdict checked by --require (default strong)")
    p.add_argument("--require", action="store_true")
    p.add_argument("--no-residue", action="store_true", help="skip residue-model diagnostics")
    p.set_defaults(func=_cmd_analyze)

    p = graph_cmd("nmax", "largest n passing each criterion")
    p.add_argument("--criterion", choices=CRITERIA)
    p.add_argument("--require", action="store_true")
    p.set_defaults(func=_cmd_nmax)

    p = sub.add_parser("enumerate", help="stable graphs of a genus as JSON lines")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--genus-zero", action="store_true", help="only graphs with all vertex genera 0")
    p.add_argument("--max-vertices", type=int)
    p.add_argument("--criterion", choices=CRITERIA)
    p.add_argument("--n", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("search", help="minimal genus admitting a graph that passes a criterion")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--criterion", choices=CRITERIA, default=STRONG)
    p.add_argument("--max-genus", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--require", action="store_true")
    p.set_defaults(func=_cmd_search)

    p = graph_cmd("witnessdim", "model dimension vanishing on a tuple of locations")
    p.add_argument("--loc", action="append", required=True, help="v:<vertex name> or e:<edge index>; repeatable")
    p.add_argument("--require", action="store_true")
    p.set_defaults(func=_cmd_witnessdim)

    p = sub.add_parser("detcount", help="rank counts of n x g matrices over F_q")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--q", type=int, action="append", help="field size; repeatable")
    p.set_defaults(func=_cmd_detcount)

    p = graph_cmd("export-dot", "Graphviz DOT rendering")
    p.set_defaults(func=_cmd_export_dot)
    return parser


def run_command(argv) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        sys.stderr.write(f"zpgraph: error: {exc}\n")
        return EX_USAGE
    except (GraphError, ValueError, OSError) as exc:
        sys.stderr.write(json.dumps({"schema": SCHEMA, "error": str(exc)}) + "\n")
        return 1


def main():
    try:
        code = run_command(sys.argv[1:])
    except SystemExit as exc:
        code = exc.code
    sys.exit(code)


if __name__ == "__main__":
    main()
