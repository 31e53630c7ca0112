"""Command-line front end for the connected matching polytope toolkit."""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .facet_family import generate_family
from .graph_core import GraphError, format_graph, generate, parse_graph
from .inequality import format_hrep_file, parse_hrep_file
from .matchings import (brute_force_max_weight_cm, enumerate_connected_matchings,
                        format_vrep)
from .msi import dominates, minimal_separators_brute, project_msi
from .polytope import (classify, class_histogram, export_vrep_interop, hrep,
                       verify_valid, vrep)
from .solver import SolveConfig, branch_and_cut


def _load_graph(path, limit):
    with open(path) as fh:
        g = parse_graph(fh.read())
    if g.m > limit:
        raise GraphError(f"graph has {g.m} edges, above --limit {limit}")
    return g


def _emit(text, out):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _weights(g):
    return [g.weight(e) for e in range(1, g.m + 1)]


def cmd_gen(args):
    _emit(format_graph(generate(args.name)), args.output)
    return 0


def cmd_enumerate(args):
    g = _load_graph(args.graph, args.limit)
    vecs = enumerate_connected_matchings(g, limit=args.count_limit)
    _emit(format_vrep(vecs, g.m), args.output)
    return 0


def cmd_hrep(args):
    g = _load_graph(args.graph, args.limit)
    H = hrep(vrep(g, limit=args.count_limit))
    rows = [q.canonicalized() for q in H.facets]
    tagged = []
    for q in rows:
        fc = classify(q, g)
        tagged.append(type(q)(q.coeffs, q.rhs, tag=fc.kind, provenance=q.provenance))
    out = format_hrep_file(tagged, g.m)
    hist = class_histogram(H, g)
    if args.tsv:
        out += "".join(f"class\t{k}\t{v}\n" for k, v in sorted(hist.items()))
    else:
        out += "# class histogram: " + " ".join(
            f"{k}={v}" for k, v in sorted(hist.items())) + "\n"
    _emit(out, args.output)
    return 0


def cmd_family(args):
    g = _load_graph(args.graph, args.limit)
    fam = generate_family(g)
    lines = []
    certified = 0
    for q, cert in fam:
        mark = ""
        if args.certify:
            mark = f" facet_certified={'yes' if cert.facet_certified else 'no'}"
            certified += cert.facet_certified
        if args.tsv:
            lines.append(q.format_line().split("#")[0].strip() + "\t"
                         + f"pair=({cert.pair[0]},{cert.pair[1]})"
                         + (f"\tcertified={int(cert.facet_certified)}" if args.certify else ""))
        else:
            lines.append(q.format_line() + mark)
    if args.certify and not args.tsv:
        lines.append(f"# facet_certified rows: {certified}")
    _emit("\n".join(lines) + "\n", args.output)
    return 0


def cmd_classify(args):
    g = _load_graph(args.graph, args.limit)
    with open(args.ineq) as fh:
        rows = parse_hrep_file(fh.read())
    lines = []
    for q in rows:
        fc = classify(q, g)
        detail = f" {fc.data}" if fc.data else ""
        sep = "\t" if args.tsv else "  ->  "
        lines.append(q.format_line().split("#")[0].strip() + sep + fc.kind + detail)
    _emit("\n".join(lines) + "\n", args.output)
    return 0


def cmd_msi(args):
    g = _load_graph(args.graph, args.limit)
    fam_rows = [q for q, _ in generate_family(g)] if args.dominance else []
    lines = []
    for a in range(1, g.n + 1):
        for b in range(a + 1, g.n + 1):
            if g.edge_id(a, b) is not None:
                continue
            for s in minimal_separators_brute(g, a, b, max_size=args.max_separator):
                row = project_msi(g, s)
                line = row.format_line()
                if args.dominance:
                    dom = [q.provenance for q in fam_rows if dominates(q, row)]
                    if dom:
                        line += " dominated_by[" + "; ".join(dom) + "]"
                lines.append(line)
    _emit("\n".join(lines) + "\n", args.output)
    return 0


def cmd_solve(args):
    g = _load_graph(args.graph, args.limit)
    w = _weights(g)
    config = SolveConfig(use_family_cuts=not args.no_family_cuts,
                         use_msi_separation=not args.no_msi,
                         node_limit=args.node_limit)
    res = branch_and_cut(g, w, config)
    lines = list(res.log)
    lines.append(f"status {res.status}")
    lines.append(f"nodes {res.stats['nodes']} pivots {res.stats['lp_pivots']} "
                 f"cuts_msi {res.stats['cuts']['msi']} "
                 f"cuts_lazy {res.stats['cuts']['lazy']}")
    if not args.no_meta:
        lines.append(f"wall_time {res.stats['wall_time']:.3f}s")
    if args.oracle_check:
        val, _ = brute_force_max_weight_cm(g, w)
        lines.append("MATCH" if val == res.value and res.status == "optimal"
                     else "MISMATCH")
    _emit("\n".join(lines) + "\n", args.output)
    return 0


def cmd_verify(args):
    g = _load_graph(args.graph, args.limit)
    with open(args.ineq) as fh:
        rows = parse_hrep_file(fh.read())
    V = vrep(g, limit=args.count_limit)
    bad = 0
    lines = []
    for q in rows:
        violators = verify_valid(q, V)
        lines.append(("VALID " if not violators else
                      f"INVALID ({len(violators)} violations) ")
                     + q.format_line())
        bad += bool(violators)
    _emit("\n".join(lines) + "\n", args.output)
    return 1 if bad else 0


def cmd_export(args):
    g = _load_graph(args.graph, args.limit)
    _emit(export_vrep_interop(vrep(g, limit=args.count_limit)), args.output)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="cmpoly",
        description="Inspect and optimize over the connected matching polytope.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, graph=True):
        if graph:
            p.add_argument("-g", "--graph", required=True, help="graph file")
        p.add_argument("-o", "--output", default=None, help="output file")
        p.add_argument("--limit", type=int, default=20,
                       help="max edge count accepted (default 20)")
        p.add_argument("--count-limit", type=int, default=200_000,
                       help="max enumerated matchings (default 200000)")
        p.add_argument("--tsv", action="store_true",
                       help="machine-readable output")
        p.add_argument("--no-meta", action="store_true",
                       help="suppress non-reproducible report lines")

    p = sub.add_parser("gen", help="write a generated graph")
    p.add_argument("--name", required=True)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("enumerate", help="V-description of the polytope")
    common(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("hrep", help="minimal facet description + class histogram")
    common(p)
    p.set_defaults(func=cmd_hrep)

    p = sub.add_parser("family", help="generate the pairwise inequality family")
    common(p)
    p.add_argument("--certify", action="store_true",
                   help="report the facet certificate per row")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("classify", help="classify rows of an inequality file")
    common(p)
    p.add_argument("--ineq", required=True, help="inequality file")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("msi", help="projected minimal separator inequalities")
    common(p)
    p.add_argument("--max-separator", type=int, default=None,
                   help="cap on brute-force separator size")
    p.add_argument("--dominance", action="store_true",
                   help="mark rows dominated by a family inequality")
    p.set_defaults(func=cmd_msi)

    p = sub.add_parser("solve", help="branch-and-cut on the graph's weights")
    common(p)
    p.add_argument("--oracle-check", action="store_true",
                   help="compare against the brute-force oracle")
    p.add_argument("--no-family-cuts", action="store_true")
    p.add_argument("--no-msi", action="store_true")
    p.add_argument("--node-limit", type=int, default=100_000)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check an inequality file against vrep")
    common(p)
    p.add_argument("--ineq", required=True, help="inequality file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export", help="interop POINTS export of the V-description")
    common(p)
    p.set_defaults(func=cmd_export)

    return parser


def run(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraphError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main():
    raise SystemExit(run())


if __name__ == "__main__":
    main()
