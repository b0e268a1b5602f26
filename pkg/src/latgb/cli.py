"""Command-line entry point.

Exit codes: 0 success, 1 a --expect check was violated, 2 input or
validation error, 3 a budget guard refused the request.  Reports go to
stdout; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from .explorer import (ScanRecord, enumerate_lattices, lattice_id,
                       quadratic_conjecture_scan, render_scan_report,
                       scan_orders, squarefree_conjecture_scan)
from .groebner import lattice_ideal_report, render_binomial
from .lattice import (Lattice, LatticeError, UnknownName, catalog, cut_edges,
                      find_sublattice, is_distributive, is_modular,
                      lattice_to_dict, load_lattice, planar_embedding)
from .orders import (BudgetError, UnknownVariable, rank_revlex,
                     spec_from_string, spec_to_string)
from .toric import (cycle_basis_gb, cycle_binomial, even_cycles, has_chord,
                    lattice_to_graph, ohsugi_hibi_condition)

EXIT_OK = 0
EXIT_EXPECT = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3


def _load_source(source: str, normalize: bool = False) -> Lattice:
    if os.path.exists(source):
        return load_lattice(source, normalize=normalize)
    try:
        return catalog(source)
    except UnknownName:
        raise LatticeError(
            f"{source!r} is neither an existing file nor a catalog name")


def _emit(lines, path):
    text = "\n".join(lines) + "\n"
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_catalog(args) -> int:
    lattice = catalog(args.name)
    print(json.dumps(lattice_to_dict(lattice)))
    return EXIT_OK


def cmd_check(args) -> int:
    lattice = _load_source(args.source, normalize=args.normalize)
    emb = planar_embedding(lattice)
    report = {
        "lattice": True,
        "elements": list(lattice.elements),
        "pure": lattice.is_pure,
        "ranks": dict(lattice.rank) if lattice.rank is not None else None,
        "modular": is_modular(lattice),
        "distributive": is_distributive(lattice),
        "planar": emb is not None,
        "embedding": None if emb is None else {
            "coords": {e: list(c) for e, c in sorted(emb.coords.items())},
            "m": emb.m, "n": emb.n},
        "cut_edges": [list(c) for c in cut_edges(lattice)]
                     if lattice.is_pure else None,
        "sublattices": {p: find_sublattice(lattice, p)
                        for p in ("diamond", "pentagon", "b3", "c2")},
        "canonical_digest": lattice_id(lattice),
    }
    if args.pretty:
        lines = [f"elements:      {len(lattice.elements)}",
                 f"pure:          {report['pure']}",
                 f"modular:       {report['modular']}",
                 f"distributive:  {report['distributive']}",
                 f"planar:        {report['planar']}"]
        if emb is not None:
            coords = ", ".join(f"{e}=({i},{j})" for e, (i, j) in sorted(emb.coords.items()))
            lines.append(f"embedding:     {coords}")
        if report["cut_edges"] is not None:
            lines.append(f"cut edges:     {report['cut_edges']}")
        for p, found in report["sublattices"].items():
            lines.append(f"sublattice {p}: {'yes' if found else 'no'}")
        lines.append(f"digest:        {report['canonical_digest']}")
        print("\n".join(lines))
    else:
        print(json.dumps(report))
    return EXIT_OK


def _order_spec_for(args, lattice: Lattice):
    if args.order and args.rank_order:
        raise LatticeError("--order and --rank-order are mutually exclusive")
    if args.order:
        spec = spec_from_string(args.order)
        if set(spec.priority) != set(lattice.elements):
            missing = set(lattice.elements) - set(spec.priority)
            extra = set(spec.priority) - set(lattice.elements)
            raise UnknownVariable(
                f"order must list the lattice variables exactly "
                f"(missing {sorted(missing)}, unknown {sorted(extra)})")
        return spec
    if args.rank_order:
        tiebreak = args.tiebreak.split(",") if args.tiebreak else None
        return rank_revlex(lattice, tiebreak)
    raise LatticeError("an order is required: --order or --rank-order")


def cmd_gb(args) -> int:
    lattice = _load_source(args.source)
    spec = _order_spec_for(args, lattice)
    print("note: order variables are listed from largest to smallest",
          file=sys.stderr)
    report = lattice_ideal_report(lattice, spec).to_json_dict()
    if args.pretty:
        print(f"order:      {report['order']}")
        print(f"gb:         {report['gb']}")
        print(f"min gens:   {report['min_gens']}")
        print(f"squarefree: {report['squarefree']}")
        print(f"quadratic:  {report['quadratic']}")
        print(f"max degree: {report['max_degree']}")
    else:
        print(json.dumps(report))
    return EXIT_OK


def cmd_scan(args) -> int:
    lattice = _load_source(args.source)
    families = tuple(args.families.split(","))
    mode = "default"
    if args.all_perms:
        mode = "all"
    elif args.sample is not None:
        mode = "sample"
    records = scan_orders(lattice, families, mode,
                          count=args.sample if args.sample is not None else 500,
                          seed=args.seed, force=args.force)
    _emit(render_scan_report(records), args.report)
    if args.expect == "squarefree" and not all(r.squarefree for r in records):
        return EXIT_EXPECT
    if args.expect == "quadratic" and not all(r.quadratic for r in records):
        return EXIT_EXPECT
    return EXIT_OK


def cmd_toric(args) -> int:
    lattice = _load_source(args.source)
    emb = planar_embedding(lattice)
    if emb is None:
        raise LatticeError(
            f"{args.source!r} is not a planar distributive lattice")
    graph = lattice_to_graph(lattice, emb)
    cycles = even_cycles(graph)
    priority = lattice.elements
    report = {
        "parts": [graph.m + 1, graph.n + 1],
        "edges": [{"label": e.label, "i": e.i, "j": e.j} for e in graph.edges],
        "cycles": [{"edges": list(c.labels()), "length": c.length,
                    "has_chord": has_chord(graph, c)} for c in cycles],
        "ohsugi_hibi": ohsugi_hibi_condition(graph),
        "cycle_binomials": [render_binomial(b.lhs, b.rhs, priority)
                            for b in cycle_basis_gb(graph)],
    }
    print(json.dumps(report))
    return EXIT_OK


def cmd_explore(args) -> int:
    families = tuple(args.families.split(","))
    mode = "default"
    if args.all_perms:
        mode = "all"
    elif args.sample is not None:
        mode = "sample"
    count = args.sample if args.sample is not None else 500
    lattices = list(enumerate_lattices(args.max_elems))
    sf = squarefree_conjecture_scan(
        args.max_elems, families, mode, count=count, seed=args.seed,
        force=args.force, jobs=args.jobs, lattices=lattices)
    qs = quadratic_conjecture_scan(
        args.max_elems, families, mode, count=count, seed=args.seed,
        force=args.force, jobs=args.jobs, lattices=lattices)
    lines = []
    for lid, order in sf.violations:
        lines.append(json.dumps({"scan": "squarefree", "lattice_id": lid,
                                 "order": order}, sort_keys=True))
    for lid, order in sf.nonpure_violations:
        lines.append(json.dumps({"scan": "squarefree_nonpure",
                                 "lattice_id": lid, "order": order},
                                sort_keys=True))
    for v in qs:
        lines.append(json.dumps({"scan": "quadratic", **v.to_json_dict()},
                                sort_keys=True))
    summary = {"scan": "summary", "max_elements": args.max_elems,
               "lattice_classes": len(lattices),
               "squarefree_lattices": sf.lattices_scanned,
               "squarefree_specs": sf.specs_checked,
               "squarefree_violations": len(sf.violations),
               "quadratic_lattices": len(qs),
               "quadratic_candidates": sum(v.candidate for v in qs)}
    lines.append(json.dumps(summary, sort_keys=True))
    _emit(lines, args.report)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="latgb",
        description="Binomial ideals of finite lattices: Groebner bases, "
                    "initial-ideal tests and conjecture scans.")
    parser.add_argument("--version", action="version",
                        version=f"latgb {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("catalog", help="print a named lattice as JSON")
    p.add_argument("name")
    p.set_defaults(fn=cmd_catalog)

    p = sub.add_parser("check", help="structural report for a lattice")
    p.add_argument("source", help="lattice file or catalog name")
    p.add_argument("--pretty", action="store_true")
    p.add_argument("--normalize", action="store_true",
                   help="accept non-reduced cover sets with a warning")
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("gb", help="reduced Groebner basis report")
    p.add_argument("source")
    p.add_argument("--order", metavar="FAMILY:V1,V2,...",
                   help="variables listed from largest to smallest")
    p.add_argument("--rank-order", action="store_true",
                   help="rank reverse lexicographic order")
    p.add_argument("--tiebreak", metavar="V1,V2,...",
                   help="tiebreak within rank levels for --rank-order")
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(fn=cmd_gb)

    p = sub.add_parser("scan", help="order sweep over one lattice")
    p.add_argument("source")
    p.add_argument("--families", default="lex,grevlex")
    p.add_argument("--all-perms", action="store_true")
    p.add_argument("--sample", type=int, default=None, metavar="N")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--force", action="store_true",
                   help="override the all-permutations budget guard")
    p.add_argument("--expect", choices=("squarefree", "quadratic"))
    p.add_argument("--report", metavar="PATH")
    p.set_defaults(fn=cmd_scan)

    p = sub.add_parser("toric", help="bipartite edge-graph report")
    p.add_argument("source")
    p.set_defaults(fn=cmd_toric)

    p = sub.add_parser("explore", help="enumerate lattices and run conjecture scans")
    p.add_argument("--max-elems", type=int, default=6)
    p.add_argument("--families", default="lex,grevlex")
    p.add_argument("--all-perms", action="store_true")
    p.add_argument("--sample", type=int, default=None, metavar="N")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--force", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--report", metavar="PATH")
    p.set_defaults(fn=cmd_explore)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except BudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (LatticeError, UnknownVariable, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
