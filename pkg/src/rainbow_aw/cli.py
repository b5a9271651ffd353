"""Command-line interface.

Machine-readable results are JSON on stdout (JSON Lines for sweeps);
human-readable traces are opt-in via --explain.  Vertex ids in JSON are
0-based flat ids; product coordinates in traces, figures and DOT labels
are the 1-based v{i},{j} form.

Exit codes: 0 success; 1 domain error or crosscheck disagreement;
2 usage error; 3 inconclusive search.  The RAINBOW_AW_LOG environment
variable sets the log level (DEBUG, INFO, ...).
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys

from .classify import AwResult, aw_forest_product, aw_tree_product, explain
from .coloring import (
    Coloring,
    diametral_coloring,
    find_diametral_witness,
    find_rainbow_3ap,
)
from .crosscheck import crosscheck_sweep, write_jsonl
from .graphs import DomainError, Graph, GraphFormatError, load_edge_list, to_dot
from .oracle import (
    INCONCLUSIVE,
    SearchBudget,
    brute_force_aw3,
    exists_rainbow_free_exact_coloring,
)
from .product import ProductGraph, cartesian_product, product_labels
from .trees import canonical_form, classify_tree, enumerate_trees

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2
EXIT_INCONCLUSIVE = 3


def _emit(obj: dict) -> None:
    print(json.dumps(obj, indent=2))


def _load_coloring(path: str) -> Coloring:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return Coloring.from_json(json.load(fh))
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"{path}: not valid JSON ({exc})") from exc


def _write_coloring(c: Coloring, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(c.to_json(), fh)
        fh.write("\n")


def _triple_json(pg: ProductGraph, t) -> dict:
    return {
        "x": t.x,
        "y": t.y,
        "z": t.z,
        "d": t.d,
        "coords": {
            name: [c + 1 for c in pg.coords(v)]
            for name, v in (("x", t.x), ("y", t.y), ("z", t.z))
        },
    }


def _budget_from(args: argparse.Namespace) -> SearchBudget:
    return SearchBudget(
        max_nodes=args.budget_nodes,
        max_ms=args.budget_ms,
        max_vertices=args.max_vertices,
    )


def _add_budget_flags(p: argparse.ArgumentParser) -> None:
    defaults = SearchBudget()
    p.add_argument("--budget-nodes", type=int, default=defaults.max_nodes,
                   help="search node limit per palette size")
    p.add_argument("--budget-ms", type=float, default=defaults.max_ms,
                   help="wall-clock limit per palette size, milliseconds")
    p.add_argument("--max-vertices", type=int, default=defaults.max_vertices,
                   help="largest host graph the search will accept")


def cmd_classify(args: argparse.Namespace) -> int:
    cls = classify_tree(load_edge_list(args.tree))
    _emit(cls.to_json())
    return EXIT_OK


def cmd_aw(args: argparse.Namespace) -> int:
    t1 = load_edge_list(args.tree1)
    t2 = load_edge_list(args.tree2)
    result = aw_tree_product(t1, t2)
    payload = result.to_json()
    if args.emit_coloring:
        if result.coloring is None:
            raise DomainError(
                f"rule {result.rule} results carry no witness coloring to emit"
            )
        _write_coloring(result.coloring, args.emit_coloring)
        payload["coloring_ref"] = args.emit_coloring
    _emit(payload)
    if args.explain:
        print(explain(result))
    return EXIT_OK


def cmd_aw_forest(args: argparse.Namespace) -> int:
    result = aw_forest_product(load_edge_list(args.forest1), load_edge_list(args.forest2))
    _emit(result.to_json())
    return EXIT_OK


def cmd_color(args: argparse.Namespace) -> int:
    t1 = load_edge_list(args.tree1)
    t2 = load_edge_list(args.tree2)
    witness = find_diametral_witness(t1, t2)
    if witness is None:
        raise DomainError(
            "no two-pole witness: some factor is weakly non-3-peripheral with odd diameter"
        )
    pg = cartesian_product(t1, t2)
    c = diametral_coloring(pg, witness)
    _write_coloring(c, args.out)
    rainbow = find_rainbow_3ap(pg, c)
    payload = {
        "witness": witness.to_json(),
        "product": {"n1": pg.n1, "n2": pg.n2, "n": pg.n, "diameter": pg.diameter},
        "rainbow_free": rainbow is None,
        "out": args.out,
    }
    if rainbow is not None:
        payload["rainbow"] = _triple_json(pg, rainbow)
    _render_product_extras(pg, c, args)
    _emit(payload)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    t1 = load_edge_list(args.tree1)
    t2 = load_edge_list(args.tree2)
    pg = cartesian_product(t1, t2)
    c = _load_coloring(args.coloring)
    if len(c.colors) != pg.n:
        raise DomainError(
            f"coloring has {len(c.colors)} entries but the product has {pg.n} vertices"
        )
    rainbow = find_rainbow_3ap(pg, c)
    payload = {
        "exact": c.is_exact(),
        "colors_used": len(c.used_colors()),
        "verdict": "rainbow-free" if rainbow is None else "rainbow",
    }
    if rainbow is not None:
        payload["rainbow"] = _triple_json(pg, rainbow)
    _render_product_extras(pg, c, args)
    _emit(payload)
    return EXIT_OK


def _render_product_extras(pg: ProductGraph, c: Coloring, args: argparse.Namespace) -> None:
    if getattr(args, "figure", None):
        from .figures import save_product_coloring

        save_product_coloring(pg, c, args.figure)
    if getattr(args, "dot", None):
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(to_dot(pg.graph, coloring=c.colors, labels=product_labels(pg)))


def cmd_oracle(args: argparse.Namespace) -> int:
    g = load_edge_list(args.graph)
    budget = _budget_from(args)
    if args.r is not None:
        outcome = exists_rainbow_free_exact_coloring(g, args.r, budget)
        _emit(outcome.to_json())
        return EXIT_INCONCLUSIVE if outcome.status == INCONCLUSIVE else EXIT_OK
    result = brute_force_aw3(g, budget)
    _emit(result.to_json())
    return EXIT_INCONCLUSIVE if result.inconclusive else EXIT_OK


def cmd_crosscheck(args: argparse.Namespace) -> int:
    records = crosscheck_sweep(
        args.max_factor,
        budget=_budget_from(args),
        jobs=args.jobs,
        include_equal=args.include_equal,
    )
    if args.out:
        write_jsonl(records, args.out)
        if not args.no_figures:
            from .figures import save_crosscheck_figures

            base = args.out[:-6] if args.out.endswith(".jsonl") else args.out
            for path in save_crosscheck_figures(records, base):
                log.info("figure written: %s", path)
    else:
        for rec in records:
            print(json.dumps(rec.to_json()))
    disagreements = sum(1 for r in records if not r.agree and not r.inconclusive)
    inconclusive = sum(1 for r in records if r.inconclusive)
    print(
        f"pairs={len(records)} agree={len(records) - disagreements - inconclusive} "
        f"disagree={disagreements} inconclusive={inconclusive}",
        file=sys.stderr,
    )
    if disagreements:
        return EXIT_DOMAIN
    if inconclusive:
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def cmd_enumerate_trees(args: argparse.Namespace) -> int:
    trees = enumerate_trees(args.n, bound=args.bound)
    _emit(
        {
            "n": args.n,
            "count": len(trees),
            "trees": [
                {"canonical": canonical_form(t), "edges": [list(e) for e in t.edges()]}
                for t in trees
            ],
        }
    )
    return EXIT_OK


def cmd_export_dot(args: argparse.Namespace) -> int:
    g = load_edge_list(args.graph)
    colors = None
    if args.coloring:
        c = _load_coloring(args.coloring)
        if len(c.colors) != g.n:
            raise DomainError(
                f"coloring has {len(c.colors)} entries but the graph has {g.n} vertices"
            )
        colors = c.colors
    sys.stdout.write(to_dot(g, coloring=colors))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rainbow-aw",
        description="anti-van der Waerden numbers of tree and forest Cartesian products",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="peripheral classification of one tree")
    p.add_argument("tree", help="edge-list file")
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("aw", help="aw of a product of two trees, by classification")
    p.add_argument("tree1")
    p.add_argument("tree2")
    p.add_argument("--explain", action="store_true", help="append a human-readable trace")
    p.add_argument("--emit-coloring", metavar="PATH", help="write the witness coloring JSON")
    p.set_defaults(fn=cmd_aw)

    p = sub.add_parser("aw-forest", help="aw of a product of two forests")
    p.add_argument("forest1")
    p.add_argument("forest2")
    p.set_defaults(fn=cmd_aw_forest)

    p = sub.add_parser("color", help="build the two-pole coloring of a tree product")
    p.add_argument("tree1")
    p.add_argument("tree2")
    p.add_argument("--out", required=True, metavar="PATH", help="coloring JSON output")
    p.add_argument("--figure", metavar="PATH", help="also render the colored product")
    p.add_argument("--dot", metavar="PATH", help="also write product DOT with v{i},{j} labels")
    p.set_defaults(fn=cmd_color)

    p = sub.add_parser("verify", help="check a coloring of a tree product for rainbow 3-APs")
    p.add_argument("tree1")
    p.add_argument("tree2")
    p.add_argument("--coloring", required=True, metavar="PATH")
    p.add_argument("--figure", metavar="PATH", help="also render the colored product")
    p.add_argument("--dot", metavar="PATH", help="also write product DOT with v{i},{j} labels")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("oracle", help="exhaustive search on an arbitrary connected graph")
    p.add_argument("graph")
    p.add_argument("--r", type=int, help="search one palette size instead of scanning aw")
    _add_budget_flags(p)
    p.set_defaults(fn=cmd_oracle)

    p = sub.add_parser("crosscheck", help="sweep tree pairs: classifier vs exhaustive search")
    p.add_argument("--max-factor", type=int, required=True, help="largest factor order")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("--out", metavar="PATH.jsonl", help="write JSON Lines here instead of stdout")
    p.add_argument("--include-equal", action="store_true",
                   help="also sweep pairs of isomorphic trees")
    p.add_argument("--no-figures", action="store_true",
                   help="skip the summary figures rendered alongside --out")
    _add_budget_flags(p)
    p.set_defaults(fn=cmd_crosscheck)

    p = sub.add_parser("enumerate-trees", help="non-isomorphic trees on n vertices")
    p.add_argument("n", type=int)
    p.add_argument("--bound", type=int, default=10,
                   help="refuse orders above this (the catalog grows fast)")
    p.set_defaults(fn=cmd_enumerate_trees)

    p = sub.add_parser("export-dot", help="Graphviz DOT for an edge-list graph")
    p.add_argument("graph")
    p.add_argument("--coloring", metavar="PATH", help="coloring JSON for fill colors")
    p.set_defaults(fn=cmd_export_dot)

    return parser


def main(argv: list[str] | None = None) -> int:
    level = os.environ.get("RAINBOW_AW_LOG", "WARNING").upper()
    logging.basicConfig(level=getattr(logging, level, logging.WARNING))
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (DomainError, GraphFormatError) as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
