"""Command-line front end.

Every result is printed as one JSON object per line.  Exit status is 0 on
success, 1 when the input is rejected, 2 when an internal invariant of the
pipeline fails (which would be a correctness finding).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import oracle
from .gen import GenSpec, generate
from .graph_core import GraphError, InternalInvariant, load_block_graph, read_graph
from .judge import analyze
from .verify import parse_seed_range, verify_corpus


def _emit(doc: dict, out) -> None:
    out.write(json.dumps(doc, sort_keys=False) + "\n")


def _dump_order(a, out) -> None:
    ro = a.order
    if ro is None:
        return
    for v in ro.order:
        out.write(f"{v}\t{ro.position[v]}\t{ro.father[v]}\t{ro.depth[v]}\n")


def _dump_prune(a, out) -> None:
    if a.state is None:
        return
    for entry in a.state.trace:
        out.write(entry.format() + "\n")


def cmd_analyze(args, out) -> int:
    g = read_graph(args.graph)
    bc = load_block_graph(g)
    vertices = range(g.n) if args.all_vertices else [args.vertex]
    for v in vertices:
        a = analyze(g, v, bc)
        if args.dump_order:
            _dump_order(a, out)
        if args.dump_prune:
            _dump_prune(a, out)
        _emit(a.verdict.as_dict(vertex=v), out)
    return 0


def cmd_prune_dump(args, out) -> int:
    g = read_graph(args.graph)
    a = analyze(g, args.vertex)
    _dump_prune(a, out)
    if a.pruned is not None:
        _emit(
            {
                "vertex": args.vertex,
                "pruned_vertices": list(a.pruned.vertices),
                "removed_weight": a.state.removed_weight,
                "annotations": {
                    str(ann.block): ann.kind.value for ann in a.state.annotations
                },
            },
            out,
        )
    return 0


def cmd_oracle(args, out) -> int:
    g = read_graph(args.graph)
    res = oracle.solve(g, cap=args.cap, keep_sets=args.list_sets)
    _emit(
        {
            "gamma_pr": res.gamma_pr,
            "num_min_sets": res.num_min_sets,
            "core": sorted(res.core),
        },
        out,
    )
    for s in res.min_sets:
        out.write(" ".join(map(str, s)) + "\n")
    return 0


def cmd_verify(args, out) -> int:
    summary = verify_corpus(
        parse_seed_range(args.seeds),
        max_n=args.max_n,
        bookkeeping_max_n=args.bookkeeping_max_n,
        workers=args.workers,
    )
    for failure in summary.failures:
        _emit(failure, out)
    doc = summary.as_dict()
    del doc["failures"]
    _emit(doc, out)
    return 0 if not summary.failures else 2


def cmd_gen(args, out) -> int:
    g = generate(GenSpec(args.seed, args.blocks, args.min_size, args.max_size))
    out.write(g.to_text())
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="pairdom",
        description="Decide whether a vertex of a block graph lies in every "
        "minimum paired-dominating set.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="run the linear-time decision")
    a.add_argument("graph")
    which = a.add_mutually_exclusive_group(required=True)
    which.add_argument("--vertex", type=int)
    which.add_argument("--all-vertices", action="store_true")
    a.add_argument("--dump-order", action="store_true",
                   help="print 'v position father depth' lines first")
    a.add_argument("--dump-prune", action="store_true",
                   help="print the pruning trace first")
    a.set_defaults(func=cmd_analyze)

    pd = sub.add_parser("prune-dump", help="pruning trace and pruned vertex set")
    pd.add_argument("graph")
    pd.add_argument("vertex", type=int)
    pd.set_defaults(func=cmd_prune_dump)

    o = sub.add_parser("oracle", help="exhaustive minimum paired-dominating sets")
    o.add_argument("graph")
    o.add_argument("--list-sets", action="store_true")
    o.add_argument("--cap", type=int, default=None,
                   help="vertex cap (default: $PAIRDOM_ORACLE_CAP or 20)")
    o.set_defaults(func=cmd_oracle)

    v = sub.add_parser("verify", help="algorithm vs oracle on a seeded corpus")
    v.add_argument("--seeds", default="0..499", help="inclusive range A..B")
    v.add_argument("--max-n", type=int, default=12)
    v.add_argument("--bookkeeping-max-n", type=int, default=14)
    v.add_argument("--workers", type=int, default=1)
    v.set_defaults(func=cmd_verify)

    gp = sub.add_parser("gen", help="emit a random block graph")
    gp.add_argument("--seed", type=int, required=True)
    gp.add_argument("--blocks", type=int, required=True)
    gp.add_argument("--min-size", type=int, default=2)
    gp.add_argument("--max-size", type=int, default=4)
    gp.set_defaults(func=cmd_gen)
    return p


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (GraphError, oracle.TooLarge, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except InternalInvariant as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
