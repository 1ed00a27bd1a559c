"""Algorithm vs exhaustive oracle on a seeded corpus of small block graphs.

    python scripts/verify_corpus.py --seeds 0..4999 --max-n 12 --workers 4
"""

import argparse
import json
import sys

from pairdom.gen import fixtures
from pairdom.verify import check_graph, parse_seed_range, verify_corpus


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--seeds", default="0..4999")
    p.add_argument("--max-n", type=int, default=12)
    p.add_argument("--bookkeeping-max-n", type=int, default=14)
    p.add_argument("--workers", type=int, default=1)
    args = p.parse_args()

    failed = False
    for name, g in fixtures().items():
        rep = check_graph(g, args.bookkeeping_max_n)
        bad = rep.mismatches + rep.bookkeeping_violations + rep.noncut_violations
        failed |= bool(bad)
        print(f"{name:22s} n={g.n:2d} queries={rep.queries:2d} failures={len(bad)}")

    summary = verify_corpus(
        parse_seed_range(args.seeds),
        max_n=args.max_n,
        bookkeeping_max_n=args.bookkeeping_max_n,
        workers=args.workers,
    )
    for f in summary.failures:
        print(json.dumps(f))
    doc = summary.as_dict()
    del doc["failures"]
    print(json.dumps(doc, indent=2))
    return 1 if failed or summary.failures else 0


if __name__ == "__main__":
    sys.exit(main())
