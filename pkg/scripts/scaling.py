"""Wall time and operation count of one query on large random block graphs.

    python scripts/scaling.py --sizes 100000 200000 400000 --repeats 5
"""

import argparse

from pairdom.experiments import ScalingConfig, scaling_run


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--sizes", type=int, nargs="+", default=list(ScalingConfig.sizes))
    p.add_argument("--repeats", type=int, default=ScalingConfig.repeats)
    p.add_argument("--seed", type=int, default=ScalingConfig.seed)
    args = p.parse_args()

    cfg = ScalingConfig(sizes=tuple(args.sizes), repeats=args.repeats, seed=args.seed)
    points = scaling_run(cfg)
    print(f"{'n':>8} {'m':>8} {'median s':>9} {'ratio':>6} {'ops':>9} {'ops/(n+m)':>9}")
    prev = None
    for pt in points:
        ratio = f"{pt.median_seconds / prev:6.2f}" if prev else "     -"
        print(f"{pt.n:8d} {pt.m:8d} {pt.median_seconds:9.3f} {ratio} {pt.ops:9d} {pt.ops_per_size:9.2f}")
        prev = pt.median_seconds


if __name__ == "__main__":
    main()
