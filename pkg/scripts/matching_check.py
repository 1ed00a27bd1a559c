"""Even-components perfect-matching rule vs blossom matching on clique unions."""

import argparse

import networkx as nx

from pairdom.experiments import MatchingConfig, matching_check


def blossom(comps):
    g = nx.Graph()
    for c in comps:
        g.add_nodes_from(c)
        g.add_edges_from((u, v) for i, u in enumerate(c) for v in c[i + 1:])
    return len(nx.max_weight_matching(g, maxcardinality=True))


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--instances", type=int, default=1000)
    p.add_argument("--max-vertices", type=int, default=12)
    p.add_argument("--seed", type=int, default=2024)
    args = p.parse_args()
    cfg = MatchingConfig(args.instances, args.max_vertices, args.seed)
    bad = matching_check(cfg, reference=blossom)
    for b in bad:
        print(b)
    print(f"{cfg.instances} instances, {len(bad)} mismatches")


if __name__ == "__main__":
    main()
