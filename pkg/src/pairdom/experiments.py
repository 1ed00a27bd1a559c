"""Experiment drivers shared by ``scripts/`` and the acceptance tests."""

from __future__ import annotations

import gc
import statistics
import time
from dataclasses import dataclass, field

from . import oracle
from .gen import GenSpec, SplitMix64, generate, tree_of_cliques
from .graph_core import decompose, load_block_graph
from .judge import analyze
from .ordering import vertex_ordering
from .prune import (
    Label,
    PruneState,
    has_perfect_matching,
    max_matching_size,
    r1_children_components,
)


@dataclass(frozen=True)
class ScalingConfig:
    sizes: tuple = (100_000, 200_000, 400_000)
    repeats: int = 5
    seed: int = 7
    min_size: int = 2
    max_size: int = 4


@dataclass
class ScalingPoint:
    n: int
    m: int
    median_seconds: float
    ops: int
    timings: list = field(default_factory=list)

    @property
    def ops_per_size(self) -> float:
        return self.ops / (self.n + self.m)


def scaling_graph(cfg: ScalingConfig, n: int):
    # blocks of 2..4 vertices add two vertices each on average
    g = generate(GenSpec(cfg.seed, max(1, n // 2), cfg.min_size, cfg.max_size))
    bc = load_block_graph(g)
    r = max(sorted(bc.cut_vertices), key=g.degree)
    return g, bc, r


def measure(cfg: ScalingConfig, n: int) -> ScalingPoint:
    """Median wall time of one full query, with the collector paused while timing.

    One untimed query runs first so every timed repeat sees warm caches.
    """
    g, bc, r = scaling_graph(cfg, n)
    analyze(g, r)
    timings = []
    ops = None
    for _ in range(cfg.repeats):
        gc.collect()
        gc.disable()
        try:
            t0 = time.perf_counter()
            a = analyze(g, r)
            timings.append(time.perf_counter() - t0)
        finally:
            gc.enable()
        if ops is not None and a.state.ops != ops:
            raise AssertionError("operation count is not deterministic")
        ops = a.state.ops
    return ScalingPoint(g.n, g.m, statistics.median(timings), ops, timings)


def scaling_run(cfg: ScalingConfig = ScalingConfig()) -> list[ScalingPoint]:
    return [measure(cfg, n) for n in cfg.sizes]


# -- matching criterion on unions of cliques ----------------------------------


@dataclass(frozen=True)
class MatchingConfig:
    instances: int = 1000
    max_vertices: int = 12
    seed: int = 2024


def clique_union(rng: SplitMix64, max_vertices: int) -> list[list[int]]:
    """Disjoint cliques with at most ``max_vertices`` vertices in total."""
    total = rng.between(0, max_vertices)
    comps, nxt = [], 0
    while nxt < total:
        k = rng.between(1, min(5, total - nxt))
        comps.append(list(range(nxt, nxt + k)))
        nxt += k
    return comps


def clique_union_masks(comps) -> tuple[list[int], int]:
    n = sum(len(c) for c in comps)
    masks = [0] * n
    for c in comps:
        full = sum(1 << v for v in c)
        for v in c:
            masks[v] = full & ~(1 << v)
    return masks, (1 << n) - 1


def matching_check(cfg: MatchingConfig = MatchingConfig(), reference=None) -> list[dict]:
    """Compare the even-components rule with a general matching routine.

    The components the rule sees come from the pruning code's own grouping
    of labelled children (``labelled_components``).  ``reference(comps)``
    returns a maximum matching size of the clique union; the exhaustive
    bitmask routine is used when none is given.  Returns the disagreeing
    instances.
    """
    if reference is None:
        def reference(comps):
            masks, full = clique_union_masks(comps)
            return oracle.max_matching_size(masks, full)

    rng = SplitMix64(cfg.seed)
    bad = []
    for i in range(cfg.instances):
        comps = clique_union(rng, cfg.max_vertices)
        n = sum(len(c) for c in comps)
        size = reference(comps)
        groups = labelled_components(comps)
        if sorted(map(len, groups)) != sorted(map(len, comps)):
            bad.append({"instance": i, "components": comps, "grouped": groups})
        elif has_perfect_matching(groups) != (2 * size == n) or max_matching_size(groups) != size:
            bad.append({"instance": i, "components": comps, "reference": size})
    return bad


def labelled_components(comps) -> list[list[int]]:
    """Round-trip through the pruning state so the grouping code is exercised too.

    Every clique becomes a child block of a common vertex and all its
    members get label R1.
    """
    if not comps:
        return []
    # hub 0 with a pendant 1 so that 0 is a cut vertex and the root
    sizes = [2] + [len(c) + 1 for c in comps]
    g = tree_of_cliques(sizes, [0] * len(comps))
    bc = decompose(g)
    ro = vertex_ordering(g, bc, 0)
    labels = [Label.R1] * g.n
    labels[0] = labels[1] = Label.EMPTY
    state = PruneState(
        alive=bytearray([1]) * g.n,
        labels=labels,
        skip=set(),
        block_alive=[len(b) for b in bc.blocks],
        alive_children=[len(c) for c in ro.children],
    )
    return r1_children_components(state, ro, 0)
