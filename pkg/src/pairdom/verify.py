"""Algorithm-versus-oracle checks over seeded corpora."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from . import oracle
from .gen import corpus_graph
from .graph_core import Graph, load_block_graph
from .judge import analyze


@dataclass
class GraphReport:
    queries: int = 0
    mismatches: list = field(default_factory=list)  # (vertex, algorithm, oracle)
    bookkeeping_checked: int = 0
    bookkeeping_violations: list = field(default_factory=list)  # (root, gamma, pruned, weight)
    noncut_checked: int = 0
    noncut_violations: list = field(default_factory=list)


def check_graph(g: Graph, bookkeeping_max_n: int = 14) -> GraphReport:
    """Run every vertex of ``g`` through the pipeline and compare with the oracle.

    Three checks per graph: verdict equals core membership; for cut
    vertices, ``gamma_pr(G) == gamma_pr(pruned) + removed_weight`` (when
    ``n <= bookkeeping_max_n``); for non-cut vertices of graphs with at
    least three vertices, the oracle finds a minimum set avoiding them and
    the pipeline answers False.
    """
    bc = load_block_graph(g)
    truth = oracle.solve(g)
    rep = GraphReport()
    for v in range(g.n):
        a = analyze(g, v, bc)
        rep.queries += 1
        expected = v in truth.core
        if a.verdict.in_all_min_pds != expected:
            rep.mismatches.append((v, a.verdict.in_all_min_pds, expected))
        if g.n >= 3 and v not in bc.cut_vertices:
            rep.noncut_checked += 1
            if expected or a.verdict.in_all_min_pds:
                rep.noncut_violations.append(v)
        if a.state is not None and g.n <= bookkeeping_max_n:
            rep.bookkeeping_checked += 1
            reduced = oracle.solve(a.pruned.graph).gamma_pr
            if reduced + a.state.removed_weight != truth.gamma_pr:
                rep.bookkeeping_violations.append(
                    (v, truth.gamma_pr, reduced, a.state.removed_weight)
                )
    return rep


def _check_seed(args) -> tuple[int, GraphReport]:
    seed, max_n, bookkeeping_max_n = args
    return seed, check_graph(corpus_graph(seed, max_n), bookkeeping_max_n)


@dataclass(frozen=True)
class VerifySummary:
    seeds: str
    max_n: int
    graphs: int
    queries: int
    mismatches: int
    bookkeeping_checked: int
    bookkeeping_violations: int
    noncut_checked: int
    noncut_violations: int
    # one entry per failing (seed, vertex); empty on a clean run
    failures: tuple = ()

    def as_dict(self) -> dict:
        return asdict(self)


def verify_corpus(
    seeds: range, max_n: int = 12, bookkeeping_max_n: int = 14, workers: int = 1
) -> VerifySummary:
    jobs = [(s, max_n, bookkeeping_max_n) for s in seeds]
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            results = list(pool.map(_check_seed, jobs, chunksize=64))
    else:
        results = [_check_seed(job) for job in jobs]
    results.sort(key=lambda item: item[0])
    totals = GraphReport()
    failures = []
    for seed, rep in results:
        totals.queries += rep.queries
        totals.bookkeeping_checked += rep.bookkeeping_checked
        totals.noncut_checked += rep.noncut_checked
        for kind, items in (
            ("mismatch", rep.mismatches),
            ("bookkeeping", rep.bookkeeping_violations),
            ("noncut", rep.noncut_violations),
        ):
            failures.extend({"seed": seed, "kind": kind, "detail": item} for item in items)
        totals.mismatches += rep.mismatches
        totals.bookkeeping_violations += rep.bookkeeping_violations
        totals.noncut_violations += rep.noncut_violations
    return VerifySummary(
        seeds=f"{seeds.start}..{seeds.stop - 1}",
        max_n=max_n,
        graphs=len(results),
        queries=totals.queries,
        mismatches=len(totals.mismatches),
        bookkeeping_checked=totals.bookkeeping_checked,
        bookkeeping_violations=len(totals.bookkeeping_violations),
        noncut_checked=totals.noncut_checked,
        noncut_violations=len(totals.noncut_violations),
        failures=tuple(failures),
    )


def parse_seed_range(text: str) -> range:
    """``"0..499"`` (inclusive) or a single integer."""
    if ".." in text:
        lo, hi = text.split("..", 1)
        return range(int(lo), int(hi) + 1)
    return range(int(text), int(text) + 1)
