"""Acceptance criteria, each at its stated tolerance.

Every test records one PASS/FAIL line; conftest prints them in the
terminal summary (and each line is also echoed as the test runs).
"""

import subprocess
import sys

import networkx as nx
import pytest

from pairdom.experiments import MatchingConfig, ScalingConfig, matching_check, scaling_run
from pairdom.gen import complete, fixtures
from pairdom.judge import in_all_min_pds
from pairdom.verify import check_graph, verify_corpus

RESULTS = []

CORPUS_SEEDS = range(0, 5000)
CORPUS_MAX_N = 12
WIDE_SEEDS = range(0, 1000)
WIDE_MAX_N = 14
GROWTH_LIMIT = 2.5
OPS_CONSTANT = 4


def record(name, ok, detail):
    line = f"{name}: {'PASS' if ok else 'FAIL'} ({detail})"
    RESULTS.append(line)
    print(line)
    assert ok, line


@pytest.fixture(scope="module")
def corpus():
    return verify_corpus(CORPUS_SEEDS, max_n=CORPUS_MAX_N, bookkeeping_max_n=WIDE_MAX_N)


@pytest.fixture(scope="module")
def wide_corpus():
    return verify_corpus(WIDE_SEEDS, max_n=WIDE_MAX_N, bookkeeping_max_n=WIDE_MAX_N)


@pytest.fixture(scope="module")
def fixture_reports():
    return {name: check_graph(g) for name, g in fixtures().items()}


def test_c1_verdict_matches_oracle(corpus, fixture_reports):
    fixture_bad = {k: r.mismatches for k, r in fixture_reports.items() if r.mismatches}
    queries = corpus.queries + sum(r.queries for r in fixture_reports.values())
    bad = corpus.mismatches + sum(len(v) for v in fixture_bad.values())
    record(
        "C1 verdict == oracle core membership",
        corpus.graphs >= 5000 and bad == 0,
        f"{corpus.graphs} corpus graphs + {len(fixture_reports)} fixtures, "
        f"{queries} queries, {bad} mismatches",
    )


def test_c2_removed_weight_bookkeeping(corpus, wide_corpus, fixture_reports):
    checked = (
        corpus.bookkeeping_checked
        + wide_corpus.bookkeeping_checked
        + sum(r.bookkeeping_checked for r in fixture_reports.values())
    )
    bad = (
        corpus.bookkeeping_violations
        + wide_corpus.bookkeeping_violations
        + sum(len(r.bookkeeping_violations) for r in fixture_reports.values())
    )
    record(
        "C2 gamma(G) == gamma(pruned) + removed weight",
        checked > 0 and bad == 0,
        f"{checked} pruned instances with n <= {WIDE_MAX_N}, {bad} violations",
    )


def test_c3_non_cut_vertices(corpus, fixture_reports):
    checked = corpus.noncut_checked + sum(r.noncut_checked for r in fixture_reports.values())
    bad = corpus.noncut_violations + sum(
        len(r.noncut_violations) for r in fixture_reports.values()
    )
    record(
        "C3 non-cut vertices avoidable and answered False",
        checked > 0 and bad == 0,
        f"{checked} non-cut vertices, {bad} violations",
    )


def test_c4_complete_graphs():
    bad = [(2, v) for v in (0, 1) if not in_all_min_pds(complete(2), v).in_all_min_pds]
    for n in range(3, 7):
        bad += [(n, v) for v in range(n) if in_all_min_pds(complete(n), v).in_all_min_pds]
    record("C4 K2 True, K3..K6 False", not bad, f"wrong answers: {bad}")


def test_c5_linear_scaling():
    points = scaling_run(ScalingConfig())
    ratios = [b.median_seconds / a.median_seconds for a, b in zip(points, points[1:])]
    worst_ops = max(p.ops_per_size for p in points)
    detail = ", ".join(
        f"n={p.n} m={p.m} t={p.median_seconds:.3f}s ops/(n+m)={p.ops_per_size:.2f}"
        for p in points
    )
    record(
        "C5 time growth per doubling <= 2.5, ops <= 4(n+m)",
        all(r <= GROWTH_LIMIT for r in ratios) and worst_ops <= OPS_CONSTANT,
        f"{detail}; ratios {[round(r, 2) for r in ratios]}",
    )


def test_c6_matching_criterion():
    def blossom(comps):
        g = nx.Graph()
        for c in comps:
            g.add_nodes_from(c)
            g.add_edges_from((u, v) for i, u in enumerate(c) for v in c[i + 1:])
        return len(nx.max_weight_matching(g, maxcardinality=True))

    cfg = MatchingConfig()
    bad = matching_check(cfg, reference=blossom)
    bad_exhaustive = matching_check(cfg)
    record(
        "C6 even-components rule == general max matching",
        not bad and not bad_exhaustive,
        f"{cfg.instances} clique unions of <= {cfg.max_vertices} vertices, "
        f"{len(bad)} mismatches vs blossom, {len(bad_exhaustive)} vs exhaustive",
    )


def test_c7_verify_is_deterministic():
    cmd = [sys.executable, "-m", "pairdom.cli", "verify", "--seeds", "0..299"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    record(
        "C7 verify output byte-identical across runs",
        first == second and len(first) > 0,
        f"{len(first)} bytes",
    )
