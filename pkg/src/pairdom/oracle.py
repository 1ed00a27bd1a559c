"""Exhaustive ground truth for paired domination on small graphs.

Nothing here knows about blocks, orderings or labels: candidate sets are
enumerated by size, filtered by a bitmask domination test, and checked for
a perfect matching by exact search.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .graph_core import Graph

DEFAULT_CAP = 20


class TooLarge(ValueError):
    pass


def oracle_cap() -> int:
    return int(os.environ.get("PAIRDOM_ORACLE_CAP", DEFAULT_CAP))


def _masks(g: Graph) -> list[int]:
    return [sum(1 << w for w in g.adjacency[v]) for v in range(g.n)]


def max_matching_size(nbr_masks, vertex_mask: int) -> int:
    """Maximum matching in the subgraph induced by ``vertex_mask``.

    ``nbr_masks[v]`` is the open-neighbourhood bitmask of ``v``.  Exact
    branching on the lowest remaining vertex: either it stays unmatched or
    it is matched to one of its remaining neighbours.
    """

    @lru_cache(maxsize=None)
    def best(mask: int) -> int:
        if mask == 0:
            return 0
        low = mask & -mask
        v = low.bit_length() - 1
        rest = mask ^ low
        result = best(rest)
        cand = nbr_masks[v] & rest
        while cand:
            bit = cand & -cand
            cand ^= bit
            got = 1 + best(rest ^ bit)
            if got > result:
                result = got
        return result

    return best(vertex_mask)


def has_perfect_matching(nbr_masks, vertex_mask: int) -> bool:
    """Perfect-matching test; prunes on the first unmatchable vertex."""
    if vertex_mask == 0:
        return True
    if bin(vertex_mask).count("1") % 2:
        return False
    low = vertex_mask & -vertex_mask
    v = low.bit_length() - 1
    rest = vertex_mask ^ low
    cand = nbr_masks[v] & rest
    while cand:
        bit = cand & -cand
        cand ^= bit
        if has_perfect_matching(nbr_masks, rest ^ bit):
            return True
    return False


def is_pds(g: Graph, s) -> bool:
    masks = _masks(g)
    smask = 0
    for v in s:
        smask |= 1 << v
    covered = smask
    for v in s:
        covered |= masks[v]
    if covered != (1 << g.n) - 1:
        return False
    return has_perfect_matching(masks, smask)


@dataclass(frozen=True)
class OracleResult:
    gamma_pr: int
    num_min_sets: int
    core: frozenset
    min_sets: tuple[tuple[int, ...], ...] = ()


def solve(g: Graph, cap: int | None = None, keep_sets: bool = False) -> OracleResult:
    """Minimum paired-dominating sets by increasing even cardinality."""
    cap = oracle_cap() if cap is None else cap
    if g.n > cap:
        raise TooLarge(f"n={g.n} exceeds oracle cap {cap}")
    if any(not nbrs for nbrs in g.adjacency):
        raise ValueError("graph has an isolated vertex")
    n = g.n
    full = (1 << n) - 1
    nbr = _masks(g)
    closed = [nbr[v] | (1 << v) for v in range(n)]
    for k in range(2, n + 1, 2):
        found = []
        core = full
        for combo in combinations(range(n), k):
            covered = 0
            smask = 0
            for v in combo:
                covered |= closed[v]
                smask |= 1 << v
            if covered != full:
                continue
            if not has_perfect_matching(nbr, smask):
                continue
            core &= smask
            found.append(combo)
        if found:
            return OracleResult(
                gamma_pr=k,
                num_min_sets=len(found),
                core=frozenset(v for v in range(n) if core >> v & 1),
                min_sets=tuple(found) if keep_sets else (),
            )
    # a graph without isolated vertices always has a PDS (a maximal
    # matching's vertex set), so this is unreachable for valid input
    raise ValueError("no paired-dominating set exists")


def core_membership(g: Graph, v: int, cap: int | None = None) -> bool:
    return v in solve(g, cap).core
