"""Final judgement: classify the root's blocks in the pruned graph and decide."""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph_core import BlockCutStructure, Graph, load_block_graph
from .ordering import RootedOrder, vertex_ordering
from .prune import Label, PrunedGraph, PruneState, prune

ORDER_TWO = "ORDER_TWO"
COMPLETE = "COMPLETE"
NOT_CUT_VERTEX = "NOT_CUT_VERTEX"


@dataclass(frozen=True)
class CategoryCounts:
    L1: int = 0
    L2: int = 0
    L3: int = 0
    L6: int = 0
    L8: int = 0
    # block id -> "L1".."L9" or "uncategorized"; diagnostics only
    classification: dict = field(default_factory=dict, compare=False)

    def as_dict(self) -> dict:
        return {"L1": self.L1, "L2": self.L2, "L3": self.L3, "L6": self.L6, "L8": self.L8}


@dataclass(frozen=True)
class Verdict:
    in_all_min_pds: bool
    rule_fired: str
    counts: CategoryCounts
    special_case: str | None = None

    def as_dict(self, vertex: int | None = None) -> dict:
        doc = {} if vertex is None else {"vertex": vertex}
        doc.update(
            in_all_min_pds=self.in_all_min_pds,
            rule_fired=self.rule_fired,
            counts=self.counts.as_dict(),
            special_case=self.special_case,
        )
        return doc


def classify(
    gtilde: PrunedGraph,
    state: PruneState,
    bc: BlockCutStructure,
    ro: RootedOrder,
) -> CategoryCounts:
    """Assign each surviving block through the root to one category.

    Precedence: pruning annotations (TYPE-1 -> L3, TYPE-2 -> L4, TYPE-3 ->
    L5), then end blocks by size (L1, L2), then the parity of R1 labels
    among the non-root members together with the presence of R2 labels
    (L6..L9).  Blocks of the pruned graph are the alive parts of original
    blocks, so the original block ids are reused.
    """
    r = ro.root
    alive = state.alive
    labels = state.labels
    tally = {"L1": 0, "L2": 0, "L3": 0, "L6": 0, "L8": 0}
    classes = {}
    for b in bc.blocks_of[r]:
        members = [w for w in bc.blocks[b] if alive[w]]
        if len(members) < 2:
            continue
        kind = state.annotation_of(b)
        if kind is not None:
            cat = {1: "L3", 2: "L4", 3: "L5"}[kind.family]
        elif all(state.alive_children[w] == 0 for w in members if w != r):
            cat = "L1" if len(members) == 2 else "L2"
        else:
            ones = sum(1 for w in members if w != r and labels[w] == Label.R1)
            twos = any(labels[w] == Label.R2 for w in members)
            if ones % 2:
                cat = "L8" if twos else "L6"
            elif ones:
                cat = "L9" if twos else "L7"
            else:
                cat = "L9" if twos else "uncategorized"
        classes[b] = cat
        if cat in tally:
            tally[cat] += 1
    return CategoryCounts(**tally, classification=classes)


def viampds(counts: CategoryCounts) -> Verdict:
    """Decision rule over the five category counts that matter."""
    c = counts
    if c.L1 >= 1:
        rule = "1"
    elif c.L2 >= 2:
        rule = "2"
    elif c.L2 == 1 and c.L3 + c.L6 + c.L8 >= 1:
        rule = "3"
    elif c.L2 == 0 and c.L3 >= 2:
        rule = "4"
    elif c.L2 == 0 and c.L3 == 1 and c.L6 + c.L8 >= 1:
        rule = "5"
    else:
        rule = "none"
    return Verdict(rule != "none", rule, counts)


@dataclass(frozen=True)
class Analysis:
    """Everything the pipeline computed for one query, for dumps and tests."""

    verdict: Verdict
    order: RootedOrder | None = None
    pruned: PrunedGraph | None = None
    state: PruneState | None = None


def analyze(g: Graph, r: int, bc: BlockCutStructure | None = None) -> Analysis:
    if bc is None:
        bc = load_block_graph(g)
    if not 0 <= r < g.n:
        raise ValueError(f"vertex {r} out of range")
    empty = CategoryCounts()
    if g.n == 2:
        return Analysis(Verdict(True, "none", empty, ORDER_TWO))
    if g.is_complete():
        return Analysis(Verdict(False, "none", empty, COMPLETE))
    if r not in bc.cut_vertices:
        return Analysis(Verdict(False, "none", empty, NOT_CUT_VERTEX))
    ro = vertex_ordering(g, bc, r)
    pruned, state = prune(g, bc, ro)
    verdict = viampds(classify(pruned, state, bc, ro))
    return Analysis(verdict, ro, pruned, state)


def in_all_min_pds(g: Graph, r: int, bc: BlockCutStructure | None = None) -> Verdict:
    """Is ``r`` in every minimum paired-dominating set of block graph ``g``?"""
    return analyze(g, r, bc).verdict
