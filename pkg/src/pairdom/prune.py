"""Label-driven pruning of a rooted block graph.

Vertices are visited in the rooted order (root excluded).  Each visit
either labels the father, deletes part of the visited vertex's subtree,
or records that the block through the root cannot be reduced.  Every
deletion is charged a weight ``|D|`` with

    gamma_pr(before) == gamma_pr(after) + |D|

so the pruned graph's paired-domination number plus ``removed_weight``
recovers the original one.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum, IntEnum

from .graph_core import BlockCutStructure, Graph, InternalInvariant
from .ordering import RootedOrder


class Label(IntEnum):
    EMPTY = 0
    R1 = 1
    R2 = 2


class BlockKind(str, Enum):
    TYPE1_FIRST = "TYPE1_FIRST"
    TYPE1_SECOND = "TYPE1_SECOND"
    TYPE2_FIRST = "TYPE2_FIRST"
    TYPE2_SECOND = "TYPE2_SECOND"
    TYPE3_FIRST = "TYPE3_FIRST"
    TYPE3_SECOND = "TYPE3_SECOND"

    @property
    def family(self) -> int:
        return int(self.value[4])


class NoUnmatched(ValueError):
    pass


@dataclass(frozen=True)
class BlockAnnotation:
    block: int  # block id in the original decomposition; always contains the root
    kind: BlockKind


@dataclass(frozen=True)
class TraceEntry:
    step: int
    branch: str
    removed: tuple[int, ...]
    weight: int

    def format(self) -> str:
        ids = ",".join(map(str, self.removed))
        return f"step={self.step} branch={self.branch} removed=[{ids}] D={self.weight}"


@dataclass
class PruneState:
    alive: bytearray
    labels: list
    skip: set
    removed_weight: int = 0
    annotations: list = field(default_factory=list)
    trace: list = field(default_factory=list)
    # per original block: number of alive members
    block_alive: list = field(default_factory=list)
    alive_children: list = field(default_factory=list)
    ops: int = 0

    def is_alive(self, v: int) -> bool:
        return bool(self.alive[v])

    def alive_vertices(self) -> list[int]:
        return [v for v, a in enumerate(self.alive) if a]

    def annotation_of(self, block: int):
        for ann in self.annotations:
            if ann.block == block:
                return ann.kind
        return None


@dataclass(frozen=True)
class PrunedGraph:
    graph: Graph
    vertices: tuple[int, ...]  # original id of each pruned-graph vertex

    def local(self, v: int) -> int:
        return self.vertices.index(v)


def r1_children_components(state: PruneState, ro: RootedOrder, v: int) -> list[list[int]]:
    """Group the alive R1 children of ``v`` by the block they share with ``v``.

    The groups are cliques and pairwise non-adjacent (different blocks
    through ``v``), so the induced subgraph has a perfect matching iff every
    group has even size.
    """
    groups: dict[int, list[int]] = {}
    for c in ro.children[v]:
        state.ops += 1
        if state.alive[c] and state.labels[c] == Label.R1:
            groups.setdefault(ro.parent_block[c], []).append(c)
    return [sorted(grp) for grp in groups.values()]


def has_perfect_matching(components) -> bool:
    return all(len(c) % 2 == 0 for c in components)


def max_matching_size(components) -> int:
    return sum(len(c) // 2 for c in components)


def select_unmatched(components) -> int:
    """Smallest unmatched vertex under ascending-id pairing in each clique."""
    leftovers = [max(c) for c in components if len(c) % 2]
    if not leftovers:
        raise NoUnmatched("every component is even")
    return min(leftovers)


# residue shapes that stop a reduction, per matching outcome; the PATH
# shape's father is shielded from its own visit
_PM = {
    "PATH": BlockKind.TYPE1_FIRST,
    "TRIANGLE": BlockKind.TYPE1_SECOND,
    "EDGE": BlockKind.TYPE2_FIRST,
}
_NO_PM = {
    "PATH": BlockKind.TYPE3_FIRST,
    "TRIANGLE": BlockKind.TYPE3_SECOND,
    "EDGE": BlockKind.TYPE2_SECOND,
}


class _Pruner:
    def __init__(self, g: Graph, bc: BlockCutStructure, ro: RootedOrder):
        self.g = g
        self.bc = bc
        self.ro = ro
        self.r = ro.root
        n = g.n
        self.state = PruneState(
            alive=bytearray([1]) * n,
            labels=[Label.EMPTY] * n,
            skip=set(),
            block_alive=[len(b) for b in bc.blocks],
            alive_children=[len(c) for c in ro.children],
        )

    # -- structural queries on the current graph --------------------------------

    def is_cut(self, w: int) -> bool:
        if w == self.r:
            return True
        return self.state.alive_children[w] > 0

    def block_all_cut(self, b: int) -> bool:
        st = self.state
        return all(self.is_cut(w) for w in self.bc.blocks[b] if st.alive[w])

    def _remove(self, x: int) -> None:
        st = self.state
        st.alive[x] = 0
        st.block_alive[self.ro.parent_block[x]] -= 1
        st.alive_children[self.ro.father[x]] -= 1

    def _remove_subtree(self, top: int, removed: list) -> int:
        """Delete the alive subtree under ``top`` (inclusive); return its R2 count."""
        st = self.state
        r2 = 0
        stack = [top]
        while stack:
            x = stack.pop()
            st.ops += 1
            if not st.alive[x]:
                continue
            if st.labels[x] == Label.R2:
                r2 += 1
            stack.extend(self.ro.children[x])
            self._remove(x)
            removed.append(x)
        return r2

    def _count_r2_below(self, v: int) -> int:
        st = self.state
        count = 0
        stack = list(self.ro.children[v])
        while stack:
            x = stack.pop()
            st.ops += 1
            if not st.alive[x]:
                continue
            if st.labels[x] == Label.R2:
                count += 1
            stack.extend(self.ro.children[x])
        return count

    # -- distance-stratified reducibility tests ----------------------------------

    def reducible(self, v: int):
        """Return ``(True, None)`` or ``(False, (kind_suffix, block, skip))``.

        ``kind_suffix`` is FIRST for the two-edge path shape at distance 2,
        SECOND/K2 for the residues at distance 1.
        """
        st = self.state
        ro = self.ro
        d = ro.depth[v]
        if d >= 3:
            return True, None
        if d == 2:
            f = ro.father[v]
            b1 = ro.parent_block[v]
            b2 = ro.parent_block[f]
            if st.block_alive[b1] >= 3:
                return True, None
            if st.alive_children[f] != 1:
                return True, None
            if st.block_alive[b2] >= 3:
                return True, None
            return False, ("PATH", b2, f)
        b = ro.parent_block[v]
        size = st.block_alive[b]
        if size >= 4 or (size == 3 and self.block_all_cut(b)):
            return True, None
        if size == 3:
            return False, ("TRIANGLE", b, None)
        return False, ("EDGE", b, None)

    # -- the pass -----------------------------------------------------------------

    def run(self) -> PruneState:
        ro = self.ro
        for v in ro.order[:-1]:
            st = self.state
            if not st.alive[v] or v in st.skip:
                continue
            self.step(v)
        return self.state

    def annotate(self, block: int, kind: BlockKind) -> None:
        st = self.state
        if st.annotation_of(block) is not None:
            raise InternalInvariant(f"block {block} annotated twice")
        if self.r not in self.bc.blocks[block]:
            raise InternalInvariant(f"annotated block {block} misses the root")
        st.annotations.append(BlockAnnotation(block, kind))

    def _drop_subtree(self, v: int, r1_count: int):
        """Remove all of ``D[v]``; charge the R1 children and R2 descendants."""
        removed: list[int] = []
        r2 = self._remove_subtree(v, removed)
        weight = r1_count + r2
        self.state.removed_weight += weight
        return removed, weight

    def _reduce_around(self, v: int, u: int, r1_count: int, odd: int):
        """Remove ``D(v) - D[u]`` and pair ``v`` with ``u`` as R2.

        The charge counts the R1 children except ``u``, the R2 descendants,
        and one private child for every other unmatched R1 child.
        """
        st = self.state
        r2 = self._count_r2_below(v)
        removed: list[int] = []
        for c in self.ro.children[v]:
            if st.alive[c] and c != u:
                self._remove_subtree(c, removed)
        st.labels[v] = Label.R2
        st.labels[u] = Label.R2
        weight = (r1_count - 1) + r2 + (odd - 1)
        st.removed_weight += weight
        return removed, weight

    def _residue(self, v: int, residue, kinds, action):
        shape, block, shielded = residue
        kind = kinds[shape]
        removed, weight = action() if shape == "PATH" or kinds is _NO_PM else ([], 0)
        self.annotate(block, kind)
        if shielded is not None:
            self.state.skip.add(shielded)
        self._log(v, f"ANNOT:{kind.value}", removed, weight)

    def _log(self, v: int, branch: str, removed, weight: int) -> None:
        self.state.trace.append(TraceEntry(v, branch, tuple(sorted(removed)), weight))

    def step(self, v: int) -> None:
        st = self.state
        ro = self.ro
        label = st.labels[v]
        labelled_child = False
        for c in ro.children[v]:
            st.ops += 1
            if st.alive[c] and st.labels[c] != Label.EMPTY:
                labelled_child = True
                break

        if label == Label.EMPTY and not labelled_child:
            st.labels[ro.father[v]] = Label.R1
            self._log(v, "A", (), 0)
            return

        comps = r1_children_components(st, ro, v)
        perfect = has_perfect_matching(comps)
        r1_count = sum(len(c) for c in comps)

        keep = None
        if label == Label.R1 and perfect:
            keep = self._end_block_at(v)
            if keep is None:
                # every unlabelled child shares its block with a cut vertex the
                # labels already force into the set, so the R1 mark is moot
                label = Label.EMPTY

        if label == Label.EMPTY and perfect:
            ok, residue = self.reducible(v)
            if ok:
                removed, weight = self._drop_subtree(v, r1_count)
                self._log(v, {1: "L7", 2: "L6"}.get(ro.depth[v], "L3"), removed, weight)
            else:
                self._residue(v, residue, _PM, lambda: self._drop_subtree(v, r1_count))
            return

        if label == Label.R1 and perfect:
            r2 = self._count_r2_below(v)
            removed = []
            for c in ro.children[v]:
                if st.alive[c] and ro.parent_block[c] != keep:
                    self._remove_subtree(c, removed)
            weight = r1_count + r2
            st.removed_weight += weight
            self._log(v, "L8", removed, weight)
            return

        if not perfect:
            u = select_unmatched(comps)
            odd = sum(1 for c in comps if len(c) % 2)
            ok, residue = self.reducible(v)
            if ok:
                removed, weight = self._reduce_around(v, u, r1_count, odd)
                self._log(v, "L11" if ro.depth[v] >= 3 else "L13", removed, weight)
            else:
                self._residue(
                    v, residue, _NO_PM, lambda: self._reduce_around(v, u, r1_count, odd)
                )
            return

        self._log(v, "NONE", (), 0)

    def _end_block_at(self, v: int):
        """Child block of ``v`` whose other alive members are all non-cut."""
        st = self.state
        ro = self.ro
        best = None
        best_min = None
        seen = set()
        for c in ro.children[v]:
            if not st.alive[c]:
                continue
            b = ro.parent_block[c]
            if b in seen:
                continue
            seen.add(b)
            members = [w for w in self.bc.blocks[b] if w != v and st.alive[w]]
            st.ops += len(self.bc.blocks[b])
            if all(st.alive_children[w] == 0 for w in members):
                low = min(members)
                if best is None or low < best_min:
                    best, best_min = b, low
        return best


def prune(g: Graph, bc: BlockCutStructure, ro: RootedOrder) -> tuple[PrunedGraph, PruneState]:
    state = _Pruner(g, bc, ro).run()
    if not state.alive[ro.root]:
        raise InternalInvariant("root was removed")
    sub, originals = g.induced(state.alive_vertices())
    return PrunedGraph(sub, tuple(originals)), state
