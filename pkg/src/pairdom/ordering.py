"""Rooted vertex ordering of a block graph: peel farthest end blocks first.

The ordering ends with the root ``r``.  Every vertex's father is its
latest-ordered neighbour, which turns the block graph into a rooted tree
whose subtrees are the descendant sets used by the pruning pass.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graph_core import BlockCutStructure, Graph, InternalInvariant, NotACutVertex


@dataclass(frozen=True)
class RootedOrder:
    root: int
    order: tuple[int, ...]
    position: tuple[int, ...]
    father: tuple[int, ...]  # -1 for the root
    children: tuple[tuple[int, ...], ...]
    depth: tuple[int, ...]
    # block containing v and father(v); -1 for the root
    parent_block: tuple[int, ...]

    def descendants(self, v: int):
        """Yield the strict descendants of ``v`` (its subtree minus ``v``)."""
        stack = list(self.children[v])
        while stack:
            w = stack.pop()
            yield w
            stack.extend(self.children[w])

    def subtree(self, v: int) -> list[int]:
        return [v, *self.descendants(v)]


def bfs_depths(g: Graph, r: int) -> list[int]:
    depth = [-1] * g.n
    depth[r] = 0
    queue = deque([r])
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if depth[w] == -1:
                depth[w] = depth[u] + 1
                queue.append(w)
    return depth


def distance_to_block(g: Graph, v: int, block) -> int:
    depth = bfs_depths(g, v)
    return max(depth[u] for u in block)


def _fathers_from_order(g: Graph, position) -> list[int]:
    father = []
    for v in range(g.n):
        best = -1
        for w in g.adjacency[v]:
            if position[w] > position[v] and (best == -1 or position[w] > position[best]):
                best = w
        father.append(best)
    return father


def vertex_ordering(g: Graph, bc: BlockCutStructure, r: int) -> RootedOrder:
    """Order the vertices by peeling end blocks farthest from ``r``.

    Every block not containing ``r`` is at distance ``depth(attach) + 1``
    where ``attach`` is its vertex nearest ``r``; at the moment the peeling
    reaches distance ``k`` every block at that distance is an end block, so
    bucketing the blocks by distance once reproduces the procedure exactly.
    Ties go to the block with the smallest vertex id, and a peeled block's
    vertices are emitted in ascending id.  Blocks containing ``r`` come
    last; the final one is the complete remainder and ends with ``r``.
    """
    if r not in bc.cut_vertices:
        raise NotACutVertex(r)
    n = g.n
    depth = bfs_depths(g, r)
    nblocks = len(bc.blocks)

    # bucket blocks by min vertex id, then stably by distance, both O(n + #blocks)
    by_min: list[list[int]] = [[] for _ in range(n)]
    for b, verts in enumerate(bc.blocks):
        by_min[verts[0]].append(b)
    max_dist = max(depth) + 1
    by_dist: list[list[int]] = [[] for _ in range(max_dist + 1)]
    attach = [-1] * nblocks
    for bucket in by_min:
        for b in bucket:
            verts = bc.blocks[b]
            a = min(verts, key=depth.__getitem__)
            attach[b] = a
            dist = 1 if a == r else depth[a] + 1
            by_dist[dist].append(b)

    order: list[int] = []
    parent_block = [-1] * n
    for dist in range(max_dist, 0, -1):
        for b in by_dist[dist]:
            a = attach[b]
            for v in bc.blocks[b]:
                if v != a:
                    order.append(v)
                    parent_block[v] = b
    order.append(r)
    if len(order) != n:
        raise InternalInvariant("vertex ordering does not cover every vertex once")

    position = [0] * n
    for i, v in enumerate(order):
        position[v] = i
    father = _fathers_from_order(g, position)
    for v in range(n):
        if v == r:
            continue
        b = parent_block[v]
        if father[v] != attach[b]:
            raise InternalInvariant(f"father of {v} is not the cut vertex of its block")
    children: list[list[int]] = [[] for _ in range(n)]
    for v in order:
        if v != r:
            children[father[v]].append(v)
    return RootedOrder(
        root=r,
        order=tuple(order),
        position=tuple(position),
        father=tuple(father),
        children=tuple(tuple(c) for c in children),
        depth=tuple(depth),
        parent_block=tuple(parent_block),
    )


def depths(ro: RootedOrder) -> tuple[int, ...]:
    return ro.depth
