"""Simple undirected graphs, the edge-list format, and block-cut decomposition."""

from __future__ import annotations

from dataclasses import dataclass, field


class GraphError(Exception):
    """Base class for every input-validation failure."""


class ParseError(GraphError):
    def __init__(self, line: int, reason: str):
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason


class DisconnectedError(GraphError):
    pass


class NotABlockGraph(GraphError):
    def __init__(self, block: int, reason: str = "block is not a clique"):
        super().__init__(f"block {block}: {reason}")
        self.block = block


class NotACutVertex(GraphError):
    def __init__(self, vertex: int):
        super().__init__(f"vertex {vertex} is not a cut vertex")
        self.vertex = vertex


class InternalInvariant(Exception):
    """An invariant of the pruning pipeline failed on a valid input."""


@dataclass(frozen=True)
class Graph:
    n: int
    adjacency: tuple[tuple[int, ...], ...]
    m: int
    _neighbor_sets: tuple[frozenset, ...] = field(
        default=(), repr=False, compare=False
    )

    @classmethod
    def from_edges(cls, n: int, edges) -> Graph:
        """Build a graph on vertices ``0..n-1``.

        Raises ``ValueError`` on out-of-range ids, self-loops or repeated
        edges; ``parse_graph`` reports the same problems with line numbers.
        """
        adj: list[set[int]] = [set() for _ in range(n)]
        m = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if v in adj[u]:
                raise ValueError(f"duplicate edge ({u}, {v})")
            adj[u].add(v)
            adj[v].add(u)
            m += 1
        return cls(
            n,
            tuple(tuple(sorted(a)) for a in adj),
            m,
            tuple(frozenset(a) for a in adj),
        )

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._neighbor_sets[u]

    def edges(self):
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if u < v:
                    yield u, v

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def induced(self, vertices) -> tuple[Graph, list[int]]:
        """Induced subgraph relabelled to ``0..k-1``.

        Returns the subgraph and the sorted list of original ids, so
        ``originals[i]`` is the original name of new vertex ``i``.
        """
        originals = sorted(vertices)
        index = {v: i for i, v in enumerate(originals)}
        edges = [
            (index[u], index[v])
            for u in originals
            for v in self.adjacency[u]
            if u < v and v in index
        ]
        return Graph.from_edges(len(originals), edges), originals

    def to_text(self) -> str:
        lines = [f"{self.n} {self.m}"]
        lines.extend(f"{u} {v}" for u, v in self.edges())
        return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    """Parse the edge-list format.

    Comment lines start with ``#``. The first other line is ``n m``,
    followed by exactly ``m`` lines ``u v`` with ``0 <= u, v < n``.
    """
    header = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    lineno = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(lineno, f"expected two integers, got {line!r}")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(lineno, f"non-integer token in {line!r}") from None
        if header is None:
            if a < 1 or b < 0:
                raise ParseError(lineno, f"bad header n={a} m={b}")
            header = (a, b)
            continue
        n, m = header
        if len(edges) == m:
            raise ParseError(lineno, f"more than the declared {m} edges")
        if not (0 <= a < n and 0 <= b < n):
            raise ParseError(lineno, f"vertex id out of range 0..{n - 1}")
        if a == b:
            raise ParseError(lineno, f"self-loop at {a}")
        key = (min(a, b), max(a, b))
        if key in seen:
            raise ParseError(lineno, f"duplicate edge {key}")
        seen.add(key)
        edges.append((a, b))
    if header is None:
        raise ParseError(lineno, "missing 'n m' header")
    if len(edges) != header[1]:
        raise ParseError(lineno, f"declared {header[1]} edges, found {len(edges)}")
    return Graph.from_edges(header[0], edges)


def read_graph(path) -> Graph:
    with open(path, encoding="ascii") as fh:
        return parse_graph(fh.read())


@dataclass(frozen=True)
class BlockCutStructure:
    """Blocks (as sorted vertex tuples), cut vertices, and per-vertex membership.

    ``edge_counts[b]`` is the number of graph edges inside block ``b``; a
    block is a clique iff it equals ``k(k-1)/2`` for ``k = len(blocks[b])``.
    """

    blocks: tuple[tuple[int, ...], ...]
    cut_vertices: frozenset
    blocks_of: tuple[tuple[int, ...], ...]
    edge_counts: tuple[int, ...]

    def is_cut_vertex(self, v: int) -> bool:
        return v in self.cut_vertices

    def cut_count(self, b: int) -> int:
        return sum(1 for v in self.blocks[b] if v in self.cut_vertices)


def decompose(g: Graph) -> BlockCutStructure:
    """Biconnected components by one iterative depth-first traversal.

    Block ids follow the order in which the traversal closes each block.
    """
    n = g.n
    if n == 0:
        raise DisconnectedError("empty graph")
    disc = [-1] * n
    low = [0] * n
    blocks: list[tuple[int, ...]] = []
    edge_counts: list[int] = []
    edge_stack: list[tuple[int, int]] = []
    timer = 0

    disc[0] = low[0] = timer
    timer += 1
    # frames: (vertex, parent, next neighbour index)
    stack = [[0, -1, 0]]
    while stack:
        frame = stack[-1]
        u, parent, i = frame
        nbrs = g.adjacency[u]
        if i < len(nbrs):
            frame[2] = i + 1
            w = nbrs[i]
            if disc[w] == -1:
                edge_stack.append((u, w))
                disc[w] = low[w] = timer
                timer += 1
                stack.append([w, u, 0])
            elif w != parent and disc[w] < disc[u]:
                edge_stack.append((u, w))
                if disc[w] < low[u]:
                    low[u] = disc[w]
            continue
        stack.pop()
        if parent == -1:
            continue
        if low[u] < low[parent]:
            low[parent] = low[u]
        if low[u] >= disc[parent]:
            members = set()
            count = 0
            while True:
                a, b = edge_stack.pop()
                members.add(a)
                members.add(b)
                count += 1
                if (a, b) == (parent, u):
                    break
            blocks.append(tuple(sorted(members)))
            edge_counts.append(count)

    if any(d == -1 for d in disc):
        raise DisconnectedError("graph is not connected")

    membership: list[list[int]] = [[] for _ in range(n)]
    for b, verts in enumerate(blocks):
        for v in verts:
            membership[v].append(b)
    cut = frozenset(v for v in range(n) if len(membership[v]) >= 2)
    return BlockCutStructure(
        tuple(blocks),
        cut,
        tuple(tuple(bs) for bs in membership),
        tuple(edge_counts),
    )


def validate_block_graph(g: Graph, bc: BlockCutStructure) -> None:
    """Raise unless ``g`` is a block graph without isolated vertices."""
    if g.n < 2:
        raise GraphError("a block graph needs at least two vertices")
    for b, verts in enumerate(bc.blocks):
        k = len(verts)
        if bc.edge_counts[b] != k * (k - 1) // 2:
            raise NotABlockGraph(b)


def load_block_graph(g: Graph) -> BlockCutStructure:
    bc = decompose(g)
    validate_block_graph(g, bc)
    return bc


def is_end_block(bc: BlockCutStructure, b: int) -> bool:
    return bc.cut_count(b) == 1
