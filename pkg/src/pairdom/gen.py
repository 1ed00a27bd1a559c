"""Seeded generation of random block graphs ("trees of cliques").

The random source is SplitMix64, written out here so a corpus can be
regenerated bit-for-bit from its seeds in any language:

    state += 0x9E3779B97F4A7C15
    z = state
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    return z ^ (z >> 31)

all arithmetic mod 2**64.  ``below(k)`` is ``next() % k``; the modulo bias
is irrelevant for the tiny ranges used here and keeps ports trivial.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph_core import Graph

MASK64 = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, k: int) -> int:
        return self.next() % k

    def between(self, lo: int, hi: int) -> int:
        """Uniform-ish integer in ``[lo, hi]``."""
        return lo + self.below(hi - lo + 1)


@dataclass(frozen=True)
class GenSpec:
    seed: int
    n_blocks: int
    min_size: int = 2
    max_size: int = 4

    def __post_init__(self):
        if self.n_blocks < 1:
            raise ValueError("n_blocks must be >= 1")
        if not 2 <= self.min_size <= self.max_size:
            raise ValueError("need 2 <= min_size <= max_size")


def tree_of_cliques(sizes, attach) -> Graph:
    """Deterministic builder: clique ``i`` shares vertex ``attach[i-1]``.

    ``sizes[0]`` is the first clique on vertices ``0..sizes[0]-1``; every
    later clique of size ``s`` adds ``s - 1`` fresh vertices joined to the
    chosen existing vertex.
    """
    sizes = list(sizes)
    attach = list(attach)
    if len(attach) != len(sizes) - 1:
        raise ValueError("need one attachment vertex per clique after the first")
    edges = []
    first = sizes[0]
    edges.extend((u, v) for u in range(first) for v in range(u + 1, first))
    n = first
    for s, a in zip(sizes[1:], attach):
        if not 0 <= a < n:
            raise ValueError(f"attachment vertex {a} does not exist yet")
        members = [a] + list(range(n, n + s - 1))
        edges.extend(
            (members[i], members[j])
            for i in range(len(members))
            for j in range(i + 1, len(members))
        )
        n += s - 1
    return Graph.from_edges(n, edges)


def generate(spec: GenSpec) -> Graph:
    rng = SplitMix64(spec.seed)
    sizes = [rng.between(spec.min_size, spec.max_size) for _ in range(spec.n_blocks)]
    attach = []
    n = sizes[0]
    for s in sizes[1:]:
        attach.append(rng.below(n))
        n += s - 1
    return tree_of_cliques(sizes, attach)


def corpus_graph(seed: int, max_n: int = 12) -> Graph:
    """One graph of a verification corpus, with at most ``max_n`` vertices.

    The seed also picks the shape: the maximum block size (2..5) and a
    target vertex count (2..max_n).  Cliques are added until the next one
    would overshoot the target.
    """
    rng = SplitMix64(seed)
    max_size = rng.between(2, min(5, max_n))
    target = rng.between(2, max_n)
    sizes = [rng.between(2, max_size)]
    n = sizes[0]
    attach = []
    while True:
        s = rng.between(2, max_size)
        if n + s - 1 > target:
            break
        attach.append(rng.below(n))
        sizes.append(s)
        n += s - 1
    return tree_of_cliques(sizes, attach)


# -- named fixtures ---------------------------------------------------------


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star(leaves: int) -> Graph:
    """``K_{1,leaves}`` with centre 0."""
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete(n: int) -> Graph:
    return tree_of_cliques([n], [])


def bowtie() -> Graph:
    """Triangles {0,1,2} and {2,3,4} sharing vertex 2."""
    return Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])


def triangle_chain(k: int) -> Graph:
    """``k`` triangles, consecutive ones joined by a bridge."""
    edges = [(0, 1), (0, 2), (1, 2)]
    for i in range(1, k):
        a = 3 * i
        edges += [(a - 1, a), (a, a + 1), (a, a + 2), (a + 1, a + 2)]
    return Graph.from_edges(3 * k, edges)


def fixtures() -> dict[str, Graph]:
    named = {f"P{n}": path(n) for n in range(2, 9)}
    named.update({f"star{k}": star(k) for k in range(2, 6)})
    named["bowtie"] = bowtie()
    named.update({f"K{n}": complete(n) for n in range(3, 7)})
    named.update({f"triangles{k}": triangle_chain(k) for k in (2, 3)})
    named["two_triangles_shared"] = tree_of_cliques([3, 3], [0])
    return named
