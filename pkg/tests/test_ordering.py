import pytest
from hypothesis import given

from pairdom.gen import bowtie, complete, path, star
from pairdom.graph_core import NotACutVertex, decompose, load_block_graph
from pairdom.ordering import bfs_depths, distance_to_block, vertex_ordering

from .conftest import block_graphs


def order_of(g, r):
    return vertex_ordering(g, decompose(g), r)


def latest_neighbour(g, order, v):
    """Father straight from the definition, independent of block bookkeeping."""
    pos = {u: i for i, u in enumerate(order)}
    later = [w for w in g.neighbors(v) if pos[w] > pos[v]]
    return max(later, key=pos.__getitem__) if later else -1


def test_distance_to_block():
    g = path(4)
    assert distance_to_block(g, 3, (0, 1)) == 3
    assert distance_to_block(g, 1, (1, 2)) == 1
    assert distance_to_block(bowtie(), 2, (0, 1, 2)) == 1
    assert distance_to_block(bowtie(), 2, (2, 3, 4)) == 1


def test_path_tie_breaks_on_smallest_id():
    ro = order_of(path(3), 1)
    assert ro.order == (0, 2, 1)
    assert ro.father[0] == ro.father[2] == 1
    assert ro.father[1] == -1


def test_bowtie():
    g = bowtie()
    ro = order_of(g, 2)
    assert ro.order == (0, 1, 3, 4, 2)
    # the root is ordered last, so it is every other vertex's latest neighbour
    assert [ro.father[v] for v in (0, 1, 3, 4)] == [2, 2, 2, 2]
    for v in (0, 1, 3, 4):
        assert ro.father[v] == latest_neighbour(g, ro.order, v)
    assert ro.depth == (1, 1, 0, 1, 1)


def test_star_leaves_ascending():
    ro = order_of(star(3), 0)
    assert ro.order == (1, 2, 3, 0)
    assert set(ro.father[1:]) == {0}
    assert ro.children[0] == (1, 2, 3)


def test_path_depths():
    g = path(5)
    ro = order_of(g, 3)
    assert ro.depth == (3, 2, 1, 0, 1)
    assert ro.order == (0, 1, 2, 4, 3)


def test_peels_farthest_first():
    from pairdom.gen import tree_of_cliques

    g = tree_of_cliques([2, 2, 3, 3], [1, 2, 0])
    # blocks {0,1}, {1,2}, {2,3,4}, {0,5,6}; both triangles are at distance 2
    # from the root 1 and {0,5,6} wins the tie on its smaller minimum id
    ro = order_of(g, 1)
    assert ro.order == (5, 6, 3, 4, 0, 2, 1)


def test_requires_cut_vertex():
    with pytest.raises(NotACutVertex):
        order_of(path(3), 0)
    with pytest.raises(NotACutVertex):
        order_of(complete(2), 0)


def cut_roots(g):
    bc = load_block_graph(g)
    return bc, sorted(bc.cut_vertices)


@given(block_graphs(max_n=14))
def test_ordering_invariants(g):
    bc, roots = cut_roots(g)
    for r in roots:
        ro = vertex_ordering(g, bc, r)
        assert ro.order[-1] == r
        assert sorted(ro.order) == list(range(g.n))
        assert ro.depth == tuple(bfs_depths(g, r))
        seen_as_child = []
        for v in range(g.n):
            if v == r:
                continue
            f = ro.father[v]
            assert f == latest_neighbour(g, ro.order, v)
            assert ro.position[f] > ro.position[v]
            assert f in bc.cut_vertices
            assert ro.depth[v] == ro.depth[f] + 1
            assert v in ro.children[f]
            assert set(bc.blocks[ro.parent_block[v]]) >= {v, f}
        for kids in ro.children:
            seen_as_child.extend(kids)
        assert sorted(seen_as_child) == sorted(set(range(g.n)) - {r})
        for v in range(g.n):
            for w in ro.descendants(v):
                assert ro.position[w] < ro.position[v]


@given(block_graphs(max_n=12))
def test_any_vertex_father_chain_reaches_root(g):
    bc, roots = cut_roots(g)
    for r in roots:
        ro = vertex_ordering(g, bc, r)
        assert set(ro.subtree(r)) == set(range(g.n))
