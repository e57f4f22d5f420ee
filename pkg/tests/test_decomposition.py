import networkx as nx
import pytest

from epkit.decomposition import ball_partition, ko_minor, pre_leaf_analysis, separated_set
from epkit.errors import InvariantViolation, PreconditionError
from epkit.generators import complete, cubic_high_girth, cycle, gnp
from epkit.graph import Multigraph, bfs_distances


def star_with_legs(legs: int, length: int) -> Multigraph:
    g = Multigraph.from_edges(1, [])
    for _ in range(legs):
        prev = 0
        for _ in range(length):
            w = g.add_vertex()
            g.add_edge(prev, w)
            prev = w
    return g


def test_separated_set_examples():
    assert separated_set(Multigraph.from_edges(1, []), 5) == [0]
    assert len(separated_set(complete(4), 2)) == 1
    assert separated_set(cycle(12), 3) == [0, 3, 6, 9]


@pytest.mark.parametrize("seed", range(30))
def test_separated_set_is_maximal(seed):
    g = gnp(15, 0.2, seed)
    d = 3
    xs = separated_set(g, d)
    for x in xs:
        dist = bfs_distances(g, x, limit=d - 1)
        assert not (set(dist) - {x}) & set(xs)
    for v in g.vertices():
        assert any(bfs_distances(g, x, limit=d - 1).get(v) is not None for x in xs)


def test_ball_partition_singletons():
    g = cycle(5)
    dec = ball_partition(g, g.vertices(), 0)
    assert all(dec.parts[v] == frozenset({v}) for v in g.vertices())


def test_ball_partition_layered_tie_break():
    # 0-based version of the twelve-cycle with centres at positions 1 and 7
    g = cycle(12)
    dec = ball_partition(g, [0, 6], 2)
    assert dec.parts[0] == frozenset({10, 11, 0, 1, 2, 3, 9})
    assert dec.parts[6] == frozenset({4, 5, 6, 7, 8})
    assert dec.distance[9] == 3


def test_ball_partition_errors():
    with pytest.raises(PreconditionError):
        ball_partition(cycle(12), [0, 3], 2)
    two = Multigraph.from_edges(4, [(0, 1), (2, 3)])
    with pytest.raises(PreconditionError):
        ball_partition(two, [0], 1)


@pytest.mark.parametrize("seed", range(20))
def test_ball_partition_properties(seed):
    g = cubic_high_girth(7, seed=seed, n=60)
    xs = separated_set(g, 5)
    dec = ball_partition(g, xs, 2)
    assert sorted(v for p in dec.part_list() for v in p) == g.vertices()
    for x in xs:
        assert set(bfs_distances(g, x, limit=2)) <= dec.parts[x]
        assert nx.is_connected(nx.Graph([g.endpoints(e) for e in g.edges() if set(g.endpoints(e)) <= dec.parts[x]]))


def test_ko_minor_m0_is_identity():
    pet = Multigraph.from_edges(10, list(nx.petersen_graph().edges()))
    minor, cmap = ko_minor(pet, 0)
    assert minor == pet
    assert minor.min_degree() == 3
    assert all(len(p) == 1 for p in cmap.vertex_map.values())


def test_ko_minor_cubic_girth_eleven():
    g = cubic_high_girth(11, seed=0)
    minor, _ = ko_minor(g, 1)
    assert minor.is_simple()
    assert minor.min_degree() >= 6


def test_pre_leaf_single_vertex_part():
    g = Multigraph.from_edges(1, [])
    dec = ball_partition(g, [0], 3)
    rep = pre_leaf_analysis(g, dec, 0, 2)
    assert rep.pre_leaves == [] and rep.star_blocks == []


def test_pre_leaf_star_with_three_legs():
    r = 4
    g = star_with_legs(3, r)
    dec = ball_partition(g, [0], r)
    rep = pre_leaf_analysis(g, dec, 0, 2)
    bd = rep.decomposition
    assert len(rep.pre_leaves) == 3
    depth = bfs_distances(g, 0)
    for p in rep.pre_leaves:
        assert sorted(depth[v] for v in bd.block_vertices[p]) == [r - 2, r - 1]
    assert len(rep.leaf_to_pre_leaf) == 3
    assert not rep.orphan_pre_leaves and not rep.ambiguous_leaf_blocks


def test_pre_leaf_single_edge_is_own_pre_leaf():
    g = Multigraph.from_edges(2, [(0, 1)])
    dec = ball_partition(g, [0], 3)
    rep = pre_leaf_analysis(g, dec, 0, 2)
    assert rep.pre_leaves == [0]


def test_pre_leaf_rejects_long_cycle():
    g = cycle(5)
    dec = ball_partition(g, [0], 3)
    with pytest.raises(InvariantViolation):
        pre_leaf_analysis(g, dec, 0, 3)
