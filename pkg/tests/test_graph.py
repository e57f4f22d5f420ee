import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from epkit.cycles import girth
from epkit.errors import PreconditionError
from epkit.generators import complete, cycle, path
from epkit.graph import (
    Cycle,
    Multigraph,
    bfs_distances,
    connected_components,
    contract_partition,
    contract_vertex_set,
    cycle_problems,
    shortest_path,
    validate_cycle,
)

edge_lists = st.integers(1, 8).flatmap(
    lambda n: st.tuples(
        st.just(n), st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=16)
    )
)


def test_loop_counts_twice_toward_degree():
    g = Multigraph.from_edges(2, [(0, 0), (0, 1), (0, 1)])
    assert g.degree(0) == 4
    assert g.degree(1) == 2
    assert not g.is_simple()
    assert g.loops() == [0]


def test_edge_ids_are_not_reused():
    g = Multigraph.from_edges(3, [(0, 1), (1, 2)])
    g.remove_edge(1)
    e = g.add_edge(1, 2)
    assert e == 2
    g.remove_vertex(2)
    assert g.add_vertex() == 3


def test_contract_triangle_pair_gives_parallel_edges():
    g = complete(3)
    h, cmap = contract_vertex_set(g, {0, 1})
    assert h.number_of_vertices() == 2
    assert h.number_of_edges() == 2
    (merged,) = [v for v, part in cmap.vertex_map.items() if len(part) == 2]
    assert all(set(h.endpoints(e)) == {merged, 2} for e in h.edges())


def test_contract_path_prefix_leaves_one_edge():
    h, _ = contract_vertex_set(path(3), {0, 1})
    assert h.number_of_edges() == 1


def test_contract_c6_half_gives_four_cycle():
    h, cmap = contract_vertex_set(cycle(6), {0, 1, 2})
    assert h.number_of_vertices() == 4
    assert sorted(h.degree(v) for v in h.vertices()) == [2, 2, 2, 2]
    assert sorted(cmap.edge_map) == [2, 3, 4, 5]


def test_contract_keep_loops():
    h, _ = contract_vertex_set(complete(3), {0, 1}, loop_policy="keep")
    assert len(h.loops()) == 1


def test_contract_rejects_bad_sets():
    with pytest.raises(PreconditionError):
        contract_vertex_set(path(4), set())
    with pytest.raises(PreconditionError):
        contract_vertex_set(path(4), {0, 3})


def test_lift_cycle_through_contracted_part():
    g = cycle(8)
    h, cmap = contract_vertex_set(g, {0, 1, 2, 3})
    _, c = girth(h)
    lifted = cmap.lift_cycle(c)
    assert len(lifted) == 8
    validate_cycle(g, lifted)


def test_bfs_examples():
    assert bfs_distances(complete(4), 2) == {0: 1, 1: 1, 2: 0, 3: 1}
    assert bfs_distances(path(3), 0) == {0: 0, 1: 1, 2: 2}
    g = Multigraph.from_edges(4, [(0, 1), (2, 3)])
    assert bfs_distances(g, 0) == {0: 0, 1: 1}


def test_shortest_path_respects_allowed_set():
    g = cycle(6)
    p = shortest_path(g, 0, 2)
    assert p.vertices == (0, 1, 2)
    p = shortest_path(g, 0, 2, allowed={0, 5, 4, 3, 2})
    assert len(p) == 4


def test_cycle_validator_catches_problems():
    g = Multigraph.from_edges(3, [(0, 1), (1, 2), (2, 0), (0, 1)])
    assert cycle_problems(g, Cycle((0, 1, 2), (0, 1, 2))) == []
    assert cycle_problems(g, Cycle((0, 1), (0, 3))) == []
    assert cycle_problems(g, Cycle((0, 1, 2), (0, 1, 1)))
    assert cycle_problems(g, Cycle((0, 2, 1), (0, 1, 2)))


@given(edge_lists)
@settings(max_examples=100, deadline=None)
def test_copy_and_components_partition(data):
    n, pairs = data
    g = Multigraph.from_edges(n, pairs)
    assert g.copy() == g
    comps = connected_components(g)
    assert sorted(v for c in comps for v in c) == g.vertices()
    assert sum(g.degree(v) for v in g.vertices()) == 2 * g.number_of_edges()


@given(edge_lists)
@settings(max_examples=100, deadline=None)
def test_contract_partition_preserves_edges(data):
    n, pairs = data
    g = Multigraph.from_edges(n, pairs)
    parts = [list(range(0, n, 2))]
    h, cmap = contract_partition(g, parts, loop_policy="keep")
    assert h.number_of_edges() == g.number_of_edges()
    covered = sorted(u for part in cmap.vertex_map.values() for u in part)
    assert covered == g.vertices()
