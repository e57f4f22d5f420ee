import pytest

from epkit.errors import PreconditionError
from epkit.generators import complete, cycle, path, random_min_degree_graph, theta
from epkit.graph import Multigraph, validate_cycle
from epkit.oracle import enumerate_long_cycles
from epkit.packing import (
    even_cycle_from_theta,
    greedy_cycle_packing,
    greedy_long_cycle_packing,
    greedy_shortest_cycles,
    maximal_path_long_cycle,
)
from epkit.flow import max_edge_disjoint_paths


def assert_vertex_disjoint(g, cycles):
    seen = set()
    for c in cycles:
        validate_cycle(g, c)
        assert not seen & c.vertex_set
        seen |= c.vertex_set


def test_greedy_cycle_packing_examples():
    (c,) = greedy_cycle_packing(complete(4), 1)
    assert len(c) == 3
    cycles = greedy_cycle_packing(complete(7), 2)
    assert len(cycles) == 2 and all(len(c) == 3 for c in cycles)
    assert_vertex_disjoint(complete(7), cycles)
    assert greedy_cycle_packing(Multigraph(), 0) == []


def test_greedy_cycle_packing_precondition():
    with pytest.raises(PreconditionError):
        greedy_cycle_packing(cycle(6), 1)


def test_greedy_long_cycle_packing_examples():
    cycles = greedy_long_cycle_packing(complete(6), 2, 3)
    assert len(cycles) == 2
    assert_vertex_disjoint(complete(6), cycles)
    (c,) = greedy_long_cycle_packing(complete(5), 1, 4)
    assert len(c) == 4
    assert greedy_long_cycle_packing(cycle(5), 0, 3) == []
    with pytest.raises(PreconditionError):
        greedy_long_cycle_packing(complete(5), 1, 2)


def test_shortest_long_cycle_is_shortest():
    g = random_min_degree_graph(10, 5, seed=4)
    (c,) = greedy_long_cycle_packing(g, 1, 5)
    assert len(c) == min(len(x) for x in enumerate_long_cycles(g, 5, max_edges=100))


def test_maximal_path_long_cycle_examples():
    c = maximal_path_long_cycle(cycle(5), 5)
    assert len(c) == 5
    assert len(maximal_path_long_cycle(complete(4), 3)) >= 3
    with pytest.raises(PreconditionError):
        maximal_path_long_cycle(path(4), 3)


@pytest.mark.parametrize("seed", range(40))
def test_maximal_path_long_cycle_random(seed):
    ell = 3 + seed % 4
    g = random_min_degree_graph(12, ell - 1, seed)
    c = maximal_path_long_cycle(g, ell)
    validate_cycle(g, c)
    assert len(c) >= ell


@pytest.mark.parametrize(
    "lengths, expected",
    [((1, 2, 3), 4), ((2, 2, 2), 4), ((1, 1, 3), 2), ((2, 5, 3), 8)],
)
def test_even_cycle_from_theta(lengths, expected):
    g = theta(lengths)
    _, paths = max_edge_disjoint_paths(g, 0, 1)
    c = even_cycle_from_theta(paths)
    validate_cycle(g, c)
    assert len(c) == expected and len(c) % 2 == 0


def test_even_cycle_rejects_bad_paths():
    g = theta((2, 2, 2))
    _, paths = max_edge_disjoint_paths(g, 0, 1)
    with pytest.raises(PreconditionError):
        even_cycle_from_theta(paths[:2])
    with pytest.raises(PreconditionError):
        even_cycle_from_theta([paths[0], paths[0], paths[1]])


def test_greedy_shortest_cycles_stops_on_forest():
    g = Multigraph.from_edges(4, [(0, 1), (0, 1), (2, 3)])
    cycles = greedy_shortest_cycles(g, 3)
    assert len(cycles) == 1 and len(cycles[0]) == 2
