"""Constructed instances shared by the solver and acceptance tests."""

from epkit.generators import complete, complete_bipartite, doubled_cycle, subdivide
from epkit.graph import Multigraph


def ring(mults: list[int]) -> Multigraph:
    """A cycle whose i-th edge has multiplicity ``mults[i]``."""
    n = len(mults)
    return Multigraph.from_edges(n, [(i, (i + 1) % n) for i, m in enumerate(mults) for _ in range(m)])


def petersen() -> Multigraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Multigraph.from_edges(10, outer + spokes + inner)


# (name, graph, k, ell): the solver must contract two blocks at least once
# and return a packing.
TWO_BLOCK_FIXTURES = [
    ("doubled-50", doubled_cycle(50), 1, 3),
    ("doubled-51", doubled_cycle(51), 1, 3),
    ("doubled-70", doubled_cycle(70), 2, 3),
    ("tripled-70", ring([3] * 70), 2, 3),
    ("tripled-80", ring([3] * 80), 2, 3),
    ("mixed-2-3", ring([2, 3] * 30), 1, 3),
]

# (name, graph, k, ell=2): fully reduced graphs solved by the ball packing.
BALL_FIXTURES = [
    ("K4-sub6", subdivide(complete(4), 6), 1),
    ("K4-sub7", subdivide(complete(4), 7), 1),
    ("K5-sub6", subdivide(complete(5), 6), 1),
    ("K5-sub7", subdivide(complete(5), 7), 1),
    ("K33-sub5", subdivide(complete_bipartite(3, 3), 5), 1),
    ("K33-sub7", subdivide(complete_bipartite(3, 3), 7), 1),
    ("K44-sub5", subdivide(complete_bipartite(4, 4), 5), 1),
    ("petersen-sub5", subdivide(petersen(), 5), 1),
    ("petersen-sub7", subdivide(petersen(), 7), 1),
    ("K6-sub6", subdivide(complete(6), 6), 2),
    ("K6-sub7", subdivide(complete(6), 7), 2),
]
