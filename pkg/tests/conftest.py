import functools

import networkx as nx
import pytest

from epkit.generators import connected_graphs, random_multigraph
from epkit.graph import Multigraph

MULTIGRAPH_SEEDS = range(500)


@functools.lru_cache(maxsize=None)
def small_graphs(max_n: int = 8) -> tuple[Multigraph, ...]:
    return tuple(connected_graphs(max_n))


@functools.lru_cache(maxsize=None)
def random_multigraphs() -> tuple[Multigraph, ...]:
    return tuple(random_multigraph(seed) for seed in MULTIGRAPH_SEEDS)


def to_nx(g: Multigraph) -> nx.MultiGraph:
    h = nx.MultiGraph()
    h.add_nodes_from(g.vertices())
    for e in g.edges():
        u, v = g.endpoints(e)
        h.add_edge(u, v, key=e)
    return h


@pytest.fixture(scope="session")
def corpus_a():
    return small_graphs(8)


@pytest.fixture(scope="session")
def corpus_b():
    return random_multigraphs()


ACCEPTANCE_LINES: dict[int, str] = {}


def record(number: int, passed: bool, detail: str) -> None:
    """Keep one pass/fail line per acceptance criterion for the summary."""
    line = f"criterion {number}: {'PASS' if passed else 'FAIL'} - {detail}"
    ACCEPTANCE_LINES[number] = line
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for number in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[number])
