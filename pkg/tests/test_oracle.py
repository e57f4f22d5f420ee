import itertools

import networkx as nx
import pytest
from conftest import random_multigraphs, small_graphs

from epkit.certificates import Certificate
from epkit.errors import BudgetExceeded, PreconditionError
from epkit.generators import complete, cycle, gnp, path
from epkit.graph import Cycle, Multigraph
from epkit.oracle import (
    check_diameter_lemma,
    enumerate_long_cycles,
    exact_max_packing,
    exact_min_hitting,
    has_long_cycle_exact,
    hitting_set_within,
    verify_certificate,
)


def nx_long_cycles(g: Multigraph, ell: int) -> list[frozenset]:
    """Edge sets of long cycles of a simple graph, found by networkx."""
    h = nx.Graph()
    h.add_nodes_from(g.vertices())
    ids = {}
    for e in g.edges():
        u, v = g.endpoints(e)
        h.add_edge(u, v)
        ids[frozenset((u, v))] = e
    out = []
    for vs in nx.simple_cycles(h):
        if len(vs) >= max(ell, 3):
            out.append(frozenset(ids[frozenset((vs[i], vs[(i + 1) % len(vs)]))] for i in range(len(vs))))
    return out


def brute_tau(g: Multigraph, ell: int) -> int:
    family = nx_long_cycles(g, ell)
    for t in range(g.number_of_edges() + 1):
        for f in itertools.combinations(g.edges(), t):
            if all(c & set(f) for c in family):
                return t
    raise AssertionError("unreachable")


def brute_nu(g: Multigraph, ell: int) -> int:
    family = nx_long_cycles(g, ell)
    best = 0

    def rec(i, used, count):
        nonlocal best
        best = max(best, count)
        for j in range(i, len(family)):
            if not family[j] & used:
                rec(j + 1, used | family[j], count + 1)

    rec(0, frozenset(), 0)
    return best


@pytest.mark.parametrize("g, ell, expected", [(cycle(10), 4, True), (cycle(10), 11, False), (path(7), 2, False)])
def test_has_long_cycle(g, ell, expected):
    assert has_long_cycle_exact(g, ell) is expected


def test_digon_is_a_long_cycle_at_two():
    g = Multigraph.from_edges(2, [(0, 1), (0, 1)])
    assert has_long_cycle_exact(g, 2)
    assert not has_long_cycle_exact(g, 3)


def test_packing_examples():
    assert exact_max_packing(path(6), 3).value == 0
    assert exact_max_packing(cycle(10), 4).value == 1
    res = exact_max_packing(complete(6), 3)
    assert res.value == 4
    edges = [e for c in res.cycles for e in c.edges]
    assert len(edges) == len(set(edges))


def test_hitting_examples():
    assert exact_min_hitting(cycle(10), 4).value == 1
    assert exact_min_hitting(path(6), 3).value == 0


def test_k4_needs_three_edges():
    # K4 has 6 edges and a forest on 4 vertices keeps at most 3 of them.
    g = complete(4)
    res = exact_min_hitting(g, 3)
    assert res.value == 3 == brute_tau(g, 3)
    assert not has_long_cycle_exact(g.without_edges(res.edges), 3)
    assert hitting_set_within(g, 3, 2) is None


@pytest.mark.parametrize("ell, nu, tau", [(2, 8, 21), (3, 8, 21), (4, 6, 18), (5, 4, 15)])
def test_k8_values(ell, nu, tau):
    g = complete(8)
    assert exact_max_packing(g, ell).value == nu
    assert hitting_set_within(g, ell, tau - 1) is None
    assert hitting_set_within(g, ell, tau) is not None


@pytest.mark.parametrize("n", [5, 6])
@pytest.mark.parametrize("ell", [3, 4, 5])
def test_against_brute_force_on_small_graphs(n, ell):
    for g in small_graphs(n):
        if g.number_of_vertices() != n:
            continue
        nu = exact_max_packing(g, ell)
        tau = exact_min_hitting(g, ell)
        assert nu.value == brute_nu(g, ell)
        assert tau.value == brute_tau(g, ell)
        assert nu.value <= tau.value
        assert not has_long_cycle_exact(g.without_edges(tau.edges), ell)


def test_long_cycle_count_matches_networkx():
    for seed in range(30):
        g = gnp(8, 0.5, seed)
        for ell in (3, 5):
            mine = {c.edge_set for c in enumerate_long_cycles(g, ell)}
            assert mine == set(nx_long_cycles(g, ell))


@pytest.mark.parametrize("ell", [2, 3, 4])
def test_decision_matches_exact_value(ell):
    for g in random_multigraphs()[:150]:
        tau = exact_min_hitting(g, ell).value
        assert hitting_set_within(g, ell, tau - 1) is None
        found = hitting_set_within(g, ell, tau)
        assert found is not None and len(found) <= tau
        assert not has_long_cycle_exact(g.without_edges(found), ell)


def test_budget_exceeded_is_explicit():
    with pytest.raises(BudgetExceeded):
        has_long_cycle_exact(cycle(30), 3, max_edges=10)
    with pytest.raises(BudgetExceeded):
        exact_max_packing(complete(7), 3, max_cycles=50)


# --- certificate checks --------------------------------------------------------


def test_valid_packing_ok():
    g = cycle(6)
    c = Cycle(tuple(range(6)), tuple(range(6)))
    assert verify_certificate(g, 1, 6, Certificate("packing", 1, 6, 32, [c])).ok


def test_shared_edge_is_reported():
    g = Multigraph.from_edges(3, [(0, 1), (1, 2), (2, 0), (0, 1), (1, 2)])
    a = Cycle((0, 1, 2), (0, 1, 2))
    b = Cycle((0, 1, 2), (3, 4, 2))
    rep = verify_certificate(g, 2, 3, Certificate("packing", 2, 3, 0, [a, b]))
    assert rep.status == "violation"
    assert any("not edge-disjoint" in p for p in rep.problems)


def test_short_and_missing_cycles_reported():
    g = cycle(4)
    c = Cycle(tuple(range(4)), tuple(range(4)))
    rep = verify_certificate(g, 2, 5, Certificate("packing", 2, 5, 0, [c]))
    assert rep.status == "violation" and len(rep.problems) == 2


def test_bound_exceeded_reported():
    k, ell = 1, 2
    bound = 16
    g = Multigraph.from_edges(bound + 2, [(i, i + 1) for i in range(bound + 1)])
    cert = Certificate("hitting", k, ell, bound, hitting=frozenset(range(bound + 1)))
    rep = verify_certificate(g, k, ell, cert)
    assert rep.status == "violation"
    assert any("bound exceeded" in p for p in rep.problems)


def test_surviving_cycle_reported():
    cert = Certificate("hitting", 1, 3, 48, hitting=frozenset())
    assert verify_certificate(cycle(5), 1, 3, cert).status == "violation"


def test_unknown_edge_reported():
    cert = Certificate("hitting", 1, 3, 48, hitting=frozenset({99}))
    assert verify_certificate(cycle(5), 1, 3, cert).status == "violation"


def test_unverifiable_is_not_ok():
    cert = Certificate("hitting", 1, 3, 48, hitting=frozenset({0}))
    rep = verify_certificate(cycle(30), 1, 3, cert, max_edges=5)
    assert rep.status == "unverifiable" and not rep.ok


# --- diameter statement ----------------------------------------------------------


def test_diameter_examples():
    assert check_diameter_lemma(cycle(4), 5, 9).status == "ok"
    assert check_diameter_lemma(cycle(12), 5, 9).status == "premises not satisfied"
    assert check_diameter_lemma(path(8), 3, 5).status == "ok"
    with pytest.raises(PreconditionError):
        check_diameter_lemma(cycle(4), 5, 8)


@pytest.mark.parametrize("ell", [3, 4])
def test_diameter_statement_on_small_graphs(ell):
    for g in small_graphs(7):
        assert check_diameter_lemma(g, ell, 2 * ell - 1).status != "counterexample"
