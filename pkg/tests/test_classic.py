import pytest

from epkit.classic import g_classic, solve_classic
from epkit.errors import PreconditionError
from epkit.generators import complete, cubic_high_girth, cycle, gnp, path, subdivide
from epkit.graph import Multigraph
from epkit.oracle import is_forest, verify_classic_certificate


@pytest.mark.parametrize("k, value", [(0, 0), (1, 2), (2, 10), (3, 18), (4, 18), (5, 26)])
def test_g_classic(k, value):
    assert g_classic(k) == value


def test_forest_gives_empty_hitting_set():
    cert = solve_classic(path(6), 3, "vertex")
    assert cert.kind == "hitting" and cert.hitting == frozenset()


def test_triangle_packs_one_cycle():
    cert = solve_classic(complete(3), 1, "vertex")
    assert cert.kind == "packing" and len(cert.cycles) == 1


def test_k5_two_cycles_impossible():
    g = complete(5)
    cert = solve_classic(g, 2, "vertex")
    assert cert.kind == "hitting"
    assert len(cert.hitting) == 3
    assert cert.bound == 20
    assert is_forest(g.without_vertices(cert.hitting))


def test_multigraph_rejected():
    with pytest.raises(PreconditionError):
        solve_classic(Multigraph.from_edges(2, [(0, 1), (0, 1)]), 1)
    with pytest.raises(PreconditionError):
        solve_classic(complete(3), 1, "both")


def test_k_zero():
    cert = solve_classic(complete(4), 0, "edge")
    assert cert.kind == "packing" and cert.cycles == []


def test_suppression_lifts_cycles():
    g = subdivide(complete(4), 3)
    cert = solve_classic(g, 1, "vertex")
    assert cert.kind == "packing"
    assert verify_classic_certificate(g, 1, cert).ok
    assert any("suppress" in p for p in cert.provenance) or len(cert.cycles[0]) >= 9


def test_minor_step_on_high_girth_cubic_graph():
    g = cubic_high_girth(11, seed=1)
    cert = solve_classic(g, 2, "vertex")
    assert cert.kind == "packing" and len(cert.cycles) == 2
    assert "ball minor with m=1" in cert.provenance
    assert verify_classic_certificate(g, 2, cert).ok


def test_edge_mode_on_cycle():
    cert = solve_classic(cycle(7), 2, "edge")
    assert cert.kind == "hitting" and len(cert.hitting) == 7
    assert verify_classic_certificate(cycle(7), 2, cert).ok


@pytest.mark.parametrize("seed", range(60))
@pytest.mark.parametrize("mode", ["vertex", "edge"])
def test_random_graphs_verify(seed, mode):
    g = gnp(10, 0.15 + 0.01 * seed, seed)
    for k in (1, 2, 3):
        cert = solve_classic(g, k, mode)
        rep = verify_classic_certificate(g, k, cert)
        assert rep.ok, rep.problems
