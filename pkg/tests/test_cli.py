import json
import subprocess
import sys

import pytest

from epkit.cli import main
from epkit.generators import complete, cycle, path
from epkit.graph import Multigraph
from epkit.io import loads_certificate, parse_graph, write_graph


@pytest.fixture
def graph_file(tmp_path):
    def make(g, name="g.txt"):
        p = tmp_path / name
        write_graph(g, p)
        return str(p)

    return make


def test_solve_long_packing(graph_file, capsys):
    rc = main(["solve-long", graph_file(cycle(10)), "--k", "1", "--l", "4", "--verify"])
    assert rc == 0
    cert = loads_certificate(capsys.readouterr().out)
    assert cert.kind == "packing" and [len(c) for c in cert.cycles] == [10]


def test_solve_long_forest(graph_file, tmp_path):
    out = tmp_path / "cert.json"
    rc = main(["solve-long", graph_file(path(7)), "--k", "5", "--l", "3", "--out", str(out)])
    assert rc == 0
    cert = loads_certificate(out.read_text())
    assert cert.kind == "hitting" and cert.hitting == frozenset()


def test_malformed_header(tmp_path, capsys):
    p = tmp_path / "bad.txt"
    p.write_text("graph 3 0\n")
    assert main(["solve-long", str(p), "--k", "1", "--l", "3"]) == 2
    assert "bad header" in capsys.readouterr().err


def test_missing_file(tmp_path):
    assert main(["solve-long", str(tmp_path / "nope.txt"), "--k", "1", "--l", "3"]) == 2


def test_bad_arguments_exit_two(graph_file):
    with pytest.raises(SystemExit) as info:
        main(["solve-long", graph_file(cycle(4)), "--k", "one", "--l", "3"])
    assert info.value.code == 2
    assert main(["solve-long", graph_file(cycle(4)), "--k", "1", "--l", "1"]) == 2


def test_solve_classic(graph_file, capsys):
    assert main(["solve-classic", graph_file(complete(3)), "--k", "1", "--mode", "vertex", "--verify"]) == 0
    assert loads_certificate(capsys.readouterr().out).kind == "packing"
    assert main(["solve-classic", graph_file(path(5)), "--k", "2", "--mode", "edge"]) == 0
    cert = loads_certificate(capsys.readouterr().out)
    assert cert.kind == "hitting" and cert.hitting == frozenset()


def test_solve_classic_rejects_multigraph(graph_file, capsys):
    g = Multigraph.from_edges(2, [(0, 1), (0, 1)])
    assert main(["solve-classic", graph_file(g), "--k", "1"]) == 2
    assert "requires a simple graph" in capsys.readouterr().err


def test_gen_models(capsys):
    assert main(["gen", "cycle", "n=10"]) == 0
    assert parse_graph(capsys.readouterr().out) == cycle(10)
    assert main(["gen", "theta", "lengths=[1,2,3]"]) == 0
    assert parse_graph(capsys.readouterr().out).number_of_edges() == 6


def test_gen_is_deterministic(capsys):
    main(["gen", "gnp", "n=12", "p=0.3", "--seed", "7"])
    first = capsys.readouterr().out
    main(["gen", "gnp", "n=12", "p=0.3", "--seed", "7"])
    assert capsys.readouterr().out == first


def test_gen_disjoint_union(capsys):
    parts = '[{"model": "cycle", "params": {"n": 4}}, {"model": "complete", "params": {"n": 3}}]'
    assert main(["gen", "disjoint-union", f"parts={parts}"]) == 0
    g = parse_graph(capsys.readouterr().out)
    assert (g.number_of_vertices(), g.number_of_edges()) == (7, 7)


def test_gen_bad_parameters():
    assert main(["gen", "cycle"]) == 2
    assert main(["gen", "cycle", "n=two"]) == 2
    assert main(["gen", "cycle", "ten"]) == 2


def test_oracle_command(graph_file, capsys):
    assert main(["oracle", graph_file(complete(4)), "--l", "3"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["nu"] == 1 and data["tau"] == 3 and data["has_long_cycle"] is True


def test_oracle_budget(graph_file, capsys):
    assert main(["--budget-edges", "3", "oracle", graph_file(complete(4)), "--l", "3", "--what", "nu"]) == 0
    assert json.loads(capsys.readouterr().out)["status"] == "unverifiable"


def test_verify_command(graph_file, tmp_path, capsys):
    g = graph_file(cycle(8))
    cert = tmp_path / "c.json"
    main(["solve-long", g, "--k", "1", "--l", "3", "--out", str(cert)])
    assert main(["verify", g, str(cert)]) == 0
    assert json.loads(capsys.readouterr().out)["status"] == "ok"
    # the same certificate is wrong for a different graph
    assert main(["verify", graph_file(path(8), "p.txt"), str(cert)]) == 1


def test_verify_catches_tampered_hitting_set(graph_file, tmp_path):
    g = graph_file(cycle(10))
    cert = tmp_path / "c.json"
    main(["solve-long", g, "--k", "2", "--l", "4", "--out", str(cert)])
    data = json.loads(cert.read_text())
    data["hitting"] = []
    cert.write_text(json.dumps(data))
    assert main(["verify", g, str(cert)]) == 1


def test_console_entry_point(tmp_path):
    out = subprocess.run(
        [sys.executable, "-m", "epkit.cli", "gen", "path", "n=3"], capture_output=True, text=True, check=True
    )
    assert out.stdout == "multigraph 3 2\n0 1\n1 2\n"
