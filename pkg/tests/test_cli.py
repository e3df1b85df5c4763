import json
import subprocess
import sys

import pytest

from stlab.cli import main
from stlab.graph import Graph


def run(argv, capsys, env=None):
    code = main(argv, environ=env or {})
    out = capsys.readouterr()
    return code, out.out, out.err


def test_family_build(capsys):
    code, out, _ = run(["family", "build", "S(n=10,h=2)"], capsys)
    assert code == 0
    g = Graph.from_graph6(out.strip())
    assert g.n == 10 and g.edge_count == 17


def test_q_exact_family(capsys):
    code, out, _ = run(["q", "--family", "F(n=9,k=2)", "--exact"], capsys)
    data = json.loads(out)
    assert code == 0 and data["schema"] == "stlab/1"
    assert data["poly_text"] == "x^2 - 11x + 16"
    assert abs(data["approx"] - 9.2749) < 1e-4


def test_q_enclosure_and_env_tolerance(capsys):
    g6 = Graph.star(4).to_graph6()
    code, out, _ = run(["q", g6], capsys, env={"STLAB_TOL": "1/1000"})
    data = json.loads(out)
    assert code == 0 and data["kind"] == "enclosure" and data["converged"]
    assert abs(data["approx"] - 5) < 1e-3
    code, out, _ = run(["q", g6, "--exact"], capsys)
    assert json.loads(out)["poly"][0] == 1


def test_flag_beats_environment(capsys):
    code, _, err = run(["q", "--family", "N6", "--tol", "-1"], capsys, env={"STLAB_TOL": "1/10"})
    assert code == 3 and "positive" in err
    code, _, _ = run(["q", "--family", "N6", "--tol", "1/10"], capsys, env={"STLAB_TOL": "x"})
    assert code == 0


def test_forest_check(capsys):
    k5 = Graph.complete(6).to_graph6()
    code, out, _ = run(["forest", "check", k5, "--forest", "3x2"], capsys)
    assert code == 0 and len(json.loads(out)["embedding"]) == 2
    code, out, _ = run(["forest", "check", Graph.star(6).to_graph6(), "--forest", "3x2"], capsys)
    assert out == "absent\n"


def test_host_embed(capsys):
    code, out, _ = run(["host", "embed", Graph.path(3).to_graph6(), "--host", "F(k=2)"], capsys)
    assert code == 0 and json.loads(out)["host"] == "F(n=3,k=2)"
    code, out, _ = run(["host", "embed", Graph.complete(4).to_graph6(), "--host", "S(h=1)"], capsys)
    assert out == "none\n"


def test_scan(capsys):
    code, out, _ = run(["scan", "edges", "--forest", "3x2", "--n", "7"], capsys)
    data = json.loads(out)
    assert code == 0 and data["best"] == 11
    code, out, _ = run(["scan", "edges", "--forest", "3x2", "--n", "9", "--format", "g6"], capsys)
    assert len(out.split()) == 2


def test_verify_exit_codes_and_determinism(capsys):
    code, a, _ = run(["verify", "lem:hn1", "n=28..30", "--no-timing"], capsys)
    assert code == 0 and json.loads(a)["status"] == "pass"
    _, b, _ = run(["verify", "lem:hn1", "--grid", "n=28..30", "--no-timing"], capsys)
    assert a == b
    code, out, _ = run(["verify", "lem:hn1", "n=20", "--relaxed"], capsys)
    assert code == 0 and json.loads(out)["status"] == "observational"
    code, out, _ = run(["verify", "lem:hn1", "lem:q-chain", "n=28", "h=2", "--no-timing"], capsys)
    assert code == 0 and len(json.loads(out)["reports"]) == 2
    code, out, _ = run(["verify", "lem:hn1", "n=28", "--format", "csv"], capsys)
    assert out.startswith("claim,index")


def test_usage_errors_exit_3(capsys):
    for argv in (["verify", "lem:nope"], ["bogus"], ["q"], ["family", "build", "Q(n=1)"],
                 ["verify", "lem:hn1", "n=20"], ["forest", "check", "!!", "--forest", "3"],
                 ["verify", "lem:hn1", "n=a"]):
        code, out, err = run(argv, capsys)
        assert code == 3, argv
        assert out == "" and err.startswith("stlab: error:")


def test_console_script_entry_point():
    proc = subprocess.run([sys.executable, "-m", "stlab.cli", "family", "build", "K(n=3)"],
                          capture_output=True, text=True, check=True)
    assert proc.stdout.strip() == Graph.complete(3).to_graph6()
