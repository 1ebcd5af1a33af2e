import csv
import io
import json

import pytest

from robustconn.cli import main
from robustconn.embedding import format_embedding, parse_embedding
from robustconn.generators import complete_graph, k7_torus, levi, triakis_tetrahedron
from robustconn.graph import format_graph, parse_graph


@pytest.fixture
def files(tmp_path):
    tri = triakis_tetrahedron()
    paths = {
        "triakis": tmp_path / "triakis.graph",
        "triakis_emb": tmp_path / "triakis.emb",
        "k7": tmp_path / "k7torus.emb",
        "levi": tmp_path / "levi.graph",
        "big": tmp_path / "k20.graph",
    }
    paths["triakis"].write_text(format_graph(tri.graph))
    paths["triakis_emb"].write_text(format_embedding(tri.embedding))
    paths["k7"].write_text(format_embedding(k7_torus().embedding))
    paths["levi"].write_text(format_graph(levi(5, 3).graph))
    paths["big"].write_text(format_graph(complete_graph(20)))
    return paths


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_ell_report(capsys, files):
    code, out, _ = run(capsys, "ell", "--graph", files["triakis"], "--R", "0,1,2,3")
    assert code == 0
    report = json.loads(out)
    assert report["optimum"] == "1/2"
    assert report["witness"] == [0, 1]
    assert set(report) >= {"optimum", "witness", "certificate", "nodes_explored", "elapsed_ms"}
    assert len(report["certificate"]["edges"]) == 7


def test_bounds_eps(capsys):
    code, out, _ = run(capsys, "bounds", "--eps", "--r", "3", "--d", "6")
    assert code == 0 and out.strip() == "21/128"
    code, out, _ = run(capsys, "bounds", "--eps", "--r", "5", "--d", "10/3", "--format", "json")
    assert json.loads(out)["half_eps"] == "49/192"


def test_bounds_tables(capsys):
    code, out, _ = run(capsys, "bounds", "--r", "3..4", "--d", "2..4", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 6
    assert {"r": "3", "d": "4/1"}.items() <= rows[2].items()
    code, out, _ = run(capsys, "bounds", "--r", "3", "--d", "6", "--format", "json")
    assert json.loads(out)[0]["eps"] == "21/128"


def test_genus(capsys, files):
    code, out, _ = run(capsys, "genus", "--embedding", files["k7"])
    assert code == 0 and out.strip() == "2"
    code, out, _ = run(capsys, "genus", "--embedding", files["k7"], "--format", "json")
    data = json.loads(out)
    assert data == {"euler_genus": 2, "faces": 14, "orientable": True, "edge_maximal": True}


def test_m_value_and_forest_and_maxleaf(capsys, files):
    code, out, _ = run(capsys, "m-value", "--embedding", files["k7"], "--format", "json")
    assert code == 0 and json.loads(out)["ratio"] == "3/7"
    code, out, _ = run(capsys, "forest", "--graph", files["triakis"])
    assert code == 0 and out.strip() == "5"
    code, out, _ = run(capsys, "maxleaf", "--graph", files["triakis"])
    assert code == 0 and json.loads(out)["maxleaf"] == 6


def test_kappa(capsys, files):
    code, out, _ = run(capsys, "kappa", "--embedding", files["triakis_emb"])
    assert code == 0 and json.loads(out)["optimum"] == "1/2"


def test_greedy_json_lines(capsys, files):
    code, out, _ = run(capsys, "greedy", "--graph", files["levi"], "--R", "0,1,2,3,4")
    assert code == 0
    rows = [json.loads(line) for line in out.splitlines()]
    assert [r["blue"] for r in rows[:-1]] == [10, 5, 2, 1]
    assert rows[-1] == {"final": True, "remaining": [3, 4]}


def test_pipeline(capsys, files):
    code, out, _ = run(capsys, "pipeline", "--embedding", files["triakis_emb"], "--R", "0,1,2,3", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["ratio"] == "1/2"


def test_out_file(capsys, files, tmp_path):
    target = tmp_path / "report.json"
    code, out, _ = run(capsys, "ell", "--graph", files["triakis"], "--R", "0,1,2,3", "--out", target)
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["optimum"] == "1/2"


def test_exit_code_size_limit(capsys, files):
    code, _, err = run(capsys, "kappa", "--graph", files["big"])
    assert code == 2 and "size limit" in err
    assert len(err.strip().splitlines()) == 1


def test_force_overrides_limit_with_warning(capsys, files):
    code, out, err = run(capsys, "ell", "--graph", files["big"], "--force")
    assert code == 0
    assert "WARNING" in err
    assert json.loads(out)["optimum"] == "19/20"


def test_exit_code_invalid_input(capsys, files, tmp_path):
    code, _, err = run(capsys, "ell", "--graph", tmp_path / "missing.graph")
    assert code == 1 and "invalid input" in err
    bad = tmp_path / "bad.graph"
    bad.write_text("3 1\n2 1\n")
    assert run(capsys, "ell", "--graph", bad)[0] == 1
    assert run(capsys, "ell", "--graph", files["triakis"], "--R", "0,99")[0] == 1
    assert run(capsys, "ell", "--graph", files["triakis"], "--R", "a")[0] == 1
    assert run(capsys, "genus", "--graph", files["triakis"])[0] == 1
    assert run(capsys, "greedy", "--graph", files["triakis"])[0] == 1


def test_unknown_flags_are_invalid_input(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["ell", "--nonsense"])
    assert exc.value.code == 1


def test_timeout_flag(capsys, tmp_path):
    path = tmp_path / "levi6.graph"
    path.write_text(format_graph(levi(6, 3).graph))
    code, out, _ = run(capsys, "maxleaf", "--graph", path, "--timeout-ms", "0")
    assert code == 0
    assert json.loads(out)["lower_bound_only"] is True


@pytest.mark.parametrize("argv, has_emb, n", [
    (["levi", "--n", "5", "--r", "3"], False, 15),
    (["diamond", "--k", "3", "--c", "5"], False, 20),
    (["triakis"], True, 8),
    (["k7torus"], True, 7),
    (["k5me"], True, 5),
    (["triangulation", "--n", "20", "--seed", "7"], True, 20),
    (["triangulation", "--n", "9", "--kind", "4conn"], True, 9),
])
def test_gen_writes_round_tripping_files(capsys, tmp_path, argv, has_emb, n):
    prefix = tmp_path / "inst"
    code, _, _ = run(capsys, "gen", *argv, "--out", prefix)
    assert code == 0
    graph_text = prefix.with_suffix(".graph").read_text()
    g = parse_graph(graph_text)
    assert g.n == n
    assert format_graph(g) == graph_text
    legend = json.loads(prefix.with_suffix(".legend.json").read_text())
    assert legend["n"] == n and len(legend["legend"]) <= n
    emb_path = prefix.with_suffix(".emb")
    assert emb_path.exists() == has_emb
    if has_emb:
        text = emb_path.read_text()
        assert format_embedding(parse_embedding(text)) == text


def test_gen_blowup_from_file(capsys, tmp_path):
    src = tmp_path / "k4.graph"
    src.write_text(format_graph(complete_graph(4)))
    code, out, _ = run(capsys, "gen", "blowup", "--input", src)
    assert code == 0
    g = parse_graph(out)
    assert g.n == 18


def test_gen_stdout_and_stdin_pipeline(capsys, monkeypatch):
    code, out, _ = run(capsys, "gen", "k7torus")
    assert code == 0
    monkeypatch.setattr("sys.stdin", io.StringIO(out))
    code, out, _ = run(capsys, "genus", "--embedding", "-")
    assert out.strip() == "2"


def test_verify_paper_only(capsys):
    code, out, _ = run(capsys, "verify-paper", "--only", "eps-table")
    assert code == 0
    assert "[PASS] eps-table" in out and "21/256, 5/27, 49/192, 3/10" in out
    code, _, err = run(capsys, "verify-paper", "--only", "nope")
    assert code == 1 and "unknown criteria" in err


def test_verify_paper_threads_env(capsys, monkeypatch, tmp_path):
    monkeypatch.setenv("ROBUSTCONN_THREADS", "2")
    target = tmp_path / "summary.json"
    code, out, _ = run(capsys, "verify-paper", "--only", "eps-table,k7,projective", "--out", target)
    assert code == 0
    rows = json.loads(target.read_text())
    assert [r["criterion"] for r in rows] == ["eps-table", "k7", "projective"]
    assert all(r["passed"] for r in rows)
