"""Command-line surface: JSON reports, exit codes, determinism."""
import json

import pytest

from gainspectra.cli import main, render_json

K3_ALL_ONES = "graph 3\nedge 0 1 1\nedge 0 2 1\nedge 1 2 1\n"
C3_ALL_I = "graph 3\nedge 0 1 i\nedge 1 2 i\nedge 0 2 rect:0,-1\n"


def run(capsys, monkeypatch, argv, stdin=None):
    if stdin is not None:
        import io
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_energy_k3(capsys, monkeypatch, tmp_path):
    f = tmp_path / "k3.gg"
    f.write_text(K3_ALL_ONES)
    code, out, err = run(capsys, monkeypatch, ["energy", str(f)])
    assert code == 0
    doc = json.loads(out)
    assert abs(doc["energy"] - 4.0) < 1e-9
    assert doc["instance"] == K3_ALL_ONES
    assert len(doc["vertex_energies"]) == 3
    assert "energy" in err


def test_spectrum_stdin(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["spectrum", "-"], stdin=C3_ALL_I)
    assert code == 0
    lam = json.loads(out)["spectrum"]
    s3 = 3 ** 0.5
    assert abs(lam[0] + s3) < 1e-9 and abs(lam[2] - s3) < 1e-9


def test_charpoly_methods_agree(capsys, monkeypatch):
    polys = {}
    for method in ("eigen", "subgraph", "faddeev"):
        code, out, _ = run(capsys, monkeypatch, ["charpoly", "-", "--method", method], stdin=C3_ALL_I)
        assert code == 0
        polys[method] = json.loads(out)["char_poly"]
    assert polys["subgraph"] == [1.0, 0.0, -3.0, 0.0]
    for m in ("eigen", "faddeev"):
        assert max(abs(a - b) for a, b in zip(polys[m], polys["subgraph"])) < 1e-6


def test_matchpoly(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["matchpoly", "-"], stdin=K3_ALL_ONES)
    assert code == 0
    doc = json.loads(out)
    assert doc["matching_number"] == 1
    assert doc["matching_counts"] == [1, 3]
    assert doc["matching_poly"] == [1.0, 0.0, -3.0, 0.0]


def test_balance_certificate(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["balance", "-"], stdin=K3_ALL_ONES)
    assert code == 0
    doc = json.loads(out)
    assert doc["balanced"] is True and doc["antibalanced"] is False
    assert len(doc["switching_certificate"]) == 3
    code, out, _ = run(capsys, monkeypatch, ["balance", "-"], stdin=C3_ALL_I)
    doc = json.loads(out)
    assert doc["balanced"] is False
    assert doc["switching_certificate"] is None


def test_coulson(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["coulson", "-", "--tol", "1e-7"], stdin=K3_ALL_ONES)
    assert code == 0
    doc = json.loads(out)
    assert abs(doc["energy"] - 4.0) < 1e-5
    assert doc["evaluations"] > 0


def test_decompose(capsys, monkeypatch):
    text = "graph 4\nedge 0 1 1\nedge 0 2 1\nedge 0 3 1\nedge 1 2 1\nedge 1 3 1\nedge 2 3 1\n"
    code, out, _ = run(capsys, monkeypatch, ["decompose", "-"], stdin=text)
    assert code == 0
    doc = json.loads(out)
    assert doc["matching_number"] == 2
    assert len(doc["decomposition"]) == 2
    assert doc["piece_energy_sum"] >= doc["total_energy"] - 1e-8


def test_verify_exit_zero(capsys, monkeypatch):
    code, out, err = run(capsys, monkeypatch, ["verify", "--suite", "sec5", "--count", "6"])
    assert code == 0
    doc = json.loads(out)
    assert doc["all_hold"] is True
    assert doc["failures"] == 0
    assert len(doc["checks"]) == doc["total"]
    assert "all hold" in err


def test_sweep_tsv(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["gen", "--family", "cycle", "--params", "5"])
    graph_text = out
    code, out, _ = run(capsys, monkeypatch, ["sweep-unicyclic", "-", "--samples", "8"], stdin=graph_text)
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "theta\tenergy"
    assert len(lines) == 9
    first = lines[1].split("\t")
    assert float(first[0]) == 0.0


def test_gen_families(capsys, monkeypatch):
    code, out, err = run(capsys, monkeypatch, ["gen", "--family", "double-star", "--params", "2,3"])
    assert code == 0
    assert out.startswith("graph 7")
    assert "6 edges" in err


def test_exit_code_on_bad_input(capsys, monkeypatch):
    code, _, err = run(capsys, monkeypatch, ["energy", "-"], stdin="graph 2\nedge 0 9 1\n")
    assert code == 2 and "line 2" in err
    code, _, err = run(capsys, monkeypatch, ["energy", "/does/not/exist.gg"])
    assert code == 2
    code, _, err = run(capsys, monkeypatch, ["sweep-unicyclic", "-"], stdin="graph 2\nedge 0 1 1\n")
    assert code == 2


def test_usage_error_exit_two(capsys, monkeypatch):
    with pytest.raises(SystemExit) as exc:
        main(["charpoly", "-", "--method", "nonsense"])
    assert exc.value.code == 2


def test_json_floats_render_17_digits():
    x = 0.1 + 0.2
    text = render_json({"v": x})
    assert f"{x:.17g}" in text
    assert json.loads(text)["v"] == x
    with pytest.raises(ValueError):
        render_json({"v": float("nan")})


def test_json_determinism(capsys, monkeypatch):
    a = run(capsys, monkeypatch, ["verify", "--suite", "sec4", "--count", "8"])
    b = run(capsys, monkeypatch, ["verify", "--suite", "sec4", "--count", "8"])
    assert a == b
