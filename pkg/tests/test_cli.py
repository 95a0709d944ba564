import os
import shutil
import subprocess
import sys

import pytest

from adjlabel.cli import run
from adjlabel.graphio import random_graph, read_labels, write_graph
from adjlabel.schemes import encode


@pytest.fixture
def graph_file(tmp_path):
    def make(family, n, seed=1, **kw):
        path = tmp_path / f"{family}-{n}.txt"
        path.write_text(write_graph(random_graph(family, n, 0.5, seed, **kw)))
        return str(path)
    return make


def test_encode_query_matches_library(tmp_path, graph_file, capsys):
    src = graph_file("undirected", 40)
    out = str(tmp_path / "g.als")
    assert run(["encode", "--family", "undirected", "--input", src, "--output", out]) == 0
    labels, header = read_labels(open(out, "rb").read())
    ref_params, ref_labels = encode(random_graph("undirected", 40, 0.5, 1))
    assert labels == ref_labels and header.L == ref_params.L
    capsys.readouterr()
    g = random_graph("undirected", 40, 0.5, 1)
    for u, v in [(0, 1), (3, 7), (39, 0), (5, 5)]:
        assert run(["query", "--labels", out, "--u", str(u), "--v", str(v)]) == 0
        assert capsys.readouterr().out.strip() == str(int(g.adj[u, v]))


def test_tournament_query_prints_direction(tmp_path, graph_file, capsys):
    src = graph_file("tournament", 12)
    out = str(tmp_path / "t.als")
    run(["encode", "--family", "tournament", "--input", src, "--output", out])
    g = random_graph("tournament", 12, 0.5, 1)
    capsys.readouterr()
    run(["query", "--labels", out, "--u", "2", "--v", "9"])
    assert capsys.readouterr().out.strip() == ("u->v" if g.adj[2, 9] else "v->u")


def test_bounds(capsys):
    assert run(["bounds", "--family", "undirected", "--n", "400", "--indexing"]) == 0
    assert capsys.readouterr().out.strip() == "201"
    run(["bounds", "--family", "directed", "--n", "100"])
    assert capsys.readouterr().out.strip() == "100"


def test_verify_summary(capsys):
    assert run(["verify", "--family", "directed", "--n", "128", "--trials", "20", "--seed", "7", "--p", "0.5"]) == 0
    assert capsys.readouterr().out.strip() == "ok trials=20 pairs=325120"


def test_universal_report(tmp_path, capsys):
    out = tmp_path / "u.txt"
    assert run(["universal", "--family", "undirected", "--n", "400", "--mode", "standard", "--output", str(out)]) == 0
    assert capsys.readouterr().out.strip() == "2^206"
    assert run(["universal", "--family", "undirected", "--n", "4", "--output", str(out)]) == 0
    assert capsys.readouterr().out.strip() == "2^4"
    assert out.read_text().splitlines()[2] == "undirected 16"


def test_stats_and_figure(tmp_path, graph_file, capsys):
    src = graph_file("directed", 120)
    als = str(tmp_path / "d.als")
    run(["encode", "--family", "directed", "--input", src, "--output", als])
    capsys.readouterr()
    png = tmp_path / "hist.png"
    assert run(["stats", "--labels", als, "--figure", str(png)]) == 0
    rows = dict(line.split("\t") for line in capsys.readouterr().out.splitlines())
    assert rows["L"] == "123" and rows["mode"] == "tight" and rows["distinct_indices"] == "120"
    assert png.read_bytes()[:4] == b"\x89PNG"


def test_bounds_figure(tmp_path, capsys):
    png = tmp_path / "gap.png"
    assert run(["bounds", "--family", "bipartite", "--n", "300", "--figure", str(png)]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "75" and lines[1].startswith("n\tlower_bound")
    assert png.stat().st_size > 1000


@pytest.mark.parametrize("argv, code", [
    ([], 1),
    (["frobnicate"], 1),
    (["bounds", "--family", "directed"], 1),
    (["bounds", "--family", "directed", "--n", "0"], 1),
    (["encode", "--family", "directed", "--mode", "standard", "--input", "x", "--output", "y", "--bogus"], 1),
    (["query", "--labels", "/nonexistent/file", "--u", "0", "--v", "1"], 2),
    (["universal", "--family", "directed", "--n", "20", "--mode", "standard", "--output", "o"], 1),
])
def test_exit_codes(argv, code, capsys):
    assert run(argv) == code
    assert capsys.readouterr().err.startswith("error:")


def test_format_errors(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("undirected 3\n0 9\n")
    assert run(["encode", "--family", "undirected", "--input", str(bad), "--output", str(tmp_path / "o")]) == 2
    assert "line 2" in capsys.readouterr().err
    junk = tmp_path / "junk.als"
    junk.write_bytes(b"nope")
    assert run(["stats", "--labels", str(junk)]) == 2
    good = tmp_path / "g.txt"
    good.write_text("directed 3\n0 1\n")
    assert run(["encode", "--family", "undirected", "--input", str(good), "--output", str(tmp_path / "o")]) == 2


def test_query_range_is_usage_error(tmp_path, graph_file, capsys):
    src = graph_file("directed", 5)
    out = str(tmp_path / "d.als")
    run(["encode", "--family", "directed", "--input", src, "--output", out])
    assert run(["query", "--labels", out, "--u", "0", "--v", "5"]) == 1


def test_console_script_runs():
    exe = shutil.which("adjlabel")
    cmd = [exe] if exe else [sys.executable, "-m", "adjlabel.cli"]
    res = subprocess.run(cmd + ["bounds", "--family", "bipartite", "--n", "1024", "--indexing"],
                         capture_output=True, text=True, env=dict(os.environ))
    assert res.returncode == 0 and res.stdout.strip() == "257"
