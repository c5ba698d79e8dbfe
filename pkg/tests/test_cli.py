"""Tests for the command line entry point."""
import json

import networkx as nx
import pytest

from minorhost.cli.main import main
from minorhost.graphs.formats import to_json
from minorhost.graphs.graph import make_graph, normalize


@pytest.fixture
def graph_file(tmp_path):
    """Write a graph as JSON and return its path."""

    def write(g, name="guest.json"):
        path = tmp_path / name
        path.write_text(to_json(g))
        return str(path)

    return write


def test_gen_dot(capsys):
    """gen W 5 prints DOT with every vertex and edge."""
    assert main(["gen", "W", "5", "--format", "dot"]) == 0
    out = capsys.readouterr().out
    assert out.count("--") == 10


def test_gen_compact_name(capsys):
    """Compact names work without parameters."""
    assert main(["gen", "C3,4"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert len(doc["edges"]) == 6


def test_gen_unknown_family_exits_2(capsys):
    """Library errors become a JSON record and exit code 2."""
    assert main(["gen", "X", "3"]) == 2
    record = json.loads(capsys.readouterr().out)
    assert record["success"] is False
    assert record["kind"] == "unsupported"


def test_minor_find(capsys, graph_file):
    """minor find prints a model document, or found: false."""
    path = graph_file(normalize(nx.complete_graph(4)))
    assert main(["minor", "find", "--pattern", "C4", "--in", path]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert len(doc["branch_sets"]) == 4

    assert main(["minor", "find", "--pattern", "K3,3", "--in", path]) == 0
    assert json.loads(capsys.readouterr().out) == {"found": False}


def test_decomp_tutte(capsys, graph_file):
    """decomp tutte reports torso kinds."""
    path = graph_file(make_graph(range(5), [(i, (i + 1) % 5) for i in range(5)]))
    assert main(["decomp", "tutte", "--in", path]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert list(doc["torso_kind"].values()) == ["Cycle"]


def test_pipeline_rejects_guest_outside_class(capsys, graph_file):
    """K_4 against W_3 stops at membership with the model."""
    path = graph_file(normalize(nx.complete_graph(4)))
    assert main(["pipeline", "--forbid", "W3", "--in", path]) == 0
    bundle = json.loads(capsys.readouterr().out)
    assert bundle["membership"]["in_class"] is False
    assert bundle["membership"]["model"]["branch_sets"]
    assert bundle["certificate"] is None


def test_pipeline_embeds_and_saves_state(capsys, graph_file, tmp_path):
    """A series-parallel guest is embedded, verified and stored."""
    guest = make_graph(range(5), [(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 1)])
    state = tmp_path / "host.json"
    assert main(["pipeline", "--forbid", "W3", "--state", str(state), "--in", graph_file(guest)]) == 0
    bundle = json.loads(capsys.readouterr().out)
    assert bundle["error"] is None
    assert bundle["host_report"]["free"] is True
    assert state.exists()


def test_corpus_ell(capsys):
    """The ell suite passes and prints JSONL records."""
    assert main(["corpus", "--suite", "ell"]) == 0
    captured = capsys.readouterr()
    records = [json.loads(line) for line in captured.out.splitlines()]
    assert records and all(r["status"] == "pass" for r in records)
    assert "PASS" in captured.err


def test_corpus_mutant_fails(capsys):
    """An injected mutant turns the run red."""
    assert main(["corpus", "--suite", "ell", "--inject-mutant"]) == 1
    captured = capsys.readouterr()
    assert any(json.loads(line)["status"] == "fail" for line in captured.out.splitlines())
    assert "FAIL" in captured.err


def test_missing_input_file_exits_2(tmp_path, capsys):
    """A missing --in file is reported as a JSON record, not a traceback."""
    missing = str(tmp_path / "missing.json")
    assert main(["minor", "find", "--pattern", "C3", "--in", missing]) == 2
    record = json.loads(capsys.readouterr().out)
    assert record["kind"] == "precondition"
    assert record["measurements"]["path"] == missing


def test_short_edge_line_exits_2(tmp_path, capsys):
    """A truncated edge list is a precondition error."""
    path = tmp_path / "guest.edges"
    path.write_text("3 2\n0 1\n2\n")
    assert main(["minor", "find", "--pattern", "C3", "--in", str(path), "--format", "edges"]) == 2
    assert json.loads(capsys.readouterr().out)["kind"] == "precondition"
