import io
import json

import pytest

from arcconn.atlas import enumerate_connected_multigraphs, named
from arcconn.cli import Report, run
from arcconn.edgelist import ParseError, parse_graph, serialize_graph
from arcconn.graph import is_isomorphic


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out=out)
    return code, out.getvalue()


def test_parse_examples():
    p = parse_graph("edge a b\nedge b c\n")
    assert is_isomorphic(p, named("path-3"))
    loop = parse_graph("edge a a")
    assert list(loop.edges.values()) == [(0, 0)]
    double = parse_graph("# two\nedge a b\nedge a b  # again\n")
    assert double.multiplicity(0, 1) == 2


def test_parse_isolated_vertex_and_errors():
    g = parse_graph("vertex z\nedge a b\n")
    assert g.num_vertices == 3
    with pytest.raises(ParseError, match="line 2"):
        parse_graph("edge a b\nedge a\n")
    with pytest.raises(ParseError, match="line 1"):
        parse_graph("arc a b\n")


def test_round_trip_on_corpus():
    for g in enumerate_connected_multigraphs(5):
        h = parse_graph(serialize_graph(g))
        assert list(h.edges.values()) == list(g.edges.values())
        assert serialize_graph(h) == serialize_graph(g)


def test_report_round_trip():
    code, text = call("classify", "--named", "k33", "--format", "machine")
    assert code == 0
    report = Report.from_json(text)
    assert report.to_json() == json.dumps(json.loads(text), sort_keys=True)
    assert report.result["max_ac"] == 6


def test_classify_named():
    assert "max_ac: 6" in call("classify", "--named", "k33")[1]
    assert "max_ac: 4" in call("classify", "--named", "k5-minus-edge")[1]
    assert "max_ac: omega" in call("classify", "--named", "dumbbell")[1]


def test_check_reports_clause_and_cut():
    code, text = call("check", "--n", "5", "--named", "k5-minus-edge")
    assert code == 0
    assert text.startswith("no; condition (2); cut {a,c,d}; components 5")


def test_oracle_reports_failing_config():
    code, text = call("oracle", "--n", "3", "--named", "star")
    assert code == 0
    assert text.startswith("no; config:") and text.count("x1") == 3


def test_enumerate_census():
    code, text = call("enumerate", "--cubic", "--vertices", "8", "--filter", "6ac")
    assert code == 0 and len(text.strip().splitlines()) == 2


def test_menger_command():
    code, text = call("menger", "--named", "k4", "--from", "0", "--to", "2")
    assert code == 0 and text.startswith("3 disjoint paths")


def test_verify_agrees(tmp_path):
    f = tmp_path / "g.txt"
    f.write_text("edge a b\nedge b c\nedge c a\nedge c d\n")
    code, text = call("classify", str(f), "--verify", "--verify-limit", "7")
    assert code == 0 and "agrees" in text


def test_exit_codes(tmp_path):
    empty = tmp_path / "e.txt"
    empty.write_text("vertex a\n")
    assert call("classify", str(empty))[0] == 2
    assert call("classify", str(tmp_path / "missing.txt"))[0] == 1
    assert call("check", "--named", "k4")[0] == 1
    assert call("check", "--named", "k4", "--n", "zero")[0] == 1
    assert call("frobnicate")[0] == 1
    assert call("oracle", "--n", "6", "--named", "petersen", "--budget", "100")[0] == 3
    bad = tmp_path / "b.txt"
    bad.write_text("edge a\n")
    assert call("check", str(bad), "--n", "2")[0] == 2
