import contextlib
import io
import json

import pytest

from zpgraph.canonical import canonical_code
from zpgraph.cli import SCHEMA, run_command
from zpgraph.enumeration import enumerate_stable_graphs
from zpgraph.fixtures import figure1
from zpgraph.graph import total_genus
from zpgraph.io import (
    ParseError,
    graph_from_json,
    graph_to_json,
    load_graph,
    parse_document,
    parse_graph,
    serialize_graph,
    to_dot,
)

from conftest import DATA, GOLDEN

FIXTURES = ["figure1", "theta", "dumbbell", "heawood"]


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        try:
            code = run_command(argv)
        except SystemExit as exc:
            code = exc.code
    return code, out.getvalue(), err.getvalue()


def test_parse_single_vertex():
    G = parse_graph("v a genus=2")
    assert G.genera == (2,) and G.edges == () and G.names == ("a",)


def test_parse_figure1():
    doc = load_graph(DATA / "figure1.zpg")
    assert doc.name == "figure1"
    assert total_genus(doc.graph) == 4
    assert canonical_code(doc.graph) == canonical_code(figure1())


@pytest.mark.parametrize("text,line,fragment", [
    ("v a genus=0\ne a a\ne a zz\n", 3, "'zz'"),
    ("v a genus=1\nv b genus=-1\n", 2, "negative genus"),
    ("v a genus=1\n\nv b genus=1\n", 3, "disconnected"),
    ("v a genus=1\nv a genus=2\n", 2, "declared twice"),
    ("v a genus=x\n", 1, "bad genus"),
    ("w a\n", 1, "unknown declaration"),
])
def test_parse_errors(text, line, fragment):
    with pytest.raises(ParseError) as info:
        parse_graph(text)
    assert info.value.lineno == line
    assert fragment in str(info.value)
    assert str(info.value).startswith(f"line {line}:")


def test_metadata_and_comments():
    doc = parse_document("# name: demo\n# note: hand drawn\n# plain comment\nv a genus=1\ne a a\n")
    assert doc.name == "demo" and doc.notes == ("hand drawn",)
    text = serialize_graph(doc.graph, doc.name, doc.notes)
    assert parse_document(text) == doc


def test_serialize_is_bit_identical():
    text = (DATA / "heawood.zpg").read_text()
    doc = parse_document(text)
    assert serialize_graph(doc.graph, doc.name, doc.notes) == text


@pytest.mark.parametrize("g", [2, 3, 4])
def test_round_trip_all_small_graphs(g):
    for G in enumerate_stable_graphs(g):
        text = serialize_graph(G)
        H = parse_graph(text)
        assert H == G
        assert canonical_code(H) == canonical_code(G)
        assert graph_from_json(json.dumps(graph_to_json(G))) == G


def test_json_errors():
    with pytest.raises(ParseError):
        graph_from_json({"vertices": [{"name": "a", "genus": 1}], "edges": [["a", "b"]]})
    with pytest.raises(ParseError):
        graph_from_json({"vertices": [{"name": "a"}], "edges": []})
    with pytest.raises(ParseError):
        graph_from_json({"vertices": [{"name": "a", "genus": 1}, {"name": "b", "genus": 1}], "edges": []})


def test_dot_figure1():
    dot = to_dot(figure1(), "figure1")
    lines = dot.splitlines()
    nodes = [ln for ln in lines if "[label=" in ln]
    edges = [ln for ln in lines if " -- " in ln]
    loops = [ln for ln in edges if ln.split(" -- ")[0].strip() == ln.split(" -- ")[1].rstrip(";").strip()]
    assert (len(nodes), len(edges), len(loops)) == (4, 7, 4)


@pytest.mark.parametrize("name", FIXTURES)
def test_golden_reports(name):
    code, out, _ = run(["analyze", "--graph", str(DATA / f"{name}.zpg"), "--n", "2"])
    assert code == 0
    assert json.loads(out) == json.loads((GOLDEN / f"{name}.json").read_text())


def test_golden_numbers():
    fig = json.loads((GOLDEN / "figure1.json").read_text())
    assert fig["schema"] == SCHEMA
    assert fig["genus"]["value"] == 4
    assert (fig["strong"]["margin"], fig["strong"]["verdict"]) == (-1, False)
    assert fig["strong"]["witness_names"] == ["b", "c"]
    assert (fig["weak"]["margin"], fig["weak"]["verdict"]) == (2, True)
    assert (fig["n_max"]["strong"], fig["n_max"]["weak"]) == (1, 2)
    hea = json.loads((GOLDEN / "heawood.json").read_text())
    assert hea["strong"]["margin"] == 2 and hea["residue_model"]["section_space"]["dimension"] == 8


def _ops(obj):
    if isinstance(obj, dict):
        if "value" in obj or "margin" in obj:
            yield obj
        for v in obj.values():
            yield from _ops(v)
    elif isinstance(obj, list):
        for v in obj:
            yield from _ops(v)


def test_claims_carry_op():
    report = json.loads((GOLDEN / "figure1.json").read_text())
    claims = list(_ops(report))
    assert claims and all("op" in c for c in claims)


def test_require_exit_codes(tmp_path):
    fig = str(DATA / "figure1.zpg")
    assert run(["analyze", "--graph", fig, "--n", "2", "--require"])[0] == 2
    assert run(["analyze", "--graph", fig, "--n", "2", "--criterion", "weak", "--require"])[0] == 0
    assert run(["nmax", "--graph", fig])[0] == 0
    assert run(["nmax", "--graph", str(DATA / "theta.zpg"), "--criterion", "strong", "--require"])[0] == 2


def test_error_exit_codes(tmp_path):
    bad = tmp_path / "bad.zpg"
    bad.write_text("v a genus=0\ne a b\n")
    code, _, err = run(["analyze", "--graph", str(bad), "--n", "1"])
    assert code == 1 and "undeclared vertex 'b'" in json.loads(err)["error"]
    unstable = tmp_path / "unstable.zpg"
    unstable.write_text("v a genus=0\nv b genus=2\ne a b\n")
    code, _, err = run(["analyze", "--graph", str(unstable), "--n", "1"])
    assert code == 1 and "stable curves only" in err
    assert run(["analyze", "--graph", str(tmp_path / "missing.zpg"), "--n", "1"])[0] == 1
    assert run(["bogus"])[0] == 64
    assert run(["analyze", "--n", "1"])[0] == 64
    assert run(["enumerate", "--genus", "3", "--n", "2"])[0] == 64


def test_enumerate_lines():
    code, out, _ = run(["enumerate", "--genus", "2"])
    lines = [json.loads(ln) for ln in out.splitlines()]
    assert code == 0 and len(lines) == 7
    assert [ln["code"] for ln in lines] == sorted(ln["code"] for ln in lines)
    code, out, _ = run(["enumerate", "--genus", "2", "--genus-zero"])
    assert len(out.splitlines()) == 3


def test_search_command():
    code, out, _ = run(["search", "--n", "2", "--criterion", "strong", "--max-genus", "8", "--require"])
    report = json.loads(out)
    assert code == 0 and report["claim"] == "exists" and report["genus"] == 8
    assert report["witness_report"]["verdict"] is True
    code, out, _ = run(["search", "--n", "2", "--max-genus", "4", "--require"])
    assert code == 2 and json.loads(out)["claim"] == "none-below"


def test_witnessdim_command():
    fig = str(DATA / "figure1.zpg")
    code, out, _ = run(["witnessdim", "--graph", fig, "--loc", "v:a", "--loc", "e:1", "--require"])
    report = json.loads(out)
    assert code == 0 and report["model_dimension"]["value"] == 3
    assert run(["witnessdim", "--graph", fig, "--loc", "x:1"])[0] == 64
    assert run(["witnessdim", "--graph", fig, "--loc", "e:99"])[0] == 1


def test_detcount_command():
    code, out, _ = run(["detcount", "--n", "2", "--g", "2", "--q", "2"])
    report = json.loads(out)
    table = report["tables"][0]
    assert code == 0 and table["rank_below_n"] == 10 and table["total"] == 16
    assert report["codimension"]["codim"] == 1


def test_export_dot_command():
    code, out, _ = run(["export-dot", "--graph", str(DATA / "figure1.zpg")])
    assert code == 0 and out.startswith('graph "figure1"') and out.count(" -- ") == 7
