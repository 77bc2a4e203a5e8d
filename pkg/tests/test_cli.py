import json

import pytest

from commgraph.cli import main

TINY_CATALOG = """#coverage 6 complete
6 1 3 | (1 2), (1 2 3)
6 2 6 | (1 2 3 4 5 6)
"""


def test_classify_family_text(capsys):
    assert main(["classify", "--family", "S4"]) == 0
    out = capsys.readouterr().out
    assert "schema classreport/1" in out
    assert "class chordal member" in out
    assert "class cograph non-member witness P4" in out


def test_classify_family_json(capsys):
    assert main(["classify", "--family", "Z6", "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["abelian"] is True
    assert all(v["member"] for v in payload["classes"].values())


def test_classify_scope_flag(capsys):
    assert main(["classify", "--family", "Q8", "--scope", "all"]) == 0
    assert "scope all" in capsys.readouterr().out


def test_classify_requires_target(capsys):
    assert main(["classify"]) == 2


def test_classify_bad_family(capsys):
    assert main(["classify", "--family", "D9"]) == 2
    assert "error" in capsys.readouterr().err


def test_classify_catalog_id(tmp_path, capsys):
    path = tmp_path / "tiny.cat"
    path.write_text(TINY_CATALOG)
    assert main(["classify", "--catalog", str(path), "--id", "6,1"]) == 0
    assert "order 6" in capsys.readouterr().out


def test_witness_command(capsys):
    assert main(["witness", "--family", "S4", "--pattern", "P4"]) == 0
    out = capsys.readouterr().out
    assert "P4 in commuting graph of S4" in out


def test_witness_not_found(capsys):
    assert main(["witness", "--family", "Z6", "--pattern", "P4"]) == 1


def test_witness_hole(capsys):
    assert main(["witness", "--family", "S5", "--pattern", "hole:4",
                 "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert len(payload["vertices"]) >= 4


def test_export_graph_edge_list(tmp_path):
    out = tmp_path / "g.txt"
    assert main(["export-graph", "--family", "Q8", "--out", str(out)]) == 0
    text = out.read_text()
    assert text.splitlines()[0] == "6 3"
    from commgraph.graphs import UndirectedGraph

    g = UndirectedGraph.from_edge_list_text(text)
    assert g.n == 6 and g.edge_count() == 3


def test_export_graph_packed(tmp_path):
    out = tmp_path / "g.packed"
    assert main(["export-graph", "--family", "S4", "--out", str(out),
                 "--packed"]) == 0
    from commgraph.graphs import UndirectedGraph, commuting_graph
    from commgraph.families import symmetric

    g = UndirectedGraph.from_packed_text(out.read_text())
    assert g.rows == commuting_graph(symmetric(4), scope="noncentral").rows


def test_table1_against_bundled(catalog, capsys):
    assert main(["table1"]) == 0
    out = capsys.readouterr().out
    assert "[24,12]" in out and "[36,10]" in out and "[32,49]" in out


def test_table2_against_bundled(catalog, capsys):
    assert main(["table2", "--max-order", "48"]) == 0
    out = capsys.readouterr().out
    assert "ok" in out and "MISMATCH" not in out


def test_table2_csv_format(catalog, capsys):
    assert main(["table2", "--max-order", "36", "--format", "csv"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == "order,count,expected,status"
