"""Smoke tests for the python extension module."""

import json
import os
import subprocess
from pathlib import Path

import pytest
from jsonschema import validate

import hyperbetti

C5 = "vertices: a b c d e\nedge: a b\nedge: b c\nedge: c d\nedge: d e\nedge: e a\n"
P5 = "edge: a b\nedge: b c\nedge: c d\nedge: d e\n"


def schema():
    path = os.environ.get("HYPERBETTI_SCHEMA")
    if path is None:
        path = Path(__file__).resolve().parents[2] / "docs" / "betti-table.schema.json"
    return json.loads(Path(path).read_text())


def test_parse_and_render_round_trip():
    h = hyperbetti.parse(C5)
    assert h.n == 5
    assert h.edge_count == 5
    assert h.labels == ["a", "b", "c", "d", "e"]
    assert h.degree == 2
    assert ["a", "b"] in h.edges()
    assert hyperbetti.parse(h.render_text()) == h
    assert hyperbetti.parse(h.render_json()) == h


def test_betti_document_matches_schema():
    doc = hyperbetti.betti(hyperbetti.parse(C5))
    validate(doc, schema())
    assert doc["method"] == "oracle"
    assert doc["char"] == 2
    assert doc["reg"] == 3
    assert doc["pdim"] == 2
    assert doc["linear_resolution"] is False
    assert {"i": 0, "j": 2, "value": 5} in doc["betti"]
    assert len(doc["betti"]) == 3


def test_recursive_method_is_field_free():
    doc = hyperbetti.betti(hyperbetti.parse(P5), verify=True)
    validate(doc, schema())
    assert doc["method"] == "recursive"
    assert doc["char"] is None
    assert doc["reg"] == 3
    assert doc["pdim"] == 2

    oracle = hyperbetti.betti(hyperbetti.parse(P5), method="oracle", p=32003)
    assert oracle["betti"] == doc["betti"]


def test_zero_ideal_document():
    doc = hyperbetti.betti(hyperbetti.parse("vertices: a b\n"))
    validate(doc, schema())
    assert doc["betti"] == []
    assert doc["reg"] == 1
    assert doc["pdim"] == -1
    assert doc["degree"] is None
    assert doc["linear_resolution"] is None


def test_invariants():
    inv = hyperbetti.invariants(hyperbetti.parse(C5))
    assert inv["properly_connected"] is True
    assert inv["triangulated"] is False
    assert inv["diameter"] == 2
    assert inv["matching_number"] == 2
    assert inv["height"] == 3
    assert inv["unmixed"] is True
    assert inv["reg"] == 3
    assert inv["pdim"] == 2


def test_distance_chain():
    d = hyperbetti.distance(hyperbetti.parse(C5), 0, 2)
    assert d["distance"] == 1
    assert d["chain"] == [["a", "b"], ["b", "c"]]
    assert d["links"] == ["b"]

    two = hyperbetti.parse("vertices: a b c d\nedge: a b\nedge: c d\n")
    assert hyperbetti.distance(two, 0, 1)["distance"] is None


def test_dual_and_splitting_edges():
    covers = hyperbetti.dual(hyperbetti.parse(C5))
    assert len(covers) == 5
    assert ["a", "b", "d"] in covers

    splits = hyperbetti.splitting_edges(hyperbetti.parse(P5))
    assert {"edge": ["a", "b"], "z": "a"} in splits
    assert {"edge": ["d", "e"], "z": "e"} in splits
    assert hyperbetti.splitting_edges(hyperbetti.parse(C5)) == []


def test_errors_are_typed():
    with pytest.raises(hyperbetti.Error):
        hyperbetti.parse("edge: a\n")
    with pytest.raises(hyperbetti.Error):
        hyperbetti.betti(hyperbetti.parse(C5), method="recursive")
    with pytest.raises(hyperbetti.Error):
        hyperbetti.betti(hyperbetti.parse(C5), method="oracle", p=4)


def test_check_suite():
    result = hyperbetti.check("froberg", n=5, trials=4, seed=3)
    assert result["ok"] is True
    assert result["instances"] + result["skipped"] == 4
    assert result["reproducer"] is None


@pytest.mark.skipif("HYPERBETTI_CLI" not in os.environ,
                    reason="command line binary location not provided")
def test_module_agrees_with_cli():
    cli = os.environ["HYPERBETTI_CLI"]
    out = subprocess.run([cli, "betti", "-", "--format", "json"], input=C5,
                         capture_output=True, text=True, check=True).stdout
    cli_doc = json.loads(out)
    validate(cli_doc, schema())
    assert cli_doc == hyperbetti.betti(hyperbetti.parse(C5))
