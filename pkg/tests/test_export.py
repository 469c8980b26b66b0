import csv
import io
import json

from nil_graph.graph.export import (
    GRAPH_FORMATS,
    SCAN_COLUMNS,
    SKIPPED,
    ScanRow,
    graph_to_dict,
    read_scan_csv,
    to_dot,
    to_edge_csv,
    write_scan_csv,
)
from nil_graph.graph.nil_clean_graph import INFINITE
from nil_graph.harness.suite import scan_ring


def test_dot_export(graph):
    text = to_dot(graph("Z5"))
    assert text.startswith('graph "Z5" {')
    assert '  4 [label="4", component=0];' in text
    assert "  0 -- 1;" in text
    assert "  2 -- 4;" in text
    assert text.rstrip().endswith("}")


def test_dot_uses_field_labels(graph):
    text = to_dot(graph("GF(5,2)"))
    assert 'label="4+3α"' in text
    assert "component=2" in text


def test_json_export(graph):
    data = graph_to_dict(graph("GF(2,2)"))
    assert data["edges"] == [[0, 1], [2, 3]]
    assert data["nilclean"] == [0, 1]
    assert data["vertices"][3] == {"id": 3, "label": "1+α", "component": 1}
    assert json.loads(GRAPH_FORMATS["json"](graph("GF(2,2)"))) == data


def test_edge_csv_export(graph):
    rows = list(csv.reader(io.StringIO(to_edge_csv(graph("Z5")))))
    assert rows[0] == ["source", "target", "source_label", "target_label", "color"]
    assert rows[1:] == [["0", "1", "0", "1", "1"], ["1", "4", "1", "4", "0"], ["2", "3", "2", "3", "0"], ["2", "4", "2", "4", "1"]]


def test_scan_row_for_z6():
    row = scan_ring("Z6", max_order=100)
    assert row == ScanRow(
        spec="Z6",
        order=6,
        idempotents=4,
        nilpotents=1,
        nilclean=4,
        nil_clean_ring=False,
        weak_nil_clean_ring=True,
        field=False,
        components=1,
        girth=3,
        diameter=2,
        bipartite=False,
        dominating_number=2,
        dominating_exact=True,
        max_degree=4,
        color_count=4,
    )


def test_oversized_ring_is_skipped():
    row = scan_ring("GF(5,2)", max_order=10)
    assert row.skipped
    assert (row.spec, row.order, row.girth) == ("GF(5,2)", 25, SKIPPED)


def test_scan_csv_round_trip():
    rows = [scan_ring("Z7", max_order=100), scan_ring("GF(5,2)", max_order=10)]
    text = write_scan_csv(rows)
    lines = text.splitlines()
    assert lines[0] == ",".join(SCAN_COLUMNS)
    assert lines[1].startswith("Z7,7,2,1,2,false,false,true,1,inf,6,true,")
    assert lines[2] == '"GF(5,2)",25,' + ",".join([SKIPPED] * (len(SCAN_COLUMNS) - 2))
    restored = read_scan_csv(text)
    assert restored == rows
    assert restored[0].girth is INFINITE


def test_scan_csv_to_handle():
    handle = io.StringIO()
    text = write_scan_csv([scan_ring("Z2", max_order=100)], handle)
    assert handle.getvalue() == text
