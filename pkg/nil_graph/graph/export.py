"""
DOT, JSON and CSV output for graphs and scans.
"""

import csv
import io
import json
from dataclasses import asdict, dataclass, fields
from typing import Iterable, List, Optional

from .nil_clean_graph import (
    NilCleanGraph,
    connected_components,
    invariant_from_json,
    invariant_to_json,
)

SKIPPED = "skipped"


def component_index(g: NilCleanGraph) -> List[int]:
    index = [0] * g.order
    for i, component in enumerate(connected_components(g)):
        for v in component:
            index[v] = i
    return index


def to_dot(g: NilCleanGraph) -> str:
    """Graphviz text; each node carries its ring label and component index."""
    component = component_index(g)
    lines = [f"graph {json.dumps(g.ring.name)} {{", "  node [shape=circle];"]
    for v in range(g.order):
        label = json.dumps(g.ring.label(v), ensure_ascii=False)
        lines.append(f"  {v} [label={label}, component={component[v]}];")
    for a, b in g.edges():
        lines.append(f"  {a} -- {b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_to_dict(g: NilCleanGraph) -> dict:
    component = component_index(g)
    return {
        "ring": g.ring.name,
        "order": g.order,
        "edge_count": g.edge_count,
        "nilclean": g.nilclean.indices(),
        "vertices": [
            {"id": v, "label": g.ring.label(v), "component": component[v]} for v in range(g.order)
        ],
        "edges": [[a, b] for a, b in g.edges()],
    }


def to_json(g: NilCleanGraph) -> str:
    return json.dumps(graph_to_dict(g), indent=2, ensure_ascii=False) + "\n"


def to_edge_csv(g: NilCleanGraph) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["source", "target", "source_label", "target_label", "color"])
    for a, b in g.edges():
        color = int(g.ring.add(a, b))
        writer.writerow([a, b, g.ring.label(a), g.ring.label(b), g.ring.label(color)])
    return out.getvalue()


GRAPH_FORMATS = {"dot": to_dot, "json": to_json, "csv": to_edge_csv}


@dataclass
class ScanRow:
    """One ring of a scan. Computed fields hold SKIPPED when the ring was
    too large to process."""

    spec: str
    order: int
    idempotents: object = SKIPPED
    nilpotents: object = SKIPPED
    nilclean: object = SKIPPED
    nil_clean_ring: object = SKIPPED
    weak_nil_clean_ring: object = SKIPPED
    field: object = SKIPPED
    components: object = SKIPPED
    girth: object = SKIPPED
    diameter: object = SKIPPED
    bipartite: object = SKIPPED
    dominating_number: object = SKIPPED
    dominating_exact: object = SKIPPED
    max_degree: object = SKIPPED
    color_count: object = SKIPPED

    @property
    def skipped(self) -> bool:
        return self.idempotents == SKIPPED


SCAN_COLUMNS = [f.name for f in fields(ScanRow)]
_INT_COLUMNS = {
    "order",
    "idempotents",
    "nilpotents",
    "nilclean",
    "components",
    "dominating_number",
    "max_degree",
    "color_count",
}
_BOOL_COLUMNS = {"nil_clean_ring", "weak_nil_clean_ring", "field", "bipartite", "dominating_exact"}


def scan_row(profile, report) -> ScanRow:
    """Row from a NilCleanProfile and the InvariantReport of the same ring."""
    return ScanRow(
        spec=report.ring,
        order=report.order,
        idempotents=len(profile.idempotents),
        nilpotents=len(profile.nilpotents),
        nilclean=len(profile.nilclean),
        nil_clean_ring=profile.is_nil_clean_ring,
        weak_nil_clean_ring=profile.is_weak_nil_clean_ring,
        field=profile.is_field,
        components=report.component_count,
        girth=report.girth,
        diameter=report.diameter,
        bipartite=report.bipartite,
        dominating_number=report.dominating.size if report.dominating else SKIPPED,
        dominating_exact=report.dominating.exact if report.dominating else SKIPPED,
        max_degree=report.max_degree,
        color_count=report.coloring.color_count,
    )


def _cell(value) -> str:
    value = invariant_to_json(value)
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _parse_cell(column: str, text: str):
    if text == SKIPPED:
        return SKIPPED
    if column in ("girth", "diameter"):
        return _parse_invariant(text)
    if column in _INT_COLUMNS:
        return int(text)
    if column in _BOOL_COLUMNS:
        return text == "true"
    return text


def _parse_invariant(text: str):
    return invariant_from_json(text if text == "inf" else int(text))


def write_scan_csv(rows: Iterable[ScanRow], handle: Optional[io.TextIOBase] = None) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(SCAN_COLUMNS)
    for row in rows:
        values = asdict(row)
        writer.writerow([_cell(values[c]) for c in SCAN_COLUMNS])
    text = out.getvalue()
    if handle is not None:
        handle.write(text)
    return text


def read_scan_csv(text: str) -> List[ScanRow]:
    reader = csv.DictReader(io.StringIO(text))
    return [ScanRow(**{c: _parse_cell(c, row[c]) for c in SCAN_COLUMNS}) for row in reader]
