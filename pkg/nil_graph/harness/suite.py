"""
Run theorem cases and scans over ring families, in-process or in a worker pool.

Work is split per ring. Results are sorted by (ring spec, case id) before the
report is assembled, so the report does not depend on the worker count.
"""

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, List, Optional, Sequence

from tqdm import tqdm

from ..config.config_loader import get_jobs, get_max_order
from ..errors import NilGraphError
from ..graph.export import ScanRow, scan_row
from ..graph.nil_clean_graph import build_graph
from ..graph.report import compute_report
from ..nil_clean import nilclean_profile
from ..rings.builder import build_ring
from ..rings.ring_spec import format_spec, parse_spec, spec_order
from ..utils.logs import log
from .cases import CASES_BY_ID, TheoremCase, select_cases
from .context import RingContext
from .families import family_specs
from .verdict import Mismatch, Pass, Skipped, Verdict, is_unexpected, verdict_from_dict


@dataclass(frozen=True)
class CaseResult:
    ring: str
    case: str
    verdict: Verdict

    def to_dict(self) -> dict:
        return {"ring": self.ring, "case": self.case, **self.verdict.to_dict()}


@dataclass
class SuiteReport:
    """Verdict per (ring, case), totals, and run metadata.

    Only metadata (wall time, worker count) may differ between two runs on
    the same input.
    """

    results: List[CaseResult]
    metadata: Dict[str, object] = field(default_factory=dict)

    @property
    def totals(self) -> Dict[str, int]:
        totals = {"pass": 0, "mismatch": 0, "expected_mismatch": 0, "skipped": 0}
        for result in self.results:
            v = result.verdict
            if isinstance(v, Pass):
                totals["pass"] += 1
            elif isinstance(v, Skipped):
                totals["skipped"] += 1
            elif v.expected:
                totals["expected_mismatch"] += 1
            else:
                totals["mismatch"] += 1
        return totals

    @property
    def unexpected(self) -> List[CaseResult]:
        return [r for r in self.results if is_unexpected(r.verdict)]

    @property
    def exit_code(self) -> int:
        return 1 if self.unexpected else 0

    def to_dict(self, include_metadata: bool = True) -> dict:
        data = {
            "totals": self.totals,
            "results": [r.to_dict() for r in self.results],
        }
        if include_metadata:
            data["metadata"] = dict(self.metadata)
        return data

    def to_json(self, include_metadata: bool = True) -> str:
        return json.dumps(self.to_dict(include_metadata), indent=2, ensure_ascii=False) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "SuiteReport":
        data = json.loads(text)
        results = [
            CaseResult(item["ring"], item["case"], verdict_from_dict(item))
            for item in data["results"]
        ]
        return cls(results, data.get("metadata", {}))


def _verdict_for(case: TheoremCase, ctx: RingContext) -> Verdict:
    try:
        return case.run(ctx)
    except NilGraphError as e:
        return Skipped(f"{type(e).__name__}: {e}")


def run_ring(spec: str, case_ids: Sequence[str], max_order: int) -> List[CaseResult]:
    """Every selected case on one ring. Runs inside the worker processes."""
    order = spec_order(parse_spec(spec))
    if order > max_order:
        reason = f"order {order} exceeds max_order {max_order}"
        return [CaseResult(spec, case_id, Skipped(reason)) for case_id in case_ids]
    ctx = RingContext(spec)
    return [CaseResult(spec, case_id, _verdict_for(CASES_BY_ID[case_id], ctx)) for case_id in case_ids]


def _map_rings(work: Callable, specs: List[str], extra: tuple, jobs: int, label: str) -> list:
    """work(spec, *extra) for every spec, in order, with a progress bar on stderr."""
    progress = tqdm(total=len(specs), desc=label, unit="ring", leave=False, disable=None)
    outputs = []
    try:
        if jobs <= 1:
            for spec in specs:
                outputs.append(work(spec, *extra))
                progress.update()
        else:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                futures = [pool.submit(work, spec, *extra) for spec in specs]
                for future in futures:
                    outputs.append(future.result())
                    progress.update()
    finally:
        progress.close()
    return outputs


def run_suite(
    families: dict,
    cases: Optional[Iterable[TheoremCase]] = None,
    max_order: Optional[int] = None,
    jobs: Optional[int] = None,
) -> SuiteReport:
    """Run theorem cases over every ring of a families block.

    Rings above *max_order* get Skipped verdicts instead of failing the run.
    """
    started = time.perf_counter()
    cases = list(cases) if cases is not None else select_cases(None)
    max_order = get_max_order() if max_order is None else max_order
    jobs = get_jobs() if jobs is None else max(1, jobs)
    specs = family_specs(families)
    case_ids = [case.id for case in cases]
    log("VERIFY", f"{len(specs)} rings x {len(case_ids)} cases, jobs={jobs}")

    per_ring = _map_rings(run_ring, specs, (case_ids, max_order), jobs, "verify")
    results = sorted(
        (result for batch in per_ring for result in batch),
        key=lambda r: (r.ring, r.case),
    )
    report = SuiteReport(
        results,
        metadata={
            "wall_time_s": round(time.perf_counter() - started, 3),
            "jobs": jobs,
            "max_order": max_order,
            "rings": len(specs),
        },
    )
    for result in report.unexpected:
        v: Mismatch = result.verdict
        log("MISMATCH", f"{result.ring} {result.case}: {v.witness} {v.note}")
    return report


def scan_ring(spec: str, max_order: int, with_dominating: bool = True) -> ScanRow:
    """ScanRow of one ring; only spec and order are filled in for oversized rings."""
    parsed = parse_spec(spec)
    order = spec_order(parsed)
    name = format_spec(parsed)
    if order > max_order:
        return ScanRow(spec=name, order=order)
    ring = build_ring(parsed)
    profile = nilclean_profile(ring)
    report = compute_report(build_graph(ring, profile.nilclean), with_dominating=with_dominating)
    return scan_row(profile, report)


def run_scan(
    families: dict,
    max_order: Optional[int] = None,
    jobs: Optional[int] = None,
    with_dominating: bool = True,
) -> List[ScanRow]:
    """One ScanRow per ring, sorted by spec string."""
    max_order = get_max_order() if max_order is None else max_order
    jobs = get_jobs() if jobs is None else max(1, jobs)
    specs = family_specs(families)
    log("SCAN", f"{len(specs)} rings, jobs={jobs}")
    rows = _map_rings(scan_ring, specs, (max_order, with_dominating), jobs, "scan")
    return sorted(rows, key=lambda row: row.spec)
