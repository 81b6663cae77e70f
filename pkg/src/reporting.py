"""Report rendering: human text, canonical JSON and CSV for every command."""

import json
import logging
from typing import Any, Dict, Iterable, List, Optional, Sequence

import pandas as pd

from src.algebra.homology import BettiTable, InvariantReport
from src.algebra.line_formulas import CoverFamily
from src.algebra.monomials import MonomialIdeal, PrimeComponent
from src.algebra.settings import OutputFormat
from src.verification import VerificationReport

logger = logging.getLogger(__name__)


def to_json(payload: Any) -> str:
    """Sorted keys and two-space indent, so re-dumping parsed output gives the same text."""
    return json.dumps(payload, indent=2, sort_keys=True)


def to_csv(records: List[Dict[str, Any]], columns: Optional[Sequence[str]] = None) -> str:
    df = pd.DataFrame.from_records(records, columns=columns)
    return df.to_csv(index=False).rstrip("\n")


def render(fmt: OutputFormat, text: str, payload: Any, records: List[Dict[str, Any]], columns=None) -> str:
    if fmt is OutputFormat.JSON:
        return to_json(payload)
    if fmt is OutputFormat.CSV:
        return to_csv(records, columns)
    return text


def _face(vars: Iterable[int]) -> str:
    return "{" + ", ".join(f"x{i}" for i in sorted(vars)) + "}"


def _spaced(vars: Iterable[int]) -> str:
    return " ".join(str(i) for i in sorted(vars))


def render_facets(n: int, offset: int, facets: List[tuple], fmt: OutputFormat) -> str:
    payload = {
        "n": n,
        "offset": offset,
        "variables": [f"x{i}" for i in range(offset + 1, offset + n + 1)],
        "facets": [list(f) for f in facets],
    }
    text = "\n".join(_face(f) for f in facets)
    records = [{"n": n, "offset": offset, "facet": _spaced(f)} for f in facets]
    return render(fmt, text, payload, records, ["n", "offset", "facet"])


def ideal_payload(ideal: MonomialIdeal) -> List[List[int]]:
    return [list(g.key) for g in ideal.gens]


def render_ideal(n: int, which: str, ideal: MonomialIdeal, fmt: OutputFormat) -> str:
    payload = {"n": n, "which": which, "nvars": ideal.nvars, "generators": ideal_payload(ideal)}
    text = "\n".join(str(g) for g in ideal.gens) if ideal.gens else str(ideal)
    records = [{"n": n, "which": which, "generator": _spaced(g.vars)} for g in ideal.gens]
    return render(fmt, text, payload, records, ["n", "which", "generator"])


def render_decomposition(
    n: int,
    source: str,
    family: Optional[CoverFamily],
    brute: Optional[List[PrimeComponent]],
    fmt: OutputFormat,
) -> str:
    payload: Dict[str, Any] = {"n": n, "source": source}
    lines: List[str] = []
    records: List[Dict[str, Any]] = []
    if family is not None:
        members = sorted(family.members, key=lambda m: m.key)
        payload["closed_form"] = [
            {"kind": m.kind.value, "label": m.label, "params": list(m.params), "vars": list(m.key)}
            for m in members
        ]
        lines += [str(m) for m in members]
        records += [{"source": "closed-form", "label": m.label, "vars": _spaced(m.vars)} for m in members]
    if brute is not None:
        payload["brute_force"] = [list(c.key) for c in brute]
        if family is None:
            lines += [str(c) for c in brute]
        records += [{"source": "brute-force", "label": "", "vars": _spaced(c.vars)} for c in brute]
    if family is not None and brute is not None:
        equal = family.vertex_sets() == sorted((c.vars for c in brute), key=lambda s: tuple(sorted(s)))
        payload["equal"] = equal
        lines.append(f"equal: {'yes' if equal else 'no'} ({len(brute)} components)")
    return render(fmt, "\n".join(lines), payload, records, ["source", "label", "vars"])


def render_invariants(report: InvariantReport, fmt: OutputFormat) -> str:
    payload = report.model_dump(mode="json", exclude_none=True)
    lines = [f"{key}: {payload[key]}" for key in ("n", "nvars", "pd", "reg", "depth", "height", "bight") if key in payload]
    lines += [f"source: {report.source.value}", f"field: {report.field}"]
    lines += [f"flag: {note}" for note in report.flags]
    record = {k: v for k, v in payload.items() if k != "flags"}
    record["flags"] = "; ".join(report.flags)
    return render(fmt, "\n".join(lines), payload, [record])


def render_betti(n: int, which: str, table: BettiTable, fmt: OutputFormat) -> str:
    payload = {
        "n": n,
        "which": which,
        "field": table.field,
        "view": table.view.value,
        "pd": table.pd,
        "reg": table.reg,
        "betti": table.as_records(),
    }
    text = f"{which} ideal, n={n}, {table.view.value} view over {table.field}\n{table}"
    return render(fmt, text, payload, table.as_records(), ["i", "j", "beta"])


def _case_details(case) -> str:
    parts = [f"{m.quantity}: expected {m.expected}, got {m.computed}" for m in case.mismatches]
    parts += case.flags
    return "; ".join(parts)


def render_verification(report: VerificationReport, fmt: OutputFormat) -> str:
    payload = report.model_dump(mode="json", exclude_none=True)
    payload["passed"] = report.passed
    payload["counts"] = report.status_counts()

    timed = any(c.seconds is not None for c in report.cases)
    header = "| Check | n | Status | Details |" + (" Seconds |" if timed else "")
    rule = "|-------|---|--------|---------|" + ("---------|" if timed else "")
    lines = [f"# Verification over {report.field}", "", header, rule]
    for case in report.cases:
        row = f"| {case.check.value} | {case.n} | {case.status.value} | {_case_details(case)} |"
        if timed:
            row += f" {case.seconds:.3f} |"
        lines.append(row)
    counts = report.status_counts()
    lines += ["", ", ".join(f"{k}: {v}" for k, v in counts.items()), "PASSED" if report.passed else "FAILED"]

    records = [
        {
            "check": c.check.value,
            "n": c.n,
            "status": c.status.value,
            "details": _case_details(c),
            **({"seconds": c.seconds} if c.seconds is not None else {}),
        }
        for c in report.cases
    ]
    return render(fmt, "\n".join(lines), payload, records)


def render_benchmark(rows: List[Dict[str, Any]], fmt: OutputFormat) -> str:
    lines = [
        "# Hochster sweep timings (median)",
        "",
        "| Jobs | Median (ms) | Speedup |",
        "|------|-------------|---------|",
    ]
    for r in rows:
        lines.append(f"| {r['jobs']} | {r['median_ms']:.1f} | {r['speedup']:.2f}× |")
    return render(fmt, "\n".join(lines), rows, rows)
