"""
Report serialization: JSON, CSV and a human-readable table.
"""

import json
from typing import Any, Dict, Iterable, List

from ..grs import ObstructionReport, Verdict
from ..utils.helpers import format_rational

SCHEMA_VERSION = 1
CSV_COLUMNS = ["name", "det", "verdict", "nonzero_D", "check"]
SUMMARY_KEYS = [v.value for v in Verdict] + ["error", "match", "mismatch"]


def _label(report: ObstructionReport, label) -> Any:
    if report.h2_structure.is_cyclic:
        return label[0] if label else 0
    return list(label)


def report_to_dict(report: ObstructionReport) -> Dict[str, Any]:
    """
    Versioned JSON-ready dictionary of a report.

    Rationals are strings "a/b", or "a" when integral.
    """
    group = report.h2_structure
    return {
        "schema": SCHEMA_VERSION,
        "name": report.name,
        "det": report.det,
        "factors": [[p, m] for p, m in report.factorization],
        "h2": {
            "order": group.order,
            "cyclic": group.is_cyclic,
            "invariant_factors": list(group.invariant_factors),
        },
        "mirror_flag": report.mirror_flag,
        "goeritz": report.form.matrix.to_list(),
        "source": report.form.source.to_dict(),
        "spinc": [
            {"h": _label(report, label), "d": format_rational(value)}
            for label, value in report.d_table.items()
        ],
        "D": [
            {"p": d.p, "e": d.e, "value": format_rational(d.value)}
            for d in report.D_values
        ],
        "verdict": report.verdict.value,
    }


def dumps(record: Dict[str, Any], indent: int = None) -> str:
    if indent is None:
        return json.dumps(record, separators=(",", ":"))
    return json.dumps(record, indent=indent)


def nonzero_d_field(record: Dict[str, Any]) -> str:
    """Semicolon-joined "p^e=value" entries of the nonzero D values."""
    return ";".join(
        f"{d['p']}^{d['e']}={d['value']}" for d in record.get("D", []) if d["value"] != "0"
    )


def csv_row(record: Dict[str, Any]) -> List[str]:
    check = record.get("check", {}).get("status", "")
    if "error" in record:
        error = record["error"]
        return [record["name"], "", "error", f"{error['stage']}: {error['message']}", check]
    return [record["name"], str(record["det"]), record["verdict"], nonzero_d_field(record), check]


def summarize(records: Iterable[Dict[str, Any]]) -> Dict[str, int]:
    """Count verdicts, errors and expected-value checks."""
    counts = {key: 0 for key in SUMMARY_KEYS}
    for record in records:
        if "error" in record:
            counts["error"] += 1
        else:
            counts[record["verdict"]] += 1
        status = record.get("check", {}).get("status")
        if status in ("match", "mismatch"):
            counts[status] += 1
    return counts


def summary_line(counts: Dict[str, int]) -> str:
    return "# " + "; ".join(f"{key}: {counts[key]}" for key in SUMMARY_KEYS)


def pretty_table(report: ObstructionReport) -> str:
    """Human-readable rendering of a report."""
    group = report.h2_structure
    factors = " * ".join(f"{p}^{m}" if m > 1 else str(p) for p, m in report.factorization) or "1"
    if group.is_cyclic:
        h2 = f"Z/{group.order}" if group.order > 1 else "0"
    else:
        h2 = " + ".join(f"Z/{d}" for d in group.invariant_factors)
    lines = [
        f"Knot:     {report.name}",
        f"det:      {report.det} = {factors}",
        f"H^2:      {h2}",
        f"rank:     {report.form.rank}",
        f"mirror:   {'yes' if report.mirror_flag else 'no'}",
        "d invariants:",
    ]
    for label, value in report.d_table.items():
        lines.append(f"  h={_label(report, label)!s:<12} d = {format_rational(value)}")
    if report.D_values:
        lines.append("D invariants:")
        for d in report.D_values:
            lines.append(f"  D_{d.q:<10} = {format_rational(d.value)}")
    lines.append(f"verdict:  {report.verdict.value}")
    return "\n".join(lines)
