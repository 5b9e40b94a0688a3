"""Per-case conformance reports and their text, JSON and CSV renderings.

Exact values are written as fraction strings (``"3/2"``); a ``*_decimal``
companion is added when the value has a terminating decimal expansion.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction

from .align import align
from .errors import UntimedMismatchError
from .eventlog import EventLog, timestamp_warnings
from .model import SequentialProcessModel, membership
from .moves import MoveSequence
from .rational import format_fraction, format_rational, parse_rational, to_decimal


@dataclass
class CaseRecord:
    case_id: str
    untimed_match: bool
    membership: bool | None = None
    distance: Fraction | None = None
    aligned: list[Fraction] | None = None
    witness: MoveSequence | None = None
    warnings: list[str] = field(default_factory=list)
    error: str | None = None

    @property
    def status(self) -> str:
        return "ok" if self.untimed_match else "untimed_mismatch"


@dataclass
class Report:
    records: list[CaseRecord]

    @property
    def alignable(self) -> int:
        return sum(r.untimed_match for r in self.records)

    def aggregate(self) -> dict:
        dists = [r.distance for r in self.records if r.distance is not None]
        return {
            "cases": len(self.records),
            "untimed_match": self.alignable,
            "untimed_mismatch": len(self.records) - self.alignable,
            "members": sum(bool(r.membership) for r in self.records),
            "mean_distance": sum(dists, Fraction(0)) / len(dists) if dists else None,
            "max_distance": max(dists) if dists else None,
        }


def build_report(model: SequentialProcessModel, log: EventLog, with_witness: bool = True) -> Report:
    records = []
    for cid in log.sorted_ids():
        trace = log[cid]
        rec = CaseRecord(cid, untimed_match=False, warnings=timestamp_warnings(trace.timestamps))
        try:
            result = align(model, trace)
        except UntimedMismatchError as exc:
            rec.error = str(exc)
            records.append(rec)
            continue
        rec.untimed_match = True
        rec.membership = membership(model, trace.timestamps)
        rec.distance = result.distance
        rec.aligned = list(result.aligned)
        if with_witness:
            rec.witness = result.witness
        records.append(rec)
    return Report(records)


def _exact(x: Fraction | None):
    return None if x is None else format_fraction(x)


def witness_to_json(run: MoveSequence) -> list[list]:
    return [[format_fraction(m.stamp), format_fraction(m.delay), m.position] for m in run]


def witness_from_json(items) -> MoveSequence:
    return MoveSequence((parse_rational(s), parse_rational(d), int(i)) for s, d, i in items)


def witness_summary(run: MoveSequence) -> str:
    moves = [m for m in run if m.stamp or m.delay]
    if not moves:
        return "no moves"
    return " ".join(str(m) for m in moves)


def record_to_dict(rec: CaseRecord) -> dict:
    out = {
        "case_id": rec.case_id,
        "status": rec.status,
        "untimed_match": rec.untimed_match,
        "membership": rec.membership,
        "distance": _exact(rec.distance),
        "distance_decimal": to_decimal(rec.distance) if rec.distance is not None else None,
        "aligned": [format_fraction(t) for t in rec.aligned] if rec.aligned is not None else None,
    }
    if rec.witness is not None:
        out["witness"] = witness_to_json(rec.witness)
        out["witness_summary"] = witness_summary(rec.witness)
    out["warnings"] = list(rec.warnings)
    if rec.error:
        out["error"] = rec.error
    return out


def record_from_dict(doc: dict) -> CaseRecord:
    """Inverse of :func:`record_to_dict`, used to check JSON round trips."""
    rec = CaseRecord(
        doc["case_id"],
        untimed_match=doc["untimed_match"],
        membership=doc["membership"],
        distance=None if doc["distance"] is None else parse_rational(doc["distance"]),
        aligned=None if doc["aligned"] is None else [parse_rational(t) for t in doc["aligned"]],
        witness=witness_from_json(doc["witness"]) if "witness" in doc else None,
        warnings=list(doc.get("warnings", [])),
        error=doc.get("error"),
    )
    return rec


def to_json(report: Report) -> str:
    agg = report.aggregate()
    summary = {k: (_exact(v) if isinstance(v, Fraction) else v) for k, v in agg.items()}
    return json.dumps({"cases": [record_to_dict(r) for r in report.records], "summary": summary}, indent=2)


def _fmt_trace(values) -> str:
    return ",".join(format_rational(v) for v in values)


def to_text(report: Report) -> str:
    lines = []
    for r in report.records:
        if not r.untimed_match:
            lines.append(f"{r.case_id}: untimed mismatch ({r.error})")
        else:
            parts = [
                f"{r.case_id}: untimed=yes",
                f"member={'yes' if r.membership else 'no'}",
                f"distance={format_rational(r.distance)}",
                f"aligned={_fmt_trace(r.aligned)}",
            ]
            if r.witness is not None:
                parts.append(f"moves={witness_summary(r.witness)}")
            lines.append(" ".join(parts))
        for w in r.warnings:
            lines.append(f"  warning: {w}")
    agg = report.aggregate()
    mean = "-" if agg["mean_distance"] is None else format_rational(agg["mean_distance"])
    top = "-" if agg["max_distance"] is None else format_rational(agg["max_distance"])
    lines.append(
        f"{agg['cases']} cases, {agg['untimed_mismatch']} untimed mismatch, "
        f"{agg['members']} conforming, mean distance {mean}, max distance {top}"
    )
    return "\n".join(lines) + "\n"


CSV_COLUMNS = ["case_id", "status", "untimed_match", "membership", "distance", "distance_decimal", "aligned", "witness", "warnings"]


def to_csv(report: Report) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in report.records:
        w.writerow(
            [
                r.case_id,
                r.status,
                str(r.untimed_match).lower(),
                "" if r.membership is None else str(r.membership).lower(),
                _exact(r.distance) or "",
                (to_decimal(r.distance) or "") if r.distance is not None else "",
                " ".join(format_fraction(t) for t in r.aligned) if r.aligned is not None else "",
                witness_summary(r.witness) if r.witness is not None else "",
                "; ".join(r.warnings),
            ]
        )
    return buf.getvalue()


RENDERERS = {"text": to_text, "json": to_json, "csv": to_csv}
