"""CSV event logs: one row per event, ``case_id,activity,timestamp``."""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass

from .errors import DataError
from .model import LabeledTrace
from .rational import parse_rational

REQUIRED_COLUMNS = ("case_id", "activity", "timestamp")


@dataclass(frozen=True)
class EventLog:
    """Cases keyed by id; events keep file order within each case."""

    cases: dict[str, LabeledTrace]

    def __len__(self):
        return len(self.cases)

    def __getitem__(self, case_id: str) -> LabeledTrace:
        return self.cases[case_id]

    def sorted_ids(self) -> list[str]:
        return sorted(self.cases)


def parse_log(text: str, source: str = "<log>") -> EventLog:
    reader = csv.DictReader(io.StringIO(text))
    header = reader.fieldnames
    if header is None:
        raise DataError(f"{source}: empty file, expected header {','.join(REQUIRED_COLUMNS)}")
    header = [h.strip() for h in header]
    reader.fieldnames = header
    missing = [c for c in REQUIRED_COLUMNS if c not in header]
    if missing:
        raise DataError(f"{source}: line 1: missing column(s) {', '.join(missing)}")
    events: dict[str, list] = {}
    for row in reader:
        line = reader.line_num
        if None in row or any(row.get(c) is None for c in REQUIRED_COLUMNS):
            raise DataError(f"{source}: line {line}: wrong number of fields")
        case_id = row["case_id"].strip()
        activity = row["activity"].strip()
        if not case_id:
            raise DataError(f"{source}: line {line}: empty case_id")
        if not activity:
            raise DataError(f"{source}: line {line}: empty activity")
        try:
            ts = parse_rational(row["timestamp"])
        except ValueError as exc:
            raise DataError(f"{source}: line {line}: timestamp: {exc}") from None
        events.setdefault(case_id, []).append((activity, ts))
    return EventLog({cid: LabeledTrace(cid, tuple(evs)) for cid, evs in events.items()})


def load_log(path) -> EventLog:
    try:
        with open(path, encoding="utf-8", newline="") as fh:
            text = fh.read()
    except OSError as exc:
        raise DataError(f"{path}: {exc.strerror}") from None
    return parse_log(text, str(path))


def timestamp_warnings(timestamps) -> list[str]:
    """Negative or decreasing timestamps are legal input but worth flagging."""
    out = []
    prev = None
    for k, t in enumerate(timestamps, start=1):
        if t < 0:
            out.append(f"negative timestamp at position {k}")
        if prev is not None and t < prev:
            out.append(f"decreasing timestamp at position {k}")
        prev = t
    return out
