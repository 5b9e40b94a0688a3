"""Sequential process models: chains of labeled transitions with firing intervals.

A model of length n accepts the timed traces ``(t_1, ..., t_n)`` such that
``t_i - t_{i-1}`` lies in the closed interval of transition i, with ``t_0 = 0``.
"""
from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from .errors import ContractError, DataError
from .rational import RationalLike, as_rational, format_rational, parse_rational
from .traces import TimedTrace, flow_of

INF = math.inf
Bound = Union[Fraction, float]


@dataclass(frozen=True)
class TimeInterval:
    """Closed interval ``[eft, lft]``; ``lft`` may be ``math.inf``."""

    eft: Fraction
    lft: Bound = INF

    def __post_init__(self):
        eft = as_rational(self.eft)
        lft = self.lft
        if isinstance(lft, str) and lft.strip().lower() in ("inf", "+inf", "infinity"):
            lft = INF
        lft = lft if lft == INF else as_rational(lft)
        if eft < 0:
            raise ValueError(f"negative earliest firing time {format_rational(eft)}")
        if lft < eft:
            raise ValueError(f"empty interval [{format_rational(eft)}, {_fmt_bound(lft)}]")
        object.__setattr__(self, "eft", eft)
        object.__setattr__(self, "lft", lft)

    @property
    def bounded(self) -> bool:
        return self.lft != INF

    def __contains__(self, x) -> bool:
        return self.eft <= x <= self.lft

    def __str__(self):
        return f"[{format_rational(self.eft)}, {_fmt_bound(self.lft)}]"


def _fmt_bound(b: Bound) -> str:
    return "inf" if b == INF else format_rational(b)


@dataclass(frozen=True)
class Transition:
    label: str
    interval: TimeInterval

    def __post_init__(self):
        if not isinstance(self.label, str) or not self.label:
            raise ValueError("transition labels must be nonempty strings")


@dataclass(frozen=True)
class SequentialProcessModel:
    transitions: tuple[Transition, ...] = ()
    name: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "transitions", tuple(self.transitions))

    @classmethod
    def from_intervals(cls, spec, labels=None, name=None) -> "SequentialProcessModel":
        """``spec`` is a list of ``(eft, lft)`` pairs; labels default to t1, t2, ..."""
        spec = list(spec)
        labels = list(labels) if labels is not None else [f"t{k}" for k in range(1, len(spec) + 1)]
        if len(labels) != len(spec):
            raise ValueError("one label per interval")
        return cls(tuple(Transition(l, TimeInterval(a, b)) for l, (a, b) in zip(labels, spec)), name)

    def __len__(self):
        return len(self.transitions)

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(t.label for t in self.transitions)

    @property
    def intervals(self) -> tuple[TimeInterval, ...]:
        return tuple(t.interval for t in self.transitions)


@dataclass(frozen=True)
class LabeledTrace:
    """An observed case: activity labels with their timestamps."""

    case_id: str
    events: tuple[tuple[str, Fraction], ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "events", tuple((str(a), as_rational(t)) for a, t in self.events))

    @classmethod
    def of(cls, case_id: str, activities, timestamps: list[RationalLike]) -> "LabeledTrace":
        activities = list(activities)
        timestamps = list(timestamps)
        if len(activities) != len(timestamps):
            raise ValueError("one timestamp per activity")
        return cls(case_id, tuple(zip(activities, timestamps)))

    def __len__(self):
        return len(self.events)

    @property
    def activities(self) -> tuple[str, ...]:
        return tuple(a for a, _ in self.events)

    @property
    def timestamps(self) -> TimedTrace:
        return TimedTrace(t for _, t in self.events)


def membership(model: SequentialProcessModel, trace: TimedTrace) -> bool:
    if len(trace) != len(model):
        raise ContractError(f"trace has {len(trace)} events, model has {len(model)} transitions")
    return all(f in iv for f, iv in zip(flow_of(trace), model.intervals))


def first_label_mismatch(model: SequentialProcessModel, trace: LabeledTrace) -> int | None:
    """1-based position of the first label disagreement, or None if they match."""
    for k, (want, got) in enumerate(zip(model.labels, trace.activities), start=1):
        if want != got:
            return k
    if len(model) != len(trace):
        return min(len(model), len(trace)) + 1
    return None


def untimed_match(model: SequentialProcessModel, trace: LabeledTrace) -> bool:
    return first_label_mismatch(model, trace) is None


def sample_trace(
    model: SequentialProcessModel, seed: int, horizon: RationalLike = 10, resolution: int = 1000
) -> TimedTrace:
    """Draw a member trace; each flow is uniform on a grid of ``resolution`` steps.

    Unbounded intervals are cut at ``eft + horizon``. Exact and deterministic
    in ``seed``.
    """
    horizon = as_rational(horizon)
    if horizon <= 0:
        raise ValueError("horizon must be positive")
    rng = random.Random(seed)
    flows = []
    for iv in model.intervals:
        hi = iv.lft if iv.bounded else iv.eft + horizon
        flows.append(iv.eft + (hi - iv.eft) * Fraction(rng.randint(0, resolution), resolution))
    out, acc = [], Fraction(0)
    for f in flows:
        acc += f
        out.append(acc)
    return TimedTrace(out)


def _field_error(where: str, msg: str) -> DataError:
    return DataError(f"{where}: {msg}")


def _parse_bound(value, where: str, allow_inf: bool) -> Bound:
    if not isinstance(value, str):
        raise _field_error(where, f"expected a quoted decimal string, got {json.dumps(value)}")
    if allow_inf and value.strip().lower() in ("inf", "+inf", "infinity"):
        return INF
    try:
        return parse_rational(value)
    except ValueError as exc:
        raise _field_error(where, str(exc)) from None


def model_from_dict(doc, source: str = "<model>") -> SequentialProcessModel:
    if not isinstance(doc, dict):
        raise DataError(f"{source}: top level must be an object")
    name = doc.get("name")
    if name is not None and not isinstance(name, str):
        raise DataError(f"{source}: name must be a string")
    items = doc.get("transitions")
    if not isinstance(items, list):
        raise DataError(f"{source}: missing 'transitions' list")
    transitions = []
    for k, item in enumerate(items):
        where = f"{source}: transitions[{k}]"
        if not isinstance(item, dict):
            raise _field_error(where, "expected an object")
        label = item.get("label")
        if not isinstance(label, str) or not label:
            raise _field_error(where + ".label", "expected a nonempty string")
        if "eft" not in item:
            raise _field_error(where, "missing 'eft'")
        eft = _parse_bound(item["eft"], where + ".eft", allow_inf=False)
        lft = _parse_bound(item.get("lft", "inf"), where + ".lft", allow_inf=True)
        try:
            interval = TimeInterval(eft, lft)
        except ValueError as exc:
            raise _field_error(where, str(exc)) from None
        transitions.append(Transition(label, interval))
    return SequentialProcessModel(tuple(transitions), name)


def parse_model(text: str, source: str = "<model>") -> SequentialProcessModel:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DataError(f"{source}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    return model_from_dict(doc, source)


def load_model(path) -> SequentialProcessModel:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise DataError(f"{path}: {exc.strerror}") from None
    return parse_model(text, str(path))


def _bound_text(b: Bound) -> str:
    if b == INF:
        return "inf"
    # fractions without a finite decimal expansion keep the exact p/q form
    return format_rational(b)


def model_to_dict(model: SequentialProcessModel) -> dict:
    doc: dict = {}
    if model.name is not None:
        doc["name"] = model.name
    doc["transitions"] = [
        {"label": t.label, "eft": _bound_text(t.interval.eft), "lft": _bound_text(t.interval.lft)}
        for t in model.transitions
    ]
    return doc


def serialize_model(model: SequentialProcessModel) -> str:
    return json.dumps(model_to_dict(model), indent=2)
