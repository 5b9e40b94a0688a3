"""Purely timed alignment of an observed trace to a sequential process model.

Each observed flow value is clamped into its transition's interval. The
resulting model trace is a ``d_N``-closest member of the model language; it is
also the delay-only optimal one. Other optimal traces may exist, so only the
distance is canonical.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .distance import d_N
from .errors import UntimedMismatchError
from .model import LabeledTrace, SequentialProcessModel, TimeInterval, first_label_mismatch
from .moves import MoveSequence
from .traces import FlowVector, TimedTrace, flow_of, trace_of_flow


@dataclass(frozen=True)
class AlignmentResult:
    observed: TimedTrace
    aligned: TimedTrace
    distance: Fraction
    witness: MoveSequence  # transforms ``observed`` into ``aligned``
    per_position: tuple[tuple[Fraction, Fraction, TimeInterval], ...]


def clamp_flow(x: Fraction, interval: TimeInterval) -> Fraction:
    if x < interval.eft:
        return interval.eft
    if interval.bounded and x > interval.lft:
        return interval.lft
    return x


def align_timestamps(model: SequentialProcessModel, observed: TimedTrace, backend: str | None = None) -> AlignmentResult:
    """Align a bare timestamp vector; labels are assumed to match."""
    if len(observed) != len(model):
        raise UntimedMismatchError(
            f"trace has {len(observed)} events, model has {len(model)} transitions",
            position=min(len(observed), len(model)) + 1,
        )
    flows = flow_of(observed)
    intervals = model.intervals
    clamped = [clamp_flow(f, iv) for f, iv in zip(flows, intervals)]
    aligned = trace_of_flow(FlowVector(clamped))
    report = d_N(observed, aligned, backend)
    per_position = tuple(zip(flows, clamped, intervals))
    return AlignmentResult(observed, aligned, report.value, report.witness, per_position)


def align(model: SequentialProcessModel, observed: LabeledTrace, backend: str | None = None) -> AlignmentResult:
    """Align an observed case whose labels follow the model exactly.

    Raises :class:`UntimedMismatchError` naming the first divergent position;
    repairing labels is not attempted.
    """
    pos = first_label_mismatch(model, observed)
    if pos is not None:
        want = model.labels[pos - 1] if pos <= len(model) else "<end>"
        got = observed.activities[pos - 1] if pos <= len(observed) else "<end>"
        raise UntimedMismatchError(
            f"case {observed.case_id!r}: position {pos} has {got!r}, model expects {want!r}", position=pos
        )
    return align_timestamps(model, observed.timestamps, backend)
