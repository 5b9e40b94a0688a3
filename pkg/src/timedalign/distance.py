"""Distances between two timed traces over the same linear process.

``d_t`` allows stamp moves only, ``d_theta`` delay moves only and ``d_N``
both. The first two have closed forms; ``d_N`` is computed by a single
right-to-left scan over the flow errors that emits the unique stable,
co-operative, reverse chronological run.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

from . import _backend
from .errors import ContractError
from .moves import MoveSequence
from .traces import TimedTrace, align_denominators, flow_of

Variant = Literal["stamp_only", "delay_only", "mixed"]


@dataclass(frozen=True)
class DistanceReport:
    value: Fraction
    witness: MoveSequence
    variant: Variant


class ErrorVector:
    """Per-position flow errors ``f_target(i) - f_source(i)`` over one denominator.

    The buffer is consumed in place by :meth:`stable_run`; afterwards every
    entry is zero.
    """

    __slots__ = ("_buf", "denominator")

    def __init__(self, buffer, denominator: int):
        self._buf = buffer
        self.denominator = denominator

    @classmethod
    def between(cls, source: TimedTrace, target: TimedTrace, backend: str | None = None) -> "ErrorVector":
        _require_same_length(source, target)
        den, (src, tgt) = align_denominators(source, target)
        return cls(_backend.flow_errors(src, tgt, backend), den)

    def __len__(self):
        return len(self._buf)

    def __getitem__(self, k: int) -> Fraction:
        return Fraction(int(self._buf[k]), self.denominator)

    def is_zero(self) -> bool:
        return not any(int(v) for v in self._buf)

    def stable_run(self) -> tuple[Fraction, MoveSequence]:
        """Consume the errors; return the cost and the reverse chronological run."""
        n = len(self._buf)
        cost, stamps, delays = _backend.stable_scan(self._buf)
        run = MoveSequence.from_scaled(range(n, 0, -1), stamps[::-1], delays[::-1], self.denominator)
        return Fraction(cost, self.denominator), run


def _require_same_length(a: TimedTrace, b: TimedTrace):
    if len(a) != len(b):
        raise ContractError(f"trace lengths differ: {len(a)} vs {len(b)}")


def d_t(a: TimedTrace, b: TimedTrace) -> DistanceReport:
    """Stamp-only distance: every position is corrected independently."""
    _require_same_length(a, b)
    den, (x, y) = align_denominators(a, b)
    diffs = [q - p for p, q in zip(x, y)]
    n = len(diffs)
    witness = MoveSequence.from_scaled(range(1, n + 1), diffs, [0] * n, den)
    return DistanceReport(Fraction(sum(map(abs, diffs)), den), witness, "stamp_only")


def d_theta(a: TimedTrace, b: TimedTrace) -> DistanceReport:
    """Delay-only distance: each delay edits exactly one flow component."""
    _require_same_length(a, b)
    fa, fb = flow_of(a), flow_of(b)
    den = math.lcm(fa.denominator, fb.denominator)
    diffs = [q - p for p, q in zip(fa.scaled_to(den), fb.scaled_to(den))]
    n = len(diffs)
    witness = MoveSequence.from_scaled(range(1, n + 1), [0] * n, diffs, den)
    return DistanceReport(Fraction(sum(map(abs, diffs)), den), witness, "delay_only")


def d_N(source: TimedTrace, target: TimedTrace, backend: str | None = None) -> DistanceReport:
    """Mixed-moves distance with its stable witness.

    The witness satisfies ``apply_run(source, witness) == target`` and lists
    one move per position from n down to 1.
    """
    errors = ErrorVector.between(source, target, backend)
    value, witness = errors.stable_run()
    return DistanceReport(value, witness, "mixed")


def d_N_value(source: TimedTrace, target: TimedTrace, backend: str | None = None) -> Fraction:
    return d_N(source, target, backend).value


d_n = d_N
