"""Timed traces and their flow (duration) representation.

Both types are immutable sequences of :class:`~fractions.Fraction`. Internally
each vector keeps integer numerators over one shared, minimal denominator, so
long traces can be handed to the integer kernels without per-element
conversion.
"""
from __future__ import annotations

import math
from collections.abc import Iterable, Sequence
from fractions import Fraction
from itertools import accumulate, pairwise

from .rational import RationalLike, as_rational, format_rational


def reduce_gcd(start: int, *columns) -> int:
    """gcd of ``start`` and every value in ``columns``, stopping early at 1."""
    g = start
    for col in columns:
        for v in col:
            if g == 1:
                return 1
            g = math.gcd(g, v)
    return g


def common_denominator(values: Iterable[Fraction]) -> tuple[list[int], int]:
    """Return ``(numerators, den)`` with ``values[k] == numerators[k] / den``."""
    fracs = list(values)
    den = math.lcm(*{f.denominator for f in fracs}) if fracs else 1
    return [f.numerator * (den // f.denominator) for f in fracs], den


class _ScaledVector(Sequence):
    __slots__ = ("_num", "_den", "_hash")

    def __init__(self, values: Iterable[RationalLike] = ()):
        num, den = common_denominator(as_rational(v) for v in values)
        self._num = tuple(num)
        self._den = den
        self._hash = None

    @classmethod
    def from_scaled(cls, numerators: Iterable[int], denominator: int = 1):
        """Build from integer numerators over ``denominator`` (reduced here)."""
        num = tuple(numerators)
        if denominator <= 0:
            raise ValueError("denominator must be positive")
        g = reduce_gcd(denominator, num)
        if g > 1:
            num = tuple(v // g for v in num)
            denominator //= g
        obj = cls.__new__(cls)
        obj._num = num
        obj._den = denominator
        obj._hash = None
        return obj

    @property
    def numerators(self) -> tuple[int, ...]:
        return self._num

    @property
    def denominator(self) -> int:
        return self._den

    def scaled_to(self, den: int) -> list[int]:
        """Numerators over ``den``, which must be a multiple of ``self.denominator``."""
        k, rem = divmod(den, self._den)
        if rem:
            raise ValueError(f"{den} is not a multiple of {self._den}")
        if k == 1:
            return list(self._num)
        return [v * k for v in self._num]

    def __len__(self) -> int:
        return len(self._num)

    def __getitem__(self, index):
        if isinstance(index, slice):
            return type(self).from_scaled(self._num[index], self._den)
        return Fraction(self._num[index], self._den)

    def __iter__(self):
        den = self._den
        return (Fraction(v, den) for v in self._num)

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self._den == other._den and self._num == other._num

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((type(self).__name__, self._den, self._num))
        return self._hash

    def __repr__(self):
        shown = list(self[:8]) if len(self) > 8 else list(self)
        body = ", ".join(format_rational(v) for v in shown)
        if len(self) > 8:
            body += f", ... ({len(self)} items)"
        return f"{type(self).__name__}({body})"


class TimedTrace(_ScaledVector):
    """A finite sequence of timestamps, one per event."""

    __slots__ = ()


class FlowVector(_ScaledVector):
    """Durations between consecutive events; the first entry is the first timestamp."""

    __slots__ = ()


def align_denominators(*vectors: _ScaledVector) -> tuple[int, list[list[int]]]:
    """Rescale several vectors to their least common denominator."""
    den = math.lcm(*(v.denominator for v in vectors))
    return den, [v.scaled_to(den) for v in vectors]


def flow_of(trace: TimedTrace) -> FlowVector:
    num = trace.numerators
    if not num:
        return FlowVector()
    flows = [num[0]]
    flows.extend(b - a for a, b in pairwise(num))
    return FlowVector.from_scaled(flows, trace.denominator)


def trace_of_flow(flow: FlowVector) -> TimedTrace:
    return TimedTrace.from_scaled(accumulate(flow.numerators), flow.denominator)


def parse_trace(text: str) -> TimedTrace:
    """Parse ``"0, 3, 4.5"`` into a trace; an empty string is the empty trace."""
    parts = [p for p in (s.strip() for s in text.split(",")) if p]
    return TimedTrace(parts)
