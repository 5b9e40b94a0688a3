"""Mixed edit moves, runs of moves, and the run predicates.

A mixed move ``(s, d, i)`` shifts event ``i`` by ``s + d`` and every later
event by ``d``. Positions are 1-based.
"""
from __future__ import annotations

import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction

from .errors import ContractError
from .rational import RationalLike, as_rational, format_rational
from .traces import FlowVector, TimedTrace, flow_of, reduce_gcd


@dataclass(frozen=True)
class MixedMove:
    stamp: Fraction
    delay: Fraction
    position: int

    def __post_init__(self):
        object.__setattr__(self, "stamp", as_rational(self.stamp))
        object.__setattr__(self, "delay", as_rational(self.delay))
        if isinstance(self.position, bool) or not isinstance(self.position, int):
            raise TypeError("move position must be an int")

    @property
    def cost(self) -> Fraction:
        return abs(self.stamp) + abs(self.delay)

    @property
    def is_pure_stamp(self) -> bool:
        return self.delay == 0

    @property
    def is_pure_delay(self) -> bool:
        return self.stamp == 0

    def __str__(self):
        return f"({format_rational(self.stamp)}, {format_rational(self.delay)}, {self.position})"


def _coerce_move(m) -> MixedMove:
    if isinstance(m, MixedMove):
        return m
    s, d, i = m
    return MixedMove(s, d, i)


class MoveSequence(Sequence):
    """An ordered run of mixed moves.

    Stored column-wise as integer numerators over a shared denominator so that
    runs with millions of moves stay cheap; items materialize as
    :class:`MixedMove` on access.
    """

    __slots__ = ("_pos", "_s", "_d", "_den")

    def __init__(self, moves: Iterable[MixedMove | tuple[RationalLike, RationalLike, int]] = ()):
        ms = [_coerce_move(m) for m in moves]
        den = math.lcm(*{m.stamp.denominator for m in ms}, *{m.delay.denominator for m in ms}) if ms else 1
        self._pos = tuple(m.position for m in ms)
        self._s = tuple(m.stamp.numerator * (den // m.stamp.denominator) for m in ms)
        self._d = tuple(m.delay.numerator * (den // m.delay.denominator) for m in ms)
        self._den = den

    @classmethod
    def from_scaled(cls, positions, stamps, delays, denominator: int = 1) -> "MoveSequence":
        pos, s, d = tuple(positions), tuple(stamps), tuple(delays)
        if not len(pos) == len(s) == len(d):
            raise ValueError("column lengths differ")
        g = reduce_gcd(denominator, s, d)
        if g > 1:
            s = tuple(v // g for v in s)
            d = tuple(v // g for v in d)
            denominator //= g
        obj = cls.__new__(cls)
        obj._pos, obj._s, obj._d, obj._den = pos, s, d, denominator
        return obj

    @property
    def positions(self) -> tuple[int, ...]:
        return self._pos

    @property
    def denominator(self) -> int:
        return self._den

    def scaled_columns(self, den: int | None = None) -> tuple[tuple[int, ...], list[int], list[int]]:
        """``(positions, stamps, delays)`` with stamps/delays as numerators over ``den``."""
        if den is None or den == self._den:
            return self._pos, list(self._s), list(self._d)
        k, rem = divmod(den, self._den)
        if rem:
            raise ValueError(f"{den} is not a multiple of {self._den}")
        return self._pos, [v * k for v in self._s], [v * k for v in self._d]

    def __len__(self):
        return len(self._pos)

    def __getitem__(self, index):
        if isinstance(index, slice):
            return MoveSequence.from_scaled(self._pos[index], self._s[index], self._d[index], self._den)
        return MixedMove(Fraction(self._s[index], self._den), Fraction(self._d[index], self._den), self._pos[index])

    def __eq__(self, other):
        if not isinstance(other, MoveSequence):
            return NotImplemented
        return (self._pos, self._s, self._d, self._den) == (other._pos, other._s, other._d, other._den)

    def __hash__(self):
        return hash((self._pos, self._s, self._d, self._den))

    def __repr__(self):
        head = " ".join(str(m) for m in self[:6])
        if len(self) > 6:
            head += f" ... ({len(self)} moves)"
        return f"MoveSequence[{head}]"

    def reversed(self) -> "MoveSequence":
        return MoveSequence.from_scaled(self._pos[::-1], self._s[::-1], self._d[::-1], self._den)

    @property
    def total_cost(self) -> Fraction:
        return run_cost(self)


def _check_position(position: int, n: int):
    if not 1 <= position <= n:
        raise IndexError(f"move position {position} out of range 1..{n}")


def apply_move(trace: TimedTrace, move: MixedMove) -> TimedTrace:
    n = len(trace)
    i = move.position
    _check_position(i, n)
    den = math.lcm(trace.denominator, move.stamp.denominator, move.delay.denominator)
    num = trace.scaled_to(den)
    s = move.stamp.numerator * (den // move.stamp.denominator)
    d = move.delay.numerator * (den // move.delay.denominator)
    num[i - 1] += s + d
    for j in range(i, n):
        num[j] += d
    return TimedTrace.from_scaled(num, den)


def apply_move_to_flow(flow: FlowVector, move: MixedMove) -> FlowVector:
    n = len(flow)
    i = move.position
    _check_position(i, n)
    den = math.lcm(flow.denominator, move.stamp.denominator, move.delay.denominator)
    num = flow.scaled_to(den)
    s = move.stamp.numerator * (den // move.stamp.denominator)
    d = move.delay.numerator * (den // move.delay.denominator)
    num[i - 1] += s + d
    if i < n:
        num[i] -= s
    return FlowVector.from_scaled(num, den)


def _net_columns(run: MoveSequence, n: int, den: int) -> tuple[list[int], list[int]]:
    """Per-position totals of stamps and delays (0-based lists of length n)."""
    pos, s, d = run.scaled_columns(den)
    stamps = [0] * n
    delays = [0] * n
    for i, si, di in zip(pos, s, d):
        _check_position(i, n)
        stamps[i - 1] += si
        delays[i - 1] += di
    return stamps, delays


def apply_run(trace: TimedTrace, run: MoveSequence) -> TimedTrace:
    """Apply ``run`` left to right.

    Moves on a linear trace commute, so the composition is computed from the
    per-position totals in one pass instead of one pass per move.
    """
    n = len(trace)
    den = math.lcm(trace.denominator, run.denominator)
    stamps, delays = _net_columns(run, n, den)
    base = trace.scaled_to(den)
    out = []
    shift = 0
    for t, s, d in zip(base, stamps, delays):
        shift += d
        out.append(t + s + shift)
    return TimedTrace.from_scaled(out, den)


def run_cost(run: MoveSequence) -> Fraction:
    _, s, d = run.scaled_columns()
    return Fraction(sum(map(abs, s)) + sum(map(abs, d)), run.denominator)


def is_chronological(run: MoveSequence, n: int) -> bool:
    """Exactly one move per position, in order 1..n."""
    return run.positions == tuple(range(1, n + 1))


def is_reverse_chronological(run: MoveSequence, n: int) -> bool:
    """Exactly one move per position, in order n..1."""
    return run.positions == tuple(range(n, 0, -1))


def is_cooperative(run: MoveSequence) -> bool:
    _, s, d = run.scaled_columns()
    return all(a * b >= 0 for a, b in zip(s, d))


def _by_position(run: MoveSequence):
    pos, s, d = run.scaled_columns()
    if len(set(pos)) != len(pos):
        return None
    return {i: (si, di) for i, si, di in zip(pos, s, d)}


def is_cross_cooperative(run: MoveSequence) -> bool:
    """No stamp shares a strict sign with the delay at the next position.

    Defined for runs with at most one move per position; positions without a
    move count as zero moves.
    """
    table = _by_position(run)
    if table is None:
        return False
    for i, (s, _) in table.items():
        nxt = table.get(i + 1)
        if nxt is not None and s * nxt[1] > 0:
            return False
    return True


def stable_stamp(here: int, nxt: int) -> int:
    """The stable stamp at a position given its flow error and the successor's.

    ``here`` is the untouched flow error at position i, ``nxt`` the residual at
    i+1 once the stamp at i+1 has been applied but before the delay at i+1.
    Works on integers or Fractions alike.
    """
    if (here >= 0 and nxt >= 0) or (here <= 0 and nxt <= 0):
        return 0
    if abs(here) < abs(nxt):
        return here
    return -nxt


def _check_aligns(run: MoveSequence, source: TimedTrace, target: TimedTrace):
    if len(source) != len(target):
        raise ContractError(f"trace lengths differ: {len(source)} vs {len(target)}")
    if apply_run(source, run) != target:
        raise ContractError("run does not align source to target")


def is_stable(run: MoveSequence, source: TimedTrace, target: TimedTrace) -> bool:
    """Replay a reverse chronological co-operative run and test every stamp.

    Raises :class:`ContractError` if the run does not align ``source`` to
    ``target``. Runs that are not reverse chronological and co-operative are
    not stable. The move at the last position must be a pure delay.
    """
    _check_aligns(run, source, target)
    n = len(source)
    if not (is_reverse_chronological(run, n) and is_cooperative(run)):
        return False
    if n == 0:
        return True
    f_src, f_tgt = flow_of(source), flow_of(target)
    den = math.lcm(f_src.denominator, f_tgt.denominator, run.denominator)
    errors = [b - a for a, b in zip(f_src.scaled_to(den), f_tgt.scaled_to(den))]
    _, s, d = run.scaled_columns(den)
    # run is ordered n..1, so index j holds position n - j
    if s[0] != 0:
        return False
    residual_next = errors[n - 1]
    for j in range(1, n):
        i = n - j
        here = errors[i - 1]
        if s[j] != stable_stamp(here, residual_next):
            return False
        residual_next = here - s[j]
    return True
