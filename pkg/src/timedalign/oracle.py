"""Brute-force references for ``d_N`` and for alignment optimality.

These are deliberately independent of the stable scan: ``oracle_dN`` solves
the underlying convex piecewise-linear program by exact vertex enumeration,
and ``oracle_align`` searches candidate model traces. Small instances only.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

from .align import clamp_flow
from .distance import d_N
from .errors import CapacityError, ContractError
from .model import LabeledTrace, SequentialProcessModel
from .moves import MixedMove, MoveSequence
from .traces import FlowVector, TimedTrace, flow_of, trace_of_flow

MAX_ORACLE_N = 8
MAX_ALIGN_N = 6


@dataclass(frozen=True)
class StampProgram:
    """Chronological runs from ``source`` to ``target`` parametrized by their stamps.

    With timestamp errors ``E_i = target_i - source_i`` and free stamps
    ``s_1 .. s_{n-1}`` (``s_0 = s_n = 0``), the delays
    ``d_i = (E_i - E_{i-1}) - s_i + s_{i-1}`` make the run exact.
    """

    errors: tuple[Fraction, ...]

    @classmethod
    def from_traces(cls, source: TimedTrace, target: TimedTrace) -> "StampProgram":
        if len(source) != len(target):
            raise ContractError(f"trace lengths differ: {len(source)} vs {len(target)}")
        return cls(tuple(b - a for a, b in zip(source, target)))

    @property
    def n(self) -> int:
        return len(self.errors)

    @property
    def increments(self) -> list[Fraction]:
        prev = Fraction(0)
        out = []
        for e in self.errors:
            out.append(e - prev)
            prev = e
        return out

    def _padded(self, stamps) -> list[Fraction]:
        stamps = [Fraction(s) for s in stamps]
        if len(stamps) != max(self.n - 1, 0):
            raise ValueError(f"expected {max(self.n - 1, 0)} free stamps, got {len(stamps)}")
        return [Fraction(0)] + stamps + [Fraction(0)]

    def delays(self, stamps) -> list[Fraction]:
        s = self._padded(stamps)
        return [c - s[i] + s[i - 1] for i, c in enumerate(self.increments, start=1)]

    def objective(self, stamps) -> Fraction:
        return sum(map(abs, stamps), Fraction(0)) + sum(map(abs, self.delays(stamps)), Fraction(0))

    def run(self, stamps) -> MoveSequence:
        s = self._padded(stamps)
        return MoveSequence(MixedMove(s[i], d, i) for i, d in enumerate(self.delays(stamps), start=1))


def _solve(rows: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction] | None:
    """Gauss-Jordan over the rationals; None when the system is singular."""
    m = len(rows)
    a = [row[:] + [b] for row, b in zip(rows, rhs)]
    for col in range(m):
        pivot = next((r for r in range(col, m) if a[r][col] != 0), None)
        if pivot is None:
            return None
        a[col], a[pivot] = a[pivot], a[col]
        p = a[col][col]
        if p != 1:
            a[col] = [v / p for v in a[col]]
        for r in range(m):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [v - f * w for v, w in zip(a[r], a[col])]
    return [a[r][m] for r in range(m)]


def _breakpoint_hyperplanes(prog: StampProgram):
    """Rows ``(coeffs, rhs)`` for ``s_i = 0`` and ``d_i = 0`` over the free stamps."""
    n = prog.n
    m = n - 1
    planes = []
    for i in range(m):
        row = [Fraction(0)] * m
        row[i] = Fraction(1)
        planes.append((row, Fraction(0)))
    for i, c in enumerate(prog.increments, start=1):
        # d_i = 0  <=>  s_i - s_{i-1} = c_i
        row = [Fraction(0)] * m
        if i <= m:
            row[i - 1] += 1
        if i >= 2:
            row[i - 2] -= 1
        planes.append((row, c))
    return planes


def oracle_dN(source: TimedTrace, target: TimedTrace) -> Fraction:
    """Exact minimum of the stamp program by enumerating arrangement vertices.

    The objective is convex, piecewise linear and coercive, and the
    arrangement of its breakpoint hyperplanes contains the coordinate planes,
    so the minimum sits at a vertex: a point where n-1 independent breakpoint
    hyperplanes meet.
    """
    prog = StampProgram.from_traces(source, target)
    n = prog.n
    if n > MAX_ORACLE_N:
        raise CapacityError(f"oracle_dN handles n <= {MAX_ORACLE_N}, got {n}")
    if n <= 1:
        return abs(prog.errors[0]) if n else Fraction(0)
    planes = _breakpoint_hyperplanes(prog)
    best = None
    for subset in itertools.combinations(planes, n - 1):
        point = _solve([r for r, _ in subset], [b for _, b in subset])
        if point is None:
            continue
        value = prog.objective(point)
        if best is None or value < best:
            best = value
    return best


def _candidate_flows(interval, observed_flow: Fraction, samples: int, rng: random.Random, horizon: Fraction):
    cands = {interval.eft, clamp_flow(observed_flow, interval)}
    if interval.bounded:
        cands.add(interval.lft)
    hi = interval.lft if interval.bounded else interval.eft + horizon
    for _ in range(samples):
        cands.add(interval.eft + (hi - interval.eft) * Fraction(rng.randint(0, 1000), 1000))
    return sorted(cands)


def oracle_align(
    model: SequentialProcessModel,
    observed: TimedTrace | LabeledTrace,
    samples_per_position: int = 2,
    seed: int = 0,
) -> Fraction:
    """Smallest ``d_N`` to the observed trace over a grid of model traces.

    Each position draws from its interval endpoints, the clamped observed
    flow, and ``samples_per_position`` seeded points inside the interval.
    """
    sigma = observed.timestamps if isinstance(observed, LabeledTrace) else observed
    n = len(sigma)
    if n > MAX_ALIGN_N:
        raise CapacityError(f"oracle_align handles n <= {MAX_ALIGN_N}, got {n}")
    if n != len(model):
        raise ContractError(f"trace has {n} events, model has {len(model)} transitions")
    rng = random.Random(seed)
    f_sigma = flow_of(sigma)
    horizon = max((abs(f) for f in f_sigma), default=Fraction(0)) + 1
    per_position = [
        _candidate_flows(iv, f, samples_per_position, rng, horizon) for iv, f in zip(model.intervals, f_sigma)
    ]
    best = None
    for flows in itertools.product(*per_position):
        value = d_N(trace_of_flow(FlowVector(flows)), sigma).value
        if best is None or value < best:
            best = value
    return best if best is not None else Fraction(0)


def _random_rational(rng: random.Random, bound: Fraction, den: int = 20) -> Fraction:
    lim = int(bound * den) + den
    return Fraction(rng.randint(-lim, lim), den)


def random_aligning_run(
    source: TimedTrace,
    target: TimedTrace,
    seed: int,
    *,
    zero_stamps: bool = False,
    split: bool = True,
    shuffle: bool = True,
) -> MoveSequence:
    """A random run taking ``source`` to ``target``, deterministic in ``seed``.

    Stamps are sampled freely and the delays forced by the stamp program. Each
    move may then be split into pieces and all moves shuffled; neither changes
    the net effect. With ``zero_stamps`` the run is the pure-delay run and no
    splitting is done.
    """
    prog = StampProgram.from_traces(source, target)
    rng = random.Random(seed)
    bound = max((abs(e) for e in prog.errors), default=Fraction(0))
    n = prog.n
    if zero_stamps:
        stamps = [Fraction(0)] * max(n - 1, 0)
        split = False
    else:
        stamps = [_random_rational(rng, bound) if rng.random() < 0.7 else Fraction(0) for _ in range(max(n - 1, 0))]
    moves = list(prog.run(stamps))
    if split:
        pieces = []
        for m in moves:
            k = rng.randint(1, 3)
            s_parts = [_random_rational(rng, bound) for _ in range(k - 1)]
            d_parts = [_random_rational(rng, bound) for _ in range(k - 1)]
            s_parts.append(m.stamp - sum(s_parts, Fraction(0)))
            d_parts.append(m.delay - sum(d_parts, Fraction(0)))
            pieces.extend(MixedMove(s, d, m.position) for s, d in zip(s_parts, d_parts))
        moves = pieces
    if shuffle:
        rng.shuffle(moves)
    return MoveSequence(moves)
