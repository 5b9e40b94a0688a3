"""Rewrites that bring an arbitrary aligning run into canonical shape.

Each rewrite keeps the net effect of the run on every trace and never raises
its cost. They are the constructive content behind the optimality of the
stable run computed in :mod:`timedalign.distance`.
"""
from __future__ import annotations

from .errors import ContractError
from .moves import (
    MoveSequence,
    _check_aligns,
    _net_columns,
    is_chronological,
    is_cooperative,
    is_reverse_chronological,
)
from .traces import TimedTrace


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


def to_chronological(run: MoveSequence, n: int) -> MoveSequence:
    """Merge all moves at each position into one, ordered 1..n.

    A stamp at the last position acts exactly like a delay there, so it is
    folded into the delay.
    """
    den = run.denominator
    stamps, delays = _net_columns(run, n, den)
    if n:
        delays[-1] += stamps[-1]
        stamps[-1] = 0
    return MoveSequence.from_scaled(range(1, n + 1), stamps, delays, den)


def to_cooperative(run: MoveSequence) -> MoveSequence:
    """Remove sign conflicts between the stamp and delay of each move.

    Works left to right on a chronological run. At a conflicting position k:
    if the delay dominates, the stamp is absorbed into the delay and pushed
    onto the delay at k+1; otherwise the delay is absorbed into the stamp and
    carried by the delay at k+1. At the last position the stamp is folded into
    the delay.
    """
    n = len(run)
    if not is_chronological(run, n):
        raise ContractError("to_cooperative expects a chronological run")
    _, s, d = run.scaled_columns()
    for k in range(n):
        sk, dk = s[k], d[k]
        if sk * dk >= 0:
            continue
        if k == n - 1:
            s[k], d[k] = 0, sk + dk
        elif abs(dk) >= abs(sk):
            s[k], d[k] = 0, dk + sk
            d[k + 1] -= sk
        else:
            s[k], d[k] = sk + dk, 0
            d[k + 1] += dk
    return MoveSequence.from_scaled(range(1, n + 1), s, d, run.denominator)


def to_cross_cooperative(run: MoveSequence, source: TimedTrace, target: TimedTrace) -> MoveSequence:
    """Remove sign agreements between each stamp and the next position's delay.

    For a violation at position i, moving an amount t (the smaller of |s_i| and
    |d_{i+1}|, with their common sign) out of both the stamp at i and the delay
    at i+1 and into the delay at i leaves every flow component unchanged and
    saves |t|. Positions are visited from n-1 down to 1 because a fix at i can
    only create a new violation at i-1.
    """
    n = len(source)
    if len(target) != n:
        raise ContractError(f"trace lengths differ: {n} vs {len(target)}")
    if not is_reverse_chronological(run, n):
        raise ContractError("to_cross_cooperative expects a reverse chronological run")
    if not is_cooperative(run):
        raise ContractError("to_cross_cooperative expects a co-operative run")
    _check_aligns(run, source, target)

    _, rs, rd = run.scaled_columns()
    # index by position - 1
    s, d = rs[::-1], rd[::-1]
    if n:
        d[-1] += s[-1]
        s[-1] = 0
    for i in range(n - 2, -1, -1):
        si, dn = s[i], d[i + 1]
        if si * dn <= 0:
            continue
        t = _sign(si) * min(abs(si), abs(dn))
        flow_here, flow_next = si + d[i], dn - si + s[i + 1]
        s[i] -= t
        d[i] += t
        d[i + 1] -= t
        assert s[i] + d[i] == flow_here and d[i + 1] - s[i] + s[i + 1] == flow_next
        assert s[i] * d[i] >= 0 and s[i] * d[i + 1] <= 0

    out = MoveSequence.from_scaled(range(n, 0, -1), s[::-1], d[::-1], run.denominator)
    _check_aligns(out, source, target)
    return out


def canonical_chain(run: MoveSequence, source: TimedTrace, target: TimedTrace) -> list[tuple[str, MoveSequence]]:
    """Apply all three rewrites in turn, returning every intermediate run."""
    n = len(source)
    chrono = to_chronological(run, n)
    coop = to_cooperative(chrono)
    cross = to_cross_cooperative(coop.reversed(), source, target)
    return [("chronological", chrono), ("cooperative", coop), ("cross_cooperative", cross)]


__all__ = ["to_chronological", "to_cooperative", "to_cross_cooperative", "canonical_chain"]
