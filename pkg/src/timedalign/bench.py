"""Scaling benchmark for the ``d_N`` computation."""
from __future__ import annotations

import gc
import time
from fractions import Fraction

import numpy as np

from . import _backend
from .distance import d_N
from .traces import TimedTrace

DEFAULT_LENGTHS = (10, 100, 1000, 10_000, 100_000, 1_000_000)
RESOLUTION = 1000  # timestamps carry three decimals


def generate_pair(n: int, seed: int) -> tuple[TimedTrace, TimedTrace]:
    """A reference trace and a noisy copy of it, deterministic in ``(n, seed)``."""
    rng = np.random.default_rng([seed, n])
    flows = rng.integers(0, 5 * RESOLUTION, size=n, dtype=np.int64)
    ref = np.cumsum(flows)
    noisy = ref + rng.integers(-RESOLUTION, RESOLUTION + 1, size=n, dtype=np.int64)
    return (
        TimedTrace.from_scaled(noisy.tolist(), RESOLUTION),
        TimedTrace.from_scaled(ref.tolist(), RESOLUTION),
    )


def time_dn(a: TimedTrace, b: TimedTrace, repeats: int, backend: str) -> tuple[float, Fraction]:
    """Best wall-clock time of ``repeats`` calls, and the distance found."""
    best = float("inf")
    value = None
    for _ in range(max(repeats, 1)):
        gc.collect()
        gc.disable()
        try:
            t0 = time.perf_counter()
            value = d_N(a, b, backend).value
            elapsed = time.perf_counter() - t0
        finally:
            gc.enable()
        best = min(best, elapsed)
    return best, value


def run_bench(lengths=DEFAULT_LENGTHS, seed: int = 0, repeats: int = 3, backends=None) -> list[dict]:
    backends = list(backends or [_backend.DEFAULT])
    rows = []
    for backend in backends:
        _backend.resolve(backend)
        prev = None
        for n in lengths:
            a, b = generate_pair(n, seed)
            seconds, value = time_dn(a, b, repeats, backend)
            rows.append(
                {
                    "backend": backend,
                    "length": n,
                    "seconds": seconds,
                    "ratio": None if prev is None else seconds / prev,
                    "distance": value,
                }
            )
            prev = seconds
    return rows
