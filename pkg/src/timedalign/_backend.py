"""Select the stable-scan kernel at import time.

The compiled extension is used when it was built and the instance fits in
64-bit integers; otherwise the pure-Python kernel runs on unbounded ints.
"""
from __future__ import annotations

from array import array

from . import _kernels_py

try:
    import numpy as np

    from . import _kernels as _compiled
except ImportError:  # extension not built, or numpy missing
    np = None
    _compiled = None

AVAILABLE = ("compiled", "python") if _compiled is not None else ("python",)
DEFAULT = AVAILABLE[0]

_INT64_MAX = 2**63 - 1


def fits_int64(max_abs: int, n: int) -> bool:
    return 4 * max_abs * max(n, 1) < _INT64_MAX


def resolve(backend: str | None) -> str:
    backend = backend or DEFAULT
    if backend not in AVAILABLE:
        raise ValueError(f"backend {backend!r} unavailable; have {AVAILABLE}")
    return backend


def _errors_python(src, tgt) -> list[int]:
    errors = []
    prev = 0
    for a, b in zip(src, tgt):
        cur = b - a
        errors.append(cur - prev)
        prev = cur
    return errors


def _errors_compiled(src, tgt):
    n = len(src)
    try:
        a = np.frombuffer(array("q", src), dtype=np.int64)
        b = np.frombuffer(array("q", tgt), dtype=np.int64)
    except OverflowError:
        return None
    if n and not fits_int64(max(int(np.abs(a).max()), int(np.abs(b).max())), n):
        return None
    out = np.empty(n, dtype=np.int64)
    _compiled.flow_errors(a, b, out)
    return out


def flow_errors(src, tgt, backend: str | None = None):
    """Flow errors (target minus source) from timestamp numerators.

    Returns an int64 array on the compiled route, a list of ints otherwise;
    :func:`stable_scan` accepts either.
    """
    if resolve(backend) == "compiled":
        out = _errors_compiled(src, tgt)
        if out is not None:
            return out
    return _errors_python(src, tgt)


def stable_scan(errors):
    """Run the stable scan on a buffer from :func:`flow_errors`, zeroing it.

    Returns ``(cost, stamps, delays)`` as Python ints, indexed by position - 1.
    """
    if np is not None and isinstance(errors, np.ndarray):
        n = errors.shape[0]
        stamps = np.empty(n, dtype=np.int64)
        delays = np.empty(n, dtype=np.int64)
        cost = _compiled.stable_scan(errors, stamps, delays)
        return int(cost), stamps.tolist(), delays.tolist()
    return _kernels_py.stable_scan(errors)
