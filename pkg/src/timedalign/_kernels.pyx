# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled stable-run scan; see ``_kernels_py.stable_scan`` for the contract.

Operates on int64 buffers. Callers guarantee that every partial sum fits,
which holds when 4 * max|timestamp numerator| * n < 2**63.
"""

cdef inline long long _abs(long long x) nogil:
    return -x if x < 0 else x


def stable_scan(long long[::1] errors, long long[::1] stamps, long long[::1] delays):
    cdef Py_ssize_t n = errors.shape[0]
    cdef Py_ssize_t i
    cdef long long a, b, cost = 0
    if stamps.shape[0] != n or delays.shape[0] != n:
        raise ValueError("buffer lengths differ")
    with nogil:
        for i in range(n - 1, 0, -1):
            a = errors[i]
            b = errors[i - 1]
            if a == 0 or b == 0 or (a > 0) == (b > 0):
                stamps[i - 1] = 0
                delays[i] = a
            elif _abs(a) < _abs(b):
                stamps[i - 1] = -a
                delays[i] = 0
                errors[i - 1] = a + b
            else:
                stamps[i - 1] = b
                delays[i] = a + b
                errors[i - 1] = 0
            errors[i] = 0
            cost += _abs(a)
        if n:
            a = errors[0]
            delays[0] = a
            stamps[n - 1] = 0
            cost += _abs(a)
            errors[0] = 0
    return cost


def flow_errors(long long[::1] source, long long[::1] target, long long[::1] out):
    """``out[k]`` = (target flow - source flow) at position k+1."""
    cdef Py_ssize_t n = source.shape[0]
    cdef Py_ssize_t i
    cdef long long prev = 0, cur
    with nogil:
        for i in range(n):
            cur = target[i] - source[i]
            out[i] = cur - prev
            prev = cur
