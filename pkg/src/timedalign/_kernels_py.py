"""Pure-Python stable-run scan over integer flow errors.

Reference implementation and fallback for the compiled ``_kernels`` module;
the two must agree exactly on every input that fits in 64 bits.
"""


def stable_scan(errors):
    """Consume ``errors`` right to left, zeroing it in place.

    ``errors[k]`` is the flow error at position k+1, all values over one
    shared denominator. Returns ``(cost, stamps, delays)`` with the stamp and
    delay of the move at position k+1 in slot k.
    """
    n = len(errors)
    stamps = [0] * n
    delays = [0] * n
    cost = 0
    for i in range(n - 1, 0, -1):
        a = errors[i]
        b = errors[i - 1]
        if a == 0 or b == 0 or (a > 0) == (b > 0):
            delays[i] = a
        elif abs(a) < abs(b):
            stamps[i - 1] = -a
            errors[i - 1] = a + b
        else:
            stamps[i - 1] = b
            delays[i] = a + b
            errors[i - 1] = 0
        errors[i] = 0
        cost += abs(a)
    if n:
        a = errors[0]
        delays[0] = a
        cost += abs(a)
        errors[0] = 0
    return cost, stamps, delays
