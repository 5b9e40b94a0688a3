"""Acceptance criteria, one test per criterion.

Each test records a PASS/FAIL line that is printed in the terminal summary
(and inline with ``-s``).
"""
import random
import time
from fractions import Fraction

import pytest

from timedalign import (
    BACKEND,
    BACKENDS,
    LabeledTrace,
    SequentialProcessModel,
    TimedTrace,
    align,
    apply_run,
    d_N,
    d_t,
    d_theta,
    flow_of,
    is_cooperative,
    is_cross_cooperative,
    is_reverse_chronological,
    is_stable,
    oracle_align,
    oracle_dN,
    random_aligning_run,
    run_cost,
)
from timedalign.bench import generate_pair, time_dn
from timedalign.normalize import canonical_chain

from conftest import random_model, random_trace, record_criterion

T = TimedTrace


def _pair(rng, max_n):
    n = rng.randint(0, max_n)
    return random_trace(rng, n), random_trace(rng, n)


def test_golden_values():
    checks = []
    for backend in BACKENDS:
        a, b = T([0, 3, 4]), T(["0.5", "2.5", "3.5"])
        checks.append((f"three-event pair d_t [{backend}]", d_t(a, b).value, Fraction(3, 2)))
        checks.append((f"three-event pair d_theta [{backend}]", d_theta(a, b).value, Fraction(3, 2)))
        checks.append((f"three-event pair d_N [{backend}]", d_N(a, b, backend).value, 1))

        model = SequentialProcessModel.from_intervals([(0, 1), (2, 2), (1, 1)])
        res = align(model, LabeledTrace.of("c", model.labels, [3, 4, 5]), backend)
        checks.append((f"chain model aligned [{backend}]", res.aligned, T([1, 3, 4])))
        checks.append((f"chain model d_t [{backend}]", d_t(res.aligned, res.observed).value, 4))
        checks.append((f"chain model d_theta [{backend}]", d_theta(res.aligned, res.observed).value, 3))
        checks.append((f"chain model d_N [{backend}]", res.distance, 2))

        s = d_N(T([1, 1, 2, 4, 5]), T([1, 2, "2.5", "4.2", 5]), backend)
        checks.append((f"stability d_N [{backend}]", s.value, Fraction(3, 2)))
    bad = [f"{name}: got {got}, want {want}" for name, got, want in checks if got != want]
    record_criterion("golden values exact", not bad, "; ".join(bad) or f"{len(checks)} checks")
    assert not bad


def test_oracle_equivalence():
    t0 = time.perf_counter()
    rng = random.Random(20240501)
    dn_bad = []
    for k in range(1000):
        a, b = _pair(rng, 6)
        got, want = d_N(a, b).value, oracle_dN(a, b)
        if got != want:
            dn_bad.append((k, a, b, got, want))
    align_bad = []
    for k in range(200):
        n = rng.randint(1, 6)
        model = random_model(rng, n)
        sigma = random_trace(rng, n)
        got = align(model, LabeledTrace.of(f"r{k}", model.labels, list(sigma))).distance
        want = oracle_align(model, sigma, samples_per_position=2, seed=k)
        if got != want:
            align_bad.append((k, got, want))
    elapsed = time.perf_counter() - t0
    ok = not dn_bad and not align_bad and elapsed < 120
    record_criterion(
        "oracle equivalence",
        ok,
        f"d_N mismatches {len(dn_bad)}/1000, align mismatches {len(align_bad)}/200, {elapsed:.1f}s",
    )
    assert not dn_bad, dn_bad[:3]
    assert not align_bad, align_bad[:3]
    assert elapsed < 120


def test_witness_suite():
    rng = random.Random(7)
    failures = []
    for k in range(1000):
        a, b = _pair(rng, 12)
        rep = d_N(a, b)
        w = rep.witness
        n = len(a)
        ok = (
            apply_run(a, w) == b
            and run_cost(w) == rep.value
            and is_reverse_chronological(w, n)
            and is_cooperative(w)
            and is_cross_cooperative(w)
            and is_stable(w, a, b)
        )
        if not ok:
            failures.append(k)
    record_criterion("witness suite", not failures, f"{1000 - len(failures)}/1000 witnesses valid")
    assert not failures


def _last_flow_triple(rng, same_side):
    """sigma and two traces differing only in the last timestamp, x no farther
    from sigma's last flow than y."""
    n = rng.randint(2, 8)
    sigma = random_trace(rng, n)
    prefix = list(random_trace(rng, n - 1))
    target = flow_of(sigma)[-1]
    near = Fraction(rng.randint(0, 20), rng.choice([1, 2, 5]))
    far = near + Fraction(rng.randint(0, 20), rng.choice([1, 4]))
    side_x = rng.choice([1, -1])
    side_y = side_x if same_side else rng.choice([1, -1])
    x, y = target + side_x * near, target + side_y * far
    return sigma, T(prefix + [prefix[-1] + x]), T(prefix + [prefix[-1] + y])


def test_rewrite_suite():
    rng = random.Random(99)
    normalizer_bad = 0
    lower_bound_bad = 0
    for k in range(500):
        a, b = _pair(rng, 7)
        run = random_aligning_run(a, b, seed=k)
        floor = d_N(a, b).value
        prev = run_cost(run)
        if prev < floor:
            lower_bound_bad += 1
        for _, out in canonical_chain(run, a, b):
            if apply_run(a, out) != b or run_cost(out) > prev:
                normalizer_bad += 1
            prev = run_cost(out)
    ok = not (normalizer_bad or lower_bound_bad)
    record_criterion(
        "property suite: normalizers and random-run bound",
        ok,
        f"normalizer violations {normalizer_bad}, runs below d_N {lower_bound_bad}, 500 runs",
    )
    assert ok


@pytest.mark.xfail(strict=True, reason="does not hold when the shared prefix differs from sigma")
def test_last_flow_monotonicity_as_stated():
    rng = random.Random(123)
    bad = 0
    for _ in range(500):
        sigma, gx, gy = _last_flow_triple(rng, same_side=False)
        if d_N(sigma, gx).value > d_N(sigma, gy).value:
            bad += 1
    # smallest counterexample with increasing timestamps, confirmed by the oracle
    sigma, gx, gy = T([0, 2]), T([2, 5]), T([2, 2])
    witness = (oracle_dN(sigma, gx), oracle_dN(sigma, gy))
    record_criterion(
        "property suite: last-flow monotonicity as stated",
        bad == 0,
        f"{bad}/500 triples violate it; e.g. sigma=(0,2): d_N to (2,5) is {witness[0]}, to (2,2) is {witness[1]}",
    )
    assert bad == 0


def test_last_flow_monotonicity_same_side():
    rng = random.Random(321)
    bad = 0
    for _ in range(500):
        sigma, gx, gy = _last_flow_triple(rng, same_side=True)
        if d_N(sigma, gx).value > d_N(sigma, gy).value:
            bad += 1
    record_criterion(
        "property suite: last-flow monotonicity on one side of the target flow", bad == 0, f"{bad}/500 violations"
    )
    assert bad == 0


def test_metric_properties():
    rng = random.Random(3)
    sym_bad = tri_bad = 0
    for _ in range(500):
        n = rng.randint(0, 10)
        a, b, c = (random_trace(rng, n) for _ in range(3))
        ab, ba = d_N(a, b).value, d_N(b, a).value
        if ab != ba:
            sym_bad += 1
        if d_N(a, c).value > ab + d_N(b, c).value:
            tri_bad += 1
    dom_bad = 0
    for _ in range(1000):
        a, b = _pair(rng, 10)
        if d_N(a, b).value > min(d_t(a, b).value, d_theta(a, b).value):
            dom_bad += 1
    ok = not (sym_bad or tri_bad or dom_bad)
    record_criterion(
        "metric properties",
        ok,
        f"symmetry {sym_bad}, triangle {tri_bad} of 500; dominance {dom_bad} of 1000",
    )
    assert ok


def test_scaling():
    small = generate_pair(100_000, seed=0)
    large = generate_pair(1_000_000, seed=0)
    t_small, _ = time_dn(*small, repeats=7, backend=BACKEND)
    t_large, _ = time_dn(*large, repeats=3, backend=BACKEND)
    ratio = t_large / t_small
    ok = t_large < 10 and 5 <= ratio <= 20
    record_criterion(
        "scaling",
        ok,
        f"backend {BACKEND}: 1e5 {t_small:.3f}s, 1e6 {t_large:.3f}s, ratio {ratio:.2f}",
    )
    assert t_large < 10
    assert 5 <= ratio <= 20
