from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from timedalign import (
    ContractError,
    FlowVector,
    MixedMove,
    MoveSequence,
    TimedTrace,
    apply_move,
    apply_move_to_flow,
    apply_run,
    flow_of,
    is_chronological,
    is_cooperative,
    is_cross_cooperative,
    is_reverse_chronological,
    is_stable,
    run_cost,
)
from timedalign.moves import stable_stamp

from conftest import rationals, traces

T = TimedTrace


@pytest.mark.parametrize(
    "trace, move, expected",
    [
        ((1, 5, 9), (2, 0, 2), (1, 7, 9)),  # pure stamp
        ((1, 5, 9), (0, 2, 2), (1, 7, 11)),  # pure delay
        ((1, 5, 9), (1, 2, 2), (1, 8, 11)),
        ((1, 5, 9), (-1, 1, 1), (1, 6, 10)),
        ((1, 5, 9), (3, 0, 3), (1, 5, 12)),
    ],
)
def test_apply_move(trace, move, expected):
    assert apply_move(T(trace), MixedMove(*move)) == T(expected)


@pytest.mark.parametrize("pos", [0, 4, -1])
def test_apply_move_out_of_range(pos):
    with pytest.raises(IndexError):
        apply_move(T([1, 2, 3]), MixedMove(1, 0, pos))


def test_move_validation_and_cost():
    m = MixedMove("0.5", -2, 3)
    assert m.cost == Fraction(5, 2)
    assert str(m) == "(0.5, -2, 3)"
    assert MixedMove(1, 0, 1).is_pure_stamp and MixedMove(0, 1, 1).is_pure_delay
    with pytest.raises(TypeError):
        MixedMove(1, 0, 1.0)


@st.composite
def trace_and_move(draw):
    t = draw(traces(min_size=1))
    return t, MixedMove(draw(rationals), draw(rationals), draw(st.integers(1, len(t))))


@given(trace_and_move())
def test_flow_update_matches_timestamp_update(tm):
    t, m = tm
    assert flow_of(apply_move(t, m)) == apply_move_to_flow(flow_of(t), m)


@given(trace_and_move())
def test_flow_update_touches_two_components(tm):
    t, m = tm
    f = flow_of(t)
    g = apply_move_to_flow(f, m)
    i = m.position
    for k in range(1, len(f) + 1):
        want = f[k - 1]
        if k == i:
            want += m.stamp + m.delay
        elif k == i + 1:
            want -= m.stamp
        assert g[k - 1] == want


@st.composite
def trace_and_run(draw, max_moves=6):
    t = draw(traces(min_size=1))
    k = draw(st.integers(0, max_moves))
    moves = [MixedMove(draw(rationals), draw(rationals), draw(st.integers(1, len(t)))) for _ in range(k)]
    return t, moves


@given(trace_and_run(), st.randoms(use_true_random=False))
def test_run_equals_sequential_application_and_commutes(tr, rnd):
    t, moves = tr
    step = t
    for m in moves:
        step = apply_move(step, m)
    assert apply_run(t, MoveSequence(moves)) == step
    shuffled = list(moves)
    rnd.shuffle(shuffled)
    assert apply_run(t, MoveSequence(shuffled)) == step


@given(trace_and_run())
def test_run_cost_is_sum_of_move_costs(tr):
    _, moves = tr
    assert run_cost(MoveSequence(moves)) == sum((m.cost for m in moves), Fraction(0))


def test_move_sequence_storage():
    run = MoveSequence([(Fraction(1, 2), 0, 2), ("1/3", -1, 1)])
    assert run.denominator == 6
    assert run[1] == MixedMove(Fraction(1, 3), -1, 1)
    assert run.reversed()[0] == run[1]
    assert run[:1] == MoveSequence([(Fraction(1, 2), 0, 2)])
    assert run.total_cost == Fraction(11, 6)
    assert MoveSequence.from_scaled([1, 2], [2, 4], [0, 6], 2) == MoveSequence([(1, 0, 1), (2, 3, 2)])


def test_order_predicates():
    chrono = MoveSequence([(0, 1, 1), (0, 0, 2), (0, 0, 3)])
    assert is_chronological(chrono, 3)
    assert not is_reverse_chronological(chrono, 3)
    assert is_reverse_chronological(chrono.reversed(), 3)
    assert not is_chronological(MoveSequence([(0, 1, 1), (0, 0, 3)]), 3)
    assert not is_chronological(MoveSequence([(0, 1, 1), (0, 1, 1), (0, 0, 2), (0, 0, 3)]), 3)
    assert is_chronological(MoveSequence(), 0)


def test_cooperative():
    assert is_cooperative(MoveSequence([(1, 2, 1), (0, -1, 2), (-1, 0, 3), (-1, -1, 4)]))
    assert not is_cooperative(MoveSequence([(1, -2, 1)]))


def test_cross_cooperative():
    assert is_cross_cooperative(MoveSequence([(1, 0, 1), (0, -1, 2)]))
    assert not is_cross_cooperative(MoveSequence([(1, 0, 1), (0, 2, 2)]))
    # order does not matter, adjacency of positions does
    assert not is_cross_cooperative(MoveSequence([(0, 2, 2), (1, 0, 1)]))
    assert is_cross_cooperative(MoveSequence([(1, 0, 1), (0, 2, 3)]))
    assert not is_cross_cooperative(MoveSequence([(1, 0, 1), (1, 0, 1)]))


@pytest.mark.parametrize(
    "here, nxt, want", [(2, 3, 0), (0, -4, 0), (-3, 0, 0), (-1, 2, -1), (3, -1, 1), (2, -2, 2), (-5, 3, -3)]
)
def test_stable_stamp(here, nxt, want):
    assert stable_stamp(here, nxt) == want


# run on (1,1,2,4,5) -> (1,2,2.5,4.2,5), positions 5..1
STABILITY_SOURCE = T([1, 1, 2, 4, 5])
STABILITY_TARGET = T([1, 2, "2.5", "4.2", 5])
STABLE_RUN = MoveSequence([(0, "-0.2", 5), (0, "-0.3", 4), (0, 0, 3), ("0.5", "0.5", 2), (0, 0, 1)])


def test_is_stable_reference_run():
    assert apply_run(STABILITY_SOURCE, STABLE_RUN) == STABILITY_TARGET
    assert run_cost(STABLE_RUN) == Fraction(3, 2)
    assert is_stable(STABLE_RUN, STABILITY_SOURCE, STABILITY_TARGET)


def test_is_stable_rejects_other_aligning_runs():
    src, tgt = STABILITY_SOURCE, STABILITY_TARGET
    # pure delays align too but ignore the stable stamp at position 4
    delays = MoveSequence((0, fb - fa, i) for i, fa, fb in reversed(list(zip(range(1, 6), flow_of(src), flow_of(tgt)))))
    assert apply_run(src, delays) == tgt
    assert not is_stable(delays, src, tgt)
    # chronological order is not stable even with the right moves
    assert not is_stable(STABLE_RUN.reversed(), src, tgt)


def test_is_stable_contract():
    with pytest.raises(ContractError):
        is_stable(MoveSequence([(0, 1, 1)]), T([0]), T([5]))
    with pytest.raises(ContractError):
        is_stable(MoveSequence(), T([0]), T([0, 1]))


def test_is_stable_last_position_must_be_pure_delay():
    run = MoveSequence([(1, 0, 2), (0, 0, 1)])
    assert apply_run(T([0, 0]), run) == T([0, 1])
    assert not is_stable(run, T([0, 0]), T([0, 1]))
    assert is_stable(MoveSequence([(0, 1, 2), (0, 0, 1)]), T([0, 0]), T([0, 1]))
