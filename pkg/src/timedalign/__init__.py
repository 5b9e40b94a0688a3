"""Timed conformance checking with stamp, delay and mixed edit moves."""
from ._backend import AVAILABLE as BACKENDS
from ._backend import DEFAULT as BACKEND
from .align import AlignmentResult, align, align_timestamps, clamp_flow
from .distance import DistanceReport, ErrorVector, d_N, d_t, d_theta
from .errors import CapacityError, ContractError, DataError, TimedAlignError, UntimedMismatchError
from .model import (
    LabeledTrace,
    SequentialProcessModel,
    TimeInterval,
    Transition,
    load_model,
    membership,
    parse_model,
    sample_trace,
    serialize_model,
    untimed_match,
)
from .moves import (
    MixedMove,
    MoveSequence,
    apply_move,
    apply_move_to_flow,
    apply_run,
    is_chronological,
    is_cooperative,
    is_cross_cooperative,
    is_reverse_chronological,
    is_stable,
    run_cost,
)
from .normalize import to_chronological, to_cooperative, to_cross_cooperative
from .oracle import StampProgram, oracle_align, oracle_dN, random_aligning_run
from .traces import FlowVector, TimedTrace, flow_of, parse_trace, trace_of_flow

__version__ = "0.1.0"
