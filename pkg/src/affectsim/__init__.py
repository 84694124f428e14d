"""Deterministic multi-agent affect simulation.

Agents accumulate per-object utility expectations from the events they
directly experience; every event is appraised from every perceiver's
viewpoint into a taxonomy of affects, tagged conscious or preconscious by
the perceiver's attention target.
"""

from .classify import (
    AffectInstance,
    AffectKind,
    classify_all,
    classify_bystander_affects,
    classify_causer_affects,
    classify_target_affect,
    normalize_kind,
    observer_valence,
    prospective_affects,
    tag_consciousness,
)
from .engine import (
    AssertionFailedError,
    EmptyHistoryError,
    Engine,
    StepResult,
    Trace,
    run,
)
from .model import (
    Event,
    InvalidUtilityError,
    Relation,
    UnknownAgentError,
    WorldState,
    apply_event,
    attention,
    attitude,
    expectation,
    expected_future_utility,
    mood,
)
from .scenario import Scenario, ScenarioParseError, builtin_demo, parse, serialize
from .traces import TraceDecodeError, decode_trace, encode_trace

__all__ = [
    "AffectInstance",
    "AffectKind",
    "AssertionFailedError",
    "EmptyHistoryError",
    "Engine",
    "Event",
    "InvalidUtilityError",
    "Relation",
    "Scenario",
    "ScenarioParseError",
    "StepResult",
    "Trace",
    "TraceDecodeError",
    "UnknownAgentError",
    "WorldState",
    "apply_event",
    "attention",
    "attitude",
    "builtin_demo",
    "classify_all",
    "classify_bystander_affects",
    "classify_causer_affects",
    "classify_target_affect",
    "decode_trace",
    "encode_trace",
    "expectation",
    "expected_future_utility",
    "mood",
    "normalize_kind",
    "observer_valence",
    "parse",
    "prospective_affects",
    "run",
    "serialize",
    "tag_consciousness",
]

__version__ = "0.1.0"
