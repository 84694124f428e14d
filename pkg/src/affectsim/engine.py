"""Step cycle orchestration: classify on the pre-event state, commit the
event, snapshot the post-event state; plus scenario runs, assertions and
replay-based undo."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Union

from . import scenario as scenario_mod
from .classify import (
    TK_AGENT,
    TK_EVENT,
    TK_OWN_ACTION,
    TK_SELF,
    AffectInstance,
    AffectKind,
    classify_all,
)
from .model import (
    Event,
    MoodState,
    WorldState,
    apply_event,
    attention,
    attitude,
    expectation,
    expected_future_utility,
    mood,
)


class EmptyHistoryError(RuntimeError):
    """Undo was requested with no committed events."""


class UnknownTypeError(ValueError):
    def __init__(self, label):
        super().__init__(f"unknown event type: {label!r}")
        self.label = label


class AssertionFailedError(RuntimeError):
    def __init__(self, step_index: int, line: Optional[int], message: str):
        where = f"step {step_index}" + (f" (line {line})" if line else "")
        super().__init__(f"assertion failed after {where}: {message}")
        self.step_index = step_index
        self.line = line
        self.detail = message


@dataclass(frozen=True)
class RelationSnapshot:
    object: int
    count: int
    sum: float
    mean: float
    attitude: str


@dataclass(frozen=True)
class AgentSnapshot:
    id: int
    mood: str
    depressed: bool
    efu: float
    attention: Optional[int]
    relations: tuple[RelationSnapshot, ...]


@dataclass(frozen=True)
class StepResult:
    event: Event
    affects: tuple[AffectInstance, ...]
    agents: tuple[AgentSnapshot, ...]


@dataclass(frozen=True)
class Trace:
    agent_count: int
    agent_names: Optional[tuple[str, ...]]
    steps: tuple[StepResult, ...]
    final: tuple[AgentSnapshot, ...]
    assertions_passed: int = field(default=0, compare=False)


def snapshot_agents(state: WorldState) -> tuple[AgentSnapshot, ...]:
    out = []
    for agent in state.agents:
        m: MoodState = mood(state, agent.id)
        relations = tuple(
            RelationSnapshot(
                object=obj,
                count=agent.relations[obj].count,
                sum=agent.relations[obj].sum,
                mean=agent.relations[obj].mean,
                attitude=agent.relations[obj].attitude,
            )
            for obj in sorted(agent.relations)
        )
        out.append(
            AgentSnapshot(
                id=agent.id,
                mood=m.label,
                depressed=m.depressed,
                efu=expected_future_utility(state, agent.id),
                attention=attention(state, agent.id),
                relations=relations,
            )
        )
    return tuple(out)


class Engine:
    """Single-writer simulation session over one world.

    Distinct engines are fully independent; `preview` never mutates."""

    def __init__(
        self,
        agent_count: int,
        agent_names: Optional[list[str]] = None,
        type_table: Optional[dict[str, float]] = None,
    ):
        self.world = WorldState.fresh(agent_count)
        self.agent_names = tuple(agent_names) if agent_names else None
        self.type_table = dict(type_table or {})
        self.steps: list[StepResult] = []

    def resolve_utility(self, utility_or_type: Union[float, str]) -> tuple[float, Optional[str]]:
        if isinstance(utility_or_type, str):
            if utility_or_type not in self.type_table:
                raise UnknownTypeError(utility_or_type)
            return float(self.type_table[utility_or_type]), utility_or_type
        return float(utility_or_type), None

    def _make_event(self, causer: int, target: int, utility_or_type, label=None) -> Event:
        utility, resolved_label = self.resolve_utility(utility_or_type)
        return Event(
            index=len(self.world.event_log) + 1,
            causer=causer,
            target=target,
            utility=utility,
            label=label if label is not None else resolved_label,
        )

    def preview(self, causer: int, target: int, utility_or_type, label=None) -> StepResult:
        """What-if: the StepResult `step` would produce, without committing."""
        event = self._make_event(causer, target, utility_or_type, label)
        affects = tuple(classify_all(self.world, event))
        post = apply_event(self.world, event)
        return StepResult(event=event, affects=affects, agents=snapshot_agents(post))

    def step(self, causer: int, target: int, utility_or_type, label=None) -> StepResult:
        result = self.preview(causer, target, utility_or_type, label)
        self.world = apply_event(self.world, result.event)
        self.steps.append(result)
        return result

    def undo(self) -> WorldState:
        """Drop the last event by replaying the shortened log."""
        if not self.world.event_log:
            raise EmptyHistoryError("no events to undo")
        world = WorldState.fresh(self.world.agent_count)
        for event in self.world.event_log[:-1]:
            world = apply_event(world, event)
        self.world = world
        self.steps.pop()
        return world

    def trace(self) -> Trace:
        return Trace(
            agent_count=self.world.agent_count,
            agent_names=self.agent_names,
            steps=tuple(self.steps),
            final=snapshot_agents(self.world),
        )


def _matches_toward(instance: AffectInstance, toward, subject: int) -> bool:
    if toward is None:
        return True
    mode = toward[0]
    if mode == "self":
        return instance.target_kind in (TK_SELF, TK_OWN_ACTION) or (
            instance.target_kind == TK_AGENT and instance.target_ref == subject
        )
    if mode == "event":
        return instance.target_kind == TK_EVENT and instance.kind not in (
            AffectKind.HOPE,
            AffectKind.FEAR,
        )
    # agent reference: prospective hope/fear carry an agent ref under TK_EVENT
    ref = toward[1]
    if instance.target_kind in (TK_AGENT, TK_SELF):
        return instance.target_ref == ref
    if instance.target_kind == TK_EVENT and instance.kind in (AffectKind.HOPE, AffectKind.FEAR):
        return instance.target_ref == ref
    return False


TOLERANCE = 1e-9


def evaluate_assertion(
    assertion: "scenario_mod.Assertion",
    last_step: Optional[StepResult],
    state: WorldState,
) -> Optional[str]:
    """Check one assertion against the latest step and current state.
    Returns None on success, a failure message otherwise."""
    a = assertion
    if a.kind == "feels":
        if last_step is None:
            return f"agent {a.subject} cannot feel {a.affect.value} before any event"
        hits = [
            i
            for i in last_step.affects
            if i.experiencer == a.subject
            and i.kind == a.affect
            and _matches_toward(i, a.toward, a.subject)
        ]
        if not hits:
            toward = ""
            if a.toward is not None:
                toward = f" toward {a.toward[1] if a.toward[0] == 'agent' else a.toward[0]}"
            return f"agent {a.subject} does not feel {a.affect.value}{toward}"
        return None
    if a.kind == "expects":
        actual = expectation(state, a.subject, a.object)
        if actual is None:
            return f"agent {a.subject} has no expectation toward {a.object}"
        if abs(actual - a.value) > TOLERANCE:
            return f"agent {a.subject} expects {actual} from {a.object}, not {a.value}"
        return None
    if a.kind == "efu":
        actual = expected_future_utility(state, a.subject)
        if abs(actual - a.value) > TOLERANCE:
            return f"agent {a.subject} has expected future utility {actual}, not {a.value}"
        return None
    if a.kind == "mood":
        m = mood(state, a.subject)
        if a.label == "depressed":
            if not m.depressed:
                return f"agent {a.subject} is not depressed"
        elif m.label != a.label:
            return f"agent {a.subject} is in a {m.label} mood, not {a.label}"
        return None
    if a.kind == "attitude":
        actual = attitude(state, a.subject, a.object)
        if actual != a.label:
            return f"agent {a.subject} attitude toward {a.object} is {actual}, not {a.label}"
        return None
    raise ValueError(f"unknown assertion kind: {a.kind}")


def run(scn: "scenario_mod.Scenario") -> Trace:
    """Fold the scenario's events through an engine, evaluating assertions
    in place; raises AssertionFailedError at the first failure."""
    engine = Engine(scn.agent_count, scn.agent_names, scn.type_table)
    passed = 0
    last_step: Optional[StepResult] = None
    for stmt in scn.statements:
        if isinstance(stmt, scenario_mod.EventStatement):
            last_step = engine.step(stmt.causer, stmt.target, stmt.utility, label=stmt.label)
        else:
            failure = evaluate_assertion(stmt, last_step, engine.world)
            if failure is not None:
                raise AssertionFailedError(len(engine.steps), stmt.line, failure)
            passed += 1
    trace = engine.trace()
    return Trace(
        agent_count=trace.agent_count,
        agent_names=trace.agent_names,
        steps=trace.steps,
        final=trace.final,
        assertions_passed=passed,
    )
