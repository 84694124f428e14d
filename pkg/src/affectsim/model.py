"""World state and its arithmetic.

Agents hold relations toward objects they have directly experienced:
per-object event count and utility sum, from which expectation (mean)
and attitude (sign of sum) derive.  Everything here is a pure function
over immutable values; replaying an event log from a fresh world always
reproduces the same state.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple, Optional

# attitude labels
LIKED = "liked"
NEUTRAL = "neutral"
DISLIKED = "disliked"
UNKNOWN = "unknown"

# mood labels
GOOD = "good"
BAD = "bad"
# NEUTRAL shared with attitudes


class UnknownAgentError(ValueError):
    """An event or query referenced an agent id outside the world."""

    def __init__(self, agent_id):
        super().__init__(f"unknown agent id: {agent_id!r}")
        self.agent_id = agent_id


class InvalidUtilityError(ValueError):
    """Utility was not a finite number."""

    def __init__(self, value):
        super().__init__(f"utility must be finite, got {value!r}")
        self.value = value


@dataclass(frozen=True)
class Event:
    """One utility-bearing interaction, indexed 1-based along the log."""

    index: int
    causer: int
    target: int
    utility: float
    label: Optional[str] = None


@dataclass(frozen=True)
class Relation:
    """An observer's model of one object: how many events it caused the
    observer and their total utility."""

    observer: int
    object: int
    count: int
    sum: float

    @property
    def mean(self) -> float:
        return self.sum / self.count

    @property
    def attitude(self) -> str:
        if self.sum > 0:
            return LIKED
        if self.sum < 0:
            return DISLIKED
        return NEUTRAL


@dataclass(frozen=True)
class AgentState:
    id: int
    relations: dict[int, Relation] = field(default_factory=dict)
    received_count: int = 0
    received_sum: float = 0.0


@dataclass(frozen=True)
class WorldState:
    agents: tuple[AgentState, ...]
    event_log: tuple[Event, ...] = ()

    @classmethod
    def fresh(cls, agent_count: int) -> "WorldState":
        if agent_count < 1:
            raise ValueError(f"need at least one agent, got {agent_count}")
        return cls(agents=tuple(AgentState(id=i) for i in range(1, agent_count + 1)))

    @property
    def agent_count(self) -> int:
        return len(self.agents)

    def agent(self, agent_id: int) -> AgentState:
        if not isinstance(agent_id, int) or not 1 <= agent_id <= len(self.agents):
            raise UnknownAgentError(agent_id)
        return self.agents[agent_id - 1]


class MoodState(NamedTuple):
    label: str  # good | neutral | bad
    depressed: bool


def apply_event(state: WorldState, event: Event) -> WorldState:
    """Append an event: the target's relation toward the causer absorbs the
    utility and the target's received aggregates update.  No other agent
    changes (relations form from direct experience only)."""
    if event.index != len(state.event_log) + 1:
        raise ValueError(
            f"event index {event.index} out of order, expected {len(state.event_log) + 1}"
        )
    state.agent(event.causer)
    target = state.agent(event.target)
    if not math.isfinite(event.utility):
        raise InvalidUtilityError(event.utility)

    old = target.relations.get(event.causer)
    if old is None:
        rel = Relation(observer=event.target, object=event.causer, count=1, sum=event.utility)
    else:
        rel = Relation(
            observer=event.target,
            object=event.causer,
            count=old.count + 1,
            sum=old.sum + event.utility,
        )
    relations = dict(target.relations)
    relations[event.causer] = rel
    updated = AgentState(
        id=target.id,
        relations=relations,
        received_count=target.received_count + 1,
        received_sum=target.received_sum + event.utility,
    )
    agents = list(state.agents)
    agents[event.target - 1] = updated
    return WorldState(agents=tuple(agents), event_log=state.event_log + (event,))


def expectation(state: WorldState, observer: int, obj: int) -> Optional[float]:
    """Mean utility the observer has directly received from the object, or
    None when no model of the object exists."""
    rel = state.agent(observer).relations.get(obj)
    state.agent(obj)
    return None if rel is None else rel.mean


def attitude(state: WorldState, observer: int, obj: int) -> str:
    rel = state.agent(observer).relations.get(obj)
    state.agent(obj)
    return UNKNOWN if rel is None else rel.attitude


def expected_future_utility(state: WorldState, agent_id: int) -> float:
    """Sum of per-object expectations; 0 for an empty model."""
    agent = state.agent(agent_id)
    return sum(agent.relations[obj].mean for obj in sorted(agent.relations))


def mood(state: WorldState, agent_id: int) -> MoodState:
    """Mood is the sign of the mean utility of all received events;
    depression is a non-empty model with no positive expectation."""
    agent = state.agent(agent_id)
    if agent.received_count == 0:
        label = NEUTRAL
    else:
        avg = agent.received_sum / agent.received_count
        label = GOOD if avg > 0 else BAD if avg < 0 else NEUTRAL
    depressed = bool(agent.relations) and not any(
        rel.mean > 0 for rel in agent.relations.values()
    )
    return MoodState(label, depressed)


def attention(state: WorldState, agent_id: int) -> Optional[int]:
    """The known object with the largest absolute expectation; ties go to
    the lowest ordinal; None for an empty model."""
    agent = state.agent(agent_id)
    if not agent.relations:
        return None
    return max(sorted(agent.relations), key=lambda obj: (abs(agent.relations[obj].mean), -obj))
