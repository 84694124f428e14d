"""Affect classification.

Every event is appraised from every perceiver's viewpoint using the state
*before* the event; prospective and attitude affects are then read off the
state *after* the event, and each instance is tagged conscious or
preconscious depending on whether its anchor agent is the experiencer's
current attention target.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum
from typing import Optional

from .model import (
    DISLIKED,
    LIKED,
    NEUTRAL,
    UNKNOWN,
    Event,
    WorldState,
    apply_event,
    attention,
    attitude,
    expectation,
)


class AffectKind(str, Enum):
    # events targeted at self
    DELIGHT = "delight"
    SURPRISE = "surprise"
    FRIGHT = "fright"
    SATISFACTION = "satisfaction"
    DISAPPOINTMENT = "disappointment"
    FEARS_CONFIRMED = "fears_confirmed"
    RELIEF = "relief"
    # expected future events
    HOPE = "hope"
    FEAR = "fear"
    # self-caused events
    PRIDE = "pride"
    SHAME = "shame"
    REMORSE = "remorse"
    # events caused by / targeting others
    GRATITUDE = "gratitude"
    ANGER = "anger"
    HAPPY_FOR = "happy_for"
    PITY = "pity"
    ENVY = "envy"
    GLOATING = "gloating"
    # object-directed
    LIKE = "like"
    DISLIKE = "dislike"
    DESIRE = "desire"
    DISGUST = "disgust"


KIND_ORDER = {kind: i for i, kind in enumerate(AffectKind)}

ALIASES = {
    "resentment": AffectKind.ENVY,
    "love": AffectKind.LIKE,
    "hate": AffectKind.DISLIKE,
}

# target_kind values
TK_EVENT = "event"
TK_AGENT = "agent"
TK_SELF = "self"
TK_OWN_ACTION = "own_action"

_TK_ORDER = {TK_EVENT: 0, TK_AGENT: 1, TK_SELF: 2, TK_OWN_ACTION: 3}

CONSCIOUS = "conscious"
PRECONSCIOUS = "preconscious"


def normalize_kind(name: str) -> AffectKind:
    """Resolve a kind name or alias to its canonical kind."""
    if name in ALIASES:
        return ALIASES[name]
    return AffectKind(name)


@dataclass(frozen=True)
class AffectInstance:
    experiencer: int
    kind: AffectKind
    target_kind: str
    target_ref: int  # agent id, or event index for past-event affects
    cause_event: int
    intensity: float
    consciousness: Optional[str] = None

    def sort_key(self):
        return (self.experiencer, KIND_ORDER[self.kind], _TK_ORDER[self.target_kind], self.target_ref)

    def anchor(self, event: Event) -> int:
        """The agent whose presence at the attention target makes this
        instance conscious."""
        if self.target_kind in (TK_SELF, TK_OWN_ACTION):
            return self.experiencer
        if self.target_kind == TK_EVENT:
            # past-event affects anchor at the event's causer; prospective
            # event affects (hope/fear) reference the anticipated causer
            if self.kind in (AffectKind.HOPE, AffectKind.FEAR):
                return self.target_ref
            return event.causer
        return self.target_ref


def classify_target_affect(expected: Optional[float], utility: float) -> Optional[AffectKind]:
    """Appraise an event from its target's viewpoint given the target's
    expectation toward the causer (None if the causer is unknown)."""
    if expected is None or expected == 0:
        if utility > 0:
            return AffectKind.DELIGHT
        if utility < 0:
            return AffectKind.FRIGHT
        return AffectKind.SURPRISE if expected is None else None
    if expected > 0:
        return AffectKind.SATISFACTION if utility >= expected else AffectKind.DISAPPOINTMENT
    return AffectKind.FEARS_CONFIRMED if utility <= expected else AffectKind.RELIEF


def observer_valence(att: str, utility: float) -> Optional[float]:
    """How an event targeting another agent feels to an observer: positive
    events for disliked objects count as negative for self, and vice versa.
    Unknown targets produce no reaction."""
    if att == UNKNOWN:
        return None
    if att == DISLIKED:
        return -utility
    return utility  # liked or neutral; neutral counts as liking


def classify_bystander_affects(state: WorldState, observer: int, event: Event) -> list[AffectInstance]:
    """Affects of a perceiver that is not the event's target, based on the
    pre-event state.  Requires the observer to hold a relation to the
    target; zero-utility events draw no reaction."""
    if observer == event.target:
        raise ValueError("bystander classification requires observer != target")
    att = attitude(state, observer, event.target)
    if att == UNKNOWN or event.utility == 0:
        return []
    out = []
    u = event.utility
    if att == DISLIKED:
        toward_target = AffectKind.ENVY if u > 0 else AffectKind.GLOATING
    else:
        toward_target = AffectKind.HAPPY_FOR if u > 0 else AffectKind.PITY
    out.append(
        AffectInstance(observer, toward_target, TK_AGENT, event.target, event.index, abs(u))
    )
    if event.causer != observer:
        valence = observer_valence(att, u)
        if valence is not None and valence != 0:
            kind = AffectKind.GRATITUDE if valence > 0 else AffectKind.ANGER
            out.append(
                AffectInstance(observer, kind, TK_AGENT, event.causer, event.index, abs(valence))
            )
    return out


def classify_causer_affects(state: WorldState, causer: int, event: Event) -> list[AffectInstance]:
    """Self-appraisal of the event's causer: deviation of the utility from
    the causer's self-expectation, sign-flipped when the target is a
    disliked other."""
    if causer != event.causer:
        raise ValueError("causer classification requires causer == event.causer")
    e = expectation(state, causer, causer)
    deviation = event.utility - (e or 0.0)
    if event.target != causer and attitude(state, causer, event.target) == DISLIKED:
        deviation = -deviation
    if deviation > 0:
        return [
            AffectInstance(causer, AffectKind.PRIDE, TK_OWN_ACTION, event.index, event.index, abs(deviation))
        ]
    if deviation < 0:
        mag = abs(deviation)
        return [
            AffectInstance(causer, AffectKind.SHAME, TK_SELF, causer, event.index, mag),
            AffectInstance(causer, AffectKind.REMORSE, TK_OWN_ACTION, event.index, event.index, mag),
            AffectInstance(causer, AffectKind.ANGER, TK_SELF, causer, event.index, mag),
        ]
    return []


def prospective_affects(state: WorldState, agent_id: int, cause_event: int = 0) -> list[AffectInstance]:
    """Object-directed affects read off the current model: hope/desire for
    positively expected objects, fear/disgust for negative ones, plus
    like/dislike from the net utility sum."""
    agent = state.agent(agent_id)
    out = []
    for obj in sorted(agent.relations):
        rel = agent.relations[obj]
        mag = abs(rel.mean)
        if rel.mean > 0:
            out.append(AffectInstance(agent_id, AffectKind.HOPE, TK_EVENT, obj, cause_event, mag))
            out.append(AffectInstance(agent_id, AffectKind.DESIRE, TK_AGENT, obj, cause_event, mag))
        elif rel.mean < 0:
            out.append(AffectInstance(agent_id, AffectKind.FEAR, TK_EVENT, obj, cause_event, mag))
            out.append(AffectInstance(agent_id, AffectKind.DISGUST, TK_AGENT, obj, cause_event, mag))
        if rel.sum > 0:
            out.append(AffectInstance(agent_id, AffectKind.LIKE, TK_AGENT, obj, cause_event, mag))
        elif rel.sum < 0:
            out.append(AffectInstance(agent_id, AffectKind.DISLIKE, TK_AGENT, obj, cause_event, mag))
    return out


def tag_consciousness(
    affects: list[AffectInstance], attention_target: Optional[int], event: Event
) -> list[AffectInstance]:
    """Mark instances conscious when their anchor agent is the attention
    target; everything else stays preconscious."""
    out = []
    for a in affects:
        conscious = attention_target is not None and a.anchor(event) == attention_target
        out.append(replace(a, consciousness=CONSCIOUS if conscious else PRECONSCIOUS))
    return out


def classify_all(state: WorldState, event: Event) -> list[AffectInstance]:
    """Classify one event from every perceiver's viewpoint.

    Event-, causer- and bystander-affects use the pre-event state;
    prospective affects and consciousness tags use the post-event state.
    Output is ordered by experiencer ordinal, then canonical kind order.
    """
    u = event.utility
    affects: list[AffectInstance] = []

    e = expectation(state, event.target, event.causer)
    kind = classify_target_affect(e, u)
    if kind is not None:
        affects.append(
            AffectInstance(event.target, kind, TK_EVENT, event.index, event.index, abs(u - (e or 0.0)))
        )
    if event.causer != event.target and u != 0:
        kind = AffectKind.GRATITUDE if u > 0 else AffectKind.ANGER
        affects.append(
            AffectInstance(event.target, kind, TK_AGENT, event.causer, event.index, abs(u))
        )

    affects.extend(classify_causer_affects(state, event.causer, event))

    for agent in state.agents:
        if agent.id != event.target:
            affects.extend(classify_bystander_affects(state, agent.id, event))

    post = apply_event(state, event)
    for agent in post.agents:
        affects.extend(prospective_affects(post, agent.id, cause_event=event.index))

    by_attention = {agent.id: attention(post, agent.id) for agent in post.agents}
    affects = [
        tag_consciousness([a], by_attention[a.experiencer], event)[0] for a in affects
    ]
    return sorted(affects, key=AffectInstance.sort_key)
