"""Independent naive recomputation of agent state from a raw event list.

Deliberately avoids the incremental state in affectsim.model: everything is
recomputed from scratch over the full list of (causer, target, utility)
triples, in the stupidest way that is obviously correct.
"""

from __future__ import annotations


def received(events, agent):
    return [u for (_, t, u) in events if t == agent]


def relation_events(events, observer, obj):
    """Utilities the object caused the observer, in log order."""
    return [u for (c, t, u) in events if t == observer and c == obj]


def known_objects(events, observer, agent_count):
    return [obj for obj in range(1, agent_count + 1) if relation_events(events, observer, obj)]


def mean(events, observer, obj):
    us = relation_events(events, observer, obj)
    return sum(us) / len(us) if us else None


def attitude(events, observer, obj):
    us = relation_events(events, observer, obj)
    if not us:
        return "unknown"
    total = sum(us)
    return "liked" if total > 0 else "disliked" if total < 0 else "neutral"


def efu(events, observer, agent_count):
    return sum(mean(events, observer, obj) for obj in known_objects(events, observer, agent_count))


def mood(events, agent):
    us = received(events, agent)
    if not us:
        return "neutral"
    avg = sum(us) / len(us)
    return "good" if avg > 0 else "bad" if avg < 0 else "neutral"


def depressed(events, agent, agent_count):
    objs = known_objects(events, agent, agent_count)
    return bool(objs) and all(mean(events, agent, obj) <= 0 for obj in objs)


def attention(events, agent, agent_count):
    objs = known_objects(events, agent, agent_count)
    if not objs:
        return None
    best = None
    for obj in objs:
        m = abs(mean(events, agent, obj))
        if best is None or m > best[0]:
            best = (m, obj)  # first hit wins ties: objs ascend, so lowest ordinal
    return best[1]
