"""Canonical trace documents.

Traces serialize to JSON with sorted keys, compact separators and integral
numbers rendered as integers, so that two runs of the same scenario produce
byte-identical documents regardless of which interface emitted them.
"""

from __future__ import annotations

import json
from typing import Any, Optional

from .classify import AffectInstance, AffectKind
from .engine import AgentSnapshot, RelationSnapshot, StepResult, Trace
from .model import Event

SCHEMA_VERSION = 1


class TraceDecodeError(ValueError):
    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path
        self.detail = message


def canonical_number(value):
    value = float(value)
    if value.is_integer() and abs(value) < 1e15:
        return int(value)
    return value


def _event_doc(event: Event) -> dict:
    doc = {
        "causer": event.causer,
        "target": event.target,
        "utility": canonical_number(event.utility),
    }
    if event.label is not None:
        doc["label"] = event.label
    return doc


def _affect_doc(a: AffectInstance) -> dict:
    return {
        "agent": a.experiencer,
        "kind": a.kind.value,
        "target_kind": a.target_kind,
        "target": a.target_ref,
        "intensity": canonical_number(a.intensity),
        "consciousness": a.consciousness,
    }


def _snapshot_doc(s: AgentSnapshot) -> dict:
    return {
        "id": s.id,
        "mood": s.mood,
        "depressed": s.depressed,
        "efu": canonical_number(s.efu),
        "attention": s.attention,
        "relations": [
            {
                "object": r.object,
                "count": r.count,
                "sum": canonical_number(r.sum),
                "mean": canonical_number(r.mean),
                "attitude": r.attitude,
            }
            for r in s.relations
        ],
    }


def step_doc(step: StepResult) -> dict:
    return {
        "index": step.event.index,
        "event": _event_doc(step.event),
        "affects": [_affect_doc(a) for a in step.affects],
        "agents": [_snapshot_doc(s) for s in step.agents],
    }


def _agents_doc(count: int, names: Optional[tuple]) -> list:
    out = []
    for i in range(1, count + 1):
        entry: dict[str, Any] = {"id": i}
        if names:
            entry["name"] = names[i - 1]
        out.append(entry)
    return out


def trace_doc(trace: Trace) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "agents": _agents_doc(trace.agent_count, trace.agent_names),
        "steps": [step_doc(s) for s in trace.steps],
        "final": {"agents": [_snapshot_doc(s) for s in trace.final]},
    }


def dumps(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"


def encode_trace(trace: Trace) -> str:
    return dumps(trace_doc(trace))


# --- decoding ---------------------------------------------------------------


def _expect(doc, key, types, path):
    if not isinstance(doc, dict):
        raise TraceDecodeError(path, f"expected an object, got {type(doc).__name__}")
    if key not in doc:
        raise TraceDecodeError(f"{path}.{key}", "missing field")
    value = doc[key]
    if isinstance(value, bool) and types is not bool:
        raise TraceDecodeError(f"{path}.{key}", "unexpected type bool")
    if not isinstance(value, types):
        raise TraceDecodeError(f"{path}.{key}", f"unexpected type {type(value).__name__}")
    return value


def _decode_snapshot(doc, path) -> AgentSnapshot:
    relations = []
    rels = _expect(doc, "relations", list, path)
    for i, rel in enumerate(rels):
        rpath = f"{path}.relations[{i}]"
        attitude = _expect(rel, "attitude", str, rpath)
        if attitude not in ("liked", "neutral", "disliked"):
            raise TraceDecodeError(f"{rpath}.attitude", f"invalid attitude {attitude!r}")
        relations.append(
            RelationSnapshot(
                object=_expect(rel, "object", int, rpath),
                count=_expect(rel, "count", int, rpath),
                sum=float(_expect(rel, "sum", (int, float), rpath)),
                mean=float(_expect(rel, "mean", (int, float), rpath)),
                attitude=attitude,
            )
        )
    att = doc.get("attention")
    if att is not None and not isinstance(att, int):
        raise TraceDecodeError(f"{path}.attention", "must be an agent id or null")
    return AgentSnapshot(
        id=_expect(doc, "id", int, path),
        mood=_expect(doc, "mood", str, path),
        depressed=_expect(doc, "depressed", bool, path),
        efu=float(_expect(doc, "efu", (int, float), path)),
        attention=att,
        relations=tuple(relations),
    )


def _decode_step(doc, path) -> StepResult:
    edoc = _expect(doc, "event", dict, path)
    event = Event(
        index=_expect(doc, "index", int, path),
        causer=_expect(edoc, "causer", int, f"{path}.event"),
        target=_expect(edoc, "target", int, f"{path}.event"),
        utility=float(_expect(edoc, "utility", (int, float), f"{path}.event")),
        label=edoc.get("label"),
    )
    affects = []
    for i, adoc in enumerate(_expect(doc, "affects", list, path)):
        apath = f"{path}.affects[{i}]"
        try:
            kind = AffectKind(_expect(adoc, "kind", str, apath))
        except ValueError as exc:
            raise TraceDecodeError(f"{apath}.kind", str(exc)) from None
        consciousness = _expect(adoc, "consciousness", str, apath)
        if consciousness not in ("conscious", "preconscious"):
            raise TraceDecodeError(f"{apath}.consciousness", f"invalid value {consciousness!r}")
        affects.append(
            AffectInstance(
                experiencer=_expect(adoc, "agent", int, apath),
                kind=kind,
                target_kind=_expect(adoc, "target_kind", str, apath),
                target_ref=_expect(adoc, "target", int, apath),
                cause_event=event.index,
                intensity=float(_expect(adoc, "intensity", (int, float), apath)),
                consciousness=consciousness,
            )
        )
    agents = [
        _decode_snapshot(s, f"{path}.agents[{i}]")
        for i, s in enumerate(_expect(doc, "agents", list, path))
    ]
    return StepResult(event=event, affects=tuple(affects), agents=tuple(agents))


def decode_trace(text: str) -> Trace:
    """Parse and validate a trace document; malformed input raises a
    TraceDecodeError (or json.JSONDecodeError) carrying a position."""
    doc = json.loads(text)
    if not isinstance(doc, dict):
        raise TraceDecodeError("$", "trace document must be an object")
    version = _expect(doc, "schema_version", int, "$")
    if version != SCHEMA_VERSION:
        raise TraceDecodeError("$.schema_version", f"unsupported version {version}")
    agents = _expect(doc, "agents", list, "$")
    names = []
    for i, entry in enumerate(agents):
        aid = _expect(entry, "id", int, f"$.agents[{i}]")
        if aid != i + 1:
            raise TraceDecodeError(f"$.agents[{i}].id", f"expected {i + 1}, got {aid}")
        names.append(entry.get("name"))
    agent_names = tuple(names) if any(n is not None for n in names) else None
    steps = [
        _decode_step(s, f"$.steps[{i}]")
        for i, s in enumerate(_expect(doc, "steps", list, "$"))
    ]
    for i, step in enumerate(steps):
        if step.event.index != i + 1:
            raise TraceDecodeError(f"$.steps[{i}].index", f"expected {i + 1}")
    final_doc = _expect(doc, "final", dict, "$")
    final = [
        _decode_snapshot(s, f"$.final.agents[{i}]")
        for i, s in enumerate(_expect(final_doc, "agents", list, "$.final"))
    ]
    return Trace(
        agent_count=len(agents),
        agent_names=agent_names,
        steps=tuple(steps),
        final=tuple(final),
    )
