"""HTTP session API for interactive clients.

Each session wraps one engine; writes are serialized per session with a
lock, distinct sessions are fully independent.  Events are the single
source of truth: every response is derived from replaying them.
"""

from __future__ import annotations

import math
import threading
import time
import uuid
from dataclasses import dataclass, field
from typing import Optional

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, PlainTextResponse, Response

from . import scenario as scenario_mod
from . import traces
from .engine import EmptyHistoryError, Engine, UnknownTypeError
from .model import InvalidUtilityError, UnknownAgentError

SCHEMA_VERSION = traces.SCHEMA_VERSION
DEFAULT_MAX_AGENTS = 64


@dataclass
class Session:
    id: str
    engine: Engine
    lock: threading.Lock = field(default_factory=threading.Lock)
    created: float = field(default_factory=time.time)
    updated: float = field(default_factory=time.time)


class _ApiError(Exception):
    def __init__(self, status: int, message: str):
        self.status = status
        self.message = message


def _error(status: int, message: str) -> JSONResponse:
    return JSONResponse(
        status_code=status, content={"schema_version": SCHEMA_VERSION, "error": message}
    )


def _state_doc(session: Session) -> dict:
    engine = session.engine
    from .engine import snapshot_agents

    return {
        "schema_version": SCHEMA_VERSION,
        "session_id": session.id,
        "agents": traces._agents_doc(engine.world.agent_count, engine.agent_names),
        "step_count": len(engine.steps),
        "state": {"agents": [traces._snapshot_doc(s) for s in snapshot_agents(engine.world)]},
    }


def _parse_agents(body: dict, max_agents: int):
    if "agents" not in body:
        raise _ApiError(422, "missing field: agents")
    agents = body["agents"]
    if isinstance(agents, bool):
        raise _ApiError(422, "agents must be a count or a list of names")
    if isinstance(agents, int):
        if not 1 <= agents <= max_agents:
            raise _ApiError(422, f"agent count must be between 1 and {max_agents}")
        return agents, None
    if isinstance(agents, list):
        if not agents or not all(isinstance(n, str) and n for n in agents):
            raise _ApiError(422, "agent names must be non-empty strings")
        if len(set(agents)) != len(agents):
            raise _ApiError(422, "duplicate agent name")
        if len(agents) > max_agents:
            raise _ApiError(422, f"agent count must be between 1 and {max_agents}")
        return len(agents), list(agents)
    raise _ApiError(422, "agents must be a count or a list of names")


def _parse_type_table(body: dict) -> dict[str, float]:
    table = body.get("type_table") or {}
    if not isinstance(table, dict):
        raise _ApiError(422, "type_table must be an object")
    out = {}
    for name, value in table.items():
        if not isinstance(value, (int, float)) or isinstance(value, bool) or not math.isfinite(value):
            raise _ApiError(422, f"type {name!r} must map to a finite number")
        out[str(name)] = float(value)
    return out


def _resolve_ref(session: Session, value, what: str) -> int:
    names = session.engine.agent_names
    if isinstance(value, str) and names and value in names:
        return names.index(value) + 1
    if isinstance(value, int) and not isinstance(value, bool):
        if 1 <= value <= session.engine.world.agent_count:
            return value
    raise _ApiError(422, f"unknown {what}: {value!r}")


def _parse_event_body(session: Session, body: dict):
    if not isinstance(body, dict):
        raise _ApiError(422, "request body must be an object")
    if "causer" not in body or "target" not in body:
        raise _ApiError(422, "missing field: causer and target are required")
    causer = _resolve_ref(session, body["causer"], "causer")
    target = _resolve_ref(session, body["target"], "target")
    if "type" in body and body["type"] is not None:
        label = body["type"]
        if not isinstance(label, str):
            raise _ApiError(422, "type must be a string")
        return causer, target, label
    if "utility" not in body or body["utility"] is None:
        raise _ApiError(422, "missing field: utility or type is required")
    utility = body["utility"]
    if not isinstance(utility, (int, float)) or isinstance(utility, bool) or not math.isfinite(utility):
        raise _ApiError(422, f"utility must be a finite number, got {utility!r}")
    return causer, target, float(utility)


def _session_scenario(session: Session) -> scenario_mod.Scenario:
    engine = session.engine
    statements = tuple(
        scenario_mod.EventStatement(
            causer=s.event.causer,
            target=s.event.target,
            utility=s.event.utility,
            label=s.event.label,
        )
        for s in engine.steps
    )
    return scenario_mod.Scenario(
        agent_count=engine.world.agent_count,
        agent_names=engine.agent_names,
        type_table=dict(engine.type_table),
        statements=statements,
    )


def create_app(
    max_agents: int = DEFAULT_MAX_AGENTS,
    cors_origins: Optional[list[str]] = None,
    static_dir: Optional[str] = None,
) -> FastAPI:
    app = FastAPI(title="affectsim session API")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=cors_origins or ["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    sessions: dict[str, Session] = {}
    registry_lock = threading.Lock()

    def get_session(session_id: str) -> Session:
        with registry_lock:
            session = sessions.get(session_id)
        if session is None:
            raise _ApiError(404, f"unknown session: {session_id}")
        return session

    @app.exception_handler(_ApiError)
    async def handle_api_error(request: Request, exc: _ApiError):
        return _error(exc.status, exc.message)

    async def read_json(request: Request) -> dict:
        try:
            body = await request.json()
        except Exception:
            raise _ApiError(422, "request body must be valid JSON")
        if not isinstance(body, dict):
            raise _ApiError(422, "request body must be an object")
        return body

    @app.post("/api/sessions", status_code=201)
    async def create_session(request: Request):
        body = await read_json(request)
        count, names = _parse_agents(body, max_agents)
        table = _parse_type_table(body)
        session = Session(id=uuid.uuid4().hex, engine=Engine(count, names, table))
        with registry_lock:
            sessions[session.id] = session
        return JSONResponse(status_code=201, content=_state_doc(session))

    @app.get("/api/sessions/{session_id}")
    async def get_state(session_id: str):
        return JSONResponse(content=_state_doc(get_session(session_id)))

    @app.delete("/api/sessions/{session_id}")
    async def delete_session(session_id: str):
        get_session(session_id)
        with registry_lock:
            sessions.pop(session_id, None)
        return JSONResponse(content={"schema_version": SCHEMA_VERSION, "deleted": session_id})

    def _step_response(session: Session, step) -> JSONResponse:
        doc = {"schema_version": SCHEMA_VERSION, "step": traces.step_doc(step)}
        return JSONResponse(content=doc)

    @app.post("/api/sessions/{session_id}/events")
    async def post_event(session_id: str, request: Request):
        session = get_session(session_id)
        body = await read_json(request)
        causer, target, utility_or_type = _parse_event_body(session, body)
        with session.lock:
            try:
                step = session.engine.step(causer, target, utility_or_type)
            except (UnknownAgentError, UnknownTypeError, InvalidUtilityError) as exc:
                raise _ApiError(422, str(exc))
            session.updated = time.time()
        return _step_response(session, step)

    @app.post("/api/sessions/{session_id}/preview")
    async def preview_event(session_id: str, request: Request):
        session = get_session(session_id)
        body = await read_json(request)
        causer, target, utility_or_type = _parse_event_body(session, body)
        with session.lock:
            try:
                step = session.engine.preview(causer, target, utility_or_type)
            except (UnknownAgentError, UnknownTypeError, InvalidUtilityError) as exc:
                raise _ApiError(422, str(exc))
        return _step_response(session, step)

    @app.post("/api/sessions/{session_id}/undo")
    async def undo(session_id: str):
        session = get_session(session_id)
        with session.lock:
            try:
                session.engine.undo()
            except EmptyHistoryError:
                raise _ApiError(409, "nothing to undo")
            session.updated = time.time()
        return JSONResponse(content=_state_doc(session))

    @app.get("/api/sessions/{session_id}/trace")
    async def get_trace(session_id: str):
        session = get_session(session_id)
        with session.lock:
            doc = traces.encode_trace(session.engine.trace())
        return Response(content=doc, media_type="application/json")

    @app.get("/api/sessions/{session_id}/export")
    async def export(session_id: str, format: str = "dsl"):
        session = get_session(session_id)
        if format == "dsl":
            with session.lock:
                text = scenario_mod.serialize(_session_scenario(session))
            return PlainTextResponse(content=text)
        if format == "trace":
            with session.lock:
                doc = traces.encode_trace(session.engine.trace())
            return Response(content=doc, media_type="application/json")
        raise _ApiError(422, f"unknown export format: {format!r}")

    if static_dir:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=static_dir, html=True), name="editor")

    return app
