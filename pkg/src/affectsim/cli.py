"""Command-line front door: run or check scenario files, print the builtin
demo, or serve the HTTP session API.

Exit codes: 0 success, 1 assertion failure, 2 parse or runtime error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional

from . import engine as engine_mod
from . import scenario as scenario_mod
from . import traces
from .classify import TK_EVENT, TK_OWN_ACTION, TK_SELF, AffectKind


def _narrative(trace: engine_mod.Trace) -> str:
    """Deterministic human-readable account of a trace, one step at a time."""
    lines = []
    for step in trace.steps:
        e = step.event
        label = f" ({e.label})" if e.label else ""
        lines.append(
            f"step {e.index}: agent {e.causer} -> agent {e.target}, "
            f"utility {scenario_mod.format_number(e.utility)}{label}"
        )
        for a in step.affects:
            if a.target_kind == TK_OWN_ACTION:
                toward = "its own action"
            elif a.target_kind == TK_SELF or a.target_ref == a.experiencer:
                toward = "itself"
            elif a.target_kind == TK_EVENT and a.kind not in (AffectKind.HOPE, AffectKind.FEAR):
                toward = "the event"
            else:
                toward = f"agent {a.target_ref}"
            marker = "*" if a.consciousness == "conscious" else " "
            lines.append(f"  {marker} agent {a.experiencer} feels {a.kind.value} toward {toward}")
        for s in step.agents:
            att = f"attention on agent {s.attention}" if s.attention else "attention unset"
            dep = ", depressed" if s.depressed else ""
            lines.append(
                f"    agent {s.id}: mood {s.mood}{dep}, "
                f"expected future utility {scenario_mod.format_number(s.efu)}, {att}"
            )
    return "\n".join(lines) + "\n" if lines else ""


def _run_scenario(scn, fmt: str, trace_path: Optional[str], quiet: bool) -> int:
    try:
        trace = engine_mod.run(scn)
    except engine_mod.AssertionFailedError as exc:
        print(str(exc), file=sys.stderr)
        return 1
    except (ValueError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    doc = traces.encode_trace(trace)
    if trace_path:
        with open(trace_path, "w", encoding="utf-8") as fh:
            fh.write(doc)
    if quiet:
        print(f"{trace.assertions_passed} assertions passed")
    elif fmt == "structured":
        sys.stdout.write(doc)
    else:
        sys.stdout.write(_narrative(trace))
    return 0


def _load(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return None
    try:
        return scenario_mod.parse(text)
    except scenario_mod.ScenarioParseError as exc:
        for issue in exc.issues:
            print(f"{path}:{issue}", file=sys.stderr)
        return None


def main(argv: Optional[list[str]] = None) -> int:
    parser = argparse.ArgumentParser(prog="affectsim", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    run_p = sub.add_parser("run", help="run a scenario file")
    run_p.add_argument("path")
    check_p = sub.add_parser("check", help="run a scenario, reporting only assertion results")
    check_p.add_argument("path")
    demo_p = sub.add_parser("demo", help="run the builtin demonstration scenario")
    for p in (run_p, demo_p):
        p.add_argument("--format", choices=("text", "structured"), default="text")
        p.add_argument("--trace", metavar="PATH", help="also write the trace document here")

    serve_p = sub.add_parser("serve", help="serve the HTTP session API")
    serve_p.add_argument("--port", type=int, default=8080)
    serve_p.add_argument("--static", metavar="DIR", help="serve the editor assets from this directory")

    args = parser.parse_args(argv)

    if args.command == "serve":
        if not 1 <= args.port <= 65535:
            parser.error(f"port out of range: {args.port}")
        return _serve(args.port, args.static)
    if args.command == "demo":
        return _run_scenario(scenario_mod.builtin_demo(), args.format, args.trace, quiet=False)
    scn = _load(args.path)
    if scn is None:
        return 2
    if args.command == "check":
        return _run_scenario(scn, "text", None, quiet=True)
    return _run_scenario(scn, args.format, args.trace, quiet=False)


def _serve(port: int, static_dir: Optional[str]) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(static_dir=static_dir)
    try:
        uvicorn.run(app, host="127.0.0.1", port=port, log_level="warning")
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
