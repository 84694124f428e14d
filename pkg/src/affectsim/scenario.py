"""Scenario DSL: a line-oriented script of agents, event-type utilities,
events and assertions, plus the builtin demonstration scenario.

Grammar (one statement per line, `#` starts a comment):

    agents (INT | NAME+)
    utility NAME NUMBER
    event REF REF (NUMBER | NAME)
    assert REF feels KIND [toward (REF | self | event)]
    assert REF expects REF NUMBER
    assert REF efu NUMBER
    assert REF mood (good | bad | neutral | depressed)
    assert REF attitude REF (liked | neutral | disliked | unknown)

REF is a 1-based ordinal or a declared agent name.  The `agents` line must
come first.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from typing import Optional, Union

from .classify import ALIASES, AffectKind, normalize_kind

SCHEMA_VERSION = 1

_NAME_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")
_NUMBER_RE = re.compile(r"^[+-]?(\d+(\.\d*)?|\.\d+)([eE][+-]?\d+)?$")
_INT_RE = re.compile(r"^[0-9]+$")

_RESERVED = {
    "agents", "utility", "event", "assert", "feels", "expects", "mood",
    "attitude", "efu", "toward", "self", "good", "bad", "neutral",
    "depressed", "liked", "disliked", "unknown",
}


@dataclass(frozen=True)
class ParseIssue:
    line: int
    column: int
    message: str

    def __str__(self):
        return f"line {self.line}, column {self.column}: {self.message}"


class ScenarioParseError(ValueError):
    def __init__(self, issues: list[ParseIssue]):
        super().__init__("; ".join(str(i) for i in issues))
        self.issues = issues


@dataclass(frozen=True)
class EventStatement:
    causer: int
    target: int
    utility: float
    label: Optional[str] = None
    line: int = field(default=0, compare=False)


# toward is None, ("self",), ("event",) or ("agent", id)
Toward = Optional[tuple]


@dataclass(frozen=True)
class Assertion:
    kind: str  # feels | expects | efu | mood | attitude
    subject: int
    affect: Optional[AffectKind] = None
    toward: Toward = None
    object: Optional[int] = None
    value: Optional[float] = None
    label: Optional[str] = None
    line: int = field(default=0, compare=False)


Statement = Union[EventStatement, Assertion]


@dataclass(frozen=True)
class Scenario:
    agent_count: int
    agent_names: Optional[tuple[str, ...]] = None
    type_table: dict[str, float] = field(default_factory=dict)
    statements: tuple[Statement, ...] = ()


def _tokens(line: str):
    """Tokens with their 1-based start columns, comment stripped."""
    cut = line.find("#")
    if cut >= 0:
        line = line[:cut]
    return [(m.group(0), m.start() + 1) for m in re.finditer(r"\S+", line)]


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.issues: list[ParseIssue] = []
        self.agent_count: Optional[int] = None
        self.agent_names: Optional[list[str]] = None
        self.type_table: dict[str, float] = {}
        self.statements: list[Statement] = []

    def error(self, line: int, column: int, message: str):
        self.issues.append(ParseIssue(line, column, message))

    def resolve_ref(self, token: str, lineno: int, col: int) -> Optional[int]:
        if _INT_RE.match(token):
            ordinal = int(token)
            if self.agent_count is None or not 1 <= ordinal <= self.agent_count:
                self.error(lineno, col, f"agent ordinal out of range: {token}")
                return None
            return ordinal
        if self.agent_names and token in self.agent_names:
            return self.agent_names.index(token) + 1
        self.error(lineno, col, f"unknown agent reference: {token!r}")
        return None

    def parse_number(self, token: str, lineno: int, col: int) -> Optional[float]:
        if not _NUMBER_RE.match(token):
            self.error(lineno, col, f"not a number: {token!r}")
            return None
        value = float(token)
        if not math.isfinite(value):
            self.error(lineno, col, f"number out of range: {token!r}")
            return None
        return value

    def parse(self) -> Scenario:
        for lineno, raw in enumerate(self.text.splitlines(), start=1):
            toks = _tokens(raw)
            if not toks:
                continue
            head, col = toks[0]
            if self.agent_count is None and head != "agents":
                self.error(lineno, col, "the first statement must declare agents")
                self.agent_count = 0  # suppress repeats; later refs still error
            if head == "agents":
                self.parse_agents(toks, lineno)
            elif head == "utility":
                self.parse_utility(toks, lineno)
            elif head == "event":
                self.parse_event(toks, lineno)
            elif head == "assert":
                self.parse_assert(toks, lineno)
            else:
                self.error(lineno, col, f"unknown statement: {head!r}")
        if self.agent_count is None:
            self.error(1, 1, "scenario declares no agents")
        if self.issues:
            raise ScenarioParseError(self.issues)
        return Scenario(
            agent_count=self.agent_count,
            agent_names=tuple(self.agent_names) if self.agent_names else None,
            type_table=dict(self.type_table),
            statements=tuple(self.statements),
        )

    def parse_agents(self, toks, lineno: int):
        if self.agent_count:
            self.error(lineno, toks[0][1], "agents already declared")
            return
        args = toks[1:]
        if not args:
            self.error(lineno, toks[0][1], "agents needs a count or a list of names")
            return
        if len(args) == 1 and _INT_RE.match(args[0][0]):
            count = int(args[0][0])
            if count < 1:
                self.error(lineno, args[0][1], "agent count must be at least 1")
                return
            self.agent_count = count
            return
        names = []
        for tok, col in args:
            if not _NAME_RE.match(tok) or tok in _RESERVED:
                self.error(lineno, col, f"invalid agent name: {tok!r}")
            elif tok in names:
                self.error(lineno, col, f"duplicate agent name: {tok!r}")
            else:
                names.append(tok)
        if names and len(names) == len(args):
            self.agent_names = names
            self.agent_count = len(names)

    def parse_utility(self, toks, lineno: int):
        if len(toks) != 3:
            self.error(lineno, toks[0][1], "utility needs a name and a number")
            return
        (name, ncol), (num, vcol) = toks[1], toks[2]
        if not _NAME_RE.match(name) or name in _RESERVED:
            self.error(lineno, ncol, f"invalid type name: {name!r}")
            return
        if name in self.type_table:
            self.error(lineno, ncol, f"duplicate type name: {name!r}")
            return
        value = self.parse_number(num, lineno, vcol)
        if value is not None:
            self.type_table[name] = value

    def parse_event(self, toks, lineno: int):
        if len(toks) != 4:
            self.error(lineno, toks[0][1], "event needs causer, target and utility")
            return
        causer = self.resolve_ref(toks[1][0], lineno, toks[1][1])
        target = self.resolve_ref(toks[2][0], lineno, toks[2][1])
        utok, ucol = toks[3]
        label = None
        if _NUMBER_RE.match(utok):
            utility = self.parse_number(utok, lineno, ucol)
        elif utok in self.type_table:
            utility = self.type_table[utok]
            label = utok
        else:
            self.error(lineno, ucol, f"unknown event type: {utok!r}")
            return
        if causer is None or target is None or utility is None:
            return
        self.statements.append(
            EventStatement(causer=causer, target=target, utility=utility, label=label, line=lineno)
        )

    def parse_assert(self, toks, lineno: int):
        if len(toks) < 3:
            self.error(lineno, toks[0][1], "incomplete assertion")
            return
        subject = self.resolve_ref(toks[1][0], lineno, toks[1][1])
        verb, vcol = toks[2]
        if verb == "feels":
            self.parse_feels(toks, lineno, subject)
        elif verb == "expects":
            if len(toks) != 5:
                self.error(lineno, vcol, "expects needs an object and a value")
                return
            obj = self.resolve_ref(toks[3][0], lineno, toks[3][1])
            value = self.parse_number(toks[4][0], lineno, toks[4][1])
            if None not in (subject, obj, value):
                self.statements.append(
                    Assertion("expects", subject, object=obj, value=value, line=lineno)
                )
        elif verb == "efu":
            if len(toks) != 4:
                self.error(lineno, vcol, "efu needs a value")
                return
            value = self.parse_number(toks[3][0], lineno, toks[3][1])
            if None not in (subject, value):
                self.statements.append(Assertion("efu", subject, value=value, line=lineno))
        elif verb == "mood":
            if len(toks) != 4 or toks[3][0] not in ("good", "bad", "neutral", "depressed"):
                self.error(lineno, vcol, "mood needs one of good, bad, neutral, depressed")
                return
            if subject is not None:
                self.statements.append(
                    Assertion("mood", subject, label=toks[3][0], line=lineno)
                )
        elif verb == "attitude":
            if len(toks) != 5 or toks[4][0] not in ("liked", "neutral", "disliked", "unknown"):
                self.error(lineno, vcol, "attitude needs an object and a label")
                return
            obj = self.resolve_ref(toks[3][0], lineno, toks[3][1])
            if None not in (subject, obj):
                self.statements.append(
                    Assertion("attitude", subject, object=obj, label=toks[4][0], line=lineno)
                )
        else:
            self.error(lineno, vcol, f"unknown assertion: {verb!r}")

    def parse_feels(self, toks, lineno: int, subject: Optional[int]):
        if len(toks) not in (4, 6):
            self.error(lineno, toks[2][1], "feels needs a kind and optionally a toward clause")
            return
        kind_tok, kcol = toks[3]
        if kind_tok == "joy":
            # joy is the good-mood label, not a distinct affect kind
            if len(toks) != 4:
                self.error(lineno, kcol, "joy takes no toward clause")
                return
            if subject is not None:
                self.statements.append(Assertion("mood", subject, label="good", line=lineno))
            return
        try:
            kind = normalize_kind(kind_tok)
        except ValueError:
            self.error(lineno, kcol, f"unknown affect kind: {kind_tok!r}")
            return
        toward: Toward = None
        if len(toks) == 6:
            if toks[4][0] != "toward":
                self.error(lineno, toks[4][1], "expected 'toward'")
                return
            ttok, tcol = toks[5]
            if ttok == "self":
                toward = ("self",)
            elif ttok == "event":
                toward = ("event",)
            else:
                ref = self.resolve_ref(ttok, lineno, tcol)
                if ref is None:
                    return
                toward = ("agent", ref)
        if subject is not None:
            self.statements.append(
                Assertion("feels", subject, affect=kind, toward=toward, line=lineno)
            )


def parse(text: str) -> Scenario:
    """Parse scenario text; raises ScenarioParseError carrying every issue
    found, each with a line and column."""
    return _Parser(text).parse()


def format_number(value: float) -> str:
    value = float(value)
    if value.is_integer() and abs(value) < 1e15:
        return str(int(value))
    return repr(value)


def _ref(scn: Scenario, ordinal: int) -> str:
    if scn.agent_names:
        return scn.agent_names[ordinal - 1]
    return str(ordinal)


def serialize(scn: Scenario) -> str:
    """Canonical text form; parse(serialize(s)) is structurally equal to s
    and serialize is a fixed point on its own output."""
    lines = []
    if scn.agent_names:
        lines.append("agents " + " ".join(scn.agent_names))
    else:
        lines.append(f"agents {scn.agent_count}")
    for name, value in scn.type_table.items():
        lines.append(f"utility {name} {format_number(value)}")
    for stmt in scn.statements:
        if isinstance(stmt, EventStatement):
            u = stmt.label if stmt.label is not None else format_number(stmt.utility)
            lines.append(f"event {_ref(scn, stmt.causer)} {_ref(scn, stmt.target)} {u}")
        else:
            lines.append(_serialize_assertion(scn, stmt))
    return "\n".join(lines) + "\n"


def _serialize_assertion(scn: Scenario, a: Assertion) -> str:
    subject = _ref(scn, a.subject)
    if a.kind == "feels":
        out = f"assert {subject} feels {a.affect.value}"
        if a.toward is not None:
            t = a.toward[0] if a.toward[0] != "agent" else _ref(scn, a.toward[1])
            out += f" toward {t}"
        return out
    if a.kind == "expects":
        return f"assert {subject} expects {_ref(scn, a.object)} {format_number(a.value)}"
    if a.kind == "efu":
        return f"assert {subject} efu {format_number(a.value)}"
    if a.kind == "mood":
        return f"assert {subject} mood {a.label}"
    if a.kind == "attitude":
        return f"assert {subject} attitude {_ref(scn, a.object)} {a.label}"
    raise ValueError(f"unknown assertion kind: {a.kind}")


DEMO_TEXT = """\
agents 3
event 1 2 1
assert 2 feels delight
assert 2 feels like toward 1
event 2 1 1
assert 1 feels delight
event 3 1 0
assert 1 feels surprise
assert 1 attitude 3 neutral
event 3 2 -1
assert 2 feels fright
assert 2 feels dislike toward 3
assert 1 feels pity toward 2
assert 1 feels anger toward 3
event 2 3 -2
assert 3 feels fright
assert 3 feels dislike toward 2
assert 2 feels gloating toward 3
assert 2 feels pride
assert 1 feels pity toward 3
assert 1 feels anger toward 2
event 1 3 2
assert 3 feels delight
assert 1 feels happy_for toward 3
assert 1 feels pride
assert 2 feels envy toward 3
assert 2 feels anger toward 1
event 2 3 2
assert 2 feels remorse
assert 2 feels anger toward self
assert 2 feels envy toward 3
assert 1 feels happy_for toward 3
assert 1 feels gratitude toward 2
event 2 2 2
assert 2 feels delight
assert 2 feels like toward self
assert 2 expects 2 2
event 2 2 2
assert 2 feels satisfaction
event 2 2 1
assert 2 feels disappointment
assert 2 feels remorse
assert 3 efu 2
assert 3 mood good
event 3 3 -4
assert 3 feels fright
assert 3 expects 3 -4
assert 3 efu -2
assert 3 mood bad
event 3 3 -4
assert 3 feels fears_confirmed
event 3 3 -2
assert 3 feels relief
"""


def builtin_demo() -> Scenario:
    """The three-agent demonstration scenario with assertions for every
    affect and value its narrative names."""
    return parse(DEMO_TEXT)
