"""
Session file parser

A session is a sequence of ``;``-terminated statements::

    ring R = Q[x,y,z] / (x*z);
    ideal a = (x);
    assume complete; assume cm;
    task invariants;
    task cech box=3 powers=1..3;

``#`` starts a comment running to the end of the line.
"""

import re
from typing import Iterator, List, Optional, Tuple

from app.config import settings
from app.models.ring import FieldSpec, MonomialOrder, PolyRing, render_polynomial
from app.schemas.invariants import AssumptionFlags
from app.schemas.session import Session, Task, TaskKind
from app.services.parsing import parse_generators
from app.utils.exceptions import FieldSpecError, SessionError

_NAME = r"[A-Za-z_][A-Za-z0-9_]*"
_RING = re.compile(
    rf"\s*ring\s+(?P<name>{_NAME})\s*=\s*(?P<field>\w+)\s*\[(?P<vars>[^\]]*)\]\s*"
    r"(?:/\s*\((?P<defining>.*)\)\s*)?$",
    re.DOTALL,
)
_IDEAL = re.compile(rf"\s*ideal\s+(?P<name>{_NAME})\s*=\s*\((?P<gens>.*)\)\s*$", re.DOTALL)
_ASSUME = re.compile(r"\s*assume\s+(?P<flag>\w+)\s*$")
_TASK = re.compile(r"\s*task\s+(?P<kind>\w+)(?P<args>.*)$", re.DOTALL)
_CECH_ARGS = re.compile(
    r"\s*(?:box=(?P<box>-?\d+(?:\.\.-?\d+)?))?\s*(?:powers=(?P<lo>\d+)\.\.(?P<hi>\d+))?\s*$"
)
_TORIC_ARGS = re.compile(r"\s*weights=(?P<weights>.*)$", re.DOTALL)
_WEIGHT = re.compile(r"\s*\(\s*(\d+(?:\s*,\s*\d+)*)\s*\)\s*")

ASSUMPTIONS = {
    "complete": "complete_asserted",
    "cm": "cohen_macaulay_asserted",
    "regular": "regular_asserted",
    "field_q": "field_modeled_as_q",
}


def locate(text: str, position: int) -> Tuple[int, int]:
    """1-based (line, column) of an offset"""
    line = text.count("\n", 0, position) + 1
    column = position - (text.rfind("\n", 0, position) + 1) + 1
    return line, column


def _error(message: str, text: str, position: int) -> SessionError:
    line, column = locate(text, position)
    return SessionError(message, position, line, column)


def _strip_comments(text: str) -> str:
    """Blank out comments, keeping offsets"""
    return re.sub(r"#[^\n]*", lambda m: " " * len(m.group(0)), text)


def _statements(text: str) -> Iterator[Tuple[str, int]]:
    start = 0
    for match in re.finditer(";", text):
        yield text[start:match.start()], start
        start = match.end()
    if text[start:].strip():
        raise _error("missing ';' after statement", text, len(text.rstrip()))


def _leading(statement: str) -> int:
    return len(statement) - len(statement.lstrip())


class _SessionBuilder:
    def __init__(self, source: str):
        self.source = source
        self.ring: Optional[PolyRing] = None
        self.ring_name: Optional[str] = None
        self.defining: List[str] = []
        self.ideal_name: Optional[str] = None
        self.ideal: Optional[List[str]] = None
        self.flags = {}
        self.tasks: List[Task] = []

    def statement(self, statement: str, offset: int) -> None:
        keyword = statement.split(None, 1)[0]
        at = offset + _leading(statement)
        handler = {
            "ring": self.ring_statement,
            "ideal": self.ideal_statement,
            "assume": self.assume_statement,
            "task": self.task_statement,
        }.get(keyword)
        if handler is None:
            raise _error(f"unknown statement '{keyword}'", self.source, at)
        handler(statement, offset, at)

    def ring_statement(self, statement: str, offset: int, at: int) -> None:
        if self.ring is not None:
            raise _error("a session declares exactly one ring", self.source, at)
        match = _RING.match(statement)
        if not match:
            raise _error("expected 'ring <name> = <field>[v1,...,vn] ( / (g1,...,gk) )?'", self.source, at)
        try:
            field = FieldSpec.parse(match.group("field"))
        except FieldSpecError as exc:
            raise _error(exc.message, self.source, offset + match.start("field")) from exc
        names = [v.strip() for v in match.group("vars").split(",")]
        if any(not re.fullmatch(_NAME, v) for v in names):
            raise _error(f"bad variable list '{match.group('vars').strip()}'", self.source, offset + match.start("vars"))
        try:
            ring = PolyRing(tuple(names), field, MonomialOrder.parse(settings.DEFAULT_ORDER))
        except ValueError as exc:
            raise _error(str(exc), self.source, offset + match.start("vars")) from exc
        self.ring = ring
        self.ring_name = match.group("name")
        if match.group("defining") is not None:
            polys = parse_generators(match.group("defining"), ring, offset + match.start("defining"), self.source)
            self.defining = [render_polynomial(g, ring) for g in polys]

    def ideal_statement(self, statement: str, offset: int, at: int) -> None:
        if self.ring is None:
            raise _error("ideal declared before any ring", self.source, at)
        if self.ideal is not None:
            raise _error("a session declares exactly one ideal", self.source, at)
        match = _IDEAL.match(statement)
        if not match:
            raise _error("expected 'ideal <name> = (g1,...,gk)'", self.source, at)
        polys = parse_generators(match.group("gens"), self.ring, offset + match.start("gens"), self.source)
        self.ideal_name = match.group("name")
        self.ideal = [render_polynomial(g, self.ring) for g in polys]

    def assume_statement(self, statement: str, offset: int, at: int) -> None:
        match = _ASSUME.match(statement)
        if not match or match.group("flag") not in ASSUMPTIONS:
            raise _error(f"expected 'assume' followed by one of {sorted(ASSUMPTIONS)}", self.source, at)
        self.flags[ASSUMPTIONS[match.group("flag")]] = True

    def task_statement(self, statement: str, offset: int, at: int) -> None:
        match = _TASK.match(statement)
        kind = match.group("kind") if match else ""
        args = match.group("args") if match else ""
        args_at = offset + match.start("args") if match else at
        if kind in (TaskKind.INVARIANTS.value, TaskKind.COROLLARIES.value):
            if args.strip():
                raise _error(f"task {kind} takes no arguments", self.source, args_at + _leading(args))
            self.tasks.append(Task(kind=kind))
        elif kind == TaskKind.CECH.value:
            self.tasks.append(self.cech_task(args, args_at))
        elif kind == TaskKind.TORIC.value:
            self.tasks.append(self.toric_task(args, args_at))
        else:
            raise _error(f"unknown task '{kind}'", self.source, at)

    def cech_task(self, args: str, at: int) -> Task:
        match = _CECH_ARGS.match(args)
        if not match:
            raise _error("expected 'task cech [box=<B>|box=<lo>..<hi>] [powers=<a>..<b>]'", self.source, at)
        box = None
        if match.group("box"):
            text = match.group("box")
            if ".." in text:
                lo, hi = (int(v) for v in text.split(".."))
            else:
                radius = int(text)
                if radius < 0:
                    raise _error("box radius must be nonnegative", self.source, at + match.start("box"))
                lo, hi = -radius, radius
            if lo > hi:
                raise _error(f"empty box {lo}..{hi}", self.source, at + match.start("box"))
            box = (lo, hi)
        powers = None
        if match.group("lo"):
            powers = (int(match.group("lo")), int(match.group("hi")))
            if not 1 <= powers[0] <= powers[1]:
                raise _error("powers must satisfy 1 <= a <= b", self.source, at + match.start("lo"))
        return Task(kind=TaskKind.CECH, box=box, powers=powers)

    def toric_task(self, args: str, at: int) -> Task:
        match = _TORIC_ARGS.match(args)
        if not match:
            raise _error("expected 'task toric weights=(...),...'", self.source, at)
        text = match.group("weights")
        weights = []
        position = 0
        while True:
            piece = _WEIGHT.match(text, position)
            if not piece:
                raise _error("malformed weight list", self.source, at + match.start("weights") + position)
            weights.append([int(v) for v in piece.group(1).split(",")])
            position = piece.end()
            if position == len(text):
                break
            if text[position] != ",":
                raise _error("expected ',' between weights", self.source, at + match.start("weights") + position)
            position += 1
        return Task(kind=TaskKind.TORIC, weights=weights)

    def build(self) -> Session:
        end = len(self.source)
        if self.ring is None:
            raise _error("missing ring declaration", self.source, end)
        if self.ideal is None:
            raise _error("missing ideal declaration", self.source, end)
        return Session(
            ring_name=self.ring_name,
            field=self.ring.field.label,
            variables=list(self.ring.variables),
            defining=self.defining,
            ideal_name=self.ideal_name,
            ideal=self.ideal,
            assumptions=AssumptionFlags(**self.flags),
            tasks=self.tasks,
        )


def parse_session(text: str) -> Session:
    """Parse session text; every error carries line and column"""
    source = _strip_comments(text)
    builder = _SessionBuilder(source)
    for statement, offset in _statements(source):
        if not statement.strip():
            continue
        builder.statement(statement, offset)
    return builder.build()
