"""HTTP facade over the analysis library.

The service keeps named sessions, each owning one variable layout and
up to two loaded rule sets in slots ``old`` and ``new``.  Everything a
session holds lives in process memory; sessions idle past their
time-to-live are dropped lazily on the next request.  All handlers are
synchronous and take a per-session lock, so one session's requests are
serialized while distinct sessions proceed in parallel.

Errors use one shape throughout::

    {"code": "...", "message": "...", "line": 3}        # line optional
"""

from __future__ import annotations

import threading
import time
import uuid
from typing import Literal

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field as PydanticField

from .acl import AclFileError, parse_ruleset
from .analysis import diff, find_redundant, stats
from .bitvec import VariableLayout, parse_field
from .compiler import CompiledRuleSet, CompileError, compile_ruleset
from .conditions import ConditionError, compile_condition, condition_from_json
from .tables import (
    DEFAULT_ROW_BUDGET,
    RowBudgetExceeded,
    build_table,
    summary_table,
    table_to_json,
)

SLOTS = ("old", "new")


class ApiError(Exception):
    def __init__(
        self,
        status: int,
        code: str,
        message: str,
        line: int | None = None,
        errors: list[dict] | None = None,
    ):
        self.status = status
        self.body: dict = {"code": code, "message": message}
        if line is not None:
            self.body["line"] = line
        if errors:
            self.body["errors"] = errors
        super().__init__(message)


class _Session:
    def __init__(self, sid: str, layout: VariableLayout):
        self.id = sid
        self.layout = layout
        self.slots: dict[str, CompiledRuleSet] = {}
        self.lock = threading.Lock()
        self.touched = time.monotonic()


class _Registry:
    def __init__(self, ttl: float):
        self.ttl = ttl
        self._lock = threading.Lock()
        self._sessions: dict[str, _Session] = {}

    def create(self, layout: VariableLayout) -> _Session:
        session = _Session(uuid.uuid4().hex[:12], layout)
        with self._lock:
            self._sweep()
            self._sessions[session.id] = session
        return session

    def get(self, sid: str) -> _Session:
        with self._lock:
            self._sweep()
            session = self._sessions.get(sid)
            if session is None:
                raise ApiError(404, "unknown_session", f"no session {sid!r}")
            session.touched = time.monotonic()
            return session

    def _sweep(self) -> None:
        now = time.monotonic()
        dead = [s for s, v in self._sessions.items() if now - v.touched > self.ttl]
        for s in dead:
            del self._sessions[s]


class CreateSessionRequest(BaseModel):
    widths: tuple[int, int, int] | None = None
    order: list[str] | None = None


class LoadRequest(BaseModel):
    text: str


class QueryRequest(BaseModel):
    slot: Literal["old", "new"] = "new"
    where: object = None
    order: list[str] | None = None
    summary: list[str] | None = None
    not_allowed: bool = PydanticField(default=False)
    budget: int | None = None


class DiffRequest(BaseModel):
    where: object = None
    order: list[str] | None = None
    budget: int | None = None


def create_app(
    default_widths: tuple[int, int, int] | None = None,
    session_ttl: float = 3600.0,
    row_budget: int = DEFAULT_ROW_BUDGET,
) -> FastAPI:
    app = FastAPI(title="aclbdd", version="0.1.0")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    registry = _Registry(session_ttl)
    app.state.registry = registry

    @app.exception_handler(ApiError)
    async def on_api_error(request: Request, exc: ApiError):
        return JSONResponse(status_code=exc.status, content=exc.body)

    def fields_of(names: list[str] | None):
        if not names:
            return None
        try:
            return [parse_field(n) for n in names]
        except ValueError as e:
            raise ApiError(422, "bad_field", str(e)) from None

    def slot_of(session: _Session, slot: str) -> CompiledRuleSet:
        if slot not in SLOTS:
            raise ApiError(422, "unknown_slot", f"slot must be one of {SLOTS}")
        compiled = session.slots.get(slot)
        if compiled is None:
            raise ApiError(409, "empty_slot", f"no rule set loaded in slot {slot!r}")
        return compiled

    def condition_for(session: _Session, raw):
        try:
            cond = condition_from_json(raw)
            return compile_condition(cond, session.layout)
        except ConditionError as e:
            raise ApiError(422, "bad_condition", str(e)) from None

    @app.post("/sessions")
    def create_session(req: CreateSessionRequest):
        widths = req.widths or default_widths or (8, 16, 3)
        try:
            order = (
                [parse_field(n) for n in req.order] if req.order else None
            )
            layout = VariableLayout(
                w_seg=widths[0], w_port=widths[1], w_proto=widths[2], field_order=order
            )
        except ValueError as e:
            raise ApiError(422, "bad_layout", str(e)) from None
        session = registry.create(layout)
        return {
            "session": session.id,
            "variables": layout.num_vars,
            "widths": list(layout.widths),
        }

    @app.put("/sessions/{sid}/rulesets/{slot}")
    def load_slot(sid: str, slot: str, req: LoadRequest):
        session = registry.get(sid)
        if slot not in SLOTS:
            raise ApiError(422, "unknown_slot", f"slot must be one of {SLOTS}")
        try:
            ruleset = parse_ruleset(req.text, origin=slot)
        except AclFileError as e:
            first = e.errors[0]
            raise ApiError(
                422,
                "parse_error",
                f"{len(e.errors)} bad line(s); first: {first.message}",
                line=first.line,
                errors=[{"line": err.line, "message": err.message} for err in e.errors],
            ) from None
        with session.lock:
            start = time.perf_counter()
            try:
                compiled = compile_ruleset(ruleset, session.layout)
            except CompileError as e:
                raise ApiError(422, "compile_error", e.message, line=e.line) from None
            elapsed = time.perf_counter() - start
            session.slots[slot] = compiled
            return {
                "session": session.id,
                "slot": slot,
                "rules": len(ruleset),
                "variables": session.layout.num_vars,
                "node_count": session.layout.manager.node_count(compiled.accept),
                "compile_seconds": round(elapsed, 6),
            }

    @app.post("/sessions/{sid}/query")
    def query(sid: str, req: QueryRequest):
        session = registry.get(sid)
        with session.lock:
            compiled = slot_of(session, req.slot)
            layout = session.layout
            f = compiled.accept
            if req.not_allowed:
                f = ~f
            if req.where is not None:
                f = f & condition_for(session, req.where)
            budget = req.budget or row_budget
            start = time.perf_counter()
            try:
                if req.summary:
                    table = summary_table(
                        f, layout, fields_of(req.summary), budget=budget
                    )
                else:
                    table = build_table(
                        f, layout, order=fields_of(req.order), budget=budget
                    )
            except RowBudgetExceeded as e:
                raise ApiError(422, "row_budget", str(e)) from None
            elapsed = time.perf_counter() - start
            return {
                "slot": req.slot,
                "table": table_to_json(table),
                "rows": len(table),
                "elapsed_seconds": round(elapsed, 6),
            }

    @app.post("/sessions/{sid}/diff")
    def diff_slots(sid: str, req: DiffRequest):
        session = registry.get(sid)
        with session.lock:
            old = slot_of(session, "old")
            new = slot_of(session, "new")
            result = diff(old, new)
            where = (
                condition_for(session, req.where) if req.where is not None else None
            )
            order = fields_of(req.order)
            budget = req.budget or row_budget
            out = {"equivalent": result.equivalent}
            try:
                for name, f in (
                    ("now_allowed", result.now_allowed),
                    ("now_denied", result.now_denied),
                ):
                    if where is not None:
                        f = f & where
                    out[name] = table_to_json(
                        build_table(f, session.layout, order=order, budget=budget)
                    )
            except RowBudgetExceeded as e:
                raise ApiError(422, "row_budget", str(e)) from None
            return out

    @app.get("/sessions/{sid}/redundant")
    def redundant(sid: str, slot: str = "new"):
        session = registry.get(sid)
        with session.lock:
            compiled = slot_of(session, slot)
            found = find_redundant(compiled.source, session.layout)
            return {
                "slot": slot,
                "indexes": found,
                "rules": [str(compiled.source[i]) for i in found],
                "lines": [compiled.source[i].line for i in found],
            }

    @app.get("/sessions/{sid}/stats")
    def slot_stats(sid: str, slot: str = "new"):
        session = registry.get(sid)
        with session.lock:
            compiled = slot_of(session, slot)
            numbers = stats(compiled)
            numbers["packets"] = str(numbers["packets"])
            numbers["slot"] = slot
            return numbers

    return app
