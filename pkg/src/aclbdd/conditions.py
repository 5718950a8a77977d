"""User-supplied constraints over packet fields.

Conditions narrow an analysis to part of the packet space.  The text
form is a comma-separated conjunction of atoms:

    Proto <- tcp, Dest4 <- 20, Port range 80 90, NOT(Src1 <- 10)

``<-`` assigns a single value (protocol names are allowed for Proto),
``range`` gives an inclusive interval, and ``NOT(...)`` negates a
whole sub-conjunction.  The same shapes exist as JSON objects for the
service API; both forms build the small AST below, which compiles to a
single boolean function over a layout's manager.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from .acl import DEFAULT_PROTOCOLS, ProtocolTable
from .bdd import AND, Ref
from .bitvec import Field, VariableLayout, parse_field


class ConditionError(Exception):
    """Malformed condition text/JSON, or a value outside the layout."""


@dataclass(frozen=True)
class FieldEq:
    field: Field
    value: int


@dataclass(frozen=True)
class FieldRange:
    field: Field
    lo: int
    hi: int


@dataclass(frozen=True)
class Not:
    item: "Condition"


@dataclass(frozen=True)
class All:
    items: tuple["Condition", ...]


Condition = Union[FieldEq, FieldRange, Not, All]

EVERYTHING = All(())

_ATOM_EQ = re.compile(r"^([A-Za-z][A-Za-z0-9 ]*?)\s*<-\s*(\S+)$")
_ATOM_RANGE = re.compile(
    r"^([A-Za-z][A-Za-z0-9 ]*?)\s+range\s*\(?\s*(\d+)\s*[,\s]\s*(\d+)\s*\)?$",
    re.IGNORECASE,
)


def _resolve_value(f: Field, raw: str, protocols: ProtocolTable) -> int:
    if raw.lstrip("-").isdigit():
        value = int(raw)
        if value < 0:
            raise ConditionError(f"{f.value} cannot be negative")
        return value
    if f is Field.PROTO and raw.lower() in protocols:
        return protocols.number_of(raw.lower())
    raise ConditionError(f"cannot read {raw!r} as a value for {f.value}")


def _split_top(text: str) -> list[str]:
    """Split on commas that are not inside parentheses."""
    parts: list[str] = []
    depth = 0
    start = 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ConditionError("unbalanced ')'")
        elif ch == "," and depth == 0:
            parts.append(text[start:i])
            start = i + 1
    if depth != 0:
        raise ConditionError("unbalanced '('")
    parts.append(text[start:])
    return [p.strip() for p in parts if p.strip()]


def _parse_item(text: str, protocols: ProtocolTable) -> Condition:
    if text[:3].upper() == "NOT":
        inner = text[3:].strip()
        if not (inner.startswith("(") and inner.endswith(")")):
            raise ConditionError("NOT needs parentheses: NOT(...)")
        return Not(parse_condition(inner[1:-1], protocols))
    m = _ATOM_RANGE.match(text)
    if m:
        f = _parse_field(m.group(1))
        lo, hi = int(m.group(2)), int(m.group(3))
        if lo > hi:
            raise ConditionError(f"empty range {lo}..{hi} for {f.value}")
        return FieldRange(f, lo, hi)
    m = _ATOM_EQ.match(text)
    if m:
        f = _parse_field(m.group(1))
        return FieldEq(f, _resolve_value(f, m.group(2), protocols))
    raise ConditionError(f"cannot parse condition item {text!r}")


def _parse_field(token: str) -> Field:
    # Allow the rendered header form ("Src 1") as well as the bare name.
    try:
        return parse_field(token.replace(" ", ""))
    except ValueError as e:
        raise ConditionError(str(e)) from None


def parse_condition(
    text: str, protocols: ProtocolTable = DEFAULT_PROTOCOLS
) -> Condition:
    """Parse the text form. An empty string means "no constraint"."""
    items = [_parse_item(p, protocols) for p in _split_top(text)]
    if not items:
        return EVERYTHING
    if len(items) == 1:
        return items[0]
    return All(tuple(items))


def condition_from_json(
    obj, protocols: ProtocolTable = DEFAULT_PROTOCOLS
) -> Condition:
    """Build a condition from the service API's JSON shape.

    ``null`` means no constraint; a string is parsed as the text form;
    otherwise the object forms are ``{"field", "eq"}``, ``{"field",
    "lo", "hi"}``, ``{"not": ...}`` and ``{"all": [...]}``.
    """
    if obj is None:
        return EVERYTHING
    if isinstance(obj, str):
        return parse_condition(obj, protocols)
    if not isinstance(obj, dict):
        raise ConditionError("condition must be null, a string, or an object")
    if "not" in obj:
        return Not(condition_from_json(obj["not"], protocols))
    if "all" in obj:
        items = obj["all"]
        if not isinstance(items, list):
            raise ConditionError("'all' must hold a list")
        return All(tuple(condition_from_json(x, protocols) for x in items))
    try:
        f = _parse_field(str(obj["field"]))
    except KeyError:
        raise ConditionError("condition object needs a 'field'") from None
    if "eq" in obj:
        return FieldEq(f, _resolve_value(f, str(obj["eq"]), protocols))
    if "lo" in obj and "hi" in obj:
        lo, hi = int(obj["lo"]), int(obj["hi"])
        if lo > hi:
            raise ConditionError(f"empty range {lo}..{hi} for {f.value}")
        return FieldRange(f, lo, hi)
    raise ConditionError("condition object needs 'eq' or 'lo'/'hi'")


def condition_to_json(cond: Condition):
    if isinstance(cond, FieldEq):
        return {"field": cond.field.value, "eq": cond.value}
    if isinstance(cond, FieldRange):
        return {"field": cond.field.value, "lo": cond.lo, "hi": cond.hi}
    if isinstance(cond, Not):
        return {"not": condition_to_json(cond.item)}
    if isinstance(cond, All):
        return {"all": [condition_to_json(c) for c in cond.items]}
    raise TypeError(f"not a condition: {cond!r}")


def compile_condition(cond: Condition, layout: VariableLayout) -> Ref:
    """Compile a condition to one function over the layout's manager."""
    mgr = layout.manager
    if isinstance(cond, FieldEq):
        top = layout.max_value(cond.field)
        if cond.value > top:
            raise ConditionError(
                f"{cond.field.value} value {cond.value} exceeds field maximum {top}"
            )
        return layout.bitvec(cond.field).eq_const(cond.value)
    if isinstance(cond, FieldRange):
        top = layout.max_value(cond.field)
        if cond.hi > top:
            raise ConditionError(
                f"{cond.field.value} bound {cond.hi} exceeds field maximum {top}"
            )
        return layout.bitvec(cond.field).in_range(cond.lo, cond.hi)
    if isinstance(cond, Not):
        return mgr.neg(compile_condition(cond.item, layout))
    if isinstance(cond, All):
        acc = mgr.true
        for item in reversed(cond.items):
            acc = mgr.apply(AND, compile_condition(item, layout), acc)
        return acc
    raise TypeError(f"not a condition: {cond!r}")


def fixed_fields(cond: Condition) -> set[Field]:
    """Fields that a top-level conjunction pins to a single value.

    Used by table display to drop columns the user has already fixed;
    negations and ranges do not pin anything.
    """
    if isinstance(cond, FieldEq):
        return {cond.field}
    if isinstance(cond, All):
        out: set[Field] = set()
        for item in cond.items:
            out |= fixed_fields(item)
        return out
    return set()
