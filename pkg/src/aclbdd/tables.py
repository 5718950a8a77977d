"""Interval tables: human-readable views of packet-space functions.

A table row is one product of per-field intervals on which the
function is constantly true; the rows together cover its satisfying
set exactly.  Rows come out of a recursive partition: for the first
display column, split the field's domain into maximal runs of equal
cofactor, then recurse into each non-false cofactor for the remaining
columns.  Display column order is free and independent of the
variable order underneath.

Cells that repeat the previous row's leading cells are flagged
``elide`` so renderers can blank them; because sibling intervals are
disjoint and ascending, an equal prefix really is the same branch of
the partition, never a coincidence.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, replace

from .bdd import FALSE_HANDLE, TRUE_HANDLE, Ref
from .bitvec import FIELD_LABELS, Field, VariableLayout, parse_field

DEFAULT_ROW_BUDGET = 10_000


class RowBudgetExceeded(Exception):
    """The table would have more rows than the caller allowed."""

    def __init__(self, budget: int):
        self.budget = budget
        super().__init__(
            f"table exceeds {budget} rows; constrain the query, summarize "
            "fewer fields, or raise the row budget"
        )


@dataclass(frozen=True)
class Cell:
    lo: int
    hi: int
    elide: bool = False

    def span(self) -> tuple[int, int]:
        return (self.lo, self.hi)


@dataclass(frozen=True)
class Table:
    columns: tuple[Field, ...]
    maxima: tuple[int, ...]
    rows: tuple[tuple[Cell, ...], ...]

    def __len__(self) -> int:
        return len(self.rows)


def display_columns(
    layout: VariableLayout, front: Sequence[Field] | None = None
) -> tuple[Field, ...]:
    """Promote ``front`` fields, keeping the rest in layout order."""
    front = tuple(front or ())
    if len(set(front)) != len(front):
        raise ValueError("duplicate display field")
    return front + tuple(layout.fields_below(front))


def _field_runs(layout: VariableLayout, u: int, bits: tuple[int, ...]):
    """Maximal runs of equal cofactor over one field's domain.

    Returns ``[(length, handle), ...]`` covering ``0 .. 2**len(bits)``
    in order.  Adjacent runs always differ, including across the
    halves of the recursion, so the partition is as coarse as the
    function allows.
    """
    mgr = layout.manager

    def walk(u: int, depth: int) -> list[list[int]]:
        if depth == len(bits):
            return [[1, u]]
        var = bits[depth]
        left = walk(mgr._restrict1(u, var, 0), depth + 1)
        right = walk(mgr._restrict1(u, var, 1), depth + 1)
        if left[-1][1] == right[0][1]:
            left[-1][0] += right[0][0]
            right = right[1:]
        return left + right

    return walk(u, 0)


def build_table(
    f: Ref,
    layout: VariableLayout,
    order: Sequence[Field] | None = None,
    budget: int = DEFAULT_ROW_BUDGET,
) -> Table:
    """Tabulate ``f`` over all ten fields, ``order`` promoted first."""
    return _tabulate(f, layout, display_columns(layout, order), budget)


def summary_table(
    f: Ref,
    layout: VariableLayout,
    columns: Sequence[Field],
    budget: int = DEFAULT_ROW_BUDGET,
) -> Table:
    """Tabulate the projection of ``f`` onto ``columns``.

    Every field not listed is existentially quantified away first, so
    a row means "some value of the hidden fields is accepted here".
    """
    cols = tuple(columns)
    if not cols:
        raise ValueError("summary needs at least one column")
    if len(set(cols)) != len(cols):
        raise ValueError("duplicate summary column")
    hidden: list[int] = []
    for g in layout.fields_below(cols):
        hidden.extend(layout.var_ids(g))
    return _tabulate(layout.manager.exists(f, hidden), layout, cols, budget)


def _tabulate(
    f: Ref, layout: VariableLayout, cols: tuple[Field, ...], budget: int
) -> Table:
    if budget < 1:
        raise ValueError("row budget must be positive")
    mgr = layout.manager
    root = mgr._handle(f)
    rows: list[tuple[Cell, ...]] = []
    prefix: list[Cell] = []

    def expand(u: int, depth: int) -> None:
        if depth == len(cols):
            # Everything tabulated has been restricted away; a summary
            # table quantified the rest out beforehand.
            assert u == TRUE_HANDLE, "function depends on a hidden field"
            if len(rows) >= budget:
                raise RowBudgetExceeded(budget)
            rows.append(tuple(prefix))
            return
        bits = layout.var_ids(cols[depth])
        pos = 0
        for length, child in _field_runs(layout, u, bits):
            if child != FALSE_HANDLE:
                prefix.append(Cell(pos, pos + length - 1))
                expand(child, depth + 1)
                prefix.pop()
            pos += length

    if root != FALSE_HANDLE:
        expand(root, 0)
    return Table(cols, tuple(layout.max_value(c) for c in cols), _mark_elided(rows))


def _mark_elided(
    rows: list[tuple[Cell, ...]],
) -> tuple[tuple[Cell, ...], ...]:
    out: list[tuple[Cell, ...]] = []
    prev: tuple[Cell, ...] | None = None
    for row in rows:
        if prev is None:
            out.append(row)
        else:
            marked = []
            still = True
            for cell, above in zip(row, prev):
                still = still and cell.span() == above.span()
                marked.append(replace(cell, elide=still) if still else cell)
            out.append(tuple(marked))
        prev = row
    return tuple(out)


def reconstruct(table: Table, layout: VariableLayout) -> Ref:
    """Union of all row boxes, for checking a table against its source."""
    mgr = layout.manager
    total = mgr.false
    for row in table.rows:
        box = mgr.true
        for f, cell in zip(table.columns, row):
            box = box & layout.bitvec(f).in_range(cell.lo, cell.hi)
        total = total | box
    return total


# -- rendering ----------------------------------------------------------


def _cell_text(cell: Cell) -> str:
    if cell.elide:
        return ""
    if cell.lo == cell.hi:
        return str(cell.lo)
    return f"{cell.lo}--{cell.hi}"


def render_text(table: Table) -> str:
    """Fixed-width text table; elided cells come out blank."""
    headers = [FIELD_LABELS[c] for c in table.columns]
    body = [[_cell_text(c) for c in row] for row in table.rows]
    widths = [
        max(len(h), *(len(r[i]) for r in body)) if body else len(h)
        for i, h in enumerate(headers)
    ]
    lines = [
        "  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip(),
        "  ".join("-" * w for w in widths),
    ]
    for r in body:
        lines.append("  ".join(t.ljust(w) for t, w in zip(r, widths)).rstrip())
    return "\n".join(lines)


def table_to_json(table: Table) -> dict:
    return {
        "columns": [c.value for c in table.columns],
        "maxima": list(table.maxima),
        "rows": [
            [{"lo": c.lo, "hi": c.hi, "elide": c.elide} for c in row]
            for row in table.rows
        ],
    }


def iter_records(table: Table, name: str | None = None) -> Iterator[dict]:
    """Line-delimited form: one header record, then one per row."""
    head = {
        "record": "table",
        "columns": [c.value for c in table.columns],
        "maxima": list(table.maxima),
        "rows": len(table.rows),
    }
    if name is not None:
        head["name"] = name
    yield head
    for row in table.rows:
        yield {
            "record": "row",
            "cells": [{"lo": c.lo, "hi": c.hi, "elide": c.elide} for c in row],
        }


def table_from_json(obj: dict) -> Table:
    cols = tuple(parse_field(c) for c in obj["columns"])
    rows = tuple(
        tuple(Cell(c["lo"], c["hi"], bool(c.get("elide", False))) for c in row)
        for row in obj["rows"]
    )
    return Table(cols, tuple(int(m) for m in obj["maxima"]), rows)


def table_from_records(records: Iterable[dict]) -> Table:
    head: dict | None = None
    rows: list[list[dict]] = []
    for rec in records:
        kind = rec.get("record")
        if kind == "table":
            if head is not None:
                raise ValueError("more than one table header")
            head = rec
        elif kind == "row":
            rows.append(rec["cells"])
    if head is None:
        raise ValueError("no table header record")
    return table_from_json({**head, "rows": rows})
