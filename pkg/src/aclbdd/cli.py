"""Command-line front end.

Exit codes are part of the interface:

    0   success (and, for analyses, "nothing to report")
    1   findings: sets differ, redundant rules exist, packet denied
    2   bad input: unreadable file, syntax error, bad condition/packet
    3   table row budget exceeded

``--format json`` switches every command from text to line-delimited
JSON records on stdout, one object per line.
"""

from __future__ import annotations

import argparse
import json
import sys

from .acl import AclFileError, AclSyntaxError, load_ruleset
from .analysis import (
    diff,
    eval_packet,
    find_redundant,
    load_and_compile,
    parse_packet,
    stats,
)
from .bitvec import Field, VariableLayout, parse_field
from .compiler import CompiledRuleSet, CompileError, compile_ruleset
from .conditions import ConditionError, compile_condition, parse_condition
from .tables import (
    DEFAULT_ROW_BUDGET,
    RowBudgetExceeded,
    Table,
    build_table,
    iter_records,
    render_text,
    summary_table,
)

EXIT_OK = 0
EXIT_FINDINGS = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3


def _fail(message: str) -> "SystemExit":
    print(f"error: {message}", file=sys.stderr)
    return SystemExit(EXIT_INPUT)


def _parse_widths(text: str) -> tuple[int, int, int]:
    parts = text.split(",")
    if len(parts) != 3:
        raise _fail("--widths takes SEG,PORT,PROTO, e.g. 8,16,3")
    try:
        seg, port, proto = (int(p) for p in parts)
    except ValueError:
        raise _fail("--widths values must be integers") from None
    return seg, port, proto


def _parse_fields(text: str) -> list[Field]:
    try:
        return [parse_field(t) for t in text.split(",") if t.strip()]
    except ValueError as e:
        raise _fail(str(e)) from None


def _layout(args) -> VariableLayout:
    if args.widths:
        seg, port, proto = _parse_widths(args.widths)
        try:
            return VariableLayout(w_seg=seg, w_port=port, w_proto=proto)
        except ValueError as e:
            raise _fail(str(e)) from None
    return VariableLayout()


def _compile_file(path: str, layout: VariableLayout) -> CompiledRuleSet:
    try:
        ruleset = load_ruleset(path)
    except OSError as e:
        raise _fail(f"cannot read {path}: {e.strerror}") from None
    except AclFileError as e:
        for err in e.errors:
            print(f"{path}:{err.line}: {err.message}", file=sys.stderr)
        raise SystemExit(EXIT_INPUT) from None
    try:
        return compile_ruleset(ruleset, layout)
    except CompileError as e:
        print(f"{path}:{e.line}: {e.message}", file=sys.stderr)
        raise SystemExit(EXIT_INPUT) from None


def _emit_table(table: Table, args, name: str | None = None) -> None:
    if args.format == "json":
        for rec in iter_records(table, name=name):
            print(json.dumps(rec))
    else:
        print(render_text(table))


def _table_for(compiled: CompiledRuleSet, args) -> Table:
    layout = compiled.layout
    f = compiled.accept
    if getattr(args, "not_allowed", False):
        f = ~f
    if args.where:
        try:
            cond = parse_condition(args.where)
            f = f & compile_condition(cond, layout)
        except ConditionError as e:
            raise _fail(str(e)) from None
    if getattr(args, "summary", None):
        return summary_table(f, layout, _parse_fields(args.summary), budget=args.row_budget)
    order = _parse_fields(args.order) if args.order else None
    return build_table(f, layout, order=order, budget=args.row_budget)


def cmd_show(args) -> int:
    compiled = _compile_file(args.file, _layout(args))
    _emit_table(_table_for(compiled, args), args, name="conditions")
    return EXIT_OK


def cmd_diff(args) -> int:
    layout = _layout(args)
    old = _compile_file(args.old, layout)
    new = _compile_file(args.new, layout)
    result = diff(old, new)
    where = None
    if args.where:
        try:
            where = compile_condition(parse_condition(args.where), layout)
        except ConditionError as e:
            raise _fail(str(e)) from None
    order = _parse_fields(args.order) if args.order else None
    sides = []
    for name, f in (("now_allowed", result.now_allowed), ("now_denied", result.now_denied)):
        if where is not None:
            f = f & where
        sides.append((name, build_table(f, layout, order=order, budget=args.row_budget)))
    if args.format == "json":
        print(json.dumps({"record": "diff", "equivalent": result.equivalent}))
        for name, table in sides:
            for rec in iter_records(table, name=name):
                print(json.dumps(rec))
    else:
        if result.equivalent:
            print("rule sets are equivalent")
        for label, (name, table) in zip(("newly allowed", "newly denied"), sides):
            print(f"== {label} ==")
            print(render_text(table))
    return EXIT_OK if result.equivalent else EXIT_FINDINGS


def cmd_redundant(args) -> int:
    compiled = _compile_file(args.file, _layout(args))
    found = find_redundant(compiled.source, compiled.layout)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "record": "redundant",
                    "indexes": found,
                    "lines": [compiled.source[i].line for i in found],
                }
            )
        )
    else:
        if not found:
            print("no redundant rules")
        for i in found:
            rule = compiled.source[i]
            print(f"rule {i} (line {rule.line}): {rule}")
    return EXIT_FINDINGS if found else EXIT_OK


def cmd_eval(args) -> int:
    compiled = _compile_file(args.file, _layout(args))
    try:
        packet = parse_packet(args.packet)
        result = eval_packet(compiled, packet)
    except ValueError as e:
        raise _fail(str(e)) from None
    if args.format == "json":
        print(
            json.dumps(
                {
                    "record": "eval",
                    "permitted": result.permitted,
                    "matched": result.matched,
                    "line": result.rule.line if result.rule else None,
                }
            )
        )
    else:
        if result.matched is None:
            print("deny (implicit deny, no rule matched)")
        else:
            verdict = "permit" if result.permitted else "deny"
            print(f"{verdict} (rule {result.matched}, line {result.rule.line})")
    return EXIT_OK if result.permitted else EXIT_FINDINGS


def cmd_stats(args) -> int:
    layout = _layout(args)
    try:
        with open(args.file, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise _fail(f"cannot read {args.file}: {e.strerror}") from None
    try:
        compiled, elapsed = load_and_compile(text, layout, origin=args.file)
    except AclFileError as e:
        for err in e.errors:
            print(f"{args.file}:{err.line}: {err.message}", file=sys.stderr)
        return EXIT_INPUT
    except CompileError as e:
        print(f"{args.file}:{e.line}: {e.message}", file=sys.stderr)
        return EXIT_INPUT
    numbers = stats(compiled)
    if args.format == "json":
        out = dict(numbers, record="stats", packets=str(numbers["packets"]))
        out["compile_seconds"] = round(elapsed, 6)
        print(json.dumps(out))
    else:
        print(f"rules:        {numbers['rules']}")
        print(f"variables:    {numbers['variables']}")
        print(f"nodes:        {numbers['node_count']}")
        print(f"max depth:    {numbers['max_depth']}")
        print(f"packets:      {numbers['packets']}")
        print(f"compile time: {elapsed:.3f}s")
    return EXIT_OK


def cmd_graph(args) -> int:
    compiled = _compile_file(args.file, _layout(args))
    f = compiled.accept
    if args.where:
        try:
            f = f & compile_condition(parse_condition(args.where), compiled.layout)
        except ConditionError as e:
            raise _fail(str(e)) from None
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(compiled.layout.manager.to_dot(f))
            fh.write("\n")
        print(f"wrote {args.dot}")
    if args.out:
        from .viz import draw_diagram

        try:
            draw_diagram(f, args.out, title=args.file)
        except ValueError as e:
            raise _fail(str(e)) from None
        print(f"wrote {args.out}")
    if not args.dot and not args.out:
        print(compiled.layout.manager.to_dot(f))
    return EXIT_OK


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    widths = _parse_widths(args.widths) if args.widths else None
    app = create_app(default_widths=widths)
    uvicorn.run(app, host=args.host, port=args.port, log_level="info")
    return EXIT_OK


def _add_common(p: argparse.ArgumentParser, where: bool = True) -> None:
    p.add_argument("--widths", help="field widths as SEG,PORT,PROTO (default 8,16,3)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    if where:
        p.add_argument("--where", help='constraint, e.g. "Proto <- tcp, Port range 80 90"')
        p.add_argument("--order", help="comma-separated fields to show first")
        p.add_argument(
            "--row-budget",
            type=int,
            default=DEFAULT_ROW_BUDGET,
            help=f"maximum table rows (default {DEFAULT_ROW_BUDGET})",
        )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="aclbdd",
        description="Analyze firewall access lists as boolean functions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("show", help="tabulate the packets a rule set accepts")
    p.add_argument("file")
    _add_common(p)
    p.add_argument("--summary", help="project onto these fields only")
    p.add_argument(
        "--not-allowed",
        action="store_true",
        help="tabulate the rejected packets instead",
    )
    p.set_defaults(func=cmd_show)

    p = sub.add_parser("diff", help="compare two rule sets")
    p.add_argument("old")
    p.add_argument("new")
    _add_common(p)
    p.set_defaults(func=cmd_diff)

    p = sub.add_parser("redundant", help="find rules that never matter")
    p.add_argument("file")
    _add_common(p, where=False)
    p.set_defaults(func=cmd_redundant)

    p = sub.add_parser("eval", help="decide one packet")
    p.add_argument("file")
    p.add_argument("packet", help='packet as "PROTO SRC DST [PORT]"')
    _add_common(p, where=False)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("stats", help="size and coverage numbers")
    p.add_argument("file")
    _add_common(p, where=False)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("graph", help="export the accept diagram")
    p.add_argument("file")
    _add_common(p, where=False)
    p.add_argument("--where", help="constrain before drawing")
    p.add_argument("--dot", metavar="PATH", help="write Graphviz source here")
    p.add_argument("--out", metavar="PATH", help="write a rendered figure here (png/pdf/svg)")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--widths", help="default field widths for new sessions")
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SystemExit:
        raise
    except RowBudgetExceeded as e:
        if getattr(args, "format", "text") == "json":
            print(json.dumps({"record": "error", "code": "row_budget", "message": str(e)}))
        else:
            print(f"error: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except BrokenPipeError:
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
