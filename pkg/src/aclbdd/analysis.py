"""Whole-rule-set analyses: evaluation, comparison, redundancy.

Everything here works on :class:`~aclbdd.compiler.CompiledRuleSet`
values.  Packet evaluation deliberately runs twice, once down the
diagram and once as a first-match scan over the original rules, and
treats any disagreement as an internal fault; the two routes share no
code, which is the point.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .acl import DEFAULT_PROTOCOLS, Action, ProtocolTable, Rule, RuleSet
from .bdd import Ref
from .bitvec import DST_FIELDS, SRC_FIELDS, Field, VariableLayout
from .compiler import CompiledRuleSet, compile_rule, compile_ruleset
from .conditions import Condition, compile_condition


class SelfCheckError(Exception):
    """The diagram walk and the rule scan disagreed on a packet."""


@dataclass(frozen=True)
class Packet:
    proto: int
    src: tuple[int, int, int, int]
    dst: tuple[int, int, int, int]
    port: int = 0

    def field_values(self) -> dict[Field, int]:
        out = {Field.PROTO: self.proto, Field.PORT: self.port}
        out.update(zip(SRC_FIELDS, self.src))
        out.update(zip(DST_FIELDS, self.dst))
        return out


def parse_packet(text: str, protocols: ProtocolTable = DEFAULT_PROTOCOLS) -> Packet:
    """Read ``PROTO SRC DST [PORT]`` with dotted-quad addresses."""
    tokens = text.split()
    if len(tokens) not in (3, 4):
        raise ValueError("packet must be: PROTO A.B.C.D A.B.C.D [PORT]")
    if tokens[0].isdigit():
        proto = int(tokens[0])
    elif tokens[0] in protocols:
        proto = protocols.number_of(tokens[0])
    else:
        raise ValueError(f"unknown protocol {tokens[0]!r}")

    def quad(tok: str) -> tuple[int, int, int, int]:
        parts = tok.split(".")
        if len(parts) != 4 or not all(p.isdigit() for p in parts):
            raise ValueError(f"bad address {tok!r}")
        vals = tuple(int(p) for p in parts)
        if any(v > 255 for v in vals):
            raise ValueError(f"address octet out of range in {tok!r}")
        return vals  # type: ignore[return-value]

    port = 0
    if len(tokens) == 4:
        if not tokens[3].isdigit():
            raise ValueError(f"bad port {tokens[3]!r}")
        port = int(tokens[3])
    return Packet(proto, quad(tokens[1]), quad(tokens[2]), port)


def rule_matches(rule: Rule, packet: Packet) -> bool:
    """Plain-integer match test; the scan half of the dual route."""
    if packet.proto != rule.proto_num:
        return False
    for value, addr, mask in zip(packet.src, rule.src.addr, rule.src.mask):
        if (value | mask) != (addr | mask):
            return False
    for value, addr, mask in zip(packet.dst, rule.dst.addr, rule.dst.mask):
        if (value | mask) != (addr | mask):
            return False
    if rule.port is not None and not rule.port.lo <= packet.port <= rule.port.hi:
        return False
    return True


def first_match(ruleset: RuleSet, packet: Packet) -> tuple[bool, int | None]:
    """First-match verdict and the 0-based index of the deciding rule.

    ``(False, None)`` is the implicit deny at the end of every list.
    """
    for i, rule in enumerate(ruleset):
        if rule_matches(rule, packet):
            return rule.action is Action.PERMIT, i
    return False, None


@dataclass(frozen=True)
class EvalResult:
    permitted: bool
    matched: int | None
    rule: Rule | None


def eval_packet(compiled: CompiledRuleSet, packet: Packet) -> EvalResult:
    """Decide one packet, cross-checking the diagram against the rules."""
    layout = compiled.layout
    values = packet.field_values()
    for f, value in values.items():
        top = layout.max_value(f)
        if not 0 <= value <= top:
            raise ValueError(f"{f.value} value {value} outside 0..{top}")
    via_diagram = layout.manager.eval(compiled.accept, layout.assignment(values))
    via_scan, matched = first_match(compiled.source, packet)
    if via_diagram != via_scan:
        raise SelfCheckError(
            f"diagram says {via_diagram}, rule scan says {via_scan} for {packet}"
        )
    rule = compiled.source[matched] if matched is not None else None
    return EvalResult(via_diagram, matched, rule)


@dataclass(frozen=True)
class DiffResult:
    """What changed between an old and a new rule set."""

    now_allowed: Ref
    now_denied: Ref

    @property
    def equivalent(self) -> bool:
        mgr = self.now_allowed.manager
        return self.now_allowed == mgr.false and self.now_denied == mgr.false


def diff(old: CompiledRuleSet, new: CompiledRuleSet) -> DiffResult:
    """Packets newly allowed and newly denied by ``new`` versus ``old``."""
    if old.layout is not new.layout:
        raise ValueError("rule sets must be compiled against one shared layout")
    mgr = old.layout.manager
    return DiffResult(
        now_allowed=new.accept & mgr.neg(old.accept),
        now_denied=old.accept & mgr.neg(new.accept),
    )


def instantiate(cond: Condition | Ref, f: Ref, layout: VariableLayout) -> Ref:
    """Narrow a function to the packets satisfying a condition."""
    fixed = cond if isinstance(cond, Ref) else compile_condition(cond, layout)
    return fixed & f


def find_redundant(ruleset: RuleSet, layout: VariableLayout) -> list[int]:
    """0-based indexes of rules that never influence any verdict.

    A rule is reported when dropping it (together with every redundant
    rule found after it) leaves the accept function untouched, so
    removing all reported rules at once is always safe.  Scanning from
    the bottom up means the later copy of a duplicated rule is the one
    reported.
    """
    conds = [compile_rule(r, layout) for r in ruleset]
    mgr = layout.manager

    def fold(keep: list[int]) -> Ref:
        acc = mgr.false
        for i in reversed(keep):
            if ruleset[i].action is Action.PERMIT:
                acc = conds[i] | acc
            else:
                acc = mgr.neg(conds[i]) & acc
        return acc

    keep = list(range(len(ruleset)))
    baseline = fold(keep)
    redundant: list[int] = []
    for i in range(len(ruleset) - 1, -1, -1):
        trial = [j for j in keep if j != i]
        if fold(trial) == baseline:
            redundant.append(i)
            keep = trial
    redundant.reverse()
    return redundant


def stats(compiled: CompiledRuleSet) -> dict:
    """Size and coverage numbers for one compiled rule set."""
    mgr = compiled.layout.manager
    accept = compiled.accept
    return {
        "rules": len(compiled.source),
        "variables": compiled.layout.num_vars,
        "node_count": mgr.node_count(accept),
        "max_depth": mgr.max_depth(accept),
        "packets": mgr.sat_count(accept),
    }


def load_and_compile(
    text: str,
    layout: VariableLayout,
    origin: str = "<string>",
    protocols: ProtocolTable = DEFAULT_PROTOCOLS,
) -> tuple[CompiledRuleSet, float]:
    """Parse and compile in one step, timing the compile."""
    from .acl import parse_ruleset

    ruleset = parse_ruleset(text, origin=origin, protocols=protocols)
    start = time.perf_counter()
    compiled = compile_ruleset(ruleset, layout)
    return compiled, time.perf_counter() - start
