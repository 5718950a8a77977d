"""Compilation of parsed rules into boolean accept functions.

A rule's matching condition is the conjunction of a protocol equality,
one masked equality per address segment, and an optional port range.
A whole first-match rule list folds from the last rule upwards:

    accept([])            = FALSE
    accept(permit r; rs)  = cond(r) OR accept(rs)
    accept(deny r; rs)    = NOT cond(r) AND accept(rs)

so the implicit trailing deny is the FALSE base case and earlier rules
correctly shadow later ones.
"""

from __future__ import annotations

from dataclasses import dataclass

from .acl import Action, Rule, RuleSet
from .bdd import AND, OR, Ref
from .bitvec import DST_FIELDS, SRC_FIELDS, Field, VariableLayout


class CompileError(Exception):
    """A rule that parses but does not fit the layout's field widths."""

    def __init__(self, message: str, line: int | None = None):
        self.message = message
        self.line = line
        super().__init__(f"line {line}: {message}" if line else message)


@dataclass(frozen=True)
class CompiledRuleSet:
    """A rule set together with its compiled boolean form."""

    accept: Ref
    conditions: tuple[Ref, ...]
    layout: VariableLayout
    source: RuleSet

    def __len__(self) -> int:
        return len(self.source)


def _field_condition(rule: Rule, f: Field, layout: VariableLayout) -> Ref | None:
    bv = layout.bitvec(f)
    top = layout.max_value(f)
    if f is Field.PROTO:
        if rule.proto_num > top:
            raise CompileError(
                f"protocol number {rule.proto_num} needs more than "
                f"{layout.width(f)} bits",
                rule.line,
            )
        return bv.eq_const(rule.proto_num)
    if f is Field.PORT:
        if rule.port is None:
            return None
        if rule.port.hi > top:
            raise CompileError(
                f"port {rule.port.hi} exceeds field maximum {top}", rule.line
            )
        return bv.in_range(rule.port.lo, rule.port.hi)
    if f in SRC_FIELDS:
        spec, seg = rule.src, SRC_FIELDS.index(f)
    else:
        spec, seg = rule.dst, DST_FIELDS.index(f)
    addr, mask = spec.addr[seg], spec.mask[seg]
    if addr > top or mask > top:
        raise CompileError(
            f"address octet {max(addr, mask)} exceeds field maximum {top}",
            rule.line,
        )
    return bv.masked_eq(addr, mask)


def compile_rule(rule: Rule, layout: VariableLayout) -> Ref:
    """The condition under which a packet matches this rule."""
    mgr = layout.manager
    cond = mgr.true
    # Conjoin deepest field first; intermediate results then stay
    # rooted low in the order, which keeps them small.
    for f in reversed(layout.order):
        part = _field_condition(rule, f, layout)
        if part is not None:
            cond = mgr.apply(AND, part, cond)
    return cond


def compile_ruleset(ruleset: RuleSet, layout: VariableLayout) -> CompiledRuleSet:
    """Compile a whole list into its accept function."""
    mgr = layout.manager
    conds = tuple(compile_rule(r, layout) for r in ruleset)
    accept = mgr.false
    for rule, cond in zip(reversed(ruleset.rules), reversed(conds)):
        if rule.action is Action.PERMIT:
            accept = mgr.apply(OR, cond, accept)
        else:
            accept = mgr.apply(AND, mgr.neg(cond), accept)
    return CompiledRuleSet(accept, conds, layout, ruleset)
