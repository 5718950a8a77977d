"""Firewall access-list analysis on canonical decision diagrams."""

from .acl import (
    AclFileError,
    AclSyntaxError,
    Action,
    AddrSpec,
    DEFAULT_PROTOCOLS,
    PortClause,
    ProtocolTable,
    Rule,
    RuleSet,
    load_ruleset,
    parse_rule,
    parse_ruleset,
)
from .analysis import (
    DiffResult,
    EvalResult,
    Packet,
    SelfCheckError,
    diff,
    eval_packet,
    find_redundant,
    first_match,
    instantiate,
    parse_packet,
    rule_matches,
    stats,
)
from .bdd import (
    AND,
    IMPLIES,
    OR,
    XOR,
    BddError,
    BddManager,
    EvalError,
    OrderingError,
    Ref,
)
from .bitvec import (
    BitVec,
    DEFAULT_FIELD_ORDER,
    Field,
    VariableLayout,
    int2bv,
    parse_field,
)
from .compiler import CompiledRuleSet, CompileError, compile_rule, compile_ruleset
from .conditions import (
    All,
    Condition,
    ConditionError,
    FieldEq,
    FieldRange,
    Not,
    compile_condition,
    condition_from_json,
    condition_to_json,
    parse_condition,
)
from .tables import (
    Cell,
    DEFAULT_ROW_BUDGET,
    RowBudgetExceeded,
    Table,
    build_table,
    display_columns,
    reconstruct,
    render_text,
    summary_table,
    table_from_json,
    table_from_records,
    table_to_json,
)

__version__ = "0.1.0"

__all__ = [
    "AclFileError",
    "AclSyntaxError",
    "Action",
    "AddrSpec",
    "All",
    "AND",
    "BddError",
    "BddManager",
    "BitVec",
    "Cell",
    "CompiledRuleSet",
    "CompileError",
    "Condition",
    "ConditionError",
    "DEFAULT_FIELD_ORDER",
    "DEFAULT_PROTOCOLS",
    "DEFAULT_ROW_BUDGET",
    "DiffResult",
    "EvalError",
    "EvalResult",
    "Field",
    "FieldEq",
    "FieldRange",
    "IMPLIES",
    "Not",
    "OR",
    "OrderingError",
    "Packet",
    "PortClause",
    "ProtocolTable",
    "Ref",
    "RowBudgetExceeded",
    "Rule",
    "RuleSet",
    "SelfCheckError",
    "Table",
    "VariableLayout",
    "XOR",
    "build_table",
    "compile_condition",
    "compile_rule",
    "compile_ruleset",
    "condition_from_json",
    "condition_to_json",
    "diff",
    "display_columns",
    "eval_packet",
    "find_redundant",
    "first_match",
    "instantiate",
    "int2bv",
    "load_ruleset",
    "parse_condition",
    "parse_field",
    "parse_packet",
    "parse_rule",
    "parse_ruleset",
    "reconstruct",
    "render_text",
    "rule_matches",
    "stats",
    "summary_table",
    "table_from_json",
    "table_from_records",
    "table_to_json",
]
