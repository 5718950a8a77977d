"""Parsing of Cisco-style ``access-list`` rule text.

One rule per line:

    access-list ID permit|deny PROTO A.B.C.D A.B.C.D A.B.C.D A.B.C.D [eq N | range N M]

The four dotted quads are source address, source wildcard mask,
destination address, destination wildcard mask.  A set mask octet
means that octet is ignored when matching.  The optional trailing
clause constrains the (destination) port and is only legal for
protocols that carry one.  Blank lines and ``!``/``#`` comment lines
are skipped.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field


class AclSyntaxError(Exception):
    """A single malformed rule line."""

    def __init__(self, message: str, line: int, token: str | None = None):
        self.message = message
        self.line = line
        self.token = token
        detail = f"line {line}: {message}"
        if token is not None:
            detail += f" (got {token!r})"
        super().__init__(detail)


class AclFileError(Exception):
    """All syntax errors collected from one rule-set source."""

    def __init__(self, errors: list[AclSyntaxError]):
        self.errors = errors
        super().__init__("; ".join(str(e) for e in errors))


class ProtocolTable:
    """Mapping between protocol keywords and their code numbers.

    ``portless`` names the protocols whose rules must not carry a port
    clause.  The default table is fixed; a custom one can be supplied
    wherever rules are parsed.
    """

    def __init__(self, numbers: dict[str, int], portless: frozenset[str]):
        if len(set(numbers.values())) != len(numbers):
            raise ValueError("protocol numbers must be distinct")
        unknown = portless - set(numbers)
        if unknown:
            raise ValueError(f"portless names not in table: {sorted(unknown)}")
        self._numbers = dict(numbers)
        self._names = {num: name for name, num in numbers.items()}
        self.portless = portless

    def number_of(self, name: str) -> int:
        return self._numbers[name]

    def name_of(self, number: int) -> str | None:
        return self._names.get(number)

    def __contains__(self, name: str) -> bool:
        return name in self._numbers

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(self._numbers)

    @property
    def min_width(self) -> int:
        """Bits needed to hold the largest protocol number."""
        return max(1, max(self._numbers.values()).bit_length())

    def takes_port(self, name: str) -> bool:
        return name not in self.portless


DEFAULT_PROTOCOLS = ProtocolTable(
    {"ip": 0, "icmp": 1, "udp": 2, "tcp": 3, "gre": 4},
    portless=frozenset({"ip", "icmp"}),
)


class Action(enum.Enum):
    PERMIT = "permit"
    DENY = "deny"


@dataclass(frozen=True)
class AddrSpec:
    """A dotted-quad address plus its wildcard mask."""

    addr: tuple[int, int, int, int]
    mask: tuple[int, int, int, int]

    def __str__(self) -> str:
        return f"{_quad(self.addr)} {_quad(self.mask)}"


@dataclass(frozen=True)
class PortClause:
    """Inclusive port interval from an ``eq``/``range`` clause."""

    lo: int
    hi: int

    def __str__(self) -> str:
        if self.lo == self.hi:
            return f"eq {self.lo}"
        return f"range {self.lo} {self.hi}"


@dataclass(frozen=True)
class Rule:
    list_id: int
    action: Action
    protocol: str
    proto_num: int
    src: AddrSpec
    dst: AddrSpec
    port: PortClause | None
    line: int = field(default=1, compare=False)

    def __str__(self) -> str:
        head = (
            f"access-list {self.list_id} {self.action.value} {self.protocol}"
            f" {self.src} {self.dst}"
        )
        return head if self.port is None else f"{head} {self.port}"


@dataclass(frozen=True)
class RuleSet:
    rules: tuple[Rule, ...]
    origin: str = "<string>"

    def __len__(self) -> int:
        return len(self.rules)

    def __iter__(self):
        return iter(self.rules)

    def __getitem__(self, i: int) -> Rule:
        return self.rules[i]

    def without(self, indexes: set[int]) -> "RuleSet":
        """Copy of the set with the given 0-based positions dropped."""
        kept = tuple(r for i, r in enumerate(self.rules) if i not in indexes)
        return RuleSet(kept, origin=self.origin)


def _quad(parts: tuple[int, int, int, int]) -> str:
    return ".".join(str(p) for p in parts)


def _parse_quad(token: str, what: str, line: int) -> tuple[int, int, int, int]:
    parts = token.split(".")
    if len(parts) != 4:
        raise AclSyntaxError(f"{what} must be four dot-separated octets", line, token)
    out = []
    for p in parts:
        if not p.isdigit():
            raise AclSyntaxError(f"{what} has a non-numeric octet", line, token)
        v = int(p)
        if v > 255:
            raise AclSyntaxError(f"{what} octet out of 0..255", line, token)
        out.append(v)
    return tuple(out)  # type: ignore[return-value]


def _parse_int(token: str, what: str, line: int) -> int:
    if not token.isdigit():
        raise AclSyntaxError(f"{what} must be a non-negative integer", line, token)
    return int(token)


def parse_rule(
    text: str, line: int = 1, protocols: ProtocolTable = DEFAULT_PROTOCOLS
) -> Rule:
    """Parse one rule line; raises :class:`AclSyntaxError` on bad input."""
    tokens = text.split()
    if len(tokens) < 8:
        raise AclSyntaxError(
            "rule needs at least: access-list ID ACTION PROTO SRC SMASK DST DMASK",
            line,
        )
    if tokens[0] != "access-list":
        raise AclSyntaxError("rule must start with 'access-list'", line, tokens[0])
    list_id = _parse_int(tokens[1], "list id", line)
    try:
        action = Action(tokens[2])
    except ValueError:
        raise AclSyntaxError("action must be 'permit' or 'deny'", line, tokens[2])
    proto = tokens[3]
    if proto not in protocols:
        raise AclSyntaxError(
            f"unknown protocol (expected one of {', '.join(protocols.names)})",
            line,
            proto,
        )
    src = AddrSpec(
        _parse_quad(tokens[4], "source address", line),
        _parse_quad(tokens[5], "source mask", line),
    )
    dst = AddrSpec(
        _parse_quad(tokens[6], "destination address", line),
        _parse_quad(tokens[7], "destination mask", line),
    )
    rest = tokens[8:]
    port: PortClause | None = None
    if rest:
        if rest[0] == "eq":
            if len(rest) != 2:
                raise AclSyntaxError("'eq' takes exactly one port", line)
            p = _parse_int(rest[1], "port", line)
            port = PortClause(p, p)
        elif rest[0] == "range":
            if len(rest) != 3:
                raise AclSyntaxError("'range' takes exactly two ports", line)
            lo = _parse_int(rest[1], "port", line)
            hi = _parse_int(rest[2], "port", line)
            if lo > hi:
                raise AclSyntaxError("empty port range", line, f"{lo} {hi}")
            port = PortClause(lo, hi)
        else:
            raise AclSyntaxError("trailing clause must be 'eq' or 'range'", line, rest[0])
        if not protocols.takes_port(proto):
            raise AclSyntaxError(f"protocol '{proto}' does not take a port", line)
    return Rule(list_id, action, proto, protocols.number_of(proto), src, dst, port, line)


def parse_ruleset(
    text: str,
    origin: str = "<string>",
    protocols: ProtocolTable = DEFAULT_PROTOCOLS,
) -> RuleSet:
    """Parse a whole rule listing, reporting every bad line at once."""
    rules: list[Rule] = []
    errors: list[AclSyntaxError] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith(("!", "#")):
            continue
        try:
            rules.append(parse_rule(stripped, lineno, protocols))
        except AclSyntaxError as e:
            errors.append(e)
    if errors:
        raise AclFileError(errors)
    return RuleSet(tuple(rules), origin=origin)


def load_ruleset(
    path: str, protocols: ProtocolTable = DEFAULT_PROTOCOLS
) -> RuleSet:
    with open(path, encoding="utf-8") as fh:
        return parse_ruleset(fh.read(), origin=path, protocols=protocols)
