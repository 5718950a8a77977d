"""Packet fields as vectors of decision-diagram variables.

A packet here is ten unsigned integers: a protocol number, a port, and
four source plus four destination address segments.  Each field gets a
contiguous block of BDD variables, most significant bit first, and
:class:`BitVec` builds the usual arithmetic predicates (equality,
bounds, masked match) over such a block bit by bit.
"""

from __future__ import annotations

import enum
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass

from .bdd import AND, OR, BddManager, Ref


class Field(enum.Enum):
    """The ten packet fields, in their default diagram order."""

    PROTO = "Proto"
    PORT = "Port"
    SRC1 = "Src1"
    SRC2 = "Src2"
    SRC3 = "Src3"
    SRC4 = "Src4"
    DST1 = "Dest1"
    DST2 = "Dest2"
    DST3 = "Dest3"
    DST4 = "Dest4"


DEFAULT_FIELD_ORDER: tuple[Field, ...] = tuple(Field)

SRC_FIELDS: tuple[Field, ...] = (Field.SRC1, Field.SRC2, Field.SRC3, Field.SRC4)
DST_FIELDS: tuple[Field, ...] = (Field.DST1, Field.DST2, Field.DST3, Field.DST4)

FIELD_LABELS: dict[Field, str] = {
    Field.PROTO: "Proto",
    Field.PORT: "Ports",
    Field.SRC1: "Src 1",
    Field.SRC2: "Src 2",
    Field.SRC3: "Src 3",
    Field.SRC4: "Src 4",
    Field.DST1: "Dest 1",
    Field.DST2: "Dest 2",
    Field.DST3: "Dest 3",
    Field.DST4: "Dest 4",
}

_FIELD_ALIASES: dict[str, Field] = {}
for _f in Field:
    _FIELD_ALIASES[_f.value.lower()] = _f
_FIELD_ALIASES.update(
    {
        "ports": Field.PORT,
        "protocol": Field.PROTO,
    }
)
for _i, _f in enumerate(SRC_FIELDS, start=1):
    _FIELD_ALIASES[f"source{_i}"] = _f
for _i, _f in enumerate(DST_FIELDS, start=1):
    _FIELD_ALIASES[f"dst{_i}"] = _f
    _FIELD_ALIASES[f"destination{_i}"] = _f


def parse_field(token: str) -> Field:
    """Resolve a user-facing field name, case-insensitively."""
    try:
        return _FIELD_ALIASES[token.strip().lower()]
    except KeyError:
        raise ValueError(f"unknown field {token!r}") from None


def int2bv(value: int, width: int) -> tuple[bool, ...]:
    """Unsigned binary expansion, most significant bit first."""
    if width < 1:
        raise ValueError("width must be positive")
    if not 0 <= value < (1 << width):
        raise ValueError(f"{value} does not fit in {width} bits")
    return tuple(bool((value >> k) & 1) for k in range(width - 1, -1, -1))


@dataclass(frozen=True)
class BitVec:
    """A fixed-width unsigned integer made of BDD bit functions.

    ``bits[0]`` is the most significant bit.  The predicates below all
    return a single function over the underlying manager; constants
    are checked against the vector's width.
    """

    bits: tuple[Ref, ...]

    def __post_init__(self):
        if not self.bits:
            raise ValueError("bit vector needs at least one bit")
        mgr = self.bits[0].manager
        if any(b.manager is not mgr for b in self.bits):
            raise ValueError("bits belong to different managers")

    @property
    def width(self) -> int:
        return len(self.bits)

    @property
    def manager(self) -> BddManager:
        return self.bits[0].manager

    def _const(self, value: int) -> tuple[bool, ...]:
        return int2bv(value, self.width)

    def eq_const(self, value: int) -> Ref:
        """``self == value``."""
        mgr = self.manager
        acc = mgr.true
        # Fold from the least significant bit so the partial result
        # only ever mentions variables below the bit being added.
        for bit, want in zip(reversed(self.bits), reversed(self._const(value))):
            literal = bit if want else mgr.neg(bit)
            acc = mgr.apply(AND, literal, acc)
        return acc

    def geq_const(self, value: int) -> Ref:
        """``self >= value``, as one bottom-up sweep."""
        mgr = self.manager
        acc = mgr.true
        # Invariant after handling bit k: acc holds exactly when the k
        # low bits of self are >= the k low bits of the constant.
        for bit, want in zip(reversed(self.bits), reversed(self._const(value))):
            if want:
                acc = mgr.apply(AND, bit, acc)
            else:
                acc = mgr.apply(OR, bit, acc)
        return acc

    def leq_const(self, value: int) -> Ref:
        """``self <= value``, mirror image of :meth:`geq_const`."""
        mgr = self.manager
        acc = mgr.true
        for bit, want in zip(reversed(self.bits), reversed(self._const(value))):
            if want:
                acc = mgr.apply(OR, mgr.neg(bit), acc)
            else:
                acc = mgr.apply(AND, mgr.neg(bit), acc)
        return acc

    def in_range(self, lo: int, hi: int) -> Ref:
        """``lo <= self <= hi`` for an inclusive, non-empty range."""
        if lo > hi:
            raise ValueError(f"empty range {lo}..{hi}")
        return self.manager.apply(AND, self.geq_const(lo), self.leq_const(hi))

    def masked_eq(self, base: int, mask: int) -> Ref:
        """Equality on the bits the wildcard mask does not ignore.

        A set mask bit means "don't care", matching the usual wildcard
        convention: the predicate is ``self | mask == base | mask``.
        """
        mgr = self.manager
        base_bits = self._const(base)
        mask_bits = self._const(mask)
        acc = mgr.true
        for bit, want, skip in zip(
            reversed(self.bits), reversed(base_bits), reversed(mask_bits)
        ):
            if skip:
                continue
            literal = bit if want else mgr.neg(bit)
            acc = mgr.apply(AND, literal, acc)
        return acc


class VariableLayout:
    """Assignment of packet fields to blocks of manager variables.

    The constructor fixes three widths (address segment, port,
    protocol) and the top-to-bottom order of the ten fields, then
    allocates one manager holding ``8*w_seg + w_port + w_proto``
    variables.  All rule sets that are meant to be compared must share
    one layout, because refs are only canonical within one manager.
    """

    def __init__(
        self,
        w_seg: int = 8,
        w_port: int = 16,
        w_proto: int = 3,
        field_order: Sequence[Field] | None = None,
    ):
        for label, w in (("segment", w_seg), ("port", w_port), ("protocol", w_proto)):
            if w < 1:
                raise ValueError(f"{label} width must be at least 1")
        order = tuple(field_order) if field_order is not None else DEFAULT_FIELD_ORDER
        if sorted(order, key=lambda f: f.value) != sorted(
            Field, key=lambda f: f.value
        ):
            raise ValueError("field order must mention each field exactly once")
        self._w_seg = w_seg
        self._w_port = w_port
        self._w_proto = w_proto
        self._order = order
        names: list[str] = []
        ids: dict[Field, tuple[int, ...]] = {}
        for f in order:
            w = self.width(f)
            start = len(names)
            prefix = f.value.lower()
            names.extend(f"{prefix}.{k}" for k in range(w - 1, -1, -1))
            ids[f] = tuple(range(start, start + w))
        self._manager = BddManager(names)
        self._ids = ids
        self._field_of = {v: f for f, vs in ids.items() for v in vs}
        self._bv = {
            f: BitVec(tuple(self._manager.var(v) for v in vs))
            for f, vs in ids.items()
        }

    @property
    def manager(self) -> BddManager:
        return self._manager

    @property
    def order(self) -> tuple[Field, ...]:
        """Fields from the top of the diagram down."""
        return self._order

    @property
    def num_vars(self) -> int:
        return self._manager.num_vars

    def width(self, f: Field) -> int:
        if f is Field.PROTO:
            return self._w_proto
        if f is Field.PORT:
            return self._w_port
        return self._w_seg

    @property
    def widths(self) -> tuple[int, int, int]:
        """``(w_seg, w_port, w_proto)`` as given to the constructor."""
        return (self._w_seg, self._w_port, self._w_proto)

    def max_value(self, f: Field) -> int:
        return (1 << self.width(f)) - 1

    def var_ids(self, f: Field) -> tuple[int, ...]:
        """Manager variables of one field, most significant first."""
        return self._ids[f]

    def field_of(self, var: int) -> Field:
        return self._field_of[var]

    def bitvec(self, f: Field) -> BitVec:
        return self._bv[f]

    def assignment(self, values: Mapping[Field, int]) -> dict[int, int]:
        """Turn per-field integers into a full variable assignment."""
        out: dict[int, int] = {}
        for f in Field:
            try:
                value = values[f]
            except KeyError:
                raise ValueError(f"missing value for field {f.value}") from None
            for var, bit in zip(self._ids[f], int2bv(value, self.width(f))):
                out[var] = int(bit)
        return out

    def fields_below(self, fields: Iterable[Field]) -> list[Field]:
        """Complement of ``fields``, in diagram order."""
        keep = set(fields)
        return [f for f in self._order if f not in keep]
