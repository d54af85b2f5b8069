"""Finite binary-operation tables and their axiom audit.

A table is a carrier with a total closed operation.  Every axiom the
classifiers rely on (associativity, identities, commutativity,
cancellativity, idempotence, invertibility) is decided by exhaustive
loops; carriers here are desk-scale, so the cubic associativity scan is
not worth optimizing.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .errors import (
    FormatError,
    ModePreconditionError,
    UnknownElementError,
)
from .graph import check_token


@dataclass(frozen=True, eq=False)
class MagmaTable:
    """A finite carrier with a total binary operation.

    ``rows[i][j]`` is the product ``carrier[i] * carrier[j]``.  Carrier
    order is kept for display only; equality and hashing treat tables as
    operation graphs over unordered carriers.
    """

    carrier: tuple[str, ...]
    rows: tuple[tuple[str, ...], ...]

    def __post_init__(self):
        if not self.carrier:
            raise FormatError("empty carrier")
        if len(set(self.carrier)) != len(self.carrier):
            raise FormatError("carrier elements must be distinct")
        for x in self.carrier:
            check_token(x)
        if len(self.rows) != len(self.carrier):
            raise FormatError("one row per carrier element required")
        elements = set(self.carrier)
        for x, row in zip(self.carrier, self.rows):
            if len(row) != len(self.carrier):
                raise FormatError(f"ragged row for {x!r}")
            for y in row:
                if y not in elements:
                    raise FormatError(f"entry {y!r} not in the carrier")

    @classmethod
    def from_op(cls, elements: Iterable[str], op) -> "MagmaTable":
        elems = tuple(elements)
        return cls(elems, tuple(tuple(op(x, y) for y in elems) for x in elems))

    @cached_property
    def _index(self) -> dict[str, int]:
        return {x: i for i, x in enumerate(self.carrier)}

    def op(self, x, y) -> str:
        try:
            return self.rows[self._index[x]][self._index[y]]
        except KeyError:
            missing = x if x not in self._index else y
            raise UnknownElementError(f"unknown element {missing!r}") from None

    @cached_property
    def _triples(self) -> frozenset[tuple[str, str, str]]:
        return frozenset(
            (x, y, self.rows[i][j])
            for i, x in enumerate(self.carrier)
            for j, y in enumerate(self.carrier)
        )

    def __eq__(self, other):
        if not isinstance(other, MagmaTable):
            return NotImplemented
        return self._triples == other._triples

    def __hash__(self):
        return hash(self._triples)

    def __repr__(self):
        return f"MagmaTable({len(self.carrier)} elements)"


def table_equal(t1: MagmaTable, t2: MagmaTable) -> bool:
    """Same carrier as a set and pointwise-equal operation."""
    return t1 == t2


def parse_table(text: str) -> MagmaTable:
    """Parse the ``.mag`` format.

    First non-comment line: ``elements x1 ... xn``; then one line
    ``xi: y1 ... yn`` per element, yj being the product ``xi * xj``.
    """
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            lines.append((lineno, line))
    if not lines:
        raise FormatError("empty table file")
    lineno, header = lines[0]
    fields = header.split()
    if fields[0] != "elements" or len(fields) < 2:
        raise FormatError("expected 'elements x1 x2 ...'", line=lineno)
    carrier = tuple(check_token(x, user=True) for x in fields[1:])
    if len(set(carrier)) != len(carrier):
        raise FormatError("repeated element in carrier", line=lineno)
    body = lines[1:]
    if len(body) != len(carrier):
        raise FormatError(
            f"expected {len(carrier)} rows, got {len(body)}", line=lineno
        )
    rows = {}
    for lineno, line in body:
        head, sep, rest = line.partition(":")
        if not sep:
            raise FormatError("expected 'element: products...'", line=lineno)
        x = head.strip()
        if x not in carrier:
            raise FormatError(f"row for unknown element {x!r}", line=lineno)
        if x in rows:
            raise FormatError(f"duplicate row for {x!r}", line=lineno)
        entries = tuple(rest.split())
        if len(entries) != len(carrier):
            raise FormatError(f"ragged row for {x!r}", line=lineno)
        for y in entries:
            if y not in carrier:
                raise FormatError(f"entry {y!r} not in the carrier", line=lineno)
        rows[x] = entries
    return MagmaTable(carrier, tuple(rows[x] for x in carrier))


def serialize_table(t: MagmaTable) -> str:
    """Round-trip text form, rows in declared carrier order."""
    out = ["elements " + " ".join(t.carrier) + "\n"]
    for x, row in zip(t.carrier, t.rows):
        out.append(f"{x}: " + " ".join(row) + "\n")
    return "".join(out)


@dataclass(frozen=True)
class AxiomReport:
    associative: bool
    left_identities: frozenset[str]
    right_identities: frozenset[str]
    identity: str | None
    commutative: bool
    left_cancellative: bool
    right_cancellative: bool
    idempotent: bool
    left_invertible_wrt: frozenset[str]
    right_invertible_wrt: frozenset[str]


def axiom_report(t: MagmaTable) -> AxiomReport:
    elems = t.carrier
    op = t.op
    left_ids = frozenset(e for e in elems if all(op(e, x) == x for x in elems))
    right_ids = frozenset(e for e in elems if all(op(x, e) == x for x in elems))
    both = left_ids & right_ids
    # a left and a right identity must coincide, so |both| <= 1
    identity = next(iter(both)) if both else None
    associative = all(
        op(op(x, y), z) == op(x, op(y, z)) for x in elems for y in elems for z in elems
    )
    commutative = all(op(x, y) == op(y, x) for x in elems for y in elems)
    left_canc = all(
        len({op(r, x) for x in elems}) == len(elems) for r in elems
    )
    right_canc = all(
        len({op(x, r) for x in elems}) == len(elems) for r in elems
    )
    idempotent = all(op(x, x) == x for x in elems)
    left_inv = frozenset(
        e
        for e in elems
        if all(any(op(y, x) == e for y in elems) for x in elems)
    )
    right_inv = frozenset(
        e
        for e in elems
        if all(any(op(x, y) == e for y in elems) for x in elems)
    )
    return AxiomReport(
        associative=associative,
        left_identities=left_ids,
        right_identities=right_ids,
        identity=identity,
        commutative=commutative,
        left_cancellative=left_canc,
        right_cancellative=right_canc,
        idempotent=idempotent,
        left_invertible_wrt=left_inv,
        right_invertible_wrt=right_inv,
    )


def is_group(t: MagmaTable) -> bool:
    rep = axiom_report(t)
    return (
        rep.associative
        and rep.identity is not None
        and rep.identity in rep.left_invertible_wrt
        and rep.identity in rep.right_invertible_wrt
    )


def closure(t: MagmaTable, generators, mode: str) -> frozenset[str]:
    """Least subset containing the generators and closed for the mode.

    ``semigroup`` closes under the operation alone, ``monoid`` adds the
    identity, ``group`` adds inverses (the table must be a group).
    """
    gens = frozenset(generators)
    if not gens:
        raise ModePreconditionError("generator set must be non-empty")
    unknown = gens - set(t.carrier)
    if unknown:
        raise UnknownElementError(f"generators not in carrier: {sorted(unknown)}")
    if mode not in ("semigroup", "monoid", "group"):
        raise ModePreconditionError(f"unknown closure mode {mode!r}")
    rep = axiom_report(t)
    current = set(gens)
    inverse_of = {}
    if mode in ("monoid", "group"):
        if rep.identity is None:
            raise ModePreconditionError(f"{mode} closure requires an identity")
        current.add(rep.identity)
    if mode == "group":
        if not is_group(t):
            raise ModePreconditionError("group closure requires a group table")
        e = rep.identity
        for x in t.carrier:
            inverse_of[x] = next(y for y in t.carrier if t.op(x, y) == e)
    while True:
        new = {t.op(x, y) for x in current for y in current} - current
        if mode == "group":
            new |= {inverse_of[x] for x in current} - current
        if not new:
            return frozenset(current)
        current |= new


def subtable(t: MagmaTable, elements) -> MagmaTable:
    """Restriction of the table to a subset closed under the operation."""
    keep = [x for x in t.carrier if x in frozenset(elements)]
    missing = frozenset(elements) - set(t.carrier)
    if missing:
        raise UnknownElementError(f"not in carrier: {sorted(missing)}")
    keepset = set(keep)
    for x in keep:
        for y in keep:
            if t.op(x, y) not in keepset:
                raise ModePreconditionError(
                    f"{x!r} * {y!r} leaves the requested subset"
                )
    return MagmaTable.from_op(keep, t.op)
