"""Built-in catalog of small algebras used for round-trip checks.

Element names are chosen so the identity sorts lexicographically first;
witness selection is lexicographic, so this keeps synthesized witness
tables literally equal to their sources instead of merely isomorphic.
"""

from __future__ import annotations

from .algebra import MagmaTable, parse_table

MON3_TEXT = """\
elements r s t
r: r s t
s: s s t
t: t s t
"""

MAG4_TEXT = """\
elements r p q s
r: r p q s
p: p r s p
q: q s r q
s: s p q r
"""

SEMI3_TEXT = """\
elements p q r
p: p r r
q: r q r
r: r r r
"""


def cyclic_group(n: int) -> MagmaTable:
    elems = [str(i) for i in range(n)]
    return MagmaTable.from_op(elems, lambda x, y: str((int(x) + int(y)) % n))


def klein_group() -> MagmaTable:
    # xor on two bits; "1" is the identity
    names = ("1", "a", "b", "c")
    return MagmaTable.from_op(
        names, lambda x, y: names[names.index(x) ^ names.index(y)]
    )


def symmetric_group3() -> MagmaTable:
    perms = {
        "1": (0, 1, 2),
        "r": (1, 2, 0),
        "rr": (2, 0, 1),
        "f": (0, 2, 1),
        "fr": (1, 0, 2),
        "frr": (2, 1, 0),
    }
    names = {p: n for n, p in perms.items()}

    def compose(x, y):
        # apply x first, then y
        px, py = perms[x], perms[y]
        return names[tuple(py[px[i]] for i in range(3))]

    return MagmaTable.from_op(sorted(perms), compose)


def chain_semilattice(n: int) -> MagmaTable:
    # meet on the chain 0 < 1 < ... < n-1; the top is the identity
    elems = [str(i) for i in range(n)]
    return MagmaTable.from_op(elems, lambda x, y: str(min(int(x), int(y))))


def transformation_monoid2() -> MagmaTable:
    maps = {"id": (0, 1), "sw": (1, 0), "k1": (0, 0), "k2": (1, 1)}
    names = {m: n for n, m in maps.items()}

    def compose(x, y):
        # apply x first, then y
        mx, my = maps[x], maps[y]
        return names[tuple(my[mx[i]] for i in range(2))]

    return MagmaTable.from_op(sorted(maps), compose)


def mon3_table() -> MagmaTable:
    return parse_table(MON3_TEXT)


def mag4_table() -> MagmaTable:
    return parse_table(MAG4_TEXT)


def semi3_table() -> MagmaTable:
    return parse_table(SEMI3_TEXT)


def catalog() -> dict[str, MagmaTable]:
    return {
        "Z2": cyclic_group(2),
        "Z3": cyclic_group(3),
        "Z4": cyclic_group(4),
        "Z5": cyclic_group(5),
        "Z6": cyclic_group(6),
        "K4": klein_group(),
        "S3": symmetric_group3(),
        "semilattice2": chain_semilattice(2),
        "semilattice3": chain_semilattice(3),
        "T2": transformation_monoid2(),
        "MON3": mon3_table(),
        "MAG4": mag4_table(),
    }
