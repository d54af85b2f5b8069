import pytest

from cayley import Graph
from cayley.catalog import mag4_table, mon3_table, semi3_table

# the worked examples used throughout: a 3-element monoid, a 4-element
# commutative unital magma, the free 2-generator semilattice, small cycles

MON3_EDGES = [
    ("r", "a", "r"), ("r", "b", "s"), ("r", "c", "t"),
    ("s", "a", "s"), ("s", "b", "s"), ("s", "c", "t"),
    ("t", "a", "t"), ("t", "b", "s"), ("t", "c", "t"),
]

MAG4_EDGES = [
    ("r", "a", "p"), ("r", "b", "q"),
    ("p", "a", "r"), ("p", "b", "s"),
    ("q", "a", "s"), ("q", "b", "r"),
    ("s", "a", "p"), ("s", "b", "q"),
]

SEMI3_EDGES = [
    ("p", "a", "p"), ("p", "b", "r"),
    ("q", "a", "r"), ("q", "b", "q"),
    ("r", "a", "r"), ("r", "b", "r"),
]


@pytest.fixture
def mon3_graph():
    return Graph.from_edges(MON3_EDGES)


@pytest.fixture
def mag4_graph():
    return Graph.from_edges(MAG4_EDGES)


@pytest.fixture
def semi3_graph():
    return Graph.from_edges(SEMI3_EDGES)


@pytest.fixture
def mon3():
    return mon3_table()


@pytest.fixture
def mag4():
    return mag4_table()


@pytest.fixture
def semi3():
    return semi3_table()


@pytest.fixture
def z2_graph():
    return Graph.from_edges([("0", "a", "1"), ("1", "a", "0")])


@pytest.fixture
def z3_graph():
    return Graph.from_edges([("0", "a", "1"), ("1", "a", "2"), ("2", "a", "0")])


@pytest.fixture
def single_edge():
    return Graph.from_edges([("r", "a", "s")])
