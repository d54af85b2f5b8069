"""Building generalized Cayley graphs from operation tables.

Given a table, a generator subset and an injective labeling, the graph has
one edge ``p --label(q)--> p*q`` per element p and generator q.  Every
element is the source of at least one edge, so the result is a valid
(non-empty, isolated-vertex-free) graph whenever the generator set is.
"""

from __future__ import annotations

from .algebra import MagmaTable
from .errors import LabelingError, UnknownElementError
from .graph import Edge, Graph


def default_labeling(generators) -> dict[str, str]:
    """The identity labeling: each generator labels its own edges."""
    return {q: q for q in generators}


def check_labeling(generators, labeling) -> dict[str, str]:
    gens = frozenset(generators)
    if set(labeling) != gens:
        raise LabelingError("labeling domain must be exactly the generator set")
    if len(set(labeling.values())) != len(labeling):
        raise LabelingError("labeling must be injective")
    return dict(labeling)


def cayley_graph(t: MagmaTable, generators, labeling=None) -> Graph:
    """The generalized Cayley graph of a table over a generator subset."""
    gens = sorted(frozenset(generators))
    if not gens:
        raise LabelingError("generator set must be non-empty")
    missing = set(gens) - set(t.carrier)
    if missing:
        raise UnknownElementError(f"generators not in carrier: {sorted(missing)}")
    if labeling is None:
        labeling = default_labeling(gens)
    labeling = check_labeling(gens, labeling)
    edges = frozenset(
        Edge(p, labeling[q], t.op(p, q)) for p in t.carrier for q in gens
    )
    return Graph(edges)
