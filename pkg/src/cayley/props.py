"""Vertex- and graph-level predicates on labeled graphs.

Determinism, completeness, simplicity, roots and connectivity are decided
by direct scans and breadth-first searches.  Propagation predicates, which
quantify over all label words, are decided exactly on deterministic graphs
by a paired breadth-first closure: a vertex r propagates to s precisely
when the closure builds a morphism from the part accessible from r onto
the part accessible from s with r mapped to s.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import (
    NotCoDeterministicError,
    NotDeterministicError,
    UnknownVertexError,
)
from .graph import Graph, bar_graph, inverse, reachable_from


@dataclass(frozen=True)
class StructuralReport:
    """All edge-local and reachability facts about one graph."""

    deterministic: bool
    co_deterministic: bool
    simple: bool
    out_simple_vertices: frozenset[str]
    in_simple_vertices: frozenset[str]
    source_complete: bool
    source_complete_vertices: frozenset[str]
    target_complete: bool
    target_complete_vertices: frozenset[str]
    roots: frozenset[str]
    co_roots: frozenset[str]
    one_roots: frozenset[str]
    one_coroots: frozenset[str]
    connected: bool
    strongly_connected: bool


@dataclass(frozen=True)
class MorphismWitness:
    """A vertex mapping certifying a forced morphism between accessible parts.

    ``mapping`` sends every vertex accessible from ``source_anchor`` to a
    vertex accessible from ``target_anchor``, carrying each edge to an
    equally-labeled edge; it is the unique such map with
    ``mapping[source_anchor] == target_anchor``.
    """

    mapping: dict[str, str]
    source_anchor: str
    target_anchor: str
    is_isomorphism: bool


def is_deterministic(g: Graph) -> bool:
    """No two edges share source and label."""
    return all(
        len(g.targets(v, a)) <= 1 for v in g.vertices for a in g.out_labels(v)
    )


def is_co_deterministic(g: Graph) -> bool:
    """No two edges share target and label."""
    return all(
        len(g.sources(v, a)) <= 1 for v in g.vertices for a in g.in_labels(v)
    )


def _require_deterministic(g):
    if not is_deterministic(g):
        raise NotDeterministicError()


def _require_co_deterministic(g):
    if not is_co_deterministic(g):
        raise NotCoDeterministicError()


def _require_vertex(g, v):
    if v not in g.vertices:
        raise UnknownVertexError(f"unknown vertex {v!r}")


def is_out_simple(g: Graph, v) -> bool:
    """No two edges from v reach the same target under different labels."""
    _require_vertex(g, v)
    seen = set()
    for a in g.out_labels(v):
        for t in g.targets(v, a):
            if t in seen:
                return False
            seen.add(t)
    return True


def is_in_simple(g: Graph, v) -> bool:
    _require_vertex(g, v)
    seen = set()
    for a in g.in_labels(v):
        for s in g.sources(v, a):
            if s in seen:
                return False
            seen.add(s)
    return True


def structural_report(g: Graph) -> StructuralReport:
    verts = g.sorted_vertices
    alphabet = g.alphabet
    out_simple = frozenset(v for v in verts if is_out_simple(g, v))
    in_simple = frozenset(v for v in verts if is_in_simple(g, v))
    src_complete = frozenset(v for v in verts if g.out_labels(v) == alphabet)
    tgt_complete = frozenset(v for v in verts if g.in_labels(v) == alphabet)
    vertex_set = g.vertices
    reach = {v: reachable_from(g, {v}) for v in verts}
    inv = inverse(g)
    co_reach = {v: reachable_from(inv, {v}) for v in verts}
    roots = frozenset(v for v in verts if reach[v] == vertex_set)
    co_roots = frozenset(v for v in verts if co_reach[v] == vertex_set)
    one_roots = frozenset(v for v in verts if g.successors(v) == vertex_set)
    one_coroots = frozenset(v for v in verts if g.predecessors(v) == vertex_set)
    return StructuralReport(
        deterministic=is_deterministic(g),
        co_deterministic=is_co_deterministic(g),
        simple=out_simple == vertex_set,
        out_simple_vertices=out_simple,
        in_simple_vertices=in_simple,
        source_complete=src_complete == vertex_set,
        source_complete_vertices=src_complete,
        target_complete=tgt_complete == vertex_set,
        target_complete_vertices=tgt_complete,
        roots=roots,
        co_roots=co_roots,
        one_roots=one_roots,
        one_coroots=one_coroots,
        connected=_is_connected(g),
        strongly_connected=roots == vertex_set,
    )


def _is_connected(g: Graph) -> bool:
    start = g.sorted_vertices[0]
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for w in g.successors(v) | g.predecessors(v):
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return seen == set(g.vertices)


def is_locally_commutative(g: Graph, v) -> bool:
    """Every two-step path from v commutes: v -ab-> s implies v -ba-> s."""
    _require_vertex(g, v)
    letters = g.sorted_alphabet
    two_step = {}
    for a in letters:
        for b in letters:
            two_step[a, b] = frozenset(
                t for m in g.targets(v, a) for t in g.targets(m, b)
            )
    return all(
        two_step[a, b] <= two_step[b, a] for a in letters for b in letters
    )


def is_commutative(g: Graph) -> bool:
    """All vertices locally commutative; path-level commutation follows."""
    return all(is_locally_commutative(g, v) for v in g.sorted_vertices)


def is_loop_propagating(g: Graph, v) -> bool:
    """Every loop label at v is a loop label at every vertex."""
    _require_vertex(g, v)
    for a in g.out_labels(v):
        if v in g.targets(v, a):
            if not all(s in g.targets(s, a) for s in g.vertices):
                return False
    return True


def _pair_closure(g: Graph, r, s):
    """Breadth-first closure of the pair (r, s) under matching edges.

    Returns the forced mapping from the r-accessible part into the
    s-accessible part, or None when an edge is missing on the s side or a
    vertex would be sent to two distinct images.  Requires determinism.
    """
    mapping = {r: s}
    queue = deque([(r, s)])
    while queue:
        p, q = queue.popleft()
        for a, p2 in g.out_edges(p):
            q_targets = g.targets(q, a)
            if not q_targets:
                return None
            (q2,) = q_targets
            known = mapping.get(p2)
            if known is None:
                mapping[p2] = q2
                queue.append((p2, q2))
            elif known != q2:
                return None
    return mapping


def forced_morphism(g: Graph, r, s):
    """The unique morphism h of accessible parts with h(r) = s, if any.

    On a deterministic graph, h(r) = s forces the image of every vertex
    reachable from r, so a single paired closure either constructs the
    morphism or refutes its existence.  ``is_isomorphism`` records whether
    the closure anchored the other way round also succeeds, which by
    uniqueness makes the two maps mutually inverse.
    """
    _require_deterministic(g)
    _require_vertex(g, r)
    _require_vertex(g, s)
    mapping = _pair_closure(g, r, s)
    if mapping is None:
        return None
    back = _pair_closure(g, s, r)
    return MorphismWitness(
        mapping=mapping,
        source_anchor=r,
        target_anchor=s,
        is_isomorphism=back is not None and back.get(s) == r,
    )


def is_propagating_vertex(g: Graph, r) -> bool:
    """Whatever pair of words joins from r joins from every vertex.

    Decided through forced morphisms: exact for deterministic graphs.
    """
    _require_deterministic(g)
    _require_vertex(g, r)
    return all(
        _pair_closure(g, r, s) is not None for s in g.sorted_vertices
    )


def is_1_propagating_vertex(g: Graph, r) -> bool:
    """The single-letter restriction of propagation; determinism not needed."""
    _require_vertex(g, r)
    letters = g.sorted_alphabet
    for a in letters:
        ta = g.targets(r, a)
        if not ta:
            continue
        for b in letters:
            if not ta & g.targets(r, b):
                continue
            for s in g.vertices:
                if not g.targets(s, a) & g.targets(s, b):
                    return False
    return True


def is_forward_vertex_transitive(g: Graph) -> bool:
    """All accessible parts pairwise isomorphic with anchor correspondence.

    Equivalent to every vertex propagating on deterministic graphs.  With a
    root the check reduces to the root against its direct successors; the
    closure of the accessible-isomorphism relation covers the rest.
    """
    _require_deterministic(g)
    verts = g.sorted_vertices
    vertex_set = g.vertices
    roots = [v for v in verts if reachable_from(g, {v}) == vertex_set]
    if roots:
        r = roots[0]
        for s in sorted(g.successors(r)):
            w = forced_morphism(g, r, s)
            if w is None or not w.is_isomorphism:
                return False
        return True
    return all(
        _pair_closure(g, s, t) is not None for s in verts for t in verts
    )


def is_propagating_graph(g: Graph) -> bool:
    """All vertices propagating; coincides with forward vertex-transitivity."""
    return is_forward_vertex_transitive(g)


def is_chain_propagating_vertex(g: Graph, v) -> bool:
    """Propagating once reversed traversal is allowed (on the bar graph)."""
    _require_deterministic(g)
    _require_co_deterministic(g)
    _require_vertex(g, v)
    return is_propagating_vertex(bar_graph(g), v)


def is_vertex_transitive(g: Graph) -> bool:
    """Every vertex carried to every other by some automorphism.

    Decided as forward vertex-transitivity of the bar graph, which is exact
    for deterministic and co-deterministic graphs.
    """
    _require_deterministic(g)
    _require_co_deterministic(g)
    return is_propagating_graph(bar_graph(g))


def is_chain_commutative(g: Graph) -> bool:
    """Two-step chains commute at every vertex (checked on the bar graph)."""
    return is_commutative(bar_graph(g))
