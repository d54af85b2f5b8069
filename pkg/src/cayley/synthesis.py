"""Synthesizing operation tables from graphs, and the completions behind them.

The edge-, path- and chain-operations turn an anchored graph back into a
binary operation table: products are read off single edges, witness paths,
or witness chains from the anchor.  The completion constructions extend a
graph to the full Cayley graph of a magma over the whole vertex set, which
is what makes the generalized (partial-generator) classifications
constructive.  Every operation re-verifies its preconditions instead of
trusting callers, and re-checks the postconditions the theory promises;
a broken promise raises InternalContradiction since it can only mean a
checker bug.
"""

from __future__ import annotations

from collections import deque
from itertools import permutations

from .algebra import MagmaTable, axiom_report, closure, is_group
from .errors import (
    InconsistentProductError,
    InternalContradiction,
    LabelingError,
    PreconditionFailed,
    RunFailedError,
    SearchCapExceeded,
    UnknownVertexError,
)
from .graph import (
    FRESH_ROOT,
    Edge,
    Graph,
    bar_graph,
    bar_label,
    reachable_from,
    restrict_labels,
)
from .props import (
    _is_connected,
    _pair_closure,
    _require_co_deterministic,
    _require_deterministic,
    _require_vertex,
    is_1_propagating_vertex,
    is_chain_commutative,
    is_co_deterministic,
    is_locally_commutative,
    is_loop_propagating,
    is_propagating_vertex,
    structural_report,
)

SEMIGROUP_VARIANTS = (
    "plain",
    "commutative",
    "cancellative",
    "cancellative_commutative",
    "semilattice",
)


def witness_words(g: Graph, anchor) -> dict[str, tuple[str, ...]]:
    """Breadth-first words from the anchor, one per reachable vertex.

    Labels are explored in sorted order, so each vertex gets the
    shortest, lexicographically least witness word; outputs are therefore
    reproducible.
    """
    _require_vertex(g, anchor)
    words = {anchor: ()}
    queue = deque([anchor])
    while queue:
        v = queue.popleft()
        for a, t in g.out_edges(v):
            if t not in words:
                words[t] = words[v] + (a,)
                queue.append(t)
    return words


def _require_propagating(g, anchor, kind="propagating"):
    """Like is_propagating_vertex, but name the refuting vertex on failure."""
    _require_deterministic(g)
    for s in g.sorted_vertices:
        if _pair_closure(g, anchor, s) is None:
            raise PreconditionFailed(
                f"{anchor!r} is not {kind}: "
                f"no forced morphism onto the part reachable from {s!r}"
            )


def _run_unique(g: Graph, start, word):
    """Run a word on a deterministic graph; None when an edge is missing."""
    v = start
    for a in word:
        ts = g.targets(v, a)
        if not ts:
            return None
        (v,) = ts
    return v


def edge_operation(g: Graph, anchor) -> MagmaTable:
    """The magma read off single edges from a 1-root.

    The product s*t follows, from s, any label that carries the anchor to
    t; the anchor being 1-propagating makes the choice irrelevant, which
    the implementation verifies label by label rather than trusting.
    The anchor is the left identity of the result.
    """
    _require_deterministic(g)
    _require_vertex(g, anchor)
    if g.successors(anchor) != g.vertices:
        raise PreconditionFailed(f"{anchor!r} is not a 1-root")
    if not is_1_propagating_vertex(g, anchor):
        raise PreconditionFailed(f"{anchor!r} is not 1-propagating")
    carrier = g.sorted_vertices
    labels_to = {t: sorted(a for a in g.out_labels(anchor) if t in g.targets(anchor, a))
                 for t in carrier}
    rows = []
    for s in carrier:
        row = []
        for t in carrier:
            results = set()
            for a in labels_to[t]:
                ts = g.targets(s, a)
                if not ts:
                    raise InconsistentProductError(
                        f"{s!r} lacks an {a!r}-edge although the anchor has one to {t!r}"
                    )
                results |= ts
            if len(results) != 1:
                raise InconsistentProductError(
                    f"labels {labels_to[t]} disagree on {s!r} * {t!r}: {sorted(results)}"
                )
            row.append(results.pop())
        rows.append(tuple(row))
    table = MagmaTable(carrier, tuple(rows))
    _check_edge_operation_claims(g, anchor, table)
    return table


def _check_edge_operation_claims(g, anchor, table):
    rep = axiom_report(table)
    if anchor not in rep.left_identities:
        raise InternalContradiction(f"{anchor!r} is not a left identity of its table")
    if is_loop_propagating(g, anchor) and rep.identity != anchor:
        raise InternalContradiction(
            f"loop-propagating anchor {anchor!r} did not become the identity"
        )
    if is_locally_commutative(g, anchor) and not rep.commutative:
        raise InternalContradiction(
            f"locally commutative anchor {anchor!r} gave a non-commutative table"
        )
    if is_co_deterministic(g) and not rep.right_cancellative:
        raise InternalContradiction(
            "co-deterministic graph gave a non-right-cancellative table"
        )


def path_operation(g: Graph, anchor) -> MagmaTable:
    """The monoid read off witness paths from a propagating root.

    s*t runs, from s, the breadth-first witness word of t; propagation of
    the anchor makes the product independent of the witness choice.  The
    result is verified to be a monoid with the anchor as identity.
    """
    _require_deterministic(g)
    _require_vertex(g, anchor)
    if reachable_from(g, {anchor}) != g.vertices:
        raise PreconditionFailed(f"{anchor!r} is not a root")
    _require_propagating(g, anchor)
    words = witness_words(g, anchor)
    carrier = g.sorted_vertices
    rows = []
    for s in carrier:
        row = []
        for t in carrier:
            product = _run_unique(g, s, words[t])
            if product is None:
                raise RunFailedError(
                    f"witness word {words[t]} for {t!r} cannot run from {s!r}"
                )
            row.append(product)
        rows.append(tuple(row))
    table = MagmaTable(carrier, tuple(rows))
    rep = axiom_report(table)
    if not rep.associative or rep.identity != anchor:
        raise InternalContradiction(
            f"path operation at {anchor!r} is not a monoid with that identity"
        )
    return table


def chain_operation(g: Graph, anchor) -> MagmaTable:
    """The operation read off witness chains (paths allowed to go backwards).

    Computed as the path operation of the bar graph.  The result is a
    right-cancellative monoid; when the anchor is also source- and
    target-complete it is a group generated by the anchor's successors,
    and a chain-commutative graph yields a commutative table.
    """
    _require_deterministic(g)
    _require_co_deterministic(g)
    _require_vertex(g, anchor)
    if not _is_connected(g):
        raise PreconditionFailed("graph is not connected")
    bar = bar_graph(g)
    _require_propagating(bar, anchor, kind="chain-propagating")
    table = path_operation(bar, anchor)
    rep = axiom_report(table)
    if not rep.right_cancellative:
        raise InternalContradiction("chain operation is not right-cancellative")
    if g.out_labels(anchor) == g.alphabet and g.in_labels(anchor) == g.alphabet:
        if not is_group(table):
            raise InternalContradiction(
                "source- and target-complete anchor did not yield a group"
            )
        generated = closure(table, g.successors(anchor), "group")
        if generated != frozenset(table.carrier):
            raise InternalContradiction(
                "the anchor's successors do not generate the chain group"
            )
    if is_chain_commutative(g) and not rep.commutative:
        raise InternalContradiction(
            "chain-commutative graph gave a non-commutative chain operation"
        )
    return table


def _successor_labels(g, anchor):
    """Map each successor of an out-simple anchor to its unique edge label."""
    out = {}
    for a, t in g.out_edges(anchor):
        if t in out:
            raise PreconditionFailed(f"{anchor!r} is not out-simple")
        out[t] = a
    return out


def _completion_base(g, anchor):
    _require_deterministic(g)
    _require_vertex(g, anchor)
    report = structural_report(g)
    if not report.source_complete:
        raise PreconditionFailed("graph is not source-complete")
    if anchor not in report.out_simple_vertices:
        raise PreconditionFailed(f"{anchor!r} is not out-simple")
    label_of = _successor_labels(g, anchor)
    generators = frozenset(label_of)
    # every original edge, relabeled by the anchor's successor for its label
    successor_of = {a: q for q, a in label_of.items()}
    core = frozenset(Edge(s, successor_of[a], t) for s, a, t in g.edges)
    identity_block = frozenset(
        Edge(anchor, s, s) for s in g.vertices - generators
    )
    return label_of, generators, core, identity_block


def _check_completion(g, anchor, completed, label_of, locally_commutative=False):
    """Postconditions every completion promises; failures are checker bugs."""
    report = structural_report(completed)
    if not report.deterministic:
        raise InternalContradiction("completion is not deterministic")
    if not report.source_complete:
        raise InternalContradiction("completion is not source-complete")
    if anchor not in report.out_simple_vertices:
        raise InternalContradiction("anchor lost out-simplicity")
    if completed.successors(anchor) != completed.vertices:
        raise InternalContradiction("anchor is not a 1-root of the completion")
    relabeled = frozenset(
        Edge(s, label_of[q], t)
        for s, q, t in restrict_labels(completed, frozenset(label_of)).edges
    )
    if relabeled != g.edges:
        raise InternalContradiction("completion does not restrict back to the input")
    if locally_commutative and not is_locally_commutative(completed, anchor):
        raise InternalContradiction("anchor lost local commutativity")
    return completed


def left_unital_completion(g: Graph, anchor) -> Graph:
    """Extend a graph to the full Cayley graph of a magma with left identity.

    Labels of the result are the vertices themselves; restricting to the
    anchor's successors and renaming labels recovers the input.
    """
    label_of, generators, core, identity_block = _completion_base(g, anchor)
    rest = frozenset(
        Edge(s, t, anchor)
        for s in g.vertices - {anchor}
        for t in g.vertices - generators
    )
    completed = Graph(core | identity_block | rest)
    return _check_completion(g, anchor, completed, label_of)


def unital_completion(g: Graph, anchor) -> Graph:
    """Like the left-unital completion, but the anchor becomes a two-sided
    identity; requires the anchor loop-propagating."""
    label_of, generators, core, identity_block = _completion_base(g, anchor)
    if not is_loop_propagating(g, anchor):
        raise PreconditionFailed(f"{anchor!r} is not loop-propagating")
    loops = (
        frozenset(Edge(s, anchor, s) for s in g.vertices - {anchor})
        if anchor not in generators
        else frozenset()
    )
    rest = frozenset(
        Edge(s, t, anchor)
        for s in g.vertices - {anchor}
        for t in g.vertices - (generators | {anchor})
    )
    completed = Graph(core | identity_block | loops | rest)
    return _check_completion(g, anchor, completed, label_of)


def commutative_unital_completion(g: Graph, anchor) -> Graph:
    """Completion whose edge operation is a commutative unital magma.

    Requires the anchor out-simple, loop-propagating and locally
    commutative; the anchor keeps local commutativity in the result.
    """
    label_of, generators, core, identity_block = _completion_base(g, anchor)
    if not is_loop_propagating(g, anchor):
        raise PreconditionFailed(f"{anchor!r} is not loop-propagating")
    if not is_locally_commutative(g, anchor):
        raise PreconditionFailed(f"{anchor!r} is not locally commutative")
    outside = g.vertices - (generators | {anchor})
    loops = (
        frozenset(Edge(s, anchor, s) for s in g.vertices - {anchor})
        if anchor not in generators
        else frozenset()
    )
    collapse = frozenset(Edge(s, t, anchor) for s in outside for t in outside)
    swapped = frozenset(
        Edge(q, s, t)
        for s, a, t in g.edges
        if s in outside
        for q in g.targets(anchor, a)
        if q != anchor
    )
    completed = Graph(core | identity_block | loops | collapse | swapped)
    return _check_completion(
        g, anchor, completed, label_of, locally_commutative=True
    )


def check_injection(g: Graph, injection) -> dict[str, str]:
    """An injection assigns a distinct vertex to every label of the graph."""
    if set(injection) != set(g.alphabet):
        raise LabelingError("injection domain must be exactly the alphabet")
    values = list(injection.values())
    if len(set(values)) != len(values):
        raise LabelingError("injection must be injective")
    unknown = set(values) - set(g.vertices)
    if unknown:
        raise UnknownVertexError(f"injection targets unknown vertices: {sorted(unknown)}")
    return dict(injection)


def adjoin_root(g: Graph, injection) -> Graph:
    """Add a fresh vertex with one edge per label onto the injected vertices.

    The fresh root is out-simple by construction and is a root of the
    result exactly when the graph is accessible from the injected set.
    """
    injection = check_injection(g, injection)
    if FRESH_ROOT in g.vertices:
        raise PreconditionFailed(f"graph already contains {FRESH_ROOT!r}")
    extra = frozenset(Edge(FRESH_ROOT, a, v) for a, v in injection.items())
    return Graph(g.edges | extra)


def group_completion(g: Graph) -> Graph:
    """Add reversed bar-labeled edges where no reverse edge exists at all."""
    _require_deterministic(g)
    _require_co_deterministic(g)
    extra = frozenset(
        Edge(t, bar_label(a), s)
        for s, a, t in g.edges
        if not g.has_any_edge(t, s)
    )
    return Graph(g.edges | extra)


def _meet_condition(g, injection):
    """Both orders of injected generators join: i(a) -b-> t <-a- i(b)."""
    labels = g.sorted_alphabet
    return all(
        g.targets(injection[a], b) & g.targets(injection[b], a)
        for a in labels
        for b in labels
    )


def _image_relation(g, start, image):
    """All positions an image path can occupy while tracking a start path.

    Maps each vertex x reachable from ``start`` to the set of vertices the
    parallel run from ``image`` can sit at after the same word (None when
    that run has died).  Both runs are deterministic, so the relation is a
    finite pair closure.
    """
    relation = {start: {image}}
    seen = {(start, image)}
    queue = deque(seen)
    while queue:
        x, y = queue.popleft()
        for a, x2 in g.out_edges(x):
            if y is None:
                y2 = None
            else:
                ts = g.targets(y, a)
                y2 = next(iter(ts)) if ts else None
            if (x2, y2) not in seen:
                seen.add((x2, y2))
                relation.setdefault(x2, set()).add(y2)
                queue.append((x2, y2))
    return relation


def _joins_project(g, source_pair, target_pair):
    """Every joint run of the source pair joins the target pair too.

    Decides: whenever the two source vertices reach a common vertex along
    words u and v, the two target vertices reach a common vertex along the
    same u and v.  A join at x forces every tracked image of x from both
    sides to be one and the same live vertex.
    """
    first = _image_relation(g, source_pair[0], target_pair[0])
    second = _image_relation(g, source_pair[1], target_pair[1])
    for x in first.keys() & second.keys():
        images = first[x] | second[x]
        if len(images) != 1 or None in images:
            return False
    return True


def _backward_join_condition(g, injection):
    """The reverse half of the two-sided semigroup condition.

    For all labels a, b, c: a join of i(c)'s a- and b-successors along
    (u, v) must force a join of i(a) and i(b) along the same words.
    """
    labels = g.sorted_alphabet
    checked = set()
    for a in labels:
        for b in labels:
            target_pair = (injection[a], injection[b])
            for c in labels:
                ic = injection[c]
                (ca,) = g.targets(ic, a)
                (cb,) = g.targets(ic, b)
                key = (ca, cb, target_pair)
                if key in checked:
                    continue
                checked.add(key)
                if not _joins_project(g, (ca, cb), target_pair):
                    return False
    return True


def _idempotence_along_witnesses(g, hat):
    """Each vertex must close a loop along its own witness word.

    One witness suffices: the fresh root propagates, so a vertex that
    loops along one of its witness words loops along all of them.
    """
    words = witness_words(hat, FRESH_ROOT)
    return all(_run_unique(g, s, words[s]) == s for s in g.sorted_vertices)


def find_semigroup_injection(g: Graph, variant="plain", max_candidates=10**6):
    """Search for an injection certifying a semigroup-style classification.

    Injections from the alphabet into the vertices are enumerated in
    lexicographic order (labels sorted, candidate vertex tuples sorted) and
    the first one passing the variant's conditions is returned:

    - the graph must be accessible from the injected vertices;
    - adjoining a fresh root over the injection must make that root
      propagating;
    - the cancellative variants additionally require the reverse
      implication, restricted as stated to the injected vertices: joins
      seen from an injected vertex's successors must project back onto
      joins of the injected vertices themselves;
    - commutative variants require both orders of injected generators to
      join; the semilattice variant additionally requires every vertex to
      loop along its witness word.

    Returns None when the exhausted search proves no injection works;
    raises SearchCapExceeded when the cap is hit first, so a capped search
    can never be mistaken for a refutation.
    """
    if variant not in SEMIGROUP_VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    _require_deterministic(g)
    cancellative = variant in ("cancellative", "cancellative_commutative")
    commutative = variant in (
        "commutative",
        "cancellative_commutative",
        "semilattice",
    )
    if cancellative:
        _require_co_deterministic(g)
    labels = g.sorted_alphabet
    verts = g.sorted_vertices
    if len(labels) > len(verts):
        return None
    # a successful injection forces source-completeness, so bail out early
    if any(g.out_labels(v) != g.alphabet for v in verts):
        return None
    descendants = {v: reachable_from(g, {v}) for v in verts}
    vertex_set = g.vertices
    tested = 0
    for combo in permutations(verts, len(labels)):
        tested += 1
        if tested > max_candidates:
            raise SearchCapExceeded(
                f"no answer within {max_candidates} candidate injections"
            )
        reach = frozenset().union(*(descendants[v] for v in combo))
        if reach != vertex_set:
            continue
        injection = dict(zip(labels, combo))
        if commutative and not _meet_condition(g, injection):
            continue
        hat = adjoin_root(g, injection)
        if not is_propagating_vertex(hat, FRESH_ROOT):
            continue
        if cancellative and not _backward_join_condition(g, injection):
            continue
        if variant == "semilattice" and not _idempotence_along_witnesses(g, hat):
            continue
        return injection
    return None
