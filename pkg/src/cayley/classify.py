"""Class-level deciders: which algebraic structures a graph is a Cayley
graph of, with machine-checkable witnesses.

Each verdict carries either a witness (anchor vertex, injection, and a
synthesized operation table) or the first refuted condition as its reason.
Witness selection is deterministic: the lexicographically least qualifying
vertex or injection wins.  ``classify_all`` additionally cross-checks the
implication lattice between classes and rebuilds every witnessed Cayley
graph, raising InternalContradiction when theory and computation disagree.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import MagmaTable, subtable
from .build import cayley_graph
from .errors import InternalContradiction, SearchCapExceeded
from .graph import FRESH_ROOT, Graph
from .props import (
    StructuralReport,
    is_chain_propagating_vertex,
    is_commutative,
    is_deterministic,
    is_locally_commutative,
    is_loop_propagating,
    is_propagating_graph,
    is_propagating_vertex,
    is_vertex_transitive,
    structural_report,
)
from .synthesis import (
    adjoin_root,
    chain_operation,
    commutative_unital_completion,
    edge_operation,
    find_semigroup_injection,
    left_unital_completion,
    path_operation,
    unital_completion,
)

CLASS_IDS = (
    "magma_left_identity",
    "unital_magma",
    "commutative_unital_magma",
    "full_magma_variants",
    "monoid",
    "commutative_monoid",
    "right_cancellative_monoid",
    "left_cancellative_monoid",
    "cancellative_monoid",
    "left_cancellative_commutative_monoid",
    "cancellative_commutative_monoid",
    "semigroup",
    "commutative_semigroup",
    "cancellative_semigroup",
    "cancellative_commutative_semigroup",
    "semilattice",
    "group",
    "abelian_group",
)


@dataclass(frozen=True)
class ClassWitness:
    vertex: str | None = None
    injection: dict[str, str] | None = None
    table: MagmaTable | None = None
    subflags: dict[str, bool] | None = None


@dataclass(frozen=True)
class ClassVerdict:
    class_id: str
    holds: bool | None
    witness: ClassWitness | None = None
    reason: str | None = None


@dataclass(frozen=True)
class ClassificationReport:
    structural: StructuralReport
    verdicts: tuple[ClassVerdict, ...]

    def verdict(self, class_id) -> ClassVerdict:
        for v in self.verdicts:
            if v.class_id == class_id:
                return v
        raise KeyError(class_id)

    def holds(self, class_id):
        return self.verdict(class_id).holds


def _no(class_id, reason):
    return ClassVerdict(class_id, holds=False, reason=reason)


def _successor_labeling(g, anchor):
    """Generators and labeling used to rebuild a graph from a vertex witness."""
    labeling = {}
    for a, q in g.out_edges(anchor):
        labeling[q] = a
    return sorted(labeling), labeling


MAGMA_CLASS_IDS = (
    "magma_left_identity",
    "unital_magma",
    "commutative_unital_magma",
)


def classify_magma(g: Graph) -> list[ClassVerdict]:
    """Generalized Cayley graphs of magmas with a left identity, an
    identity, and a commutative operation with identity."""
    if not is_deterministic(g):
        return [_no(cid, "not deterministic") for cid in MAGMA_CLASS_IDS]
    report = structural_report(g)
    if not report.source_complete:
        return [_no(cid, "not source-complete") for cid in MAGMA_CLASS_IDS]
    out_simple = sorted(report.out_simple_vertices)
    loop_prop = [v for v in out_simple if is_loop_propagating(g, v)]
    commutative = [v for v in loop_prop if is_locally_commutative(g, v)]
    stages = (
        ("magma_left_identity", out_simple, left_unital_completion,
         "no out-simple vertex"),
        ("unital_magma", loop_prop, unital_completion,
         "no out-simple loop-propagating vertex"),
        ("commutative_unital_magma", commutative, commutative_unital_completion,
         "no out-simple loop-propagating locally commutative vertex"),
    )
    verdicts = []
    for class_id, candidates, completion, missing in stages:
        if not candidates:
            verdicts.append(_no(class_id, missing))
            continue
        anchor = candidates[0]
        table = edge_operation(completion(g, anchor), anchor)
        verdicts.append(
            ClassVerdict(
                class_id,
                holds=True,
                witness=ClassWitness(vertex=anchor, table=table),
            )
        )
    return verdicts


def classify_full_magma(g: Graph) -> ClassVerdict:
    """Is the graph the Cayley graph of a magma over its full carrier?

    Needs an out-simple 1-root; the sub-flags report which extra axioms
    the edge operation at that root provably enjoys.
    """
    cid = "full_magma_variants"
    if not is_deterministic(g):
        return _no(cid, "not deterministic")
    report = structural_report(g)
    if not report.source_complete:
        return _no(cid, "not source-complete")
    candidates = sorted(
        v for v in report.out_simple_vertices if g.successors(v) == g.vertices
    )
    if not candidates:
        return _no(cid, "no out-simple 1-root")
    anchor = candidates[0]
    table = edge_operation(g, anchor)
    subflags = {
        "commutative": is_locally_commutative(g, anchor),
        "has_identity": is_loop_propagating(g, anchor),
        "left_cancellative": report.simple,
        "right_cancellative": report.co_deterministic,
        "left_invertible": anchor in report.target_complete_vertices,
        "right_invertible": anchor in report.one_coroots,
    }
    return ClassVerdict(
        cid,
        holds=True,
        witness=ClassWitness(vertex=anchor, table=table, subflags=subflags),
    )


MONOID_CLASS_IDS = (
    "monoid",
    "commutative_monoid",
    "right_cancellative_monoid",
    "left_cancellative_monoid",
    "cancellative_monoid",
    "left_cancellative_commutative_monoid",
    "cancellative_commutative_monoid",
)


def classify_monoid(g: Graph) -> list[ClassVerdict]:
    """Cayley graphs of monoids and their cancellative/commutative variants."""
    if not is_deterministic(g):
        return [_no(cid, "not deterministic") for cid in MONOID_CLASS_IDS]
    report = structural_report(g)
    roots = sorted(report.roots)
    out_simple = report.out_simple_vertices

    def monoid_family(class_id, need_codet, need_commutative):
        # source-complete graph with a propagating out-simple root,
        # locally commutative for the commutative variant
        if need_codet and not report.co_deterministic:
            return _no(class_id, "not co-deterministic")
        if not report.source_complete:
            return _no(class_id, "not source-complete")
        if not roots:
            return _no(class_id, "no root")
        for r in roots:
            if r not in out_simple:
                continue
            if need_commutative and not is_locally_commutative(g, r):
                continue
            if is_propagating_vertex(g, r):
                return ClassVerdict(
                    class_id,
                    holds=True,
                    witness=ClassWitness(vertex=r, table=path_operation(g, r)),
                )
        kind = "propagating out-simple root"
        if need_commutative:
            kind = "locally commutative " + kind
        return _no(class_id, f"no {kind}")

    def cancellative_family(class_id, need_codet, need_commutative):
        # rooted simple propagating graph, commutative for the variants
        if need_codet and not report.co_deterministic:
            return _no(class_id, "not co-deterministic")
        if not roots:
            return _no(class_id, "no root")
        if not report.simple:
            return _no(class_id, "not simple")
        if not is_propagating_graph(g):
            return _no(class_id, "not a propagating graph")
        if need_commutative and not is_commutative(g):
            return _no(class_id, "not commutative")
        r = roots[0]
        return ClassVerdict(
            class_id,
            holds=True,
            witness=ClassWitness(vertex=r, table=path_operation(g, r)),
        )

    return [
        monoid_family("monoid", False, False),
        monoid_family("commutative_monoid", False, True),
        monoid_family("right_cancellative_monoid", True, False),
        cancellative_family("left_cancellative_monoid", False, False),
        cancellative_family("cancellative_monoid", True, False),
        cancellative_family("left_cancellative_commutative_monoid", False, True),
        cancellative_family("cancellative_commutative_monoid", True, True),
    ]


SEMIGROUP_CLASS_IDS = (
    "semigroup",
    "commutative_semigroup",
    "cancellative_semigroup",
    "cancellative_commutative_semigroup",
    "semilattice",
)

_SEMIGROUP_VARIANT_OF = {
    "semigroup": "plain",
    "commutative_semigroup": "commutative",
    "cancellative_semigroup": "cancellative",
    "cancellative_commutative_semigroup": "cancellative_commutative",
    "semilattice": "semilattice",
}


def classify_semigroup(g: Graph, max_candidates=10**6) -> list[ClassVerdict]:
    """Cayley graphs of semigroups, decided by injection search."""
    verdicts = []
    for class_id in SEMIGROUP_CLASS_IDS:
        variant = _SEMIGROUP_VARIANT_OF[class_id]
        if not is_deterministic(g):
            verdicts.append(_no(class_id, "not deterministic"))
            continue
        if variant.startswith("cancellative") and not structural_report(
            g
        ).co_deterministic:
            verdicts.append(_no(class_id, "not co-deterministic"))
            continue
        try:
            injection = find_semigroup_injection(g, variant, max_candidates)
        except SearchCapExceeded:
            verdicts.append(
                ClassVerdict(class_id, holds=None, reason="unknown: search capped")
            )
            continue
        if injection is None:
            verdicts.append(_no(class_id, "no admissible injection"))
            continue
        table = subtable(
            path_operation(adjoin_root(g, injection), FRESH_ROOT), g.vertices
        )
        verdicts.append(
            ClassVerdict(
                class_id,
                holds=True,
                witness=ClassWitness(injection=injection, table=table),
            )
        )
    return verdicts


GROUP_CLASS_IDS = ("group", "abelian_group")


def classify_group(g: Graph) -> list[ClassVerdict]:
    """Cayley graphs of groups, decided on two independent routes.

    The global route checks connected + simple + vertex-transitive; the
    vertex route looks for a chain-propagating source- and target-complete
    in- and out-simple vertex.  The two must agree.
    """
    if not is_deterministic(g):
        return [_no(cid, "not deterministic") for cid in GROUP_CLASS_IDS]
    report = structural_report(g)
    if not report.co_deterministic:
        return [_no(cid, "not co-deterministic") for cid in GROUP_CLASS_IDS]

    vertex_route_candidates = []
    if report.connected:
        for v in g.sorted_vertices:
            if (
                v in report.source_complete_vertices
                and v in report.target_complete_vertices
                and v in report.in_simple_vertices
                and v in report.out_simple_vertices
                and is_chain_propagating_vertex(g, v)
            ):
                vertex_route_candidates.append(v)
    global_route = (
        report.connected
        and report.simple
        and is_vertex_transitive(g)
    )
    if global_route != bool(vertex_route_candidates):
        raise InternalContradiction(
            "group decision routes disagree: "
            f"global={global_route} vertex-route={vertex_route_candidates}"
        )

    commutative = global_route and is_commutative(g)
    abelian_candidates = [
        v for v in vertex_route_candidates if is_locally_commutative(g, v)
    ]
    if commutative != bool(abelian_candidates):
        raise InternalContradiction(
            "abelian group decision routes disagree: "
            f"global={commutative} vertex-route={abelian_candidates}"
        )

    def refusal(class_id):
        if not report.connected:
            return _no(class_id, "not connected")
        if not report.simple:
            return _no(class_id, "not simple")
        if not global_route:
            return _no(class_id, "not vertex-transitive")
        return _no(class_id, "not commutative")

    verdicts = []
    if global_route:
        anchor = vertex_route_candidates[0]
        verdicts.append(
            ClassVerdict(
                "group",
                holds=True,
                witness=ClassWitness(vertex=anchor, table=chain_operation(g, anchor)),
            )
        )
    else:
        verdicts.append(refusal("group"))
    if commutative:
        anchor = abelian_candidates[0]
        verdicts.append(
            ClassVerdict(
                "abelian_group",
                holds=True,
                witness=ClassWitness(vertex=anchor, table=chain_operation(g, anchor)),
            )
        )
    else:
        verdicts.append(refusal("abelian_group"))
    return verdicts


# consequent must hold whenever the antecedent does
_IMPLICATIONS = (
    ("abelian_group", "group"),
    ("group", "cancellative_monoid"),
    ("cancellative_monoid", "left_cancellative_monoid"),
    ("cancellative_monoid", "right_cancellative_monoid"),
    ("commutative_monoid", "monoid"),
    ("monoid", "semigroup"),
    ("semilattice", "commutative_semigroup"),
)


def _rebuild_from_witness(g, verdict):
    """Rebuild the Cayley graph a witness describes; it must equal the input."""
    witness = verdict.witness
    if witness is None or witness.table is None:
        return
    if witness.injection is not None:
        generators = sorted(witness.injection.values())
        labeling = {v: a for a, v in witness.injection.items()}
    else:
        generators, labeling = _successor_labeling(g, witness.vertex)
    rebuilt = cayley_graph(witness.table, generators, labeling)
    if rebuilt != g:
        raise InternalContradiction(
            f"witness for {verdict.class_id} does not rebuild the input graph"
        )


def classify_all(g: Graph, max_candidates=10**6) -> ClassificationReport:
    """Run every decider, cross-check implications, revalidate witnesses."""
    verdicts = (
        classify_magma(g)
        + [classify_full_magma(g)]
        + classify_monoid(g)
        + classify_semigroup(g, max_candidates)
        + classify_group(g)
    )
    by_id = {v.class_id: v for v in verdicts}
    ordered = tuple(by_id[cid] for cid in CLASS_IDS)
    for antecedent, consequent in _IMPLICATIONS:
        if by_id[antecedent].holds and by_id[consequent].holds is False:
            raise InternalContradiction(
                f"{antecedent} holds but {consequent} does not"
            )
    for verdict in ordered:
        if verdict.holds:
            _rebuild_from_witness(g, verdict)
    return ClassificationReport(structural=structural_report(g), verdicts=ordered)
