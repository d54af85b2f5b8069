import pytest

from corpus import deterministic_corpus

from cayley import (
    FRESH_ROOT,
    Graph,
    LabelingError,
    PreconditionFailed,
    adjoin_root,
    axiom_report,
    cayley_graph,
    chain_operation,
    commutative_unital_completion,
    edge_operation,
    find_semigroup_injection,
    group_completion,
    is_locally_commutative,
    is_loop_propagating,
    is_out_simple,
    left_unital_completion,
    path_operation,
    structural_report,
    subtable,
    table_equal,
    unital_completion,
    witness_words,
)
from cayley.catalog import catalog, cyclic_group, mag4_table, mon3_table, semi3_table


def g(*triples):
    return Graph.from_edges(triples)


class TestEdgeOperation:
    def test_mon3(self, mon3_graph):
        assert table_equal(edge_operation(mon3_graph, "r"), mon3_table())

    def test_mag4_full_cayley_graph(self):
        t = mag4_table()
        full = cayley_graph(t, t.carrier)
        assert table_equal(edge_operation(full, "r"), t)

    def test_single_loop(self):
        table = edge_operation(g(("x", "a", "x")), "x")
        assert table.carrier == ("x",)
        assert table.op("x", "x") == "x"

    def test_not_a_one_root(self, z3_graph):
        with pytest.raises(PreconditionFailed):
            edge_operation(z3_graph, "0")

    def test_requires_one_propagating(self, single_edge):
        with pytest.raises(PreconditionFailed):
            edge_operation(single_edge, "r")


class TestPathOperation:
    def test_mon3(self, mon3_graph):
        assert table_equal(path_operation(mon3_graph, "r"), mon3_table())

    def test_z3_addition(self, z3_graph):
        assert table_equal(path_operation(z3_graph, "0"), cyclic_group(3))

    def test_needs_root(self, single_edge):
        with pytest.raises(PreconditionFailed):
            path_operation(single_edge, "s")

    def test_needs_propagating(self, mon3_graph):
        with pytest.raises(PreconditionFailed):
            path_operation(mon3_graph, "s")

    def test_agrees_with_edge_operation_on_one_rooted_inputs(self):
        # when both apply and every vertex is a direct successor of the
        # anchor, single edges and witness paths read off the same products
        from cayley import is_propagating_vertex, reachable_from

        for graph in deterministic_corpus()[::23]:
            for anchor in graph.sorted_vertices:
                if graph.successors(anchor) != graph.vertices:
                    continue
                try:
                    if not is_propagating_vertex(graph, anchor):
                        continue
                except Exception:
                    continue
                edge_table = edge_operation(graph, anchor)
                path_table = path_operation(graph, anchor)
                assert table_equal(edge_table, path_table)


class TestWitnessWords:
    def test_bfs_words_are_shortest_lex(self, mon3_graph):
        words = witness_words(mon3_graph, "r")
        assert words == {"r": (), "s": ("b",), "t": ("c",)}

    def test_covers_reachable_set(self, z3_graph):
        assert set(witness_words(z3_graph, "1")) == {"0", "1", "2"}


class TestChainOperation:
    def test_z3_group(self, z3_graph):
        assert table_equal(chain_operation(z3_graph, "0"), cyclic_group(3))

    def test_z2(self, z2_graph):
        assert table_equal(chain_operation(z2_graph, "0"), cyclic_group(2))

    def test_two_labels(self):
        graph = g(("0", "a", "1"), ("1", "a", "0"), ("0", "b", "0"), ("1", "b", "1"))
        table = chain_operation(graph, "0")
        assert table.op("1", "1") == "0"
        assert axiom_report(table).identity == "0"

    def test_needs_connected(self):
        graph = g(("0", "a", "1"), ("1", "a", "0"), ("2", "a", "2"))
        with pytest.raises(PreconditionFailed):
            chain_operation(graph, "0")

    def test_group_rebuild_over_anchor_successors(self):
        # with a source- and target-complete in/out-simple anchor, the graph
        # is the Cayley graph of the chain group over the anchor's successors
        from cayley.catalog import symmetric_group3

        s3 = symmetric_group3()
        graph = cayley_graph(s3, ["f", "r"], {"f": "x", "r": "y"})
        table = chain_operation(graph, "1")
        assert table_equal(table, s3)
        labeling = {q: a for a, q in graph.out_edges("1")}
        rebuilt = cayley_graph(table, sorted(labeling), labeling)
        assert rebuilt == graph


class TestCompletions:
    def test_left_unital_example(self):
        graph = g(("r", "a", "s"), ("s", "a", "s"))
        completed = left_unital_completion(graph, "r")
        assert completed == g(
            ("r", "s", "s"), ("s", "s", "s"), ("r", "r", "r"), ("s", "r", "r")
        )

    def test_unital_example(self):
        graph = g(("r", "a", "s"), ("s", "a", "s"))
        completed = unital_completion(graph, "r")
        assert completed == g(
            ("r", "s", "s"), ("s", "s", "s"), ("r", "r", "r"), ("s", "r", "s")
        )

    def test_smallest_commutative(self):
        assert commutative_unital_completion(g(("r", "a", "r")), "r") == g(
            ("r", "r", "r")
        )

    def test_mag4_completion_table(self, mag4_graph):
        completed = commutative_unital_completion(mag4_graph, "r")
        table = edge_operation(completed, "r")
        rep = axiom_report(table)
        assert rep.commutative and rep.identity == "r"
        assert table_equal(table, mag4_table())

    def test_anchor_is_one_root(self):
        for graph in deterministic_corpus()[::31]:
            rep = structural_report(graph)
            if not rep.source_complete:
                continue
            for anchor in sorted(rep.out_simple_vertices):
                completed = left_unital_completion(graph, anchor)
                assert completed.successors(anchor) == completed.vertices

    def test_postconditions_on_corpus(self):
        # the completions re-check their own promises; surviving without
        # InternalContradiction across the corpus is the assertion
        checked = 0
        for graph in deterministic_corpus()[::13]:
            rep = structural_report(graph)
            if not rep.source_complete:
                continue
            for anchor in sorted(rep.out_simple_vertices):
                left_unital_completion(graph, anchor)
                checked += 1
                if is_loop_propagating(graph, anchor):
                    unital_completion(graph, anchor)
                    if is_locally_commutative(graph, anchor):
                        completed = commutative_unital_completion(graph, anchor)
                        assert is_locally_commutative(completed, anchor)
        assert checked > 0

    def test_precondition_failures(self, single_edge):
        with pytest.raises(PreconditionFailed):
            left_unital_completion(single_edge, "r")  # not source-complete


class TestAdjoinRoot:
    def test_single_loop(self):
        graph = g(("p", "a", "p"))
        assert adjoin_root(graph, {"a": "p"}) == g(
            ("p", "a", "p"), (FRESH_ROOT, "a", "p")
        )

    def test_semi3(self, semi3_graph):
        hat = adjoin_root(semi3_graph, {"a": "p", "b": "q"})
        assert hat.edges - semi3_graph.edges == {
            (FRESH_ROOT, "a", "p"),
            (FRESH_ROOT, "b", "q"),
        }
        assert is_out_simple(hat, FRESH_ROOT)

    def test_root_iff_accessible(self, semi3_graph):
        from cayley import reachable_from

        hat = adjoin_root(semi3_graph, {"a": "p", "b": "q"})
        assert reachable_from(hat, {FRESH_ROOT}) == hat.vertices
        # p is unreachable from {r, q}, so the fresh root is not a root
        partial = adjoin_root(semi3_graph, {"a": "r", "b": "q"})
        assert reachable_from(partial, {FRESH_ROOT}) != partial.vertices

    def test_rejects_non_injective(self, semi3_graph):
        with pytest.raises(LabelingError):
            adjoin_root(semi3_graph, {"a": "p", "b": "p"})

    def test_rejects_wrong_domain(self, semi3_graph):
        with pytest.raises(LabelingError):
            adjoin_root(semi3_graph, {"a": "p"})


class TestGroupCompletion:
    def test_mutual_edges_unchanged(self, z2_graph):
        assert group_completion(z2_graph) == z2_graph

    def test_single_edge(self, single_edge):
        assert group_completion(single_edge) == g(("r", "a", "s"), ("s", "~a", "r"))

    def test_z3(self, z3_graph):
        assert group_completion(z3_graph) == g(
            ("0", "a", "1"), ("1", "a", "2"), ("2", "a", "0"),
            ("1", "~a", "0"), ("2", "~a", "1"), ("0", "~a", "2"),
        )


class TestInjectionSearch:
    def test_semi3_semilattice(self, semi3_graph):
        assert find_semigroup_injection(semi3_graph, "semilattice") == {
            "a": "p",
            "b": "q",
        }

    def test_single_edge_plain(self, single_edge):
        assert find_semigroup_injection(single_edge, "plain") is None

    def test_z3_cancellative_commutative(self, z3_graph):
        # both "0" and the natural "1" satisfy the conditions; the
        # lexicographically least wins
        injection = find_semigroup_injection(z3_graph, "cancellative_commutative")
        assert injection == {"a": "0"}

    def test_mon3_natural_injection(self, mon3_graph):
        assert find_semigroup_injection(mon3_graph, "plain") == {
            "a": "r",
            "b": "s",
            "c": "t",
        }

    def test_synthesized_tables_rebuild_the_graph(self, semi3_graph):
        injection = find_semigroup_injection(semi3_graph, "semilattice")
        hat = adjoin_root(semi3_graph, injection)
        table = subtable(path_operation(hat, FRESH_ROOT), semi3_graph.vertices)
        assert table_equal(table, semi3_table())
        generators = sorted(injection.values())
        labeling = {v: a for a, v in injection.items()}
        assert cayley_graph(table, generators, labeling) == semi3_graph

    def test_search_cap(self, z3_graph):
        from cayley import SearchCapExceeded

        with pytest.raises(SearchCapExceeded):
            # cap of 0 cannot even look at the first candidate
            find_semigroup_injection(z3_graph, "plain", max_candidates=0)

    def test_catalog_semigroups_are_found(self):
        # every associative catalog table generated by its full carrier
        # admits an injection on its Cayley graph
        for name, table in catalog().items():
            rep = axiom_report(table)
            if not rep.associative:
                continue
            graph = cayley_graph(table, table.carrier)
            assert find_semigroup_injection(graph, "plain") is not None, name
