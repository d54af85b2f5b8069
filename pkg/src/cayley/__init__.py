"""Cayley graph recognition and synthesis for finite algebraic structures."""

from .algebra import (
    AxiomReport,
    MagmaTable,
    axiom_report,
    closure,
    parse_table,
    serialize_table,
    subtable,
    table_equal,
)
from .build import cayley_graph, default_labeling
from .classify import (
    CLASS_IDS,
    ClassificationReport,
    ClassVerdict,
    ClassWitness,
    classify_all,
    classify_full_magma,
    classify_group,
    classify_magma,
    classify_monoid,
    classify_semigroup,
)
from .errors import (
    CayleyError,
    EmptyGraphError,
    FormatError,
    InconsistentProductError,
    InternalContradiction,
    LabelingError,
    ModePreconditionError,
    NotCoDeterministicError,
    NotDeterministicError,
    PreconditionFailed,
    ReservedPrefixError,
    RunFailedError,
    SearchCapExceeded,
    UnknownElementError,
    UnknownLabelError,
    UnknownVertexError,
)
from .graph import (
    BAR_PREFIX,
    FRESH_ROOT,
    Edge,
    Graph,
    accessible_subgraph,
    bar_graph,
    bar_label,
    inverse,
    mirror_chain,
    parse_graph,
    reachable_from,
    restrict_labels,
    restrict_vertices,
    run_word,
    serialize_graph,
)
from .props import (
    MorphismWitness,
    StructuralReport,
    forced_morphism,
    is_1_propagating_vertex,
    is_chain_commutative,
    is_chain_propagating_vertex,
    is_co_deterministic,
    is_commutative,
    is_deterministic,
    is_forward_vertex_transitive,
    is_in_simple,
    is_locally_commutative,
    is_loop_propagating,
    is_out_simple,
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
    group_completion,
    left_unital_completion,
    path_operation,
    unital_completion,
    witness_words,
)

__version__ = "0.1.0"
