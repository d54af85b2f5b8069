"""Finite edge-labeled directed graphs and their basic constructions.

A graph is identified with its finite, non-empty set of labeled edges;
vertices and alphabet are derived, so isolated vertices cannot exist.
Reversed ("bar") labels are realized by prefixing ``~`` and fresh internal
vertices by prefixing ``__``; both prefixes are rejected in user input so
derived constructions can never collide with it.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple

from .errors import (
    EmptyGraphError,
    FormatError,
    ReservedPrefixError,
    UnknownLabelError,
    UnknownVertexError,
)

BAR_PREFIX = "~"
FRESH_PREFIX = "__"
FRESH_ROOT = FRESH_PREFIX + "root"


class Edge(NamedTuple):
    src: str
    label: str
    dst: str


def check_token(text, user=False):
    """Validate a vertex or label token, returning it unchanged.

    With ``user=True`` the reserved prefixes are rejected as well.
    """
    if not isinstance(text, str) or not text:
        raise FormatError(f"empty or non-string token {text!r}")
    if any(c.isspace() for c in text):
        raise FormatError(f"token {text!r} contains whitespace")
    if user and (text.startswith(BAR_PREFIX) or text.startswith(FRESH_PREFIX)):
        raise ReservedPrefixError(f"token {text!r} starts with a reserved prefix")
    return text


def bar_label(label):
    """Toggle a label between its plain and its reversed (``~``) form."""
    return label[1:] if label.startswith(BAR_PREFIX) else BAR_PREFIX + label


def mirror_chain(letters):
    """Reverse a chain word and toggle every letter.

    Running a chain word from s to t is equivalent to running its mirror
    from t back to s.
    """
    return tuple(bar_label(a) for a in reversed(_as_letters(letters)))


def _as_letters(letters):
    if isinstance(letters, str):
        return tuple(letters)
    return tuple(letters)


@dataclass(frozen=True)
class Graph:
    """An immutable finite set of labeled edges.

    Vertices are exactly the endpoints of edges and the alphabet exactly
    the labels that occur, so the empty graph is not representable.
    """

    edges: frozenset[Edge]

    def __post_init__(self):
        if not self.edges:
            raise EmptyGraphError("a graph must contain at least one edge")
        for e in self.edges:
            check_token(e.src)
            check_token(e.label)
            check_token(e.dst)

    @classmethod
    def from_edges(cls, triples: Iterable[tuple[str, str, str]]) -> "Graph":
        return cls(frozenset(Edge(*t) for t in triples))

    def __repr__(self):
        shown = ", ".join(f"{s}-{a}->{t}" for s, a, t in self.sorted_edges[:4])
        more = "" if len(self.edges) <= 4 else f", +{len(self.edges) - 4}"
        return f"Graph({shown}{more})"

    @cached_property
    def sorted_edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    @cached_property
    def vertices(self) -> frozenset[str]:
        return frozenset(v for e in self.edges for v in (e.src, e.dst))

    @cached_property
    def alphabet(self) -> frozenset[str]:
        return frozenset(e.label for e in self.edges)

    @cached_property
    def sorted_vertices(self) -> tuple[str, ...]:
        return tuple(sorted(self.vertices))

    @cached_property
    def sorted_alphabet(self) -> tuple[str, ...]:
        return tuple(sorted(self.alphabet))

    @cached_property
    def _out(self) -> dict[str, dict[str, frozenset[str]]]:
        table: dict[str, dict[str, set[str]]] = {v: {} for v in self.vertices}
        for s, a, t in self.edges:
            table[s].setdefault(a, set()).add(t)
        return {
            v: {a: frozenset(ts) for a, ts in row.items()} for v, row in table.items()
        }

    @cached_property
    def _in(self) -> dict[str, dict[str, frozenset[str]]]:
        table: dict[str, dict[str, set[str]]] = {v: {} for v in self.vertices}
        for s, a, t in self.edges:
            table[t].setdefault(a, set()).add(s)
        return {
            v: {a: frozenset(ss) for a, ss in row.items()} for v, row in table.items()
        }

    def targets(self, vertex, label) -> frozenset[str]:
        """All t with an edge vertex --label--> t."""
        return self._out.get(vertex, {}).get(label, frozenset())

    def sources(self, vertex, label) -> frozenset[str]:
        """All s with an edge s --label--> vertex."""
        return self._in.get(vertex, {}).get(label, frozenset())

    def out_labels(self, vertex) -> frozenset[str]:
        return frozenset(self._out.get(vertex, {}))

    def in_labels(self, vertex) -> frozenset[str]:
        return frozenset(self._in.get(vertex, {}))

    def successors(self, vertex) -> frozenset[str]:
        return frozenset(t for ts in self._out.get(vertex, {}).values() for t in ts)

    def predecessors(self, vertex) -> frozenset[str]:
        return frozenset(s for ss in self._in.get(vertex, {}).values() for s in ss)

    def out_edges(self, vertex):
        """Edges leaving a vertex, sorted by (label, target)."""
        row = self._out.get(vertex, {})
        return [(a, t) for a in sorted(row) for t in sorted(row[a])]

    def has_edge(self, src, label, dst) -> bool:
        return Edge(src, label, dst) in self.edges

    def has_any_edge(self, src, dst) -> bool:
        """True if some edge of any label runs from src to dst."""
        return any(dst in ts for ts in self._out.get(src, {}).values())


def parse_graph(text: str) -> Graph:
    """Parse the ``.lgr`` edge-list format.

    One edge per line as three whitespace-separated tokens ``src label dst``;
    blank lines and ``#`` comment lines are skipped; duplicate lines collapse.
    """
    edges = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 3:
            raise FormatError(
                f"expected 'src label dst', got {len(fields)} fields", line=lineno
            )
        try:
            for field in fields:
                check_token(field, user=True)
        except ReservedPrefixError as exc:
            raise ReservedPrefixError(str(exc), line=lineno) from None
        edges.add(Edge(*fields))
    if not edges:
        raise EmptyGraphError("no edges in input")
    return Graph(frozenset(edges))


def serialize_graph(g: Graph) -> str:
    """Canonical text form: one edge per line, sorted by (src, label, dst)."""
    return "".join(f"{s} {a} {t}\n" for s, a, t in g.sorted_edges)


def inverse(g: Graph) -> Graph:
    """The graph with every edge reversed (labels kept)."""
    return Graph(frozenset(Edge(t, a, s) for s, a, t in g.edges))


def restrict_vertices(g: Graph, keep) -> Graph:
    """Induced subgraph on a vertex set; error if no edge survives."""
    keep = frozenset(keep)
    edges = frozenset(e for e in g.edges if e.src in keep and e.dst in keep)
    if not edges:
        raise EmptyGraphError("vertex restriction left no edges")
    return Graph(edges)


def restrict_labels(g: Graph, keep) -> Graph:
    """Subgraph of the edges whose label lies in ``keep``."""
    keep = frozenset(keep)
    edges = frozenset(e for e in g.edges if e.label in keep)
    if not edges:
        raise EmptyGraphError("label restriction left no edges")
    return Graph(edges)


def reachable_from(g: Graph, starts) -> frozenset[str]:
    """Vertices reachable from ``starts`` by directed paths (starts included)."""
    seen = set(starts)
    queue = deque(sorted(seen))
    while queue:
        v = queue.popleft()
        for t in g.successors(v):
            if t not in seen:
                seen.add(t)
                queue.append(t)
    return frozenset(seen)


def accessible_subgraph(g: Graph, starts) -> Graph:
    """The greatest subgraph accessible from ``starts`` (breadth-first closure)."""
    starts = frozenset(starts)
    unknown = starts - g.vertices
    if unknown:
        raise UnknownVertexError(f"unknown vertices: {sorted(unknown)}")
    return restrict_vertices(g, reachable_from(g, starts))


def bar_graph(g: Graph) -> Graph:
    """The graph plus a ``~``-labeled reversed copy of every edge.

    Paths of the result are the chains of the input; restricting its labels
    back to the original alphabet recovers the input.
    """
    extra = (Edge(t, bar_label(a), s) for s, a, t in g.edges)
    return Graph(g.edges | frozenset(extra))


def run_word(g: Graph, source, letters) -> frozenset[str]:
    """All vertices reached from ``source`` along the given letters.

    Letters may be plain labels or ``~``-prefixed labels, which traverse
    edges backwards; a string argument is taken letter by letter.  The empty
    word returns ``{source}``.
    """
    if source not in g.vertices:
        raise UnknownVertexError(f"unknown vertex {source!r}")
    word = _as_letters(letters)
    for a in word:
        base = a[len(BAR_PREFIX):] if a.startswith(BAR_PREFIX) else a
        if base not in g.alphabet:
            raise UnknownLabelError(f"letter {a!r} not in the alphabet or its bar copy")
    current = {source}
    for a in word:
        if a.startswith(BAR_PREFIX):
            base = a[len(BAR_PREFIX):]
            current = {s for v in current for s in g.sources(v, base)}
        else:
            current = {t for v in current for t in g.targets(v, a)}
        if not current:
            break
    return frozenset(current)
