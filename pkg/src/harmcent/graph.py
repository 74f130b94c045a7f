"""Simple undirected graphs over dense integer vertex indices.

Vertices are 0..order-1.  Self-loops and multi-edges are impossible by
construction; adjacency is kept symmetric.  Graphs are cheap mutable
builders until analysis starts, after which they are treated as frozen
(no API mutates a graph during analysis).
"""
from __future__ import annotations


class Graph:
    """Adjacency-set representation of a finite simple undirected graph."""

    __slots__ = ("_order", "_adj", "_frozen_adj")

    def __init__(self, order: int):
        if order < 1:
            raise ValueError(f"graph order must be at least 1, got {order}")
        self._order = order
        self._adj: list[set[int]] = [set() for _ in range(order)]
        self._frozen_adj: tuple[tuple[int, ...], ...] | None = None

    @property
    def order(self) -> int:
        """Number of vertices."""
        return self._order

    def size(self) -> int:
        """Number of edges."""
        return sum(len(nbrs) for nbrs in self._adj) // 2

    def _check_vertex(self, u: int) -> None:
        if not 0 <= u < self._order:
            raise ValueError(f"vertex {u} out of range [0, {self._order})")

    def add_edge(self, u: int, v: int) -> None:
        """Insert the undirected edge (u, v).  Re-adding it is a no-op."""
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise ValueError(f"self-loop at vertex {u} rejected")
        self._adj[u].add(v)
        self._adj[v].add(u)
        self._frozen_adj = None

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return v in self._adj[u]

    def degree(self, u: int) -> int:
        self._check_vertex(u)
        return len(self._adj[u])

    def neighbors(self, u: int) -> list[int]:
        """Sorted neighbor indices of u."""
        self._check_vertex(u)
        return sorted(self._adj[u])

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, lexicographically sorted."""
        return sorted(
            (u, v) for u in range(self._order) for v in self._adj[u] if u < v
        )

    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Per-vertex sorted neighbor tuples, cached for traversal loops."""
        if self._frozen_adj is None:
            self._frozen_adj = tuple(tuple(sorted(nbrs)) for nbrs in self._adj)
        return self._frozen_adj

    def copy(self) -> Graph:
        g = Graph(self._order)
        for u in range(self._order):
            g._adj[u] = set(self._adj[u])
        return g

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._order == other._order and self._adj == other._adj

    def __hash__(self):
        return hash((self._order, frozenset(frozenset(a) for a in self._adj)))

    def __repr__(self) -> str:
        return f"Graph(order={self._order}, size={self.size()})"


def new_graph(order: int) -> Graph:
    """Graph with `order` vertices and no edges."""
    return Graph(order)


def parse_edge_list(text: str) -> Graph:
    """Parse the plain-text edge-list format.

    The first non-comment line is the vertex count; every further
    non-comment line is one edge as two whitespace-separated 0-based
    indices.  Lines starting with '#' are comments, blank lines are
    skipped, CRLF is accepted.
    """
    graph: Graph | None = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if graph is None:
            if len(fields) != 1:
                raise ValueError(
                    f"line {lineno}: expected a single vertex count, got {line!r}"
                )
            try:
                order = int(fields[0])
            except ValueError:
                raise ValueError(
                    f"line {lineno}: vertex count is not an integer: {line!r}"
                ) from None
            if order < 1:
                raise ValueError(f"line {lineno}: vertex count must be >= 1")
            graph = Graph(order)
            continue
        if len(fields) != 2:
            raise ValueError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise ValueError(
                f"line {lineno}: edge endpoints must be integers: {line!r}"
            ) from None
        try:
            graph.add_edge(u, v)
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
    if graph is None:
        raise ValueError("no vertex count found in edge list")
    return graph


def serialize_edge_list(g: Graph) -> str:
    """Render a graph in the edge-list format parsed by parse_edge_list.

    Emits LF line endings and edges sorted with u < v, so the output is
    canonical: parse(serialize(g)) == g and equal graphs serialize
    identically.
    """
    lines = [str(g.order)]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
