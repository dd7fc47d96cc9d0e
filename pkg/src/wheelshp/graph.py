"""Mutable simple undirected graph with subdivision and contraction."""

from __future__ import annotations

from typing import Dict, Iterable, Iterator, List, Optional, Tuple


class GraphError(ValueError):
    """Base class for invalid graph operations."""


class DuplicateVertexError(GraphError):
    pass


class MissingVertexError(GraphError):
    pass


class SelfLoopError(GraphError):
    pass


class DuplicateEdgeError(GraphError):
    pass


class MissingEdgeError(GraphError):
    pass


class DegreeError(GraphError):
    """The vertex has the wrong degree for the requested operation."""


class CorruptGraphError(GraphError):
    """Adjacency refers to a vertex that is not live."""


Edge = Tuple[int, int]


class Graph:
    """Simple undirected graph keyed by caller-chosen non-negative integer ids.

    Neighbour lists keep insertion order. ``highest_id`` is the largest id
    ever added and is not lowered when that vertex is removed.
    """

    __slots__ = ("_adj", "edge_count", "highest_id")

    def __init__(self) -> None:
        self._adj: Dict[int, List[int]] = {}
        self.edge_count = 0
        self.highest_id = -1

    # ------------------------------------------------------------------
    # queries

    def __contains__(self, v: object) -> bool:
        return v in self._adj

    def __len__(self) -> int:
        return len(self._adj)

    def __repr__(self) -> str:
        return f"Graph(n={len(self._adj)}, m={self.edge_count}, edges={self.edges()})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return graph_equal(self, other)

    __hash__ = None  # type: ignore[assignment]

    @property
    def order(self) -> int:
        return len(self._adj)

    def vertices(self) -> List[int]:
        return sorted(self._adj)

    def neighbours(self, v: int) -> List[int]:
        """Neighbours of ``v`` in insertion order (a copy)."""
        try:
            return list(self._adj[v])
        except KeyError:
            raise MissingVertexError(f"vertex {v} is not in the graph") from None

    def degree(self, v: int) -> int:
        try:
            return len(self._adj[v])
        except KeyError:
            raise MissingVertexError(f"vertex {v} is not in the graph") from None

    def has_edge(self, i: int, j: int) -> bool:
        nbrs = self._adj.get(i)
        return nbrs is not None and j in nbrs

    def edges(self) -> List[Edge]:
        """All edges as ``(u, v)`` with ``u < v``, sorted."""
        return sorted((u, v) for u, nbrs in self._adj.items() for v in nbrs if u < v)

    def iter_adjacency(self) -> Iterator[Tuple[int, List[int]]]:
        for v in sorted(self._adj):
            yield v, self._adj[v]

    def degree_sequence(self) -> List[int]:
        return sorted((len(n) for n in self._adj.values()), reverse=True)

    # ------------------------------------------------------------------
    # mutation

    def add_vertex(self, v: int) -> "Graph":
        if v < 0:
            raise GraphError(f"vertex ids must be non-negative, got {v}")
        if v in self._adj:
            raise DuplicateVertexError(f"vertex {v} already exists")
        self._adj[v] = []
        if v > self.highest_id:
            self.highest_id = v
        return self

    def remove_vertex(self, v: int) -> "Graph":
        if self.degree(v) != 0:
            raise DegreeError(f"vertex {v} has degree {len(self._adj[v])}; remove its edges first")
        del self._adj[v]
        return self

    def add_edge(self, i: int, j: int) -> "Graph":
        if i == j:
            raise SelfLoopError(f"self-loop at vertex {i}")
        for v in (i, j):
            if v not in self._adj:
                raise MissingVertexError(f"vertex {v} is not in the graph")
        if j in self._adj[i]:
            raise DuplicateEdgeError(f"edge {i}-{j} already exists")
        self._adj[i].append(j)
        self._adj[j].append(i)
        self.edge_count += 1
        return self

    def remove_edge(self, i: int, j: int) -> "Graph":
        if not self.has_edge(i, j):
            raise MissingEdgeError(f"edge {i}-{j} does not exist")
        self._adj[i].remove(j)
        self._adj[j].remove(i)
        self.edge_count -= 1
        return self

    def expand_edge(self, i: int, j: int, v: int) -> "Graph":
        """Subdivide edge ``ij`` with the isolated vertex ``v``.

        ``v`` takes the place of ``j`` in ``i``'s neighbour list and of ``i``
        in ``j``'s, so neighbour order around ``i`` and ``j`` is preserved.
        """
        if not self.has_edge(i, j):
            raise MissingEdgeError(f"edge {i}-{j} does not exist")
        if self.degree(v) != 0:
            raise DegreeError(f"vertex {v} must be isolated to subdivide an edge")
        ai, aj = self._adj[i], self._adj[j]
        ai[ai.index(j)] = v
        aj[aj.index(i)] = v
        self._adj[v].extend((i, j))
        self.edge_count += 1
        return self

    def contract_vertex(self, v: int) -> "Graph":
        """Delete the degree-2 vertex ``v``, joining its neighbours if not adjacent."""
        if self.degree(v) != 2:
            raise DegreeError(f"vertex {v} has degree {len(self._adj[v])}, expected 2")
        a, b = self._adj[v]
        aa, ab = self._adj[a], self._adj[b]
        if b in aa:
            aa.remove(v)
            ab.remove(v)
            self.edge_count -= 2
        else:
            aa[aa.index(v)] = b
            ab[ab.index(v)] = a
            self.edge_count -= 1
        del self._adj[v]
        return self

    def copy(self) -> "Graph":
        g = Graph.__new__(Graph)
        g._adj = {v: list(n) for v, n in self._adj.items()}
        g.edge_count = self.edge_count
        g.highest_id = self.highest_id
        return g

    # ------------------------------------------------------------------
    # construction helpers

    @classmethod
    def from_edges(cls, edges: Iterable[Edge], vertices: Iterable[int] = ()) -> "Graph":
        g = cls()
        for v in vertices:
            if v not in g._adj:
                g.add_vertex(v)
        for u, v in edges:
            for w in (u, v):
                if w not in g._adj:
                    g.add_vertex(w)
            g.add_edge(u, v)
        return g

    def subgraph(self, keep: Iterable[int]) -> "Graph":
        """Induced subgraph on ``keep`` (ids preserved)."""
        keep = set(keep)
        g = Graph()
        for v in sorted(keep):
            g.add_vertex(v)
        for u, v in self.edges():
            if u in keep and v in keep:
                g.add_edge(u, v)
        return g

    def check(self) -> None:
        """Raise if any structural invariant is broken."""
        total = 0
        for v, nbrs in self._adj.items():
            if len(set(nbrs)) != len(nbrs):
                raise CorruptGraphError(f"parallel edge at vertex {v}")
            for w in nbrs:
                if w == v:
                    raise CorruptGraphError(f"self-loop at vertex {v}")
                if w not in self._adj:
                    raise CorruptGraphError(f"vertex {v} is adjacent to dead vertex {w}")
                if v not in self._adj[w]:
                    raise CorruptGraphError(f"asymmetric adjacency {v}->{w}")
            total += len(nbrs)
        if total != 2 * self.edge_count:
            raise CorruptGraphError(f"edge_count {self.edge_count} but degree sum {total}")


def new_graph() -> Graph:
    return Graph()


def graph_copy(g: Graph) -> Graph:
    return g.copy()


def graph_equal(g1: Graph, g2: Graph) -> bool:
    """Same live vertex ids and same edge set (neighbour order ignored)."""
    if g1.edge_count != g2.edge_count or set(g1._adj) != set(g2._adj):
        return False
    return all(set(n) == set(g2._adj[v]) for v, n in g1._adj.items())


def make_wheel(k: int) -> Graph:
    """W_k: hub 0 joined to the rim cycle 1..k."""
    if k < 3:
        raise GraphError(f"a wheel needs at least 3 spokes, got {k}")
    g = Graph()
    for v in range(k + 1):
        g.add_vertex(v)
    for v in range(1, k + 1):
        g.add_edge(0, v)
    for v in range(1, k):
        g.add_edge(v, v + 1)
    g.add_edge(k, 1)
    return g
