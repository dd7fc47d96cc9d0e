"""Exponential-time SHP(W_k): recursive edge deletion with pruning."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .graph import Graph
from .wheel import is_k_wheel


class Status(enum.Enum):
    FOUND = "found"
    NOT_FOUND = "not_found"
    BUDGET_EXHAUSTED = "budget_exhausted"


@dataclass(frozen=True)
class EdgeCursor:
    """Lexicographic lower bound on the edges a branch may still delete."""

    start1: int = 0
    start2: int = 0


@dataclass
class SearchOutcome:
    status: Status
    witness: Optional[Graph] = None
    nodes: int = 0

    @property
    def found(self) -> bool:
        return self.status is Status.FOUND

    def __bool__(self) -> bool:
        return self.found


class _BudgetExhausted(Exception):
    pass


def _drop_isolated(g: Graph) -> None:
    for v in g.vertices():
        if g.degree(v) == 0:
            g.remove_vertex(v)


def _has_hub_candidate(g: Graph, k: int) -> bool:
    return any(g.degree(v) >= k for v in g.vertices())


class _Search:
    def __init__(self, k: int, budget: Optional[int], use_cursor: bool):
        self.k = k
        self.budget = budget
        self.use_cursor = use_cursor
        self.nodes = 0

    def run(self, g: Graph, cursor: EdgeCursor) -> Optional[Graph]:
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise _BudgetExhausted
        k = self.k
        _drop_isolated(g)
        if g.order == 0:
            return None
        wheel = is_k_wheel(g, k)
        if wheel is not None:
            return wheel
        # <= 2k: the exact-W_k case was handled just above
        if g.edge_count <= 2 * k or g.order < k + 1:
            return None
        if not _has_hub_candidate(g, k):
            return None
        for i, j in g.edges():
            if self.use_cursor and (i, j) < (cursor.start1, cursor.start2):
                continue
            sub = g.copy()
            sub.remove_edge(i, j)
            found = self.run(sub, EdgeCursor(i, j) if self.use_cursor else EdgeCursor())
            if found is not None:
                return found
        return None


def find_k_wheel(
    g: Graph,
    k: int,
    *,
    budget: Optional[int] = None,
    cursor: EdgeCursor = EdgeCursor(),
    use_cursor: bool = True,
) -> SearchOutcome:
    """Search ``g`` for a subgraph that is a W_k-subdivision.

    The witness is that subgraph with its degree-2 vertices contracted.
    ``budget`` caps the number of search nodes; ``use_cursor=False`` drops the
    lexicographic cursor and re-tries every edge at every level (same answer,
    much slower; for testing). ``g`` is not modified.
    """
    if k < 3:
        raise ValueError(f"k must be at least 3, got {k}")
    search = _Search(k, budget, use_cursor)
    try:
        witness = search.run(g.copy(), cursor)
    except _BudgetExhausted:
        return SearchOutcome(Status.BUDGET_EXHAUSTED, None, search.nodes - 1)
    status = Status.FOUND if witness is not None else Status.NOT_FOUND
    return SearchOutcome(status, witness, search.nodes)


def contains_k_wheel(g: Graph, k: int) -> bool:
    return find_k_wheel(g, k).found
