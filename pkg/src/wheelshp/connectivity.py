"""Biconnectivity, triconnectivity, components after vertex deletion, bridges."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterable, List

from .graph import CorruptGraphError, Graph


@dataclass
class DfsState:
    dfnumber: Dict[int, int] = field(default_factory=dict)
    low: Dict[int, int] = field(default_factory=dict)
    father: Dict[int, int] = field(default_factory=dict)
    count: int = 0

    def visited(self, v: int) -> bool:
        return v in self.dfnumber


def is_2connected(g: Graph) -> bool:
    """Low-point DFS from the smallest live id.

    Returns False as soon as an articulation point is found, or if the DFS
    does not reach every vertex. A single vertex or a single edge counts as
    2-connected.
    """
    if g.order == 0:
        raise ValueError("is_2connected needs at least one vertex")
    adj = dict(g.iter_adjacency())
    root = min(adj)
    st = DfsState()
    st.dfnumber[root] = st.low[root] = 0
    st.count = 1
    # frames: (vertex, index of next neighbour to scan)
    stack = [[root, 0]]
    while stack:
        frame = stack[-1]
        v, i = frame
        nbrs = adj[v]
        if i < len(nbrs):
            w = nbrs[i]
            if w not in adj:
                raise CorruptGraphError(f"vertex {v} is adjacent to dead vertex {w}")
            if not st.visited(w):
                st.father[w] = v
                st.dfnumber[w] = st.low[w] = st.count
                st.count += 1
                stack.append([w, 0])
                continue
            if st.father.get(v) != w:
                st.low[v] = min(st.low[v], st.dfnumber[w])
            frame[1] += 1
            continue
        stack.pop()
        if not stack:
            break
        parent = stack[-1]
        p, pi = parent
        # the root may only have a tree child at its first neighbour slot
        if st.low[v] >= st.dfnumber[p] and (st.dfnumber[p] != 0 or pi > 0):
            return False
        st.low[p] = min(st.low[p], st.low[v])
        parent[1] += 1
    return st.count == len(adj)


def is_connected(g: Graph) -> bool:
    if g.order == 0:
        return True
    return len(components_minus(g, ())) == 1


def is_3connected(g: Graph) -> bool:
    """At least 4 vertices and 2-connected after deleting any one vertex."""
    if g.order < 4:
        return False
    if not is_2connected(g):
        return False
    vertices = g.vertices()
    for v in vertices:
        if not is_2connected(g.subgraph(w for w in vertices if w != v)):
            return False
    return True


def components_minus(g: Graph, s: Iterable[int]) -> List[List[int]]:
    """Connected components of ``g - s``, each sorted, ordered by smallest member."""
    removed = set(s)
    seen = set(removed)
    comps = []
    for start in g.vertices():
        if start in seen:
            continue
        seen.add(start)
        comp = [start]
        stack = [start]
        while stack:
            v = stack.pop()
            for w in g.neighbours(v):
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def path_relation(g: Graph, w: Iterable[int]) -> Dict[int, set]:
    """``x -> {y}`` such that some x-y path has no internal vertex in ``w``."""
    w = set(w)
    rel = {v: {v} for v in g.vertices()}
    for u, v in g.edges():
        rel[u].add(v)
        rel[v].add(u)
    for comp in components_minus(g, w):
        closed = set(comp)
        for v in comp:
            closed.update(x for x in g.neighbours(v) if x in w)
        for v in closed:
            rel[v] |= closed
    return rel


def _maximal_cliques(rel: Dict[int, set]) -> List[List[int]]:
    # Bron-Kerbosch with pivoting; rel[v] contains v itself
    if not rel:
        return []
    nbr = {v: rel[v] - {v} for v in rel}
    out = []

    def expand(r, p, x):
        if not p and not x:
            out.append(sorted(r))
            return
        pivot = max(p | x, key=lambda u: len(nbr[u] & p))
        for v in sorted(p - nbr[pivot]):
            expand(r | {v}, p & nbr[v], x & nbr[v])
            p = p - {v}
            x = x | {v}

    expand(set(), set(nbr), set())
    return out


def bridges(g: Graph, w: Iterable[int]) -> List[List[int]]:
    """Bridges of ``g|w``: maximal vertex sets whose members are pairwise
    joined by a path with no internal vertex in ``w``.

    Sorted by smallest member (then lexicographically).
    """
    return sorted(_maximal_cliques(path_relation(g, w)))
