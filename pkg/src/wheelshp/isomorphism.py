"""Exact isomorphism for small graphs and isomorphism-class partitions."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .graph import Graph


def _profile(g: Graph, v: int) -> Tuple[int, Tuple[int, ...]]:
    return g.degree(v), tuple(sorted(g.degree(w) for w in g.neighbours(v)))


def find_isomorphism(g1: Graph, g2: Graph) -> Optional[Dict[int, int]]:
    """A vertex bijection g1 -> g2 preserving adjacency, or None."""
    if g1.order != g2.order or g1.edge_count != g2.edge_count:
        return None
    if g1.degree_sequence() != g2.degree_sequence():
        return None
    prof1 = {v: _profile(g1, v) for v in g1.vertices()}
    prof2 = {v: _profile(g2, v) for v in g2.vertices()}
    if sorted(prof1.values()) != sorted(prof2.values()):
        return None

    adj1 = {v: set(g1.neighbours(v)) for v in g1.vertices()}
    adj2 = {v: set(g2.neighbours(v)) for v in g2.vertices()}
    by_profile: Dict[tuple, List[int]] = {}
    for v in g2.vertices():
        by_profile.setdefault(prof2[v], []).append(v)

    # most constrained first: rarest profile, then BFS so each new vertex
    # usually has an already-mapped neighbour
    order: List[int] = []
    placed = set()
    rarity = sorted(g1.vertices(), key=lambda v: (len(by_profile[prof1[v]]), -g1.degree(v), v))
    for seed in rarity:
        if seed in placed:
            continue
        queue = [seed]
        placed.add(seed)
        while queue:
            v = queue.pop(0)
            order.append(v)
            for w in sorted(adj1[v], key=lambda u: (len(by_profile[prof1[u]]), u)):
                if w not in placed:
                    placed.add(w)
                    queue.append(w)

    mapping: Dict[int, int] = {}
    used = set()

    def extend(pos: int) -> bool:
        if pos == len(order):
            return True
        v = order[pos]
        mapped_nbrs = [mapping[w] for w in adj1[v] if w in mapping]
        for c in by_profile[prof1[v]]:
            if c in used:
                continue
            ac = adj2[c]
            if not all(m in ac for m in mapped_nbrs):
                continue
            # non-neighbours must map to non-neighbours
            if sum(1 for w in ac if w in used) != len(mapped_nbrs):
                continue
            mapping[v] = c
            used.add(c)
            if extend(pos + 1):
                return True
            del mapping[v]
            used.discard(c)
        return False

    return dict(mapping) if extend(0) else None


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    return find_isomorphism(g1, g2) is not None


@dataclass
class IsoClass:
    representative: Graph
    members: List[int] = field(default_factory=list)


@dataclass
class IsoClassSummary:
    classes: List[IsoClass]
    total: int

    def __len__(self) -> int:
        return len(self.classes)

    def sizes(self) -> List[int]:
        return [len(c.members) for c in self.classes]


def iso_classes(graphs: Sequence[Graph]) -> IsoClassSummary:
    """Greedy partition in list order; each class is represented by its first member."""
    classes: List[IsoClass] = []
    for idx, g in enumerate(graphs):
        for cls in classes:
            if is_isomorphic(cls.representative, g):
                cls.members.append(idx)
                break
        else:
            classes.append(IsoClass(g, [idx]))
    return IsoClassSummary(classes, len(graphs))
