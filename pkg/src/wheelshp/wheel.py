"""Recognise W_k-subdivisions by contracting degree-2 vertices."""

from __future__ import annotations

from typing import Optional, Tuple

from .connectivity import is_2connected
from .graph import Graph


def contract_degree_two(g: Graph) -> int:
    """Contract degree-2 vertices of ``g`` in place until none remain.

    Each pass scans ids in ascending order. Returns the number of passes
    that contracted at least one vertex.
    """
    passes = 0
    while True:
        contracted = 0
        for v in g.vertices():
            if v in g and g.degree(v) == 2:
                g.contract_vertex(v)
                contracted += 1
        if not contracted:
            return passes
        passes += 1


def wheel_signature(g: Graph, k: int) -> bool:
    """True if the (already contracted) graph has the degree signature of W_k."""
    if g.order != k + 1:
        return False
    degrees = [g.degree(v) for v in g.vertices()]
    if k == 3:
        return degrees.count(3) == 4
    return degrees.count(3) == k and degrees.count(k) == 1


def is_k_wheel_traced(g: Graph, k: int) -> Tuple[Optional[Graph], int]:
    """Like :func:`is_k_wheel` but also returns the number of contraction passes."""
    if k < 3:
        raise ValueError(f"k must be at least 3, got {k}")
    if g.order == 0 or not is_2connected(g):
        return None, 0
    h = g.copy()
    passes = contract_degree_two(h)
    return (h if wheel_signature(h, k) else None), passes


def is_k_wheel(g: Graph, k: int) -> Optional[Graph]:
    """Return ``g`` with every degree-2 vertex contracted if it is a
    W_k-subdivision, else None. Surviving vertices keep their ids and
    ``g`` itself is left untouched.
    """
    return is_k_wheel_traced(g, k)[0]
