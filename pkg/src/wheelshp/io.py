"""Edge-list text format and DOT export.

Edge-list format::

    # comment
    n m
    u v        (one line per edge, u < v on output)
    w          (isolated vertex, only needed for degree-0 vertices)

``n`` is the live-vertex count and ``m`` the edge count. Vertex ids need not
be contiguous.
"""

from __future__ import annotations

from pathlib import Path
from typing import Union

from .graph import Graph, GraphError


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None, source: str | None = None):
        self.line = line
        self.source = source
        where = ""
        if source:
            where += f"{source}:"
        if line is not None:
            where += f"line {line}: "
        elif where:
            where += " "
        super().__init__(where + message)


def parse_edge_list(text: str, source: str | None = None) -> Graph:
    g = Graph()
    header = None
    edges_seen = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        try:
            nums = [int(f) for f in fields]
        except ValueError:
            raise ParseError(f"expected integers, got {line!r}", lineno, source) from None
        if any(x < 0 for x in nums):
            raise ParseError("vertex ids and counts must be non-negative", lineno, source)
        if header is None:
            if len(nums) != 2:
                raise ParseError("header must be 'n m'", lineno, source)
            header = (nums[0], nums[1], lineno)
            continue
        if len(nums) == 1:
            if nums[0] in g:
                raise ParseError(f"vertex {nums[0]} listed twice", lineno, source)
            g.add_vertex(nums[0])
            continue
        if len(nums) != 2:
            raise ParseError(f"expected 'u v', got {line!r}", lineno, source)
        u, v = nums
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", lineno, source)
        for w in (u, v):
            if w not in g:
                g.add_vertex(w)
        try:
            g.add_edge(u, v)
        except GraphError as exc:
            raise ParseError(str(exc), lineno, source) from None
        edges_seen += 1
    if header is None:
        raise ParseError("missing 'n m' header", None, source)
    n, m, hline = header
    if m != edges_seen:
        raise ParseError(f"header declares {m} edges but {edges_seen} were given", hline, source)
    if n != g.order:
        raise ParseError(f"header declares {n} vertices but {g.order} were given", hline, source)
    return g


def read_graph(path: Union[str, Path]) -> Graph:
    path = Path(path)
    return parse_edge_list(path.read_text(), source=str(path))


def format_edge_list(g: Graph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"{g.order} {g.edge_count}")
    lines.extend(str(v) for v in g.vertices() if g.degree(v) == 0)
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def write_graph(g: Graph, path: Union[str, Path], comment: str | None = None) -> None:
    Path(path).write_text(format_edge_list(g, comment))


def to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines.extend(f"  {v};" for v in g.vertices() if g.degree(v) == 0)
    lines.extend(f"  {u} -- {v};" for u, v in g.edges())
    lines.append("}")
    return "\n".join(lines) + "\n"
