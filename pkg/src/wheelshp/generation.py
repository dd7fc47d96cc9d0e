"""Generators for exception graphs: graphs with no W_k-subdivision that
arise when extending a known structure by new paths.

Both generators mutate a working graph in place, snapshot each candidate,
and undo the mutation before moving on, so the working graph is restored
once a generator is exhausted.
"""

from __future__ import annotations

import enum
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, List, Optional, Sequence, Tuple

from .connectivity import is_3connected
from .graph import Graph, GraphError, make_wheel
from .search import Status, find_k_wheel

log = logging.getLogger(__name__)


class BudgetExhausted(RuntimeError):
    pass


@dataclass(frozen=True)
class AttachmentSpec:
    """Where a new path meets the existing graph: at an existing vertex, or
    at a fresh vertex subdividing the edge ``anchor``-``edge_other``."""

    kind: str  # "vertex" | "edge"
    anchor: int
    edge_other: Optional[int] = None

    def __post_init__(self):
        if self.kind not in ("vertex", "edge"):
            raise ValueError(f"unknown attachment kind {self.kind!r}")
        if (self.kind == "edge") != (self.edge_other is not None):
            raise ValueError("edge_other is required exactly for edge attachments")

    def __str__(self) -> str:
        if self.kind == "vertex":
            return f"v{self.anchor}"
        return f"e{self.anchor}-{self.edge_other}"


@dataclass
class Candidate:
    label: str
    graph: Graph


@dataclass
class ExceptionList:
    k: int
    graphs: List[Graph] = field(default_factory=list)
    labels: List[str] = field(default_factory=list)
    candidates_tested: int = 0
    skipped_not_3connected: int = 0
    skip_mode: Optional[str] = None

    def __len__(self) -> int:
        return len(self.graphs)

    def __iter__(self):
        return iter(self.graphs)

    def __getitem__(self, idx):
        return self.graphs[idx]


# ----------------------------------------------------------------------
# candidate testing, optionally in worker processes


def _test(args) -> Tuple[Status, bool]:
    graph, k, budget, need_3conn = args
    status = find_k_wheel(graph, k, budget=budget).status
    conn = need_3conn and status is Status.NOT_FOUND and is_3connected(graph)
    return status, conn


def _collect(
    candidates: Iterator[Candidate],
    k: int,
    result: ExceptionList,
    need_3conn: bool,
    jobs: int,
    budget: Optional[int],
) -> ExceptionList:
    def record(cand: Candidate, status: Status, conn: bool) -> None:
        result.candidates_tested += 1
        if status is Status.BUDGET_EXHAUSTED:
            raise BudgetExhausted(f"search budget exhausted on candidate {cand.label}")
        if status is Status.FOUND:
            return
        if need_3conn and not conn:
            result.skipped_not_3connected += 1
            log.debug("not 3-connected: %s", cand.label)
            return
        log.debug("exception: %s", cand.label)
        result.graphs.append(cand.graph)
        result.labels.append(cand.label)

    if jobs <= 1:
        for cand in candidates:
            record(cand, *_test((cand.graph, k, budget, need_3conn)))
        return result
    cands = list(candidates)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        work = ((c.graph, k, budget, need_3conn) for c in cands)
        for cand, (status, conn) in zip(cands, pool.map(_test, work, chunksize=4)):
            record(cand, status, conn)
    return result


# ----------------------------------------------------------------------
# wheelproof


def wheelproof_base(k: int) -> Graph:
    """W_{k-1} with hub 0 plus the new hub neighbour ``u = k``."""
    if k < 4:
        raise ValueError(f"wheelproof needs k >= 4, got {k}")
    g = make_wheel(k - 1)
    g.add_vertex(k)
    g.add_edge(0, k)
    return g


def wheelproof_attachments(g: Graph, k: int) -> List[AttachmentSpec]:
    """Attachment sites for the two new paths from ``u``: existing vertices
    other than the hub and ``u``, then edges not incident to ``u``."""
    u = k
    sites = [AttachmentSpec("vertex", v) for v in g.vertices() if v not in (0, u)]
    sites += [AttachmentSpec("edge", a, b) for a, b in g.edges() if u not in (a, b)]
    return sites


def _attach(g: Graph, u: int, site: AttachmentSpec, new_id: int, prev: Optional[int]) -> int:
    """Join ``u`` to ``site``; return the endpoint used. ``prev`` is the
    vertex that already subdivides the same edge, if any."""
    if site.kind == "vertex":
        g.add_edge(u, site.anchor)
        return site.anchor
    a, b = site.anchor, site.edge_other
    if prev is not None:
        b = prev  # second vertex on the same original edge: split a-prev
    g.add_vertex(new_id)
    g.expand_edge(a, b, new_id)
    g.add_edge(u, new_id)
    return new_id


def _detach(g: Graph, u: int, site: AttachmentSpec, end: int) -> None:
    g.remove_edge(u, end)
    if site.kind == "edge":
        g.contract_vertex(end)


def wheelproof_candidates(k: int, work: Optional[Graph] = None) -> Iterator[Candidate]:
    """Every way to join ``u`` to two distinct attachment sites of W_{k-1}.

    Sites are taken as unordered pairs in site order. Two subdivision
    vertices on the same edge are allowed; the same existing vertex twice
    is not (it would need a parallel edge).
    """
    if work is None:
        work = wheelproof_base(k)
    u, u1, u2 = k, k + 1, k + 2
    sites = wheelproof_attachments(work, k)
    for a, first in enumerate(sites):
        for second in sites[a:]:
            if first is second and first.kind == "vertex":
                continue
            end1 = _attach(work, u, first, u1, None)
            end2 = _attach(work, u, second, u2, u1 if first is second else None)
            yield Candidate(f"u1={first} u2={second}", work.copy())
            _detach(work, u, second, end2)
            _detach(work, u, first, end1)


def wheelproof(k: int, *, jobs: int = 1, budget: Optional[int] = None) -> ExceptionList:
    """Exception graphs for adding a k-th hub neighbour to W_{k-1}.

    A candidate is an exception when it has no W_k-subdivision and is
    3-connected; candidates without a W_k-subdivision that fail
    3-connectivity are counted in ``skipped_not_3connected``.
    """
    work = wheelproof_base(k)
    before = work.copy()
    result = _collect(wheelproof_candidates(k, work), k, ExceptionList(k), True, jobs, budget)
    assert work == before, "wheelproof did not restore its working graph"
    return result


# ----------------------------------------------------------------------
# exception_generator


class SkipMode(str, enum.Enum):
    DEDUP = "dedup"
    LITERAL = "literal"


class _Skipper:
    """Decides whether to subdivide the edge from a region's ``idx``-th
    member to ``nbr``.

    dedup: skip when ``nbr`` is an earlier member of the same region (that
    edge was already subdivided from the other end).
    literal: the reference loop's behaviour, where the flag is overwritten
    on each comparison so only the last earlier member counts, and it keeps
    its previous value when there are no earlier members.
    """

    def __init__(self, mode: SkipMode):
        self.mode = mode
        self.flag = False

    def __call__(self, region: Sequence[int], idx: int, nbr: int) -> bool:
        if self.mode is SkipMode.DEDUP:
            return nbr in region[:idx]
        for p in range(idx):
            self.flag = region[p] == nbr
        return self.flag


def _validate_regions(g: Graph, a: Sequence[int], b: Sequence[int]) -> None:
    if not a or not b:
        raise GraphError("both regions must be nonempty")
    if len(set(a)) != len(a) or len(set(b)) != len(b):
        raise GraphError("regions must not contain duplicates")
    if set(a) & set(b):
        raise GraphError(f"regions overlap at {sorted(set(a) & set(b))}")
    for v in list(a) + list(b):
        if v not in g:
            raise GraphError(f"region vertex {v} is not in the graph")


def exception_candidates(
    work: Graph,
    a: Sequence[int],
    b: Sequence[int],
    skip_mode: SkipMode | str = SkipMode.DEDUP,
) -> Iterator[Candidate]:
    """Every graph ``work + P`` for a new path ``P`` from region ``a`` to region ``b``.

    For each ``i`` in ``a`` and ``j`` in ``b`` the path's ends are, in order:
    ``i`` and ``j``; a new vertex on an edge at ``i`` and ``j``; ``i`` and a
    new vertex on an edge at ``j``; a new vertex on an edge at ``j`` and a
    new vertex on an edge at ``i``. Placements that would duplicate an
    existing edge are left out. ``work`` is mutated and restored.
    """
    skip_mode = SkipMode(skip_mode)
    _validate_regions(work, a, b)
    a, b = list(a), list(b)
    v1 = work.highest_id + 1
    v2 = work.highest_id + 2
    skip = _Skipper(skip_mode)
    skip_inner = _Skipper(skip_mode)

    for ia, i in enumerate(a):
        for jb, j in enumerate(b):
            if not work.has_edge(i, j):
                work.add_edge(i, j)
                yield Candidate(f"i={i} j={j}", work.copy())
                work.remove_edge(i, j)

            for nbr in work.neighbours(i):
                if skip(a, ia, nbr) or nbr == j:
                    continue
                work.add_vertex(v1)
                work.expand_edge(i, nbr, v1)
                work.add_edge(v1, j)
                yield Candidate(f"i={i}~{nbr} j={j}", work.copy())
                work.remove_edge(v1, j)
                work.contract_vertex(v1)

            for nbr in work.neighbours(j):
                if skip(b, jb, nbr) or nbr == i:
                    continue
                work.add_vertex(v1)
                work.expand_edge(j, nbr, v1)
                work.add_edge(v1, i)
                yield Candidate(f"i={i} j={j}~{nbr}", work.copy())
                work.remove_edge(v1, i)

                for l in work.neighbours(i):
                    if skip_inner(a, ia, l):
                        continue
                    work.add_vertex(v2)
                    work.expand_edge(i, l, v2)
                    work.add_edge(v1, v2)
                    yield Candidate(f"i={i}~{l} j={j}~{nbr}", work.copy())
                    work.remove_edge(v1, v2)
                    work.contract_vertex(v2)
                work.contract_vertex(v1)


def candidate_count(
    g: Graph, a: Sequence[int], b: Sequence[int], skip_mode: SkipMode | str = SkipMode.DEDUP
) -> int:
    """Number of candidate graphs :func:`exception_generator` will test."""
    return sum(1 for _ in exception_candidates(g.copy(), a, b, skip_mode))


def exception_generator(
    g: Graph,
    a: Sequence[int],
    b: Sequence[int],
    k: int,
    *,
    skip_mode: SkipMode | str = SkipMode.DEDUP,
    jobs: int = 1,
    budget: Optional[int] = None,
) -> ExceptionList:
    """Candidates from :func:`exception_candidates` with no W_k-subdivision,
    in generation order. ``g`` is not modified."""
    skip_mode = SkipMode(skip_mode)
    work = g.copy()
    result = ExceptionList(k, skip_mode=skip_mode.value)
    _collect(exception_candidates(work, a, b, skip_mode), k, result, False, jobs, budget)
    assert work == g, "exception_generator did not restore its working graph"
    return result
