import pytest
from hypothesis import given, settings, strategies as st

from wheelshp.graph import (
    DegreeError,
    DuplicateEdgeError,
    DuplicateVertexError,
    Graph,
    GraphError,
    MissingEdgeError,
    SelfLoopError,
    graph_copy,
    graph_equal,
    make_wheel,
    new_graph,
)


def path(n):
    return Graph.from_edges([(i, i + 1) for i in range(n - 1)], range(n))


def cycle(n):
    return Graph.from_edges([(i, (i + 1) % n) for i in range(n)])


def test_new_graph_is_empty():
    g = new_graph()
    assert g.order == 0 and g.edge_count == 0
    assert new_graph() == new_graph()


def test_add_vertex():
    g = new_graph().add_vertex(0)
    assert g.order == 1 and g.degree(0) == 0
    g = new_graph().add_vertex(5)
    assert g.highest_id == 5
    with pytest.raises(DuplicateVertexError):
        new_graph().add_vertex(0).add_vertex(0)
    with pytest.raises(GraphError):
        new_graph().add_vertex(-1)


def test_remove_vertex():
    g = new_graph().add_vertex(0).add_vertex(1)
    g.remove_vertex(1)
    assert g.order == 1
    g.add_vertex(1)
    assert g.degree(1) == 0
    g.add_edge(0, 1)
    with pytest.raises(DegreeError):
        g.remove_vertex(0)


def test_highest_id_survives_removal():
    g = new_graph().add_vertex(3).add_vertex(7)
    g.remove_vertex(7)
    assert g.highest_id == 7


def test_add_remove_edge():
    g = new_graph().add_vertex(0).add_vertex(1)
    orig = g.copy()
    g.add_edge(0, 1)
    assert g.degree(0) == g.degree(1) == 1 and g.edge_count == 1
    g.remove_edge(1, 0)
    assert g == orig


@pytest.mark.parametrize(
    "op, exc",
    [
        (lambda g: g.add_edge(0, 0), SelfLoopError),
        (lambda g: g.add_edge(0, 1), DuplicateEdgeError),
        (lambda g: g.remove_edge(0, 2), MissingEdgeError),
    ],
)
def test_edge_errors_are_distinct(op, exc):
    g = path(3)
    with pytest.raises(exc):
        op(g)


def test_expand_edge():
    g = path(2).add_vertex(2)
    g.expand_edge(0, 1, 2)
    assert g == Graph.from_edges([(0, 2), (2, 1)])

    tri = cycle(3).add_vertex(3)
    tri.expand_edge(0, 1, 3)
    assert tri == Graph.from_edges([(0, 3), (3, 1), (1, 2), (2, 0)])


def test_expand_edge_errors():
    g = path(3).add_vertex(3)
    with pytest.raises(MissingEdgeError):
        g.expand_edge(0, 2, 3)
    with pytest.raises(GraphError):
        g.expand_edge(0, 1, 9)
    g.add_edge(3, 2)
    with pytest.raises(DegreeError):
        g.expand_edge(0, 1, 3)


def test_expand_preserves_degrees_and_contract_inverts():
    g = make_wheel(5)
    before = g.copy()
    degrees = {v: g.degree(v) for v in g.vertices()}
    g.add_vertex(6).expand_edge(0, 3, 6)
    assert g.degree(6) == 2
    assert all(g.degree(v) == d for v, d in degrees.items())
    g.contract_vertex(6)
    assert g == before


def test_contract_vertex():
    g = path(3).contract_vertex(1)
    assert g == Graph.from_edges([(0, 2)])

    tri = cycle(3).contract_vertex(1)
    assert tri.edges() == [(0, 2)] and tri.edge_count == 1

    c4 = cycle(4).contract_vertex(2)
    assert c4 == Graph.from_edges([(0, 1), (1, 3), (3, 0)])

    with pytest.raises(DegreeError):
        make_wheel(4).contract_vertex(0)


@pytest.mark.parametrize("k", [3, 4, 5, 6, 9])
def test_make_wheel(k):
    g = make_wheel(k)
    assert g.order == k + 1 and g.edge_count == 2 * k
    assert g.degree(0) == k
    assert all(g.degree(v) == 3 for v in range(1, k + 1))
    g.check()


def test_make_wheel_small():
    k4 = Graph.from_edges([(a, b) for a in range(4) for b in range(a + 1, 4)])
    assert make_wheel(3) == k4
    with pytest.raises(GraphError):
        make_wheel(2)


def test_copy_is_independent():
    g = make_wheel(4)
    h = graph_copy(g)
    assert graph_equal(g, h)
    h.remove_edge(1, 2)
    assert g.has_edge(1, 2)
    assert not graph_equal(make_wheel(4), make_wheel(5))


def test_equality_ignores_neighbour_order():
    a = Graph.from_edges([(0, 1), (0, 2)])
    b = Graph.from_edges([(0, 2), (0, 1)])
    assert a == b


def test_subgraph_keeps_ids():
    h = make_wheel(5).subgraph([0, 2, 3, 5])
    assert h.vertices() == [0, 2, 3, 5]
    assert h.edges() == [(0, 2), (0, 3), (0, 5), (2, 3)]


# -- random mutation sequences ------------------------------------------

ops = st.lists(
    st.tuples(st.sampled_from(["av", "rv", "ae", "re", "ex", "co"]), st.integers(0, 9), st.integers(0, 9)),
    max_size=60,
)


@settings(max_examples=300, deadline=None)
@given(ops)
def test_invariants_hold_under_mutation(seq):
    g = Graph()
    for op, a, b in seq:
        try:
            if op == "av":
                g.add_vertex(a)
            elif op == "rv":
                g.remove_vertex(a)
            elif op == "ae":
                g.add_edge(a, b)
            elif op == "re":
                g.remove_edge(a, b)
            elif op == "ex":
                nbrs = g.neighbours(a) if a in g else []
                if nbrs:
                    free = max(g.highest_id, 9) + 1
                    g.add_vertex(free)
                    g.expand_edge(a, nbrs[b % len(nbrs)], free)
            elif op == "co":
                before_n, before_m = g.order, g.edge_count
                g.contract_vertex(a)
                assert g.order == before_n - 1 and g.edge_count <= before_m
        except GraphError:
            pass
        g.check()
