import itertools
import random

import networkx as nx
import pytest

from oracles import bridges_by_definition, from_nx, random_graph, three_connected, to_nx, two_connected
from wheelshp.connectivity import bridges, components_minus, is_2connected, is_3connected
from wheelshp.graph import Graph, make_wheel


def cycle(n):
    return Graph.from_edges([(i, (i + 1) % n) for i in range(n)])


def test_is_2connected_examples():
    assert is_2connected(cycle(5))
    assert not is_2connected(Graph.from_edges([(0, 1), (1, 2), (2, 3)]))
    two_triangles = Graph.from_edges([(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert not is_2connected(two_triangles)


def test_is_2connected_small_conventions():
    assert is_2connected(Graph().add_vertex(4))
    assert is_2connected(Graph.from_edges([(2, 9)]))
    assert not is_2connected(Graph().add_vertex(0).add_vertex(1))
    with pytest.raises(ValueError):
        is_2connected(Graph())


def test_root_with_two_children_is_a_cut_vertex():
    # bowtie centred on the lowest id
    g = Graph.from_edges([(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)])
    assert not is_2connected(g)


def test_is_2connected_all_labelled_graphs_up_to_6():
    for n in range(1, 7):
        pairs = list(itertools.combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            edges = [p for b, p in enumerate(pairs) if mask >> b & 1]
            g = Graph.from_edges(edges, range(n))
            assert is_2connected(g) == two_connected(to_nx(g)), edges


def test_is_2connected_random_up_to_10():
    rng = random.Random(7)
    for _ in range(1000):
        g = random_graph(rng, 10)
        assert is_2connected(g) == two_connected(to_nx(g))


def test_is_3connected_examples():
    assert is_3connected(make_wheel(4))
    g = make_wheel(4).add_vertex(5).expand_edge(1, 2, 5)
    assert not is_3connected(g)
    k4_minus = Graph.from_edges([(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
    assert not is_3connected(k4_minus)
    assert not three_connected(to_nx(k4_minus))


@pytest.mark.parametrize("k", range(3, 10))
def test_wheels_are_3connected(k):
    assert is_3connected(make_wheel(k))


def test_fewer_than_four_vertices_not_3connected():
    assert not is_3connected(Graph.from_edges([(0, 1), (1, 2), (0, 2)]))


def test_is_3connected_matches_oracle():
    rng = random.Random(11)
    for h in nx.graph_atlas_g()[1:]:
        g = from_nx(h)
        assert is_3connected(g) == three_connected(h)
        if is_3connected(g):
            assert is_2connected(g)
    for _ in range(300):
        g = random_graph(rng, 9)
        assert is_3connected(g) == three_connected(to_nx(g))


def test_components_minus():
    c6 = cycle(6)
    assert components_minus(c6, [0, 3]) == [[1, 2], [4, 5]]
    assert components_minus(c6, []) == [list(range(6))]
    assert components_minus(c6, range(6)) == []


def test_components_partition():
    rng = random.Random(3)
    for _ in range(200):
        g = random_graph(rng, 9)
        s = rng.sample(g.vertices(), rng.randint(0, g.order))
        comps = components_minus(g, s)
        flat = [v for c in comps for v in c]
        assert len(flat) == len(set(flat))
        assert set(flat) == set(g.vertices()) - set(s)
        assert comps == sorted(comps)
        expected = sorted(sorted(c) for c in nx.connected_components(to_nx(g).subgraph(set(flat))))
        assert comps == expected


def test_bridges_examples():
    c6 = cycle(6)
    assert bridges(c6, [0, 3]) == [[0, 1, 2, 3], [0, 3, 4, 5]]
    assert bridges(c6, [0, 3]) == bridges_by_definition(to_nx(c6), [0, 3])
    assert bridges(Graph.from_edges([(0, 1)]), [0, 1]) == [[0, 1]]
    two = Graph.from_edges([(0, 1), (2, 3), (3, 4)])
    assert bridges(two, []) == [[0, 1], [2, 3, 4]]


def test_bridges_match_definition():
    rng = random.Random(5)
    for _ in range(300):
        g = random_graph(rng, 7)
        w = rng.sample(g.vertices(), rng.randint(0, g.order))
        assert bridges(g, w) == bridges_by_definition(to_nx(g), w), (g, w)
