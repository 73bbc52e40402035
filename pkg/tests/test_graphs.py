import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cocircuit.generators import cyclic
from cocircuit.graphs import (DirectedGraph, Graph, apsp, backward_reachable, bfs_distances,
                              check_regular, is_connected, vertex_disjoint_path_count)
from cocircuit.labeling import build_cocircuit_graph
from cocircuit.om import FormatError
from oracles import floyd_warshall, max_disjoint_paths


def cycle(k):
    return Graph.from_edges(k, [(i, (i + 1) % k) for i in range(k)])


def complete(k):
    return Graph.from_edges(k, [(i, j) for i in range(k) for j in range(i + 1, k)])


@st.composite
def small_graphs(draw, max_vertices=9):
    size = draw(st.integers(2, max_vertices))
    pairs = [(i, j) for i in range(size) for j in range(i + 1, size)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(size, [p for p, keep in zip(pairs, mask) if keep])


def test_bfs_examples():
    path = Graph.from_edges(3, [(0, 1), (1, 2)])
    assert list(bfs_distances(path, 0)) == [0, 1, 2]
    assert bfs_distances(cycle(6), 2).max() == 3
    pair = Graph.from_edges(2, [])
    assert bfs_distances(pair, 0)[1] == np.inf


def test_apsp_cycle():
    d = apsp(cycle(6))
    assert (d == d.T).all() and d.max() == 3 and (np.diag(d) == 0).all()
    for s in range(6):
        assert (d[s] == bfs_distances(cycle(6), s)).all()


def test_apsp_cocircuit_graph_diameter():
    g, _ = build_cocircuit_graph(cyclic(4, 3))
    assert apsp(g).max() == 3


@settings(max_examples=60, deadline=None)
@given(small_graphs())
def test_apsp_matches_floyd_warshall(g):
    d = apsp(g)
    assert (d == floyd_warshall(g)).all()
    assert (d == d.T).all()


@pytest.mark.parametrize("g, expected", [
    (cycle(6), 2),
    (Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)]), None),
    (complete(4), 3),
])
def test_check_regular(g, expected):
    assert check_regular(g) == expected


def test_backward_reachable():
    d = DirectedGraph(3)
    d.add_arc(0, 1)
    d.add_arc(1, 2)
    assert backward_reachable(d, 2) == {0, 1, 2}
    assert backward_reachable(DirectedGraph(3), 1) == {1}
    two = DirectedGraph(2)
    two.add_arc(0, 1)
    two.add_arc(1, 0)
    assert backward_reachable(two, 0) == {0, 1}


def test_disjoint_paths_examples():
    assert vertex_disjoint_path_count(Graph.from_edges(2, [(0, 1)]), 0, 1) == 1
    assert vertex_disjoint_path_count(cycle(4), 0, 2) == 2
    k4 = complete(4)
    assert all(vertex_disjoint_path_count(k4, s, t) == 3 == max_disjoint_paths(k4, s, t)
               for s in range(4) for t in range(4) if s != t)
    with pytest.raises(ValueError):
        vertex_disjoint_path_count(k4, 1, 1)


def test_disjoint_paths_restricted():
    # only the path through 1 survives once 3 is excluded
    assert vertex_disjoint_path_count(cycle(4), 0, 2, allowed={0, 1, 2}) == 1
    assert vertex_disjoint_path_count(cycle(4), 0, 2, allowed={0, 2}) == 0


@settings(max_examples=80, deadline=None)
@given(small_graphs(max_vertices=8), st.data())
def test_disjoint_paths_match_exhaustive_search(g, data):
    s = data.draw(st.integers(0, g.vertex_count - 1))
    t = data.draw(st.integers(0, g.vertex_count - 1).filter(lambda x: x != s))
    count = vertex_disjoint_path_count(g, s, t)
    assert count == max_disjoint_paths(g, s, t)
    assert count == vertex_disjoint_path_count(g, t, s)
    assert count <= min(g.degree(s), g.degree(t))


def test_graph_text_round_trip():
    g = cycle(5)
    text = g.to_text()
    assert text.splitlines()[:3] == ["graph v1", "5 5", "0 1"]
    assert Graph.from_text(text) == g


@pytest.mark.parametrize("text", [
    "",
    "graph v1\n",
    "graph v1\n3 2\n0 1\n",
    "graph v1\n3 1\n1 0\n",
    "graph v1\n3 1\n0 3\n",
    "graph v1\n3 2\n0 1\n0 1\n",
    "graph v1\n3 1\n0,1\n",
])
def test_graph_text_errors(text):
    with pytest.raises(FormatError):
        Graph.from_text(text)


def test_graph_rejects_loops():
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(1, 1)])


def test_is_connected():
    assert is_connected(cycle(4))
    assert not is_connected(Graph.from_edges(4, [(0, 1), (2, 3)]))
