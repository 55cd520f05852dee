import itertools

import pytest
from hypothesis import given, settings

from conftest import (
    C5,
    CLAW,
    K3,
    NET,
    P4,
    PAW,
    brute_cut_vertices,
    cycle_graph,
    graph,
    graphs,
    star,
)
from gallai.errors import DuplicateEdge, SelfLoop, VertexOutOfRange
from gallai.graph import (
    Graph,
    connected_components,
    cut_vertices,
    is_bipartite,
    is_clique,
    is_complete_multipartite,
    is_dominating,
    is_stable,
)


def test_adjacency_is_symmetric_and_degrees_count_neighbours():
    g = graph(5, [(0, 1), (1, 2), (3, 1)])
    for u, v in itertools.permutations(range(5), 2):
        assert g.has_edge(u, v) == g.has_edge(v, u)
    assert g.degrees() == [1, 3, 1, 1, 0]
    assert g.max_degree_vertex() == 1
    assert g.num_edges() == 3
    assert g.edges() == [(0, 1), (1, 2), (1, 3)]


def test_builders_reject_bad_edges():
    with pytest.raises(SelfLoop):
        graph(2, [(1, 1)])
    with pytest.raises(DuplicateEdge):
        graph(2, [(0, 1), (1, 0)])
    with pytest.raises(VertexOutOfRange):
        graph(2, [(0, 2)])
    assert Graph.from_edges(2, [(0, 1), (1, 0)], strict=False).num_edges() == 1
    with pytest.raises(ValueError):
        Graph.from_masks([0b10, 0])


def test_graphs_are_hashable_values():
    a = graph(3, [(0, 1)])
    b = graph(3, [(1, 0)])
    assert a == b and hash(a) == hash(b)
    assert len({a, b}) == 1


def test_induced_relabel_and_complement():
    g = cycle_graph(5)
    h = g.induced([4, 0, 1])
    assert h.edges() == [(0, 1), (0, 2)]
    r = g.relabel([1, 2, 3, 4, 0])
    assert r.has_edge(1, 2) and r.has_edge(0, 1) and not r.has_edge(0, 2)
    assert g.complement().edges() == [(0, 2), (0, 3), (1, 3), (1, 4), (2, 4)]


def test_connected_components_examples():
    assert connected_components(P4) == [{0, 1, 2, 3}]
    assert connected_components(graph(4, [(0, 1), (2, 3)])) == [{0, 1}, {2, 3}]
    assert connected_components(graph(3, [])) == [{0}, {1}, {2}]


def test_cut_vertex_examples():
    assert cut_vertices(P4) == {1, 2}
    assert cut_vertices(C5) == set()
    assert cut_vertices(NET) == {0, 1, 2}


def test_cut_vertices_match_deletion_check_exhaustively(connected_upto):
    for g in connected_upto(8):
        assert cut_vertices(g) == brute_cut_vertices(g)


@settings(max_examples=300, deadline=None)
@given(graphs(max_n=10))
def test_cut_vertices_match_deletion_check_on_random_graphs(g):
    assert cut_vertices(g) == brute_cut_vertices(g)


def test_is_dominating_examples():
    assert is_dominating(star(3), {0})
    assert not is_dominating(P4, {0})
    assert is_dominating(C5, {0, 2})
    with pytest.raises(ValueError):
        is_dominating(P4, {7})


def test_clique_and_stable_checks():
    assert is_clique(K3, [0, 1, 2]) and not is_clique(P4, [0, 1, 2])
    assert is_stable(P4, [0, 2]) and not is_stable(P4, [0, 1])


def test_bipartite_and_multipartite_examples():
    c4 = cycle_graph(4)
    assert is_bipartite(c4) == ({0, 2}, {1, 3})
    assert sorted(map(sorted, is_complete_multipartite(c4))) == [[0, 2], [1, 3]]
    assert is_bipartite(K3) is None
    assert sorted(map(sorted, is_complete_multipartite(K3))) == [[0], [1], [2]]
    assert is_bipartite(PAW) is None
    assert is_complete_multipartite(PAW) is None
    assert is_complete_multipartite(CLAW) is not None


def _complement_is_union_of_cliques(g):
    co = g.complement()
    for comp in connected_components(co):
        if not is_clique(co, comp):
            return False
    return True


@settings(max_examples=400, deadline=None)
@given(graphs(max_n=9))
def test_multipartite_iff_complement_is_disjoint_cliques(g):
    parts = is_complete_multipartite(g)
    assert (parts is not None) == _complement_is_union_of_cliques(g)
    if parts is not None:
        assert sorted(v for p in parts for v in p) == list(range(g.n))
        for p, q in itertools.combinations(parts, 2):
            assert all(g.has_edge(u, v) for u in p for v in q)
        assert all(is_stable(g, p) for p in parts)


@settings(max_examples=400, deadline=None)
@given(graphs(max_n=9))
def test_two_colouring_is_proper_or_odd_cycle_exists(g):
    col = is_bipartite(g)
    if col is not None:
        a, b = col
        assert a | b == set(range(g.n)) and not a & b
        assert is_stable(g, a) and is_stable(g, b)
    else:
        # some odd closed walk: an odd cycle shows up as an odd-length path back to itself
        odd = False
        for s in range(g.n):
            dist = {s: 0}
            frontier = [s]
            while frontier:
                nxt = []
                for v in frontier:
                    for u in g.neighbors(v):
                        if u not in dist:
                            dist[u] = dist[v] + 1
                            nxt.append(u)
                        elif dist[u] == dist[v]:
                            odd = True
                frontier = nxt
        assert odd
