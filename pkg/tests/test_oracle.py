import pytest
from hypothesis import given, settings

from conftest import (
    C5,
    CHAIR,
    K3,
    NET,
    P4,
    brute_gallai,
    brute_longest_paths,
    brute_min_dominating,
    complete_graph,
    graph,
    graphs,
    star,
)
from gallai.errors import Disconnected, OracleTruncated
from gallai.generators import petersen, walther_b
from gallai.oracle import (
    find_longest_path,
    gallai_vertices,
    has_hamiltonian_cycle,
    has_hamiltonian_path,
    longest_path_length,
    longest_path_masks,
    longest_path_report,
    min_transversal,
)


def test_report_examples():
    r = longest_path_report(K3)
    assert (r.length_k, r.num_paths, r.gallai_set, r.truncated) == (3, 3, frozenset({0, 1, 2}), False)
    assert r.paths == ((0, 1, 2), (0, 2, 1), (1, 0, 2))
    s = longest_path_report(star(3))
    assert (s.length_k, s.num_paths, s.gallai_set) == (3, 3, frozenset({0}))
    assert s.paths == ((1, 0, 2), (1, 0, 3), (2, 0, 3))


def test_walther_b_has_no_gallai_vertex():
    r = longest_path_report(walther_b())
    assert not r.truncated
    assert r.gallai_set == frozenset()
    assert gallai_vertices(walther_b()) == set()


def test_gallai_vertex_examples():
    assert gallai_vertices(P4) == {0, 1, 2, 3}
    assert gallai_vertices(NET) == {0, 1, 2}
    assert gallai_vertices(CHAIR) == {1, 2, 3}
    assert gallai_vertices(graph(1, [])) == {0}
    with pytest.raises(Disconnected):
        gallai_vertices(graph(3, [(0, 1)]))


def test_hamiltonicity_examples():
    assert not has_hamiltonian_cycle(petersen())
    assert has_hamiltonian_path(petersen())
    assert has_hamiltonian_cycle(C5) and has_hamiltonian_path(C5)
    assert not has_hamiltonian_cycle(P4) and has_hamiltonian_path(P4)
    assert not has_hamiltonian_cycle(complete_graph(2))
    assert not has_hamiltonian_path(graph(0, []))
    assert not has_hamiltonian_path(graph(2, []))


def test_min_transversal_examples():
    assert min_transversal(complete_graph(2), 1) == {0}
    assert min_transversal(NET, 1) == {0}
    assert min_transversal(walther_b(), 1) is None
    t = min_transversal(walther_b(), 2)
    assert t is not None and len(t) == 2
    with pytest.raises(Disconnected):
        min_transversal(graph(2, []), 1)


def test_against_plain_path_enumeration(connected_upto):
    for g in connected_upto(7):
        k, paths = brute_longest_paths(g)
        r = longest_path_report(g, retain=None)
        assert r.length_k == k
        assert set(r.paths) == paths and r.num_paths == len(paths)
        assert set(r.gallai_set) == brute_gallai(g)
        assert gallai_vertices(g) == set(r.gallai_set)
        assert longest_path_length(g) == k
        path = find_longest_path(g)
        assert len(path) == k and all(g.has_edge(a, b) for a, b in zip(path, path[1:]))


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=9))
def test_report_on_arbitrary_graphs(g):
    k, paths = brute_longest_paths(g)
    r = longest_path_report(g, retain=None)
    assert r.length_k == k and set(r.paths) == paths
    assert has_hamiltonian_path(g) == (g.n > 0 and k == g.n)
    cyc = g.n >= 3 and any(g.has_edge(p[0], p[-1]) for p in paths if len(p) == g.n)
    assert has_hamiltonian_cycle(g) == cyc


@settings(max_examples=100, deadline=None)
@given(graphs(min_n=1, max_n=9, connected=True))
def test_traceable_graphs_have_every_vertex_gallai(g):
    if has_hamiltonian_path(g):
        assert gallai_vertices(g) == set(range(g.n))
    assert gallai_vertices(g) == brute_gallai(g)


def test_transversal_never_exceeds_domination_number(connected_upto):
    for g in connected_upto(7):
        d = len(brute_min_dominating(g))
        t = min_transversal(g, d)
        assert t is not None and len(t) <= d
        _, masks = longest_path_masks(g)
        tm = sum(1 << v for v in t)
        assert all(m & tm for m in masks)


def test_transversal_is_smallest_gallai_vertex_when_one_exists(connected_upto):
    for g in connected_upto(6):
        gv = gallai_vertices(g)
        if gv:
            assert min_transversal(g, 1) == {min(gv)}


def test_truncation():
    g = complete_graph(5)
    r = longest_path_report(g, path_budget=3)
    assert r.truncated
    assert set(r.gallai_set) >= set(range(5))
    with pytest.raises(OracleTruncated):
        longest_path_masks(g, path_budget=3)
    with pytest.raises(ValueError):
        longest_path_report(g, path_budget=0)
    full = longest_path_report(g, retain=2)
    assert full.num_paths == 60 and len(full.paths) == 2 and not full.truncated


def test_parallel_matches_sequential():
    for g in [petersen(), walther_b(), NET, complete_graph(6)]:
        a = longest_path_report(g, retain=None)
        b = longest_path_report(g, retain=None, jobs=2)
        assert a == b
