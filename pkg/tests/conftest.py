"""Shared fixtures plus slow reference implementations used as test oracles.

Nothing here calls into the pattern search, the longest-path branch and
bound or the canonical labeller: the helpers are written from the
definitions so they can catch mistakes in those modules.
"""

from __future__ import annotations

import itertools

import pytest
from hypothesis import strategies as st

from gallai.graph import Graph


def graph(n, edges):
    return Graph.from_edges(n, edges)


def path_graph(k):
    return graph(k, [(i, i + 1) for i in range(k - 1)])


def cycle_graph(k):
    return graph(k, [(i, (i + 1) % k) for i in range(k)])


def complete_graph(k):
    return graph(k, list(itertools.combinations(range(k), 2)))


def star(leaves):
    return graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def disjoint_union(*gs):
    edges, off = [], 0
    for g in gs:
        edges += [(u + off, v + off) for u, v in g.edges()]
        off += g.n
    return graph(off, edges)


K3 = complete_graph(3)
P4 = path_graph(4)
C5 = cycle_graph(5)
C6 = cycle_graph(6)
CLAW = star(3)
PAW = graph(4, [(0, 1), (0, 2), (1, 2), (0, 3)])
DIAMOND = graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
BULL = graph(5, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 4)])
NET = graph(6, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (2, 5)])
CHAIR = graph(5, [(0, 1), (1, 2), (2, 3), (1, 4)])
BOWTIE = graph(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])


# --- reference oracles ------------------------------------------------------

def naive_contains(g, h):
    """Is ``h`` an induced subgraph of ``g``?  Tries every ordered vertex tuple."""
    k = h.n
    hedges = {(i, j): h.has_edge(i, j) for i in range(k) for j in range(i + 1, k)}
    for tup in itertools.permutations(range(g.n), k):
        if all(g.has_edge(tup[i], tup[j]) == e for (i, j), e in hedges.items()):
            return True
    return False


def all_simple_paths(g):
    """Every simple path as a vertex tuple, both orientations, no pruning."""
    out = []

    def grow(path, seen):
        out.append(tuple(path))
        for u in g.neighbors(path[-1]):
            if u not in seen:
                path.append(u)
                seen.add(u)
                grow(path, seen)
                seen.discard(u)
                path.pop()

    for v in range(g.n):
        grow([v], {v})
    return out


def brute_longest_paths(g):
    paths = all_simple_paths(g)
    k = max(map(len, paths), default=0)
    canon = {p if p[0] <= p[-1] else p[::-1] for p in paths if len(p) == k}
    return k, canon


def brute_gallai(g):
    k, paths = brute_longest_paths(g)
    common = set(range(g.n))
    for p in paths:
        common &= set(p)
    return common


def count_components(g, removed=()):
    removed = set(removed)
    seen, comps = set(removed), 0
    for s in range(g.n):
        if s in seen:
            continue
        comps += 1
        stack = [s]
        seen.add(s)
        while stack:
            v = stack.pop()
            for u in g.neighbors(v):
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
    return comps


def brute_cut_vertices(g):
    base = count_components(g)
    # removing v also removes v's own component if v is isolated
    return {v for v in range(g.n) if count_components(g, [v]) > base - (g.degree(v) == 0)}


def brute_min_dominating(g):
    for k in range(1, g.n + 1):
        for s in itertools.combinations(range(g.n), k):
            covered = set(s)
            for v in s:
                covered.update(g.neighbors(v))
            if len(covered) == g.n:
                return set(s)
    return set()


# --- hypothesis strategies --------------------------------------------------

@st.composite
def graphs(draw, min_n=0, max_n=8, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    g = graph(n, [p for p, keep in zip(pairs, mask) if keep])
    if connected and n:
        # chain the components together so the result is connected
        comps = []
        seen = set()
        for v in range(n):
            if v not in seen:
                comp = {v}
                stack = [v]
                while stack:
                    x = stack.pop()
                    for u in g.neighbors(x):
                        if u not in comp:
                            comp.add(u)
                            stack.append(u)
                seen |= comp
                comps.append(min(comp))
        extra = [(a, b) for a, b in zip(comps, comps[1:])]
        g = graph(n, g.edges() + extra)
    return g


@st.composite
def relabelled(draw, g):
    perm = draw(st.permutations(range(g.n)))
    return g.relabel(perm)


@pytest.fixture(scope="session")
def connected_upto():
    from gallai.generators import enumerate_connected

    cache = {}

    def get(nmax):
        if nmax not in cache:
            cache[nmax] = [g for n in range(1, nmax + 1) for g in enumerate_connected(n)]
        return cache[nmax]

    return get


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not getattr(mod, "RESULTS", None):
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[number])
