"""Canonical labelling of small graphs.

``canonical_key`` runs colour refinement followed by an individualisation
search over the whole tree and keeps the least adjacency row tuple seen at a
leaf.  The only pruning is twin skipping (two vertices with equal
neighbourhoods in a target cell lead to identical subtrees), which keeps
cliques and co-cliques from blowing up the tree.

``bruteforce_key`` minimises over every permutation and is only usable for
tiny graphs; it exists as an independent check.
"""

from __future__ import annotations

import itertools

from .graph import Graph, bits


def _refine(adj, n: int, colors: list[int]) -> list[int]:
    ncolors = len(set(colors))
    while True:
        sig = [(colors[v], tuple(sorted(colors[u] for u in bits(adj[v])))) for v in range(n)]
        order = {s: i for i, s in enumerate(sorted(set(sig)))}
        colors = [order[s] for s in sig]
        if len(order) == ncolors:
            return colors
        ncolors = len(order)


def _rows(adj, n: int, pos: list[int]) -> tuple[int, ...]:
    rows = [0] * n
    for v in range(n):
        r = 0
        for u in bits(adj[v]):
            r |= 1 << pos[u]
        rows[pos[v]] = r
    return tuple(rows)


def canonical_labeling(g: Graph) -> tuple[tuple[int, ...], list[int]]:
    """Return ``(key, pos)``: the canonical row tuple and the vertex -> position map."""
    n = g.n
    adj = g.adj
    if n == 0:
        return (), []
    best: list = [None, None]

    def visit(colors: list[int]) -> None:
        colors = _refine(adj, n, colors)
        counts = [0] * n
        for c in colors:
            counts[c] += 1
        target = next((c for c in range(n) if counts[c] > 1), None)
        if target is None:
            key = _rows(adj, n, colors)
            if best[0] is None or key < best[0]:
                best[0], best[1] = key, colors
            return
        cell = [v for v in range(n) if colors[v] == target]
        tried: list[int] = []
        for v in cell:
            if any(adj[v] & ~(1 << u) == adj[u] & ~(1 << v) for u in tried):
                continue
            tried.append(v)
            new = [2 * c + 1 for c in colors]
            new[v] = 2 * target
            visit(new)

    visit(g.degrees())
    return best[0], best[1]


def canonical_key(g: Graph) -> tuple[int, tuple[int, ...]]:
    return g.n, canonical_labeling(g)[0]


def canonical_graph(g: Graph) -> Graph:
    key, pos = canonical_labeling(g)
    return Graph(g.n, key) if g.n else g


def bruteforce_key(g: Graph) -> tuple[int, tuple[int, ...]]:
    n = g.n
    return n, min((_rows(g.adj, n, list(p)) for p in itertools.permutations(range(n))), default=())
