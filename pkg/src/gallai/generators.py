"""Named constructions, seeded class-conditioned sampling and exhaustive enumeration."""

from __future__ import annotations

import gzip
import random
from functools import lru_cache
from importlib import resources
from typing import Iterator

from .canon import canonical_graph
from .errors import UnsupportedSize
from .formats import parse_graph6, to_graph6
from .graph import Graph, bits
from .pattern import ClassLabel, find_induced_containing

MAX_ENUMERATE_N = 10
BUNDLED_MAX_N = 9


def petersen() -> Graph:
    """Outer cycle 0..4, inner pentagram 5..9, spokes i -- i+5."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    return Graph.from_edges(10, edges)


def walther_b() -> Graph:
    """Petersen with vertex 0 blown up into three pendant vertices.

    Petersen vertices 1..9 become 0..8; the pendants 9, 10, 11 hang off the
    former neighbours 1, 4, 5 of the removed vertex, in that order.
    """
    p = petersen()
    removed = 0
    keep = [v for v in range(p.n) if v != removed]
    pos = {v: i for i, v in enumerate(keep)}
    edges = [(pos[u], pos[v]) for u, v in p.edges() if removed not in (u, v)]
    for i, v in enumerate(p.neighbors(removed)):
        edges.append((pos[v], len(keep) + i))
    return Graph.from_edges(len(keep) + 3, edges)


def inflate_cubic_vertices(g: Graph) -> Graph:
    """Replace every degree-3 vertex by a triangle.

    Corner ``k`` of vertex ``v``'s triangle takes over ``v``'s ``k``-th edge in
    ascending neighbour order.  Triangles are numbered first (``3*i + k`` for
    the ``i``-th cubic vertex), all other vertices follow in id order.
    """
    cubic = [v for v in range(g.n) if g.degree(v) == 3]
    others = [v for v in range(g.n) if g.degree(v) != 3]
    index = {v: i for i, v in enumerate(cubic)}
    other_pos = {v: 3 * len(cubic) + i for i, v in enumerate(others)}

    def endpoint(v: int, toward: int) -> int:
        if v in index:
            return 3 * index[v] + g.neighbors(v).index(toward)
        return other_pos[v]

    edges = []
    for i in range(len(cubic)):
        edges += [(3 * i, 3 * i + 1), (3 * i, 3 * i + 2), (3 * i + 1, 3 * i + 2)]
    for u, v in g.edges():
        edges.append((endpoint(u, v), endpoint(v, u)))
    return Graph.from_edges(3 * len(cubic) + len(others), edges)


def walther_b_plus(pendant_subdivisions: int = 0) -> Graph:
    """``walther_b`` with every cubic vertex inflated to a triangle.

    With ``pendant_subdivisions = s > 0`` each edge ending in one of the three
    pendant vertices is replaced by a path with ``s`` new inner vertices,
    numbered after the existing ones edge by edge.  The plain inflation keeps
    every triangle corner on all longest paths; ``s = 2`` is the smallest
    subdivision that empties the common intersection.
    """
    g = inflate_cubic_vertices(walther_b())
    if pendant_subdivisions <= 0:
        return g
    n, edges = g.n, []
    for u, v in g.edges():
        if g.degree(u) == 1 or g.degree(v) == 1:
            chain = [u, *range(n, n + pendant_subdivisions), v]
            n += pendant_subdivisions
            edges += zip(chain, chain[1:])
        else:
            edges.append((u, v))
    return Graph.from_edges(n, edges)


# --- enumeration ------------------------------------------------------------

def _augment(graphs: list[Graph], connected: bool) -> list[Graph]:
    """One representative per isomorphism class of graphs with one more vertex."""
    seen: dict[tuple, Graph] = {}
    for g in graphs:
        lo = 1 if connected else 0
        for nb in range(lo, 1 << g.n):
            h = canonical_graph(g.add_vertex(bits(nb)))
            seen.setdefault(h.adj, h)
    return sorted(seen.values(), key=to_graph6)


@lru_cache(maxsize=None)
def _bundled(n: int) -> tuple[Graph, ...] | None:
    name = f"connected{n}.g6.gz"
    try:
        raw = resources.files("gallai").joinpath("data", name).read_bytes()
    except FileNotFoundError:
        return None
    text = gzip.decompress(raw).decode("ascii")
    return tuple(parse_graph6(line) for line in text.split())


@lru_cache(maxsize=None)
def _connected(n: int, use_bundled: bool) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1, [0]),)
    if use_bundled:
        hit = _bundled(n)
        if hit is not None:
            return hit
    return tuple(_augment(list(_connected(n - 1, use_bundled)), connected=True))


def enumerate_connected(n: int, *, use_bundled: bool = True) -> Iterator[Graph]:
    """Yield one canonical representative of each connected graph on ``n`` vertices.

    Orders up to 9 come from the bundled graph6 lists; order 10 is built by
    vertex augmentation and takes hours in pure Python.
    """
    if not 1 <= n <= MAX_ENUMERATE_N:
        raise UnsupportedSize(f"enumeration supports 1 <= n <= {MAX_ENUMERATE_N}, got {n}")
    yield from _connected(n, use_bundled)


@lru_cache(maxsize=None)
def _all_graphs(n: int) -> tuple[Graph, ...]:
    if n == 0:
        return (Graph(0, []),)
    return tuple(_augment(list(_all_graphs(n - 1)), connected=False))


def enumerate_graphs(n: int) -> Iterator[Graph]:
    """All graphs on ``n`` vertices up to isomorphism, connected or not (n <= 8)."""
    if not 0 <= n <= 8:
        raise UnsupportedSize(f"full enumeration supports 0 <= n <= 8, got {n}")
    yield from _all_graphs(n)


def write_bundled_data(nmax: int, directory) -> None:
    """Regenerate ``connected{n}.g6.gz`` files for ``n <= nmax``."""
    from pathlib import Path

    out = Path(directory)
    out.mkdir(parents=True, exist_ok=True)
    for n in range(1, nmax + 1):
        graphs = _connected(n, False)
        body = "\n".join(to_graph6(g) for g in graphs) + "\n"
        (out / f"connected{n}.g6.gz").write_bytes(gzip.compress(body.encode("ascii"), mtime=0))


# --- seeded sampling --------------------------------------------------------

EDGE_PROBABILITIES = (0.05, 0.1, 0.2, 0.35, 0.5, 0.7, 0.9)
MAX_RANDOM_N = 200


def random_class_graph(label: ClassLabel, n: int, seed: int, max_attempts: int = 10_000) -> Graph | None:
    """Seeded connected member of ``label`` on ``n`` vertices, or None.

    The graph grows one vertex at a time.  Each proposal joins the new vertex
    to a true twin, false twin, one minimum-degree vertex or random subset (edge
    probability swept over :data:`EDGE_PROBABILITIES`); if that creates a
    forbidden induced subgraph the new vertex is deleted again.  Only
    embeddings through the new vertex need checking since the class is
    hereditary.  Vertex ids are shuffled at the end.
    """
    if n > MAX_RANDOM_N:
        raise UnsupportedSize(f"random generation supports n <= {MAX_RANDOM_N}")
    if n < 1:
        return None
    rng = random.Random(seed)
    patterns = label.patterns
    g = Graph(1, [0])
    attempts = 0
    while g.n < n:
        attempts += 1
        if attempts > max_attempts:
            return None
        k = g.n
        move = rng.random()
        u = rng.randrange(k)
        if move < 0.3:
            nb = g.adj[u] | 1 << u
        elif move < 0.55:
            nb = g.adj[u]
        elif move < 0.65:
            # pendant on a minimum-degree vertex, so a path can still grow at its ends
            low = min(g.degrees())
            nb = 1 << rng.choice([v for v in range(k) if g.degree(v) == low])
        else:
            p = EDGE_PROBABILITIES[attempts % len(EDGE_PROBABILITIES)]
            nb = 0
            for v in range(k):
                if rng.random() < p:
                    nb |= 1 << v
        if not nb:
            continue
        h = g.add_vertex(bits(nb))
        if any(find_induced_containing(h, p, k) is not None for p in patterns):
            continue
        g = h
    perm = list(range(n))
    rng.shuffle(perm)
    return g.relabel(perm)
