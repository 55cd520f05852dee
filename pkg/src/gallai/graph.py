"""Immutable simple graphs over dense vertex ids and basic structural queries.

Adjacency is stored as one Python ``int`` bitmask per vertex: bit ``u`` of
``adj[v]`` is set iff ``u ~ v``.  Every algorithm in the package works on these
masks directly, which keeps the small-graph sweeps fast without numpy.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator, Sequence

from .errors import DuplicateEdge, SelfLoop, VertexOutOfRange


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


class Graph:
    """A simple undirected graph on vertices ``0..n-1``.

    Instances are hashable values; build them with :meth:`from_edges`,
    :meth:`from_masks` or one of the parsers in :mod:`gallai.formats`.
    """

    __slots__ = ("_n", "_adj", "_hash")

    def __init__(self, n: int, adj: Sequence[int]):
        if len(adj) != n:
            raise ValueError("adjacency length does not match vertex count")
        self._n = n
        self._adj = tuple(adj)
        self._hash = None

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], *, strict: bool = True) -> "Graph":
        """Build a graph; ``strict`` rejects duplicate edges instead of merging them."""
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise VertexOutOfRange(f"edge {u}-{v} outside 0..{n - 1}")
            if u == v:
                raise SelfLoop(f"self-loop at vertex {u}")
            if adj[u] >> v & 1:
                if strict:
                    raise DuplicateEdge(f"duplicate edge {min(u, v)}-{max(u, v)}")
                continue
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj)

    @classmethod
    def from_masks(cls, adj: Sequence[int]) -> "Graph":
        """Build from adjacency bitmasks, validating symmetry and irreflexivity."""
        n = len(adj)
        full = (1 << n) - 1
        for v, m in enumerate(adj):
            if m & ~full:
                raise VertexOutOfRange(f"vertex {v} has a neighbour outside 0..{n - 1}")
            if m >> v & 1:
                raise SelfLoop(f"self-loop at vertex {v}")
            for u in bits(m):
                if not adj[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric at {u},{v}")
        return cls(n, adj)

    @property
    def n(self) -> int:
        return self._n

    @property
    def adj(self) -> tuple[int, ...]:
        return self._adj

    @property
    def full_mask(self) -> int:
        return (1 << self._n) - 1

    def __len__(self) -> int:
        return self._n

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._adj == other._adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._n, self._adj))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, edges={self.edges()})"

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self._adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [m.bit_count() for m in self._adj]

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def num_edges(self) -> int:
        return sum(self.degrees()) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        out = []
        for u, m in enumerate(self._adj):
            for v in bits(m >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def complement(self) -> "Graph":
        full = self.full_mask
        return Graph(self._n, [full & ~m & ~(1 << v) for v, m in enumerate(self._adj)])

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph relabelled to ``0..k-1`` in increasing vertex order."""
        vs = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(vs)}
        adj = []
        for v in vs:
            adj.append(mask_of(pos[u] for u in bits(self._adj[v]) if u in pos))
        return Graph(len(vs), adj)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with vertex ``v`` renamed ``perm[v]``."""
        adj = [0] * self._n
        for v, m in enumerate(self._adj):
            adj[perm[v]] = mask_of(perm[u] for u in bits(m))
        return Graph(self._n, adj)

    def add_vertex(self, neighbors: Iterable[int]) -> "Graph":
        """New graph with vertex ``n`` joined to ``neighbors``."""
        nb = mask_of(neighbors)
        new = self._n
        adj = [m | (1 << new) if nb >> v & 1 else m for v, m in enumerate(self._adj)]
        adj.append(nb)
        return Graph(self._n + 1, adj)

    def is_connected(self) -> bool:
        if self._n == 0:
            return True
        return reach(self._adj, 0, self.full_mask) == self.full_mask

    def max_degree_vertex(self) -> int:
        """Lowest-id vertex of maximum degree."""
        degs = self.degrees()
        return degs.index(max(degs))


def reach(adj: Sequence[int], source: int, allowed: int) -> int:
    """Mask of vertices reachable from ``source`` inside ``allowed`` (source included)."""
    seen = 1 << source
    frontier = seen
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= adj[v]
        frontier = nxt & allowed & ~seen
        seen |= frontier
    return seen


def component_masks(adj: Sequence[int], allowed: int) -> list[int]:
    """Connected components of the subgraph induced on ``allowed``, by lowest vertex."""
    out = []
    rest = allowed
    while rest:
        comp = reach(adj, lowest(rest), allowed)
        out.append(comp)
        rest &= ~comp
    return out


def connected_components(g: Graph) -> list[set[int]]:
    return [set(bits(c)) for c in component_masks(g.adj, g.full_mask)]


def cut_vertices(g: Graph) -> set[int]:
    """Articulation points by the iterative low-link DFS."""
    n = g.n
    adj = g.adj
    disc = [-1] * n
    low = [0] * n
    out: set[int] = set()
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        stack = [(root, -1, iter(bits(adj[root])))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for u in it:
                if disc[u] == -1:
                    disc[u] = low[u] = timer
                    timer += 1
                    if v == root:
                        root_children += 1
                    stack.append((u, v, iter(bits(adj[u]))))
                    advanced = True
                    break
                if u != parent:
                    low[v] = min(low[v], disc[u])
            if advanced:
                continue
            stack.pop()
            if parent != -1:
                low[parent] = min(low[parent], low[v])
                if parent != root and low[v] >= disc[parent]:
                    out.add(parent)
        if root_children > 1:
            out.add(root)
    return out


def is_dominating(g: Graph, s: Iterable[int]) -> bool:
    s_mask = mask_of(s)
    if s_mask & ~g.full_mask:
        raise ValueError("dominating-set candidate outside the vertex range")
    covered = s_mask
    for v in bits(s_mask):
        covered |= g.adj[v]
    return covered == g.full_mask


def is_clique(g: Graph, vertices: Iterable[int]) -> bool:
    m = mask_of(vertices)
    return all((g.adj[v] | (1 << v)) & m == m for v in bits(m))


def is_stable(g: Graph, vertices: Iterable[int]) -> bool:
    m = mask_of(vertices)
    return all(g.adj[v] & m == 0 for v in bits(m))


def two_coloring(adj: Sequence[int], allowed: int) -> tuple[int, int] | None:
    """Proper 2-colouring of the subgraph on ``allowed`` as two masks, or None."""
    side_a = side_b = 0
    rest = allowed
    while rest:
        start = lowest(rest)
        side_a |= 1 << start
        queue = deque([start])
        while queue:
            v = queue.popleft()
            mine, other = (side_a, side_b) if side_a >> v & 1 else (side_b, side_a)
            nb = adj[v] & allowed
            if nb & mine:
                return None
            fresh = nb & ~other
            if fresh:
                if side_a >> v & 1:
                    side_b |= fresh
                else:
                    side_a |= fresh
                queue.extend(bits(fresh))
        rest &= ~(side_a | side_b)
    return side_a, side_b


def is_bipartite(g: Graph) -> tuple[set[int], set[int]] | None:
    """Two colour classes of a proper 2-colouring, or None if an odd cycle exists."""
    res = two_coloring(g.adj, g.full_mask)
    if res is None:
        return None
    return set(bits(res[0])), set(bits(res[1]))


def is_complete_multipartite(g: Graph) -> list[set[int]] | None:
    """Parts of a complete multipartite structure, or None.

    Non-adjacency must be an equivalence relation: each part is the closed
    non-neighbourhood of its members.
    """
    full = g.full_mask
    parts = []
    rest = full
    while rest:
        v = lowest(rest)
        part = full & ~g.adj[v]
        for u in bits(part):
            if full & ~g.adj[u] != part:
                return None
        parts.append(set(bits(part)))
        rest &= ~part
    return parts
