"""Exact longest-path computations for small graphs.

Everything here is exponential in the worst case and meant as ground truth
for the constructive finders.  Paths are enumerated by depth-first search
from every start vertex; a branch is cut when the prefix plus the number of
unvisited vertices reachable from its tip cannot reach the incumbent length.
A path and its reversal are the same path: only the orientation whose first
vertex is smaller than its last is recorded.
"""

from __future__ import annotations

import itertools
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .errors import Disconnected, OracleTruncated
from .graph import Graph, bits, reach

DEFAULT_PATH_BUDGET = 10**7
DEFAULT_RETAIN = 10**4


@dataclass(frozen=True)
class LongestPathReport:
    length_k: int
    paths: tuple[tuple[int, ...], ...]
    num_paths: int
    gallai_set: frozenset[int]
    truncated: bool


class _Stop(Exception):
    pass


class _Collector:
    """Running state of one longest-path enumeration."""

    def __init__(self, budget: int, retain: int | None, keep_masks: bool):
        self.best = 0
        self.count = 0
        self.inter = 0
        self.paths: list[tuple[int, ...]] = []
        self.masks: set[int] = set()
        self.budget = budget
        self.retain = retain
        self.keep_masks = keep_masks
        self.truncated = False

    def record(self, path: list[int], visited: int) -> None:
        k = len(path)
        if k > self.best:
            self.best = k
            self.count = 0
            self.inter = visited
            self.paths.clear()
            self.masks.clear()
        self.count += 1
        self.inter &= visited
        if self.retain is None or len(self.paths) < self.retain:
            self.paths.append(tuple(path))
        if self.keep_masks:
            self.masks.add(visited)
        if self.count > self.budget:
            self.truncated = True
            raise _Stop


def _enumerate(adj, full: int, starts, col: _Collector) -> None:
    def dfs(path: list[int], visited: int, tip: int) -> None:
        k = len(path)
        if k >= col.best and (k == 1 or path[0] < tip):
            col.record(path, visited)
        free = full & ~visited
        cand = adj[tip] & free
        if not cand:
            return
        if col.best > k + 1:
            r = (reach(adj, tip, free | (1 << tip)) & free).bit_count()
            if k + r < col.best:
                return
        for v in bits(cand):
            path.append(v)
            dfs(path, visited | (1 << v), v)
            path.pop()

    try:
        for s in starts:
            dfs([s], 1 << s, s)
    except _Stop:
        pass


def _ensure_recursion(n: int) -> None:
    need = 3 * n + 100
    if sys.getrecursionlimit() < need:
        sys.setrecursionlimit(need)


def _worker(args):
    adj, full, starts, budget, retain = args
    _ensure_recursion(len(adj))
    col = _Collector(budget, retain, keep_masks=False)
    _enumerate(adj, full, starts, col)
    return col.best, col.count, col.inter, col.paths, col.truncated


def longest_path_report(
    g: Graph,
    path_budget: int = DEFAULT_PATH_BUDGET,
    retain: int | None = DEFAULT_RETAIN,
    jobs: int = 1,
) -> LongestPathReport:
    """All longest paths of ``g`` (over all components) and their intersection.

    ``path_budget`` caps the number of longest paths examined; past it the
    report is marked ``truncated`` and ``gallai_set`` is only an
    over-approximation.  ``retain`` caps how many paths are stored in
    ``paths`` (``None`` keeps all); the intersection always covers every
    path examined.  ``jobs > 1`` splits start vertices across processes.
    """
    if path_budget < 1:
        raise ValueError("path_budget must be positive")
    n = g.n
    if n == 0:
        return LongestPathReport(0, (), 0, frozenset(), False)
    _ensure_recursion(n)
    if jobs <= 1:
        col = _Collector(path_budget, retain, keep_masks=False)
        _enumerate(g.adj, g.full_mask, range(n), col)
        parts = [(col.best, col.count, col.inter, col.paths, col.truncated)]
    else:
        chunks = [list(range(i, n, jobs)) for i in range(jobs)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_worker, [(g.adj, g.full_mask, c, path_budget, retain) for c in chunks if c]))
    best = max(p[0] for p in parts)
    count = 0
    inter = g.full_mask
    paths: list[tuple[int, ...]] = []
    truncated = False
    for p_best, p_count, p_inter, p_paths, p_trunc in parts:
        truncated |= p_trunc
        if p_best != best:
            continue
        count += p_count
        inter &= p_inter
        paths.extend(p_paths)
    paths.sort()
    if retain is not None:
        paths = paths[:retain]
    return LongestPathReport(best, tuple(paths), count, frozenset(bits(inter)), truncated)


def longest_path_masks(g: Graph, path_budget: int = DEFAULT_PATH_BUDGET) -> tuple[int, set[int]]:
    """Longest path order and the set of vertex masks of all longest paths."""
    _ensure_recursion(g.n)
    col = _Collector(path_budget, 0, keep_masks=True)
    _enumerate(g.adj, g.full_mask, range(g.n), col)
    if col.truncated:
        raise OracleTruncated(f"more than {path_budget} longest paths")
    return col.best, col.masks


def find_longest_path(g: Graph, allowed: int | None = None, stop_at: int | None = None) -> list[int]:
    """Some longest path inside ``allowed``; stops early once ``stop_at`` vertices are reached."""
    adj = g.adj
    allowed = g.full_mask if allowed is None else allowed
    limit = allowed.bit_count() if stop_at is None else min(stop_at, allowed.bit_count())
    _ensure_recursion(g.n)
    best: list[int] = []

    def dfs(path: list[int], visited: int, tip: int) -> bool:
        nonlocal best
        k = len(path)
        if k > len(best):
            best = path.copy()
            if k >= limit:
                return True
        free = allowed & ~visited
        cand = adj[tip] & free
        if not cand:
            return False
        r = (reach(adj, tip, free | (1 << tip)) & free).bit_count()
        if k + r <= len(best):
            return False
        for v in bits(cand):
            path.append(v)
            if dfs(path, visited | (1 << v), v):
                return True
            path.pop()
        return False

    for s in bits(allowed):
        if dfs([s], 1 << s, s):
            break
    return best


def longest_path_length(g: Graph, allowed: int | None = None, stop_at: int | None = None) -> int:
    return len(find_longest_path(g, allowed, stop_at))


def gallai_vertices(g: Graph) -> set[int]:
    """Vertices on every longest path of the connected graph ``g``.

    ``v`` qualifies iff ``g - v`` has no path as long as the longest path of
    ``g``; only vertices of one longest path need testing.
    """
    if not g.is_connected():
        raise Disconnected("Gallai vertices are defined for connected graphs")
    if g.n == 0:
        return set()
    path = find_longest_path(g)
    k = len(path)
    if k == g.n:
        return set(range(g.n))
    full = g.full_mask
    return {v for v in path if longest_path_length(g, full & ~(1 << v), stop_at=k) < k}


def has_hamiltonian_path(g: Graph) -> bool:
    return g.n > 0 and longest_path_length(g, stop_at=g.n) == g.n


def has_hamiltonian_cycle(g: Graph) -> bool:
    n = g.n
    if n < 3 or not g.is_connected():
        return False
    adj = g.adj
    full = g.full_mask
    _ensure_recursion(n)

    def dfs(visited: int, tip: int, k: int) -> bool:
        if k == n:
            return bool(adj[tip] & 1)
        free = full & ~visited
        if not adj[0] & (free | (1 << tip)):
            return False
        if (reach(adj, tip, free | (1 << tip)) & free) != free:
            return False
        for v in bits(adj[tip] & free):
            if dfs(visited | (1 << v), v, k + 1):
                return True
        return False

    return dfs(1, 0, 1)


def min_transversal(g: Graph, k_max: int, path_budget: int = DEFAULT_PATH_BUDGET) -> set[int] | None:
    """Lexicographically first smallest vertex set meeting every longest path, size <= ``k_max``."""
    if not g.is_connected():
        raise Disconnected("longest path transversals are computed for connected graphs")
    if g.n == 0:
        return set()
    _, masks = longest_path_masks(g, path_budget)
    for k in range(1, k_max + 1):
        for combo in itertools.combinations(range(g.n), k):
            s = 0
            for v in combo:
                s |= 1 << v
            if all(m & s for m in masks):
                return set(combo)
    return None
