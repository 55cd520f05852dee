"""Small forbidden graphs and induced-subgraph detection.

Detection is a backtracking scan over ordered vertex tuples.  Candidates for
pattern vertex ``i`` are cut down with one bitmask operation per earlier
pattern vertex (neighbour or non-neighbour, as the pattern dictates), so a
disjoint-union pattern such as ``P3+2P1`` is found component by component
inside the common non-neighbourhood of what has been placed so far.

Tuples are tried in lexicographic order of ``(t[0], t[1], ...)`` where
``t[i]`` is the host vertex assigned to pattern vertex ``i``.  The first hit is
therefore the lexicographically least embedding.  Pattern twins are forced to
increasing host ids; the least embedding always satisfies that, since
swapping the images of two twins is again an embedding.
"""

from __future__ import annotations

import enum
import itertools
import re
from dataclasses import dataclass, field
from functools import lru_cache

from .errors import PatternTooLarge, UnknownPattern
from .graph import Graph, bits, component_masks

MAX_PATTERN_ORDER = 9


@dataclass(frozen=True)
class _Step:
    prev: tuple[tuple[int, bool], ...]
    twin: int
    min_deg: int
    min_codeg: int


@dataclass(frozen=True)
class Pattern:
    name: str
    shape: Graph
    _plan: tuple[_Step, ...] = field(repr=False, compare=False, default=())

    @property
    def order(self) -> int:
        return self.shape.n


def _plan_for(shape: Graph, order: list[int] | None = None, twins: bool = True) -> tuple[_Step, ...]:
    k = shape.n
    order = list(range(k)) if order is None else order
    adj = shape.adj
    steps = []
    for i, pv in enumerate(order):
        prev = tuple((j, bool(adj[pv] >> order[j] & 1)) for j in range(i))
        twin = -1
        if twins:
            for j in range(i - 1, -1, -1):
                qv = order[j]
                if adj[pv] & ~(1 << qv) == adj[qv] & ~(1 << pv):
                    twin = j
                    break
        deg = adj[pv].bit_count()
        steps.append(_Step(prev, twin, deg, k - 1 - deg))
    return tuple(steps)


# --- construction -----------------------------------------------------------

def _path(k: int) -> tuple[int, list]:
    return k, [(i, i + 1) for i in range(k - 1)]


def _cycle(k: int) -> tuple[int, list]:
    if k < 3:
        raise UnknownPattern(f"C{k}: cycles need at least 3 vertices")
    return k, [(i, i + 1) for i in range(k - 1)] + [(0, k - 1)]


def _complete(k: int) -> tuple[int, list]:
    return k, list(itertools.combinations(range(k), 2))


def _biclique(a: int, b: int) -> tuple[int, list]:
    return a + b, [(i, a + j) for i in range(a) for j in range(b)]


def _n_graph(i: int, j: int, k: int) -> tuple[int, list]:
    """Triangle 0,1,2 with pendant paths of lengths i, j, k at 0, 1, 2."""
    edges = [(0, 1), (0, 2), (1, 2)]
    nxt = 3
    for corner, length in enumerate((i, j, k)):
        prev = corner
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return nxt, edges


_NAMED = {
    "claw": lambda: _biclique(1, 3),
    "triangle": lambda: _complete(3),
    "paw": lambda: _n_graph(1, 0, 0),
    "bull": lambda: _n_graph(1, 1, 0),
    "net": lambda: _n_graph(1, 1, 1),
    "diamond": lambda: (4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]),
    "bowtie": lambda: (5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]),
    "chair": lambda: (5, [(0, 1), (1, 2), (2, 3), (1, 4)]),
    "cricket": lambda: (5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4)]),
    "house": lambda: (5, [(0, 1), (1, 2), (2, 3), (3, 0), (2, 4), (3, 4)]),
}

_TERM = re.compile(
    r"^(?P<mult>\d*)(?:"
    r"(?P<kind>[PCK])_?\{?(?P<size>\d+)\}?"
    r"|K_?\{(?P<a>\d+),(?P<b>\d+)\}"
    r"|N_?\{(?P<i>\d+),(?P<j>\d+),(?P<k>\d+)\}"
    r"|(?P<word>[a-z]+)"
    r")$"
)


def _parse_term(term: str) -> tuple[int, tuple[int, list]]:
    m = _TERM.match(term)
    if not m:
        raise UnknownPattern(f"cannot parse pattern term {term!r}")
    mult = int(m["mult"]) if m["mult"] else 1
    if mult < 1:
        raise UnknownPattern(f"multiplicity must be positive in {term!r}")
    if m["kind"]:
        size = int(m["size"])
        if size < 1:
            raise UnknownPattern(f"empty graph in term {term!r}")
        base = {"P": _path, "C": _cycle, "K": _complete}[m["kind"]](size)
    elif m["a"]:
        base = _biclique(int(m["a"]), int(m["b"]))
    elif m["i"]:
        base = _n_graph(int(m["i"]), int(m["j"]), int(m["k"]))
    else:
        word = m["word"]
        if word not in _NAMED:
            raise UnknownPattern(f"unknown pattern {word!r}")
        base = _NAMED[word]()
    return mult, base


def normalize_name(name: str) -> str:
    terms = []
    for t in re.sub(r"\s+", "", name).split("+"):
        m = re.match(r"^(\d*)(.*)$", t)
        rest = m[2]
        terms.append(m[1] + (rest.lower() if rest.lower() in _NAMED else rest))
    return "+".join(terms)


@lru_cache(maxsize=None)
def named_pattern(name: str) -> Pattern:
    """Pattern for names such as ``claw``, ``P5``, ``N_{1,1,0}``, ``2P2+P1``."""
    norm = normalize_name(name)
    if not norm:
        raise UnknownPattern("empty pattern name")
    n = 0
    edges: list[tuple[int, int]] = []
    for term in norm.split("+"):
        mult, (k, es) = _parse_term(term)
        for _ in range(mult):
            edges.extend((u + n, v + n) for u, v in es)
            n += k
            if n > MAX_PATTERN_ORDER:
                raise UnknownPattern(f"pattern {name!r} exceeds {MAX_PATTERN_ORDER} vertices")
    shape = Graph.from_edges(n, edges)
    return Pattern(norm, shape, _plan_for(shape))


def as_pattern(p: Pattern | str) -> Pattern:
    return p if isinstance(p, Pattern) else named_pattern(p)


# --- detection --------------------------------------------------------------

MEMO_LIMIT = 500_000


def _search(adj, allowed: int, plan: tuple[_Step, ...], start: tuple[int, ...] = ()) -> tuple[int, ...] | None:
    k = len(plan)
    if k == 0:
        return ()
    if allowed.bit_count() < k:
        return None
    size = allowed.bit_count()
    # vertices passing the degree / co-degree filter for each pattern position
    degs = {}
    ok = []
    for step in plan:
        key = (step.min_deg, step.min_codeg)
        if key not in degs:
            m = 0
            for v in bits(allowed):
                d = (adj[v] & allowed).bit_count()
                if d >= step.min_deg and size - 1 - d >= step.min_codeg:
                    m |= 1 << v
            degs[key] = m
        ok.append(degs[key])

    # forward[j]: later positions together with their required relation to position j
    forward: list[list[tuple[int, bool]]] = [[] for _ in range(k)]
    for s, step in enumerate(plan):
        for j, is_adj in step.prev:
            forward[j].append((s, is_adj))
    t = list(start) + [0] * (k - len(start))

    def narrow(i: int, v: int, used: int, dom: list[int]) -> list[int] | None:
        # placing v at position i; fail early if some later position runs out of candidates
        a = adj[v]
        dom = dom[:]
        for s, is_adj in forward[i]:
            m = dom[s] & (a if is_adj else ~a) & ~used
            if not m:
                return None
            dom[s] = m
        return dom

    # the rest of the search from position i depends only on the remaining
    # candidate sets and on earlier vertices that later twins are ordered after
    outer_twins = [
        tuple(sorted({plan[s].twin for s in range(i, k) if 0 <= plan[s].twin < i})) for i in range(k)
    ]
    dead: set[tuple] = set()

    def rec(i: int, used: int, dom: list[int]) -> bool:
        key = (i, *dom[i:], *(t[j] for j in outer_twins[i]))
        if key in dead:
            return False
        c = dom[i] & ~used
        if plan[i].twin >= 0:
            c &= ~((2 << t[plan[i].twin]) - 1)
        last = i + 1 == k
        while c:
            low = c & -c
            v = t[i] = low.bit_length() - 1
            if last:
                return True
            nxt = narrow(i, v, used | low, dom)
            if nxt is not None and rec(i + 1, used | low, nxt):
                return True
            c ^= low
        if len(dead) < MEMO_LIMIT:
            dead.add(key)
        return False

    used = 0
    dom = ok
    for i, v in enumerate(start):
        used |= 1 << v
        dom = narrow(i, v, used, dom)
        if dom is None:
            return None
    if len(start) == k:
        return tuple(t)
    return tuple(t) if rec(len(start), used, dom) else None


def find_induced(g: Graph, p: Pattern | str, within: int | None = None) -> tuple[int, ...] | None:
    """Lexicographically least induced embedding of ``p`` in ``g``.

    The result maps pattern vertex ``i`` to host vertex ``result[i]``.
    ``within`` optionally restricts the host to a vertex mask.
    """
    p = as_pattern(p)
    allowed = g.full_mask if within is None else within & g.full_mask
    adj = g.adj
    size = allowed.bit_count()
    twice_m = sum((adj[v] & allowed).bit_count() for v in bits(allowed))
    if p.shape.n > 2 and 2 * twice_m > size * (size - 1):
        # dense host: H is induced in G iff co-H is induced in co-G, and co-G is cheaper to search
        co_adj = [allowed & ~m & ~(1 << v) if allowed >> v & 1 else 0 for v, m in enumerate(adj)]
        if _search(co_adj, allowed, _complement_plan(p.name)) is None:
            return None
    return _search(adj, allowed, p._plan)


@lru_cache(maxsize=None)
def _complement_plan(name: str) -> tuple[_Step, ...]:
    co = named_pattern(name).shape.complement()
    root = max(range(co.n), key=lambda v: (co.degree(v), -v))
    return _plan_for(co, _bfs_order(co, root))


def find_induced_containing(g: Graph, p: Pattern | str, v: int) -> tuple[int, ...] | None:
    """Some induced embedding of ``p`` that uses host vertex ``v`` (not necessarily least)."""
    p = as_pattern(p)
    shape = p.shape
    tried: list[int] = []
    for root in range(shape.n):
        # a twin of an already tried root gives the same answer
        if any(shape.adj[root] & ~(1 << r) == shape.adj[r] & ~(1 << root) for r in tried):
            continue
        tried.append(root)
        order = _bfs_order(shape, root)
        hit = _search_anchored(g, _anchored_plan(p.name, tuple(order)), v)
        if hit is not None:
            emb = [0] * shape.n
            for pos, pv in enumerate(order):
                emb[pv] = hit[pos]
            return tuple(emb)
    return None


def _bfs_order(shape: Graph, root: int) -> list[int]:
    order = [root]
    seen = 1 << root
    i = 0
    while len(order) < shape.n:
        if i == len(order):
            nxt = next(u for u in range(shape.n) if not seen >> u & 1)
            order.append(nxt)
            seen |= 1 << nxt
        for u in bits(shape.adj[order[i]] & ~seen):
            order.append(u)
            seen |= 1 << u
        i += 1
    return order


@lru_cache(maxsize=None)
def _anchored_plan(name: str, order: tuple[int, ...]) -> tuple[_Step, ...]:
    return _plan_for(named_pattern(name).shape, list(order), twins=False)


def _search_anchored(g: Graph, plan: tuple[_Step, ...], v: int) -> tuple[int, ...] | None:
    step = plan[0]
    d = g.degree(v)
    if d < step.min_deg or g.n - 1 - d < step.min_codeg:
        return None
    return _search(g.adj, g.full_mask, plan, start=(v,))


def is_free(g: Graph, p: Pattern | str) -> bool:
    return find_induced(g, p) is None


class ClassLabel(enum.Enum):
    """The seven hereditary classes with constructive Gallai-vertex finders."""

    CLAW_P3_2P1 = ("claw-p3-2p1", "claw", "P3+2P1")
    CLAW_K3_2P1 = ("claw-k3-2p1", "claw", "K3+2P1")
    CLAW_2P2_P1 = ("claw-2p2-p1", "claw", "2P2+P1")
    CLAW_P2_3P1 = ("claw-p2-3p1", "claw", "P2+3P1")
    P5_TRIANGLE = ("p5-triangle", "P5", "triangle")
    P5_PAW = ("p5-paw", "P5", "paw")
    P5_DIAMOND = ("p5-diamond", "P5", "diamond")

    def __init__(self, cli_name: str, first: str, second: str):
        self.cli_name = cli_name
        self.pattern_names = (first, second)

    @property
    def patterns(self) -> tuple[Pattern, Pattern]:
        return named_pattern(self.pattern_names[0]), named_pattern(self.pattern_names[1])

    @classmethod
    def parse(cls, text: str) -> "ClassLabel":
        key = text.strip()
        for label in cls:
            if key in (label.cli_name, label.name) or key.upper() == label.name:
                return label
        raise UnknownPattern(f"unknown class label {text!r}")


def first_violation(g: Graph, label: ClassLabel) -> tuple[Pattern, tuple[int, ...]] | None:
    """The first forbidden pattern of ``label`` found in ``g`` with its embedding."""
    for p in label.patterns:
        emb = find_induced(g, p)
        if emb is not None:
            return p, emb
    return None


def in_class(g: Graph, label: ClassLabel) -> bool:
    return first_violation(g, label) is None


# --- classification lookup --------------------------------------------------

_LISTED_FAMILY = ("bull", "K3+2P1", "N_{2,0,0}", "N_{1,0,0}+P1", "K3+P2")


def is_linear_forest(h: Graph) -> bool:
    if any(d > 2 for d in h.degrees()):
        return False
    comps = len(component_masks(h.adj, h.full_mask))
    return h.num_edges() == h.n - comps


def isomorphic_bruteforce(a: Graph, b: Graph) -> bool:
    """Isomorphism by trying every bijection; meant for graphs of order <= 6."""
    if a.n != b.n or a.num_edges() != b.num_edges():
        return False
    if sorted(a.degrees()) != sorted(b.degrees()):
        return False
    target = b.adj
    for perm in itertools.permutations(range(a.n)):
        if a.relabel(perm).adj == target:
            return True
    return False


def gallai_family_lookup(h: Pattern | Graph | str) -> bool:
    """Whether (claw, h)-free graphs form a Gallai family, for |h| <= 5."""
    shape = h if isinstance(h, Graph) else as_pattern(h).shape
    if shape.n > 5:
        raise PatternTooLarge(f"lookup covers graphs on at most 5 vertices, got {shape.n}")
    if is_linear_forest(shape):
        return True
    return any(isomorphic_bruteforce(shape, named_pattern(name).shape) for name in _LISTED_FAMILY)
