"""Gallai-vertex finders for (P5, triangle)-, (P5, paw)- and (P5, diamond)-free graphs.

The finders rest on structural recognisers: 5-rings, dominating cliques of
size at most two, complete multipartite graphs and the three families
``G1``/``G2``/``G3`` that make up the connected (P5, C5, diamond)-free graphs.
"""

from __future__ import annotations

from itertools import product

from .certificates import (
    G1,
    G2,
    G3,
    Apex,
    CompleteMultipartite,
    DominatingClique,
    FiveRing,
    GallaiResult,
    MaxDegreeFallback,
    apex_components,
    is_apex,
)
from .claw import check_input
from .errors import Disconnected, PreconditionC5, StructureViolation
from .graph import Graph, bits, component_masks, is_complete_multipartite, lowest, two_coloring
from .pattern import ClassLabel, find_induced

G2_MAX_COMPONENTS = 20


def is_5ring(g: Graph) -> tuple[tuple[int, ...], ...] | None:
    """Parts ``S1..S5`` of a 5-ring partition, or None.

    Vertices of one part share their open neighbourhood, so the parts are
    exactly the classes of equal neighbourhoods.  ``S1`` holds vertex 0 and
    ``S2`` is the neighbouring part with the smaller least vertex.
    """
    if g.n < 5:
        return None
    groups: dict[int, int] = {}
    for v in range(g.n):
        groups[g.adj[v]] = groups.get(g.adj[v], 0) | 1 << v
    if len(groups) != 5:
        return None
    part_of = {}
    for m in groups.values():
        for v in bits(m):
            part_of[v] = m
    nbrs = {}
    for nb, m in groups.items():
        touching = {part_of[u] for u in bits(nb)}
        if len(touching) != 2 or sum(touching) != nb:
            return None
        nbrs[m] = sorted(touching, key=lowest)
    start = part_of[0]
    order = [start, nbrs[start][0]]
    while len(order) < 5:
        a, b = nbrs[order[-1]]
        nxt = b if a == order[-2] else a
        if nxt in order:
            return None
        order.append(nxt)
    if start not in nbrs[order[-1]]:
        return None
    return tuple(tuple(bits(m)) for m in order)


def dominating_clique_le2(g: Graph) -> tuple[int, ...] | None:
    """A dominating vertex (lowest id), else the lexicographically least dominating edge."""
    full = g.full_mask
    for v in range(g.n):
        if g.adj[v] | 1 << v == full:
            return (v,)
    for u in range(g.n):
        cu = g.adj[u] | 1 << u
        for v in bits(g.adj[u] >> (u + 1) << (u + 1)):
            if cu | g.adj[v] | 1 << v == full:
                return (u, v)
    return None


def _heavier(x: int, y: int, dx: int, dy: int) -> int:
    if dx != dy:
        return x if dx > dy else y
    return min(x, y)


def find_gallai_p5_triangle(g: Graph, skip_membership: bool = False) -> GallaiResult:
    check_input(g, ClassLabel.P5_TRIANGLE, skip_membership)
    if find_induced(g, "C5") is not None:
        parts = is_5ring(g)
        if parts is None:
            raise StructureViolation("(P5, triangle)-free graph with a C5 that is not a 5-ring")
        return GallaiResult(g.max_degree_vertex(), "FiveRingMaxDegree", FiveRing(parts))
    dom = dominating_clique_le2(g)
    if dom is None:
        raise StructureViolation("(P5, C5, triangle)-free graph without a dominating vertex or edge")
    if len(dom) == 1:
        return GallaiResult(dom[0], "DominatingVertex", DominatingClique(dom))
    x, y = dom
    return GallaiResult(_heavier(x, y, g.degree(x), g.degree(y)), "DominatingEdgeEnd", DominatingClique(dom))


def find_gallai_p5_paw(g: Graph, skip_membership: bool = False) -> GallaiResult:
    check_input(g, ClassLabel.P5_PAW, skip_membership)
    if find_induced(g, "triangle") is None:
        return find_gallai_p5_triangle(g, skip_membership=True)
    parts = is_complete_multipartite(g)
    if parts is None:
        raise StructureViolation("paw-free graph with a triangle that is not complete multipartite")
    cert = CompleteMultipartite(tuple(sorted(tuple(sorted(p)) for p in parts)))
    return GallaiResult(g.max_degree_vertex(), "MultipartiteMaxDegree", cert)


# --- (P5, C5, diamond)-free structure ----------------------------------------

def maximal_cliques(g: Graph) -> list[tuple[int, ...]]:
    """All maximal cliques as sorted tuples, in lexicographic order."""
    adj = g.adj
    out: list[tuple[int, ...]] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(tuple(bits(r)))
            return
        pivot = max(bits(p | x), key=lambda u: (adj[u] & p).bit_count())
        for v in bits(p & ~adj[pivot]):
            expand(r | 1 << v, p & adj[v], x & adj[v])
            p &= ~(1 << v)
            x |= 1 << v

    if g.n:
        expand(0, g.full_mask, 0)
    return sorted(out)


def _try_g1(g: Graph) -> G1 | None:
    full = g.full_mask
    for clique in maximal_cliques(g):
        k = sum(1 << v for v in clique)
        dom = k
        for v in clique:
            dom |= g.adj[v]
        if dom != full:
            continue
        attachments = []
        for comp in component_masks(g.adj, full & ~k):
            first = lowest(comp)
            hook = g.adj[first] & k
            if hook.bit_count() != 1:
                break
            if any(g.adj[v] & k != hook or (g.adj[v] | 1 << v) & comp != comp for v in bits(comp)):
                break
            attachments.append((tuple(bits(comp)), lowest(hook)))
        else:
            return G1(clique, tuple(sorted(attachments)))
    return None


def _try_g2(g: Graph) -> G2 | None:
    co = g.complement()
    sides = []
    for comp in component_masks(co.adj, co.full_mask):
        col = two_coloring(co.adj, comp)
        if col is None:
            return None
        sides.append(col)
    if len(sides) > G2_MAX_COMPONENTS:
        return None
    for flips in product((0, 1), repeat=len(sides)):
        xm = ym = 0
        for (a, b), f in zip(sides, flips):
            if f:
                a, b = b, a
            xm |= a
            ym |= b
        matching = []
        ok = bool(xm and ym)
        for u in bits(xm):
            cross = g.adj[u] & ym
            if cross & (cross - 1):
                ok = False
                break
            if cross:
                matching.append((u, lowest(cross)))
        if not ok or not matching:
            continue
        ends = [v for _, v in matching]
        if len(set(ends)) != len(ends):
            continue
        return G2(tuple(bits(xm)), tuple(bits(ym)), tuple(matching))
    return None


def _try_g3(g: Graph) -> G3 | None:
    full = g.full_mask
    for x in range(g.n):
        for y in bits(g.adj[x] >> (x + 1) << (x + 1)):
            if g.adj[x] | g.adj[y] | 1 << x | 1 << y != full:
                continue
            cert = _g3_for_edge(g, x, y)
            if cert is not None:
                return cert
    return None


def _g3_for_edge(g: Graph, x: int, y: int) -> G3 | None:
    h = g.full_mask
    comps = []
    both = 0
    for comp in component_masks(g.adj, h & ~(1 << x) & ~(1 << y)):
        if any((g.adj[v] | 1 << v) & comp != comp for v in bits(comp)):
            continue
        ax, ay = g.adj[x] & comp, g.adj[y] & comp
        if ax == comp and ay == comp:
            side = "xy"
            both += 1
        elif ax == comp and not ay:
            side = "x"
        elif ay == comp and not ax:
            side = "y"
        else:
            continue
        comps.append((tuple(bits(comp)), side))
        h &= ~comp
    if both > 1:
        return None
    if two_coloring(g.adj, h) is None or find_induced(g, "2P2", within=h) is not None:
        return None
    return G3(tuple(bits(h)), x, y, tuple(sorted(comps)))


def classify_g123(g: Graph, check: bool = True) -> G1 | G2 | G3:
    """Place a connected (P5, C5, diamond)-free graph in ``G1``, ``G2`` or ``G3`` (tried in that order)."""
    if g.n == 0 or not g.is_connected():
        raise Disconnected("classification needs a connected graph")
    if check:
        for name in ("P5", "C5", "diamond"):
            emb = find_induced(g, name)
            if emb is not None:
                raise PreconditionC5(f"graph contains an induced {name} at {list(emb)}", name, emb)
    for attempt in (_try_g1, _try_g2, _try_g3):
        cert = attempt(g)
        if cert is not None:
            return cert
    raise StructureViolation("(P5, C5, diamond)-free graph outside G1, G2 and G3")


def find_g11_apex(g: Graph) -> int | None:
    """Lowest vertex whose private components are non-empty and which reaches everything in two steps."""
    for x in range(g.n):
        if is_apex(g, x):
            return x
    return None


def find_gallai_p5_diamond(g: Graph, skip_membership: bool = False) -> GallaiResult:
    check_input(g, ClassLabel.P5_DIAMOND, skip_membership)
    if find_induced(g, "C5") is not None:
        if find_induced(g, "2P2") is None:
            return GallaiResult(
                g.max_degree_vertex(), "ExpansionMaxDegree", MaxDegreeFallback("2P2", g.max_degree())
            )
        x = find_g11_apex(g)
        if x is None:
            raise StructureViolation("(P5, diamond)-free graph with C5 and 2P2 but no apex vertex")
        return GallaiResult(x, "G11Apex", Apex(x, tuple(bits(apex_components(g, x)))))

    cert = classify_g123(g, check=False)
    if isinstance(cert, G1):
        if not cert.attachments:
            return GallaiResult(cert.clique[0], "G1StarLike", cert)
        comp, hook = max(cert.attachments, key=lambda a: (len(a[0]), -a[0][0]))
        return GallaiResult(hook, "G1StarLike", cert)
    if isinstance(cert, G2):
        return GallaiResult(0, "G2Traceable", cert)
    if not cert.components:
        return GallaiResult(g.max_degree_vertex(), "G3MaxDegree", cert)
    h = sum(1 << v for v in cert.h_vertices)
    dx, dy = (g.adj[cert.x] & h).bit_count(), (g.adj[cert.y] & h).bit_count()
    return GallaiResult(_heavier(cert.x, cert.y, dx, dy), "G3EdgeEnd", cert)

