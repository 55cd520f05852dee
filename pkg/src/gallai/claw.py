"""Gallai-vertex finders for four subclasses of claw-free graphs.

Each finder looks for the small induced structure its proof is built around
(a ``P3+P1``, ``K3+P1``, ``2P2`` or ``P2+2P1``, or a triangle of cut vertices)
and reads the Gallai vertex off it.  When that structure is absent the graph
falls into a class where a degree rule is already known to work.
"""

from __future__ import annotations

from .certificates import (
    CutTriangle,
    Embedding,
    GallaiResult,
    MaxDegreeFallback,
    NearMaxDegreeFallback,
    OracleFallback,
    PathOrCycle,
)
from .errors import Disconnected, NotInClass, StructureViolation, UnsupportedSize
from .graph import Graph, cut_vertices
from .oracle import gallai_vertices
from .pattern import ClassLabel, find_induced, first_violation

ORACLE_FALLBACK_MAX_N = 24


def check_input(g: Graph, label: ClassLabel, skip_membership: bool = False) -> None:
    """Raise unless ``g`` is a connected member of ``label``."""
    if g.n == 0 or not g.is_connected():
        raise Disconnected("finders need a connected graph with at least one vertex")
    if skip_membership:
        return
    hit = first_violation(g, label)
    if hit is not None:
        p, emb = hit
        raise NotInClass(f"graph contains an induced {p.name} at {list(emb)}", p.name, emb)


def _heavier_end(g: Graph, x: int, y: int) -> int:
    dx, dy = g.degree(x), g.degree(y)
    if dx != dy:
        return x if dx > dy else y
    return min(x, y)


def cut_triangle(g: Graph) -> tuple[int, int, int] | None:
    """Lexicographically least triangle whose three vertices are all cut vertices."""
    cuts = sorted(cut_vertices(g))
    cut_mask = sum(1 << v for v in cuts)
    for x in cuts:
        for y in cuts:
            if y <= x or not g.has_edge(x, y):
                continue
            common = g.adj[x] & g.adj[y] & cut_mask & ~((2 << y) - 1)
            if common:
                return x, y, (common & -common).bit_length() - 1
    return None


def find_gallai_claw_p3_2p1(g: Graph, skip_membership: bool = False) -> GallaiResult:
    check_input(g, ClassLabel.CLAW_P3_2P1, skip_membership)
    emb = find_induced(g, "P3+P1")
    if emb is not None:
        return GallaiResult(emb[1], "P3P1-middle", Embedding("P3+P1", emb))
    # (claw, P3+P1)-free: every vertex of degree >= max degree - 1 works
    return GallaiResult(
        g.max_degree_vertex(), "NearMaxDegreeFallback", NearMaxDegreeFallback("P3+P1", g.max_degree())
    )


def find_gallai_claw_k3_2p1(g: Graph, skip_membership: bool = False) -> GallaiResult:
    check_input(g, ClassLabel.CLAW_K3_2P1, skip_membership)
    emb = find_induced(g, "K3+P1")
    if emb is not None:
        return GallaiResult(min(emb[:3]), "TriangleDominating", Embedding("K3+P1", emb))
    if find_induced(g, "triangle") is None:
        if g.max_degree() > 2:
            raise StructureViolation("claw-free triangle-free graph with a vertex of degree > 2")
        return GallaiResult(0, "PathOrCycle", PathOrCycle(g.num_edges() == g.n))
    # Triangle present, no K3+P1: no constructive rule is reproduced here.
    if g.n > ORACLE_FALLBACK_MAX_N:
        raise UnsupportedSize(
            f"oracle fallback for (claw, K3+P1)-free graphs with a triangle is capped at "
            f"n <= {ORACLE_FALLBACK_MAX_N}, got {g.n}"
        )
    gallai = sorted(gallai_vertices(g))
    if not gallai:
        raise StructureViolation("no Gallai vertex in a (claw, K3+2P1)-free graph")
    return GallaiResult(gallai[0], "OracleFallback", OracleFallback(tuple(gallai)))


def find_gallai_claw_2p2_p1(g: Graph, skip_membership: bool = False) -> GallaiResult:
    check_input(g, ClassLabel.CLAW_2P2_P1, skip_membership)
    emb = find_induced(g, "2P2")
    if emb is not None:
        return GallaiResult(_heavier_end(g, emb[0], emb[1]), "HighDegreeEdgeEnd", Embedding("2P2", emb))
    return GallaiResult(g.max_degree_vertex(), "MaxDegreeFallback", MaxDegreeFallback("2P2", g.max_degree()))


def find_gallai_claw_p2_3p1(g: Graph, skip_membership: bool = False) -> GallaiResult:
    check_input(g, ClassLabel.CLAW_P2_3P1, skip_membership)
    tri = cut_triangle(g)
    if tri is not None:
        return GallaiResult(tri[0], "CutTriangle", CutTriangle(*tri))
    emb = find_induced(g, "P2+2P1")
    if emb is not None:
        # the four vertices dominate g, otherwise a P2+3P1 would exist
        return GallaiResult(_heavier_end(g, emb[0], emb[1]), "DominatingP2P1", Embedding("P2+2P1", emb))
    return GallaiResult(
        g.max_degree_vertex(), "MaxDegreeFallback", MaxDegreeFallback("P2+2P1", g.max_degree())
    )
