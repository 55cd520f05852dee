"""Finder results and the structural witnesses they carry.

Each witness can be re-checked against the host graph with
:func:`validate_certificate`, independently of the code that produced it.
"""

from __future__ import annotations

from dataclasses import dataclass, fields
from typing import ClassVar

from .graph import (
    Graph,
    bits,
    component_masks,
    cut_vertices,
    is_clique,
    is_complete_multipartite,
    is_dominating,
    is_stable,
    mask_of,
    two_coloring,
)
from .oracle import gallai_vertices
from .pattern import find_induced, is_free, named_pattern


@dataclass(frozen=True)
class Certificate:
    kind: ClassVar[str] = ""

    def to_json(self) -> dict:
        out = {"type": self.kind}
        for f in fields(self):
            out[f.name] = _jsonable(getattr(self, f.name))
        return out


def _jsonable(value):
    if isinstance(value, (tuple, list)):
        return [_jsonable(v) for v in value]
    return value


@dataclass(frozen=True)
class Embedding(Certificate):
    kind: ClassVar[str] = "Embedding"
    pattern: str
    mapping: tuple[int, ...]


@dataclass(frozen=True)
class DominatingSet(Certificate):
    kind: ClassVar[str] = "DominatingSet"
    vertices: tuple[int, ...]


@dataclass(frozen=True)
class CutTriangle(Certificate):
    kind: ClassVar[str] = "CutTriangle"
    x: int
    y: int
    z: int


@dataclass(frozen=True)
class MaxDegreeFallback(Certificate):
    kind: ClassVar[str] = "MaxDegreeFallback"
    absent_pattern: str
    max_degree: int


@dataclass(frozen=True)
class NearMaxDegreeFallback(Certificate):
    kind: ClassVar[str] = "NearMaxDegreeFallback"
    absent_pattern: str
    max_degree: int


@dataclass(frozen=True)
class OracleFallback(Certificate):
    kind: ClassVar[str] = "OracleFallback"
    gallai_set: tuple[int, ...]


@dataclass(frozen=True)
class PathOrCycle(Certificate):
    kind: ClassVar[str] = "PathOrCycle"
    is_cycle: bool


@dataclass(frozen=True)
class FiveRing(Certificate):
    kind: ClassVar[str] = "FiveRing"
    parts: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class DominatingClique(Certificate):
    kind: ClassVar[str] = "DominatingClique"
    vertices: tuple[int, ...]


@dataclass(frozen=True)
class CompleteMultipartite(Certificate):
    kind: ClassVar[str] = "CompleteMultipartite"
    parts: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class G1(Certificate):
    """Dominating clique ``clique``; each ``(component, vertex)`` is a clique hung on one clique vertex."""

    kind: ClassVar[str] = "G1"
    clique: tuple[int, ...]
    attachments: tuple[tuple[tuple[int, ...], int], ...]


@dataclass(frozen=True)
class G2(Certificate):
    kind: ClassVar[str] = "G2"
    x_side: tuple[int, ...]
    y_side: tuple[int, ...]
    matching: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class G3(Certificate):
    """Dominating edge ``x y`` of the bipartite 2P2-free part ``h_vertices``.

    ``components`` lists the stripped cliques with the end(s) they are
    complete to: ``"x"``, ``"y"`` or ``"xy"``.
    """

    kind: ClassVar[str] = "G3"
    h_vertices: tuple[int, ...]
    x: int
    y: int
    components: tuple[tuple[tuple[int, ...], str], ...]


@dataclass(frozen=True)
class Apex(Certificate):
    kind: ClassVar[str] = "Apex"
    x: int
    c_vertices: tuple[int, ...]


@dataclass(frozen=True)
class GallaiResult:
    vertex: int
    branch: str
    witness: Certificate

    def to_json(self) -> dict:
        return {"vertex": self.vertex, "branch": self.branch, "certificate": self.witness.to_json()}


# --- validation -------------------------------------------------------------

def _closed_nbhd(g: Graph, vertices) -> int:
    m = 0
    for v in vertices:
        m |= g.adj[v] | (1 << v)
    return m


def apex_components(g: Graph, x: int) -> int:
    """Union of the components of ``g - x`` lying entirely inside ``N(x)``."""
    rest = g.full_mask & ~(1 << x)
    out = 0
    for comp in component_masks(g.adj, rest):
        if comp & ~g.adj[x] == 0:
            out |= comp
    return out


def is_apex(g: Graph, x: int) -> bool:
    if apex_components(g, x) == 0:
        return False
    return _closed_nbhd(g, [x, *bits(g.adj[x])]) == g.full_mask


def _valid_embedding(g: Graph, c: Embedding) -> bool:
    shape = named_pattern(c.pattern).shape
    t = c.mapping
    if len(t) != shape.n or len(set(t)) != len(t) or any(not 0 <= v < g.n for v in t):
        return False
    return all(
        g.has_edge(t[i], t[j]) == shape.has_edge(i, j) for i in range(len(t)) for j in range(i + 1, len(t))
    )


def _valid_five_ring(g: Graph, c: FiveRing) -> bool:
    if len(c.parts) != 5 or any(not p for p in c.parts):
        return False
    masks = [mask_of(p) for p in c.parts]
    union = 0
    for m in masks:
        if union & m:
            return False
        union |= m
    if union != g.full_mask:
        return False
    for i, m in enumerate(masks):
        if not is_stable(g, bits(m)):
            return False
        near = masks[(i - 1) % 5] | masks[(i + 1) % 5]
        for v in bits(m):
            if g.adj[v] != near:
                return False
    return True


def _valid_g1(g: Graph, c: G1) -> bool:
    k = mask_of(c.clique)
    if not c.clique or not is_clique(g, c.clique) or not is_dominating(g, c.clique):
        return False
    comps = {mask_of(comp): x for comp, x in c.attachments}
    if sorted(comps) != sorted(component_masks(g.adj, g.full_mask & ~k)):
        return False
    for comp, x in comps.items():
        if not k >> x & 1 or not is_clique(g, bits(comp)):
            return False
        for v in bits(comp):
            if g.adj[v] & k != 1 << x:
                return False
    return True


def _valid_g2(g: Graph, c: G2) -> bool:
    xm, ym = mask_of(c.x_side), mask_of(c.y_side)
    if xm & ym or xm | ym != g.full_mask or not c.matching:
        return False
    if not is_clique(g, c.x_side) or not is_clique(g, c.y_side):
        return False
    cross = {(u, v) for u in c.x_side for v in bits(g.adj[u] & ym)}
    if cross != set(map(tuple, c.matching)):
        return False
    ends = [u for u, _ in cross] + [v for _, v in cross]
    return len(ends) == len(set(ends))


def _valid_g3(g: Graph, c: G3) -> bool:
    x, y = c.x, c.y
    h = mask_of(c.h_vertices)
    if not (h >> x & 1 and h >> y & 1 and g.has_edge(x, y)):
        return False
    if not is_dominating(g, [x, y]):
        return False
    if two_coloring(g.adj, h) is None:
        return False
    if find_induced(g, "2P2", within=h) is not None:
        return False
    rest = g.full_mask & ~h
    comps = [mask_of(comp) for comp, _ in c.components]
    if sorted(comps) != sorted(component_masks(g.adj, rest)):
        return False
    inner = h & ~(1 << x) & ~(1 << y)
    both = 0
    for (comp, side), m in zip(c.components, comps):
        if not is_clique(g, comp):
            return False
        for v in comp:
            if g.adj[v] & inner:
                return False
        to_x = all(g.has_edge(v, x) for v in comp)
        to_y = all(g.has_edge(v, y) for v in comp)
        no_x = not any(g.has_edge(v, x) for v in comp)
        no_y = not any(g.has_edge(v, y) for v in comp)
        if side == "x" and not (to_x and no_y):
            return False
        if side == "y" and not (to_y and no_x):
            return False
        if side == "xy":
            if not (to_x and to_y):
                return False
            both += 1
        if side not in ("x", "y", "xy"):
            return False
    return both <= 1


def validate_certificate(g: Graph, c: Certificate) -> bool:
    """Re-check the structural claim a witness makes about ``g``."""
    if isinstance(c, Embedding):
        return _valid_embedding(g, c)
    if isinstance(c, DominatingSet):
        return is_dominating(g, c.vertices)
    if isinstance(c, CutTriangle):
        tri = (c.x, c.y, c.z)
        return len(set(tri)) == 3 and is_clique(g, tri) and set(tri) <= cut_vertices(g)
    if isinstance(c, (MaxDegreeFallback, NearMaxDegreeFallback)):
        return c.max_degree == g.max_degree() and is_free(g, c.absent_pattern)
    if isinstance(c, OracleFallback):
        return set(c.gallai_set) == gallai_vertices(g)
    if isinstance(c, PathOrCycle):
        return g.is_connected() and g.max_degree() <= 2 and (g.num_edges() == g.n) == c.is_cycle
    if isinstance(c, FiveRing):
        return _valid_five_ring(g, c)
    if isinstance(c, DominatingClique):
        return bool(c.vertices) and is_clique(g, c.vertices) and is_dominating(g, c.vertices)
    if isinstance(c, CompleteMultipartite):
        parts = is_complete_multipartite(g)
        return parts is not None and sorted(map(sorted, parts)) == sorted(map(sorted, c.parts))
    if isinstance(c, G1):
        return _valid_g1(g, c)
    if isinstance(c, G2):
        return _valid_g2(g, c)
    if isinstance(c, G3):
        return _valid_g3(g, c)
    if isinstance(c, Apex):
        return is_apex(g, c.x) and mask_of(c.c_vertices) == apex_components(g, c.x)
    raise TypeError(f"unknown certificate type {type(c).__name__}")

