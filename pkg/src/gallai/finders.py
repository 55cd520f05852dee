"""Dispatch from class labels to their Gallai-vertex finders."""

from __future__ import annotations

from typing import Callable

from .certificates import GallaiResult
from .claw import (
    find_gallai_claw_2p2_p1,
    find_gallai_claw_k3_2p1,
    find_gallai_claw_p2_3p1,
    find_gallai_claw_p3_2p1,
)
from .graph import Graph
from .p5 import find_gallai_p5_diamond, find_gallai_p5_paw, find_gallai_p5_triangle
from .pattern import ClassLabel

FINDERS: dict[ClassLabel, Callable[..., GallaiResult]] = {
    ClassLabel.CLAW_P3_2P1: find_gallai_claw_p3_2p1,
    ClassLabel.CLAW_K3_2P1: find_gallai_claw_k3_2p1,
    ClassLabel.CLAW_2P2_P1: find_gallai_claw_2p2_p1,
    ClassLabel.CLAW_P2_3P1: find_gallai_claw_p2_3p1,
    ClassLabel.P5_TRIANGLE: find_gallai_p5_triangle,
    ClassLabel.P5_PAW: find_gallai_p5_paw,
    ClassLabel.P5_DIAMOND: find_gallai_p5_diamond,
}


def find_gallai(g: Graph, label: ClassLabel | str, skip_membership: bool = False) -> GallaiResult:
    if isinstance(label, str):
        label = ClassLabel.parse(label)
    return FINDERS[label](g, skip_membership=skip_membership)
