"""Exhaustive finder-versus-oracle sweeps over small connected graphs."""

from __future__ import annotations

import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor

from .errors import GallaiError
from .finders import FINDERS
from .formats import parse_graph6, to_graph6
from .generators import enumerate_connected
from .oracle import gallai_vertices
from .pattern import ClassLabel, in_class

MAX_SWEEP_N = 9


def check_graph(label: ClassLabel, g) -> tuple[bool, str | None, str | None]:
    """``(in_class, branch, failure)`` for one graph; ``failure`` is None when sound."""
    if not in_class(g, label):
        return False, None, None
    try:
        res = FINDERS[label](g, skip_membership=True)
    except GallaiError as exc:
        return True, None, f"{type(exc).__name__}: {exc}"
    if res.vertex not in gallai_vertices(g):
        return True, res.branch, f"vertex {res.vertex} ({res.branch}) is not a Gallai vertex"
    return True, res.branch, None


def _check_chunk(args):
    label_name, lines = args
    label = ClassLabel[label_name]
    out = []
    for line in lines:
        member, branch, failure = check_graph(label, parse_graph6(line))
        out.append((line, member, branch, failure))
    return out


def run_sweep(label: ClassLabel | str, nmax: int, jobs: int = 1) -> dict:
    """Run the finder and the oracle on every connected class member with ``n <= nmax``."""
    if isinstance(label, str):
        label = ClassLabel.parse(label)
    if not 1 <= nmax <= MAX_SWEEP_N:
        raise ValueError(f"sweep supports 1 <= nmax <= {MAX_SWEEP_N}")
    start = time.perf_counter()
    lines = [to_graph6(g) for n in range(1, nmax + 1) for g in enumerate_connected(n)]
    if jobs <= 1:
        rows = _check_chunk((label.name, lines))
    else:
        size = max(1, len(lines) // (8 * jobs))
        chunks = [(label.name, lines[i:i + size]) for i in range(0, len(lines), size)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = [r for part in pool.map(_check_chunk, chunks) for r in part]
    branches: Counter[str] = Counter()
    members = 0
    failures = []
    for line, member, branch, failure in rows:
        members += member
        if branch is not None:
            branches[branch] += 1
        if failure is not None:
            failures.append({"graph6": line, "error": failure})
    return {
        "class": label.cli_name,
        "nmax": nmax,
        "graphs": len(lines),
        "in_class": members,
        "branches": dict(sorted(branches.items())),
        "failures": sorted(failures, key=lambda f: f["graph6"]),
        "ms": round((time.perf_counter() - start) * 1000, 1),
    }
