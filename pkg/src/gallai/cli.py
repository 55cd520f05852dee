"""Command-line interface: ``gallai {classify,find,verify,gen,sweep,oracle}``.

Graph inputs are files (``-`` for stdin) holding graph6 records, one per
line, or a single edge list with ``--format edgelist``.  Reports are JSON
lines on stdout.

Exit codes:
    0 success
    2 unreadable or malformed input
    3 graph not in the requested class
    4 graph disconnected
    5 structural contradiction, or input too large for a bounded branch
    6 verification or sweep failure
    7 oracle path budget exhausted
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .errors import (
    Disconnected,
    GallaiError,
    MalformedRecord,
    NotInClass,
    OracleTruncated,
    StructureViolation,
    UnknownPattern,
    UnsupportedSize,
)
from .finders import FINDERS
from .formats import iter_graph6_lines, parse_edge_list, to_graph6
from .generators import enumerate_connected, petersen, random_class_graph, walther_b, walther_b_plus
from .oracle import DEFAULT_PATH_BUDGET, longest_path_report
from .pattern import ClassLabel, find_induced, in_class
from .sweep import run_sweep

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_NOT_IN_CLASS = 3
EXIT_DISCONNECTED = 4
EXIT_STRUCTURE = 5
EXIT_FAILED = 6
EXIT_TRUNCATED = 7

SCAN_PATTERNS = ("claw", "P5", "triangle", "paw", "diamond")

_EXIT_FOR = (
    (NotInClass, EXIT_NOT_IN_CLASS),
    (Disconnected, EXIT_DISCONNECTED),
    (StructureViolation, EXIT_STRUCTURE),
    (UnsupportedSize, EXIT_STRUCTURE),
    (OracleTruncated, EXIT_TRUNCATED),
    (MalformedRecord, EXIT_PARSE),
)


class _Failure(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _exit_code(exc: GallaiError) -> int:
    for cls, code in _EXIT_FOR:
        if isinstance(exc, cls):
            return code
    return EXIT_FAILED


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="ascii") as fh:
            return fh.read()
    except (OSError, UnicodeDecodeError) as exc:
        raise _Failure(EXIT_PARSE, f"cannot read {path}: {exc}") from exc


def _load(args) -> list:
    text = _read_text(args.file)
    try:
        if args.format == "edgelist":
            g = parse_edge_list(text)
            return [(to_graph6(g), g)]
        return list(iter_graph6_lines(text))
    except (MalformedRecord, UnsupportedSize) as exc:
        raise _Failure(EXIT_PARSE, f"parse error: {exc}") from exc


def _ms(start: float) -> float:
    return round((time.perf_counter() - start) * 1000, 3)


def _report(record: str, label: ClassLabel, res, oracle, verified, ms: dict) -> dict:
    return {
        "input": record,
        "class": label.cli_name,
        "vertex": res.vertex,
        "branch": res.branch,
        "certificate": res.witness.to_json(),
        "oracle": oracle,
        "verified": verified,
        "ms": ms,
    }


class _Out:
    def __init__(self, path: str | None):
        self.fh = open(path, "w", encoding="ascii") if path else sys.stdout

    def line(self, obj) -> None:
        text = obj if isinstance(obj, str) else json.dumps(obj)
        self.fh.write(text + "\n")

    def close(self) -> None:
        if self.fh is not sys.stdout:
            self.fh.close()


def _per_graph(args, out: _Out, work) -> int:
    code = EXIT_OK
    for record, g in _load(args):
        try:
            out.line(work(record, g))
        except GallaiError as exc:
            print(f"{record}: {type(exc).__name__}: {exc}", file=sys.stderr)
            code = code or _exit_code(exc)
        except _Failure as exc:
            print(f"{record}: {exc}", file=sys.stderr)
            code = code or exc.code
    return code


def cmd_classify(args, out: _Out) -> int:
    def work(record, g):
        hits = {}
        for name in SCAN_PATTERNS:
            emb = find_induced(g, name)
            hits[name] = list(emb) if emb is not None else None
        classes = [label.cli_name for label in ClassLabel if in_class(g, label)]
        return {"input": record, "n": g.n, "connected": g.is_connected(), "classes": classes, "patterns": hits}

    return _per_graph(args, out, work)


def cmd_find(args, out: _Out) -> int:
    label = ClassLabel.parse(args.label)

    def work(record, g):
        t0 = time.perf_counter()
        res = FINDERS[label](g, skip_membership=args.skip_membership)
        return _report(record, label, res, None, None, {"find": _ms(t0)})

    return _per_graph(args, out, work)


def cmd_verify(args, out: _Out) -> int:
    label = ClassLabel.parse(args.label)

    def work(record, g):
        t0 = time.perf_counter()
        res = FINDERS[label](g, skip_membership=args.skip_membership)
        t1 = time.perf_counter()
        rep = longest_path_report(g, args.budget, retain=0, jobs=args.jobs)
        if rep.truncated:
            raise OracleTruncated(f"more than {args.budget} longest paths")
        ms = {"find": round((t1 - t0) * 1000, 3), "oracle": _ms(t1)}
        gallai = sorted(rep.gallai_set)
        verified = res.vertex in rep.gallai_set
        report = _report(record, label, res, gallai, verified, ms)
        if not verified:
            out.line(report)
            raise _Failure(EXIT_FAILED, f"vertex {res.vertex} is not on every longest path")
        return report

    return _per_graph(args, out, work)


def cmd_oracle(args, out: _Out) -> int:
    def work(record, g):
        t0 = time.perf_counter()
        rep = longest_path_report(g, args.budget, retain=args.retain, jobs=args.jobs)
        body = {
            "input": record,
            "length": rep.length_k,
            "num_paths": rep.num_paths,
            "gallai_set": sorted(rep.gallai_set),
            "truncated": rep.truncated,
            "paths": [list(p) for p in rep.paths],
            "ms": {"oracle": _ms(t0)},
        }
        if rep.truncated:
            out.line(body)
            raise OracleTruncated(f"more than {args.budget} longest paths")
        return body

    return _per_graph(args, out, work)


def cmd_gen(args, out: _Out) -> int:
    family = args.family.replace("_", "-")
    if family == "petersen":
        graphs = [petersen()]
    elif family == "walther-b":
        graphs = [walther_b()]
    elif family == "walther-b-plus":
        graphs = [walther_b_plus()]
    elif family == "random":
        if args.label is None or args.n is None:
            raise _Failure(EXIT_PARSE, "gen random needs --class and --n")
        g = random_class_graph(ClassLabel.parse(args.label), args.n, args.seed)
        if g is None:
            raise _Failure(EXIT_FAILED, "no graph found within the attempt limit")
        graphs = [g]
    else:
        if args.n is None:
            raise _Failure(EXIT_PARSE, "gen enumerate needs --n")
        graphs = enumerate_connected(args.n)
    for g in graphs:
        out.line(to_graph6(g))
    return EXIT_OK


def cmd_sweep(args, out: _Out) -> int:
    summary = run_sweep(ClassLabel.parse(args.label), args.nmax, jobs=args.jobs)
    out.line(summary)
    return EXIT_FAILED if summary["failures"] else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gallai", description="Gallai vertices in restricted graph classes.")
    sub = parser.add_subparsers(dest="command", required=True)
    labels = ", ".join(label.cli_name for label in ClassLabel)

    def graph_input(p):
        p.add_argument("file", help="input file, '-' for stdin")
        p.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")
        p.add_argument("--out", help="write output here instead of stdout")

    p = sub.add_parser("classify", help="list class memberships and pattern hits")
    graph_input(p)

    for name, helptext in (("find", "run a finder"), ("verify", "run a finder and check it with the oracle")):
        p = sub.add_parser(name, help=helptext)
        graph_input(p)
        p.add_argument("--class", dest="label", required=True, help=labels)
        p.add_argument("--skip-membership", action="store_true", help="trust that the input is in the class")
        if name == "verify":
            p.add_argument("--budget", type=int, default=DEFAULT_PATH_BUDGET, help="longest-path budget")
            p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("oracle", help="exact longest paths and their common vertices")
    graph_input(p)
    p.add_argument("--budget", type=int, default=DEFAULT_PATH_BUDGET)
    p.add_argument("--retain", type=int, default=20, help="number of paths to print")
    p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("gen", help="emit graphs as graph6 lines")
    p.add_argument("family", choices=("petersen", "walther-b", "walther-b-plus", "random", "enumerate"))
    p.add_argument("--n", type=int)
    p.add_argument("--class", dest="label", help=labels)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")

    p = sub.add_parser("sweep", help="exhaustive finder-versus-oracle check")
    p.add_argument("--class", dest="label", required=True, help=labels)
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out")
    return parser


COMMANDS = {
    "classify": cmd_classify,
    "find": cmd_find,
    "verify": cmd_verify,
    "oracle": cmd_oracle,
    "gen": cmd_gen,
    "sweep": cmd_sweep,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        out = _Out(getattr(args, "out", None))
    except OSError as exc:
        print(f"cannot open output: {exc}", file=sys.stderr)
        return EXIT_PARSE
    try:
        return COMMANDS[args.command](args, out)
    except _Failure as exc:
        print(str(exc), file=sys.stderr)
        return exc.code
    except UnknownPattern as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_PARSE
    except (GallaiError, ValueError) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return _exit_code(exc) if isinstance(exc, GallaiError) else EXIT_PARSE
    finally:
        out.close()
