"""Command-line front end.

Exit status: 0 found/success, 1 not found, 2 usage or input error,
3 search budget exhausted.
"""

from __future__ import annotations

import argparse
import logging
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional, Sequence

from .connectivity import components_minus
from .generation import BudgetExhausted, ExceptionList, SkipMode, exception_generator, wheelproof
from .graph import Graph, GraphError
from .io import ParseError, format_edge_list, read_graph, to_dot, write_graph
from .isomorphism import IsoClassSummary, iso_classes
from .search import Status, find_k_wheel
from .wheel import is_k_wheel

EXIT_OK = 0
EXIT_NOT_FOUND = 1
EXIT_ERROR = 2
EXIT_BUDGET = 3

log = logging.getLogger("wheelshp")


class UsageError(Exception):
    pass


@dataclass
class RunReport:
    command: str
    k: int
    candidates_tested: int = 0
    exceptions_found: int = 0
    skipped_not_3connected: int = 0
    elapsed: float = 0.0
    outputs: List[str] = field(default_factory=list)
    extra: List[tuple] = field(default_factory=list)

    def to_text(self) -> str:
        """``key: value`` lines. Elapsed time is left out so reports are reproducible."""
        lines = [
            f"command: {self.command}",
            f"k: {self.k}",
            f"candidates_tested: {self.candidates_tested}",
            f"exceptions_found: {self.exceptions_found}",
            f"skipped_not_3connected: {self.skipped_not_3connected}",
        ]
        lines += [f"{key}: {value}" for key, value in self.extra]
        lines += [f"output: {p}" for p in self.outputs]
        return "\n".join(lines) + "\n"


def parse_ids(text: str) -> List[int]:
    text = text.strip()
    if not text:
        return []
    try:
        ids = [int(t) for t in text.replace(" ", ",").split(",") if t]
    except ValueError:
        raise UsageError(f"bad vertex list {text!r}") from None
    if len(set(ids)) != len(ids):
        raise UsageError(f"duplicate ids in {text!r}")
    return ids


def _load(path: str) -> Graph:
    return read_graph(path)


def _write_exceptions(result: ExceptionList, outdir: Path, report: RunReport) -> None:
    outdir.mkdir(parents=True, exist_ok=True)
    for idx, (g, label) in enumerate(zip(result.graphs, result.labels)):
        path = outdir / f"exception_{idx}.txt"
        write_graph(g, path, comment=f"exception {idx} k={result.k} {label}")
        report.outputs.append(str(path))


def _format_classes(summary: IsoClassSummary) -> str:
    lines = [f"classes: {len(summary)}", f"total: {summary.total}"]
    for n, cls in enumerate(summary.classes):
        members = " ".join(str(m) for m in cls.members)
        lines.append(f"class {n}: size {len(cls.members)} members {members}")
    return "\n".join(lines) + "\n"


def _finish(report: RunReport, outdir: Optional[Path], started: float) -> None:
    report.elapsed = time.perf_counter() - started
    if outdir is not None:
        path = outdir / "report.txt"
        report.outputs.append(str(path))
        path.write_text(report.to_text())
    sys.stdout.write(report.to_text())
    log.info("elapsed: %.3fs", report.elapsed)


# ----------------------------------------------------------------------
# commands


def cmd_findwheel(args) -> int:
    g = _load(args.input)
    outcome = find_k_wheel(g, args.k, budget=args.budget)
    if outcome.status is Status.BUDGET_EXHAUSTED:
        print(f"budget exhausted after {outcome.nodes} search nodes")
        return EXIT_BUDGET
    if not outcome.found:
        print(f"no W_{args.k}-subdivision")
        return EXIT_NOT_FOUND
    text = format_edge_list(outcome.witness, comment=f"W_{args.k} witness (contracted)")
    if args.output:
        out = Path(args.output)
        out.mkdir(parents=True, exist_ok=True)
        write_graph(outcome.witness, out / "witness.txt", comment=f"W_{args.k} witness (contracted)")
        print(f"found W_{args.k}-subdivision; witness: {out / 'witness.txt'}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_iskwheel(args) -> int:
    g = _load(args.input)
    h = is_k_wheel(g, args.k)
    if h is None:
        print(f"not a W_{args.k}-subdivision")
        return EXIT_NOT_FOUND
    sys.stdout.write(format_edge_list(h, comment=f"contracted W_{args.k}"))
    return EXIT_OK


def cmd_wheelproof(args) -> int:
    if args.k < 4:
        raise UsageError(f"wheelproof needs k >= 4, got {args.k}")
    started = time.perf_counter()
    outdir = Path(args.output) if args.output else None
    result = wheelproof(args.k, jobs=args.jobs, budget=args.budget)
    report = RunReport("wheelproof", args.k, result.candidates_tested, len(result),
                       result.skipped_not_3connected)
    if outdir is not None:
        _write_exceptions(result, outdir, report)
    if args.dedup:
        summary = iso_classes(result.graphs)
        report.extra.append(("iso_classes", len(summary)))
        report.extra.append(("class_sizes", " ".join(map(str, summary.sizes())) or "-"))
        if outdir is not None:
            path = outdir / "classes.txt"
            path.write_text(_format_classes(summary))
            report.outputs.append(str(path))
    _finish(report, outdir, started)
    return EXIT_OK


def cmd_exceptions(args) -> int:
    g = _load(args.input)
    if (args.sep is None) == (args.regions is None):
        raise UsageError("give exactly one of --sep or --regions")
    if args.regions is not None:
        parts = args.regions.split(";")
        if len(parts) != 2:
            raise UsageError("--regions takes two id lists separated by ';'")
        a, b = parse_ids(parts[0]), parse_ids(parts[1])
        sep = None
    else:
        sep = parse_ids(args.sep)
        missing = [v for v in sep if v not in g]
        if missing:
            raise UsageError(f"separating set names unknown vertices {missing}")
        comps = components_minus(g, sep)
        if len(comps) != 2:
            raise UsageError(f"removing {sep} leaves {len(comps)} components, expected 2")
        a, b = comps
    started = time.perf_counter()
    outdir = Path(args.output) if args.output else None
    result = exception_generator(g, a, b, args.k, skip_mode=args.skip_mode,
                                 jobs=args.jobs, budget=args.budget)
    report = RunReport("exceptions", args.k, result.candidates_tested, len(result))
    report.extra.append(("region_a", ",".join(map(str, a))))
    report.extra.append(("region_b", ",".join(map(str, b))))
    report.extra.append(("skip_mode", result.skip_mode))
    if outdir is not None:
        _write_exceptions(result, outdir, report)
    if args.dedup:
        summary = iso_classes(result.graphs)
        report.extra.append(("iso_classes", len(summary)))
    if not result.graphs:
        what = f"{{{','.join(map(str, sep))}}}" if sep is not None else "the region split"
        report.extra.append(("note", f"every added path gives a W_{args.k}-subdivision, so the "
                                     f"case where {what} is not separating needs no further analysis"))
    _finish(report, outdir, started)
    return EXIT_OK


def cmd_isoclasses(args) -> int:
    paths: List[Path] = []
    for name in args.inputs:
        p = Path(name)
        if p.is_dir():
            paths.extend(sorted(p.glob("exception_*.txt"), key=_exception_index))
        else:
            paths.append(p)
    graphs = [read_graph(p) for p in paths]
    summary = iso_classes(graphs)
    sys.stdout.write(_format_classes(summary))
    for n, cls in enumerate(summary.classes):
        print(f"class {n} representative: {paths[cls.members[0]]}")
    return EXIT_OK


def _exception_index(p: Path):
    stem = p.stem.rsplit("_", 1)[-1]
    return (int(stem), p.name) if stem.isdigit() else (float("inf"), p.name)


def cmd_dot(args) -> int:
    sys.stdout.write(to_dot(_load(args.input)))
    return EXIT_OK


# ----------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="wheelshp", description="Wheel subdivision search and proof case generation.")
    parser.add_argument("-v", "--verbose", action="count", default=0)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, k_required=True, jobs=False, output=False):
        p.add_argument("-k", type=int, required=k_required, help="number of wheel spokes")
        p.add_argument("--budget", type=int, default=None, help="max search nodes per W_k search")
        if jobs:
            p.add_argument("--jobs", type=int, default=1, help="worker processes for candidate tests")
        if output:
            p.add_argument("-o", "--output", default=None, help="output directory")

    p = sub.add_parser("findwheel", help="search a graph for a W_k-subdivision")
    p.add_argument("input")
    common(p, output=True)
    p.set_defaults(func=cmd_findwheel)

    p = sub.add_parser("iskwheel", help="test whether a graph is a W_k-subdivision")
    p.add_argument("input")
    p.add_argument("-k", type=int, required=True)
    p.set_defaults(func=cmd_iskwheel)

    p = sub.add_parser("wheelproof", help="exception graphs for a new hub neighbour of W_{k-1}")
    common(p, jobs=True, output=True)
    p.add_argument("--dedup", action="store_true", help="also partition into isomorphism classes")
    p.set_defaults(func=cmd_wheelproof)

    p = sub.add_parser("exceptions", help="exception graphs for a new path between two regions")
    p.add_argument("input")
    common(p, jobs=True, output=True)
    p.add_argument("--sep", default=None, help="separating set, e.g. 0,1,3")
    p.add_argument("--regions", default=None, help="explicit regions, e.g. '0,1,2;3,4,5'")
    p.add_argument("--skip-mode", choices=[m.value for m in SkipMode], default=SkipMode.DEDUP.value)
    p.add_argument("--dedup", action="store_true")
    p.set_defaults(func=cmd_exceptions)

    p = sub.add_parser("isoclasses", help="partition graph files into isomorphism classes")
    p.add_argument("inputs", nargs="+", help="graph files or directories of exception_*.txt")
    p.set_defaults(func=cmd_isoclasses)

    p = sub.add_parser("dot", help="print a graph file as DOT")
    p.add_argument("input")
    p.set_defaults(func=cmd_dot)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.WARNING - 10 * min(args.verbose, 2),
                        format="%(levelname)s %(message)s", stream=sys.stderr)
    if getattr(args, "budget", None) is not None and args.budget < 1:
        parser.error("--budget must be positive")
    if getattr(args, "jobs", 1) < 1:
        parser.error("--jobs must be positive")
    try:
        if getattr(args, "k", None) is not None and args.k < 3:
            raise UsageError(f"k must be at least 3, got {args.k}")
        return args.func(args)
    except (ParseError, UsageError, GraphError, OSError) as exc:
        print(f"wheelshp: error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except BudgetExhausted as exc:
        print(f"wheelshp: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
