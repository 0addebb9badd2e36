"""Command line: property scans over graph6 input or enumeration, plus
constructors for cycle permutation graphs and the named families."""

from __future__ import annotations

import argparse
import csv
import json
import logging
import os
import sys
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import gcd
from pathlib import Path
from typing import Callable, Iterable, Iterator

from .ando import find_ando, find_k_bisection_iso_linear_forests
from .arboricity import (
    find_two_colouring_max4_edge_components,
    find_two_isomorphic_k_linear_forests,
    find_two_k_linear_forests,
)
from .bisection import find_k_bisection, format_bisection, verify_k_bisection
from .budget import BudgetExceeded, Deadline
from .cyperm import CpgSpec, PetersenException, build_cpg, build_gp, gp_spec, two_bisection_cpg
from .families import FAMILY_NAMES, build_family
from .graphcore import (
    Graph6Error,
    SimpleGraph,
    canonical_code,
    enumerate_cubic,
    parse_graph6,
    read_graph6_lines,
    vertex_connectivity,
    write_graph6,
)
from .wormald import find_pair_removed_strong_wormald, find_strong_wormald, find_wormald

log = logging.getLogger("bisectlab")

OK, FAIL, INCONCLUSIVE, SKIPPED = "ok", "fail", "inconclusive", "skipped"


@dataclass(frozen=True)
class Property:
    name: str
    solve: Callable[[SimpleGraph, "ScanParams", Deadline], object]
    applies: Callable[[int], bool] = lambda n: True
    uses_k: bool = False


@dataclass(frozen=True)
class ScanParams:
    k: int = 2
    method: str = "bisection"


def _mod4(r: int) -> Callable[[int], bool]:
    return lambda n: n % 4 == r


PROPERTIES: dict[str, Property] = {
    p.name: p
    for p in (
        Property("k-bisection", lambda g, a, d: find_k_bisection(g, a.k, d), uses_k=True),
        Property("ando", lambda g, a, d: find_ando(g, d)),
        Property("strong-ando", lambda g, a, d: find_k_bisection_iso_linear_forests(g, max(1, g.n // 2), d)),
        Property(
            "k-bisection-iso-lf", lambda g, a, d: find_k_bisection_iso_linear_forests(g, a.k, d), uses_k=True
        ),
        Property("wormald", lambda g, a, d: find_wormald(g, d), _mod4(0)),
        Property("strong-wormald", lambda g, a, d: find_strong_wormald(g, a.method, d), _mod4(0)),
        Property("strong-wormald-2mod4", lambda g, a, d: find_strong_wormald(g, a.method, d), _mod4(2)),
        Property("pair-removed", lambda g, a, d: find_pair_removed_strong_wormald(g, d), _mod4(0)),
        Property("la", lambda g, a, d: find_two_k_linear_forests(g, a.k, d), uses_k=True),
        Property("la-iso", lambda g, a, d: find_two_isomorphic_k_linear_forests(g, a.k, d), _mod4(0), True),
        Property("components-le-4-edges", lambda g, a, d: find_two_colouring_max4_edge_components(g, d)),
    )
}


@dataclass
class OrderStats:
    scanned: int = 0
    failures: int = 0
    inconclusive: int = 0
    skipped: int = 0
    seconds: float = 0.0
    witnesses: list[str] = field(default_factory=list)
    undecided: list[str] = field(default_factory=list)
    connectivity: Counter = field(default_factory=Counter)

    @property
    def successes(self) -> int:
        return self.scanned - self.failures - self.inconclusive


@dataclass
class ScanReport:
    property: str
    params: dict
    orders: dict[int, OrderStats] = field(default_factory=dict)
    errors: list[tuple[int, str]] = field(default_factory=list)
    wall_seconds: float = 0.0

    @property
    def inconclusive(self) -> int:
        return sum(s.inconclusive for s in self.orders.values())

    @property
    def failures(self) -> int:
        return sum(s.failures for s in self.orders.values())

    def to_json(self) -> dict:
        return {
            "property": self.property,
            "params": self.params,
            "wall_seconds": round(self.wall_seconds, 3),
            "errors": [{"line": ln, "message": msg} for ln, msg in self.errors],
            "orders": {
                str(n): {
                    "scanned": s.scanned,
                    "successes": s.successes,
                    "failures": s.failures,
                    "inconclusive": s.inconclusive,
                    "skipped": s.skipped,
                    "seconds": round(s.seconds, 3),
                    "connectivity": {str(k): v for k, v in sorted(s.connectivity.items())},
                    "witnesses": s.witnesses,
                    "inconclusive_graphs": s.undecided,
                }
                for n, s in sorted(self.orders.items())
            },
        }


# ------------------------------------------------------------------ workers

def _check_one(job: tuple[str, str, ScanParams, float | None, float | None]) -> tuple[str, int, str, float, int]:
    """Run one property on one graph6 string; returns (g6, order, status, seconds, connectivity)."""
    g6, prop_name, params, budget_s, scan_end = job
    g = parse_graph6(g6)
    prop = PROPERTIES[prop_name]
    if not prop.applies(g.n):
        return g6, g.n, SKIPPED, 0.0, -1
    budget = budget_s
    if scan_end is not None:
        left = scan_end - time.time()
        if left <= 0:
            return g6, g.n, INCONCLUSIVE, 0.0, -1
        budget = left if budget is None else min(budget, left)
    t0 = time.perf_counter()
    try:
        found = prop.solve(g, params, Deadline(budget))
    except BudgetExceeded:
        return g6, g.n, INCONCLUSIVE, time.perf_counter() - t0, -1
    dt = time.perf_counter() - t0
    if found is None:
        return g6, g.n, FAIL, dt, vertex_connectivity(g)
    return g6, g.n, OK, dt, -1


def default_threads() -> int:
    env = os.environ.get("BISECTLAB_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            log.warning("ignoring BISECTLAB_THREADS=%r", env)
    return 1


def run_scan(
    graphs: Iterable[tuple[int, SimpleGraph | Graph6Error]],
    prop_name: str,
    params: ScanParams = ScanParams(),
    budget_ms: int | None = None,
    scan_budget_s: float | None = None,
    threads: int = 1,
    strict: bool = False,
) -> ScanReport:
    """Scan graphs (numbered by source line) for a property.

    Work units are single graphs. Results are reduced per order and
    witness lists sorted by canonical code, so the report does not depend
    on the number of workers (timings aside).
    """
    if prop_name not in PROPERTIES:
        raise ValueError(f"unknown property {prop_name!r}; choose from {', '.join(PROPERTIES)}")
    shown = {}
    if PROPERTIES[prop_name].uses_k:
        shown["k"] = params.k
    if prop_name.startswith("strong-wormald"):
        shown["method"] = params.method
    report = ScanReport(prop_name, shown)
    t0 = time.time()
    budget_s = None if budget_ms is None else budget_ms / 1000
    scan_end = None if scan_budget_s is None else t0 + scan_budget_s

    def jobs() -> Iterator[tuple]:
        for lineno, item in graphs:
            if isinstance(item, Graph6Error):
                if strict:
                    raise Graph6Error(f"line {lineno}: {item.message}", item.offset)
                report.errors.append((lineno, str(item)))
                log.error("line %d: %s", lineno, item)
                continue
            yield write_graph6(item), prop_name, params, budget_s, scan_end

    if threads <= 1:
        results: Iterable = map(_check_one, jobs())
        _reduce(report, results)
    else:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            _reduce(report, pool.map(_check_one, jobs(), chunksize=16))
    for s in report.orders.values():
        s.witnesses.sort(key=lambda w: canonical_code(parse_graph6(w)))
        s.undecided.sort(key=lambda w: canonical_code(parse_graph6(w)))
    report.wall_seconds = time.time() - t0
    return report


def _reduce(report: ScanReport, results: Iterable[tuple[str, int, str, float, int]]) -> None:
    for g6, n, status, dt, conn in results:
        s = report.orders.setdefault(n, OrderStats())
        if status == SKIPPED:
            s.skipped += 1
            continue
        s.scanned += 1
        s.seconds += dt
        if status == FAIL:
            s.failures += 1
            s.witnesses.append(g6)
            s.connectivity[conn] += 1
        elif status == INCONCLUSIVE:
            s.inconclusive += 1
            s.undecided.append(g6)


def enumerated(max_order: int, connected: bool) -> Iterator[tuple[int, SimpleGraph]]:
    idx = 0
    for n in range(4, max_order + 1, 2):
        for g in enumerate_cubic(n, connected_only=connected):
            idx += 1
            yield idx, g


# ------------------------------------------------------------------ reports

CSV_COLUMNS = ("order", "scanned", "failures", "inconclusive", "seconds")
CONN_COLUMNS = ("order", "conn1", "conn2", "conn3", "total")


def write_csv(report: ScanReport, path: Path) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(CSV_COLUMNS)
        for n, s in sorted(report.orders.items()):
            if s.scanned:
                w.writerow((n, s.scanned, s.failures, s.inconclusive, f"{s.seconds:.3f}"))


def write_connectivity_csv(report: ScanReport, path: Path) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(CONN_COLUMNS)
        for n, s in sorted(report.orders.items()):
            if s.scanned:
                c = s.connectivity
                w.writerow((n, c[1], c[2], c[3], s.failures))


def plot_report(report: ScanReport, path: Path) -> None:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    rows = [(n, s) for n, s in sorted(report.orders.items()) if s.scanned]
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(10, 4))
    orders = [str(n) for n, _ in rows]
    bottom = [0] * len(rows)
    for k, colour in ((1, "tab:red"), (2, "tab:orange"), (3, "tab:blue")):
        vals = [s.connectivity[k] for _, s in rows]
        ax1.bar(orders, vals, bottom=bottom, color=colour, label=f"conn. {k}")
        bottom = [a + b for a, b in zip(bottom, vals)]
    ax1.bar(orders, [s.inconclusive for _, s in rows], bottom=bottom, color="grey", label="inconclusive")
    ax1.set_xlabel("order")
    ax1.set_ylabel("graphs without the property")
    ax1.legend(fontsize="small")
    ax2.semilogy(orders, [max(s.seconds, 1e-4) for _, s in rows], marker="o")
    ax2.set_xlabel("order")
    ax2.set_ylabel("solver seconds")
    fig.suptitle(f"{report.property} {report.params or ''}".strip())
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def write_outputs(report: ScanReport, prefix: str) -> list[Path]:
    base = Path(prefix)
    base.parent.mkdir(parents=True, exist_ok=True)
    paths = [
        base.with_name(base.name + ".csv"),
        base.with_name(base.name + "_connectivity.csv"),
        base.with_name(base.name + ".json"),
        base.with_name(base.name + "_failures.g6"),
        base.with_name(base.name + ".png"),
    ]
    write_csv(report, paths[0])
    write_connectivity_csv(report, paths[1])
    paths[2].write_text(json.dumps(report.to_json(), indent=2) + "\n")
    with open(paths[3], "w") as fh:
        for _, s in sorted(report.orders.items()):
            fh.writelines(w + "\n" for w in s.witnesses)
    plot_report(report, paths[4])
    return paths


def print_summary(report: ScanReport, out=sys.stdout) -> None:
    print(f"property {report.property} {report.params}", file=out)
    print(f"{'order':>5} {'scanned':>8} {'fail':>6} {'inconcl':>8} {'c1':>4} {'c2':>4} {'c3':>4} {'seconds':>9}", file=out)
    for n, s in sorted(report.orders.items()):
        if not s.scanned:
            continue
        c = s.connectivity
        print(
            f"{n:>5} {s.scanned:>8} {s.failures:>6} {s.inconclusive:>8} {c[1]:>4} {c[2]:>4} {c[3]:>4} {s.seconds:>9.2f}",
            file=out,
        )
    for s in report.orders.values():
        for w in s.witnesses:
            print(f"  failure {w}", file=out)
    if report.errors:
        print(f"{len(report.errors)} malformed line(s) skipped", file=out)


# ------------------------------------------------------------------ commands

def _cmd_scan(args: argparse.Namespace) -> int:
    if args.property not in PROPERTIES:
        print(f"error: unknown property {args.property!r}; choose from {', '.join(PROPERTIES)}", file=sys.stderr)
        return 1
    params = ScanParams(k=args.k, method=args.method)
    if args.infile:
        try:
            fh = sys.stdin if args.infile == "-" else open(args.infile)
        except OSError as exc:
            print(f"error: cannot read {args.infile}: {exc}", file=sys.stderr)
            return 1
        source: Iterable = read_graph6_lines(fh, strict=False)
    else:
        source = enumerated(args.enumerate, args.connected)
    try:
        report = run_scan(
            source, args.property, params, args.budget_ms, args.scan_budget_s, args.threads, args.strict
        )
    except Graph6Error as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print_summary(report)
    if args.out:
        for p in write_outputs(report, args.out):
            print(f"wrote {p}")
    return 2 if report.inconclusive else 0


def _parse_ints(text: str) -> list[int]:
    return [int(x) for x in text.replace(" ", "").split(",") if x]


def _print_bisection(g: SimpleGraph, colouring, method: str) -> None:
    check = verify_k_bisection(g, colouring, 2)
    print(f"graph6 {write_graph6(g)}")
    print(f"method {method}")
    print(f"colouring {format_bisection(colouring)}")
    print(f"verified 2-bisection: {'yes' if check else 'no (' + check.reason + ')'}")


def _cmd_cpg(args: argparse.Namespace) -> int:
    spec = CpgSpec(args.n, tuple(_parse_ints(args.perm)))
    try:
        res = two_bisection_cpg(spec)
    except PetersenException as exc:
        print(f"graph6 {write_graph6(build_cpg(spec))}")
        print(f"no 2-bisection: {exc}")
        return 0
    _print_bisection(build_cpg(spec), res.colouring, res.method + (" (fallback)" if res.fallback else ""))
    return 0


def _cmd_gp(args: argparse.Namespace) -> int:
    if gcd(args.n, args.k) == 1:
        spec = gp_spec(args.n, args.k)
        print(f"as cycle permutation graph: p = {','.join(map(str, spec.p))}")
        try:
            res = two_bisection_cpg(spec)
        except PetersenException as exc:
            print(f"graph6 {write_graph6(build_cpg(spec))}")
            print(f"no 2-bisection: {exc}")
            return 0
        _print_bisection(build_cpg(spec), res.colouring, res.method)
        return 0
    g = build_gp(args.n, args.k)
    w = find_k_bisection(g, 2)
    if w is None:
        print(f"graph6 {write_graph6(g)}")
        print("no 2-bisection")
        return 0
    _print_bisection(g, w.colouring, "search")
    return 0


def _cmd_family(args: argparse.Namespace) -> int:
    g = build_family(args.name, _parse_ints(args.params or ""))
    print(write_graph6(g))
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="bisectlab", description=__doc__)
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    sc = sub.add_parser("scan", help="check a property over many graphs")
    src = sc.add_mutually_exclusive_group(required=True)
    src.add_argument("--in", dest="infile", metavar="FILE", help="graph6 file, one graph per line ('-' for stdin)")
    src.add_argument("--enumerate", type=int, metavar="N", help="all cubic graphs of order 4..N")
    sc.add_argument("--connected", action="store_true", help="with --enumerate, connected graphs only")
    sc.add_argument("--property", required=True, help="one of: " + ", ".join(PROPERTIES))
    sc.add_argument("--k", type=int, default=2)
    sc.add_argument("--method", choices=("bisection", "direct"), default="bisection",
                    help="Strong Wormald solver")
    sc.add_argument("--threads", type=int, default=default_threads())
    sc.add_argument("--budget-ms", type=int, default=None, help="per-graph time budget")
    sc.add_argument("--scan-budget-s", type=float, default=None, help="whole-scan time budget")
    sc.add_argument("--out", metavar="PREFIX", help="write PREFIX.csv/.json/.png and the failure list")
    sc.add_argument("--strict", action="store_true", help="stop at the first malformed line")
    sc.set_defaults(func=_cmd_scan)

    cp = sub.add_parser("cpg", help="2-bisection of a cycle permutation graph")
    cp.add_argument("--n", type=int, required=True)
    cp.add_argument("--perm", required=True, help="comma separated p_0..p_{n-1}")
    cp.set_defaults(func=_cmd_cpg)

    gp = sub.add_parser("gp", help="2-bisection of a generalised Petersen graph")
    gp.add_argument("--n", type=int, required=True)
    gp.add_argument("--k", type=int, required=True)
    gp.set_defaults(func=_cmd_gp)

    fm = sub.add_parser("family", help="print a named graph as graph6")
    fm.add_argument("--name", required=True, help="one of: " + ", ".join(FAMILY_NAMES))
    fm.add_argument("--params", default="", help="comma separated integers")
    fm.set_defaults(func=_cmd_family)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except (ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
