"""Command-line front end.

Subcommands: ``stats`` (coordinate table and aggregates of one partition),
``encode``/``decode`` (between partitions and labelled path diagrams, under
either encoding), ``map`` (apply one of the bijections), ``verify`` (run
identity checks over parameter ranges) and ``table`` (polynomial tables).

Exit codes: 0 success, 1 invalid input, 2 verification failure.
"""
from __future__ import annotations

import argparse
import json
import sys
from multiprocessing import Pool

from .core import OrderedSetPartition, Permutation
from .families import DeskScaleError, set_partitions
from .motzkin import lambda_map
from .paths import PathDiagram, gamma_sigma, phi, phi_inv, psi, psi_inv, theta_map, upsilon, xi_map
from .qpoly import carlitz_aq, gauss_binomial, s_hat_pq, stirling_pq, stirling_q
from .statistics import (
    COORD_NAMES,
    coordinate_table,
    resolve_stat,
    stat,
    stat_restricted,
)
from .verify import THEOREM_IDS, run_task, verify

AGGREGATE_ORDER = (
    "binv", "bmaj", "cbinv", "cbmaj",
    "mak", "makp", "cinvlsb", "cmajlsb",
    "inv", "maj", "invsigma", "majsigma",
    "cls", "opb", "sb",
)


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage problems are "invalid input"
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


# ---------------------------------------------------------------------------
# stats
# ---------------------------------------------------------------------------

def render_stats_table(pi: OrderedSetPartition) -> str:
    """Plain-text coordinate table in the block layout of the partition,
    one row per coordinate statistic, with row totals."""
    rows = coordinate_table(pi)
    element_cells = [str(el) for block in pi.blocks for el in block]
    widths = [len(c) for c in element_cells]
    for name in COORD_NAMES:
        for j, value in enumerate(rows[name]):
            widths[j] = max(widths[j], len(str(value)))

    block_sizes = [len(b) for b in pi.blocks]

    def format_row(label: str, cells: list[str], total: str) -> str:
        out = [f"{label:>4} |"]
        pos = 0
        for size in block_sizes:
            chunk = " ".join(c.rjust(widths[pos + t]) for t, c in enumerate(cells[pos:pos + size]))
            out.append(f" {chunk} ")
            out.append("/")
            pos += size
        out[-1] = "|"
        out.append(f" {total:>5}")
        return "".join(out)

    lines = [format_row("i", element_cells, "total")]
    for name in COORD_NAMES:
        cells = [str(v) for v in rows[name]]
        lines.append(format_row(name, cells, str(sum(rows[name]))))
    return "\n".join(lines)


def _cmd_stats(args) -> int:
    pi = OrderedSetPartition.parse(args.partition)
    if args.stat:
        value = resolve_stat(args.stat)(pi)
        if args.json:
            print(json.dumps({"partition": pi.to_json(), "stat": args.stat, "value": value}))
        else:
            print(value)
        return 0
    aggregates = {name: stat(pi, name) for name in AGGREGATE_ORDER}
    restricted = {
        f"{name}_{cls.lower()}": stat_restricted(pi, name, cls)
        for name in COORD_NAMES
        for cls in ("OS", "TC")
    }
    if args.json:
        payload = {
            "partition": pi.to_json(),
            "coordinates": coordinate_table(pi),
            "aggregates": aggregates,
            "restricted": restricted,
        }
        print(json.dumps(payload))
        return 0
    print(f"pi = {pi.to_text()}")
    print(render_stats_table(pi))
    print()
    print("aggregates:")
    print("  " + "  ".join(f"{name}={aggregates[name]}" for name in AGGREGATE_ORDER))
    print("restricted:")
    print("  " + "  ".join(f"{key}={restricted[key]}" for key in sorted(restricted)))
    return 0


# ---------------------------------------------------------------------------
# encode / decode / map
# ---------------------------------------------------------------------------

def _cmd_encode(args) -> int:
    pi = OrderedSetPartition.parse(args.partition)
    diagram = psi_inv(pi) if args.psi else phi_inv(pi)
    print(json.dumps(diagram.to_json()) if args.json else diagram.to_text())
    return 0


def _cmd_decode(args) -> int:
    diagram = PathDiagram.parse(args.diagram)
    pi = psi(diagram) if args.psi else phi(diagram)
    print(json.dumps(pi.to_json()) if args.json else pi.to_text())
    return 0


def _cmd_map(args) -> int:
    pi = OrderedSetPartition.parse(args.partition)
    if args.xi:
        image = xi_map(pi)
    elif args.upsilon:
        image = upsilon(pi)
    elif args.theta:
        image = theta_map(pi)
    elif args.lam:
        image = lambda_map(pi)
    else:
        image = gamma_sigma(pi, Permutation.parse(args.gamma))
    print(json.dumps(image.to_json()) if args.json else image.to_text())
    return 0


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def _parse_range(text: str) -> list[int]:
    text = text.strip()
    if ".." in text:
        a, b = text.split("..", 1)
        return list(range(int(a), int(b) + 1))
    return [int(text)]


def _verify_tasks(args) -> list[tuple[str, dict]]:
    theorem = args.theorem.lower()
    extra = {"allow_large": True} if args.allow_large else {}
    if theorem in ("eq1.1", "doubleton"):
        if args.parts:
            return [(theorem, {"parts": tuple(int(t) for t in args.parts.replace(",", " ").split()), **extra})]
        if args.max_sum is None:
            raise ValueError(f"{theorem} needs --parts or --max-sum")
        from .families import compositions

        tasks = []
        for total in range(1, args.max_sum + 1):
            for parts in compositions(total):
                tasks.append((theorem, {"parts": parts, **extra}))
        return tasks
    if theorem == "thm3.5":
        if args.pi:
            return [(theorem, {"pi": args.pi, **extra})]
        if args.n is None:
            raise ValueError("thm3.5 needs --pi or --n (and optionally --k)")
        tasks = []
        for n in _parse_range(args.n):
            ks = range(1, n + 1) if args.k in (None, "all") else _parse_range(args.k)
            for k in ks:
                for pi0 in set_partitions(n, k):
                    tasks.append((theorem, {"pi": pi0.to_text(), **extra}))
        return tasks
    if args.n is None:
        raise ValueError(f"{theorem} needs --n (and optionally --k)")
    tasks = []
    for n in _parse_range(args.n):
        ks = range(1, n + 1) if args.k in (None, "all") else _parse_range(args.k)
        for k in ks:
            if not 1 <= k <= n:
                continue
            if theorem == "thm3.1":
                sigmas = (
                    [args.sigma]
                    if args.sigma and args.sigma != "all"
                    else [sig.one_line() for sig in _all_perms(k)]
                )
                for sigma in sigmas:
                    tasks.append((theorem, {"n": n, "k": k, "sigma": sigma, **extra}))
            else:
                tasks.append((theorem, {"n": n, "k": k, **extra}))
    return tasks


def _all_perms(k: int):
    from .families import permutations

    return permutations(k)


def _cmd_verify(args) -> int:
    tasks = _verify_tasks(args)
    if args.jobs > 1 and len(tasks) > 1:
        with Pool(args.jobs) as pool:
            reports = pool.map(run_task, tasks)
    else:
        reports = [run_task(task) for task in tasks]
    all_passed = all(r.passed for r in reports)
    if args.json:
        print(json.dumps([r.to_json() for r in reports]))
    else:
        for report in reports:
            print(report)
        print(f"{sum(r.passed for r in reports)}/{len(reports)} checks passed")
    return 0 if all_passed else 2


# ---------------------------------------------------------------------------
# table
# ---------------------------------------------------------------------------

_TABLES = {
    "stirling": ("S_q", stirling_q),
    "stirling-pq": ("S_pq", stirling_pq),
    "stirling-hat": ("S_hat_pq", s_hat_pq),
    "eulerian": ("A_q", carlitz_aq),
    "gauss": ("C_q", gauss_binomial),
}


def _cmd_table(args) -> int:
    label, fn = _TABLES[args.kind]
    rows = []
    for n in range(args.n + 1):
        for k in range(n + 1):
            poly = fn(n, k)
            if not poly.is_zero():
                rows.append((n, k, poly))
    if args.json:
        print(json.dumps([
            {"n": n, "k": k, "poly": poly.to_json()} for n, k, poly in rows
        ]))
    else:
        for n, k, poly in rows:
            print(f"{label}({n},{k}) = {poly.to_text()}")
    return 0


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="opstat", description=__doc__.strip().splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p_stats = sub.add_parser("stats", help="coordinate table and aggregate statistics")
    p_stats.add_argument("partition")
    p_stats.add_argument("--stat", help="print a single named statistic")
    p_stats.add_argument("--json", action="store_true")
    p_stats.set_defaults(func=_cmd_stats)

    for name, fn in (("encode", _cmd_encode), ("decode", _cmd_decode)):
        p = sub.add_parser(name, help=f"{name} between partitions and path diagrams")
        p.add_argument("partition" if name == "encode" else "diagram")
        style = p.add_mutually_exclusive_group()
        style.add_argument("--phi", action="store_true", help="gap-rank encoding (default)")
        style.add_argument("--psi", action="store_true", help="descent-sensitive encoding")
        p.add_argument("--json", action="store_true")
        p.set_defaults(func=fn)

    p_map = sub.add_parser("map", help="apply a bijection to a partition")
    p_map.add_argument("partition")
    which = p_map.add_mutually_exclusive_group(required=True)
    which.add_argument("--xi", action="store_true")
    which.add_argument("--upsilon", action="store_true")
    which.add_argument("--theta", action="store_true")
    which.add_argument("--lambda", dest="lam", action="store_true")
    which.add_argument("--gamma", metavar="SIGMA")
    p_map.add_argument("--json", action="store_true")
    p_map.set_defaults(func=_cmd_map)

    p_verify = sub.add_parser("verify", help="run identity checks over parameter ranges")
    p_verify.add_argument("theorem", choices=[t for t in THEOREM_IDS])
    p_verify.add_argument("--n", help="value or range, e.g. 6 or 1..6")
    p_verify.add_argument("--k", help="value, range, or 'all'")
    p_verify.add_argument("--sigma", help="one-line permutation, or 'all'")
    p_verify.add_argument("--pi", help="partition text (thm3.5)")
    p_verify.add_argument("--parts", help="composition, e.g. '3,2,3'")
    p_verify.add_argument("--max-sum", type=int, help="run all compositions up to this sum")
    p_verify.add_argument("--jobs", type=int, default=1)
    p_verify.add_argument("--allow-large", action="store_true",
                          help="override the desk-scale guard (or set OPSTAT_MAX_N)")
    p_verify.add_argument("--json", action="store_true")
    p_verify.set_defaults(func=_cmd_verify)

    p_table = sub.add_parser("table", help="polynomial tables")
    p_table.add_argument("kind", choices=sorted(_TABLES))
    p_table.add_argument("--n", type=int, required=True)
    p_table.add_argument("--json", action="store_true")
    p_table.set_defaults(func=_cmd_table)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    except DeskScaleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
