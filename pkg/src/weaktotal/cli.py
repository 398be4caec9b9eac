"""Command-line interface: ``compute``, ``verify``, ``generate`` and ``tree``.

Graphs come from ``--input`` (edgelist or graph6, ``-`` for stdin) or from
a named family (``--family spider -p legs=2,2,3``).  Solver size caps
default to the library limits; ``WEAKTOTAL_DIM_LIMIT``,
``WEAKTOTAL_RESWT_LIMIT`` and ``WEAKTOTAL_COLOR_LIMIT`` override them, and
``--max-n`` above a default cap needs ``--acknowledge-limits``.

Exit codes: 0 success, 1 a verified theorem failed, 2 usage or input error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from . import solvers
from .constructions import BadParameters, generate
from .graph import Graph, GraphError, is_path, is_tree
from .io import ParseError, read_edgelist, read_graph6, to_edgelist, to_graph6
from .solvers import TooLarge, chromatic_number, clique_number, profile
from .theorems import (
    CHECKERS,
    SCHEMA as REPORT_SCHEMA,
    Corpus,
    UnknownTheoremId,
    default_plan,
    format_table,
    run_suite,
)
from .trees import (
    construct_wtmb,
    decompose_tree,
    tree_metric_dimension,
    tree_reswt_bounds,
    tree_weak_total_dimension,
)

SCHEMA = "weaktotal.compute/1"
TREE_SCHEMA = "weaktotal.tree/1"


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class Limits:
    dim: int
    res_wt: int
    color: int

    @classmethod
    def from_env(cls) -> "Limits":
        def read(name: str, default: int) -> int:
            raw = os.environ.get(name)
            if raw is None:
                return default
            try:
                return int(raw)
            except ValueError:
                raise UsageError(f"{name} must be an integer, got {raw!r}") from None

        return cls(
            read("WEAKTOTAL_DIM_LIMIT", solvers.DIM_LIMIT),
            read("WEAKTOTAL_RESWT_LIMIT", solvers.RESWT_LIMIT),
            read("WEAKTOTAL_COLOR_LIMIT", solvers.COLOR_LIMIT),
        )

    def with_max_n(self, max_n: int | None, acknowledged: bool) -> "Limits":
        if max_n is None:
            return self
        if max_n > min(self.dim, self.res_wt, self.color) and not acknowledged:
            raise UsageError(
                f"--max-n {max_n} exceeds a default solver limit "
                f"(dim {self.dim}, res_wt {self.res_wt}, chi/omega {self.color}); "
                "pass --acknowledge-limits to raise it"
            )
        return Limits(max_n, max_n, max_n)

    def check(self, g: Graph) -> None:
        for name, cap in (("dim/dim_wt", self.dim), ("res_wt", self.res_wt)):
            if g.n > cap:
                raise TooLarge(f"n={g.n} exceeds the {name} limit of {cap}")


def _parse_value(raw: str):
    if "," in raw:
        return [_parse_value(x) for x in raw.split(",") if x]
    try:
        return int(raw)
    except ValueError:
        return raw


def _family_params(pairs: Sequence[str], seed: int | None) -> dict:
    params = {}
    for item in pairs:
        key, sep, value = item.partition("=")
        if not sep or not key:
            raise UsageError(f"family parameter must look like key=value, got {item!r}")
        params[key] = _parse_value(value)
    if seed is not None:
        params.setdefault("seed", seed)
    return params


def _read_graphs(args) -> list[Graph]:
    if args.family:
        return generate(args.family, **_family_params(args.param, args.seed))
    if not args.input:
        raise UsageError("give --input or --family")
    if args.input == "-":
        lines = sys.stdin.read().splitlines()
        suffix = ""
    else:
        path = Path(args.input)
        lines = path.read_text().splitlines()
        suffix = path.suffix
    fmt = args.format or ("graph6" if suffix in (".g6", ".graph6") else "edgelist")
    reader = read_graph6 if fmt == "graph6" else read_edgelist
    return list(reader(lines))


def _tree_record(g: Graph) -> dict:
    td = decompose_tree(g)
    lower, upper = tree_reswt_bounds(td)
    rec = td.to_record()
    rec["dim_formula"] = tree_metric_dimension(td)
    rec["dim_wt_formula"] = tree_weak_total_dimension(td)
    rec["constructive_wtmb"] = list(construct_wtmb(td).members)
    rec["res_wt_bounds"] = {"lower": lower, "upper": upper}
    return rec


def compute_record(g: Graph, limits: Limits, max_bases: int | None = 20) -> dict:
    limits.check(g)
    p = profile(g, limit=None)
    rec = {
        "graph6": to_graph6(g),
        "n": g.n,
        "m": g.m,
        "dim": p.dim,
        "dim_wt": p.dim_wt,
        "res_wt": p.res_wt,
        "metric_basis": list(p.metric_bases[0].members),
        "wtmb": list(p.wtmbs[0].members),
        "metric_bases_count": len(p.metric_bases),
        "wtmbs_count": len(p.wtmbs),
        "metric_bases": [list(b.members) for b in p.metric_bases[:max_bases]],
        "wtmbs": [list(b.members) for b in p.wtmbs[:max_bases]],
        "twins": list(p.twins),
        "randomly_weak_total": p.is_randomly_wt_k,
        "randomly_wt_k": p.randomly_wt_k,
    }
    if g.n <= limits.color:
        rec["chi"] = chromatic_number(g, limit=None)
        rec["omega"] = clique_number(g, limit=None)
    if is_tree(g) and not is_path(g):
        rec["tree"] = _tree_record(g)
    if p.notes:
        rec["notes"] = p.notes
    return rec


def _emit(out, records: list[dict], fmt: str, schema: str, columns: Sequence[str], key: str = "graphs") -> None:
    if fmt == "json":
        json.dump({"schema": schema, key: records}, out, indent=2)
        out.write("\n")
        return
    rows = [[_cell(r.get(c)) for c in columns] for r in records]
    if fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(columns)
        w.writerows(rows)
        return
    table = [list(columns)] + rows
    widths = [max(len(row[i]) for row in table) for i in range(len(columns))]
    for i, row in enumerate(table):
        out.write("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() + "\n")
        if i == 0:
            out.write("  ".join("-" * w for w in widths) + "\n")


def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, list):
        return " ".join(str(x) for x in v)
    return str(v)


def cmd_compute(args, out) -> int:
    limits = Limits.from_env().with_max_n(args.max_n, args.acknowledge_limits)
    records = [compute_record(g, limits, args.max_bases) for g in _read_graphs(args)]
    cols = ["graph6", "n", "m", "dim", "dim_wt", "res_wt", "randomly_wt_k", "metric_basis", "wtmb", "twins"]
    _emit(out, records, args.output, SCHEMA, cols)
    return 0


def cmd_tree(args, out) -> int:
    limits = Limits.from_env().with_max_n(args.max_n, args.acknowledge_limits)
    records = []
    for g in _read_graphs(args):
        if not is_tree(g) or is_path(g):
            raise UsageError(f"{to_graph6(g)} is not a non-path tree")
        rec = {"graph6": to_graph6(g), "n": g.n, **_tree_record(g)}
        if args.brute_force:
            limits.check(g)
            p = profile(g, limit=None)
            rec["brute_force"] = {"dim": p.dim, "dim_wt": p.dim_wt, "res_wt": p.res_wt}
        records.append(rec)
    cols = ["graph6", "n", "sigma", "ex", "mu", "theta", "dim_formula", "dim_wt_formula", "constructive_wtmb"]
    _emit(out, records, args.output, TREE_SCHEMA, cols)
    return 0


def cmd_generate(args, out) -> int:
    if not args.family:
        raise UsageError("generate needs --family")
    graphs = generate(args.family, **_family_params(args.param, args.seed))
    for g in graphs:
        out.write(to_edgelist(g) if args.format == "edgelist" else to_graph6(g) + "\n")
    return 0


def cmd_verify(args, out) -> int:
    selection = None
    if args.theorems:
        selection = [t.strip() for t in args.theorems.split(",") if t.strip()]
        unknown = [t for t in selection if t not in CHECKERS]
        if unknown:
            raise UnknownTheoremId(f"unknown theorem id(s): {', '.join(unknown)}")
    max_n = 6 if args.max_n is None else args.max_n
    if max_n > 7 and not args.acknowledge_limits:
        raise UsageError("general-graph corpora above n = 7 need --acknowledge-limits")
    if args.input or args.family:
        graphs = _read_graphs(args)
        plan = [(Corpus.of(graphs, args.input or args.family), selection or list(CHECKERS))]
    else:
        plan = default_plan(max_n, args.tree_count, args.seed or 0, args.max_tree_n)
        if selection is not None:
            plan = [(c, [i for i in ids if i in selection]) for c, ids in plan]
            # a selected id that only lives in one plan entry is run there once
    reports = []
    done: set[str] = set()
    for corpus, ids in plan:
        ids = [i for i in ids if i not in done]
        if ids:
            reports.extend(run_suite(corpus, ids, jobs=args.jobs))
            done.update(ids)
    records = [r.to_record() for r in reports]
    failed = [r.theorem_id for r in reports if r.verdict == "fail"]
    if args.output == "json":
        json.dump({"schema": REPORT_SCHEMA, "reports": records, "failed": failed}, out, indent=2)
        out.write("\n")
    elif args.output == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["theorem_id", "verdict", "corpus", "graphs", "applicable", "violations", "runtime", "first_counterexample"])
        for r in reports:
            first = r.counterexamples[0]["graph6"] if r.counterexamples else ""
            w.writerow([r.theorem_id, r.verdict, r.corpus, r.graphs, r.applicable, r.violations, f"{r.runtime:.3f}", first])
    else:
        out.write(format_table(reports) + "\n")
        for r in reports:
            for c in r.counterexamples[:3]:
                out.write(f"{r.theorem_id}: {c['graph6']}  {c['violation']}\n")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="weaktotal", description="Weak total resolvability of small graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, output=True):
        p.add_argument("--input", help="graph file (edgelist or graph6); '-' reads stdin")
        p.add_argument("--format", choices=["edgelist", "graph6"], help="input format (generate: output format)")
        p.add_argument("--family", help="named construction instead of --input")
        p.add_argument("-p", "--param", action="append", default=[], metavar="KEY=VALUE", help="family parameter (lists as 2,2,3)")
        p.add_argument("--seed", type=int, help="seed for random families and corpora")
        p.add_argument("--max-n", type=int, help="uniform solver size cap")
        p.add_argument("--acknowledge-limits", action="store_true", help="allow --max-n above the default caps")
        if output:
            p.add_argument("--output", choices=["json", "csv", "table"], default="json")

    p = sub.add_parser("compute", help="dim, dim_wt, res_wt and witnesses")
    common(p)
    p.add_argument("--max-bases", type=int, default=20, help="cap on listed minimum bases")
    p.set_defaults(run=cmd_compute)

    p = sub.add_parser("tree", help="branch decomposition and closed forms for non-path trees")
    common(p)
    p.add_argument("--brute-force", action="store_true", help="also report brute-force values")
    p.set_defaults(run=cmd_tree)

    p = sub.add_parser("generate", help="write a family as graph6 (default) or edgelist")
    common(p, output=False)
    p.set_defaults(run=cmd_generate)

    p = sub.add_parser("verify", help="run the theorem checkers")
    common(p)
    p.add_argument("--theorems", help="comma separated checker ids (default: all)")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("--tree-count", type=int, default=10_000, help="random trees per order 9..14 (0 disables)")
    p.add_argument("--max-tree-n", type=int, default=8, help="largest order of the exhaustive tree corpus")
    p.add_argument("--list", action="store_true", help="list checker ids and exit")
    p.set_defaults(run=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    if getattr(args, "list", False):
        for c in CHECKERS.values():
            out.write(f"{c.id}\t{c.statement}\n")
        return 0
    try:
        return args.run(args, out)
    except (UsageError, UnknownTheoremId, BadParameters, TooLarge, ParseError, GraphError, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"weaktotal {args.command}: error: {msg}", file=sys.stderr)
        return 2


def run(argv: Sequence[str]) -> tuple[int, str]:
    """Run the CLI in-process and capture stdout (used by tests and demos)."""
    buf = io.StringIO()
    code = main(argv, buf)
    return code, buf.getvalue()
