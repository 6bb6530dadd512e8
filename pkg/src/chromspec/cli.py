"""Command line front end.

    chromspec bounds FILE|- [--graph6 STR] [--alpha] [--equality]
    chromspec table FAMILY RANGE
    chromspec fuzz {theorem1,lemma1,bounds-vs-chi,signless} [--trials N] [--seed S]
    chromspec explore [--top K]
    chromspec chi|alpha|encode FILE|-

JSON is the source of truth; csv and md are flat projections of the same
payload.  Exit codes: 0 ok, 1 fuzz violations, 2 usage or parse error,
3 bounds undefined (graph without edges).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
import time

from . import graph as gr
from .bounds import bound_report
from .coloring import DEFAULT_BUDGET, chromatic_number_exact, independence_number_exact
from .formats import GraphParseError, emit_graph6, parse_graph
from .harness import (
    SIGNLESS_TOL,
    FuzzConfig,
    explore_equality,
    fuzz_bounds_vs_chi,
    fuzz_lemma1,
    fuzz_signless,
    fuzz_theorem1,
)

SCHEMA_VERSION = "1"
EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_UNDEFINED = 0, 1, 2, 3

FAMILIES = ("complete", "complete-minus-edge", "cycle", "wheel", "complete-multipartite", "petersen")

# per-campaign defaults: (n_range, r_range, trials)
FUZZ_DEFAULTS = {
    "theorem1": ((2, 24), (2, 6), 10_000),
    "lemma1": ((2, 24), (2, 6), 10_000),
    "bounds-vs-chi": ((7, 12), (2, 6), 200),
    "signless": ((7, 10), (2, 2), 500),
}


class UsageError(Exception):
    pass


def _round(x, digits: int):
    if isinstance(x, bool) or x is None:
        return x
    if isinstance(x, float):
        if not math.isfinite(x):
            raise ValueError(f"non-finite number {x!r} in output")
        return float(f"{x:.{digits}g}")
    if isinstance(x, dict):
        return {k: _round(v, digits) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_round(v, digits) for v in x]
    return x


def parse_range(text: str) -> tuple[int, int]:
    for sep in ("..", ":"):
        if sep in text:
            lo, hi = text.split(sep, 1)
            break
    else:
        lo = hi = text
    try:
        lo_i, hi_i = int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}; use A..B or a single integer") from None
    if lo_i > hi_i:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return lo_i, hi_i


# rendering


def _cell(v, digits: int) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return f"{v:.{digits}g}"
    if isinstance(v, (list, tuple)):
        return " ".join(_cell(x, digits) for x in v)
    return str(v)


def _csv(columns, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for row in rows:
        w.writerow([_cell(row.get(c), 10) for c in columns])
    return buf.getvalue()


def _md(columns, rows) -> str:
    lines = ["| " + " | ".join(columns) + " |", "|" + "|".join("---" for _ in columns) + "|"]
    for row in rows:
        lines.append("| " + " | ".join(_cell(row.get(c), 4) for c in columns) + " |")
    return "\n".join(lines) + "\n"


def _key_value_rows(d: dict, prefix: str = "") -> list[dict]:
    rows = []
    for k, v in d.items():
        if isinstance(v, dict):
            rows += _key_value_rows(v, f"{prefix}{k}.")
        elif isinstance(v, list) and v and isinstance(v[0], dict):
            rows.append({"key": f"{prefix}{k}", "value": len(v)})
        else:
            rows.append({"key": f"{prefix}{k}", "value": v})
    return rows


def project(doc: dict) -> tuple[list[str], list[dict]]:
    """Flat (columns, rows) view of a document for csv/md output."""
    res = doc["results"]
    cmd = doc["command"]
    if cmd == "table":
        return ["family", "param", "n", "hoffman", "hoffman_ceil", "nikiforov", "nikiforov_ceil", "chi"], res["rows"]
    if cmd == "explore":
        cols = ["rank", "family", "trial", "gap", "r", "block_sizes", "b_zero", "b_rowsum", "support_bipartite"]
        rows = [{"rank": i + 1, "family": r["kind"], "trial": r["trial"], "gap": r["gap"], **r["tags"]}
                for i, r in enumerate(res["top"])]
        return cols, rows
    flat = {k: v for k, v in res.items() if k not in ("violation_records", "near_equality", "config")}
    return ["key", "value"], _key_value_rows(flat)


def render(doc: dict, fmt: str) -> str:
    doc = _round(doc, 10)
    if fmt == "json":
        return json.dumps(doc, indent=2) + "\n"
    cols, rows = project(doc)
    return _csv(cols, rows) if fmt == "csv" else _md(cols, rows)


# commands


def _read_graph(args) -> gr.Graph:
    if getattr(args, "graph6", None):
        return parse_graph(args.graph6, "graph6")
    if args.input is None:
        raise UsageError("give an input file, '-' for stdin, or --graph6")
    text = sys.stdin.read() if args.input == "-" else open(args.input, encoding="utf-8").read()
    return parse_graph(text, args.format_in)


def cmd_bounds(args) -> tuple[dict, int]:
    g = _read_graph(args)
    rep = bound_report(g, compute_chi=args.chi, compute_alpha=args.alpha,
                       compute_equality=args.equality, budget=args.budget, tau_tol=args.tau_tol)
    return rep.to_dict(), EXIT_OK if rep.defined else EXIT_UNDEFINED


def cmd_chi(args) -> tuple[dict, int]:
    return chromatic_number_exact(_read_graph(args), args.budget).to_dict(), EXIT_OK


def cmd_alpha(args) -> tuple[dict, int]:
    return independence_number_exact(_read_graph(args), args.budget).to_dict(), EXIT_OK


def cmd_encode(args) -> tuple[dict, int]:
    g = _read_graph(args)
    return {"n": g.n, "m": g.m, "graph6": emit_graph6(g)}, EXIT_OK


def family_graphs(family: str, lo: int, hi: int, step: int = 1, part_size: int = 2):
    """(param, graph) pairs for a named family over a parameter range."""
    if family == "petersen":
        return [(10, gr.petersen())]
    build = {
        "complete": gr.complete,
        "complete-minus-edge": gr.complete_minus_edge,
        "cycle": gr.cycle,
        "wheel": gr.wheel,
        "complete-multipartite": lambda t: gr.complete_multipartite([part_size] * t),
    }[family]
    return [(p, build(p)) for p in range(lo, hi + 1, step)]


def cmd_table(args) -> tuple[dict, int]:
    lo, hi = args.range
    try:
        graphs = family_graphs(args.family, lo, hi, args.step, args.part_size)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    rows = []
    for param, g in graphs:
        rep = bound_report(g, compute_chi=args.chi, budget=args.budget)
        rows.append({
            "family": args.family,
            "param": param,
            "n": g.n,
            "hoffman": rep.hoffman,
            "hoffman_ceil": rep.hoffman_ceil,
            "nikiforov": rep.nikiforov,
            "nikiforov_ceil": rep.nikiforov_ceil,
            "chi": rep.chi_exact,
        })
    return {"rows": rows}, EXIT_OK


def _fuzz_config(args, target: str) -> FuzzConfig:
    n_def, r_def, trials_def = FUZZ_DEFAULTS[target]
    return FuzzConfig(
        trials=trials_def if args.trials is None else args.trials,
        seed=args.seed,
        n_range=args.n or n_def,
        r_range=args.r or r_def,
        entry_scale=args.scale,
        diag_scale=args.diag_scale,
        tolerance=args.tol,
        complex_entries=not args.real,
        density=args.density,
    )


def cmd_fuzz(args) -> tuple[dict, int]:
    try:
        cfg = _fuzz_config(args, args.target)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.target == "theorem1":
        summary = fuzz_theorem1(cfg)
    elif args.target == "lemma1":
        summary = fuzz_lemma1(cfg)
    elif args.target == "bounds-vs-chi":
        summary = fuzz_bounds_vs_chi(cfg, args.exhaustive, args.budget)
    else:
        summary = fuzz_signless(cfg, args.exhaustive, SIGNLESS_TOL)
    return summary.to_dict(), EXIT_OK if summary.passed else EXIT_VIOLATION


def cmd_explore(args) -> tuple[dict, int]:
    try:
        cfg = FuzzConfig(
            trials=200 if args.trials is None else args.trials,
            seed=args.seed,
            n_range=args.n or (2, 12),
            r_range=args.r or (2, 6),
            entry_scale=args.scale,
            diag_scale=args.diag_scale,
            tolerance=args.tol,
            complex_entries=not args.real,
            density=args.density,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.top < 1:
        raise UsageError("--top must be >= 1")
    return explore_equality(cfg, args.top).to_dict(), EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "md"), default="json")
    common.add_argument("--tol", type=float, default=1e-8)
    common.add_argument("--seed", type=int, default=1)
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="solver node limit")
    common.add_argument("--timing", action="store_true", help="record wall-clock seconds (breaks byte-identical output)")

    graph_in = argparse.ArgumentParser(add_help=False)
    graph_in.add_argument("input", nargs="?", help="graph file, or - for stdin")
    graph_in.add_argument("--graph6", help="inline graph6 string instead of a file")
    graph_in.add_argument("--format-in", choices=("auto", "graph6", "dimacs", "edgelist"), default="auto")

    fuzz_opts = argparse.ArgumentParser(add_help=False)
    fuzz_opts.add_argument("--trials", type=int)
    fuzz_opts.add_argument("--n", type=parse_range, help="dimension range A..B")
    fuzz_opts.add_argument("--r", type=parse_range, help="block count range A..B")
    fuzz_opts.add_argument("--scale", type=float, default=1.0, help="entry magnitude bound")
    fuzz_opts.add_argument("--diag-scale", type=float, default=1.0)
    fuzz_opts.add_argument("--density", type=float, default=0.3)
    fuzz_opts.add_argument("--real", action="store_true", help="real instead of complex entries")

    p = argparse.ArgumentParser(prog="chromspec", description="Spectral lower bounds on the chromatic number.")
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("bounds", parents=[common, graph_in], help="bound report for one graph")
    b.add_argument("--chi", action=argparse.BooleanOptionalAction, default=True)
    b.add_argument("--alpha", action="store_true")
    b.add_argument("--equality", action="store_true")
    b.add_argument("--tau-tol", type=float, default=1e-6)
    b.set_defaults(func=cmd_bounds)

    for name, func in (("chi", cmd_chi), ("alpha", cmd_alpha), ("encode", cmd_encode)):
        sub.add_parser(name, parents=[common, graph_in]).set_defaults(func=func)

    t = sub.add_parser("table", parents=[common], help="bounds across a graph family")
    t.add_argument("family", choices=FAMILIES)
    t.add_argument("range", type=parse_range, nargs="?", default=(10, 10))
    t.add_argument("--step", type=int, default=1)
    t.add_argument("--part-size", type=int, default=2, help="part size for complete-multipartite")
    t.add_argument("--chi", action=argparse.BooleanOptionalAction, default=True)
    t.set_defaults(func=cmd_table)

    f = sub.add_parser("fuzz", parents=[common, fuzz_opts], help="randomised inequality campaigns")
    f.add_argument("target", choices=tuple(FUZZ_DEFAULTS))
    f.add_argument("--exhaustive", type=int, default=6, help="exhaustive sweep up to this many vertices")
    f.set_defaults(func=cmd_fuzz)

    e = sub.add_parser("explore", parents=[common, fuzz_opts], help="rank near-equality instances")
    e.add_argument("--top", type=int, default=10)
    e.set_defaults(func=cmd_explore)
    return p


def _inputs(args) -> dict:
    skip = {"func", "format", "timing", "command"}
    out = {}
    for k, v in sorted(vars(args).items()):
        if k not in skip:
            out[k] = list(v) if isinstance(v, tuple) else v
    return out


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        results, code = args.func(args)
    except (GraphParseError, UsageError, OSError) as exc:
        print(f"chromspec {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    doc = {
        "schema_version": SCHEMA_VERSION,
        "command": args.command,
        "inputs": _inputs(args),
        "results": results,
        "timing": round(time.perf_counter() - start, 3) if args.timing else None,
    }
    sys.stdout.write(render(doc, args.format))
    return code


if __name__ == "__main__":
    sys.exit(main())
