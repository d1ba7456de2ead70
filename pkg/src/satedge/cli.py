"""Command-line entry point: construct / count / pack / search / formulas / verify.

Machine-readable results go to stdout (graph6, JSON, or CSV), diagnostics to
stderr.  Exit codes: 0 success, 1 check failure, 2 usage or input error,
3 budget exhaustion.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, replace
from typing import Optional

from .graph import (
    DEFAULT_VERTEX_CAP,
    Graph,
    bits,
    format_edge_list,
    graph6_decode,
    graph6_encode,
    parse_edge_list,
)
from .constructions import (
    TrimError,
    base_graph,
    h0,
    h1,
    h2,
    trim_to_target,
    turan_graph,
    turan_number,
)
from .saturation import CliquePresentError, count_saturating
from .packing import (
    DEFAULT_PACKING_BUDGET,
    BudgetExceededError,
    analyze,
    max_packing,
    refine_packing,
)
from .search import (
    DEFAULT_SEARCH_BUDGET,
    InfeasibleError,
    min_saturating,
    min_saturating_at_jump,
    min_saturating_constrained,
)
from .formulas import formula_table
from .verify import failures, reports_to_csv, reports_to_json, verify_all_small


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class Config:
    search_budget: int = DEFAULT_SEARCH_BUDGET
    pack_budget: int = DEFAULT_PACKING_BUDGET
    threads: int = 1
    vertex_cap: int = DEFAULT_VERTEX_CAP
    output_format: str = "json"
    emit_witnesses: bool = False


_CONFIG_PARSERS = {
    "search_budget": int,
    "pack_budget": int,
    "threads": int,
    "vertex_cap": int,
    "output_format": str,
    "emit_witnesses": lambda s: s.lower() in ("1", "true", "yes"),
}


def load_config(path: Optional[str], env: Optional[dict] = None) -> Config:
    """Key=value file plus the SATEDGE_THREADS environment fallback."""
    env = os.environ if env is None else env
    values: dict = {}
    if path is not None:
        with open(path, encoding="utf-8") as handle:
            for lineno, raw in enumerate(handle, 1):
                line = raw.split("#", 1)[0].strip()
                if not line:
                    continue
                if "=" not in line:
                    raise ConfigError(f"{path}:{lineno}: expected key=value")
                key, _, value = line.partition("=")
                key = key.strip()
                if key not in _CONFIG_PARSERS:
                    raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
                try:
                    values[key] = _CONFIG_PARSERS[key](value.strip())
                except ValueError as exc:
                    raise ConfigError(f"{path}:{lineno}: bad value for {key}: {exc}") from exc
    cfg = Config(**values)
    if "threads" not in values and env.get("SATEDGE_THREADS"):
        try:
            cfg = replace(cfg, threads=int(env["SATEDGE_THREADS"]))
        except ValueError as exc:
            raise ConfigError(f"SATEDGE_THREADS: {exc}") from exc
    if cfg.output_format not in ("json", "csv", "text"):
        raise ConfigError(f"output_format must be json, csv, or text, not {cfg.output_format!r}")
    if cfg.threads < 1 or cfg.search_budget < 1 or cfg.pack_budget < 1 or cfg.vertex_cap < 1:
        raise ConfigError("budgets, threads, and vertex_cap must be positive")
    return cfg


def _read_graph(path: str, cap: int) -> Graph:
    """Auto-detects graph6 vs 'n m' edge-list input by the first line."""
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, encoding="utf-8") as handle:
            text = handle.read()
    stripped = text.strip()
    if not stripped:
        raise ValueError("empty graph input")
    first = stripped.splitlines()[0].split()
    if len(first) == 2 and all(tok.lstrip("-").isdigit() for tok in first):
        return parse_edge_list(stripped, cap=cap)
    return graph6_decode(stripped.splitlines()[0], cap=cap)


def _emit_graph(g: Graph, fmt: str):
    if fmt == "graph6":
        print(graph6_encode(g))
    elif fmt == "edges":
        print(format_edge_list(g), end="")
    else:
        raise ValueError(f"unknown graph format {fmt!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="satedge", description="clique-saturation toolkit")
    parser.add_argument("--config", help="key=value config file")
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build a named construction")
    c.add_argument("name", choices=["h0", "h1", "h2", "base", "turan", "trim"])
    c.add_argument("--p", type=int, help="clique parameter")
    c.add_argument("--x", type=int, default=1, help="scale factor")
    c.add_argument("--y", type=int, default=0, help="vertex remainder")
    c.add_argument("--n", type=int, help="vertex count (turan)")
    c.add_argument("--r", type=int, help="part count (turan)")
    c.add_argument("--target", type=int, help="edge target (trim); default extremal+1")
    c.add_argument("--format", default="graph6", choices=["graph6", "edges"])
    c.add_argument("--parts", action="store_true", help="emit the part map as JSON instead of the graph")

    k = sub.add_parser("count", help="count saturating edges")
    k.add_argument("--p", type=int, required=True)
    k.add_argument("--in", dest="infile", default="-", help="graph file or - for stdin")
    k.add_argument("--edges", action="store_true", help="list the saturating pairs")
    k.add_argument("--threads", type=int)

    pk = sub.add_parser("pack", help="maximum disjoint clique packing")
    pk.add_argument("--p", type=int, required=True)
    pk.add_argument("--in", dest="infile", default="-")
    pk.add_argument("--refine", action="store_true", help="drive remainder edges to a local maximum")
    pk.add_argument("--analyze", type=int, metavar="INDEX", help="also emit the partition analysis of one clique")
    pk.add_argument("--budget", type=int)
    pk.add_argument("--threads", type=int)

    s = sub.add_parser("search", help="exhaustive minimum saturating count")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--e", type=int)
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--at-jump", action="store_true", help="e = extremal count + 1, forbidding K_{p+1}")
    s.add_argument("--constrained", action="store_true", help="extremal count, balanced multipartite excluded")
    s.add_argument("--budget", type=int)
    s.add_argument("--threads", type=int)
    s.add_argument("--emit-witnesses", action="store_true")

    f = sub.add_parser("formulas", help="closed-form tables")
    fsub = f.add_subparsers(dest="formulas_command", required=True)
    t = fsub.add_parser("table", help="CSV of constants per clique parameter")
    t.add_argument("--p-min", type=int, default=3)
    t.add_argument("--p-max", type=int, required=True)

    v = sub.add_parser("verify", help="run the verification harness")
    v.add_argument("--small", action="store_true", help="desk-scale default suite (the only scope)")
    v.add_argument("--seed", type=int, default=7)
    v.add_argument("--format", choices=["json", "csv"], help="report format (default from config)")
    v.add_argument("--threads", type=int)
    return parser


def _threads(args, cfg: Config) -> int:
    flag = getattr(args, "threads", None)
    if flag is not None:
        if flag < 1:
            raise ConfigError("threads must be positive")
        return flag
    return cfg.threads


def _cmd_construct(args, cfg: Config) -> int:
    if args.name == "turan":
        if args.n is None or args.r is None:
            raise ConfigError("turan needs --n and --r")
        g = turan_graph(args.n, args.r)
        parts = None
    elif args.name == "base":
        if args.p is None:
            raise ConfigError("base needs --p")
        g = base_graph(args.p)
        parts = None
    else:
        if args.p is None:
            raise ConfigError(f"{args.name} needs --p")
        if args.name == "h0":
            bu = h0(args.p, args.x)
        elif args.name == "h1":
            bu = h1(args.p, args.x, args.y)
        else:
            bu = h2(args.p, args.x, args.y)
        g, parts = bu.graph, bu.parts
        if args.name == "trim":
            target = args.target
            if target is None:
                target = turan_number(bu.graph.n, args.p) + 1
            g = trim_to_target(bu, target)
    if args.parts:
        if parts is None:
            raise ConfigError(f"{args.name} has no part map")
        print(json.dumps([sorted(bits(mask)) for mask in parts]))
    else:
        _emit_graph(g, args.format)
    return 0


def _cmd_count(args, cfg: Config) -> int:
    g = _read_graph(args.infile, cfg.vertex_cap)
    report = count_saturating(g, args.p, edges=args.edges, threads=_threads(args, cfg))
    print(report.to_json())
    return 0


def _cmd_pack(args, cfg: Config) -> int:
    g = _read_graph(args.infile, cfg.vertex_cap)
    budget = args.budget if args.budget is not None else cfg.pack_budget
    packing = max_packing(g, args.p, budget=budget)
    if args.refine:
        packing = refine_packing(packing)
    print(packing.to_json())
    if args.analyze is not None:
        if not 0 <= args.analyze < packing.size:
            raise ConfigError(f"--analyze index out of range (packing has {packing.size} cliques)")
        an = analyze(packing, args.analyze)
        print(
            json.dumps(
                {
                    "clique": list(an.clique),
                    "z": [str(z) for z in an.z],
                    "A": [sorted(bits(a)) for a in an.A],
                    "r": str(an.r),
                    "ell1": an.ell1,
                    "ell2": an.ell2,
                }
            )
        )
    return 0


def _cmd_search(args, cfg: Config) -> int:
    budget = args.budget if args.budget is not None else cfg.search_budget
    threads = _threads(args, cfg)
    if args.at_jump and args.constrained:
        raise ConfigError("--at-jump and --constrained are mutually exclusive")
    if args.at_jump:
        result = min_saturating_at_jump(args.n, args.p, budget=budget, threads=threads)
    elif args.constrained:
        result = min_saturating_constrained(args.n, args.p, budget=budget, threads=threads)
    else:
        if args.e is None:
            raise ConfigError("search needs --e (or --at-jump / --constrained)")
        result = min_saturating(args.n, args.e, args.p, budget=budget, threads=threads)
    payload = result.to_dict()
    if not (args.emit_witnesses or cfg.emit_witnesses):
        payload["witnesses"] = []
    print(json.dumps(payload))
    return 0 if result.exact else 3


def _cmd_formulas(args, cfg: Config) -> int:
    rows = formula_table(args.p_min, args.p_max)
    print("p,leading_coefficient,threshold_low,threshold_high,poly_f,poly_g")
    for row in rows:
        cells = [str(row["p"])] + [
            str(row[k]) for k in ("leading_coefficient", "threshold_low", "threshold_high", "poly_f", "poly_g")
        ]
        print(",".join(cells))
    return 0


def _cmd_verify(args, cfg: Config) -> int:
    reports = verify_all_small(seed=args.seed)
    fmt = args.format or ("csv" if cfg.output_format == "csv" else "json")
    if fmt == "csv":
        print(reports_to_csv(reports), end="")
    else:
        print(reports_to_json(reports))
    bad = failures(reports)
    if bad:
        for rep in bad:
            print(f"FAIL {rep.check_id} {rep.params}", file=sys.stderr)
        return 1
    return 0


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = load_config(args.config)
        if args.command == "construct":
            return _cmd_construct(args, cfg)
        if args.command == "count":
            return _cmd_count(args, cfg)
        if args.command == "pack":
            return _cmd_pack(args, cfg)
        if args.command == "search":
            return _cmd_search(args, cfg)
        if args.command == "formulas":
            return _cmd_formulas(args, cfg)
        if args.command == "verify":
            return _cmd_verify(args, cfg)
        parser.error(f"unknown command {args.command!r}")
    except BudgetExceededError as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return 3
    except (CliquePresentError, TrimError) as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return 1
    except (ConfigError, InfeasibleError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 2


if __name__ == "__main__":
    sys.exit(main())
