"""Command-line interface.

Exit codes: 0 success, 1 claim mismatch (paper-suite), 2 usage or parse
error, 3 solver failure (partial report still printed), 4 resource limit.
"""

from __future__ import annotations

import argparse
import logging
import sys
import time
from pathlib import Path

from . import __version__
from .errors import InvalidParameter, ParseError, ResourceLimit
from .graph import (
    complement,
    format_graph,
    make_circulant,
    make_cycle,
    make_prism,
    make_shrikhande_complement,
    or_product,
    read_graph,
)
from .invariants import bounds_report
from .report import ReportDocument, bounds_document, format_bounds_text, witness_json
from .scenario import BUILTINS, Scenario, builtin, exclusivity_graph, format_scenario, read_scenario
from .structure import DEFAULT_BUDGET, find_induced, odd_patterns

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_SOLVER, EXIT_RESOURCE = 0, 1, 2, 3, 4

log = logging.getLogger("exclusivity")


class UsageError(Exception):
    pass


def _emit(text: str, out: str | None):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def load_input(spec: str):
    """Return (graph, scenario-or-None) for a graph file, a .scn file or ``builtin:NAME``."""
    if spec.startswith("builtin:"):
        s = builtin(spec.split(":", 1)[1])
        return exclusivity_graph(s)[0], s
    path = Path(spec)
    if not path.exists():
        raise UsageError(f"no such file: {spec}")
    if path.suffix == ".scn":
        s = read_scenario(path)
        return exclusivity_graph(s)[0], s
    return read_graph(path), None


# -- gen ----------------------------------------------------------------------

def cmd_gen(args) -> int:
    p = args.params
    name = args.name
    try:
        if name == "cycle":
            _need(p, 1, "gen cycle N")
            g = make_cycle(int(p[0]))
        elif name == "circulant":
            if len(p) < 2:
                raise UsageError("usage: gen circulant N D1 [D2 ...]")
            g = make_circulant(int(p[0]), {int(d) for d in p[1:]})
        elif name == "prism":
            _need(p, 0, "gen prism")
            g = make_prism()
        elif name == "shrikhande-complement":
            _need(p, 0, "gen shrikhande-complement")
            g = make_shrikhande_complement()
        elif name == "complement-of":
            _need(p, 1, "gen complement-of FILE")
            g = complement(load_input(p[0])[0])
        elif name == "or-product":
            _need(p, 2, "gen or-product A B")
            g = or_product(load_input(p[0])[0], load_input(p[1])[0])
        else:
            raise UsageError(f"unknown generator {name!r}")
    except ValueError as exc:
        if isinstance(exc, (InvalidParameter, ParseError)):
            raise
        raise UsageError(f"bad parameter: {exc}") from None
    _emit(format_graph(g, f"{name} {' '.join(p)}".strip()), args.out)
    return EXIT_OK


def _need(params, count, usage):
    if len(params) != count:
        raise UsageError(f"usage: {usage}")


def cmd_scenario(args) -> int:
    _emit(format_scenario(builtin(args.name)), args.out)
    return EXIT_OK


# -- bounds -------------------------------------------------------------------

def cmd_bounds(args) -> int:
    g, scenario = load_input(args.input)
    gamma = None
    if args.gamma == "contexts":
        if scenario is None:
            raise UsageError("--gamma contexts needs a scenario (.scn or builtin:NAME) input")
        gamma = exclusivity_graph(scenario)[1]
    rep = bounds_report(g, gamma, args.tol)
    doc = bounds_document(args.input, rep)
    _emit(doc.to_json() if args.json else format_bounds_text(doc), args.out)
    if doc.status == "solver-failure":
        return EXIT_SOLVER
    if doc.status == "resource-limit":
        return EXIT_RESOURCE
    return EXIT_OK


# -- find ---------------------------------------------------------------------

def _patterns(name: str, max_m: int):
    key = name.lower()
    if key == "odd":
        return list(odd_patterns(max_m))
    for prefix, anti in (("anti-c", True), ("c", False)):
        if key.startswith(prefix) and key[len(prefix):].isdigit():
            m = int(key[len(prefix):])
            cyc = make_cycle(m)
            return [(name, complement(cyc) if anti else cyc)]
    path = Path(name)
    if path.exists():
        return [(path.name, read_graph(path))]
    raise UsageError(f"unknown pattern {name!r}: use cN, anti-cN, odd or a graph file")


def cmd_find(args) -> int:
    host, _ = load_input(args.input)
    patterns = _patterns(args.pattern, args.max_m)
    witnesses = []
    status = "none found (search exhausted)"
    code = EXIT_OK
    t0 = time.perf_counter()
    try:
        for name, pat in patterns:
            w = find_induced(host, pat, name, args.budget)
            if w is not None:
                if not w.verify(host, pat):
                    raise RuntimeError(f"witness for {name} failed re-verification")
                witnesses.append(witness_json(w))
        if witnesses:
            status = "found"
    except ResourceLimit as exc:
        status = f"budget exhausted: {exc}"
        code = EXIT_RESOURCE
    doc = ReportDocument(
        input_descriptor=f"{args.input} pattern={args.pattern}",
        graph_stats={"n": host.n, "edges": host.num_edges},
        witnesses=witnesses,
        status=status,
        timing={"search": round((time.perf_counter() - t0) * 1000, 3)},
    )
    if args.json:
        text = doc.to_json()
    else:
        lines = [f"host     n={host.n} edges={host.num_edges}"]
        lines += [f"witness  {w['pattern']}: {w['vertices']}" for w in witnesses]
        lines.append(f"status   {status}")
        text = "\n".join(lines)
    _emit(text, args.out)
    return code


# -- paper-suite --------------------------------------------------------------

def cmd_paper_suite(args) -> int:
    from .suite import SuiteContext, format_claims, run_suite, spot_data

    overrides: dict[str, Scenario] = {}
    if args.scenario_dir:
        for name in BUILTINS:
            f = Path(args.scenario_dir) / f"{name}.scn"
            if f.exists():
                overrides[name] = read_scenario(f)
    ctx = SuiteContext(tol_floor=args.tol or 0.0, scenarios=overrides)
    only = set(args.only.split(",")) if args.only else None
    claims = run_suite(ctx, only)
    spot = [] if args.skip_spot else spot_data(ctx)
    ok = all(c.passed for c in claims)
    doc = ReportDocument(
        input_descriptor="paper-suite" + (f" overrides={sorted(overrides)}" if overrides else ""),
        graph_stats={},
        claims=[c.as_dict() for c in claims],
        bounds={"spot_data": spot} if spot else None,
        status="all claims reproduced" if ok else "claim mismatch: " + ",".join(c.key for c in claims if not c.passed),
        timing={f"claim_{c.key}": round(c.seconds * 1000, 3) for c in claims},
    )
    if args.json:
        text = doc.to_json()
    else:
        text = format_claims(claims)
        if spot:
            text += "\n\nspot data (not judged): theta vs alpha* for odd antihole powers"
            for row in spot:
                lo, up = row["theta"]
                text += f"\n  {row['graph']:<11} n={row['n']:<3} theta in [{lo:.8f}, {up:.8f}]  alpha*={row['alpha_star']}  ratio={row['ratio']:.6f}"
    _emit(text, args.out)
    return EXIT_OK if ok else EXIT_MISMATCH


# -- entry point --------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="exclusivity", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write a named graph in the graph text format")
    p.add_argument("name", choices=["cycle", "circulant", "prism", "shrikhande-complement", "complement-of", "or-product"])
    p.add_argument("params", nargs="*")
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("scenario", help="write a builtin scenario in the .scn format")
    p.add_argument("name", choices=sorted(BUILTINS))
    p.add_argument("--out")
    p.set_defaults(func=cmd_scenario)

    p = sub.add_parser("bounds", help="alpha, theta and alpha* for a graph or scenario")
    p.add_argument("input", help="graph file, .scn file or builtin:NAME")
    p.add_argument("--tol", type=float, default=None)
    p.add_argument("--gamma", choices=["cliques", "contexts"], default="cliques")
    p.add_argument("--json", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("find", help="search for an induced pattern")
    p.add_argument("input")
    p.add_argument("pattern", help="c5, c7, anti-c5, anti-c7, cN, anti-cN, odd, or a graph file")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--max-m", type=int, default=7, help="largest odd cycle for pattern 'odd'")
    p.add_argument("--json", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_find)

    p = sub.add_parser("paper-suite", help="reproduce every numeric claim and print a pass/fail table")
    p.add_argument("--tol", type=float, default=None, help="floor applied to every claim tolerance")
    p.add_argument("--scenario-dir", help="directory of <builtin>.scn files replacing the builtins")
    p.add_argument("--only", help="comma-separated claim numbers")
    p.add_argument("--skip-spot", action="store_true", help="skip the odd-antihole spot data")
    p.add_argument("--json", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_paper_suite)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(name)s: %(message)s")
    try:
        return args.func(args)
    except (UsageError, ParseError, InvalidParameter) as exc:
        print(f"exclusivity {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimit as exc:
        print(f"exclusivity {args.command}: resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
