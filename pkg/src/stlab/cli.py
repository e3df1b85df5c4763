"""``stlab`` command line.

Exit codes: 0 pass (or plain success), 1 fail, 2 unknown, 3 usage or parse error.
Every option with a config key can be preset through an ``STLAB_<KEY>``
environment variable; an explicit flag wins over the environment.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction

from stlab.enumerate import extremal_edge_scan, extremal_q_scan
from stlab.families import FamilyError, FamilySpec, build
from stlab.forbidden import DEFAULT_NODE_BUDGET, LinearForest, SearchBudgetExceeded, contains_linear_forest
from stlab.graph import Graph
from stlab.hosts import HostFamily
from stlab.spectral import ConvergenceError, charpoly, largest_root, q_exact, q_matrix, q_max
from stlab.spectral.poly import format_poly
from stlab.spectral.power import DEFAULT_MAX_ITER, DEFAULT_TOL
from stlab.verify import CLAIMS, SCHEMA, merge_status, parse_grid, run_claim
from stlab.verify.report import EXIT_CODES

EXIT_USAGE = 3


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class Config:
    tolerance: Fraction = DEFAULT_TOL
    max_iter: int = DEFAULT_MAX_ITER
    node_budget: int = DEFAULT_NODE_BUDGET
    workers: int = 1
    seed: int = 0
    format: str = "json"
    timing: bool = True

    def __post_init__(self):
        if self.tolerance <= 0 or self.max_iter <= 0 or self.node_budget <= 0 or self.workers <= 0:
            raise UsageError("tolerance, iteration cap, node budget and workers must be positive")
        if self.format not in ("json", "csv", "g6"):
            raise UsageError(f"unknown output format {self.format!r}")


_ENV = {
    "tolerance": ("STLAB_TOL", Fraction),
    "max_iter": ("STLAB_MAX_ITER", int),
    "node_budget": ("STLAB_NODE_BUDGET", int),
    "workers": ("STLAB_WORKERS", int),
    "seed": ("STLAB_SEED", int),
    "format": ("STLAB_FORMAT", str),
    "timing": ("STLAB_TIMING", lambda s: s.strip().lower() not in ("0", "false", "no", "off")),
}


def _config(args, environ) -> Config:
    values = {}
    for key, (var, conv) in _ENV.items():
        flag = getattr(args, key, None)
        raw = flag if flag is not None else environ.get(var)
        if raw is None:
            continue
        try:
            values[key] = conv(raw) if isinstance(raw, str) else raw
        except (ValueError, ZeroDivisionError) as exc:
            raise UsageError(f"bad value for {key}: {raw!r}") from exc
    return Config(**values)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--tol", dest="tolerance", help="enclosure width target (fraction or decimal)")
    common.add_argument("--max-iter", dest="max_iter", help="power iteration cap")
    common.add_argument("--node-budget", dest="node_budget", help="containment search node cap")
    common.add_argument("--workers", help="parallel shards for scans")
    common.add_argument("--seed", help="random seed")
    common.add_argument("--format", choices=("json", "csv", "g6"))
    common.add_argument("--no-timing", dest="timing", action="store_const", const="0",
                        help="omit wall-clock fields so output is byte-comparable")

    p = _Parser(prog="stlab", description="Signless Laplacian and Turán toolkit for linear forests.")
    sub = p.add_subparsers(dest="command", required=True)

    fam = sub.add_parser("family", parents=[common], help="construct family members")
    fam_sub = fam.add_subparsers(dest="action", required=True)
    fb = fam_sub.add_parser("build", parents=[common], help="print the graph6 of a family spec")
    fb.add_argument("spec")

    q = sub.add_parser("q", parents=[common], help="signless Laplacian spectral radius")
    q.add_argument("graph6", nargs="?", help="graph6 string, or - for stdin")
    q.add_argument("--family")
    q.add_argument("--exact", action="store_true", help="characteristic polynomial and isolating interval")

    fo = sub.add_parser("forest", parents=[common], help="linear forest containment")
    fo_sub = fo.add_subparsers(dest="action", required=True)
    fc = fo_sub.add_parser("check", parents=[common])
    fc.add_argument("graph6")
    fc.add_argument("--forest", required=True)

    ho = sub.add_parser("host", parents=[common], help="embedding into extremal hosts")
    ho_sub = ho.add_subparsers(dest="action", required=True)
    he = ho_sub.add_parser("embed", parents=[common])
    he.add_argument("graph6")
    he.add_argument("--host", required=True)

    sc = sub.add_parser("scan", parents=[common], help="exhaustive extremal scans, n <= 9")
    sc.add_argument("objective", choices=("edges", "q"))
    sc.add_argument("--forest", required=True)
    sc.add_argument("--n", type=int, required=True)

    ve = sub.add_parser("verify", parents=[common], help="run claim checks")
    ve.add_argument("claims", nargs="+", help="claim ids, optionally followed by key=range tokens")
    ve.add_argument("--grid", action="append", default=[], help='e.g. "h=2..5 n=100,500"')
    ve.add_argument("--relaxed", action="store_true", help="allow points outside a claim's hypothesis")
    return p


def _read_graph(text: str | None) -> Graph:
    if text is None or text == "-":
        text = sys.stdin.readline()
    text = text.strip()
    if not text:
        raise UsageError("no graph6 input")
    try:
        return Graph.from_graph6(text)
    except ValueError as exc:
        raise UsageError(f"bad graph6: {exc}") from exc


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _frac(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)


def _cmd_family(args, cfg: Config) -> tuple[str, int]:
    spec = FamilySpec.parse(args.spec)
    return build(spec).to_graph6() + "\n", 0


def _cmd_q(args, cfg: Config) -> tuple[str, int]:
    if (args.family is None) == (args.graph6 is None):
        raise UsageError("give exactly one of a graph6 argument or --family")
    out = {"schema": SCHEMA}
    if args.family is not None:
        spec = FamilySpec.parse(args.family)
        out["family"] = str(spec)
        if args.exact:
            ex = q_exact(spec, cfg.tolerance)
            out |= {"kind": "exact", **ex.to_json(), "poly_text": format_poly(ex.poly)}
            return _dump(out), 0
        g = build(spec)
    else:
        g = _read_graph(args.graph6)
        out["graph6"] = g.to_graph6()
        if args.exact:
            poly = charpoly(q_matrix(g))
            root = largest_root(poly, cfg.tolerance)
            out |= {"kind": "exact", **root.to_json(), "poly_text": format_poly(poly)}
            return _dump(out), 0
    try:
        enc = q_max(g, cfg.tolerance, cfg.max_iter)
    except ConvergenceError as exc:
        enc, code = exc.best, EXIT_CODES["unknown"]
    else:
        code = 0
    out |= {"kind": "enclosure", "lower": _frac(enc.lower), "upper": _frac(enc.upper), "approx": enc.midpoint,
            "converged": code == 0, "iterations": enc.iterations}
    return _dump(out), code


def _cmd_forest(args, cfg: Config) -> tuple[str, int]:
    forest = LinearForest.parse(args.forest)
    g = _read_graph(args.graph6)
    try:
        emb = contains_linear_forest(g, forest, cfg.node_budget)
    except SearchBudgetExceeded as exc:
        return _dump({"schema": SCHEMA, "forest": str(forest), "result": "unknown", "nodes": exc.nodes}), EXIT_CODES["unknown"]
    if emb is None:
        return "absent\n", 0
    return _dump({"schema": SCHEMA, "forest": str(forest), "embedding": emb.to_json()}), 0


def _cmd_host(args, cfg: Config) -> tuple[str, int]:
    host = HostFamily.parse(args.host)
    g = _read_graph(args.graph6)
    w = host.embed(g)
    if w is None:
        return "none\n", 0
    return _dump({"schema": SCHEMA, **w.to_json()}), 0


def _cmd_scan(args, cfg: Config) -> tuple[str, int]:
    forest = LinearForest.parse(args.forest)
    if args.objective == "edges":
        res = extremal_edge_scan(forest, args.n, cfg.workers)
    else:
        res = extremal_q_scan(forest, args.n, cfg.tolerance, cfg.workers)
    if cfg.format == "g6":
        return "".join(s + "\n" for s in res.argmax), 0
    return _dump({"schema": SCHEMA, **res.to_json()}), 0


def _cmd_verify(args, cfg: Config) -> tuple[str, int]:
    claims = [c for c in args.claims if "=" not in c]
    tokens = [c for c in args.claims if "=" in c] + args.grid
    if not claims:
        raise UsageError("no claim id given")
    unknown = [c for c in claims if c not in CLAIMS]
    if unknown:
        raise UsageError(f"unknown claim {unknown[0]!r}; known: {', '.join(sorted(CLAIMS))}")
    try:
        grid = parse_grid(tokens)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    reports = [run_claim(c, grid, args.relaxed, cfg.seed) for c in claims]
    status = merge_status(reports)
    if cfg.format == "csv":
        text = "".join(r.to_csv() if i == 0 else r.to_csv().split("\n", 1)[1] for i, r in enumerate(reports))
    elif len(reports) == 1:
        text = reports[0].dumps(cfg.timing) + "\n"
    else:
        text = _dump({"schema": SCHEMA, "status": status, "reports": [r.to_json(cfg.timing) for r in reports]})
    return text, EXIT_CODES[status]


_COMMANDS = {
    "family": _cmd_family,
    "q": _cmd_q,
    "forest": _cmd_forest,
    "host": _cmd_host,
    "scan": _cmd_scan,
    "verify": _cmd_verify,
}


def main(argv=None, environ=None) -> int:
    environ = os.environ if environ is None else environ
    try:
        args = _parser().parse_args(argv)
        cfg = _config(args, environ)
        text, code = _COMMANDS[args.command](args, cfg)
    except (UsageError, FamilyError, ValueError, KeyError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"stlab: error: {msg}", file=sys.stderr)
        return EXIT_USAGE
    # single write once everything is computed
    try:
        sys.stdout.write(text)
        sys.stdout.flush()
    except BrokenPipeError:
        # reader went away (e.g. piped into head); nothing more to report
        sys.stderr.close()
    return code


if __name__ == "__main__":
    sys.exit(main())
