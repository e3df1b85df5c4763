"""One runnable check per claim id.

Every ``verify_*`` function returns a :class:`Report`. Hypotheses of the
claims (order thresholds and the like) are preconditions: a grid point
outside them raises :class:`PreconditionError`, unless ``relaxed`` is set,
in which case the point is still evaluated but its verdict is demoted to
``observed``.
"""

from __future__ import annotations

import math
import random
import re
import time
from collections import Counter
from collections.abc import Callable
from fractions import Fraction

from stlab.enumerate import extremal_edge_scan, gen_all, sample_graphs
from stlab.families import FamilySpec, build, turan_edge_bound
from stlab.forbidden import DEFAULT_NODE_BUDGET, LinearForest, SearchBudgetExceeded, contains_k_p3
from stlab.graph import Graph
from stlab.hosts import PreconditionError, classify_2p3_free, stability_hosts
from stlab.spectral import (
    Order,
    certified_compare,
    edge_degree_bound,
    f_chain,
    merris_bound,
    q_exact,
    q_max,
    s_chain,
    size_order_bound,
)
from stlab.verify.report import FAIL, OBSERVED, PASS, UNKNOWN, Instance, Report

Grid = dict[str, list[int]]


# -- grid parsing ---------------------------------------------------------------


def parse_grid(tokens) -> Grid:
    """Parse ``["h=2..5", "n=100,200", "k=2", "n=28..128:10"]`` into lists of ints."""
    grid: Grid = {}
    for tok in tokens:
        for part in re.split(r"\s+|;", tok.strip()):
            if not part:
                continue
            key, sep, val = part.partition("=")
            if not sep or not key:
                raise ValueError(f"grid entry {part!r} is not key=value")
            values: list[int] = []
            for item in val.split(","):
                m = re.fullmatch(r"(-?\d+)(?:\.\.(-?\d+)(?::(\d+))?)?", item)
                if not m:
                    raise ValueError(f"bad grid value {item!r} for {key}")
                a = int(m.group(1))
                if m.group(2) is None:
                    values.append(a)
                else:
                    b, step = int(m.group(2)), int(m.group(3) or 1)
                    if step < 1:
                        raise ValueError("grid step must be positive")
                    values.extend(range(a, b + 1, step))
            grid[key.strip()] = values
    return grid


def _one(grid: Grid, key: str, default: int) -> int:
    vals = grid.get(key, [default])
    if len(vals) != 1:
        raise ValueError(f"grid key {key!r} takes a single value")
    return vals[0]


def _settle(report: Report, params: dict, outcome: bool | None, detail: dict, in_hyp: bool, graph6=None, recheck=None):
    if outcome is None:
        verdict = UNKNOWN
    else:
        verdict = PASS if outcome else FAIL
    if not in_hyp:
        detail = {**detail, "outcome": verdict, "outside_hypothesis": True}
        verdict = OBSERVED
    return report.add(Instance(params, verdict, detail, graph6, recheck if verdict == FAIL else None))


def _require(in_hyp: bool, relaxed: bool, what: str) -> None:
    if not in_hyp and not relaxed:
        raise PreconditionError(f"{what}; use relaxed mode to explore outside the hypothesis")


def _timed(fn):
    def wrapper(*args, **kwargs):
        t = time.perf_counter()
        report = fn(*args, **kwargs)
        report.timing["wall_seconds"] = round(time.perf_counter() - t, 3)
        return report

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


def _cert_detail(cert) -> dict:
    return {"order": cert.order.value, "margin": cert.to_json()["margin"], "margin_approx": float(cert.margin),
            "certificate": cert.to_json()}


# -- edge Turán numbers for k·P3 -------------------------------------------------------


@_timed
def verify_turan_kp3(k: int = 2, n_values=range(1, 10), relaxed: bool = False) -> Report:
    """Exhaustive max-edge scans against the piecewise Turán table and its extremal graphs."""
    n_values = list(n_values)
    _require(k in (2, 3), relaxed, "k must be 2 or 3")
    for n in n_values:
        if not 1 <= n <= 9:
            raise PreconditionError("exhaustive scans need 1 <= n <= 9")
    report = Report("thm:turan-kp3", {"k": k, "n": n_values})
    forest = LinearForest.kp3(k)
    for n in n_values:
        scan = extremal_edge_scan(forest, n)
        tb = turan_edge_bound(forest, n)
        expected = sorted({build(s).canonical_form().to_graph6() for s in tb.extremal})
        ok = scan.best == tb.bound and list(scan.argmax) == expected
        detail = {
            "case": tb.case,
            "bound": tb.bound,
            "scan_best": scan.best,
            "argmax": list(scan.argmax),
            "expected_extremal": [str(s) for s in tb.extremal],
            "expected_graph6": expected,
            "feasible_graphs": scan.feasible,
        }
        _settle(report, {"n": n}, ok, detail, k in (2, 3), graph6=None if ok else (scan.argmax[0] if scan.argmax else None))
    return report


# -- stability ------------------------------------------------------------------------


def stability_threshold(k: int) -> int:
    """Least order allowed by the stability hypothesis ``n >= 11k²/2 + 2k - 3/2``."""
    return math.ceil(Fraction(11 * k * k, 2) + 2 * k - Fraction(3, 2))


def _stability_check(g: Graph, k: int, budget: int):
    """``("containment", emb)``, ``("host", witness)`` or ``(None, None)``."""
    emb = contains_k_p3(g, k, budget)
    if emb is not None:
        return "containment", emb
    for host in stability_hosts(k):
        w = host.embed(g)
        if w is not None and w.verify(g):
            return "host", w
    return None, None


def _random_subgraph(g: Graph, m: int, rng: random.Random) -> Graph:
    edges = rng.sample(g.edges(), m)
    perm = list(range(g.n))
    rng.shuffle(perm)
    return Graph.from_edges(g.n, edges).relabel(perm)


def _stability_adversaries(k: int, n: int, threshold: int, rng: random.Random, per_host: int):
    hosts = [FamilySpec.F(n, k)] + [FamilySpec.F_attach(n, k, h) for h in ("K4", "K5", "N6")]
    for spec in hosts:
        g = build(spec)
        yield f"host:{spec}", g
        for i in range(per_host):
            if g.edge_count > threshold:
                m = rng.randint(threshold + 1, g.edge_count)
                yield f"host-subgraph:{spec}#{i}", _random_subgraph(g, m, rng)
    base = build(FamilySpec.F(n, k))
    u, v = k - 1, k + 1  # endpoints of two different matching pairs
    yield f"planted:{FamilySpec.F(n, k)}+({u},{v})", base.add_edge(u, v)


@_timed
def verify_stability(k: int = 2, n: int = 30, samples: int = 100_000, seed: int = 0, relaxed: bool = False,
                     node_budget: int = DEFAULT_NODE_BUDGET, per_host: int = 50) -> Report:
    """Every sampled graph above the edge threshold contains k·P3 or embeds in a listed host."""
    in_hyp = k >= 2 and n >= stability_threshold(k)
    _require(in_hyp, relaxed, f"stability needs k >= 2 and n >= {stability_threshold(k)}")
    threshold = math.floor(Fraction(2 * k - 3, 2) * n)  # e(G) must exceed (k - 3/2) n
    report = Report("thm:stability", {"k": k, "n": n, "samples": samples, "seed": seed, "edge_min": threshold + 1})
    branches: Counter = Counter()
    rng = random.Random(seed ^ 0x5EED)

    def run(label: str, g: Graph, listed: bool):
        if 2 * g.edge_count <= (2 * k - 3) * n:
            report.notes.append(f"{label}: e={g.edge_count} not above threshold, skipped")
            return
        try:
            kind, wit = _stability_check(g, k, node_budget)
        except SearchBudgetExceeded as exc:
            branches["unknown"] += 1
            _settle(report, {"source": label}, None, {"nodes": exc.nodes}, in_hyp, g.to_graph6())
            return
        branches[kind or "none"] += 1
        ok = kind is not None
        if listed or not ok:
            detail = {"branch": kind, "e": g.edge_count}
            if kind == "containment":
                detail["embedding"] = wit.to_json()
            elif kind == "host":
                detail["host"] = str(wit.host)
                detail["mapping"] = list(wit.mapping)
            _settle(report, {"source": label}, ok, detail, in_hyp, g.to_graph6(),
                    recheck=lambda g=g: _stability_check(g, k, node_budget)[0] is None)
        elif in_hyp:
            report.unlisted_passes += 1
        else:
            _settle(report, {"source": label}, ok, {"branch": kind}, in_hyp)

    for label, g in _stability_adversaries(k, n, threshold, rng, per_host):
        run(label, g, listed=label.startswith(("host:", "planted:")))
    for i, g in enumerate(sample_graphs(n, threshold + 1, samples, seed)):
        run(f"sample#{i}", g, listed=False)
    report.summary = {"branches": dict(sorted(branches.items())), "hosts": [h.label for h in stability_hosts(k)]}
    return report


# -- exact spectral lemmas --------------------------------------------------------------


def _compare_instance(report: Report, params: dict, a: FamilySpec, b: FamilySpec, want: Order, in_hyp: bool):
    try:
        cert = certified_compare(a, b)
    except RuntimeError as exc:
        return _settle(report, params, None, {"error": str(exc)}, in_hyp)
    ok = cert.order is want and cert.check()
    detail = _cert_detail(cert)
    if ok:
        del detail["certificate"]
        detail["interval_a"] = cert.a.to_json()["interval"]
        detail["interval_b"] = cert.b.to_json()["interval"]
    return _settle(report, {**params, "a": str(a), "b": str(b)}, ok, detail, in_hyp)


def _chain_instance(report: Report, chain, relaxed: bool):
    ok = chain.holds
    data = chain.to_json()
    links = [{k: v for k, v in l.items() if k != "evidence"} | {"margin": l["evidence"].get("margin")} for l in data["links"]]
    _settle(report, chain.params, ok, {"links": links} if ok else {"links": data["links"]}, chain.in_hypothesis)


@_timed
def verify_q_chain(h_values=range(2, 6), n_values=None, relaxed: bool = False) -> Report:
    """q(S+) > q(S) > n+2h-2-2(h²-h)/(n+2h-3) > n+2h-3 for n >= 7h²."""
    h_values = list(h_values)
    report = Report("lem:q-chain", {"h": h_values, "n": list(n_values) if n_values is not None else "7h^2..500"})
    grid = [(h, n) for h in h_values for n in (n_values if n_values is not None else range(7 * h * h, 501))]
    for h, n in grid:
        _require(h >= 2 and n >= 7 * h * h, relaxed, f"chain needs h >= 2 and n >= 7h^2 (h={h}, n={n})")
    for h, n in grid:
        _chain_instance(report, s_chain(h, n), relaxed)
    return report


@_timed
def verify_hn1(n_values=range(28, 129), relaxed: bool = False) -> Report:
    n_values = list(n_values)
    report = Report("lem:hn1", {"n": n_values})
    for n in n_values:
        _require(n >= 28, relaxed, f"needs n >= 28 (n={n})")
    for n in n_values:
        _compare_instance(report, {"n": n}, FamilySpec.H_n1(n), FamilySpec.S(n, 2), Order.LESS, n >= 28)
    return report


@_timed
def verify_L(h_values=range(3, 6), n_values=None, relaxed: bool = False) -> Report:
    """q(L) < q(S_{n,h}) for every decomposition n = t1 h + t2 (h+1) + 1 >= 7h², h >= 3."""
    h_values = list(h_values)
    report = Report("lem:L", {"h": h_values, "n": list(n_values) if n_values is not None else "7h^2..7h^2+30"})
    grid = []
    for h in h_values:
        ns = n_values if n_values is not None else range(7 * h * h, 7 * h * h + 31)
        for n in ns:
            for t2 in range((n - 1) // (h + 1) + 1):
                rest = n - 1 - t2 * (h + 1)
                if rest >= 0 and rest % h == 0:
                    grid.append((h, n, rest // h, t2))
    for h, n, t1, t2 in grid:
        _require(h >= 3 and n >= 7 * h * h, relaxed, f"needs h >= 3 and n >= 7h^2 (h={h}, n={n})")
    for h, n, t1, t2 in grid:
        spec = FamilySpec.L(t1, t2, h)
        inst = _compare_instance(report, {"h": h, "n": n, "t1": t1, "t2": t2}, spec, FamilySpec.S(n, h), Order.LESS,
                                 h >= 3 and n >= 7 * h * h)
        ed = edge_degree_bound(build(spec))
        inst.detail["edge_degree_bound"] = ed
        inst.detail["edge_degree_chain"] = ed <= n + h <= n + 2 * h - 3
    return report


@_timed
def verify_f_bounds(k_values=range(2, 7), n_values=None, numeric_up_to: int = 300, tol=Fraction(1, 10**8),
                    relaxed: bool = False) -> Report:
    """n+2k-5 < q(F_{n,k}) <= larger root of the quadratic, <= n+2k-4 for k >= 3,
    plus agreement of the dense enclosure with the exact root for small n."""
    k_values = list(k_values)
    report = Report("lem:F-bounds", {"k": k_values, "n": list(n_values) if n_values is not None else "2k^2..500",
                                     "numeric_up_to": numeric_up_to})
    grid = [(k, n) for k in k_values for n in (n_values if n_values is not None else range(2 * k * k, 501))]
    for k, n in grid:
        _require(k >= 2 and n >= 2 * k * k, relaxed, f"needs k >= 2 and n >= 2k^2 (k={k}, n={n})")
    for k, n in grid:
        chain = f_chain(k, n)
        ok = chain.holds
        detail = {"links": [{"left": l.left, "relation": l.relation, "right": l.right, "holds": l.holds}
                            for l in chain.links]}
        if n <= numeric_up_to:
            exact = q_exact(FamilySpec.F(n, k)).root
            enc = q_max(build(FamilySpec.F(n, k)), Fraction(1, 10**10))
            gap = max(Fraction(0), enc.lower - exact.hi, exact.lo - enc.upper)
            agree = gap + enc.width + exact.width <= tol
            detail["numeric"] = {"q_max": enc.midpoint, "exact": exact.midpoint, "agree_1e-8": agree}
            ok = ok and agree
        _settle(report, {"k": k, "n": n}, ok, detail, chain.in_hypothesis)
    return report


@_timed
def verify_kh_attach(k_values=range(2, 6), h_values=(4, 5), n_values=None, relaxed: bool = False) -> Report:
    k_values = list(k_values)
    report = Report("lem:Kh-attach", {"k": k_values, "h": list(h_values),
                                      "n": list(n_values) if n_values is not None else "k+20..300"})
    grid = [(k, h, n) for k in k_values for h in h_values for n in (n_values if n_values is not None else range(k + 20, 301))]
    for k, h, n in grid:
        _require(k >= 2 and h in (4, 5) and n >= k + 20, relaxed, f"needs k >= 2, h in 4..5, n >= k+20 (k={k}, n={n})")
    for k, h, n in grid:
        _compare_instance(report, {"k": k, "h": h, "n": n}, FamilySpec.F_attach(n, k, f"K{h}"), FamilySpec.F(n, k),
                          Order.LESS, n >= k + 20)
    return report


@_timed
def verify_n6_attach(k_values=range(2, 6), n_values=None, relaxed: bool = False) -> Report:
    k_values = list(k_values)
    report = Report("lem:N6-attach", {"k": k_values, "n": list(n_values) if n_values is not None else "k+4..300"})
    grid = [(k, n) for k in k_values for n in (n_values if n_values is not None else range(k + 4, 301))]
    for k, n in grid:
        _require(k >= 2 and n >= k + 4, relaxed, f"needs k >= 2 and n >= k+4 (k={k}, n={n})")
    for k, n in grid:
        _compare_instance(report, {"k": k, "n": n}, FamilySpec.F_attach(n, k, "N6"), FamilySpec.F(n, k), Order.LESS,
                          n >= k + 4)
    return report


def verify_q_lemmas(grid: Grid | None = None, relaxed: bool = False) -> Report:
    """All exact spectral lemmas in one report, instances tagged by sub-claim."""
    grid = grid or {}
    t = time.perf_counter()
    parts = [
        verify_q_chain(grid.get("h", range(2, 6)), grid.get("n"), relaxed),
        verify_hn1(grid.get("n", range(28, 129)), relaxed),
        verify_L(grid.get("hL", range(3, 6)), None, relaxed),
        verify_f_bounds(grid.get("k", range(2, 7)), None, relaxed=relaxed),
        verify_kh_attach(grid.get("k", range(2, 6)), (4, 5), None, relaxed),
        verify_n6_attach(grid.get("k", range(2, 6)), None, relaxed),
    ]
    out = Report("lem:q-all", {"parts": [p.claim for p in parts]})
    for p in parts:
        for inst in p.instances:
            inst.params = {"claim": p.claim, **inst.params}
            out.add(inst)
        out.summary[p.claim] = p.status
    out.timing["wall_seconds"] = round(time.perf_counter() - t, 3)
    return out


@_timed
def verify_spectral_kp3(n_values=range(16, 61), relaxed: bool = False) -> Report:
    """q(F_{n,2}) exceeds q of each competing 2·P3-free host, certified exactly."""
    n_values = list(n_values)
    report = Report("thm:spectral-kp3", {"k": 2, "n": n_values})
    for n in n_values:
        _require(n >= 16, relaxed, f"needs n >= 16 (n={n})")
    report.notes.append("reduction: every 2·P3-free graph of order n >= 6 lies in one of the four hosts (lem:2p3-free), "
                        "and q is monotone under taking subgraphs")
    for n in n_values:
        target = FamilySpec.F(n, 2)
        for att in ("K4", "K5", "N6"):
            _compare_instance(report, {"n": n, "host": f"Fatt({att},k=2)"}, FamilySpec.F_attach(n, 2, att), target,
                              Order.LESS, n >= 16)
        exact = q_exact(target).root
        enc = q_max(build(target))
        overlap = enc.lower <= exact.hi and exact.lo <= enc.upper
        _settle(report, {"n": n, "check": "dense enclosure meets exact root"}, overlap,
                {"q_max": [str(enc.lower), str(enc.upper)], "exact": exact.to_json()["interval"]}, n >= 16)
    return report


# -- classical bounds ---------------------------------------------------------------


@_timed
def verify_bounds(n_values=range(1, 8), trials: int = 1000, seed: int = 0, random_n: int = 20,
                  p: float = 0.3) -> Report:
    """Merris, edge-degree and size-order bounds never fall below the certified lower bound on q."""
    n_values = list(n_values)
    report = Report("lem:bounds", {"n": n_values, "trials": trials, "seed": seed, "random_n": random_n, "p": p})
    slack: dict[str, float] = {"merris": math.inf, "edge_degree": math.inf, "size_order": math.inf}
    tight_kn = True

    def check(label: str, g: Graph, listed: bool = False):
        enc = q_max(g)
        bounds = {"merris": merris_bound(g)}
        if g.edge_count:
            bounds["edge_degree"] = Fraction(edge_degree_bound(g))
        if g.n >= 2:
            bounds["size_order"] = size_order_bound(g)
        bad = {name: float(b) for name, b in bounds.items() if b < enc.lower}
        for name, b in bounds.items():
            slack[name] = min(slack[name], float(b - enc.lower))
        if bad or listed:
            _settle(report, {"source": label}, not bad, {"violated": bad, "bounds": {k: float(v) for k, v in bounds.items()}},
                    True, g.to_graph6(), recheck=lambda g=g: any(b < q_max(g).lower for b in (merris_bound(g),)))
        else:
            report.unlisted_passes += 1
        return bounds, enc

    for n in n_values:
        for g in gen_all(n):
            check(f"all(n={n})", g)
    rng = random.Random(seed)
    from itertools import combinations

    pairs = list(combinations(range(random_n), 2))
    for i in range(trials):
        edges = [e for e in pairs if rng.random() < p]
        check(f"random#{i}", Graph.from_edges(random_n, edges))
    for n in range(2, 11):
        bounds, enc = check(f"K{n}", Graph.complete(n), listed=True)
        tight_kn = tight_kn and all(b == 2 * n - 2 for b in bounds.values()) and enc.contains(2 * n - 2)
    report.summary = {"min_certified_slack": slack, "complete_graphs_tight": tight_kn}
    if not tight_kn:
        report.add(Instance({"source": "K_n tightness"}, FAIL, {}))
    return report


# -- 2·P3-free classification ---------------------------------------------------------------


def _two_p3_free(g: Graph) -> bool:
    return g.n < 6 or contains_k_p3(g, 2) is None


@_timed
def verify_2p3_classification(n_values=range(6, 10)) -> Report:
    """Every 2·P3-free class of order 6..9 lies in at least one of the four hosts."""
    n_values = list(n_values)
    for n in n_values:
        if not 6 <= n <= 9:
            raise PreconditionError("classification scan needs 6 <= n <= 9")
    report = Report("lem:2p3-free", {"n": n_values})
    per_n = {}
    for n in n_values:
        classes = 0
        labels: Counter = Counter()
        for g in gen_all(n, accept=_two_p3_free):
            classes += 1
            found = classify_2p3_free(g)
            labels.update(found)
            if not found:
                _settle(report, {"n": n}, False, {"labels": []}, True, g.to_graph6(),
                        recheck=lambda g=g: not classify_2p3_free(g))
            else:
                report.unlisted_passes += 1
        per_n[str(n)] = {"classes": classes, "labels": dict(sorted(labels.items()))}
    try:
        classify_2p3_free(Graph.path(3) | Graph.path(3))
        control = False
    except PreconditionError:
        control = True
    _settle(report, {"control": "2·P3 rejected by precondition"}, control, {}, True)
    report.summary = per_n
    return report


# -- generic linear forests (observational) -------------------------------------------------


@_timed
def verify_linear_forest(orders=(4, 2), n_values=None) -> Report:
    """Exhaustive edge scans for a generic linear forest, set beside the asymptotic
    count ``C(h,2) + h(n-h) + c``. No threshold is known, so verdicts are observational."""
    forest = LinearForest.of(*orders)
    if forest.k < 2:
        raise PreconditionError("needs a forest with at least two components")
    n_values = list(n_values if n_values is not None else range(forest.total, 10))
    report = Report("thm:linear-forest", {"forest": str(forest), "n": n_values})
    report.notes.append("consistent/inconsistent only; no threshold for the asymptotic statement is asserted")
    for n in n_values:
        scan = extremal_edge_scan(forest, n)
        tb = turan_edge_bound(forest, n)
        report.add(Instance({"n": n}, OBSERVED, {
            "scan_best": scan.best,
            "asymptotic_count": tb.bound,
            "extremal": [str(s) for s in tb.extremal],
            "argmax": list(scan.argmax),
            "consistent": scan.best <= tb.bound or scan.best is None,
        }))
    return report


# -- registry ----------------------------------------------------------------------------


def _turan(grid: Grid, relaxed: bool, seed: int) -> Report:
    return verify_turan_kp3(_one(grid, "k", 2), grid.get("n", range(1, 10)), relaxed)


def _stability(grid: Grid, relaxed: bool, seed: int) -> Report:
    return verify_stability(_one(grid, "k", 2), _one(grid, "n", 30), _one(grid, "samples", 100_000), seed, relaxed)


CLAIMS: dict[str, Callable[[Grid, bool, int], Report]] = {
    "thm:turan-kp3": _turan,
    "thm:stability": _stability,
    "lem:q-chain": lambda g, r, s: verify_q_chain(g.get("h", range(2, 6)), g.get("n"), r),
    "lem:hn1": lambda g, r, s: verify_hn1(g.get("n", range(28, 129)), r),
    "lem:L": lambda g, r, s: verify_L(g.get("h", range(3, 6)), g.get("n"), r),
    "lem:F-bounds": lambda g, r, s: verify_f_bounds(g.get("k", range(2, 7)), g.get("n"), relaxed=r),
    "lem:Kh-attach": lambda g, r, s: verify_kh_attach(g.get("k", range(2, 6)), g.get("h", (4, 5)), g.get("n"), r),
    "lem:N6-attach": lambda g, r, s: verify_n6_attach(g.get("k", range(2, 6)), g.get("n"), r),
    "lem:q-all": lambda g, r, s: verify_q_lemmas(g, r),
    "thm:spectral-kp3": lambda g, r, s: verify_spectral_kp3(g.get("n", range(16, 61)), r),
    "lem:bounds": lambda g, r, s: verify_bounds(g.get("n", range(1, 8)), _one(g, "trials", 1000), s),
    "lem:2p3-free": lambda g, r, s: verify_2p3_classification(g.get("n", range(6, 10))),
    "thm:linear-forest": lambda g, r, s: verify_linear_forest(tuple(g.get("forest", (4, 2))), g.get("n")),
}


def run_claim(claim: str, grid: Grid | None = None, relaxed: bool = False, seed: int = 0) -> Report:
    if claim not in CLAIMS:
        raise KeyError(f"unknown claim {claim!r}; known: {', '.join(sorted(CLAIMS))}")
    return CLAIMS[claim](grid or {}, relaxed, seed)
