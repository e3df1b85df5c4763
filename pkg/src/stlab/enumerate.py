"""Isomorph-free generation by canonical augmentation, extremal scans, sampling.

Graphs grow one vertex at a time. A child ``P + v`` is kept only when ``v``
lies in the automorphism orbit of the child's canonical deletion vertex: the
vertex of largest invariant ``(degree, sorted neighbour degrees)``, ties
broken by the largest canonical position. With one parent per class and one
neighbourhood per ``Aut(P)``-orbit of subsets, every class appears exactly once.
"""

from __future__ import annotations

import random
from collections.abc import Callable, Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from fractions import Fraction
from itertools import combinations

from stlab.canon import Labeling, canonical_form, canonical_labeling, orbits_of
from stlab.forbidden import LinearForest, is_free
from stlab.graph import Graph, iter_bits
from stlab.spectral.compare import Order, compare_roots
from stlab.spectral.poly import _frac_str, charpoly
from stlab.spectral.power import q_matrix, q_max

MAX_N = 9
SHARD_LEVEL = 4

Accept = Callable[[Graph], bool]


def _invariant(rows, v: int) -> tuple:
    return (rows[v].bit_count(), tuple(sorted(rows[u].bit_count() for u in iter_bits(rows[v]))))


def _mask_images(perm: tuple[int, ...], m: int) -> list[int]:
    img = [0] * (1 << m)
    for mask in range(1, 1 << m):
        low = mask & -mask
        img[mask] = img[mask ^ low] | (1 << perm[low.bit_length() - 1])
    return img


def _subset_reps(m: int, gens) -> list[int]:
    """One neighbourhood mask per orbit of the group generated by ``gens``."""
    size = 1 << m
    if not gens:
        return list(range(size))
    parent = list(range(size))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        img = _mask_images(g, m)
        for mask in range(size):
            a, b = find(mask), find(img[mask])
            if a != b:
                parent[max(a, b)] = min(a, b)
    return [mask for mask in range(size) if find(mask) == mask]


def _is_canonical_child(g: Graph) -> tuple[bool, Labeling | None]:
    rows = g.rows
    new = g.n - 1
    inv = [_invariant(rows, v) for v in range(g.n)]
    top = max(inv)
    if inv[new] != top:
        return False, None
    ties = [v for v in range(g.n) if inv[v] == top]
    if len(ties) == 1:
        return True, None
    lab = canonical_labeling(g)
    pos = lab.position
    chosen = max(ties, key=lambda v: pos[v])
    orbit = orbits_of(g.n, lab.generators)
    return orbit[chosen] == orbit[new], lab


def _children(p: Graph, lab: Labeling | None, accept: Accept | None) -> Iterator[tuple[Graph, Labeling | None]]:
    if lab is None:
        lab = canonical_labeling(p)
    for mask in _subset_reps(p.n, lab.generators):
        child = p.add_vertex(mask)
        ok, clab = _is_canonical_child(child)
        if ok and (accept is None or accept(child)):
            yield child, clab


def _dfs(node: Graph, lab, n: int, accept, prune) -> Iterator[Graph]:
    if node.n == n:
        yield node
        return
    if prune is not None and prune(node):
        return
    for child, clab in _children(node, lab, accept):
        yield from _dfs(child, clab, n, accept, prune)


def _check_order(n: int) -> None:
    if not 1 <= n <= MAX_N:
        raise ValueError(f"exhaustive generation supports 1 <= n <= {MAX_N}, got {n}")


def gen_all(n: int, accept: Accept | None = None) -> Iterator[Graph]:
    """One graph per isomorphism class on ``n`` vertices.

    ``accept`` must be hereditary (closed under deleting vertices); it is
    applied at every level, so only accepted graphs are ever expanded.
    """
    _check_order(n)
    root = Graph.empty(1)
    if accept is not None and not accept(root):
        return
    yield from _dfs(root, None, n, accept, None)


def _level(k: int, accept: Accept | None) -> list[Graph]:
    root = Graph.empty(1)
    if accept is not None and not accept(root):
        return []
    return list(_dfs(root, None, k, accept, None))


# -- scans --------------------------------------------------------------------


@dataclass(frozen=True)
class ScanResult:
    n: int
    objective: str
    forest: str
    best: object
    argmax: tuple[str, ...]
    visited: int
    feasible: int
    best_poly: tuple[int, ...] | None = field(default=None, compare=False)

    def to_json(self) -> dict:
        best = self.best
        if self.objective == "qmax":
            best = {"lower": _frac_str(best[0]), "upper": _frac_str(best[1]), "approx": float((best[0] + best[1]) / 2)}
        out = {
            "n": self.n,
            "objective": self.objective,
            "forest": self.forest,
            "best": best,
            "argmax": list(self.argmax),
            "visited": self.visited,
            "feasible": self.feasible,
        }
        if self.best_poly is not None:
            out["best_poly"] = list(reversed(self.best_poly))
        return out

    def merge(self, other: ScanResult) -> ScanResult:
        if (self.n, self.objective, self.forest) != (other.n, other.objective, other.forest):
            raise ValueError("cannot merge scans of different problems")
        counts = dict(visited=self.visited + other.visited, feasible=self.feasible + other.feasible)
        if self.best is None:
            return replace(other, **counts)
        if other.best is None:
            return replace(self, **counts)
        if self.objective == "edges":
            order = Order.GREATER if self.best > other.best else Order.LESS if self.best < other.best else Order.EQUAL
        else:
            order = compare_roots(self.best_poly, other.best_poly).order
        if order is Order.GREATER:
            return replace(self, **counts)
        if order is Order.LESS:
            return replace(other, **counts)
        best = self.best
        if self.objective == "qmax":
            best = (max(self.best[0], other.best[0]), min(self.best[1], other.best[1]))
        return replace(self, best=best, argmax=tuple(sorted(set(self.argmax) | set(other.argmax))), **counts)


def _canon_g6(g: Graph) -> str:
    return canonical_form(g).to_graph6()


def _remaining_edges(m: int, n: int) -> int:
    return sum(range(m, n))


class _EdgeScan:
    def __init__(self, forest: LinearForest, n: int):
        self.forest, self.n = forest, n
        self.best = -1
        self.arg: list[Graph] = []
        self.visited = 0
        self.feasible = 0

    def prune(self, g: Graph) -> bool:
        self.visited += 1
        return g.edge_count + _remaining_edges(g.n, self.n) < self.best

    def offer(self, g: Graph) -> None:
        self.visited += 1
        self.feasible += 1
        e = g.edge_count
        if e > self.best:
            self.best, self.arg = e, [g]
        elif e == self.best:
            self.arg.append(g)

    def result(self) -> ScanResult:
        return ScanResult(self.n, "edges", str(self.forest), self.best if self.arg else None,
                          tuple(sorted({_canon_g6(g) for g in self.arg})), self.visited, self.feasible)


class _QScan:
    def __init__(self, forest: LinearForest, n: int, tol: Fraction):
        self.forest, self.n, self.tol = forest, n, tol
        self.best: tuple[Fraction, Fraction] | None = None
        self.poly: tuple[int, ...] | None = None
        self.arg: list[Graph] = []
        self.visited = 0
        self.feasible = 0

    def prune(self, g: Graph) -> bool:
        self.visited += 1
        if self.best is None:
            return False
        e_max = g.edge_count + _remaining_edges(g.n, self.n)
        # size-order bound on any completion
        return Fraction(2 * e_max, self.n - 1) + self.n - 2 < self.best[0]

    def offer(self, g: Graph) -> None:
        self.visited += 1
        self.feasible += 1
        enc = q_max(g, self.tol)
        if self.best is not None and enc.upper < self.best[0]:
            return
        poly = charpoly(q_matrix(g))
        if self.best is None or enc.lower > self.best[1]:
            order = Order.GREATER
        else:
            order = compare_roots(poly, self.poly).order
        if order is Order.GREATER:
            self.best, self.poly, self.arg = (enc.lower, enc.upper), poly, [g]
        elif order is Order.EQUAL:
            self.arg.append(g)
            self.best = (max(self.best[0], enc.lower), min(self.best[1], enc.upper))

    def result(self) -> ScanResult:
        return ScanResult(self.n, "qmax", str(self.forest), self.best,
                          tuple(sorted({_canon_g6(g) for g in self.arg})), self.visited, self.feasible, self.poly)


def _run_shard(args) -> ScanResult:
    objective, forest_text, n, tol, g6_list = args
    forest = LinearForest.parse(forest_text)
    scan = _EdgeScan(forest, n) if objective == "edges" else _QScan(forest, n, tol)
    accept = _free_filter(forest)
    for text in g6_list:
        node = Graph.from_graph6(text)
        for g in _dfs(node, None, n, accept, scan.prune):
            scan.offer(g)
    return scan.result()


def _free_filter(forest: LinearForest) -> Accept:
    return lambda g: g.n < forest.total or is_free(g, forest)


def _scan(objective: str, forest: LinearForest, n: int, tol: Fraction, workers: int) -> ScanResult:
    _check_order(n)
    if forest.total > n:
        # every graph is free of the forest; K_n is the unique maximiser of both objectives
        kn = Graph.complete(n)
        if objective == "edges":
            return ScanResult(n, "edges", str(forest), kn.edge_count, (_canon_g6(kn),), 1, 1)
        poly = charpoly(q_matrix(kn))
        val = Fraction(2 * n - 2)
        return ScanResult(n, "qmax", str(forest), (val, val), (_canon_g6(kn),), 1, 1, poly)
    level = min(SHARD_LEVEL, n)
    seeds = [g.to_graph6() for g in _level(level, _free_filter(forest))]
    if workers <= 1:
        return _run_shard((objective, str(forest), n, tol, seeds))
    chunks = [seeds[i::workers] for i in range(workers)]
    jobs = [(objective, str(forest), n, tol, c) for c in chunks if c]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(_run_shard, jobs))
    out = parts[0]
    for part in parts[1:]:
        out = out.merge(part)
    return out


def extremal_edge_scan(forest: LinearForest, n: int, workers: int = 1) -> ScanResult:
    """Maximum edge count over ``forest``-free graphs on ``n`` vertices, with all maximisers."""
    return _scan("edges", forest, n, Fraction(0), workers)


def extremal_q_scan(forest: LinearForest, n: int, tol=Fraction(1, 10**10), workers: int = 1) -> ScanResult:
    """Maximum ``q`` over ``forest``-free graphs; ties are decided by exact root comparison."""
    return _scan("qmax", forest, n, Fraction(tol), workers)


# -- sampling -----------------------------------------------------------------


def sample_graphs(n: int, edge_min: int, count: int, seed: int) -> Iterator[Graph]:
    """``G(n, m)`` samples with ``m`` uniform on ``[edge_min, edge_min + n]`` (capped at ``C(n,2)``)."""
    pairs = list(combinations(range(n), 2))
    if not 0 <= edge_min <= len(pairs):
        raise ValueError("edge_min must lie in [0, C(n,2)]")
    rng = random.Random(seed)
    hi = min(edge_min + n, len(pairs))
    for _ in range(count):
        m = rng.randint(edge_min, hi)
        yield Graph.from_edges(n, rng.sample(pairs, m))

