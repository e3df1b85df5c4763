"""Linear-forest containment.

A linear forest is a disjoint union of paths ``P_{a_1} ∪ ... ∪ P_{a_k}``.
``contains_linear_forest`` decides whether such a forest is a (not
necessarily induced) subgraph and returns an explicit embedding.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass

import networkx as nx

from stlab.graph import Graph, iter_bits

DEFAULT_NODE_BUDGET = 10**8


class SearchBudgetExceeded(RuntimeError):
    """The backtracking search gave up; containment is unknown."""

    def __init__(self, nodes: int):
        super().__init__(f"node budget exhausted after {nodes} search nodes")
        self.nodes = nodes


@dataclass(frozen=True)
class LinearForest:
    orders: tuple[int, ...]

    def __post_init__(self):
        orders = tuple(sorted((int(a) for a in self.orders), reverse=True))
        if not orders:
            raise ValueError("a linear forest needs at least one path")
        if orders[-1] < 2:
            raise ValueError("path orders must be at least 2")
        object.__setattr__(self, "orders", orders)

    @classmethod
    def of(cls, *orders: int) -> LinearForest:
        return cls(tuple(orders))

    @classmethod
    def kp3(cls, k: int) -> LinearForest:
        if k < 1:
            raise ValueError("k must be positive")
        return cls((3,) * k)

    @classmethod
    def parse(cls, text: str) -> LinearForest:
        """Parse ``"5,3"`` (P5 ∪ P3) or ``"3x4"`` (4·P3); terms may be mixed."""
        orders: list[int] = []
        for term in text.replace(" ", "").split(","):
            m = re.fullmatch(r"(\d+)(?:x(\d+))?", term)
            if not m:
                raise ValueError(f"bad forest term {term!r} in {text!r}")
            a = int(m.group(1))
            orders.extend([a] * int(m.group(2) or 1))
        return cls(tuple(orders))

    def __str__(self) -> str:
        parts = []
        for a, cnt in sorted(Counter(self.orders).items(), reverse=True):
            parts.append(f"{a}x{cnt}" if cnt > 1 else str(a))
        return ",".join(parts)

    @property
    def k(self) -> int:
        return len(self.orders)

    @property
    def h(self) -> int:
        return sum(a // 2 for a in self.orders) - 1

    @property
    def odd_count(self) -> int:
        return sum(a % 2 for a in self.orders)

    @property
    def c(self) -> int:
        return 1 if self.odd_count == self.k else 0

    @property
    def total(self) -> int:
        return sum(self.orders)

    @property
    def is_kp3(self) -> bool:
        return all(a == 3 for a in self.orders)

    def graph(self) -> Graph:
        g = Graph.empty(0)
        for a in self.orders:
            g = g.disjoint_union(Graph.path(a))
        return g


@dataclass(frozen=True)
class Embedding:
    """Images of the forest's paths, in the forest's order (longest first)."""

    paths: tuple[tuple[int, ...], ...]

    def vertices(self) -> list[int]:
        return [v for p in self.paths for v in p]

    def is_valid(self, g: Graph, forest: LinearForest) -> bool:
        if tuple(len(p) for p in self.paths) != forest.orders:
            return False
        vs = self.vertices()
        if len(set(vs)) != len(vs) or any(not 0 <= v < g.n for v in vs):
            return False
        return all(g.has_edge(p[i], p[i + 1]) for p in self.paths for i in range(len(p) - 1))

    def to_json(self) -> list[list[int]]:
        return [list(p) for p in self.paths]


def _induced_edges(rows, avail: int) -> int:
    return sum((rows[v] & avail).bit_count() for v in iter_bits(avail)) // 2


def _greedy_cover(rows, avail: int, max_residual_degree: int) -> int:
    """Size of a greedily built vertex set whose removal leaves max degree <= bound."""
    size = 0
    while True:
        best, best_deg = -1, max_residual_degree
        for v in iter_bits(avail):
            d = (rows[v] & avail).bit_count()
            if d > best_deg:
                best, best_deg = v, d
        if best < 0:
            return size
        avail &= ~(1 << best)
        size += 1


def _matching(rows, avail: int, need: int) -> list[tuple[int, int]] | None:
    if need == 0:
        return []
    edges = [(u, v) for u in iter_bits(avail) for v in iter_bits(rows[u] & avail) if u < v]
    if len(edges) < need:
        return None
    taken = 0
    greedy = []
    for u, v in edges:
        if not (taken >> u & 1 or taken >> v & 1):
            taken |= (1 << u) | (1 << v)
            greedy.append((u, v))
            if len(greedy) == need:
                return greedy
    h = nx.Graph(edges)
    m = nx.max_weight_matching(h, maxcardinality=True)
    if len(m) < need:
        return None
    return sorted(tuple(sorted(e)) for e in m)[:need]


class _PathSearch:
    def __init__(self, g: Graph, long: list[int], pairs: int, budget: int):
        self.g = g
        self.rows = g.rows
        self.long = long
        self.pairs = pairs
        self.budget = budget
        self.nodes = 0
        self.order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
        self.cover_need = [sum(a // 2 for a in long[i:]) + pairs for i in range(len(long) + 1)]
        self.hit_need = [sum(a // 3 for a in long[i:]) for i in range(len(long) + 1)]
        self.vertex_need = [sum(long[i:]) + 2 * pairs for i in range(len(long) + 1)]
        self.edge_need = [sum(a - 1 for a in long[i:]) + pairs for i in range(len(long) + 1)]

    def _tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise SearchBudgetExceeded(self.nodes)

    def _feasible(self, i: int, avail: int) -> bool:
        rows = self.rows
        if avail.bit_count() < self.vertex_need[i]:
            return False
        if _induced_edges(rows, avail) < self.edge_need[i]:
            return False
        comps = self.g.component_masks(within=avail)
        if i < len(self.long) and max(c.bit_count() for c in comps) < self.long[i]:
            return False
        if sum(c.bit_count() for c in comps if c.bit_count() >= 2) < self.vertex_need[i]:
            return False
        if _greedy_cover(rows, avail, 0) < self.cover_need[i]:
            return False
        # Outside a set meeting every P3, each component has at most 2 vertices,
        # so a path of order a uses at least floor(a/3) vertices of that set.
        if self.hit_need[i] and _greedy_cover(rows, avail, 1) < self.hit_need[i]:
            return False
        return True

    def run(self) -> list[tuple[int, ...]] | None:
        full = (1 << self.g.n) - 1
        return self._place(0, full, -1)

    def _place(self, i: int, avail: int, prev_start: int):
        self._tick()
        if not self._feasible(i, avail):
            return None
        if i == len(self.long):
            m = _matching(self.rows, avail, self.pairs)
            return None if m is None else list(m)
        a = self.long[i]
        same_as_prev = i > 0 and self.long[i - 1] == a
        comps = [c for c in self.g.component_masks(within=avail) if c.bit_count() >= a]
        for s in self.order:
            if not avail >> s & 1:
                continue
            if same_as_prev and s <= prev_start:
                continue
            comp = next((c for c in comps if c >> s & 1), 0)
            if not comp:
                continue
            for path in self._extend([s], comp & ~(1 << s), a - 1):
                if path[-1] < s:
                    continue
                pmask = 0
                for v in path:
                    pmask |= 1 << v
                rest = self._place(i + 1, avail & ~pmask, s)
                if rest is not None:
                    return [tuple(path)] + rest
        return None

    def _extend(self, path: list[int], free: int, remaining: int):
        if remaining == 0:
            yield path
            return
        self._tick()
        last = path[-1]
        for u in iter_bits(self.rows[last] & free):
            path.append(u)
            yield from self._extend(path, free & ~(1 << u), remaining - 1)
            path.pop()


def contains_linear_forest(
    g: Graph, forest: LinearForest, node_budget: int = DEFAULT_NODE_BUDGET
) -> Embedding | None:
    """Return an embedding of ``forest`` in ``g``, or ``None`` if ``g`` is forest-free.

    Raises :class:`SearchBudgetExceeded` when the search exceeds ``node_budget``
    nodes; that outcome means "unknown", never "absent".
    """
    if forest.total > g.n:
        return None
    long = [a for a in forest.orders if a >= 3]
    pairs = forest.k - len(long)
    found = _PathSearch(g, long, pairs, node_budget).run()
    if found is None:
        return None
    emb = Embedding(tuple(tuple(p) for p in found))
    if not emb.is_valid(g, forest):
        raise AssertionError("internal error: invalid embedding produced")
    return emb


def is_free(g: Graph, forest: LinearForest, node_budget: int = DEFAULT_NODE_BUDGET) -> bool:
    return contains_linear_forest(g, forest, node_budget) is None


def _greedy_p3_packing(g: Graph, k: int, prefer_low_centre: bool):
    rows = g.rows
    avail = (1 << g.n) - 1
    paths = []
    while len(paths) < k:
        best = None
        for c in range(g.n):
            if not avail >> c & 1:
                continue
            nb = rows[c] & avail
            d = nb.bit_count()
            if d < 2:
                continue
            key = d if prefer_low_centre else -d
            if best is None or key < best[0]:
                best = (key, c)
        if best is None:
            return None
        c = best[1]
        ends = sorted(iter_bits(rows[c] & avail), key=lambda v: ((rows[v] & avail).bit_count(), v))[:2]
        paths.append((ends[0], c, ends[1]))
        avail &= ~((1 << c) | (1 << ends[0]) | (1 << ends[1]))
    return paths


def contains_k_p3(g: Graph, k: int, node_budget: int = DEFAULT_NODE_BUDGET) -> Embedding | None:
    """Decide ``k·P3 ⊆ g``; greedy packings first, exhaustive search as fallback."""
    if k < 1:
        raise ValueError("k must be positive")
    forest = LinearForest.kp3(k)
    if 3 * k > g.n:
        return None
    for low in (True, False):
        paths = _greedy_p3_packing(g, k, low)
        if paths is not None:
            emb = Embedding(tuple(paths))
            assert emb.is_valid(g, forest)
            return emb
    full = (1 << g.n) - 1
    if _greedy_cover(g.rows, full, 1) < k:
        return None
    return contains_linear_forest(g, forest, node_budget)


def erdos_gallai_guarantee(n: int, e: int, l: int) -> bool:
    """True when ``e > (l-2)n/2``, which forces a path on ``l`` vertices."""
    if l < 2:
        raise ValueError("path order must be at least 2")
    return 2 * e > (l - 2) * n
