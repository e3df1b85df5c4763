"""Canonical labelling by partition refinement and individualisation.

The search tree is the usual one: refine the unit partition to an equitable
ordered partition, individualise each vertex of the first non-singleton cell,
refine again, and recurse until the partition is discrete. Each leaf gives a
relabelled adjacency code; the canonical form is the smallest code.

Subtrees are skipped when a known automorphism fixing the current
individualised prefix maps the candidate vertex onto an already explored one.
Known automorphisms are the transpositions of twin vertices plus every
automorphism revealed by two leaves with equal codes. Intended for n <= 11.
"""

from __future__ import annotations

from dataclasses import dataclass

from stlab.graph import Graph, iter_bits, mask_of


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Isomorphism-invariant label.

    ``code`` holds the upper-triangle adjacency bits of the canonically
    relabelled graph in graph6 order, first pair most significant.
    """

    n: int
    code: int

    def graph(self) -> Graph:
        n = self.n
        rows = [0] * n
        bit = n * (n - 1) // 2 - 1
        for j in range(1, n):
            for i in range(j):
                if self.code >> bit & 1:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
                bit -= 1
        return Graph(n, rows, _trusted=True)

    def to_graph6(self) -> str:
        return self.graph().to_graph6()


@dataclass(frozen=True)
class Labeling:
    """Result of the canonical search.

    ``lab[i]`` is the vertex placed at canonical position ``i``;
    ``generators`` generate the full automorphism group.
    """

    lab: tuple[int, ...]
    code: int
    generators: tuple[tuple[int, ...], ...]

    @property
    def position(self) -> list[int]:
        pos = [0] * len(self.lab)
        for i, v in enumerate(self.lab):
            pos[v] = i
        return pos


def refine(rows: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    """Coarsest equitable refinement of an ordered partition.

    Split cells are ordered by their neighbour-count signature, so the result
    depends only on the isomorphism type of (graph, partition).
    """
    while True:
        masks = [mask_of(c) for c in cells]
        out: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                r = rows[v]
                key = tuple((r & m).bit_count() for m in masks)
                groups.setdefault(key, []).append(v)
            if len(groups) == 1:
                out.append(cell)
            else:
                changed = True
                for key in sorted(groups):
                    out.append(groups[key])
        cells = out
        if not changed:
            return cells


def _code(rows: tuple[int, ...], lab: list[int]) -> int:
    code = 0
    for j in range(1, len(lab)):
        r = rows[lab[j]]
        for i in range(j):
            code = (code << 1) | (r >> lab[i] & 1)
    return code


def _twin_generators(rows: tuple[int, ...]) -> list[tuple[int, ...]]:
    n = len(rows)
    gens = []
    for keyfn in (lambda v: rows[v], lambda v: rows[v] | (1 << v)):
        classes: dict[int, list[int]] = {}
        for v in range(n):
            classes.setdefault(keyfn(v), []).append(v)
        for members in classes.values():
            first = members[0]
            for other in members[1:]:
                perm = list(range(n))
                perm[first], perm[other] = other, first
                gens.append(tuple(perm))
    return gens


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if ra < rb:
                self.parent[rb] = ra
            else:
                self.parent[ra] = rb


def orbits_of(n: int, generators) -> list[int]:
    """Orbit representative (least member) of every point."""
    uf = _UnionFind(n)
    for g in generators:
        for v in range(n):
            uf.union(v, g[v])
    return [uf.find(v) for v in range(n)]


class _Search:
    def __init__(self, g: Graph):
        self.rows = g.rows
        self.n = g.n
        self.gens: list[tuple[int, ...]] = _twin_generators(self.rows)
        self.first: tuple[int, list[int]] | None = None
        self.best: tuple[int, list[int]] | None = None

    def run(self) -> Labeling:
        cells = refine(self.rows, [list(range(self.n))]) if self.n else []
        self._dfs(cells, [])
        assert self.best is not None
        code, lab = self.best
        return Labeling(tuple(lab), code, tuple(self.gens))

    def _leaf(self, cells: list[list[int]]) -> None:
        lab = [c[0] for c in cells]
        code = _code(self.rows, lab)
        if self.first is None:
            self.first = (code, lab)
            self.best = (code, lab)
            return
        assert self.best is not None
        ref = None
        if code == self.first[0]:
            ref = self.first[1]
        elif code == self.best[0]:
            ref = self.best[1]
        elif code < self.best[0]:
            self.best = (code, lab)
        if ref is not None:
            perm = [0] * self.n
            for a, b in zip(ref, lab):
                perm[a] = b
            t = tuple(perm)
            if t != tuple(range(self.n)):
                self.gens.append(t)

    def _dfs(self, cells: list[list[int]], prefix: list[int]) -> None:
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            self._leaf(cells)
            return
        cell = cells[target]
        done: list[int] = []
        seen_gens = -1
        orbit = None
        for v in cell:
            if done:
                if len(self.gens) != seen_gens:
                    seen_gens = len(self.gens)
                    fixing = [g for g in self.gens if all(g[p] == p for p in prefix)]
                    orbit = orbits_of(self.n, fixing)
                assert orbit is not None
                rv = orbit[v]
                if any(orbit[u] == rv for u in done):
                    continue
            rest = [u for u in cell if u != v]
            child = cells[:target] + [[v], rest] + cells[target + 1:]
            self._dfs(refine(self.rows, child), prefix + [v])
            done.append(v)


def canonical_labeling(g: Graph) -> Labeling:
    return _Search(g).run()


def canonical_form(g: Graph) -> CanonicalForm:
    return CanonicalForm(g.n, canonical_labeling(g).code)


def canonical_graph(g: Graph) -> Graph:
    lab = canonical_labeling(g).lab
    perm = [0] * g.n
    for i, v in enumerate(lab):
        perm[v] = i
    return g.relabel(perm)


def automorphism_orbits(g: Graph) -> list[int]:
    return orbits_of(g.n, canonical_labeling(g).generators)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    if g.degree_sequence() != h.degree_sequence():
        return False
    return canonical_form(g) == canonical_form(h)


def apply_to_mask(perm, mask: int) -> int:
    out = 0
    for v in iter_bits(mask):
        out |= 1 << perm[v]
    return out
