"""Immutable simple graphs with bitset adjacency rows.

Each row is a Python int whose bit ``j`` is set iff the vertex is adjacent
to ``j``. Python ints are arbitrary width, so rows wider than one machine
word need no special handling.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from math import comb

MAX_ORDER = 4096


class CapacityError(ValueError):
    """Raised when a graph would exceed ``MAX_ORDER`` vertices."""


def _check_order(n: int) -> None:
    if n < 0:
        raise ValueError(f"vertex count must be non-negative, got {n}")
    if n > MAX_ORDER:
        raise CapacityError(f"{n} vertices exceeds the capacity limit of {MAX_ORDER}")


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """A simple undirected graph on vertices ``0 .. n-1``.

    Instances are immutable and hashable; every "mutating" method returns a
    new graph.
    """

    __slots__ = ("_n", "_rows", "_edge_count")

    def __init__(self, n: int, rows: Sequence[int] | None = None, *, _trusted: bool = False):
        _check_order(n)
        if rows is None:
            rows = (0,) * n
        rows = tuple(rows)
        if len(rows) != n:
            raise ValueError(f"expected {n} adjacency rows, got {len(rows)}")
        if not _trusted:
            full = (1 << n) - 1
            for v, row in enumerate(rows):
                if row & ~full:
                    raise ValueError(f"row {v} references a vertex outside 0..{n - 1}")
                if row >> v & 1:
                    raise ValueError(f"loop at vertex {v}")
                for u in iter_bits(row):
                    if not rows[u] >> v & 1:
                        raise ValueError(f"asymmetric adjacency between {v} and {u}")
        self._n = n
        self._rows = rows
        self._edge_count = sum(r.bit_count() for r in rows) // 2

    # -- construction -------------------------------------------------------

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, _trusted=True)

    @classmethod
    def complete(cls, n: int) -> Graph:
        _check_order(n)
        full = (1 << n) - 1
        return cls(n, [full ^ (1 << v) for v in range(n)], _trusted=True)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        _check_order(n)
        rows = [0] * n
        for u, v in edges:
            _check_pair(n, u, v)
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows, _trusted=True)

    @classmethod
    def path(cls, n: int) -> Graph:
        return cls.from_edges(n, ((i, i + 1) for i in range(n - 1)))

    @classmethod
    def cycle(cls, n: int) -> Graph:
        if n < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def star(cls, leaves: int) -> Graph:
        """The star ``K_{1,leaves}`` with centre 0."""
        return cls.from_edges(leaves + 1, ((0, i) for i in range(1, leaves + 1)))

    # -- basic accessors ----------------------------------------------------

    @property
    def n(self) -> int:
        return self._n

    @property
    def rows(self) -> tuple[int, ...]:
        return self._rows

    @property
    def edge_count(self) -> int:
        return self._edge_count

    def __len__(self) -> int:
        return self._n

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self._n, self._rows))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, e={self._edge_count})"

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self._rows[v]))

    def degree(self, v: int) -> int:
        return self._rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self._rows]

    def degree_sequence(self) -> list[int]:
        """Degrees sorted in non-increasing order."""
        return sorted(self.degrees(), reverse=True)

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u, row in enumerate(self._rows):
            for v in iter_bits(row >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def non_edges(self) -> list[tuple[int, int]]:
        return self.complement().edges()

    # -- derived graphs -----------------------------------------------------

    def add_edge(self, u: int, v: int) -> Graph:
        _check_pair(self._n, u, v)
        if self.has_edge(u, v):
            return self
        rows = list(self._rows)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self._n, rows, _trusted=True)

    def add_edges(self, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = list(self._rows)
        for u, v in edges:
            _check_pair(self._n, u, v)
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return Graph(self._n, rows, _trusted=True)

    def remove_edge(self, u: int, v: int) -> Graph:
        _check_pair(self._n, u, v)
        rows = list(self._rows)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(self._n, rows, _trusted=True)

    def add_vertex(self, neighbors: Iterable[int] | int = 0) -> Graph:
        """Append vertex ``n`` adjacent to ``neighbors`` (a mask or an iterable)."""
        nbrs = neighbors if isinstance(neighbors, int) else mask_of(neighbors)
        if nbrs >> self._n:
            raise ValueError("neighbour outside the current vertex range")
        v = self._n
        rows = [r | (1 << v) if nbrs >> u & 1 else r for u, r in enumerate(self._rows)]
        rows.append(nbrs)
        return Graph(v + 1, rows, _trusted=True)

    def complement(self) -> Graph:
        full = (1 << self._n) - 1
        return Graph(self._n, [full ^ r ^ (1 << v) for v, r in enumerate(self._rows)], _trusted=True)

    def disjoint_union(self, other: Graph) -> Graph:
        off = self._n
        _check_order(off + other._n)
        rows = list(self._rows) + [r << off for r in other._rows]
        return Graph(off + other._n, rows, _trusted=True)

    __or__ = disjoint_union

    def join(self, other: Graph) -> Graph:
        off = self._n
        _check_order(off + other._n)
        left = (1 << off) - 1
        right = ((1 << other._n) - 1) << off
        rows = [r | right for r in self._rows] + [(r << off) | left for r in other._rows]
        return Graph(off + other._n, rows, _trusted=True)

    def times(self, copies: int) -> Graph:
        """``copies`` disjoint copies of this graph."""
        g = Graph.empty(0)
        for _ in range(copies):
            g = g.disjoint_union(self)
        return g

    def induced(self, vertices: Iterable[int]) -> Graph:
        """Induced subgraph on ``vertices``, relabelled in increasing order."""
        vs = sorted(set(vertices))
        index = {v: i for i, v in enumerate(vs)}
        rows = []
        for v in vs:
            row = 0
            for u in iter_bits(self._rows[v]):
                i = index.get(u)
                if i is not None:
                    row |= 1 << i
            rows.append(row)
        return Graph(len(vs), rows, _trusted=True)

    def delete_vertices(self, vertices: Iterable[int]) -> Graph:
        drop = set(vertices)
        return self.induced(v for v in range(self._n) if v not in drop)

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        n = self._n
        if sorted(perm) != list(range(n)):
            raise ValueError("relabelling must be a permutation of the vertex set")
        rows = [0] * n
        for v, row in enumerate(self._rows):
            new = 0
            for u in iter_bits(row):
                new |= 1 << perm[u]
            rows[perm[v]] = new
        return Graph(n, rows, _trusted=True)

    # -- structure ----------------------------------------------------------

    def component_masks(self, within: int | None = None) -> list[int]:
        """Connected components as bitmasks, ordered by their least vertex.

        With ``within`` given, components of the subgraph induced on that mask.
        """
        rows = self._rows
        todo = (1 << self._n) - 1 if within is None else within
        out = []
        while todo:
            seed = todo & -todo
            comp = seed
            frontier = seed
            while frontier:
                nxt = 0
                for v in iter_bits(frontier):
                    nxt |= rows[v]
                if within is not None:
                    nxt &= within
                frontier = nxt & ~comp
                comp |= frontier
            out.append(comp)
            todo &= ~comp
        return out

    def components(self) -> list[list[int]]:
        return [list(iter_bits(m)) for m in self.component_masks()]

    def is_connected(self) -> bool:
        return self._n <= 1 or len(self.component_masks()) == 1

    def isolated_vertices(self) -> list[int]:
        return [v for v, r in enumerate(self._rows) if r == 0]

    # -- serialization ------------------------------------------------------

    def to_graph6(self) -> str:
        from stlab.graph6 import encode

        return encode(self)

    @classmethod
    def from_graph6(cls, text: str) -> Graph:
        from stlab.graph6 import decode

        return decode(text)

    def canonical_form(self):
        from stlab.canon import canonical_form

        return canonical_form(self)

    def is_isomorphic(self, other: Graph) -> bool:
        from stlab.canon import is_isomorphic

        return is_isomorphic(self, other)


def _check_pair(n: int, u: int, v: int) -> None:
    if not (0 <= u < n and 0 <= v < n):
        raise IndexError(f"edge ({u}, {v}) out of range for {n} vertices")
    if u == v:
        raise ValueError(f"loop requested at vertex {u}")


def empty(n: int) -> Graph:
    return Graph.empty(n)


def complete(n: int) -> Graph:
    return Graph.complete(n)


def max_edges(n: int) -> int:
    return comb(n, 2)
