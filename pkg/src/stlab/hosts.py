"""Spanning-subgraph embeddability into the host families.

Each test answers "is ``G`` (up to isomorphism) a subgraph of the host of the
same order?" through a structural characterisation rather than generic
subgraph isomorphism, and on success returns a :class:`HostWitness` holding an
explicit vertex map into the host's fixed layout (see :mod:`stlab.families`).

A host whose parameters are invalid at the order of ``G`` does not exist, and
the corresponding test returns ``None``.
"""

from __future__ import annotations

import itertools
import re
from collections.abc import Callable
from dataclasses import dataclass, field
from functools import lru_cache

from stlab.canon import canonical_labeling
from stlab.families import FamilyError, FamilySpec, build, parse_attachment
from stlab.forbidden import contains_k_p3
from stlab.graph import Graph, iter_bits


@dataclass(frozen=True)
class HostWitness:
    """``mapping[v]`` is the host vertex receiving vertex ``v`` of the queried graph."""

    host: FamilySpec
    mapping: tuple[int, ...]
    detail: dict = field(default_factory=dict, compare=False)

    def verify(self, g: Graph) -> bool:
        h = build(self.host)
        m = self.mapping
        if len(m) != g.n or h.n != g.n or sorted(m) != list(range(g.n)):
            return False
        return all(h.has_edge(m[u], m[v]) for u, v in g.edges())

    def to_json(self) -> dict:
        return {"host": str(self.host), "mapping": list(self.mapping), **self.detail}


def _make_spec(factory: Callable[[], FamilySpec]) -> FamilySpec | None:
    try:
        return factory()
    except FamilyError:
        return None


def _branch(avail: int, budget: int, obstruction: Callable[[int], list[int] | None]) -> int | None:
    """Smallest-first search for a deletion set (as a mask) of size <= budget.

    ``obstruction(avail)`` returns ``None`` when the remaining graph is
    acceptable, otherwise a list of vertices one of which must be deleted.
    """
    obs = obstruction(avail)
    if obs is None:
        return 0
    if budget == 0:
        return None
    for v in obs:
        sub = _branch(avail & ~(1 << v), budget - 1, obstruction)
        if sub is not None:
            return sub | (1 << v)
    return None


def _first_edge(rows, avail: int, skip: tuple[int, int] | None = None) -> tuple[int, int] | None:
    for u in iter_bits(avail):
        for v in iter_bits(rows[u] & avail & ~((1 << (u + 1)) - 1)):
            if (u, v) != skip:
                return u, v
    return None


def _pad(clique: list[int], size: int, pool: list[int]) -> list[int]:
    extra = size - len(clique)
    return sorted(clique + pool[:extra])


def _layout_matching(mapping: list[int], edges, singles, start: int, p: int, s: int) -> None:
    """Place a max-degree-1 remainder into ``p`` pair slots then ``s`` single slots."""
    slots = list(range(start, start + 2 * p + s))
    i = 0
    for u, v in edges:
        mapping[u], mapping[v] = slots[i], slots[i + 1]
        i += 2
    for v in singles:
        mapping[v] = slots[i]
        i += 1
    assert i == len(slots)


def _degree_le1_parts(rows, avail: int) -> tuple[list[tuple[int, int]], list[int]]:
    edges, singles = [], []
    for v in iter_bits(avail):
        nb = rows[v] & avail
        if not nb:
            singles.append(v)
        else:
            u = nb.bit_length() - 1
            if v < u:
                edges.append((v, u))
    return edges, singles


# -- S and S+ ----------------------------------------------------------------


def embeds_in_S(g: Graph, h: int) -> HostWitness | None:
    """``G ⊆ S_{n,h}`` iff ``G`` has a vertex cover of size at most ``h``."""
    spec = _make_spec(lambda: FamilySpec.S(g.n, h))
    if spec is None:
        return None
    rows = g.rows

    def obstruction(avail):
        e = _first_edge(rows, avail)
        return None if e is None else list(e)

    full = (1 << g.n) - 1
    cover = _branch(full, h, obstruction)
    if cover is None:
        return None
    base = list(iter_bits(cover))
    clique = _pad(base, h, [v for v in range(g.n) if not cover >> v & 1])
    mapping = [0] * g.n
    for i, v in enumerate(clique):
        mapping[v] = i
    rest = [v for v in range(g.n) if v not in set(clique)]
    for i, v in enumerate(rest):
        mapping[v] = h + i
    return HostWitness(spec, tuple(mapping), {"cover": base})


def embeds_in_S_plus(g: Graph, h: int) -> HostWitness | None:
    """``G ⊆ S+_{n,h}`` iff some set of at most ``h`` vertices leaves at most one edge."""
    spec = _make_spec(lambda: FamilySpec.S_plus(g.n, h))
    if spec is None:
        return None
    rows = g.rows

    def obstruction(avail):
        e1 = _first_edge(rows, avail)
        if e1 is None:
            return None
        e2 = _first_edge(rows, avail, skip=e1)
        if e2 is None:
            return None
        return sorted(set(e1) | set(e2))

    full = (1 << g.n) - 1
    cset = _branch(full, h, obstruction)
    if cset is None:
        return None
    avail = full & ~cset
    extra = _first_edge(rows, avail)
    keep = set(extra or ())
    pool = [v for v in range(g.n) if avail >> v & 1 and v not in keep]
    clique = _pad(list(iter_bits(cset)), h, pool)
    mapping = [0] * g.n
    for i, v in enumerate(clique):
        mapping[v] = i
    rest = [v for v in range(g.n) if v not in set(clique) and v not in keep]
    nxt = h
    if extra:
        mapping[extra[0]], mapping[extra[1]] = h, h + 1
        nxt = h + 2
    for i, v in enumerate(rest):
        mapping[v] = nxt + i
    return HostWitness(spec, tuple(mapping), {"deleted": list(iter_bits(cset)), "extra_edge": list(extra or ())})


# -- F -----------------------------------------------------------------------


def _p3_obstruction(rows):
    def obstruction(avail):
        best = None
        for v in iter_bits(avail):
            d = (rows[v] & avail).bit_count()
            if d >= 2 and (best is None or d > best[0]):
                best = (d, v)
        if best is None:
            return None
        v = best[1]
        a, b = list(itertools.islice(iter_bits(rows[v] & avail), 2))
        return [v, a, b]

    return obstruction


def embeds_in_F(g: Graph, k: int) -> HostWitness | None:
    """``G ⊆ F_{n,k}`` iff deleting at most ``k-1`` vertices leaves maximum degree <= 1."""
    if k < 1:
        raise ValueError("k must be positive")
    spec = _make_spec(lambda: FamilySpec.F(g.n, k))
    if spec is None:
        return None
    rows = g.rows
    full = (1 << g.n) - 1
    cset = _branch(full, k - 1, _p3_obstruction(rows))
    if cset is None:
        return None
    avail = full & ~cset
    edges, singles = _degree_le1_parts(rows, avail)
    # pad the clique with isolated vertices first, then with matched vertices
    clique = list(iter_bits(cset))
    while len(clique) < k - 1:
        if singles:
            clique.append(singles.pop())
        else:
            u, v = edges.pop()
            clique.append(u)
            singles.append(v)
    clique.sort()
    mapping = [0] * g.n
    for i, v in enumerate(clique):
        mapping[v] = i
    _layout_matching(mapping, edges, sorted(singles), k - 1, spec.p, spec.s)
    return HostWitness(spec, tuple(mapping), {"deleted": list(iter_bits(cset))})


# -- F with an attached graph -------------------------------------------------


class _Attachment:
    """Decides whether a graph on ``|H|`` vertices is a spanning subgraph of ``H``."""

    def __init__(self, name: str, h: Graph):
        self.name = name
        self.graph = h
        self.complete = h.edge_count == h.n * (h.n - 1) // 2
        self._table: dict | None = None

    def _subgraphs(self) -> dict:
        if self._table is None:
            edges = self.graph.edges()
            if len(edges) > 20:
                raise ValueError(f"attachment {self.name} has too many edges for tabulation")
            table: dict = {}
            for bits in range(1 << len(edges)):
                sub = Graph.from_edges(self.graph.n, [e for i, e in enumerate(edges) if bits >> i & 1])
                lab = canonical_labeling(sub)
                table.setdefault(lab.code, lab.lab)
            self._table = table
        return self._table

    def embed(self, part: Graph) -> list[int] | None:
        """Map vertex ``i`` of ``part`` to a vertex of ``H``, or ``None``."""
        if part.n != self.graph.n:
            return None
        if self.complete:
            return list(range(part.n))
        lab = canonical_labeling(part)
        target = self._subgraphs().get(lab.code)
        if target is None:
            return None
        out = [0] * part.n
        for v, w in zip(lab.lab, target):
            out[v] = w
        return out


@lru_cache(maxsize=64)
def _attachment(name: str) -> _Attachment:
    canonical, h = parse_attachment(name)
    return _Attachment(canonical, h)


def _fit_remainder(g: Graph, avail: int, pad: int, att: _Attachment):
    """Try to finish with ``pad`` more clique vertices taken from the small part.

    Returns ``(extra_clique, X, rest_edges, rest_singles, map_into_H)`` or ``None``.
    """
    rows = g.rows
    comps = g.component_masks(within=avail)
    big = [c for c in comps if c.bit_count() >= 3]
    big_mask = 0
    for c in big:
        big_mask |= c
    k2 = [tuple(iter_bits(c)) for c in comps if c.bit_count() == 2]
    k1 = [c.bit_length() - 1 for c in comps if c.bit_count() == 1]
    hsize = att.graph.n
    nbig = big_mask.bit_count()
    if nbig > hsize:
        return None
    for r3 in range(pad // 2 + 1):
        for r2 in range(pad - 2 * r3 + 1):
            r1 = pad - 2 * r3 - r2
            if r1 > len(k1) or r2 + r3 > len(k2):
                continue
            pool_k2 = k2[r2 + r3:]
            pool_k1 = k1[r1:] + [e[1] for e in k2[:r2]]
            extra = k1[:r1] + [e[0] for e in k2[:r2]] + [v for e in k2[r2:r2 + r3] for v in e]
            need = hsize - nbig
            for j in range(min(need // 2, len(pool_k2)), -1, -1):
                a = need - 2 * j
                if a > len(pool_k1):
                    continue
                xs = sorted(list(iter_bits(big_mask)) + [v for e in pool_k2[:j] for v in e] + pool_k1[:a])
                part = g.induced(xs)
                emb = att.embed(part)
                if emb is None:
                    continue
                rest_edges = pool_k2[j:]
                rest_singles = pool_k1[a:]
                return extra, xs, rest_edges, rest_singles, emb
    return None


def embeds_in_F_attach(g: Graph, k: int, h: Graph | str) -> HostWitness | None:
    """``G ⊆ K_{k-2} ∇ (H ∪ p·K_2 ∪ K_s)``.

    Equivalently, some set ``C`` of at most ``k-2`` vertices leaves a graph
    whose components of order >= 3, together with some K2 and K1 components,
    fill exactly ``|H|`` vertices and embed in ``H``, while everything else
    has maximum degree <= 1.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    if isinstance(h, str):
        att = _attachment(h)
    else:
        att = _Attachment("g6:" + h.to_graph6(), h)
    spec = _make_spec(lambda: FamilySpec("F_attach", g.n, k=k, attachment=att.graph, attachment_name=att.name))
    if spec is None:
        return None
    c = k - 2
    found: dict = {}

    def obstruction(avail):
        pad = c - ((1 << g.n) - 1 & ~avail).bit_count()
        fit = _fit_remainder(g, avail, pad, att)
        if fit is not None:
            found["fit"] = (avail, fit)
            return None
        # a valid deletion set must use a vertex of some component of order >= 3
        return [v for comp in g.component_masks(within=avail) if comp.bit_count() >= 3 for v in iter_bits(comp)]

    full = (1 << g.n) - 1
    cset = _branch(full, c, obstruction)
    if cset is None:
        return None
    avail, (extra, xs, rest_edges, rest_singles, emb) = found["fit"]
    clique = sorted(list(iter_bits(full & ~avail)) + extra)
    mapping = [0] * g.n
    for i, v in enumerate(clique):
        mapping[v] = i
    for i, v in enumerate(xs):
        mapping[v] = c + emb[i]
    _layout_matching(mapping, rest_edges, sorted(rest_singles), c + att.graph.n, spec.p, spec.s)
    return HostWitness(spec, tuple(mapping), {"deleted": list(iter_bits(cset)), "attached": xs})


# -- L and H_{n,1} ------------------------------------------------------------


def _pack(sizes: list[int], bins: list[int]) -> list[int] | None:
    """Assign each item to a bin so that every bin is filled exactly."""
    order = sorted(range(len(sizes)), key=lambda i: -sizes[i])
    free = list(bins)
    where = [0] * len(sizes)

    def go(t: int) -> bool:
        if t == len(order):
            return all(f == 0 for f in free)
        i = order[t]
        tried = set()
        for b in range(len(free)):
            key = (free[b], bins[b])
            if free[b] >= sizes[i] and key not in tried:
                tried.add(key)
                free[b] -= sizes[i]
                where[i] = b
                if go(t + 1):
                    return True
                free[b] += sizes[i]
        return False

    return where if go(0) else None


def embeds_in_L(g: Graph, t1: int, t2: int, h: int) -> HostWitness | None:
    """``G ⊆ K_1 ∇ (t1·K_h ∪ t2·K_{h+1})``: an apex whose removal leaves
    components that pack exactly into the cliques."""
    spec = _make_spec(lambda: FamilySpec.L(t1, t2, h))
    if spec is None or spec.n != g.n:
        return None
    bins = [h] * t1 + [h + 1] * t2
    starts = []
    pos = 1
    for b in bins:
        starts.append(pos)
        pos += b
    full = (1 << g.n) - 1
    for apex in range(g.n):
        comps = g.component_masks(within=full & ~(1 << apex))
        sizes = [c.bit_count() for c in comps]
        if sizes and max(sizes) > h + (t2 > 0):
            continue
        where = _pack(sizes, bins)
        if where is None:
            continue
        mapping = [0] * g.n
        fill = list(starts)
        for comp, b in zip(comps, where):
            for v in iter_bits(comp):
                mapping[v] = fill[b]
                fill[b] += 1
        return HostWitness(spec, tuple(mapping), {"apex": apex})
    return None


def embeds_in_Hn1(g: Graph) -> HostWitness | None:
    """Dominating vertex ``x``, second apex ``y``, a pair of non-neighbours of ``y``
    carrying at most one edge, and no other edges."""
    spec = _make_spec(lambda: FamilySpec.H_n1(g.n))
    if spec is None:
        return None
    rows = g.rows
    n = g.n
    full = (1 << n) - 1
    for x in range(n):
        for y in range(n):
            if x == y:
                continue
            avail = full & ~(1 << x) & ~(1 << y)
            e1 = _first_edge(rows, avail)
            if e1 is not None and _first_edge(rows, avail, skip=e1) is not None:
                continue
            far = avail & ~rows[y]
            if e1 is not None:
                a, b = e1
                if not (far >> a & 1 and far >> b & 1):
                    continue
            else:
                if far.bit_count() < 2:
                    continue
                a, b = list(itertools.islice(iter_bits(far), 2))
            mapping = [0] * n
            mapping[x], mapping[y], mapping[a], mapping[b] = 0, 1, 2, 3
            rest = [v for v in range(n) if v not in (x, y, a, b)]
            for i, v in enumerate(rest):
                mapping[v] = 4 + i
            return HostWitness(spec, tuple(mapping), {"apex": x, "second": y})
    return None


# -- host descriptors ---------------------------------------------------------


@dataclass(frozen=True)
class HostFamily:
    kind: str
    h: int = 0
    k: int = 0
    t1: int = 0
    t2: int = 0
    attachment: str = ""

    @property
    def label(self) -> str:
        if self.kind == "S":
            return f"S(h={self.h})"
        if self.kind == "S_plus":
            return f"Splus(h={self.h})"
        if self.kind == "F":
            return f"F(k={self.k})"
        if self.kind == "F_attach":
            return f"Fatt({self.attachment},k={self.k})"
        if self.kind == "L":
            return f"L({self.t1},{self.t2},{self.h})"
        return "Hn1"

    def __str__(self) -> str:
        return self.label

    def embed(self, g: Graph) -> HostWitness | None:
        if self.kind == "S":
            return embeds_in_S(g, self.h)
        if self.kind == "S_plus":
            return embeds_in_S_plus(g, self.h)
        if self.kind == "F":
            return embeds_in_F(g, self.k)
        if self.kind == "F_attach":
            return embeds_in_F_attach(g, self.k, self.attachment)
        if self.kind == "L":
            return embeds_in_L(g, self.t1, self.t2, self.h)
        return embeds_in_Hn1(g)

    def spec(self, n: int) -> FamilySpec:
        if self.kind == "S":
            return FamilySpec.S(n, self.h)
        if self.kind == "S_plus":
            return FamilySpec.S_plus(n, self.h)
        if self.kind == "F":
            return FamilySpec.F(n, self.k)
        if self.kind == "F_attach":
            return FamilySpec.F_attach(n, self.k, self.attachment)
        if self.kind == "L":
            return FamilySpec.L(self.t1, self.t2, self.h)
        return FamilySpec.H_n1(n)

    @classmethod
    def parse(cls, text: str) -> HostFamily:
        t = text.replace(" ", "")
        patterns = [
            (r"S\(h=(\d+)\)", lambda m: cls("S", h=int(m[1]))),
            (r"Splus\(h=(\d+)\)", lambda m: cls("S_plus", h=int(m[1]))),
            (r"F\(k=(\d+)\)", lambda m: cls("F", k=int(m[1]))),
            (r"Fatt\(([^,]+),k=(\d+)\)", lambda m: cls("F_attach", k=int(m[2]), attachment=_attachment(m[1]).name)),
            (r"L\((\d+),(\d+),(\d+)\)", lambda m: cls("L", t1=int(m[1]), t2=int(m[2]), h=int(m[3]))),
            (r"Hn1", lambda m: cls("H_n1")),
        ]
        for pat, make in patterns:
            m = re.fullmatch(pat, t)
            if m:
                return make(m)
        raise ValueError(f"unknown host label {text!r}")


def stability_hosts(k: int) -> tuple[HostFamily, ...]:
    return (
        HostFamily("F", k=k),
        HostFamily("F_attach", k=k, attachment="K4"),
        HostFamily("F_attach", k=k, attachment="K5"),
        HostFamily("F_attach", k=k, attachment="N6"),
    )


class PreconditionError(ValueError):
    pass


def classify_2p3_free(g: Graph) -> frozenset[str]:
    """Labels of the hosts among ``F(k=2)`` and ``Fatt(K4|K5|N6, k=2)`` containing ``G``."""
    if g.n < 6:
        raise PreconditionError("classification is stated for n >= 6")
    if contains_k_p3(g, 2) is not None:
        raise PreconditionError("graph contains 2·P3")
    return frozenset(host.label for host in stability_hosts(2) if host.embed(g) is not None)
