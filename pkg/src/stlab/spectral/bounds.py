"""Classical upper bounds on q and the two certified bound chains."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from stlab.families import FamilySpec
from stlab.graph import Graph, iter_bits
from stlab.spectral.compare import Order, compare_root_to_rational, compare_roots
from stlab.spectral.poly import Poly, _frac_str, from_high
from stlab.spectral.quotient import q_exact


class DegenerateGraphError(ValueError):
    """A bound was requested on a graph outside its domain."""


def merris_bound(g: Graph) -> Fraction:
    """``max_v d(v) + m(v)`` where ``m(v)`` is the mean degree of the neighbours of ``v``.

    Isolated vertices are skipped; a graph with no edges gets 0.
    """
    degs = g.degrees()
    best = Fraction(0)
    for v, row in enumerate(g.rows):
        d = degs[v]
        if d:
            best = max(best, d + Fraction(sum(degs[u] for u in iter_bits(row)), d))
    return best


def edge_degree_bound(g: Graph) -> int:
    """``max`` of ``d(u) + d(v)`` over edges ``uv``."""
    if g.edge_count == 0:
        raise DegenerateGraphError("edge-degree bound needs at least one edge")
    degs = g.degrees()
    return max(degs[u] + degs[v] for u, v in g.edges())


def size_order_bound(g: Graph) -> Fraction:
    """``2e/(n-1) + n - 2``."""
    if g.n < 2:
        raise DegenerateGraphError("size-order bound needs n >= 2")
    return Fraction(2 * g.edge_count, g.n - 1) + g.n - 2


@dataclass(frozen=True)
class Link:
    left: str
    relation: str
    right: str
    holds: bool
    evidence: dict = field(default_factory=dict, compare=False)


@dataclass(frozen=True)
class BoundChain:
    name: str
    params: dict
    in_hypothesis: bool
    links: tuple[Link, ...]

    @property
    def holds(self) -> bool:
        return all(l.holds for l in self.links)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "params": self.params,
            "in_hypothesis": self.in_hypothesis,
            "holds": self.holds,
            "links": [
                {"left": l.left, "relation": l.relation, "right": l.right, "holds": l.holds, "evidence": l.evidence}
                for l in self.links
            ],
        }


def _root_vs_rational(label: str, poly: Poly, x: Fraction, want: tuple[Order, ...], relation: str) -> Link:
    got = compare_root_to_rational(poly, x)
    return Link(label, relation, _frac_str(x), got in want, {"order": got.value, "value": _frac_str(x)})


def _root_vs_root(la: str, pa: Poly, lb: str, pb: Poly, want: tuple[Order, ...], relation: str) -> Link:
    cert = compare_roots(pa, pb)
    return Link(la, relation, lb, cert.order in want, cert.to_json())


def s_chain(h: int, n: int) -> BoundChain:
    """``q(S+) > q(S) > n+2h-2 - 2(h^2-h)/(n+2h-3) > n+2h-3``, each link exact."""
    if h < 2:
        raise ValueError("chain is stated for h >= 2")
    splus = q_exact(FamilySpec.S_plus(n, h)).poly
    s = q_exact(FamilySpec.S(n, h)).poly
    mid = Fraction(n + 2 * h - 2) - Fraction(2 * (h * h - h), n + 2 * h - 3)
    low = Fraction(n + 2 * h - 3)
    links = (
        _root_vs_root("q(S+)", splus, "q(S)", s, (Order.GREATER,), ">"),
        _root_vs_rational("q(S)", s, mid, (Order.GREATER,), ">"),
        Link(_frac_str(mid), ">", _frac_str(low), mid > low),
    )
    return BoundChain("S-chain", {"h": h, "n": n}, n >= 7 * h * h, links)


def f_quadratic(n: int, k: int) -> Poly:
    """``x^2 - (n+2k-2)x + 2n + 2k^2 - 4k - 2``; its larger root is the upper bound."""
    return from_high([1, -(n + 2 * k - 2), 2 * n + 2 * k * k - 4 * k - 2])


def f_chain(k: int, n: int) -> BoundChain:
    """``n+2k-5 < q(F) <= larger root of f_quadratic``, and ``q(F) <= n+2k-4`` for ``k >= 3``."""
    if k < 2:
        raise ValueError("bounds are stated for k >= 2")
    f = q_exact(FamilySpec.F(n, k)).poly
    links = [
        _root_vs_rational("q(F)", f, Fraction(n + 2 * k - 5), (Order.GREATER,), ">"),
        _root_vs_root("q(F)", f, "root(g)", f_quadratic(n, k), (Order.LESS, Order.EQUAL), "<="),
    ]
    if k >= 3:
        links.append(_root_vs_rational("q(F)", f, Fraction(n + 2 * k - 4), (Order.LESS, Order.EQUAL), "<="))
    return BoundChain("F-bounds", {"k": k, "n": n}, n >= 2 * k * k, tuple(links))
