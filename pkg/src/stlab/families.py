"""Named extremal families, their closed-form edge counts, and Turán bounds.

Vertex layouts are fixed so that callers can address known vertices:

* ``S`` / ``S_plus``: clique ``0..h-1``, independent side ``h..n-1``; the extra
  edge of ``S_plus`` is ``(h, h+1)``.
* ``L``: apex ``0``, then the ``t1`` copies of ``K_h``, then the ``t2`` copies
  of ``K_{h+1}``.
* ``F``: clique ``0..k-2``, then the matching pairs, then the leftover vertex.
* ``F_attach``: clique ``0..k-3``, then the attachment graph, then pairs, then
  the leftover vertex.  ``F_attach(n, k, H)`` is ``K_{k-2}`` joined to
  ``H ∪ p·K_2 ∪ K_s``, i.e. the host obtained from ``F(n, k)`` by trading one
  clique vertex and some pairs for a copy of ``H``.
* ``H_n1``: ``0`` is the dominating vertex, ``1`` the second apex, ``2, 3`` the
  triangle pair hanging off ``0``, and ``4..n-1`` the common neighbours.
* ``N6``: triangle ``0, 1, 2`` with pendants ``3-0``, ``4-1``, ``5-2``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from math import comb

from stlab.forbidden import LinearForest
from stlab.graph import Graph

KINDS = ("S", "S_plus", "L", "F", "F_attach", "H_n1", "N6", "Complete")

_TEXT_NAMES = {
    "S": "S",
    "S_plus": "Splus",
    "L": "L",
    "F": "F",
    "F_attach": "Fatt",
    "H_n1": "Hn1",
    "N6": "N6",
    "Complete": "K",
}
_FROM_TEXT = {v.lower(): k for k, v in _TEXT_NAMES.items()}
_FROM_TEXT.update({"s_plus": "S_plus", "f_attach": "F_attach", "h_n1": "H_n1", "complete": "Complete"})


class FamilyError(ValueError):
    """Bad family parameters or an unparsable family literal."""


def n6() -> Graph:
    return Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)])


def parse_attachment(text: str) -> tuple[str, Graph]:
    """Named small graph: ``N6``, ``K<m>``, ``P<m>``, ``C<m>``, ``S<m>`` (star with m leaves) or ``g6:<code>``."""
    t = text.strip()
    if t.upper() == "N6":
        return "N6", n6()
    if t.startswith("g6:"):
        g = Graph.from_graph6(t[3:])
        return t, g
    m = re.fullmatch(r"([KPCS])(\d+)", t, flags=re.IGNORECASE)
    if not m:
        raise FamilyError(f"unknown attachment graph {text!r}")
    letter, size = m.group(1).upper(), int(m.group(2))
    if letter == "K":
        return f"K{size}", Graph.complete(size)
    if letter == "P":
        return f"P{size}", Graph.path(size)
    if letter == "C":
        return f"C{size}", Graph.cycle(size)
    return f"S{size}", Graph.star(size)


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    n: int
    h: int = 0
    k: int = 0
    t1: int = 0
    t2: int = 0
    attachment: Graph | None = field(default=None, compare=False)
    attachment_name: str = ""

    def __post_init__(self):
        if self.kind not in KINDS:
            raise FamilyError(f"unknown family kind {self.kind!r}")
        self._validate()

    # -- constructors -------------------------------------------------------

    @classmethod
    def S(cls, n: int, h: int) -> FamilySpec:
        return cls("S", n, h=h)

    @classmethod
    def S_plus(cls, n: int, h: int) -> FamilySpec:
        return cls("S_plus", n, h=h)

    @classmethod
    def L(cls, t1: int, t2: int, h: int) -> FamilySpec:
        return cls("L", t1 * h + t2 * (h + 1) + 1, h=h, t1=t1, t2=t2)

    @classmethod
    def F(cls, n: int, k: int) -> FamilySpec:
        return cls("F", n, k=k)

    @classmethod
    def F_attach(cls, n: int, k: int, attachment: Graph | str) -> FamilySpec:
        if isinstance(attachment, str):
            name, g = parse_attachment(attachment)
        else:
            name, g = "g6:" + attachment.to_graph6(), attachment
        return cls("F_attach", n, k=k, attachment=g, attachment_name=name)

    @classmethod
    def H_n1(cls, n: int) -> FamilySpec:
        return cls("H_n1", n)

    @classmethod
    def N6(cls) -> FamilySpec:
        return cls("N6", 6)

    @classmethod
    def complete(cls, n: int) -> FamilySpec:
        return cls("Complete", n)

    # -- parameters ---------------------------------------------------------

    @property
    def attachment_order(self) -> int:
        return self.attachment.n if self.attachment is not None else 0

    @property
    def clique_order(self) -> int:
        """Order of the joined clique for the F-type families."""
        if self.kind == "F":
            return self.k - 1
        if self.kind == "F_attach":
            return self.k - 2
        raise FamilyError(f"{self.kind} has no clique part")

    def _rest(self) -> int:
        return self.n - self.clique_order - (self.attachment_order if self.kind == "F_attach" else 0)

    @property
    def p(self) -> int:
        return self._rest() // 2

    @property
    def s(self) -> int:
        return self._rest() % 2

    def _validate(self) -> None:
        n, h, k = self.n, self.h, self.k
        kind = self.kind
        if n < 0:
            raise FamilyError("n must be non-negative")
        if kind in ("S", "S_plus"):
            if not 1 <= h < n:
                raise FamilyError(f"{kind} needs 1 <= h < n (got h={h}, n={n})")
            if kind == "S_plus" and n - h < 2:
                raise FamilyError("S_plus needs at least two independent vertices")
        elif kind == "L":
            if h < 1 or self.t1 < 0 or self.t2 < 0:
                raise FamilyError("L needs h >= 1 and t1, t2 >= 0")
            if n != self.t1 * h + self.t2 * (h + 1) + 1:
                raise FamilyError("L needs n = t1*h + t2*(h+1) + 1")
        elif kind == "F":
            if not n > k >= 1:
                raise FamilyError(f"F needs n > k >= 1 (got n={n}, k={k})")
        elif kind == "F_attach":
            g = self.attachment
            if g is None:
                raise FamilyError("F_attach needs an attachment graph")
            if k < 2:
                raise FamilyError("F_attach needs k >= 2")
            if g.n < 2 or not g.is_connected():
                raise FamilyError("the attachment graph must be connected with at least 2 vertices")
            if n < k - 2 + g.n:
                raise FamilyError(f"F_attach needs n >= k - 2 + |H| (got n={n}, k={k}, |H|={g.n})")
        elif kind == "H_n1":
            if n < 7:
                raise FamilyError("H_n1 needs n >= 7")
        elif kind == "N6":
            if n != 6:
                raise FamilyError("N6 has order 6")
        elif kind == "Complete":
            if n < 1:
                raise FamilyError("K needs n >= 1")

    # -- text form ----------------------------------------------------------

    def __str__(self) -> str:
        name = _TEXT_NAMES[self.kind]
        if self.kind in ("S", "S_plus"):
            return f"{name}(n={self.n},h={self.h})"
        if self.kind == "L":
            return f"L(t1={self.t1},t2={self.t2},h={self.h})"
        if self.kind == "F":
            return f"F(n={self.n},k={self.k})"
        if self.kind == "F_attach":
            return f"Fatt(n={self.n},k={self.k},H={self.attachment_name})"
        if self.kind == "H_n1":
            return f"Hn1(n={self.n})"
        if self.kind == "N6":
            return "N6"
        return f"K(n={self.n})"

    @classmethod
    def parse(cls, text: str) -> FamilySpec:
        m = re.fullmatch(r"\s*([A-Za-z_0-9]+?)\s*(?:\((.*)\))?\s*", text)
        if not m:
            raise FamilyError(f"cannot parse family {text!r}")
        head = m.group(1)
        kind = _FROM_TEXT.get(head.lower())
        if kind is None:
            raise FamilyError(f"unknown family {head!r} in {text!r}")
        args: dict[str, str] = {}
        if m.group(2) is not None and m.group(2).strip():
            for part in m.group(2).split(","):
                key, sep, val = part.partition("=")
                if not sep:
                    raise FamilyError(f"expected key=value, got {part!r} in {text!r}")
                args[key.strip()] = val.strip()

        def num(key: str) -> int:
            if key not in args:
                raise FamilyError(f"{head} needs parameter {key!r}")
            try:
                return int(args.pop(key))
            except ValueError:
                raise FamilyError(f"parameter {key!r} must be an integer") from None

        if kind in ("S", "S_plus"):
            spec = cls(kind, num("n"), h=num("h"))
        elif kind == "L":
            t1, t2, h = num("t1"), num("t2"), num("h")
            n = int(args.pop("n")) if "n" in args else t1 * h + t2 * (h + 1) + 1
            spec = cls("L", n, h=h, t1=t1, t2=t2)
        elif kind == "F":
            spec = cls.F(num("n"), num("k"))
        elif kind == "F_attach":
            if "H" not in args:
                raise FamilyError("Fatt needs parameter 'H'")
            n, k = num("n"), num("k")
            spec = cls.F_attach(n, k, args.pop("H"))
        elif kind in ("H_n1", "Complete"):
            spec = cls(kind, num("n"))
        else:
            args.pop("n", None)
            spec = cls.N6()
        if args:
            raise FamilyError(f"unexpected parameters {sorted(args)} for {head}")
        return spec

    # -- derived ------------------------------------------------------------

    def build(self) -> Graph:
        return build(self)

    def edge_count(self) -> int:
        return edge_count_formula(self)


def build(spec: FamilySpec) -> Graph:
    n, kind = spec.n, spec.kind
    if kind == "Complete":
        return Graph.complete(n)
    if kind == "N6":
        return n6()
    if kind in ("S", "S_plus"):
        g = Graph.complete(spec.h).join(Graph.empty(n - spec.h))
        return g.add_edge(spec.h, spec.h + 1) if kind == "S_plus" else g
    if kind == "L":
        body = Graph.complete(spec.h).times(spec.t1) | Graph.complete(spec.h + 1).times(spec.t2)
        return Graph.empty(1).join(body)
    if kind == "H_n1":
        edges = [(0, 1), (0, 2), (0, 3), (2, 3)]
        edges += [(a, v) for v in range(4, n) for a in (0, 1)]
        return Graph.from_edges(n, edges)
    body = Graph.empty(0)
    if kind == "F_attach":
        body = body | spec.attachment
    body = body | Graph.complete(2).times(spec.p) | Graph.empty(spec.s)
    return Graph.complete(spec.clique_order).join(body)


def edge_count_formula(spec: FamilySpec) -> int:
    n, h, kind = spec.n, spec.h, spec.kind
    if kind == "Complete":
        return comb(n, 2)
    if kind == "N6":
        return 6
    if kind in ("S", "S_plus"):
        return comb(h, 2) + h * (n - h) + (kind == "S_plus")
    if kind == "L":
        return (spec.t1 * h * (h + 1) + spec.t2 * (h + 1) * (h + 2)) // 2
    if kind == "H_n1":
        return 2 * n - 4
    c = spec.clique_order
    inner = spec.p + (spec.attachment.edge_count if kind == "F_attach" else 0)
    return comb(c, 2) + c * (n - c) + inner


@dataclass(frozen=True)
class TuranBound:
    """Maximum edge count of an ``F``-free graph on ``n`` vertices.

    ``asymptotic`` marks bounds known only for sufficiently large ``n``;
    ``extremal`` then lists the graphs that attain it in that regime.
    """

    bound: int
    extremal: tuple[FamilySpec, ...]
    asymptotic: bool
    case: str


def kp3_union_descriptor(n: int, k: int) -> FamilySpec:
    """``K_{3k-1}`` together with a near-perfect matching on the other ``n-3k+1`` vertices."""
    return FamilySpec.F_attach(n, 2, f"K{3 * k - 1}")


def turan_edge_bound(forest: LinearForest, n: int) -> TuranBound:
    if n < 1:
        raise ValueError("n must be positive")
    if forest.is_kp3:
        k = forest.k
        top = comb(3 * k - 1, 2)
        if n < 3 * k:
            return TuranBound(comb(n, 2), (FamilySpec.complete(n),), False, "n<3k")
        if n < 5 * k - 1:
            return TuranBound(top + (n - 3 * k + 1) // 2, (kp3_union_descriptor(n, k),), False, "3k<=n<5k-1")
        if n == 5 * k - 1:
            return TuranBound(top + k, (kp3_union_descriptor(n, k), FamilySpec.F(n, k)), False, "n=5k-1")
        tail = comb(k - 1, 2) + (n - k + 1) * (k - 1) + (n - k + 1) // 2
        return TuranBound(tail, (FamilySpec.F(n, k),), False, "n>5k-1")
    if forest.k < 2:
        raise ValueError(f"no bound implemented for the single path {forest}")
    h, c = forest.h, forest.c
    bound = comb(h, 2) + h * (n - h) + c
    extremal: tuple[FamilySpec, ...] = ()
    if h >= 1 and n - h >= 2:
        extremal = (FamilySpec.S_plus(n, h) if c else FamilySpec.S(n, h),)
    return TuranBound(bound, extremal, True, "large n")
