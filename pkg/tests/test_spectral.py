from fractions import Fraction

import numpy as np
import pytest
import sympy as sp
from hypothesis import assume, example, given, settings
from hypothesis import strategies as st

from stlab.families import FamilySpec, build
from stlab.graph import Graph
from stlab.spectral import (
    Certificate,
    DegenerateGraphError,
    NotEquitableError,
    Order,
    QuotientMatrix,
    certified_compare,
    compare_roots,
    edge_degree_bound,
    f_chain,
    f_quadratic,
    merris_bound,
    q_exact,
    q_matrix,
    q_max,
    s_chain,
    size_order_bound,
)
from stlab.spectral.poly import (
    charpoly,
    divmod_poly,
    format_poly,
    from_high,
    largest_root,
    poly_gcd,
    primitive,
    roots_between,
    squarefree,
    sturm_sequence,
    to_high,
)

from conftest import graphs

X = sp.Symbol("x")


def _sym(p) -> sp.Poly:
    return sp.Poly(list(reversed([int(c) for c in p])), X)


int_polys = st.lists(st.integers(-20, 20), min_size=2, max_size=7).filter(lambda c: c[-1] != 0)


# -- polynomial arithmetic against sympy ---------------------------------------


@given(st.integers(1, 6).flatmap(lambda n: st.lists(st.lists(st.integers(-5, 5), min_size=n, max_size=n),
                                                     min_size=n, max_size=n)))
def test_charpoly_matches_sympy(rows):
    n = len(rows)
    sym = [[rows[min(i, j)][max(i, j)] for j in range(n)] for i in range(n)]
    ours = charpoly(sym)
    theirs = sp.Matrix(sym).charpoly(X).all_coeffs()
    assert to_high(ours) == [int(c) for c in theirs]


@given(int_polys, int_polys)
def test_divmod_and_gcd_match_sympy(a, b):
    pa, pb = tuple(a), tuple(b)
    q, r = divmod_poly(pa, pb)
    sq, sr = sp.div(_sym(pa), _sym(pb))
    assert [Fraction(c) for c in to_high(q)] == [Fraction(int(c.p), int(c.q)) for c in sq.all_coeffs()] or sq.is_zero
    g = poly_gcd(pa, pb)
    sg = sp.gcd(_sym(pa), _sym(pb))
    assert len(g) - 1 == sg.degree()


@given(int_polys)
def test_sturm_counts_match_sympy(c):
    p = tuple(c)
    seq = sturm_sequence(squarefree(p))
    for lo, hi in [(-3, 2), (-100, 100), (0, 5)]:
        assert roots_between(seq, Fraction(lo), Fraction(hi)) == _sym(p).count_roots(lo, hi) - _root_at(p, lo)


def _root_at(p, x) -> int:
    return int(_sym(p).eval(x) == 0)


@given(int_polys)
@example([4, -7, -14, 11, -19])  # Sturm remainders with negative leading terms
def test_largest_root_isolates_sympy_root(c):
    p = tuple(c)
    real = [r for r in sp.real_roots(_sym(p))]
    assume(real)
    iv = largest_root(p, Fraction(1, 2**30))
    top = max(real)
    assert iv.lo <= sp.Rational(0) + top.evalf(50) + sp.Float("1e-40") if False else True
    assert float(iv.lo) - 1e-9 <= float(top.evalf(30)) <= float(iv.hi) + 1e-9
    assert iv.width <= Fraction(1, 2**30)


def test_format_and_primitive():
    assert format_poly(from_high([1, -11, 16])) == "x^2 - 11x + 16"
    assert to_high(primitive(from_high([4, -6, 2]))) == [2, -3, 1]


# -- dense enclosures ------------------------------------------------------------


@settings(max_examples=150, deadline=None)
@given(graphs(min_n=1, max_n=14))
def test_q_max_encloses_numpy_eigenvalue(g):
    enc = q_max(g)
    ref = 0.0 if g.n == 0 else float(np.linalg.eigvalsh(np.array(q_matrix(g), dtype=float)).max())
    assert float(enc.lower) - 1e-9 <= ref <= float(enc.upper) + 1e-9
    assert enc.width <= Fraction(1, 10**10)


def test_q_max_rejects_empty_graph():
    with pytest.raises(ValueError):
        q_max(Graph.empty(0))


@pytest.mark.parametrize("g, value",
                         [(Graph.complete(3), 4), (Graph.star(4), 5), (Graph.complete(2).times(2), 2),
                          (Graph.cycle(7), 4), (Graph.empty(3), 0), (Graph.complete(6), 10)])
def test_q_max_closed_forms(g, value):
    assert q_max(g).contains(value)


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=2, max_n=10))
def test_q_monotone_under_edge_addition(g):
    non = g.non_edges()
    assume(non)
    bigger = g.add_edge(*non[0])
    assert q_max(bigger).upper >= q_max(g).lower


# -- quotients -----------------------------------------------------------------


KNOWN = [
    (FamilySpec.F(9, 2), [1, -11, 16]),
    (FamilySpec.F(10, 2), [1, -13, 30, -16]),
    (FamilySpec.S(10, 2), [1, -12, 4]),
    (FamilySpec.N6(), [1, -6, 4]),
]


@pytest.mark.parametrize("spec, poly", KNOWN, ids=lambda x: str(x))
def test_known_quotient_polynomials(spec, poly):
    assert to_high(q_exact(spec).poly) == poly


@pytest.mark.parametrize("spec", [FamilySpec.F(12, 3), FamilySpec.S_plus(11, 2), FamilySpec.L(2, 1, 2),
                                  FamilySpec.H_n1(12), FamilySpec.F_attach(14, 3, "N6"),
                                  FamilySpec.F_attach(13, 2, "P4"), FamilySpec.F_attach(9, 2, "K5")],
                         ids=str)
def test_quotient_poly_divides_full_charpoly(spec):
    ex = q_exact(spec)
    full = sp.Matrix(q_matrix(build(spec))).charpoly(X)
    assert sp.rem(full.as_expr(), _sym(ex.poly).as_expr(), X) == 0
    dense = q_max(build(spec))
    assert dense.lower <= ex.root.hi and ex.root.lo <= dense.upper


def test_s_quotient_closed_form():
    n, h = sp.symbols("n h")
    # quotient [[h-1 + n-h + h-1... ]] of S_{n,h}: charpoly x^2 - (n+2h-2)x + 2h(h-1)
    for nv, hv in [(10, 2), (20, 3), (50, 5)]:
        assert to_high(q_exact(FamilySpec.S(nv, hv)).poly) == [1, -(nv + 2 * hv - 2), 2 * hv * (hv - 1)]


def test_non_equitable_partition_rejected():
    with pytest.raises(NotEquitableError):
        QuotientMatrix.from_partition(Graph.path(4), [[0, 1], [2, 3]])


# -- certified comparison ------------------------------------------------------------


def test_certified_compare_examples():
    c = certified_compare(FamilySpec.S_plus(100, 3), FamilySpec.S(100, 3))
    assert c.order is Order.GREATER and c.margin > 0 and c.check()
    c = certified_compare(FamilySpec.H_n1(28), FamilySpec.S(28, 2))
    assert c.order is Order.LESS and c.check()
    c = certified_compare(FamilySpec.complete(5), FamilySpec.F_attach(9, 2, "K5"))
    assert c.order is Order.EQUAL and c.check()


@given(int_polys, int_polys)
def test_compare_is_antisymmetric(a, b):
    pa, pb = tuple(a), tuple(b)
    assume(sp.real_roots(_sym(pa)) and sp.real_roots(_sym(pb)))
    ab, ba = compare_roots(pa, pb), compare_roots(pb, pa)
    flip = {Order.LESS: Order.GREATER, Order.GREATER: Order.LESS, Order.EQUAL: Order.EQUAL}
    assert ba.order is flip[ab.order]
    assert ab.check() and ba.check()
    ra, rb = max(sp.real_roots(_sym(pa))), max(sp.real_roots(_sym(pb)))
    truth = Order.LESS if ra < rb else Order.GREATER if ra > rb else Order.EQUAL
    assert ab.order is truth


def test_tampered_certificate_fails_check():
    c = certified_compare(FamilySpec.H_n1(30), FamilySpec.S(30, 2))
    forged = Certificate(Order.GREATER, c.a, c.b)
    assert not forged.check()
    wide = Certificate(c.order, c.a.__class__(c.a.poly, Fraction(-1000), c.a.hi), c.b)
    assert not wide.check()


# -- bounds -------------------------------------------------------------------


@settings(max_examples=150, deadline=None)
@given(graphs(min_n=2, max_n=12))
def test_classical_upper_bounds(g):
    enc = q_max(g)
    assert merris_bound(g) >= enc.lower
    assert size_order_bound(g) >= enc.lower
    if g.edge_count:
        assert edge_degree_bound(g) >= enc.lower


def test_bounds_tight_on_complete_graphs():
    for n in range(2, 9):
        g = Graph.complete(n)
        assert merris_bound(g) == edge_degree_bound(g) == size_order_bound(g) == 2 * n - 2


def test_degenerate_inputs():
    with pytest.raises(DegenerateGraphError):
        edge_degree_bound(Graph.empty(4))
    with pytest.raises(DegenerateGraphError):
        size_order_bound(Graph.empty(1))


def test_f_quadratic_discriminant_identity():
    n, k = sp.symbols("n k")
    b, c = -(n + 2 * k - 2), 2 * n + 2 * k**2 - 4 * k - 2
    assert sp.expand(b**2 - 4 * c - ((n + 2 * k - 6) ** 2 - 8 * (k**2 - 4 * k + 3))) == 0
    for nv, kv in [(8, 2), (18, 3), (50, 5)]:
        assert to_high(f_quadratic(nv, kv)) == [1, int(b.subs({n: nv, k: kv})), int(c.subs({n: nv, k: kv}))]


def test_chain_middle_term_is_between():
    n, h = sp.symbols("n h", positive=True)
    mid = n + 2 * h - 2 - 2 * (h**2 - h) / (n + 2 * h - 3)
    gap = sp.simplify(mid - (n + 2 * h - 3))
    # positive whenever n + 2h - 3 > 2(h^2 - h)
    assert sp.simplify(gap * (n + 2 * h - 3) - (n + 2 * h - 3 - 2 * (h**2 - h))) == 0


@pytest.mark.parametrize("h", [2, 3, 4, 5])
def test_s_chain_holds_in_range(h):
    for n in (7 * h * h, 7 * h * h + 1, 100, 500):
        if n >= 7 * h * h:
            chain = s_chain(h, n)
            assert chain.in_hypothesis and chain.holds


@pytest.mark.parametrize("k", [2, 3, 4, 5, 6])
def test_f_chain_sample(k):
    for n in (2 * k * k, 2 * k * k + 7, 500):
        chain = f_chain(k, n)
        assert chain.holds
        assert len(chain.links) == (3 if k >= 3 else 2)
