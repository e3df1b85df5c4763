from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from stlab.families import (
    FamilyError,
    FamilySpec,
    build,
    edge_count_formula,
    kp3_union_descriptor,
    n6,
    parse_attachment,
    turan_edge_bound,
)
from stlab.forbidden import LinearForest, contains_k_p3
from stlab.graph import Graph


@st.composite
def specs(draw) -> FamilySpec:
    kind = draw(st.sampled_from(["S", "S_plus", "L", "F", "F_attach", "H_n1", "N6", "Complete"]))
    if kind in ("S", "S_plus"):
        h = draw(st.integers(1, 6))
        return getattr(FamilySpec, kind)(draw(st.integers(h + 2, 40)), h)
    if kind == "L":
        return FamilySpec.L(draw(st.integers(0, 4)), draw(st.integers(0, 4)), draw(st.integers(2, 5)))
    if kind == "F":
        k = draw(st.integers(2, 6))
        return FamilySpec.F(draw(st.integers(k + 1, 40)), k)
    if kind == "F_attach":
        k = draw(st.integers(2, 5))
        att = draw(st.sampled_from(["K4", "K5", "N6", "P4", "C5", "S3"]))
        order = parse_attachment(att)[1].n
        return FamilySpec.F_attach(draw(st.integers(k - 2 + order, 40)), k, att)
    if kind == "H_n1":
        return FamilySpec.H_n1(draw(st.integers(7, 40)))
    if kind == "N6":
        return FamilySpec.N6()
    return FamilySpec.complete(draw(st.integers(1, 20)))


@given(specs())
def test_build_matches_closed_form_edge_count(spec):
    g = build(spec)
    assert g.n == spec.n
    assert g.edge_count == edge_count_formula(spec)


@given(specs())
def test_text_round_trip(spec):
    again = FamilySpec.parse(str(spec))
    assert again == spec
    assert build(again) == build(spec)


def test_known_edge_counts():
    assert build(FamilySpec.S(10, 2)).edge_count == 17
    assert build(FamilySpec.S_plus(10, 2)).edge_count == 18
    assert build(FamilySpec.F(10, 2)).edge_count == 13
    assert build(FamilySpec.H_n1(8)).edge_count == 12
    assert build(FamilySpec.N6()).edge_count == 6


def test_layouts():
    f = build(FamilySpec.F(9, 3))
    assert f.degree(0) == f.degree(1) == 8
    assert sorted(f.degrees()[2:]) == [2] + [3] * 6
    att = build(FamilySpec.F_attach(12, 3, "K5"))
    # apex clique of order k-2 = 1 joined to K5 plus three pairs plus an isolate
    assert att.degree(0) == 11
    assert att.induced(range(1, 6)) == Graph.complete(5)
    s = build(FamilySpec.S(7, 2))
    assert s.induced(range(2, 7)).edge_count == 0
    assert build(FamilySpec.S_plus(7, 2)).has_edge(2, 3)


def test_n6_is_triangle_with_pendants():
    g = n6()
    assert g.n == 6 and g.edge_count == 6
    assert sorted(g.degrees()) == [1, 1, 1, 3, 3, 3]
    # every P3 through a pendant uses a triangle vertex, so two disjoint P3 strand a pendant
    assert contains_k_p3(g, 2) is None
    assert contains_k_p3(g.add_edge(3, 4), 2) is not None


def test_validation_errors():
    with pytest.raises(FamilyError):
        FamilySpec.S(3, 3)
    with pytest.raises(FamilyError):
        FamilySpec.F(2, 3)
    with pytest.raises(FamilyError):
        FamilySpec.F_attach(4, 2, "K5")
    with pytest.raises(FamilyError):
        FamilySpec.parse("Q(n=3)")
    with pytest.raises(FamilyError):
        FamilySpec("bogus", 3)


def test_p_and_s_allow_empty_remainder():
    spec = FamilySpec.F_attach(6, 2, "N6")
    assert (spec.p, spec.s) == (0, 0)
    assert build(spec) == build(FamilySpec.N6())


def _kp3_table(k: int, n: int) -> int:
    # independent transcription of the piecewise formula
    if n < 3 * k:
        return n * (n - 1) // 2
    if n < 5 * k - 1:
        return comb(3 * k - 1, 2) + (n - 3 * k + 1) // 2
    if n == 5 * k - 1:
        return comb(3 * k - 1, 2) + k
    return comb(k - 1, 2) + (n - k + 1) * (k - 1) + (n - k + 1) // 2


@pytest.mark.parametrize("k", [2, 3, 4])
def test_turan_table_and_extremal_graphs(k):
    forest = LinearForest.kp3(k)
    for n in range(1, 6 * k + 3):
        tb = turan_edge_bound(forest, n)
        assert tb.bound == _kp3_table(k, n)
        assert not tb.asymptotic
        for spec in tb.extremal:
            g = build(spec)
            assert g.n == n and g.edge_count == tb.bound
            if n <= 14:
                assert contains_k_p3(g, k) is None


def test_turan_two_extremals_at_5k_minus_1():
    tb = turan_edge_bound(LinearForest.kp3(2), 9)
    assert tb.bound == 12 and len(tb.extremal) == 2
    assert kp3_union_descriptor(9, 2) in tb.extremal


def test_turan_generic_forest_is_asymptotic():
    tb = turan_edge_bound(LinearForest.parse("5,3"), 30)
    assert tb.asymptotic
    h, c = 2, 1
    assert tb.bound == comb(h, 2) + h * (30 - h) + c
    assert tb.extremal == (FamilySpec.S_plus(30, 2),)
    with pytest.raises(ValueError):
        turan_edge_bound(LinearForest.parse("5"), 10)
