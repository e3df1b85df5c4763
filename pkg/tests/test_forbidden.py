from functools import lru_cache

import networkx as nx
import pytest
from hypothesis import given, settings

from stlab.enumerate import gen_all
from stlab.forbidden import (
    LinearForest,
    SearchBudgetExceeded,
    contains_k_p3,
    contains_linear_forest,
    erdos_gallai_guarantee,
    is_free,
)
from stlab.graph import Graph

from conftest import graphs, to_nx

FORESTS = ["3", "4", "5", "2x2", "3x2", "4,2", "3,2,2", "4,3", "2x3", "6"]


def _forest_graph(forest: LinearForest) -> nx.Graph:
    g = nx.Graph()
    base = 0
    for a in forest.orders:
        nx.add_path(g, range(base, base + a))
        base += a
    return g


@lru_cache(maxsize=None)
def _all_upto(n: int):
    return [g for m in range(1, n + 1) for g in gen_all(m)]


def _oracle(g: Graph, forest: LinearForest) -> bool:
    return nx.algorithms.isomorphism.GraphMatcher(to_nx(g), _forest_graph(forest)).subgraph_is_monomorphic()


def test_parse_and_text():
    assert LinearForest.parse("3x2").orders == (3, 3)
    assert LinearForest.parse("5,3").orders == (5, 3)
    assert str(LinearForest.parse("3,5,3")) == "5,3x2"
    f = LinearForest.parse("5,4,2")
    assert (f.k, f.total, f.h, f.c) == (3, 11, 4, 0)
    assert LinearForest.kp3(3).is_kp3
    for bad in ["", "0", "3x0", "a"]:
        with pytest.raises(ValueError):
            LinearForest.parse(bad)


@pytest.mark.parametrize("text", FORESTS)
def test_containment_matches_monomorphism_exhaustive_n7(text):
    forest = LinearForest.parse(text)
    for g in _all_upto(7):
        emb = contains_linear_forest(g, forest)
        assert (emb is not None) == _oracle(g, forest), g.to_graph6()
        if emb is not None:
            assert emb.is_valid(g, forest)


@settings(max_examples=150, deadline=None)
@given(graphs(min_n=6, max_n=12))
def test_kp3_shortcut_agrees_with_general_search(g):
    for k in (1, 2, 3):
        fast = contains_k_p3(g, k)
        slow = contains_linear_forest(g, LinearForest.kp3(k))
        assert (fast is None) == (slow is None)
        if fast is not None:
            assert fast.is_valid(g, LinearForest.kp3(k))


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=9))
def test_monotone_under_edge_addition(g):
    forest = LinearForest.parse("3x2")
    if not is_free(g, forest):
        for u, v in g.non_edges()[:5]:
            assert not is_free(g.add_edge(u, v), forest)


def test_budget_exceeded_is_not_absent():
    g = Graph.cycle(40)
    with pytest.raises(SearchBudgetExceeded):
        contains_linear_forest(g, LinearForest.parse("39"), node_budget=5)


def test_erdos_gallai_guarantee_consistent_with_search():
    for g in _all_upto(7):
        for l in (3, 4, 5):
            if erdos_gallai_guarantee(g.n, g.edge_count, l):
                assert contains_linear_forest(g, LinearForest.of(l)) is not None
    with pytest.raises(ValueError):
        erdos_gallai_guarantee(5, 3, 1)
