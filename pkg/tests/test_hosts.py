from functools import lru_cache

import networkx as nx
import pytest
from hypothesis import given, settings

from stlab.enumerate import gen_all
from stlab.families import FamilyError, FamilySpec, build
from stlab.forbidden import contains_k_p3
from stlab.graph import Graph
from stlab.hosts import HostFamily, PreconditionError, classify_2p3_free, embeds_in_F_attach

from conftest import graphs, to_nx

LABELS = [
    "S(h=1)", "S(h=2)", "S(h=3)", "Splus(h=1)", "Splus(h=2)",
    "F(k=2)", "F(k=3)", "Fatt(K4,k=2)", "Fatt(K5,k=2)", "Fatt(N6,k=2)",
    "Fatt(K4,k=3)", "Fatt(P4,k=2)", "Fatt(C5,k=3)", "L(1,1,2)", "L(2,0,2)", "L(0,2,2)", "Hn1",
]


@lru_cache(maxsize=None)
def _host_graph(label: str, n: int):
    try:
        g = build(HostFamily.parse(label).spec(n))
    except (FamilyError, ValueError):
        return None
    return g if g.n == n else None


def _oracle(g: Graph, label: str) -> bool:
    h = _host_graph(label, g.n)
    if h is None or g.edge_count > h.edge_count:
        return False
    # sorted degrees must be dominated pointwise; a cheap necessary condition
    if any(a > b for a, b in zip(sorted(g.degrees(), reverse=True), sorted(h.degrees(), reverse=True))):
        return False
    return nx.algorithms.isomorphism.GraphMatcher(to_nx(h), to_nx(g)).subgraph_is_monomorphic()


@lru_cache(maxsize=None)
def _all_upto(n: int):
    return [g for m in range(1, n + 1) for g in gen_all(m)]


@pytest.mark.parametrize("label", LABELS)
def test_host_predicate_matches_monomorphism_exhaustive_n7(label):
    host = HostFamily.parse(label)
    assert host.label == label
    for g in _all_upto(7):
        w = host.embed(g)
        assert (w is not None) == _oracle(g, label), (label, g.to_graph6())
        if w is not None:
            assert w.verify(g)


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=8, max_n=10))
def test_host_predicates_random_larger(g):
    for label in ("F(k=2)", "Fatt(K4,k=2)", "Fatt(N6,k=2)", "Hn1", "S(h=2)"):
        w = HostFamily.parse(label).embed(g)
        assert (w is not None) == _oracle(g, label)


def test_hosts_embed_themselves_under_relabeling():
    import random

    rnd = random.Random(7)
    for spec in [FamilySpec.F(20, 3), FamilySpec.F_attach(20, 2, "N6"), FamilySpec.F_attach(25, 3, "K5"),
                 FamilySpec.S_plus(15, 3), FamilySpec.H_n1(12)]:
        g = build(spec)
        perm = list(range(g.n))
        rnd.shuffle(perm)
        h = g.relabel(perm)
        label = {"F": f"F(k={spec.k})", "F_attach": f"Fatt({spec.attachment_name},k={spec.k})",
                 "S_plus": f"Splus(h={spec.h})", "H_n1": "Hn1"}[spec.kind]
        w = HostFamily.parse(label).embed(h)
        assert w is not None and w.verify(h)


def test_witness_rejects_tampering():
    g = build(FamilySpec.F(8, 2))
    w = HostFamily.parse("F(k=2)").embed(g)
    assert w.verify(g)
    assert not type(w)(w.host, (0,) * 8).verify(g)
    # the extra edge 2-4 joins two matching pairs, which F(n=8,k=2) cannot host
    assert not w.verify(g.add_edge(2, 4))


def test_attachment_by_graph_object():
    g = build(FamilySpec.F_attach(10, 2, "N6"))
    assert embeds_in_F_attach(g, 2, build(FamilySpec.N6())) is not None


def test_classification_preconditions():
    with pytest.raises(PreconditionError):
        classify_2p3_free(Graph.complete(5))
    with pytest.raises(PreconditionError):
        classify_2p3_free(Graph.path(3) | Graph.path(3))
    assert classify_2p3_free(build(FamilySpec.F(9, 2))) >= {"F(k=2)"}


@pytest.mark.parametrize("n", [6, 7, 8])
def test_every_2p3_free_class_is_labeled(n):
    for g in gen_all(n, accept=lambda g: g.n < 6 or contains_k_p3(g, 2) is None):
        assert classify_2p3_free(g), g.to_graph6()


def test_unknown_label():
    with pytest.raises(ValueError):
        HostFamily.parse("Q(k=2)")
