"""Canonical labelling and isomorphism testing."""

import itertools
import random

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from incgraph.catalog import analyse, catalog
from incgraph.errors import VertexLimitExceeded
from incgraph.graph_build import (
    SimpleGraph,
    complete_bipartite,
    complete_graph,
    disjoint_union,
    empty_graph,
    path_graph,
    star_graph,
)
from incgraph.graph_iso import canonical_form, is_isomorphic, verify_bijection
from incgraph.group_core import GroupSpec
from oracles import isomorphic_bruteforce

Z = GroupSpec.cyclic
P = GroupSpec.product


def shuffled(g, seed):
    perm = list(range(g.n_vertices))
    random.Random(seed).shuffle(perm)
    return g.relabel(perm)


@st.composite
def graphs(draw, max_n=10):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    return SimpleGraph.from_edges(n, [e for e in pairs if draw(st.booleans())])


@given(graphs(), st.integers(0, 10**6))
def test_certificate_is_relabelling_invariant(g, seed):
    h = shuffled(g, seed)
    c1, c2 = canonical_form(g), canonical_form(h)
    assert c1.certificate == c2.certificate and c1.edges == c2.edges
    ok, phi = is_isomorphic(g, h)
    assert ok and verify_bijection(g, h, phi)


@given(graphs(max_n=7), graphs(max_n=7))
def test_agrees_with_backtracking_oracle(g, h):
    expected = isomorphic_bruteforce(g.n_vertices, g.sorted_edges(), h.n_vertices, h.sorted_edges()) is not None
    ok, phi = is_isomorphic(g, h)
    assert ok == expected == nx.is_isomorphic(nx.Graph(list(g.edges)), nx.Graph(list(h.edges))) or (
        g.n_vertices != h.n_vertices and not ok
    )
    assert ok == expected
    if ok:
        assert verify_bijection(g, h, phi)


@given(graphs())
def test_canonical_edges_rebuild_the_graph(g):
    c = canonical_form(g)
    assert sorted(c.labeling) == list(range(g.n_vertices))
    assert SimpleGraph.from_edges(g.n_vertices, c.edges).edges == g.relabel(c.labeling).edges
    for p in c.automorphism_generators:
        assert verify_bijection(g, g, p)


def test_catalog_pairs_match_oracle():
    small = [(s, analyse(s).graph) for s in catalog(200) if analyse(s).graph.n_vertices <= 12]
    assert len(small) == 259
    iso_pairs = 0
    for (s1, g1), (s2, g2) in itertools.combinations(small, 2):
        oracle = isomorphic_bruteforce(g1.n_vertices, g1.sorted_edges(), g2.n_vertices, g2.sorted_edges())
        same = analyse(s1).canonical.certificate == analyse(s2).canonical.certificate
        assert same == (oracle is not None), (s1, s2)
        iso_pairs += same
    assert iso_pairs == 3339


@pytest.mark.parametrize(
    "a,b,expected",
    [
        (P(Z(3), Z(3)), GroupSpec("Symmetric", (3,)), True),
        (GroupSpec("ModularP3", (3,)), P(Z(9), Z(3)), True),
        (Z(6), P(Z(2), Z(3)), True),
        (GroupSpec("Quaternion8"), Z(8), False),
        (GroupSpec("Quaternion8"), GroupSpec("Modular8"), False),
    ],
)
def test_isomorphism_examples(a, b, expected):
    ga, gb = analyse(a).graph, analyse(b).graph
    ok, phi = is_isomorphic(ga, gb)
    assert ok is expected
    if ok:
        assert verify_bijection(ga, gb, phi)


def test_path_versus_star():
    assert canonical_form(path_graph(3)).certificate != canonical_form(star_graph(3)).certificate


@pytest.mark.parametrize(
    "spec,hexcert",
    [
        (GroupSpec("Quaternion8"), "04:0b"),
        (GroupSpec("Modular8"), "08:0041110b"),
        (GroupSpec("SemidirectP2Q", (3, 2)), "0e:00008008010080404104204b"),
    ],
    ids=["Q8", "M8", "Z9:Z2"],
)
def test_frozen_certificates(spec, hexcert):
    assert analyse(spec).canonical.hex() == hexcert


@pytest.mark.parametrize(
    "g",
    [empty_graph(64), complete_graph(64), complete_bipartite(32, 32), disjoint_union(*[complete_graph(4)] * 16)],
    ids=["E64", "K64", "K32,32", "16K4"],
)
def test_symmetric_graphs_at_the_limit(g):
    c = canonical_form(g)
    assert c.certificate == canonical_form(shuffled(g, 1)).certificate


def test_regular_graphs_against_networkx():
    for seed in range(40):
        g1 = nx.random_regular_graph(3, 12, seed=seed)
        g2 = nx.random_regular_graph(3, 12, seed=seed + 1000)
        a = SimpleGraph.from_edges(12, g1.edges())
        b = SimpleGraph.from_edges(12, g2.edges())
        assert is_isomorphic(a, b)[0] == nx.is_isomorphic(g1, g2)


def test_vertex_limit():
    with pytest.raises(VertexLimitExceeded):
        canonical_form(empty_graph(65))
    with pytest.raises(VertexLimitExceeded):
        canonical_form(empty_graph(10), vertex_limit=8)
    with pytest.raises(VertexLimitExceeded):
        is_isomorphic(empty_graph(70), empty_graph(71))


def test_empty_graph():
    c = canonical_form(SimpleGraph(0))
    assert c.hex() == "00:" and c.edges == ()
