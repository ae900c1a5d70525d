"""Inclusion and intersection graphs, plus the SimpleGraph container."""

import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from incgraph.catalog import analyse, catalog
from incgraph.graph_build import (
    SimpleGraph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    path_graph,
    star_graph,
)
from incgraph.group_core import GroupSpec, render
from oracles import isomorphic_bruteforce

Z = GroupSpec.cyclic
Q8 = GroupSpec("Quaternion8")


def iso(g, h):
    return isomorphic_bruteforce(g.n_vertices, g.sorted_edges(), h.n_vertices, h.sorted_edges()) is not None


@pytest.mark.parametrize(
    "spec,expected",
    [
        (Z(16), complete_graph(3)),
        (Q8, star_graph(3)),
        (GroupSpec("Symmetric", (3,)), empty_graph(4)),
        (GroupSpec.product(Z(3), Z(3)), empty_graph(4)),
        (Z(12), path_graph(3)),
        (Z(30), cycle_graph(6)),
        (GroupSpec("Alternating", (4,)), disjoint_union(star_graph(3), empty_graph(4))),
    ],
    ids=lambda x: render(x) if isinstance(x, GroupSpec) else "",
)
def test_inclusion_examples(spec, expected):
    assert iso(analyse(spec).graph, expected)


@pytest.mark.parametrize(
    "spec,expected",
    [(Q8, complete_graph(4)), (Z(6), empty_graph(2)), (Z(8), complete_graph(2))],
    ids=["Q8", "Z6", "Z8"],
)
def test_intersection_examples(spec, expected):
    assert iso(analyse(spec).intersection, expected)


def test_prime_order_gives_empty_graph():
    g = analyse(Z(7)).graph
    assert g.n_vertices == 0 and g.n_edges == 0


@pytest.mark.parametrize("spec", catalog(60), ids=render)
def test_structure_against_lattice(spec):
    a = analyse(spec)
    lat, inc, its = a.lattice, a.graph, a.intersection
    assert inc.n_vertices == its.n_vertices == len(lat.subgroups) - 2
    assert inc.edges <= its.edges
    assert inc.provenance == "Inclusion" and its.provenance == "Intersection"
    c = lat.containment
    subs = lat.subgroups
    for u in range(inc.n_vertices):
        for v in range(u + 1, inc.n_vertices):
            i, j = u + 1, v + 1
            assert inc.has_edge(u, v) == bool(c[i, j] or c[j, i])
            shared = set(subs[i].elements) & set(subs[j].elements)
            assert its.has_edge(u, v) == (len(shared) > 1)


def test_json_and_dot_exports():
    g = analyse(Z(8)).graph
    doc = json.loads(g.dumps())
    assert doc["n"] == 2 and doc["edges"] == [[0, 1]] and doc["provenance"] == "Inclusion"
    assert len(doc["labels"]) == 2
    dot = g.to_dot("I(Z8)")
    assert dot.startswith('graph "I(Z8)" {') and "0 -- 1;" in dot


@pytest.mark.parametrize("edges", [[(0, 0)], [(0, 3)], [(-1, 1)]])
def test_rejects_bad_edges(edges):
    with pytest.raises(ValueError):
        SimpleGraph.from_edges(3, edges)


def test_normalises_duplicates():
    g = SimpleGraph.from_edges(3, [(0, 1), (1, 0), (2, 1)])
    assert g.sorted_edges() == [(0, 1), (1, 2)]
    assert g.degrees() == [1, 2, 1]


def test_generators():
    assert complete_graph(5).n_edges == 10
    # paths and cycles are sized by their number of edges
    assert path_graph(3).n_vertices == 4 and path_graph(3).n_edges == 3
    assert cycle_graph(6).degrees() == [2] * 6
    assert complete_bipartite(3, 3).n_edges == 9
    u = disjoint_union(star_graph(3), empty_graph(4))
    assert u.n_vertices == 8 and sorted(u.degrees()) == [0] * 4 + [1] * 3 + [3]


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return SimpleGraph.from_edges(n, edges)


@given(graphs(), st.randoms(use_true_random=False))
def test_relabel_round_trip(g, rnd):
    perm = list(range(g.n_vertices))
    rnd.shuffle(perm)
    h = g.relabel(perm)
    inv = [0] * g.n_vertices
    for v, w in enumerate(perm):
        inv[w] = v
    assert h.relabel(inv).edges == g.edges
    assert sorted(h.degrees()) == sorted(g.degrees())


@given(graphs())
def test_induced_on_everything_is_identity(g):
    assert g.induced(range(g.n_vertices)).edges == g.edges
