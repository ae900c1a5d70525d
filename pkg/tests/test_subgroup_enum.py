"""Subgroup enumeration and the lattice built on top of it."""

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from sympy import divisor_count, divisor_sigma

from incgraph.catalog import analyse, catalog
from incgraph.errors import OrderCapExceeded, PrimeDoesNotDivideOrder
from incgraph.group_core import GroupSpec, construct, render
from incgraph.subgroup_enum import all_subgroups, closure, lattice_of, sylow_count
from oracles import is_subgroup_naive, subgroups_bruteforce

# Subgroup counts of every catalog group of order <= 24, produced by
# brute-force closure over generating sets of size <= 3 and then frozen.
BRUTE_COUNTS = {
    "Z2": 2, "Z3": 2, "Z2xZ2": 5, "Z4": 3, "Z5": 2, "D6": 6, "S3": 6,
    "SD(3,2,1,1)": 6, "Z6": 4, "Z7": 2, "D8": 10, "Heis(2)": 10, "M8": 10,
    "Q8": 6, "Z2xZ2xZ2": 16, "Z4xZ2": 8, "Z8": 4, "Z3xZ3": 6, "Z9": 3,
    "D10": 8, "SD(5,2,1,1)": 8, "Z10": 4, "Z11": 2, "A4": 10, "D12": 16,
    "G6(2,3)": 10, "SD(3,2,1,1)xZ2": 16, "SD(3,2,2,1)": 8, "Z12": 6,
    "Z6xZ2": 10, "Z13": 2, "D14": 10, "SD(7,2,1,1)": 10, "Z14": 4, "Z15": 4,
    "D16": 19, "Z16": 5, "Z4xZ2xZ2": 27, "Z4xZ4": 15, "Z8xZ2": 11, "Z17": 2,
    "D18": 16, "G5(3,2,0)": 14, "G5(3,2,1)": 28, "SDP2Q(3,2)": 16, "Z18": 6,
    "Z6xZ3": 12, "Z19": 2, "D20": 22, "SD(5,2,1,1)xZ2": 22, "SD(5,2,2,1)": 10,
    "SD(5,2,2,2)": 14, "Z10xZ2": 10, "Z20": 6, "SD(7,3,1,1)": 10, "Z21": 4,
    "D22": 14, "SD(11,2,1,1)": 14, "Z22": 4, "Z23": 2, "D24": 34, "S4": 30,
    "SD(3,2,3,1)": 10, "Z12xZ2": 16, "Z24": 8, "Z6xZ2xZ2": 32,
}

SMALL = catalog(24)


def test_small_catalog_is_the_frozen_one():
    assert sorted(render(s) for s in SMALL) == sorted(BRUTE_COUNTS)


@pytest.mark.parametrize("spec", SMALL, ids=render)
def test_matches_bruteforce(spec):
    g = construct(spec)
    ours = {frozenset(s.elements) for s in all_subgroups(g)}
    assert len(ours) == BRUTE_COUNTS[render(spec)]
    assert ours == subgroups_bruteforce(g.op.tolist())


@pytest.mark.parametrize(
    "spec,count",
    [
        (GroupSpec.cyclic(12), 6),
        (GroupSpec("Quaternion8"), 6),
        (GroupSpec.product(GroupSpec.cyclic(2), GroupSpec.cyclic(2)), 5),
        (GroupSpec("Alternating", (5,)), 59),
        (GroupSpec.product(*[GroupSpec.cyclic(3)] * 3), 28),
    ],
)
def test_known_counts(spec, count):
    assert len(all_subgroups(construct(spec))) == count


@pytest.mark.parametrize("n", [6, 8, 12, 30, 36, 100])
def test_dihedral_count(n):
    # D_{2m} has tau(m) + sigma(m) subgroups
    m = n // 2
    assert len(all_subgroups(construct(GroupSpec.dihedral(n)))) == divisor_count(m) + divisor_sigma(m)


@given(st.integers(1, 120))
def test_cyclic_count_is_divisor_count(n):
    assert len(all_subgroups(construct(GroupSpec.cyclic(n)))) == divisor_count(n)


@pytest.mark.parametrize("spec", catalog(64)[::3], ids=render)
def test_subgroup_invariants(spec):
    g = construct(spec)
    op = g.op.tolist()
    subs = all_subgroups(g)
    assert len({s.members for s in subs}) == len(subs)
    assert [s.sort_key() for s in subs] == sorted(s.sort_key() for s in subs)
    for s in subs:
        assert g.order % s.order == 0
        assert s.order == len(s.elements)
        assert is_subgroup_naive(op, s.elements)
        got = closure(g, list(s.generators))
        assert sorted(int(x) for x in got) == s.elements


@pytest.mark.parametrize(
    "spec,height",
    [
        (GroupSpec.cyclic(8), 3),
        (GroupSpec.cyclic(25), 2),
        (GroupSpec.cyclic(30), 3),
        (GroupSpec("Quaternion8"), 3),
        (GroupSpec("Alternating", (4,)), 3),
        (GroupSpec("Alternating", (5,)), 4),
        (GroupSpec("Symmetric", (4,)), 4),
    ],
)
def test_height(spec, height):
    assert lattice_of(construct(spec)).height == height


def test_cyclic_prime_power_is_chain():
    lat = lattice_of(construct(GroupSpec.cyclic(8)))
    assert np.array_equal(lat.containment, np.triu(np.ones((4, 4), dtype=bool)))


@pytest.mark.parametrize("spec", catalog(48)[::2], ids=render)
def test_lattice_invariants(spec):
    lat = analyse(spec).lattice
    c = lat.containment
    n = len(lat.subgroups)
    assert c.diagonal().all()
    assert not (c & c.T & ~np.eye(n, dtype=bool)).any()
    ci = c.astype(np.int32)
    assert ((ci @ ci > 0) <= c).all()
    assert c[0].all() and c[:, n - 1].all()
    # longest chain, counted in nodes, minus one
    assert lat.height == lat.depth[-1] == lat.up[0]
    lev = lat.level_of()
    assert sorted(lev) == lat.proper_nontrivial()
    for i, j in lat.hasse_edges:
        assert c[i, j] and i != j
        if i in lev and j in lev:
            assert lev[i] != lev[j]
    for level in lat.levels:
        for a in level:
            for b in level:
                assert a == b or not c[a, b]
    assert len(lat.levels) == max(lat.height - 1, 0)


def test_lattice_json_shape():
    doc = lattice_of(construct(GroupSpec("Quaternion8"))).to_json()
    assert set(doc) == {"subgroups", "hasse", "height", "levels"}
    assert [s["order"] for s in doc["subgroups"]] == [1, 2, 4, 4, 4, 8]
    assert doc["levels"] == [[2, 3, 4], [1]]


@pytest.mark.parametrize(
    "spec,p,count",
    [
        (GroupSpec("Alternating", (4,)), 3, 4),
        (GroupSpec.cyclic(12), 2, 1),
        (GroupSpec("Symmetric", (3,)), 2, 3),
        (GroupSpec("Alternating", (5,)), 5, 6),
        (GroupSpec("Symmetric", (4,)), 2, 3),
    ],
)
def test_sylow_count(spec, p, count):
    assert sylow_count(construct(spec), p) == count


def test_sylow_count_rejects_foreign_prime():
    with pytest.raises(PrimeDoesNotDivideOrder):
        sylow_count(construct(GroupSpec.cyclic(12)), 5)


def test_enumeration_cap():
    g = construct(GroupSpec.cyclic(60))
    with pytest.raises(OrderCapExceeded):
        all_subgroups(g, order_cap=50)
