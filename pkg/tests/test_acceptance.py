"""Acceptance criteria 1-12.

Each test prints one ``PASS``/``FAIL`` line to the terminal, uncaptured, and
then asserts.  Run ``python3 tests/test_acceptance.py`` for the lines alone.
"""

import itertools
import random
import sys

import pytest

from incgraph.catalog import analyse, catalog
from incgraph.graph_build import complete_graph, cycle_graph, disjoint_union, empty_graph, path_graph, star_graph
from incgraph.graph_iso import is_isomorphic, verify_bijection
from incgraph.group_core import GroupSpec, is_normal, prime_factors, render
from incgraph.invariants import INF, components
from incgraph.planarity import KuratowskiWitness, check_embedding, check_witness
from incgraph.subgroup_enum import all_subgroups
from incgraph.verify import CLAW_FREE, DISCONNECTED, TOTALLY_DISCONNECTED, embedding_checks, member
from oracles import isomorphic_bruteforce, subgroups_bruteforce

Z = GroupSpec.cyclic
P = GroupSpec.product
MAX = 200
PRIMES = (2, 3, 5, 7, 11, 13)


def _cat():
    return [analyse(s) for s in catalog(MAX)]


def _report(number, ok, summary, problems):
    line = f"{'PASS' if ok else 'FAIL'}  criterion {number:2d}  {summary}"
    if problems:
        line += "  [" + "; ".join(problems[:6]) + (" ..." if len(problems) > 6 else "") + "]"
    return line


def _emit(line, capsys=None):
    if capsys is None:
        print(line)
        return
    with capsys.disabled():
        sys.stdout.write("\n" + line + "\n")


def _iso(spec, graph):
    ok, phi = is_isomorphic(analyse(spec).graph, graph)
    return ok and verify_bijection(analyse(spec).graph, graph, phi)


# ---------------------------------------------------------------------------


def criterion_1():
    bad, n = [], 0
    for p in PRIMES:
        for a in range(2, 6):
            if p**a > 400:
                continue
            n += 1
            if not _iso(Z(p**a), complete_graph(a - 1)):
                bad.append(f"Z{p**a}")
    return not bad, f"I(Z_p^a) is K_(a-1) for {n} prime powers up to 400", bad


def criterion_2():
    cases = [
        (GroupSpec("Quaternion8"), star_graph(3)),
        (GroupSpec("Alternating", (4,)), disjoint_union(star_graph(3), empty_graph(4))),
        (Z(12), path_graph(3)),
        (Z(18), path_graph(3)),
        (Z(50), path_graph(3)),
        (Z(30), cycle_graph(6)),
    ]
    bad = [render(s) for s, g in cases if not _iso(s, g)]
    return not bad, "golden shapes of Q8, A4, Z12, Z18, Z50, Z30", bad


def criterion_3():
    bad = []
    for spec, n, degs in [
        (GroupSpec("Modular8"), 8, [3, 3, 3, 1, 1, 1, 1, 1]),
        (P(Z(4), Z(2)), 6, [3, 3, 1, 1, 1, 1]),
    ]:
        r = analyse(spec).report
        if not (r.flags["tree"] and r.n_vertices == n and list(r.degree_sequence) == degs):
            bad.append(f"{render(spec)}: {r.shape} {list(r.degree_sequence)}")
    return not bad, "I(M8) and I(Z4xZ2) are trees with the stated degrees", bad


def criterion_4():
    cat = _cat()
    bad = [
        render(a.spec)
        for a in cat
        if a.graph.n_vertices and not (a.report.clique_number == a.report.chromatic_number == a.lattice.height - 1)
    ]
    return not bad, f"omega = chi = height - 1 on {len(cat)} catalog groups", bad


def criterion_5():
    cat = _cat()
    bad = []
    for a in cat:
        if a.graph.n_vertices == 0:
            continue
        edgeless = a.report.flags["edgeless"]
        height2 = a.lattice.height == 2
        primes = all(s.order in prime_factors(a.group.order) for s in a.lattice.subgroups[1:-1])
        fam = member(a, TOTALLY_DISCONNECTED)
        if not (edgeless == height2 == primes == fam):
            bad.append(f"{render(a.spec)}: {edgeless}/{height2}/{primes}/{fam}")
    return not bad, "edgeless = height 2 = prime-order subgroups = named families", bad


def criterion_6():
    cat = _cat()
    bad = []
    for a in cat:
        ci = a.report.connected
        cj = a.graph.n_vertices >= 1 and len(components(a.intersection)) == 1
        if ci != cj:
            bad.append(f"{render(a.spec)}: connectivity differs")
        if a.graph.n_vertices and a.report.disconnected != member(a, DISCONNECTED):
            bad.append(f"{render(a.spec)}: disconnected {a.report.disconnected}")
    return not bad, "inclusion and intersection connectivity agree; disconnected set is the named one", bad


def _witness_ok(spec):
    a = analyse(spec)
    r, g = a.report, a.graph
    if r.planar:
        return check_embedding(g.n_vertices, g.sorted_edges(), r.planarity_witness) == []
    return isinstance(r.planarity_witness, KuratowskiWitness) and check_witness(
        g.n_vertices, g.sorted_edges(), r.planarity_witness
    ) == []


def criterion_7():
    bad = []
    for p in PRIMES:
        for a in range(2, 9):
            if p**a > 400:
                continue
            spec = Z(p**a)
            if analyse(spec).report.planar != (a <= 5) or not _witness_ok(spec):
                bad.append(render(spec))
            for q in PRIMES:
                if q == p or a > 5 or p**a * q > 400:
                    continue
                spec = Z(p**a * q)
                if analyse(spec).report.planar != (a <= 4) or not _witness_ok(spec):
                    bad.append(render(spec))
    for spec in (P(Z(4), Z(4)), P(Z(2), Z(2), Z(2)), P(Z(12), Z(2))):
        r = analyse(spec).report
        if r.planar or r.planarity_witness.kind != "K3,3" or not _witness_ok(spec):
            bad.append(render(spec))
    if not (analyse(Z(210)).report.planar and _witness_ok(Z(210))):
        bad.append("Z210")
    return not bad, "planarity of cyclic families, K3,3 witnesses for Z4xZ4, Z2^3, Z12xZ2, Z210 planar", bad


def criterion_8():
    bad = []
    for spec, want in ((Z(36), 2), (P(Z(4), Z(2)), 3), (P(Z(6), Z(6)), 4)):
        d = analyse(spec).report.diameter
        if d != want:
            bad.append(f"diam I({render(spec)}) = {d}, stated {want}")
    for a in _cat():
        if a.group.is_abelian() and a.graph.n_vertices and a.report.diameter not in (1, 2, 3, 4, INF):
            bad.append(f"diam I({render(a.spec)}) = {a.report.diameter}")
    return not bad, "stated diameters of Z36, Z4xZ2, Z6xZ6; abelian diameters in {1,2,3,4,inf}", bad


def criterion_9():
    cat = _cat()
    bad = [f"girth I({render(a.spec)}) = {a.report.girth}" for a in cat if a.report.girth not in (3, 6, INF)]
    for spec in (P(Z(3), Z(3), Z(3)), GroupSpec("Heisenberg", (3,))):
        g = analyse(spec).report.girth
        if g != 6:
            bad.append(f"girth I({render(spec)}) = {'inf' if g == INF else g}, stated 6")
    for a in cat:
        if a.graph.n_vertices and a.report.claw_free != member(a, CLAW_FREE):
            bad.append(f"{render(a.spec)}: claw-free {a.report.claw_free}")
    return not bad, "girths in {3,6,inf}; girth 6 for Z3^3 and Heis(3); claw-free set is the named one", bad


def criterion_10():
    cat = [a for a in _cat() if a.graph.n_vertices <= 64]
    bad = []
    for t in (GroupSpec("Quaternion8"), GroupSpec("Modular8"), GroupSpec("SemidirectP2Q", (3, 2))):
        at = analyse(t)
        for a in cat:
            if a.canonical.certificate == at.canonical.certificate and a.fingerprint != at.fingerprint:
                bad.append(f"{render(a.spec)} shares the graph of {render(t)}")
    return not bad, "I(Q8), I(M8), I(Z9:Z2) occur for no other catalog group", bad


def criterion_11():
    rng = random.Random(0)
    cat = catalog(MAX)
    bad = []
    for _ in range(50):
        a = analyse(rng.choice(cat))
        n = rng.choice(a.lattice.subgroups)
        if not embedding_checks(a.group, n.elements, quotient=False, lattice=a.lattice).ok:
            bad.append(f"{render(a.spec)} subgroup of order {n.order}")
    quotients = 0
    for spec in catalog(60):
        a = analyse(spec)
        for n in a.lattice.subgroups:
            if is_normal(a.group, n.elements):
                quotients += 1
                rep = embedding_checks(a.group, n.elements, quotient=True, lattice=a.lattice)
                if not (rep.ok and rep.quotient_edges_preserved):
                    bad.append(f"{render(spec)}/N of order {n.order}")
    if not _iso(GroupSpec("ModularP3", (3,)), analyse(P(Z(9), Z(3))).graph):
        bad.append("I(M27) and I(Z9xZ3) differ")
    return not bad, f"50 random subgroup embeddings, {quotients} quotient embeddings, I(M27) = I(Z9xZ3)", bad


def criterion_12():
    bad = []
    small = catalog(24)
    for spec in small:
        a = analyse(spec)
        ours = {frozenset(s.elements) for s in all_subgroups(a.group)}
        if ours != subgroups_bruteforce(a.group.op.tolist()):
            bad.append(f"subgroups of {render(spec)}")
    graphs = [a for a in _cat() if a.graph.n_vertices <= 12]
    for a, b in itertools.combinations(graphs, 2):
        g, h = a.graph, b.graph
        oracle = isomorphic_bruteforce(g.n_vertices, g.sorted_edges(), h.n_vertices, h.sorted_edges()) is not None
        if (a.canonical.certificate == b.canonical.certificate) != oracle:
            bad.append(f"{render(a.spec)} vs {render(b.spec)}")
    pairs = len(graphs) * (len(graphs) - 1) // 2
    return not bad, f"subgroups of {len(small)} groups and {pairs} graph pairs agree with brute force", bad


CRITERIA = [
    criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
    criterion_7, criterion_8, criterion_9, criterion_10, criterion_11, criterion_12,
]


@pytest.mark.parametrize("number", range(1, 13))
def test_criterion(number, capsys):
    ok, summary, problems = CRITERIA[number - 1]()
    _emit(_report(number, ok, summary, problems), capsys)
    assert ok, problems


if __name__ == "__main__":
    results = []
    for i, fn in enumerate(CRITERIA, 1):
        ok, summary, problems = fn()
        _emit(_report(i, ok, summary, problems))
        results.append(ok)
    sys.exit(0 if all(results) else 1)
