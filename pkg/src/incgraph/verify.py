"""Executable versions of the classification statements, checked over the
catalog.

Every "if and only if" is verified in both directions with the catalog as
the universe; nothing here says anything about groups outside it.
Family membership ("G is one of ...") is decided by fingerprint equality
with the family's instances of the same order.
"""

from __future__ import annotations

import hashlib
import json
import random
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

import numpy as np

from .catalog import Analysis, analyse, catalog, family, level_coloring, spec_key
from .errors import IncgraphError, NotNormal, UnclassifiedSpec, VertexLimitExceeded
from .graph_build import SimpleGraph, complete_graph
from .graph_iso import is_isomorphic
from .group_core import (
    GroupSpec,
    GroupTable,
    coset_map,
    is_normal,
    members_of,
    prime_factors,
    render,
    spec_order,
)
from .invariants import INF, PropertyReport, is_proper_coloring, shape_classify
from .planarity import check_embedding, check_witness
from .subgroup_enum import SubgroupLattice, is_solvable, lattice_of

C = GroupSpec.cyclic
DEFAULT_MAX_ORDER = 200

# families named by the classification statements
TOTALLY_DISCONNECTED = ("Zp^a:2", "ZpxZp", "Zp^aq:1", "ZqsdZp")
CYCLE = ("Zp^a:4", "Zpqr")
# M_{p^3} (p odd) shares the lattice of Z_{p^2} x Z_p, so its graph is the
# same tree; the list is completed with it
TREE = ("Zp^a:3", "Zp^aq:2", "Zp2xZp", "Q8", "M8", "ZqsdZp2", "Zqsd2Zp2", "Zp2sdZq", "Mp3")
STAR = ("Zp^a:3", "Q8")
PATH = ("Zp^a:3", "Zp^aq:2")
DISCONNECTED = ("ZpxZq", "ZqsdZp", "A4", "G6")
PLANAR_ABELIAN = (
    "Zp^a:2,3,4,5",
    "Zp^aq:1,2,3,4",
    "Zp2q2",
    "Zpqr",
    "Zp2qr",
    "Zpqrs",
    "ZpxZp",
    "Zp2xZp",
    "ZpqxZp",
)
CLAW_FREE = ("Zp^a:2,3,4", "Zp^aq:1,2", "Zpqr", "ZpxZp", "ZqsdZp")

DIAMETER_VALUES = frozenset({1, 2, 3, 4, INF})
GIRTH_VALUES = frozenset({3, 6, INF})


def member(a: Analysis, names: Iterable[str]) -> bool:
    """Is the group of ``a`` (up to fingerprint) in one of the families?"""
    return any(a.fingerprint in _fingerprints_at(n, a.group.order) for n in names)


_fp_cache: dict = {}


def _fingerprints_at(name: str, order: int) -> frozenset:
    key = (name, order)
    if key not in _fp_cache:
        specs = [s for s in family(name, order, prime_factors(order)) if spec_order(s) == order]
        _fp_cache[key] = frozenset(analyse(s).fingerprint for s in specs)
    return _fp_cache[key]


def _order_form(n: int) -> tuple:
    """Sorted exponent pattern, e.g. p^2 q -> (2, 1)."""
    return tuple(sorted(prime_factors(n).values(), reverse=True))


def _is_cyclic(a: Analysis) -> bool:
    return a.fingerprint[2][-1][0] == a.group.order


# ---------------------------------------------------------------------------
# predictions


@dataclass(frozen=True)
class Prediction:
    field: str
    value: object
    theorem: str
    relation: str = "eq"  # "eq" or "in"

    def holds(self, observed) -> bool:
        if self.relation == "in":
            return observed in self.value
        return observed == self.value

    def to_json(self):
        if self.relation == "in":
            val = sorted((None if v == INF else v) for v in self.value if v != INF) + (
                [None] if INF in self.value else []
            )
        else:
            val = None if self.value == INF else self.value
        return {"field": self.field, "relation": self.relation, "value": val, "theorem": self.theorem}


def observed(report: PropertyReport, name: str):
    if name in report.flags:
        return report.flags[name]
    if name == "shape":
        return str(report.shape)
    if name == "disconnected":
        return report.n_components >= 2
    if name == "degree_sequence":
        return list(report.degree_sequence)
    return getattr(report, name)


@dataclass
class ExpectedProfile:
    spec: GroupSpec
    predictions: tuple = ()
    notes: tuple = ()

    def fields(self) -> dict:
        out: dict = {}
        for p in self.predictions:
            out.setdefault(p.field, []).append(p)
        return out

    def mismatches(self, report: PropertyReport) -> list[dict]:
        bad = []
        for p in self.predictions:
            obs = observed(report, p.field)
            if not p.holds(obs):
                bad.append({**p.to_json(), "observed": None if obs == INF else obs})
        return bad

    def to_json(self) -> dict:
        return {
            "spec": render(self.spec),
            "predictions": [p.to_json() for p in self.predictions],
            "notes": list(self.notes),
        }


def _complete_shape(k: int) -> str:
    return str(shape_classify(complete_graph(k)))


def expected_profile(spec: GroupSpec) -> ExpectedProfile:
    """Everything the classification statements determine about I(G)."""
    a = analyse(spec)
    n = a.group.order
    if n == 1:
        raise UnclassifiedSpec("the trivial group lies outside every statement")
    form = _order_form(n)
    preds: list[Prediction] = []
    notes: list[str] = []
    P = lambda f, v, t, rel="eq": preds.append(Prediction(f, v, t, rel))  # noqa: E731
    prime = form == (1,)
    abelian = a.group.is_abelian()

    # complete graphs
    pgroup_cyclic = _is_cyclic(a) and len(form) == 1
    P("complete", pgroup_cyclic and form[0] >= 2, "2.5")
    if pgroup_cyclic and form[0] >= 2:
        P("shape", _complete_shape(form[0] - 1), "2.5")

    # lattice height
    k = a.lattice.height
    P("clique_number", k - 1, "2.7")
    P("chromatic_number", k - 1, "2.7")

    P("edgeless", member(a, TOTALLY_DISCONNECTED), "2.10")
    if prime:
        notes.append("|G| prime: the empty graph is bipartite and claw-free by convention, absent from the lists")
    else:
        P("bipartite", form in {(2,), (1, 1), (3,), (2, 1), (1, 1, 1)}, "2.10")

    P("cycle", member(a, CYCLE), "2.11")
    P("tree", member(a, TREE), "2.11")
    P("star", member(a, STAR), "2.11")
    P("path", member(a, PATH), "2.11")
    if member(a, ("Zp^a:3",)):
        P("shape", "Path(1)", "2.11")
    if member(a, ("Zp^aq:2",)):
        P("shape", "Path(3)", "2.11")
    if member(a, ("Zpqr",)):
        P("shape", "Cycle(6)", "2.11")
    if member(a, ("Q8",)):
        P("shape", "Star(3)", "2.11")
    if member(a, ("A4",)):
        P("shape", "DisjointUnion(Star(3), Edgeless(4))", "2.11")
    elif member(a, ("G6",)):
        p = min(prime_factors(n), key=lambda r: -prime_factors(n)[r])
        P("shape", f"DisjointUnion(Star({p + 1}), Edgeless({p * p}))", "2.11")
    if member(a, ("M8",)):
        P("degree_sequence", [3, 3, 3, 1, 1, 1, 1, 1], "2.11")
    if member(a, ("Zp2xZp", "Mp3")):
        p = next(iter(prime_factors(n)))
        P("degree_sequence", [p + 1, p + 1] + [1] * (2 * p), "2.11")

    P("disconnected", member(a, DISCONNECTED), "2.15")
    if not prime:
        P("connected", not member(a, DISCONNECTED), "2.15")

    if abelian and not prime:
        P("planar", member(a, PLANAR_ABELIAN), "2.16")
        P("diameter", DIAMETER_VALUES, "2.17", "in")

    P("girth", GIRTH_VALUES, "2.18", "in")
    if not prime:
        P("claw_free", member(a, CLAW_FREE), "2.18")
    solvable = is_solvable(a.group)
    if solvable and len(form) >= 3:
        P("girth", frozenset({3, 6}), "2.18", "in")
    if not solvable:
        P("girth", 3, "2.18")
        P("claw_free", False, "2.18")

    _check_consistent(preds)
    return ExpectedProfile(spec, tuple(preds), tuple(notes))


def _check_consistent(preds: list[Prediction]) -> None:
    by_field: dict = {}
    for p in preds:
        if p.relation == "eq":
            by_field.setdefault(p.field, set()).add(json.dumps(p.to_json()["value"]))
    for f, vals in by_field.items():
        if len(vals) > 1:
            raise AssertionError(f"contradictory predictions for {f}: {sorted(vals)}")
    for p in preds:
        if p.relation == "in" and p.field in by_field:
            (v,) = by_field[p.field]
            val = json.loads(v)
            if (INF if val is None else val) not in p.value:
                raise AssertionError(f"prediction for {p.field} outside its allowed set")


# ---------------------------------------------------------------------------
# embeddings


@dataclass
class EmbeddingReport:
    subgroup_vertices: dict  # vertex of I(N) -> vertex of I(G)
    subgroup_edges_preserved: bool
    subgroup_induced: bool
    quotient_vertices: Optional[dict] = None  # vertex of I(G/N) -> vertex of I(G)
    quotient_edges_preserved: Optional[bool] = None
    problems: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.problems

    def to_json(self) -> dict:
        return {
            "subgroup_vertices": {str(k): v for k, v in sorted(self.subgroup_vertices.items())},
            "subgroup_edges_preserved": self.subgroup_edges_preserved,
            "subgroup_induced": self.subgroup_induced,
            "quotient_vertices": None
            if self.quotient_vertices is None
            else {str(k): v for k, v in sorted(self.quotient_vertices.items())},
            "quotient_edges_preserved": self.quotient_edges_preserved,
            "problems": list(self.problems),
        }


def subgroup_table(g: GroupTable, elems: list[int]) -> GroupTable:
    pos = np.full(g.order, -1, dtype=np.int64)
    pos[elems] = np.arange(len(elems))
    op = pos[np.asarray(g.op)[np.ix_(elems, elems)]]
    return GroupTable(op, tuple(g.labels[x] for x in elems))


def _mask(elems) -> int:
    m = 0
    for x in elems:
        m |= 1 << int(x)
    return m


def _map_vertices(lat_g: SubgroupLattice, small: SubgroupLattice, image_mask, problems, what) -> dict:
    """Vertex v of I(small) -> vertex of I(G) via image_mask(subgroup)."""
    out = {}
    top = lat_g.top
    for i in small.proper_nontrivial():
        m = image_mask(small.subgroups[i])
        j = lat_g._index.get(m)
        if j is None:
            problems.append(f"{what}: image of vertex {i - 1} is not a subgroup")
            continue
        if j in (0, top):
            problems.append(f"{what}: image of vertex {i - 1} is trivial or G")
            continue
        out[i - 1] = j - 1
    if len(set(out.values())) != len(out):
        problems.append(f"{what}: vertex map not injective")
    return out


def _edges_preserved(src: SimpleGraph, dst: SimpleGraph, vmap: dict) -> tuple[bool, bool]:
    kept = all(dst.has_edge(vmap[u], vmap[v]) for u, v in src.edges if u in vmap and v in vmap)
    induced = kept and all(
        src.has_edge(u, v) == dst.has_edge(vmap[u], vmap[v])
        for u in vmap
        for v in vmap
        if u < v
    )
    return kept, induced


def embedding_checks(g: GroupTable, n, quotient: Optional[bool] = None, lattice=None) -> EmbeddingReport:
    """I(N) inside I(G), and for normal N, I(G/N) inside I(G) via H/N -> H.

    ``quotient``: None checks the quotient only when N is normal, True
    demands it (NotNormal otherwise), False skips it.
    """
    from .graph_build import inclusion_graph

    lat = lattice_of(g) if lattice is None else lattice
    ig = inclusion_graph(lat)
    elems = members_of(n)
    problems: list[str] = []

    nt = subgroup_table(g, elems)
    lat_n = lattice_of(nt)
    sub_map = _map_vertices(lat, lat_n, lambda s: _mask(elems[i] for i in s.elements), problems, "subgroup")
    kept, induced = _edges_preserved(inclusion_graph(lat_n), ig, sub_map)
    if not kept:
        problems.append("subgroup: an edge of I(N) is lost")
    rep = EmbeddingReport(sub_map, kept, induced, problems=problems)

    normal = is_normal(g, elems)
    if quotient is True and not normal:
        raise NotNormal("quotient embedding needs a normal subgroup")
    if quotient is False or not normal:
        return rep
    q, cmap = coset_map(g, elems)
    lat_q = lattice_of(q)
    cosets = [np.flatnonzero(cmap == c) for c in range(q.order)]
    q_map = _map_vertices(
        lat, lat_q, lambda s: _mask(x for c in s.elements for x in cosets[c]), problems, "quotient"
    )
    qkept, _ = _edges_preserved(inclusion_graph(lat_q), ig, q_map)
    if not qkept:
        problems.append("quotient: an edge of I(G/N) is lost")
    rep.quotient_vertices = q_map
    rep.quotient_edges_preserved = qkept
    return rep


# ---------------------------------------------------------------------------
# theorem checks


@dataclass
class TheoremResult:
    theorem_id: str
    description: str
    params: dict
    instances_tested: int = 0
    counterexamples: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def verdict(self) -> str:
        return "pass" if not self.counterexamples else "fail"

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem_id,
            "description": self.description,
            "params": self.params,
            "instances_tested": self.instances_tested,
            "verdict": self.verdict,
            "counterexamples": self.counterexamples,
            "notes": self.notes,
        }


def _summary(a: Analysis) -> dict:
    r = a.report.to_json()
    r.pop("planarity_witness", None)
    return r


def _cx(a: Analysis, expected, detail: str = "", full: bool = True) -> dict:
    out = {"spec": render(a.spec), "spec_json": a.spec.to_json(), "expected": expected, "detail": detail}
    out["observed"] = _summary(a)
    if full:
        out["graph"] = a.graph.to_json()
        if a.group.order <= 64:
            out["group"] = a.group.to_json()
    return out


def _flag_iff(res: TheoremResult, cat, flag: str, families, skip_prime=False) -> None:
    for a in cat:
        if skip_prime and _order_form(a.group.order) == (1,):
            continue
        res.instances_tested += 1
        want = member(a, families)
        got = observed(a.report, flag)
        if got != want:
            res.counterexamples.append(_cx(a, {flag: want}, f"{flag} observed {got}"))


def _universe(max_order: int) -> list[Analysis]:
    return [analyse(s) for s in catalog(max_order)]


def _thm_2_1(max_order, **_):
    res = TheoremResult("2.1", "isomorphic groups have isomorphic inclusion graphs", {"max_order": max_order})
    pairs = [
        (C(6), GroupSpec.product(C(2), C(3))),
        (C(12), GroupSpec.product(C(4), C(3))),
        (GroupSpec.product(C(6), C(2)), GroupSpec.product(C(2), C(2), C(3))),
        (C(30), GroupSpec.product(C(2), C(3), C(5))),
        (GroupSpec("Symmetric", (3,)), GroupSpec.dihedral(6)),
        (GroupSpec("Symmetric", (3,)), GroupSpec("SemidirectQP", (3, 2, 1, 1))),
        (GroupSpec.dihedral(8), GroupSpec("Modular8")),
        (GroupSpec("Alternating", (4,)), GroupSpec("G6", (2, 3))),
        (GroupSpec.dihedral(18), GroupSpec("SemidirectP2Q", (3, 2))),
        (GroupSpec.dihedral(12), GroupSpec.product(GroupSpec("SemidirectQP", (3, 2, 1, 1)), C(2))),
        (C(3), GroupSpec("Alternating", (3,))),
    ] + [(GroupSpec.dihedral(2 * q), GroupSpec("SemidirectQP", (q, 2, 1, 1))) for q in (5, 7, 11, 13)]
    for s1, s2 in pairs:
        if max(spec_order(s1), spec_order(s2)) > max_order:
            continue
        a1, a2 = analyse(s1), analyse(s2)
        res.instances_tested += 1
        if a1.fingerprint != a2.fingerprint:
            res.counterexamples.append(_cx(a1, render(s2), "alias pair has different group fingerprints"))
            continue
        ok, _ = is_isomorphic(a1.graph, a2.graph)
        if not ok:
            res.counterexamples.append(_cx(a1, render(s2), "graphs of isomorphic groups differ"))
    return res


def _thm_2_3(max_order, **_):
    res = TheoremResult("2.3", "lattice-isomorphic M_{p^3} and Z_{p^2} x Z_p", {"max_order": max_order})
    for p in (3, 5, 7):
        if p**3 > max_order:
            continue
        a1 = analyse(GroupSpec("ModularP3", (p,)))
        a2 = analyse(GroupSpec.product(C(p * p), C(p)))
        res.instances_tested += 1
        try:
            ok, phi = is_isomorphic(a1.graph, a2.graph)
        except VertexLimitExceeded:
            res.notes.append(f"M{p}^3: above the isomorphism vertex limit")
            continue
        if not ok:
            res.counterexamples.append(_cx(a1, render(a2.spec), "inclusion graphs not isomorphic"))
    return res


def _thm_2_4(max_order, samples: int = 50, seed: int = 0, **_):
    res = TheoremResult(
        "2.4", "I(N) and I(G/N) embed in I(G)", {"max_order": max_order, "samples": samples, "seed": seed}
    )
    rng = random.Random(seed)
    cat = [s for s in catalog(max_order) if spec_order(s) <= min(max_order, 96)]
    if not cat:
        return res
    chosen = [rng.choice(cat) for _ in range(samples)]
    for s in chosen:
        a = analyse(s)
        subs = a.lattice.subgroups
        n = subs[rng.randrange(len(subs))]
        res.instances_tested += 1
        rep = embedding_checks(a.group, n, quotient=False, lattice=a.lattice)
        if not rep.ok:
            res.counterexamples.append(_cx(a, "embedding", "; ".join(rep.problems), full=False))
    for s in sorted({render(s): s for s in chosen}.values(), key=spec_key):
        a = analyse(s)
        for n in a.lattice.subgroups:
            if not is_normal(a.group, n):
                continue
            res.instances_tested += 1
            rep = embedding_checks(a.group, n, quotient=True, lattice=a.lattice)
            if not rep.ok:
                res.counterexamples.append(_cx(a, "quotient embedding", "; ".join(rep.problems), full=False))
    return res


def _thm_2_5(max_order, **_):
    res = TheoremResult("2.5", "complete iff cyclic of prime-power order p^a, a > 1; then K_{a-1}", {"max_order": max_order})
    for a in _universe(max_order):
        res.instances_tested += 1
        form = _order_form(a.group.order)
        want = _is_cyclic(a) and len(form) == 1 and form[0] >= 2
        if a.report.flags["complete"] != want:
            res.counterexamples.append(_cx(a, {"complete": want}))
        elif want:
            ok, _ = is_isomorphic(a.graph, complete_graph(form[0] - 1))
            if not ok:
                res.counterexamples.append(_cx(a, f"K_{form[0] - 1}", "not isomorphic to the complete graph"))
    return res


def _thm_2_7(max_order, **_):
    res = TheoremResult("2.7", "omega = chi = height - 1, Mirsky levels colour optimally", {"max_order": max_order})
    for a in _universe(max_order):
        res.instances_tested += 1
        k = a.lattice.height
        r = a.report
        colours = level_coloring(a.lattice)
        problems = []
        if not is_proper_coloring(a.graph, colours):
            problems.append("level partition is not a proper colouring")
        if a.graph.n_vertices and len(set(colours)) != k - 1:
            problems.append(f"{len(set(colours))} level classes, height {k}")
        if not (r.clique_number == r.chromatic_number == k - 1):
            problems.append(f"omega {r.clique_number}, chi {r.chromatic_number}, height {k}")
        if problems:
            res.counterexamples.append(_cx(a, {"omega": k - 1, "chi": k - 1}, "; ".join(problems)))
    return res


def _thm_2_8(max_order, **_):
    res = TheoremResult("2.8", "totally disconnected iff all proper subgroups prime order iff height 2", {"max_order": max_order})
    for a in _universe(max_order):
        res.instances_tested += 1
        subs = a.lattice.subgroups
        proper = [s for s in subs[1:-1]]
        td = a.report.flags["edgeless"]
        all_prime = bool(proper) and all(_order_form(s.order) == (1,) for s in proper)
        h2 = a.lattice.height == 2
        if not (td == all_prime == h2):
            res.counterexamples.append(
                _cx(a, "all three agree", f"edgeless {td}, prime-order {all_prime}, height-2 {h2}")
            )
    return res


def _cover_graph(lat: SubgroupLattice) -> set:
    return {(i - 1, j - 1) for i, j in lat.hasse_edges if i != 0 and j != lat.top}


def _thm_2_9(max_order, **_):
    res = TheoremResult("2.9", "bipartite iff height 2 or 3 iff I(G) is the Hasse diagram of L(G) - {G, e}", {"max_order": max_order})
    for a in _universe(max_order):
        res.instances_tested += 1
        bip = a.report.bipartite
        h = a.lattice.height in (2, 3)
        hasse = _cover_graph(a.lattice) == set(a.graph.edges)
        if a.group.order > 1 and _order_form(a.group.order) == (1,):
            h = True  # height 1, empty graph: bipartite by convention
        if not (bip == h == hasse):
            res.counterexamples.append(_cx(a, "all three agree", f"bipartite {bip}, height {a.lattice.height}, hasse {hasse}"))
    return res


def _thm_2_10(max_order, **_):
    res = TheoremResult("2.10", "totally disconnected and bipartite classifications", {"max_order": max_order})
    cat = _universe(max_order)
    _flag_iff(res, cat, "edgeless", TOTALLY_DISCONNECTED)
    for a in cat:
        form = _order_form(a.group.order)
        if form == (1,):
            if a.report.bipartite:
                res.notes.append(f"{render(a.spec)}: empty graph bipartite, |G| prime not in the order list")
            continue
        res.instances_tested += 1
        want = form in {(2,), (1, 1), (3,), (2, 1), (1, 1, 1)}
        if a.report.bipartite != want:
            res.counterexamples.append(_cx(a, {"bipartite": want}))
    return res


def _thm_2_11(max_order, **_):
    res = TheoremResult("2.11", "cycle, tree, star and path classifications", {"max_order": max_order})
    cat = _universe(max_order)
    _flag_iff(res, cat, "cycle", CYCLE)
    _flag_iff(res, cat, "tree", TREE)
    _flag_iff(res, cat, "star", STAR)
    _flag_iff(res, cat, "path", PATH)
    for a in cat:
        res.instances_tested += 1
        prof = expected_profile(a.spec)
        bad = [m for m in prof.mismatches(a.report) if m["field"] in ("shape", "degree_sequence")]
        if bad:
            res.counterexamples.append(_cx(a, bad, "golden shape"))
    return res


def _thm_2_13(max_order, **_):
    res = TheoremResult("2.13", "Q8, M8 and Z9 x| Z2 are determined by their inclusion graphs", {"max_order": max_order})
    targets = [GroupSpec("Quaternion8"), GroupSpec("Modular8"), GroupSpec("SemidirectP2Q", (3, 2))]
    cat = _universe(max_order)
    for t in targets:
        if spec_order(t) > max_order:
            continue
        at = analyse(t)
        cert = at.canonical.certificate
        for a in cat:
            if a.graph.n_vertices != at.graph.n_vertices or a.graph.n_edges != at.graph.n_edges:
                continue
            res.instances_tested += 1
            if a.canonical.certificate == cert and a.fingerprint != at.fingerprint:
                res.counterexamples.append(_cx(a, render(t), "same inclusion graph, different group"))
        res.notes.append(f"{render(t)}: certificate {at.canonical.hex()}")
    return res


def _thm_2_14(max_order, **_):
    res = TheoremResult("2.14", "inclusion graph connected iff intersection graph connected", {"max_order": max_order})
    from .invariants import components

    for a in _universe(max_order):
        res.instances_tested += 1
        ci = a.report.connected
        cj = a.graph.n_vertices >= 1 and len(components(a.intersection)) == 1
        if ci != cj:
            res.counterexamples.append(_cx(a, "equal connectivity", f"inclusion {ci}, intersection {cj}"))
    return res


def _thm_2_15(max_order, **_):
    res = TheoremResult(
        "2.15",
        "disconnected iff Z_p x Z_q or a Frobenius group with prime-order complement and minimal normal kernel",
        {"max_order": max_order},
    )
    _flag_iff(res, _universe(max_order), "disconnected", DISCONNECTED)
    res.notes.append("Frobenius instances in the catalog: Z_q x| Z_p, A4, G6(p,q)")
    return res


def _thm_2_16(max_order, **_):
    res = TheoremResult("2.16", "planar abelian classification", {"max_order": max_order})
    for a in _universe(max_order):
        r = a.report
        edges = a.graph.sorted_edges()
        if r.planar:
            probs = check_embedding(a.graph.n_vertices, edges, r.planarity_witness)
        else:
            probs = check_witness(a.graph.n_vertices, edges, r.planarity_witness)
        if probs:
            res.counterexamples.append(_cx(a, "valid certificate", "; ".join(probs)))
        if not a.group.is_abelian():
            continue
        if _order_form(a.group.order) == (1,):
            res.notes.append(f"{render(a.spec)}: empty graph planar, |G| prime not in the list")
            continue
        res.instances_tested += 1
        want = member(a, PLANAR_ABELIAN)
        if r.planar != want:
            res.counterexamples.append(_cx(a, {"planar": want}))
    return res


DIAMETER_WITNESSES = (
    (C(36), 2),  # Z_{p^2 q^2}
    (GroupSpec.product(C(4), C(2)), 3),  # Z_{p^2} x Z_p
    (GroupSpec.product(C(6), C(6)), 4),  # Z_{pq} x Z_{pq}
)
GIRTH_WITNESSES = (
    (GroupSpec.product(C(3), C(3), C(3)), 6),
    (GroupSpec("Heisenberg", (3,)), 6),
)


def _thm_2_17(max_order, **_):
    res = TheoremResult("2.17", "abelian diameters lie in {1,2,3,4,inf}, each value attained", {"max_order": max_order})
    seen = set()
    for a in _universe(max_order):
        if not a.group.is_abelian() or _order_form(a.group.order) == (1,):
            continue
        res.instances_tested += 1
        d = a.report.diameter
        seen.add(d)
        if d not in DIAMETER_VALUES:
            res.counterexamples.append(_cx(a, "diameter in {1,2,3,4,inf}", f"diameter {d}"))
    for spec, want in DIAMETER_WITNESSES:
        if spec_order(spec) > max_order:
            continue
        a = analyse(spec)
        res.instances_tested += 1
        if a.report.diameter != want:
            res.counterexamples.append(_cx(a, {"diameter": want}, f"named witness has diameter {a.report.diameter}"))
    missing = sorted(("inf" if v == INF else v) for v in DIAMETER_VALUES - seen) if max_order >= 36 else []
    if missing:
        res.notes.append(f"diameter values not attained in the catalog: {missing}")
    return res


def _thm_2_18(max_order, **_):
    res = TheoremResult("2.18", "girth in {3,6,inf}; claw-free classification", {"max_order": max_order})
    cat = _universe(max_order)
    for a in cat:
        res.instances_tested += 1
        g = a.report.girth
        if g not in GIRTH_VALUES:
            res.counterexamples.append(_cx(a, "girth in {3,6,inf}", f"girth {g}"))
        solvable = is_solvable(a.group)
        if solvable and len(_order_form(a.group.order)) >= 3 and g == INF:
            res.counterexamples.append(_cx(a, "girth in {3,6}", "solvable with three primes but acyclic"))
        if not solvable and (g != 3 or a.report.claw_free):
            res.counterexamples.append(_cx(a, "girth 3 and a claw", "non-solvable group"))
    for spec, want in GIRTH_WITNESSES:
        if spec_order(spec) > max_order:
            continue
        a = analyse(spec)
        res.instances_tested += 1
        if a.report.girth != want:
            g = a.report.girth
            res.counterexamples.append(_cx(a, {"girth": want}, f"named witness has girth {'inf' if g == INF else g}"))
    _flag_iff(res, cat, "claw_free", CLAW_FREE, skip_prime=True)
    return res


def _thm_d4n(max_order, **_):
    res = TheoremResult("D4n", "I(D_4n) has a vertex of degree >= 3 for n >= 3", {"max_order": max_order, "n": [3, 40]})
    for n in range(3, 41):
        if 4 * n > max_order:
            break
        a = analyse(GroupSpec.dihedral(4 * n))
        res.instances_tested += 1
        if a.report.max_degree < 3:
            res.counterexamples.append(_cx(a, "max degree >= 3"))
    return res


THEOREMS: dict[str, Callable] = {
    "2.1": _thm_2_1,
    "2.3": _thm_2_3,
    "2.4": _thm_2_4,
    "2.5": _thm_2_5,
    "2.7": _thm_2_7,
    "2.8": _thm_2_8,
    "2.9": _thm_2_9,
    "2.10": _thm_2_10,
    "2.11": _thm_2_11,
    "2.13": _thm_2_13,
    "2.14": _thm_2_14,
    "2.15": _thm_2_15,
    "2.16": _thm_2_16,
    "2.17": _thm_2_17,
    "2.18": _thm_2_18,
    "D4n": _thm_d4n,
}
ALIASES = {
    "girth_values": "2.18",
    "omega_equals_chi": "2.7",
    "connectivity_equiv": "2.14",
    "2.6": "2.7",
    "2.19": "2.18",
    "2.20": "2.18",
    "2.21": "2.18",
}


def resolve_theorem(theorem_id: str) -> str:
    tid = ALIASES.get(theorem_id, theorem_id)
    if tid not in THEOREMS:
        raise KeyError(f"unknown theorem id {theorem_id!r}; known: {sorted(THEOREMS) + sorted(ALIASES)}")
    return tid


def check_theorem(theorem_id: str, max_order: int = DEFAULT_MAX_ORDER, **params) -> TheoremResult:
    tid = resolve_theorem(theorem_id)
    return THEOREMS[tid](max_order, **params)


# ---------------------------------------------------------------------------
# sweep


UNIVERSE_NOTE = "iff statements are checked with the catalog as the universe; groups outside it are not covered"


@dataclass
class SweepResult:
    records: list
    results: list
    digest: str

    @property
    def ok(self) -> bool:
        return all(r.verdict == "pass" for r in self.results) and all(
            rec["verdict"] != "fail" for rec in self.records
        )

    def lines(self) -> list[str]:
        out = [json.dumps(r, sort_keys=True, separators=(",", ":")) for r in self.records]
        out += [json.dumps(r.to_json(), sort_keys=True, separators=(",", ":")) for r in self.results]
        out.append(json.dumps({"digest": self.digest, "note": UNIVERSE_NOTE}, sort_keys=True, separators=(",", ":")))
        return out

    def write(self, path) -> None:
        with open(path, "w") as fh:
            fh.write("\n".join(self.lines()) + "\n")


def instance_record(spec: GroupSpec) -> dict:
    rec = {"spec": render(spec), "spec_json": spec.to_json(), "order": spec_order(spec)}
    try:
        a = analyse(spec)
        rec["report"] = _summary(a)
    except IncgraphError as exc:
        rec.update(report=None, expected=None, verdict="error", error=f"{type(exc).__name__}: {exc}")
        return rec
    try:
        prof = expected_profile(spec)
    except UnclassifiedSpec as exc:
        rec.update(expected=None, verdict="unclassified", error=str(exc))
        return rec
    bad = prof.mismatches(a.report)
    rec["expected"] = prof.to_json()
    rec["mismatches"] = bad
    rec["verdict"] = "fail" if bad else "pass"
    return rec


def sweep(max_order: int, theorems: Iterable[str] = ("all",)) -> SweepResult:
    specs = catalog(max_order) if max_order >= 2 else []
    records = [instance_record(s) for s in specs]
    ids = list(theorems)
    if "all" in ids:
        ids = list(THEOREMS)
    results = [check_theorem(t, max_order) for t in ids]
    if not records:
        return SweepResult(records, results, "")
    h = hashlib.sha256()
    for r in records:
        h.update(json.dumps(r, sort_keys=True, separators=(",", ":")).encode())
        h.update(b"\n")
    return SweepResult(records, results, h.hexdigest())
