"""The parametrised catalog of groups, named families, and cached analyses.

Group isomorphism is approximated by a fingerprint (order, abelian flag,
element-order histogram, centre size, subgroup-order histogram); at the
orders the catalog reaches this separates every family we compare.
"""

from __future__ import annotations

import functools
from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Optional

from sympy import primerange

from .config import get_config
from .errors import IncgraphError
from .graph_build import SimpleGraph, inclusion_graph, intersection_graph
from .group_core import (
    GroupSpec,
    GroupTable,
    center,
    check_spec,
    construct,
    element_orders,
    render,
    spec_order,
)
from .subgroup_enum import SubgroupLattice, lattice_of

C = GroupSpec.cyclic
SMALL_PRIMES = tuple(primerange(2, 14))


def _primes(limit: int) -> list[int]:
    return list(primerange(2, max(limit, 2) + 1))


def _valid(spec: GroupSpec) -> bool:
    try:
        check_spec(spec)
    except IncgraphError:
        return False
    return True


def _invariant_factor_chains(n: int, rank: int) -> Iterator[tuple]:
    """Tuples (d1, ..., dk), 2 <= k <= rank, d_{i+1} | d_i, product n."""

    def rec(rem: int, prev: Optional[int], depth: int):
        if rem == 1 and depth >= 1:
            yield ()
            return
        if depth == rank:
            return
        for d in range(2, rem + 1):
            if rem % d or (prev is not None and prev % d):
                continue
            for tail in rec(rem // d, d, depth + 1):
                yield (d,) + tail

    for chain in rec(n, None, 0):
        chain = tuple(sorted(chain, reverse=True))
        if len(chain) >= 2 and all(chain[i] % chain[i + 1] == 0 for i in range(len(chain) - 1)):
            yield chain


def catalog(max_order: int, order_cap: Optional[int] = None) -> list[GroupSpec]:
    """Every catalog spec of order 2..max_order (and <= the order cap),
    sorted by (order, rendered name)."""
    cap = get_config().order_cap if order_cap is None else order_cap
    top = min(max_order, cap)
    specs: dict[str, GroupSpec] = {}

    def add(s: GroupSpec):
        if 2 <= spec_order(s) <= top and _valid(s):
            specs.setdefault(render(s), s)

    for n in range(2, top + 1):
        add(C(n))
        seen = set()
        for chain in _invariant_factor_chains(n, 3):
            if chain not in seen:
                seen.add(chain)
                add(GroupSpec.product(*(C(d) for d in chain)))
    for m in range(3, top // 2 + 1):
        add(GroupSpec.dihedral(2 * m))
    add(GroupSpec("Quaternion8"))
    add(GroupSpec("Modular8"))
    for p in _primes(top):
        if p > 2 and p**3 <= top:
            add(GroupSpec("ModularP3", (p,)))
        if p**3 <= top:
            add(GroupSpec("Heisenberg", (p,)))
    for q in SMALL_PRIMES:
        for p in SMALL_PRIMES:
            if p == q:
                continue
            for alpha in range(1, 6):
                for t in range(1, alpha + 1):
                    add(GroupSpec("SemidirectQP", (q, p, alpha, t)))
            add(GroupSpec("SemidirectP2Q", (p, q)))
            if (p - 1) % q:
                add(GroupSpec("G6", (p, q)))
            for t in range(q):
                add(GroupSpec("G5", (p, q, t)))
            if (q - 1) % p == 0:
                add(GroupSpec.product(GroupSpec("SemidirectQP", (q, p, 1, 1)), C(p)))
    for n in (4, 5):
        add(GroupSpec("Alternating", (n,)))
    for n in (3, 4):
        add(GroupSpec("Symmetric", (n,)))
    return sorted(specs.values(), key=spec_key)


def spec_key(spec: GroupSpec) -> tuple:
    return (spec_order(spec), render(spec))


# ---------------------------------------------------------------------------
# named families from the classification statements


def family(name: str, max_order: int, primes=None) -> list[GroupSpec]:
    """Instances of a named family with order <= max_order, optionally
    built only from the given primes."""
    ps = sorted(primes) if primes is not None else _primes(max_order)
    pairs = [(p, q) for p in ps for q in ps if p != q]
    out: list[GroupSpec] = []
    if name.startswith("Zp^a:"):
        alphas = [int(a) for a in name.split(":")[1].split(",")]
        out = [C(p**a) for p in ps for a in alphas]
    elif name.startswith("Zp^aq:"):
        alphas = [int(a) for a in name.split(":")[1].split(",")]
        out = [C(p**a * q) for p, q in pairs for a in alphas]
    elif name == "Zp2q2":
        out = [C(p * p * q * q) for p, q in pairs if p < q]
    elif name == "Zpqr":
        out = [C(p * q * r) for p in ps for q in ps for r in ps if p < q < r]
    elif name == "Zp2qr":
        out = [C(p * p * q * r) for p in ps for q in ps for r in ps if q < r and p not in (q, r)]
    elif name == "Zpqrs":
        out = [C(p * q * r * s) for p in ps for q in ps for r in ps for s in ps if p < q < r < s]
    elif name == "ZpxZq":  # p = q allowed
        out = [GroupSpec.product(C(p), C(q)) for p in ps for q in ps if p <= q]
    elif name == "ZpxZp":
        out = [GroupSpec.product(C(p), C(p)) for p in ps]
    elif name == "Zp2xZp":
        out = [GroupSpec.product(C(p * p), C(p)) for p in ps]
    elif name == "ZpqxZp":
        out = [GroupSpec.product(C(p * q), C(p)) for p, q in pairs]
    elif name == "ZqsdZp":
        out = [GroupSpec("SemidirectQP", (q, p, 1, 1)) for p, q in pairs]
    elif name == "ZqsdZp2":
        out = [GroupSpec("SemidirectQP", (q, p, 2, 1)) for p, q in pairs]
    elif name == "Zqsd2Zp2":
        out = [GroupSpec("SemidirectQP", (q, p, 2, 2)) for p, q in pairs]
    elif name == "Zp2sdZq":
        out = [GroupSpec("SemidirectP2Q", (p, q)) for p, q in pairs]
    elif name == "G6":
        out = [GroupSpec("G6", (p, q)) for p, q in pairs if (p - 1) % q]
    elif name == "Mp3":
        out = [GroupSpec("ModularP3", (p,)) for p in ps if p > 2]
    elif name in ("Q8", "M8", "A4"):
        out = [
            {"Q8": GroupSpec("Quaternion8"), "M8": GroupSpec("Modular8"), "A4": GroupSpec("Alternating", (4,))}[name]
        ]
    else:
        raise KeyError(f"unknown family {name!r}")
    res = {}
    for s in out:
        if spec_order(s) <= max_order and _valid(s):
            res.setdefault(render(s), s)
    return sorted(res.values(), key=spec_key)


# ---------------------------------------------------------------------------
# cached analysis


@dataclass(frozen=True, eq=False)
class Analysis:
    spec: GroupSpec
    group: GroupTable
    lattice: SubgroupLattice

    @functools.cached_property
    def graph(self) -> SimpleGraph:
        return inclusion_graph(self.lattice)

    @functools.cached_property
    def intersection(self) -> SimpleGraph:
        return intersection_graph(self.lattice)

    @functools.cached_property
    def report(self):
        from .invariants import property_report

        return property_report(self.graph, level_coloring(self.lattice))

    @functools.cached_property
    def fingerprint(self) -> tuple:
        return fingerprint(self.group, self.lattice)

    @functools.cached_property
    def canonical(self):
        from .graph_iso import canonical_form

        return canonical_form(self.graph)


def level_coloring(lat: SubgroupLattice) -> list[int]:
    """Colour of inclusion-graph vertex v = Mirsky level of subgroup v + 1."""
    lev = lat.level_of()
    return [lev[i] - 1 for i in lat.proper_nontrivial()]


@functools.lru_cache(maxsize=None)
def analyse(spec: GroupSpec) -> Analysis:
    g = construct(spec)
    return Analysis(spec, g, lattice_of(g))


def fingerprint(g: GroupTable, lat: Optional[SubgroupLattice] = None) -> tuple:
    lat = lattice_of(g) if lat is None else lat
    orders = Counter(int(x) for x in element_orders(g))
    subs = Counter(s.order for s in lat.subgroups)
    return (
        g.order,
        g.is_abelian(),
        tuple(sorted(orders.items())),
        len(center(g)),
        tuple(sorted(subs.items())),
    )


@functools.lru_cache(maxsize=None)
def family_fingerprints(name: str, max_order: int) -> frozenset:
    return frozenset(analyse(s).fingerprint for s in family(name, max_order))


def in_families(a: Analysis, names, max_order: int) -> bool:
    return any(a.fingerprint in family_fingerprints(n, max_order) for n in names)


def prime_power_parts(n: int) -> list[int]:
    """Exponents in the factorisation of n, sorted descending."""
    from sympy import factorint

    return sorted(factorint(n).values(), reverse=True)


def is_prime_order(n: int) -> bool:
    return prime_power_parts(n) == [1]
