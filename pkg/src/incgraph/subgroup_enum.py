"""Subgroup enumeration and the subgroup lattice.

Subgroups are Python-int bitsets over element indices.  Enumeration seeds
with the cyclic subgroups and closes joins H v <c> against every cyclic
subgroup until nothing new appears; every finite subgroup is an iterated
join of cyclic ones, so the fixpoint is complete.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Optional

import numpy as np

from .config import get_config
from .errors import OrderCapExceeded, PrimeDoesNotDivideOrder
from .group_core import GroupTable, members_of, prime_factors


@dataclass(frozen=True)
class Subgroup:
    members: int
    order: int
    generators: tuple

    @cached_property
    def elements(self) -> list[int]:
        return members_of(self.members)

    def __contains__(self, x: int) -> bool:
        return bool(self.members >> x & 1)

    def issubset(self, other: "Subgroup") -> bool:
        return self.members & ~other.members == 0

    def sort_key(self):
        return (self.order, tuple(self.elements))

    def label(self, g: GroupTable) -> str:
        if not self.generators:
            return "<e>"
        return "<" + ",".join(g.labels[x] for x in self.generators) + ">"

    def to_json(self) -> dict:
        return {"order": self.order, "members": self.elements, "generators": list(self.generators)}


def _mask(elems) -> int:
    m = 0
    for x in elems:
        m |= 1 << int(x)
    return m


def cyclic_closure(g: GroupTable, x: int) -> np.ndarray:
    out, y = [g.identity], x
    while y != g.identity:
        out.append(y)
        y = int(g.op[y, x])
    return np.asarray(sorted(out), dtype=np.int64)


def closure(g: GroupTable, gens, base: Optional[np.ndarray] = None) -> np.ndarray:
    """Sorted element indices of the subgroup generated by ``gens``.

    ``base``, if given, must already be a subgroup (its generators belong in
    ``gens`` too).  The result is grown one right coset of ``base`` at a
    time until it is closed under right multiplication by every generator.
    """
    gens = sorted(set(int(x) for x in gens))
    h = np.asarray([g.identity], dtype=np.int64) if base is None else base
    inside = np.zeros(g.order, dtype=bool)
    inside[h] = True
    op = g.op
    reps = [g.identity]
    i = 0
    while i < len(reps):
        r = reps[i]
        for s in gens:
            y = op[r, s]
            if not inside[y]:
                inside[op[h, y]] = True
                reps.append(y)
        i += 1
    return np.flatnonzero(inside)


def _prune_generators(g: GroupTable, gens: list[int], order: int) -> tuple:
    gens = list(gens)
    i = 0
    while i < len(gens):
        trial = gens[:i] + gens[i + 1 :]
        if closure(g, trial).size == order:
            gens = trial
        else:
            i += 1
    return tuple(gens)


def derived_subgroup(g: GroupTable, elems: Optional[np.ndarray] = None) -> np.ndarray:
    """Commutator subgroup of ``elems`` (default: all of g)."""
    x = np.arange(g.order) if elems is None else np.asarray(elems)
    op, inv = g.op.astype(np.int64), g.inverses.astype(np.int64)
    xy = op[np.ix_(x, x)]
    comm = op[op[xy, inv[x][:, None]], inv[x][None, :]]
    return closure(g, np.unique(comm).tolist())


def is_solvable(g: GroupTable) -> bool:
    cur = np.arange(g.order)
    while cur.size > 1:
        nxt = derived_subgroup(g, cur)
        if nxt.size == cur.size:
            return False
        cur = nxt
    return True


def _cyclic_subgroups(g: GroupTable) -> dict[int, tuple[np.ndarray, tuple]]:
    found: dict[int, tuple[np.ndarray, tuple]] = {}
    for x in range(g.order):
        elems = cyclic_closure(g, x)
        m = _mask(elems)
        if m not in found:
            found[m] = (elems, () if x == g.identity else (x,))
    return found


def _pairwise_joins(g: GroupTable, found: dict) -> None:
    """Close ``found`` under H v <c> for every cyclic <c> (any group)."""
    cyclic = [(m, gens[0] if gens else g.identity) for m, (_, gens) in list(found.items())]
    queue = list(found)
    while queue:
        hm = queue.pop()
        h_elems, h_gens = found[hm]
        for cm, c in cyclic:
            if cm & ~hm == 0:
                continue
            elems = closure(g, h_gens + (c,), base=h_elems)
            m = _mask(elems)
            if m not in found:
                found[m] = (elems, h_gens + (c,))
                queue.append(m)


def _cyclic_extensions(g: GroupTable, found: dict) -> None:
    """Close ``found`` under H v <c> for c normalising H with c^p in H, p prime.

    In a solvable group every nontrivial subgroup L has a normal subgroup H
    of prime index, and L = H<c> for any c in L outside H, so these restricted
    joins already reach every subgroup.  The join is the union of the p
    cosets H c^k and needs no closure loop.
    """
    op = g.op.astype(np.int64)
    inv = g.inverses.astype(np.int64)
    queue = sorted(found, key=lambda m: found[m][0].size)
    while queue:
        hm = queue.pop()
        h_elems, h_gens = found[hm]
        inside = np.zeros(g.order, dtype=bool)
        inside[h_elems] = True
        conj = op[op[:, h_elems], inv[:, None]]  # x h x^-1
        normaliser = np.flatnonzero(inside[conj].all(axis=1))
        done = inside.copy()
        for c in normaliser.tolist():
            if done[c]:
                continue
            # smallest k with c^k in H
            k, y = 1, c
            while not inside[y]:
                y = op[y, c]
                k += 1
            if any(k % d == 0 for d in range(2, int(k**0.5) + 1)):
                continue  # composite index: reached through a prime step instead
            new = inside.copy()
            y = c
            for _ in range(k - 1):
                new[op[h_elems, y]] = True
                y = op[y, c]
            # prime index leaves no room in between, so every element of
            # H<c> outside H yields this same join
            done |= new
            elems = np.flatnonzero(new)
            m = _mask(elems)
            if m not in found:
                found[m] = (elems, h_gens + (c,))
                queue.append(m)


def all_subgroups(g: GroupTable, order_cap: Optional[int] = None) -> list[Subgroup]:
    """Every subgroup of ``g`` (trivial and full included), sorted by
    (order, member tuple)."""
    cap = get_config().order_cap if order_cap is None else order_cap
    if g.order > cap:
        raise OrderCapExceeded(f"|G| = {g.order} exceeds order cap {cap}")
    found = _cyclic_subgroups(g)
    if is_solvable(g):
        _cyclic_extensions(g, found)
    else:
        _pairwise_joins(g, found)

    subs = []
    for m, (elems, gens) in found.items():
        assert g.order % elems.size == 0, "Lagrange violated"
        gens = _prune_generators(g, gens, elems.size) if len(gens) > 1 else gens
        subs.append(Subgroup(members=m, order=int(elems.size), generators=gens))
    subs.sort(key=Subgroup.sort_key)
    return subs


@dataclass(frozen=True, eq=False)
class SubgroupLattice:
    group: GroupTable
    subgroups: tuple
    containment: np.ndarray  # containment[i, j] iff subgroups[i] <= subgroups[j]
    hasse_edges: tuple  # covering pairs (i, j): i covered by j
    height: int
    levels: tuple  # levels[k] = indices at Mirsky level k+1 (level 1 = maximal)
    depth: tuple  # longest chain (edges) from the trivial subgroup
    up: tuple  # longest chain (edges) up to G

    @property
    def top(self) -> int:
        return len(self.subgroups) - 1

    def proper_nontrivial(self) -> list[int]:
        return list(range(1, len(self.subgroups) - 1))

    def index_of(self, members: int) -> int:
        return self._index[members]

    @cached_property
    def _index(self) -> dict:
        return {s.members: i for i, s in enumerate(self.subgroups)}

    def level_of(self) -> dict[int, int]:
        return {v: k + 1 for k, lev in enumerate(self.levels) for v in lev}

    def to_json(self) -> dict:
        return {
            "subgroups": [s.to_json() for s in self.subgroups],
            "hasse": [list(e) for e in self.hasse_edges],
            "height": self.height,
            "levels": [list(lev) for lev in self.levels],
        }


def lattice_of(g: GroupTable, order_cap: Optional[int] = None) -> SubgroupLattice:
    subs = all_subgroups(g, order_cap)
    n = len(subs)
    masks = [s.members for s in subs]
    cont = np.zeros((n, n), dtype=bool)
    for i, a in enumerate(masks):
        for j in range(i, n):
            if a & ~masks[j] == 0:
                cont[i, j] = True
    strict = cont & ~np.eye(n, dtype=bool)
    s = strict.astype(np.int32)
    covers = strict & ((s @ s) == 0)
    hasse = tuple((int(i), int(j)) for i, j in zip(*np.nonzero(covers)))

    # subgroups are sorted by order, so index order is a topological order
    below: list[list[int]] = [[] for _ in range(n)]
    above: list[list[int]] = [[] for _ in range(n)]
    for i, j in hasse:
        below[j].append(i)
        above[i].append(j)
    depth = [0] * n
    for j in range(n):
        depth[j] = max((depth[i] + 1 for i in below[j]), default=0)
    up = [0] * n
    for i in range(n - 1, -1, -1):
        up[i] = max((up[j] + 1 for j in above[i]), default=0)
    height = depth[n - 1]

    levels: list[list[int]] = [[] for _ in range(max(height - 1, 0))]
    for v in range(1, n - 1):
        levels[up[v] - 1].append(v)
    return SubgroupLattice(
        group=g,
        subgroups=tuple(subs),
        containment=cont,
        hasse_edges=hasse,
        height=height,
        levels=tuple(tuple(lev) for lev in levels),
        depth=tuple(depth),
        up=tuple(up),
    )


def sylow_count(g: GroupTable, p: int, subgroups: Optional[list[Subgroup]] = None) -> int:
    """n_p(G): the number of Sylow p-subgroups."""
    fac = prime_factors(g.order)
    if p not in fac:
        raise PrimeDoesNotDivideOrder(f"{p} does not divide |G| = {g.order}")
    target = p ** fac[p]
    subs = all_subgroups(g) if subgroups is None else subgroups
    return sum(1 for s in subs if s.order == target)
