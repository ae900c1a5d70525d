"""Canonical labelling of small graphs by colour refinement and
individualisation, with automorphism pruning.

Cells are refined until equitable; the search individualises each vertex
of the first largest non-singleton cell in turn.  Every leaf of the search
tree is a vertex ordering and the canonical one is the leaf whose packed
adjacency bits are lexicographically smallest.  Leaves with equal bits
give automorphisms, which prune children lying in one orbit of the
automorphisms found so far that fix the current prefix.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

from .config import get_config
from .errors import VertexLimitExceeded
from .graph_build import SimpleGraph


@dataclass(frozen=True)
class CanonicalForm:
    n_vertices: int
    edges: tuple  # canonical edge list, sorted
    certificate: bytes  # two-byte vertex count, then the packed adjacency bits
    labeling: tuple  # labeling[v] = canonical position of vertex v
    automorphism_generators: tuple = ()

    def hex(self) -> str:
        return f"{self.n_vertices:02x}:" + self.certificate[2:].hex()


def _distance_profile(g: SimpleGraph, s: int) -> tuple:
    dist = {s: 0}
    dq = deque([s])
    while dq:
        x = dq.popleft()
        for y in g.adj[x]:
            if y not in dist:
                dist[y] = dist[x] + 1
                dq.append(y)
    counts: dict[int, int] = {}
    for d in dist.values():
        counts[d] = counts.get(d, 0) + 1
    return tuple(sorted(counts.items()))


def _initial_partition(g: SimpleGraph) -> list[list[int]]:
    deg = g.degrees()
    key = {
        v: (deg[v], tuple(sorted(deg[w] for w in g.adj[v])), _distance_profile(g, v))
        for v in range(g.n_vertices)
    }
    cells: dict = {}
    for v in range(g.n_vertices):
        cells.setdefault(key[v], []).append(v)
    return [cells[k] for k in sorted(cells)]


def _refine(adj_mask: tuple, cells: list[list[int]]) -> list[list[int]]:
    """Coarsest equitable refinement; splits keep the cell in place and
    order the pieces by their neighbour counts, which is label-invariant."""
    cells = [list(c) for c in cells]
    while True:
        masks = [sum(1 << v for v in c) for c in cells]
        out: list[list[int]] = []
        changed = False
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            groups: dict = {}
            for v in c:
                sig = tuple(bin(adj_mask[v] & m).count("1") for m in masks)
                groups.setdefault(sig, []).append(v)
            if len(groups) > 1:
                changed = True
            out.extend(groups[k] for k in sorted(groups))
        cells = out
        if not changed:
            return cells


def _bits(adj_mask: tuple, order: list[int]) -> int:
    n = len(order)
    x = 0
    for i in range(n):
        row = adj_mask[order[i]]
        for j in range(i + 1, n):
            x = (x << 1) | (row >> order[j] & 1)
    return x


def _orbit_reps(n: int, gens: list[tuple], fixed: tuple) -> list[int]:
    """Union-find orbit representative of every vertex under the given
    automorphisms that fix ``fixed`` pointwise."""
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for p in gens:
        if any(p[v] != v for v in fixed):
            continue
        for v in range(n):
            a, b = find(v), find(p[v])
            if a != b:
                parent[max(a, b)] = min(a, b)
    return [find(v) for v in range(n)]


def _search(g: SimpleGraph):
    n = g.n_vertices
    adj = g.adj_mask
    best: Optional[list] = None  # [bits, order, prefix]
    gens: list[tuple] = []

    def visit(cells: list[list[int]], prefix: tuple) -> int:
        """Returns the depth to resume at; a leaf equivalent to the best
        leaf sends the search back to where the two paths diverge."""
        nonlocal best
        cells = _refine(adj, cells)
        if all(len(c) == 1 for c in cells):
            order = [c[0] for c in cells]
            bits = _bits(adj, order)
            if best is None or bits < best[0]:
                best = [bits, order, prefix]
            elif bits == best[0]:
                perm = [0] * n
                for a, b in zip(best[1], order):
                    perm[a] = b
                gens.append(tuple(perm))
                common = 0
                while common < min(len(prefix), len(best[2])) and prefix[common] == best[2][common]:
                    common += 1
                return common
            return len(prefix)
        idx = max(range(len(cells)), key=lambda i: (len(cells[i]), -i))
        target = cells[idx]
        tried: list[int] = []
        reps, seen = None, -1
        for v in sorted(target):
            if tried:
                if seen != len(gens):
                    reps, seen = _orbit_reps(n, gens, prefix), len(gens)
                if reps[v] in {reps[w] for w in tried}:
                    continue
            rest = [w for w in target if w != v]
            back = visit(cells[:idx] + [[v], rest] + cells[idx + 1 :], prefix + (v,))
            tried.append(v)
            if back < len(prefix):
                return back
        return len(prefix)

    visit(_initial_partition(g), ())
    return (best[0], best[1]), gens


def canonical_form(g: SimpleGraph, vertex_limit: Optional[int] = None) -> CanonicalForm:
    limit = get_config().iso_vertex_limit if vertex_limit is None else vertex_limit
    n = g.n_vertices
    if n > limit:
        raise VertexLimitExceeded(f"{n} vertices exceeds isomorphism limit {limit}")
    if n == 0:
        return CanonicalForm(0, (), bytes(2), ())
    (bits, order), gens = _search(g)
    nbits = n * (n - 1) // 2
    cert = n.to_bytes(2, "big") + (bits.to_bytes((nbits + 7) // 8, "big") if nbits else b"")
    labeling = [0] * n
    for pos, v in enumerate(order):
        labeling[v] = pos
    edges = tuple(sorted((min(labeling[u], labeling[v]), max(labeling[u], labeling[v])) for u, v in g.edges))
    return CanonicalForm(n, edges, cert, tuple(labeling), tuple(gens))


def verify_bijection(g1: SimpleGraph, g2: SimpleGraph, phi) -> bool:
    """phi[v] is the image in g2 of vertex v of g1."""
    n = g1.n_vertices
    if n != g2.n_vertices or sorted(phi) != list(range(n)):
        return False
    if g1.n_edges != g2.n_edges:
        return False
    return all(g2.has_edge(phi[u], phi[v]) for u, v in g1.edges)


def is_isomorphic(g1: SimpleGraph, g2: SimpleGraph) -> tuple[bool, Optional[tuple]]:
    if g1.n_vertices != g2.n_vertices or g1.n_edges != g2.n_edges:
        for g in (g1, g2):
            if g.n_vertices > get_config().iso_vertex_limit:
                raise VertexLimitExceeded(f"{g.n_vertices} vertices exceeds isomorphism limit")
        return False, None
    c1, c2 = canonical_form(g1), canonical_form(g2)
    if c1.certificate != c2.certificate:
        return False, None
    inverse2 = {pos: v for v, pos in enumerate(c2.labeling)}
    phi = tuple(inverse2[c1.labeling[v]] for v in range(g1.n_vertices))
    if not verify_bijection(g1, g2, phi):
        raise AssertionError("equal certificates but the induced bijection is not an isomorphism")
    return True, phi
