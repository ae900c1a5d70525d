"""Exact graph invariants of (inclusion) graphs.

Conventions for the graph with no vertices: 0 components, not connected,
diameter and girth infinite, bipartite, omega = chi = 0, claw-free, planar.
Infinite values are ``math.inf`` in Python and ``null`` plus a
``<field>_finite: false`` flag in JSON.
"""

from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

from .config import get_config
from .errors import ChromaticMismatch, VertexLimitExceeded
from .graph_build import SimpleGraph
from .planarity import (
    KuratowskiWitness,
    PlanarEmbedding,
    kuratowski_witness,
    planar_embedding,
)

INF = math.inf


# ---------------------------------------------------------------------------
# distances


def bfs_distances(g: SimpleGraph, s: int) -> list[float]:
    dist = [INF] * g.n_vertices
    dist[s] = 0
    dq = deque([s])
    while dq:
        x = dq.popleft()
        for y in g.adj[x]:
            if dist[y] == INF:
                dist[y] = dist[x] + 1
                dq.append(y)
    return dist


def components(g: SimpleGraph) -> list[list[int]]:
    comp = [-1] * g.n_vertices
    out = []
    for s in range(g.n_vertices):
        if comp[s] >= 0:
            continue
        comp[s] = len(out)
        members = [s]
        dq = deque([s])
        while dq:
            x = dq.popleft()
            for y in g.adj[x]:
                if comp[y] < 0:
                    comp[y] = len(out)
                    members.append(y)
                    dq.append(y)
        out.append(sorted(members))
    return out


def diameter(g: SimpleGraph) -> float:
    if g.n_vertices == 0:
        return INF
    best = 0
    for s in range(g.n_vertices):
        d = max(bfs_distances(g, s))
        if d == INF:
            return INF
        best = max(best, d)
    return best


def girth(g: SimpleGraph) -> float:
    """Length of a shortest cycle: minimum over BFS roots of the first
    non-tree edge closing a cycle through the root's BFS tree."""
    best = INF
    for s in range(g.n_vertices):
        dist = {s: 0}
        parent = {s: -1}
        dq = deque([s])
        while dq:
            x = dq.popleft()
            if 2 * dist[x] + 1 >= best:
                break
            for y in g.adj[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    dq.append(y)
                elif parent[x] != y:
                    best = min(best, dist[x] + dist[y] + 1)
    return best


def connectivity_metrics(g: SimpleGraph) -> tuple[int, float, float]:
    """(number of components, diameter, girth)."""
    return len(components(g)), diameter(g), girth(g)


def two_coloring(g: SimpleGraph) -> Optional[list[int]]:
    color = [-1] * g.n_vertices
    for s in range(g.n_vertices):
        if color[s] >= 0:
            continue
        color[s] = 0
        dq = deque([s])
        while dq:
            x = dq.popleft()
            for y in g.adj[x]:
                if color[y] < 0:
                    color[y] = 1 - color[x]
                    dq.append(y)
                elif color[y] == color[x]:
                    return None
    return color


def is_bipartite(g: SimpleGraph) -> bool:
    return two_coloring(g) is not None


# ---------------------------------------------------------------------------
# shapes


@dataclass(frozen=True)
class Shape:
    kind: str  # Empty Edgeless Complete Path Cycle Star Tree DisjointUnion Other
    size: Optional[int] = None  # vertices (Edgeless, Complete), edges (Path, Cycle), leaves (Star)
    parts: tuple = ()

    def __str__(self) -> str:
        if self.kind == "DisjointUnion":
            return "DisjointUnion(" + ", ".join(str(p) for p in self.parts) + ")"
        if self.size is None:
            return self.kind
        return f"{self.kind}({self.size})"

    @classmethod
    def parse(cls, text: str) -> "Shape":
        text = text.strip()
        if text.startswith("DisjointUnion("):
            inner, depth, parts, cur = text[len("DisjointUnion(") : -1], 0, [], ""
            for ch in inner:
                if ch == "," and depth == 0:
                    parts.append(cur)
                    cur = ""
                    continue
                depth += ch == "("
                depth -= ch == ")"
                cur += ch
            parts.append(cur)
            return cls("DisjointUnion", None, tuple(cls.parse(p) for p in parts))
        if "(" in text:
            kind, rest = text.split("(", 1)
            return cls(kind, int(rest.rstrip(")")))
        return cls(text)


def shape_flags(g: SimpleGraph) -> dict[str, bool]:
    """Every shape predicate the classification theorems talk about.

    Trees, stars and paths need at least two vertices; a lone vertex is
    counted as edgeless and complete only.
    """
    n, m = g.n_vertices, g.n_edges
    deg = g.degrees()
    connected = n >= 1 and len(components(g)) == 1
    tree = connected and n >= 2 and m == n - 1
    return {
        "edgeless": n >= 1 and m == 0,
        "complete": n >= 1 and m == n * (n - 1) // 2,
        "tree": tree,
        "star": tree and max(deg) == n - 1,
        "path": tree and max(deg) <= 2,
        "cycle": connected and n >= 3 and all(d == 2 for d in deg),
    }


def _connected_shape(g: SimpleGraph) -> Shape:
    n, m = g.n_vertices, g.n_edges
    f = shape_flags(g)
    if m == 0:
        return Shape("Edgeless", n)
    if f["complete"] and n >= 3:
        return Shape("Complete", n)
    if f["path"]:
        return Shape("Path", m)
    if f["star"]:
        return Shape("Star", m)
    if f["cycle"]:
        return Shape("Cycle", m)
    if f["tree"]:
        return Shape("Tree")
    return Shape("Other")


def shape_classify(g: SimpleGraph) -> Shape:
    """Primary shape.  Precedence: Complete (3+ vertices) > Path > Star >
    Cycle > Tree; so K2 is Path(1) and K3 is Complete(3)."""
    if g.n_vertices == 0:
        return Shape("Empty")
    if g.n_edges == 0:
        return Shape("Edgeless", g.n_vertices)
    comps = components(g)
    if len(comps) == 1:
        return _connected_shape(g)
    isolated = [c for c in comps if len(c) == 1]
    parts = [_connected_shape(g.induced(c)) for c in comps if len(c) > 1]
    parts.sort(key=lambda s: (str(s.kind), -(s.size or 0), str(s)))
    if isolated:
        parts.append(Shape("Edgeless", len(isolated)))
    return Shape("DisjointUnion", None, tuple(parts))


# ---------------------------------------------------------------------------
# cliques and colourings


def max_clique(g: SimpleGraph) -> list[int]:
    """A maximum clique, by Bron-Kerbosch with Tomita pivoting on bitsets."""
    adj = g.adj_mask
    best: list[int] = []

    def bits(x: int):
        while x:
            low = x & -x
            yield low.bit_length() - 1
            x ^= low

    def expand(r: list[int], p: int, x: int) -> None:
        nonlocal best
        if not p and not x:
            if len(r) > len(best):
                best = list(r)
            return
        if len(r) + bin(p).count("1") <= len(best):
            return
        pivot = max(bits(p | x), key=lambda u: bin(p & adj[u]).count("1"))
        for v in list(bits(p & ~adj[pivot])):
            r.append(v)
            expand(r, p & adj[v], x & adj[v])
            r.pop()
            p &= ~(1 << v)
            x |= 1 << v

    if g.n_vertices:
        expand([], (1 << g.n_vertices) - 1, 0)
    return sorted(best)


def is_proper_coloring(g: SimpleGraph, colors: Sequence[int]) -> bool:
    return len(colors) == g.n_vertices and all(colors[u] != colors[v] for u, v in g.edges)


def dsatur_coloring(g: SimpleGraph) -> list[int]:
    n = g.n_vertices
    colors = [-1] * n
    for _ in range(n):
        v = max(
            (u for u in range(n) if colors[u] < 0),
            key=lambda u: (len({colors[w] for w in g.adj[u] if colors[w] >= 0}), g.degree(u), -u),
        )
        used = {colors[w] for w in g.adj[v]}
        colors[v] = next(c for c in itertools.count() if c not in used)
    return colors


def chromatic_number_exact(g: SimpleGraph, lower: int = 0) -> int:
    """Exact chi by DSATUR branch and bound."""
    n = g.n_vertices
    if n == 0:
        return 0
    greedy = dsatur_coloring(g)
    best = max(greedy) + 1
    if best <= max(lower, 1):
        return best
    colors = [-1] * n

    def rec(done: int, used: int) -> bool:
        nonlocal best
        if done == n:
            best = used
            return best <= lower
        v = max(
            (u for u in range(n) if colors[u] < 0),
            key=lambda u: (len({colors[w] for w in g.adj[u] if colors[w] >= 0}), g.degree(u), -u),
        )
        taken = {colors[w] for w in g.adj[v]}
        for c in range(min(used + 1, best - 1)):
            if c in taken:
                continue
            colors[v] = c
            if rec(done + 1, max(used, c + 1)):
                return True
            colors[v] = -1
        return False

    rec(0, 0)
    return best


def clique_and_chromatic(
    g: SimpleGraph, coloring: Optional[Sequence[int]] = None, exact_limit: Optional[int] = None
) -> tuple[int, int]:
    """(omega, chi).

    ``coloring`` is an optional proper colouring (the Mirsky levels for an
    inclusion graph).  It is checked, and when it uses omega colours it
    certifies chi without search.  Graphs above ``exact_limit`` vertices
    must be certified this way or by DSATUR hitting the clique bound.
    """
    limit = get_config().chromatic_exact_limit if exact_limit is None else exact_limit
    n = g.n_vertices
    if n == 0:
        return 0, 0
    omega = len(max_clique(g))
    if coloring is not None:
        if not is_proper_coloring(g, coloring):
            raise ChromaticMismatch("supplied colouring is not proper")
        k = len(set(coloring))
        if k == omega:
            if n <= limit:
                chi = chromatic_number_exact(g, omega)
                if chi != omega:
                    raise ChromaticMismatch(f"exact chi {chi} disagrees with certified colouring {omega}")
            return omega, omega
    if n <= limit:
        return omega, chromatic_number_exact(g, omega)
    greedy = max(dsatur_coloring(g)) + 1
    if greedy == omega:
        return omega, omega
    raise ChromaticMismatch(f"n = {n} above exact limit and no colouring meets the clique bound {omega}")


# ---------------------------------------------------------------------------
# claws


def has_claw_bruteforce(g: SimpleGraph) -> bool:
    """Search every centre and every 3-set of other vertices."""
    for c in range(g.n_vertices):
        others = [v for v in range(g.n_vertices) if v != c]
        for trio in itertools.combinations(others, 3):
            if all(g.has_edge(c, v) for v in trio):
                return True
    return False


def is_claw_free(g: SimpleGraph, bruteforce_limit: Optional[int] = None) -> bool:
    """No K_{1,3} subgraph (not necessarily induced), i.e. max degree <= 2."""
    limit = get_config().claw_bruteforce_limit if bruteforce_limit is None else bruteforce_limit
    by_degree = all(d <= 2 for d in g.degrees())
    if g.n_vertices <= limit and by_degree != (not has_claw_bruteforce(g)):
        raise AssertionError("degree test and brute-force claw search disagree")
    return by_degree


# ---------------------------------------------------------------------------
# planarity


def euler_bound_rejects(g: SimpleGraph) -> bool:
    """True when edge counting alone proves non-planarity."""
    v = sum(1 for d in g.degrees() if d)
    if v < 3:
        return False
    if g.n_edges > 3 * v - 6:
        return True
    return is_bipartite(g) and g.n_edges > 2 * v - 4


def is_planar(
    g: SimpleGraph, vertex_limit: Optional[int] = None
) -> tuple[bool, Union[PlanarEmbedding, KuratowskiWitness]]:
    limit = get_config().planarity_vertex_limit if vertex_limit is None else vertex_limit
    if g.n_vertices > limit:
        raise VertexLimitExceeded(f"{g.n_vertices} vertices exceeds planarity limit {limit}")
    edges = g.sorted_edges()
    if not euler_bound_rejects(g):
        emb = planar_embedding(g.n_vertices, edges)
        if emb is not None:
            return True, emb
    return False, kuratowski_witness(g.n_vertices, edges)


# ---------------------------------------------------------------------------
# report


@dataclass
class PropertyReport:
    n_vertices: int
    n_edges: int
    connected: bool
    n_components: int
    diameter: float
    girth: float
    bipartite: bool
    max_degree: int
    clique_number: int
    chromatic_number: int
    shape: Shape
    flags: dict
    claw_free: bool
    planar: bool
    planarity_witness: Union[PlanarEmbedding, KuratowskiWitness, None] = field(default=None, repr=False)
    degree_sequence: tuple = ()

    @property
    def totally_disconnected(self) -> bool:
        return self.flags["edgeless"]

    @property
    def disconnected(self) -> bool:
        return self.n_components >= 2

    def to_json(self) -> dict:
        out = {
            "n_vertices": self.n_vertices,
            "n_edges": self.n_edges,
            "connected": self.connected,
            "n_components": self.n_components,
        }
        for name in ("diameter", "girth"):
            val = getattr(self, name)
            finite = val != INF
            out[name] = int(val) if finite else None
            out[f"{name}_finite"] = finite
        out.update(
            {
                "bipartite": self.bipartite,
                "max_degree": self.max_degree,
                "clique_number": self.clique_number,
                "chromatic_number": self.chromatic_number,
                "shape": str(self.shape),
                "flags": dict(sorted(self.flags.items())),
                "claw_free": self.claw_free,
                "planar": self.planar,
                "planarity_witness": self.planarity_witness.to_json() if self.planarity_witness else None,
                "degree_sequence": list(self.degree_sequence),
            }
        )
        return out


def property_report(
    g: SimpleGraph, coloring: Optional[Sequence[int]] = None, with_witness: bool = True
) -> PropertyReport:
    """Every invariant of ``g``; ``coloring`` is passed to clique_and_chromatic."""
    ncomp, diam, gi = connectivity_metrics(g)
    omega, chi = clique_and_chromatic(g, coloring)
    planar, witness = is_planar(g)
    deg = g.degrees()
    return PropertyReport(
        n_vertices=g.n_vertices,
        n_edges=g.n_edges,
        connected=ncomp == 1,
        n_components=ncomp,
        diameter=diam,
        girth=gi,
        bipartite=is_bipartite(g),
        max_degree=max(deg, default=0),
        clique_number=omega,
        chromatic_number=chi,
        shape=shape_classify(g),
        flags=shape_flags(g),
        claw_free=is_claw_free(g),
        planar=planar,
        planarity_witness=witness if with_witness else None,
        degree_sequence=tuple(sorted(deg, reverse=True)),
    )
