"""Inclusion and intersection graphs over the proper nontrivial subgroups.

Vertex ``v`` of either graph is lattice index ``v + 1``: the trivial
subgroup (index 0) and G itself (the last index) are left out.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .subgroup_enum import SubgroupLattice

PROVENANCES = ("Inclusion", "Intersection", "Synthetic")


@dataclass(frozen=True)
class SimpleGraph:
    n_vertices: int
    edges: frozenset = frozenset()
    vertex_labels: tuple = ()
    provenance: str = "Synthetic"

    def __post_init__(self):
        norm = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < self.n_vertices and 0 <= v < self.n_vertices):
                raise ValueError(f"edge ({u}, {v}) out of range")
            norm.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(norm))
        if not self.vertex_labels:
            object.__setattr__(self, "vertex_labels", tuple(str(i) for i in range(self.n_vertices)))
        if self.provenance not in PROVENANCES:
            raise ValueError(f"unknown provenance {self.provenance!r}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable, **kw) -> "SimpleGraph":
        return cls(n, frozenset(tuple(e) for e in edges), **kw)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    @cached_property
    def adj(self) -> tuple:
        nbrs = [[] for _ in range(self.n_vertices)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(a)) for a in nbrs)

    @cached_property
    def adj_mask(self) -> tuple:
        return tuple(sum(1 << w for w in a) for a in self.adj)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def relabel(self, perm) -> "SimpleGraph":
        """Graph with vertex v renamed perm[v]."""
        labels = [""] * self.n_vertices
        for v, lab in enumerate(self.vertex_labels):
            labels[perm[v]] = lab
        return SimpleGraph(
            self.n_vertices,
            frozenset((perm[u], perm[v]) for u, v in self.edges),
            tuple(labels),
            self.provenance,
        )

    def induced(self, vertices) -> "SimpleGraph":
        vs = list(vertices)
        pos = {v: i for i, v in enumerate(vs)}
        edges = {(pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos}
        return SimpleGraph(len(vs), frozenset(edges), tuple(self.vertex_labels[v] for v in vs), self.provenance)

    def to_json(self) -> dict:
        return {
            "n": self.n_vertices,
            "edges": [list(e) for e in self.sorted_edges()],
            "labels": list(self.vertex_labels),
            "provenance": self.provenance,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))

    def to_dot(self, name: str = "G") -> str:
        lines = [f'graph "{name}" {{']
        for v, lab in enumerate(self.vertex_labels):
            lines.append(f'  {v} [label="{lab}"];')
        for u, v in self.sorted_edges():
            lines.append(f"  {u} -- {v};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def _labels(lat: SubgroupLattice) -> tuple:
    g = lat.group
    return tuple(f"{lat.subgroups[i].label(g)}|{lat.subgroups[i].order}" for i in lat.proper_nontrivial())


def inclusion_graph(lat: SubgroupLattice) -> SimpleGraph:
    """Edge {H, K} iff one strictly contains the other."""
    verts = lat.proper_nontrivial()
    c = lat.containment
    edges = set()
    for a, i in enumerate(verts):
        for b in range(a + 1, len(verts)):
            j = verts[b]
            if c[i, j] or c[j, i]:
                edges.add((a, b))
    return SimpleGraph(len(verts), frozenset(edges), _labels(lat), "Inclusion")


def intersection_graph(lat: SubgroupLattice) -> SimpleGraph:
    """Edge {H, K} iff |H n K| > 1."""
    verts = lat.proper_nontrivial()
    masks = [lat.subgroups[i].members for i in verts]
    ident = 1 << lat.group.identity
    edges = set()
    for a in range(len(verts)):
        for b in range(a + 1, len(verts)):
            if masks[a] & masks[b] & ~ident:
                edges.add((a, b))
    return SimpleGraph(len(verts), frozenset(edges), _labels(lat), "Intersection")


def complete_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, frozenset((i, j) for i in range(n) for j in range(i + 1, n)))


def empty_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n)


def path_graph(length: int) -> SimpleGraph:
    """P_length: ``length`` edges on length + 1 vertices."""
    return SimpleGraph(length + 1, frozenset((i, i + 1) for i in range(length)))


def cycle_graph(length: int) -> SimpleGraph:
    return SimpleGraph(length, frozenset((i, (i + 1) % length) for i in range(length)))


def star_graph(leaves: int) -> SimpleGraph:
    return SimpleGraph(leaves + 1, frozenset((0, i) for i in range(1, leaves + 1)))


def complete_bipartite(a: int, b: int) -> SimpleGraph:
    return SimpleGraph(a + b, frozenset((i, a + j) for i in range(a) for j in range(b)))


def disjoint_union(*graphs: SimpleGraph) -> SimpleGraph:
    edges, off = set(), 0
    for g in graphs:
        edges |= {(u + off, v + off) for u, v in g.edges}
        off += g.n_vertices
    return SimpleGraph(off, frozenset(edges))
