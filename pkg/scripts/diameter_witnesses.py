#!/usr/bin/env python3
"""Spell out why diam I(Z36) and diam I(Z6xZ6) are both 3.

For each graph this prints a pair of subgroups at maximum distance and a
shortest path between them, then double-checks the diameter with networkx
when it is installed.
"""

from collections import deque

from incgraph.catalog import analyse
from incgraph.cli import parse_spec
from incgraph.invariants import diameter


def shortest_path(g, s, t):
    prev = {s: None}
    dq = deque([s])
    while dq:
        x = dq.popleft()
        for y in g.adj[x]:
            if y not in prev:
                prev[y] = x
                dq.append(y)
    path = [t]
    while prev[path[-1]] is not None:
        path.append(prev[path[-1]])
    return path[::-1]


def show(text):
    g = analyse(parse_spec(text)).graph
    best = max(
        ((u, v, len(shortest_path(g, u, v)) - 1) for u in range(g.n_vertices) for v in range(u + 1, g.n_vertices)),
        key=lambda t: t[2],
    )
    u, v, d = best
    print(f"I({text}): {g.n_vertices} vertices, diameter {diameter(g)}")
    print("  farthest pair: " + " - ".join(g.vertex_labels[x] for x in shortest_path(g, u, v)))
    try:
        import networkx as nx
    except ImportError:
        return
    h = nx.Graph(list(g.edges))
    h.add_nodes_from(range(g.n_vertices))
    print(f"  networkx diameter: {nx.diameter(h)}")


if __name__ == "__main__":
    for t in ("Z36", "Z6xZ6", "Z4xZ2"):
        show(t)
