"""Exact planarity with checkable certificates.

Planar graphs get a rotation system (cyclic neighbour order per vertex)
that passes Euler's formula component by component.  Non-planar graphs get
a K5 or K3,3 subdivision: branch vertices plus internally disjoint paths.

The test itself is the path-addition algorithm of Demoucron, Malgrange and
Pertuiset, run on each biconnected block.  Kuratowski subgraphs are found
by deleting edges while the remainder stays non-planar; an edge-minimal
non-planar graph is always a subdivision of K5 or K3,3.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional


@dataclass(frozen=True)
class PlanarEmbedding:
    rotation: tuple  # rotation[v] = neighbours of v in clockwise order

    def to_json(self):
        return {"rotation": [list(r) for r in self.rotation]}


@dataclass(frozen=True)
class KuratowskiWitness:
    kind: str  # "K5" or "K3,3"
    branch: tuple  # branch vertices; for K3,3 the first three form one side
    paths: tuple  # vertex sequences joining branch pairs

    def to_json(self):
        return {"kind": self.kind, "branch": list(self.branch), "paths": [list(p) for p in self.paths]}


# ---------------------------------------------------------------------------
# blocks


def _adjacency(n: int, edges) -> list[list[int]]:
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    for a in adj:
        a.sort()
    return adj


def biconnected_blocks(n: int, edges) -> list[list[tuple[int, int]]]:
    """Edge sets of the biconnected components (bridges are one-edge blocks)."""
    adj = _adjacency(n, edges)
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    blocks: list[list[tuple[int, int]]] = []
    estack: list[tuple[int, int]] = []
    clock = 0
    for root in range(n):
        if root in disc or not adj[root]:
            continue
        disc[root] = low[root] = clock
        clock += 1
        stack = [(root, -1, iter(adj[root]))]
        while stack:
            v, parent, it = stack[-1]
            descended = False
            for w in it:
                if w == parent:
                    continue
                if w not in disc:
                    estack.append((v, w))
                    disc[w] = low[w] = clock
                    clock += 1
                    stack.append((w, v, iter(adj[w])))
                    descended = True
                    break
                if disc[w] < disc[v]:
                    estack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if descended:
                continue
            stack.pop()
            if stack:
                u = stack[-1][0]
                low[u] = min(low[u], low[v])
                if low[v] >= disc[u]:
                    block = []
                    while True:
                        e = estack.pop()
                        block.append(e)
                        if e == (u, v):
                            break
                    blocks.append(block)
    return blocks


# ---------------------------------------------------------------------------
# path addition on one block


def _shortest_path(adj, start, goal_test, allowed) -> Optional[list[int]]:
    prev = {start: None}
    dq = deque([start])
    while dq:
        v = dq.popleft()
        for w in adj[v]:
            if w in prev or not allowed(w):
                continue
            prev[w] = v
            if goal_test(w):
                path = [w]
                while prev[path[-1]] is not None:
                    path.append(prev[path[-1]])
                return path[::-1]
            dq.append(w)
    return None


def _embed_block(block: list[tuple[int, int]]) -> Optional[list[list[int]]]:
    """Oriented faces of a planar embedding of a biconnected block, or None."""
    vertices = sorted({x for e in block for x in e})
    adj: dict[int, list[int]] = {v: [] for v in vertices}
    for u, v in block:
        adj[u].append(v)
        adj[v].append(u)
    for a in adj.values():
        a.sort()

    # initial cycle through the smallest edge
    u, v = min((min(e), max(e)) for e in block)
    adj_wo = {x: [y for y in ys if {x, y} != {u, v}] for x, ys in adj.items()}
    path = _shortest_path(adj_wo, v, lambda w: w == u, lambda w: True)
    cycle = path  # v ... u, closed by the edge u-v
    faces = [list(cycle), list(reversed(cycle))]
    in_h = set(cycle)
    h_edges = {frozenset((cycle[i], cycle[(i + 1) % len(cycle)])) for i in range(len(cycle))}
    n_edges = len(block)

    while len(h_edges) < n_edges:
        fragments = []  # (attachments, vertices-or-None, chord)
        for a, b in sorted((min(e), max(e)) for e in block):
            if a in in_h and b in in_h and frozenset((a, b)) not in h_edges:
                fragments.append(({a, b}, None, (a, b)))
        seen: set[int] = set()
        for s in vertices:
            if s in in_h or s in seen:
                continue
            comp, att = {s}, set()
            dq = deque([s])
            while dq:
                x = dq.popleft()
                for y in adj[x]:
                    if y in in_h:
                        att.add(y)
                    elif y not in comp:
                        comp.add(y)
                        dq.append(y)
            seen |= comp
            fragments.append((att, comp, None))

        face_sets = [set(f) for f in faces]
        choice = None
        for att, comp, chord in fragments:
            ok = [i for i, fs in enumerate(face_sets) if att <= fs]
            if not ok:
                return None
            if choice is None or (len(ok) == 1 and len(choice[0]) > 1):
                choice = (ok, att, comp, chord)
        ok, att, comp, chord = choice
        fi = ok[0]

        if chord is not None:
            a, b = chord
            interior: list[int] = []
        else:
            a, b = sorted(att)[:2]
            b_nbrs = set(adj[b])
            start_nodes = [x for x in adj[a] if x in comp]
            # BFS from a through the fragment to a fragment vertex next to b
            prev = {x: None for x in start_nodes}
            dq = deque(start_nodes)
            end = next((x for x in start_nodes if x in b_nbrs), None)
            while end is None and dq:
                x = dq.popleft()
                for y in adj[x]:
                    if y in comp and y not in prev:
                        prev[y] = x
                        if y in b_nbrs:
                            end = y
                            break
                        dq.append(y)
            interior = [end]
            while prev[interior[-1]] is not None:
                interior.append(prev[interior[-1]])
            interior.reverse()

        f = faces[fi]
        i, j = f.index(a), f.index(b)
        k = len(f)
        a_to_b = [f[(i + t) % k] for t in range((j - i) % k + 1)]
        b_to_a = [f[(j + t) % k] for t in range((i - j) % k + 1)]
        faces[fi] = a_to_b + interior[::-1]
        faces.append(b_to_a + interior)
        chain = [a] + interior + [b]
        for x, y in zip(chain, chain[1:]):
            h_edges.add(frozenset((x, y)))
        in_h.update(interior)
    return faces


def planar_embedding(n: int, edges) -> Optional[PlanarEmbedding]:
    """A rotation system for a planar graph, or None if the graph is not planar."""
    edges = [(min(e), max(e)) for e in edges]
    rot: list[list[int]] = [[] for _ in range(n)]
    for block in biconnected_blocks(n, edges):
        if len(block) == 1:
            (u, v), = block
            local = {u: [v], v: [u]}
        else:
            faces = _embed_block(block)
            if faces is None:
                return None
            succ: dict[int, dict[int, int]] = {}
            for f in faces:
                k = len(f)
                for t in range(k):
                    x, y, z = f[t - 1], f[t], f[(t + 1) % k]
                    succ.setdefault(y, {})[x] = z
            local = {}
            for y, nxt in succ.items():
                start = min(nxt)
                order = [start]
                while nxt[order[-1]] != start:
                    order.append(nxt[order[-1]])
                local[y] = order
        for y, order in local.items():
            if not rot[y]:
                rot[y] = order
            else:  # glue this block into the angle after rot[y][0]
                rot[y] = rot[y][:1] + order + rot[y][1:]
    return PlanarEmbedding(tuple(tuple(r) for r in rot))


def is_planar_edges(n: int, edges) -> bool:
    return planar_embedding(n, edges) is not None


# ---------------------------------------------------------------------------
# Kuratowski subgraphs


def minimal_nonplanar_edges(n: int, edges) -> list[tuple[int, int]]:
    """Edge-minimal non-planar subgraph of a non-planar graph."""
    keep = sorted((min(e), max(e)) for e in edges)
    i, step = 0, max(1, len(keep) // 8)
    while i < len(keep):
        trial = keep[:i] + keep[i + step :]
        if not is_planar_edges(n, trial):
            keep = trial
            step *= 2
        elif step > 1:
            step //= 2
        else:
            i += 1
        step = max(1, min(step, len(keep) - i))
    return keep


def kuratowski_witness(n: int, edges) -> KuratowskiWitness:
    sub = minimal_nonplanar_edges(n, edges)
    adj = _adjacency(n, sub)
    branch = [v for v in range(n) if len(adj[v]) >= 3]
    is_branch = set(branch)
    paths = {}
    for b in branch:
        for w in adj[b]:
            path, prev = [b, w], b
            while path[-1] not in is_branch:
                x = path[-1]
                nxt = adj[x][0] if adj[x][0] != prev else adj[x][1]
                prev = x
                path.append(nxt)
            key = (min(path[0], path[-1]), max(path[0], path[-1]))
            if key not in paths:
                paths[key] = path if path[0] < path[-1] else path[::-1]
    if len(branch) == 5:
        return KuratowskiWitness("K5", tuple(branch), tuple(paths[k] for k in sorted(paths)))
    # K3,3: two-colour the branch graph
    side = {branch[0]: 0}
    dq = deque([branch[0]])
    bnbrs: dict[int, list[int]] = {b: [] for b in branch}
    for x, y in paths:
        bnbrs[x].append(y)
        bnbrs[y].append(x)
    while dq:
        x = dq.popleft()
        for y in bnbrs[x]:
            if y not in side:
                side[y] = 1 - side[x]
                dq.append(y)
    left = sorted(b for b in branch if side[b] == 0)
    right = sorted(b for b in branch if side[b] == 1)
    return KuratowskiWitness("K3,3", tuple(left + right), tuple(paths[k] for k in sorted(paths)))


# ---------------------------------------------------------------------------
# certificate checks (independent of how the certificate was produced)


def count_faces(rotation) -> int:
    pos = [{w: i for i, w in enumerate(r)} for r in rotation]
    seen = set()
    faces = 0
    for u, r in enumerate(rotation):
        for v in r:
            if (u, v) in seen:
                continue
            faces += 1
            dart = (u, v)
            while dart not in seen:
                seen.add(dart)
                a, b = dart
                rb = rotation[b]
                dart = (b, rb[(pos[b][a] + 1) % len(rb)])
    return faces


def check_embedding(n: int, edges, emb: PlanarEmbedding) -> list[str]:
    """Problems with a claimed planar embedding (empty list = valid)."""
    problems = []
    adj = _adjacency(n, edges)
    if len(emb.rotation) != n:
        return ["rotation has wrong length"]
    for v in range(n):
        if sorted(emb.rotation[v]) != adj[v]:
            problems.append(f"rotation at {v} is not a permutation of its neighbours")
    if problems:
        return problems
    # Euler per component: V - E + F = 2
    comp = [-1] * n
    ncomp = 0
    for s in range(n):
        if comp[s] >= 0:
            continue
        comp[s] = ncomp
        dq = deque([s])
        while dq:
            x = dq.popleft()
            for y in adj[x]:
                if comp[y] < 0:
                    comp[y] = ncomp
                    dq.append(y)
        ncomp += 1
    for c in range(ncomp):
        vs = [v for v in range(n) if comp[v] == c]
        if len(vs) == 1 and not adj[vs[0]]:
            continue
        sub_rot = {v: emb.rotation[v] for v in vs}
        idx = {v: i for i, v in enumerate(vs)}
        local = [tuple(idx[w] for w in sub_rot[v]) for v in vs]
        e = sum(len(r) for r in local) // 2
        f = count_faces(local)
        if len(vs) - e + f != 2:
            problems.append(f"component {c}: V - E + F = {len(vs) - e + f}, not 2")
    return problems


def check_witness(n: int, edges, w: KuratowskiWitness) -> list[str]:
    """Problems with a claimed Kuratowski subdivision (empty list = valid)."""
    es = {(min(e), max(e)) for e in edges}
    b = list(w.branch)
    if w.kind == "K5":
        if len(set(b)) != 5:
            return ["K5 witness needs 5 distinct branch vertices"]
        need = {(min(x, y), max(x, y)) for i, x in enumerate(b) for y in b[i + 1 :]}
    elif w.kind == "K3,3":
        if len(set(b)) != 6:
            return ["K3,3 witness needs 6 distinct branch vertices"]
        need = {(min(x, y), max(x, y)) for x in b[:3] for y in b[3:]}
    else:
        return [f"unknown witness kind {w.kind}"]
    problems = []
    got = set()
    used_interior: set[int] = set()
    bset = set(b)
    for p in w.paths:
        if len(p) < 2 or len(set(p)) != len(p):
            problems.append(f"path {p} is degenerate or repeats a vertex")
            continue
        key = (min(p[0], p[-1]), max(p[0], p[-1]))
        got.add(key)
        for x, y in zip(p, p[1:]):
            if (min(x, y), max(x, y)) not in es:
                problems.append(f"path {p} uses non-edge {x}-{y}")
        inner = set(p[1:-1])
        if inner & bset:
            problems.append(f"path {p} passes through a branch vertex")
        if inner & used_interior:
            problems.append(f"path {p} shares interior vertices with another path")
        used_interior |= inner
    if got != need or len(w.paths) != len(need):
        problems.append("paths do not join exactly the required branch pairs")
    return problems
