"""Undirected multigraph with parallel edges and self-loops."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass


class GraphError(ValueError):
    """Invalid graph construction or edge operation."""


class DSU:
    """Union-find with path halving; used by several counting routines."""

    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, a):
        p = self.parent
        while p[a] != a:
            p[a] = p[p[a]]
            a = p[a]
        return a

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if ra > rb:
            ra, rb = rb, ra
        self.parent[rb] = ra
        return True


@dataclass(frozen=True)
class Multigraph:
    """Vertices are 0..n-1.  `edges` is a sorted tuple of (u, v) pairs with
    u <= v, one entry per edge occurrence; (v, v) is a self-loop.  The index
    of a pair in `edges` is its edge id.  Ids are stable within one graph
    value but not across delete/contract.  Instances are immutable and safe
    to share.
    """

    n: int
    edges: tuple

    @property
    def e(self):
        return len(self.edges)

    def degrees(self):
        """Degree per vertex; a loop contributes 2 to its vertex."""
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def loop_count(self):
        return sum(1 for u, v in self.edges if u == v)


@dataclass(frozen=True)
class GraphStats:
    n: int
    e: int
    k: int          # connected components
    c: int          # cycle rank, c = e - n + k
    delta_min: int
    delta_max: int
    girth: float    # math.inf when acyclic; 1 for a loop, 2 for a parallel pair


def build_graph(n, edge_list):
    if n < 0:
        raise GraphError("vertex count must be nonnegative")
    pairs = []
    for u, v in edge_list:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        pairs.append((u, v) if u <= v else (v, u))
    return Multigraph(n, tuple(sorted(pairs)))


def components(G):
    """List of vertex lists, one per connected component, each sorted."""
    uf = DSU(G.n)
    for u, v in G.edges:
        if u != v:
            uf.union(u, v)
    groups = {}
    for v in range(G.n):
        groups.setdefault(uf.find(v), []).append(v)
    return [groups[r] for r in sorted(groups)]


def _girth(G):
    for u, v in G.edges:
        if u == v:
            return 1
    seen = set()
    for pair in G.edges:
        if pair in seen:
            return 2
        seen.add(pair)
    # simple graph from here: BFS from every vertex, shortest cycle through
    # the root is found when a non-tree edge closes two BFS branches
    adj = [[] for _ in range(G.n)]
    for u, v in G.edges:
        adj[u].append(v)
        adj[v].append(u)
    best = math.inf
    for s in range(G.n):
        dist = {s: 0}
        parent = {s: -1}
        q = deque([s])
        while q:
            u = q.popleft()
            if 2 * dist[u] >= best:
                continue
            for w in adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    q.append(w)
                elif parent[u] != w:
                    cyc = dist[u] + dist[w] + 1
                    if cyc < best:
                        best = cyc
    return best


def stats(G):
    k = len(components(G))
    deg = G.degrees()
    return GraphStats(
        n=G.n,
        e=G.e,
        k=k,
        c=G.e - G.n + k,
        delta_min=min(deg) if deg else 0,
        delta_max=max(deg) if deg else 0,
        girth=_girth(G),
    )


def delete_edge(G, edge_id):
    if not 0 <= edge_id < G.e:
        raise GraphError(f"edge id {edge_id} out of range")
    return Multigraph(G.n, G.edges[:edge_id] + G.edges[edge_id + 1:])


def contract_edge(G, edge_id):
    """Merge the endpoints of a non-loop edge.  Other parallel copies of the
    same pair become loops.  Vertices are re-densified with the smaller
    endpoint keeping its label.
    """
    if not 0 <= edge_id < G.e:
        raise GraphError(f"edge id {edge_id} out of range")
    a, b = G.edges[edge_id]
    if a == b:
        raise GraphError("cannot contract a loop")

    def remap(v):
        if v == b:
            return a
        return v - 1 if v > b else v

    new_edges = []
    for eid, (u, v) in enumerate(G.edges):
        if eid == edge_id:
            continue
        x, y = remap(u), remap(v)
        new_edges.append((x, y) if x <= y else (y, x))
    return Multigraph(G.n - 1, tuple(sorted(new_edges)))


def to_edge_text(G):
    """Edge-list text format: first line "n e", then one "u v" line per
    edge occurrence; loops as "v v".  Round-trips exactly."""
    lines = [f"{G.n} {G.e}"]
    lines.extend(f"{u} {v}" for u, v in G.edges)
    return "\n".join(lines) + "\n"


def from_edge_text(text):
    rows = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not rows or len(rows[0]) != 2:
        raise GraphError("header line must be 'n e'")
    n, e = int(rows[0][0]), int(rows[0][1])
    if len(rows) - 1 != e:
        raise GraphError(f"expected {e} edge lines, found {len(rows) - 1}")
    return build_graph(n, [(int(r[0]), int(r[1])) for r in rows[1:]])


def cycle_graph(n):
    if n < 2:
        raise GraphError("cycle needs at least 2 vertices")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def cycle_with_loops(n, m):
    """Circuit graph with m loops attached to every vertex; 2(1+m)-regular."""
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges.extend((v, v) for v in range(n) for _ in range(m))
    return build_graph(n, edges)
