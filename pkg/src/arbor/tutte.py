"""Exact Tutte polynomial by deletion-contraction, plus brute-force oracles.

T(G, 2, 1) counts spanning forests, T(G, 1, 2) counts connected spanning
subgraphs.  The recursion strips loops (factor y each) and bridges (factor
x each), factors over connected components, and memoizes on a canonical
key.  All coefficients are exact Python ints.
"""

from __future__ import annotations

import os
import warnings
from dataclasses import dataclass

from .canon import canonical_key
from .multigraph import (
    DSU,
    GraphError,
    Multigraph,
    components,
    contract_edge,
    delete_edge,
)

DEFAULT_NODE_BUDGET = 2_000_000
DEFAULT_BRUTE_CAP = 30


class ResourceLimitError(RuntimeError):
    """Deletion-contraction frontier exceeded the configured node budget."""


def node_budget():
    env = os.environ.get("ARBOR_NODE_BUDGET")
    return int(env) if env else DEFAULT_NODE_BUDGET


# -- polynomial helpers: dict {(i, j): coeff} ---------------------------------

def _padd(a, b):
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, 0) + v
    return out


def _pshift(p, dx, dy):
    if dx == 0 and dy == 0:
        return p
    return {(i + dx, j + dy): c for (i, j), c in p.items()}


def _pmul(a, b):
    out = {}
    for (i1, j1), c1 in a.items():
        for (i2, j2), c2 in b.items():
            k = (i1 + i2, j1 + j2)
            out[k] = out.get(k, 0) + c1 * c2
    return out


@dataclass
class TutteCoeffs:
    """Coefficients of T(G, x, y): coeffs[(i, j)] is the coefficient of
    x^i y^j.  Zero entries are never stored."""

    coeffs: dict

    @property
    def max_x(self):
        return max((i for i, _ in self.coeffs), default=0)

    @property
    def max_y(self):
        return max((j for _, j in self.coeffs), default=0)

    def evaluate(self, x, y):
        """Exact evaluation; int or Fraction arguments stay exact."""
        total = 0
        for (i, j), c in self.coeffs.items():
            total += c * x**i * y**j
        return total

    def to_json_dict(self):
        return {
            "max_x": self.max_x,
            "max_y": self.max_y,
            "coeffs": [[i, j, str(c)] for (i, j), c in sorted(self.coeffs.items())],
        }


def _bridges(g):
    """Edge ids of bridges (iterative Tarjan; parallel edges never qualify)."""
    adj = [[] for _ in range(g.n)]
    for eid, (u, v) in enumerate(g.edges):
        adj[u].append((v, eid))
        adj[v].append((u, eid))
    disc = [-1] * g.n
    low = [0] * g.n
    bridges = []
    timer = 0
    for root in range(g.n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        stack = [(root, -1, iter(adj[root]))]
        while stack:
            u, peid, it = stack[-1]
            advanced = False
            for w, eid in it:
                if eid == peid:
                    continue
                if disc[w] == -1:
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, eid, iter(adj[w])))
                    advanced = True
                    break
                if disc[w] < low[u]:
                    low[u] = disc[w]
            if not advanced:
                stack.pop()
                if stack:
                    pu = stack[-1][0]
                    if low[u] < low[pu]:
                        low[pu] = low[u]
                    if low[u] > disc[pu]:
                        bridges.append(peid)
    return bridges


def _contract_all(g, bridge_ids):
    uf = DSU(g.n)
    bset = set(bridge_ids)
    for eid in bridge_ids:
        u, v = g.edges[eid]
        uf.union(u, v)
    roots = sorted({uf.find(v) for v in range(g.n)})
    rid = {r: i for i, r in enumerate(roots)}
    new_edges = []
    for eid, (u, v) in enumerate(g.edges):
        if eid in bset:
            continue
        x, y = rid[uf.find(u)], rid[uf.find(v)]
        new_edges.append((x, y) if x <= y else (y, x))
    return Multigraph(len(roots), tuple(sorted(new_edges)))


def _subgraph(g, verts):
    idx = {v: i for i, v in enumerate(verts)}
    vset = set(verts)
    edges = [(idx[u], idx[v]) for u, v in g.edges if u in vset]
    return Multigraph(len(verts), tuple(sorted(edges)))


def _pick_edge(g):
    """Ordinary edge incident to a highest-degree vertex."""
    deg = g.degrees()
    best_eid, best_key = 0, -1
    for eid, (u, v) in enumerate(g.edges):
        key = max(deg[u], deg[v])
        if key > best_key:
            best_eid, best_key = eid, key
    return best_eid


def tutte(G, budget=None):
    """Exact Tutte polynomial of a multigraph (loops allowed)."""
    remaining = [budget if budget is not None else node_budget()]
    memo = {}

    def rec(g):
        remaining[0] -= 1
        if remaining[0] < 0:
            raise ResourceLimitError(
                "deletion-contraction node budget exhausted "
                "(set ARBOR_NODE_BUDGET to raise it)"
            )
        key = canonical_key(g)
        hit = memo.get(key)
        if hit is not None:
            return hit

        nloops = g.loop_count()
        if nloops:
            core = Multigraph(g.n, tuple(p for p in g.edges if p[0] != p[1]))
            res = _pshift(rec(core), 0, nloops)
        elif g.e == 0:
            res = {(0, 0): 1}
        else:
            comps = components(g)
            comps = [c for c in comps if len(c) > 1 or _has_edge(g, c)]
            if len(comps) > 1:
                res = {(0, 0): 1}
                for verts in comps:
                    res = _pmul(res, rec(_subgraph(g, verts)))
            elif comps and len(comps[0]) < g.n:
                res = rec(_subgraph(g, comps[0]))
            else:
                bridges = _bridges(g)
                if bridges:
                    res = _pshift(rec(_contract_all(g, bridges)), len(bridges), 0)
                else:
                    eid = _pick_edge(g)
                    res = _padd(rec(delete_edge(g, eid)), rec(contract_edge(g, eid)))
        memo[key] = res
        return res

    return TutteCoeffs({k: v for k, v in rec(G).items() if v})


def _has_edge(g, verts):
    vset = set(verts)
    return any(u in vset for u, _ in g.edges)


def count_spanning_forests(G, budget=None):
    return int(tutte(G, budget=budget).evaluate(2, 1))


def count_connected_spanning_subgraphs(G, budget=None):
    from .multigraph import stats

    if stats(G).k > 1:
        warnings.warn("disconnected graph has no connected spanning subgraph")
        return 0
    return int(tutte(G, budget=budget).evaluate(1, 2))


def brute_count_forests(G, cap=DEFAULT_BRUTE_CAP):
    """Direct enumeration oracle: backtracks over edge subsets, pruning as
    soon as an included edge closes a cycle.  Loops can never be included."""
    if G.e > cap:
        raise GraphError(f"brute-force cap exceeded: e={G.e} > {cap}")
    edges = [p for p in G.edges if p[0] != p[1]]
    parent = list(range(G.n))
    size = [1] * G.n

    def find(a):
        while parent[a] != a:
            a = parent[a]
        return a

    def rec(i):
        if i == len(edges):
            return 1
        total = rec(i + 1)  # edge absent
        u, v = edges[i]
        ru, rv = find(u), find(v)
        if ru != rv:
            if size[ru] < size[rv]:
                ru, rv = rv, ru
            parent[rv] = ru
            size[ru] += size[rv]
            total += rec(i + 1)  # edge present
            size[ru] -= size[rv]
            parent[rv] = rv
        return total

    return rec(0)


def brute_count_cssg(G, cap=DEFAULT_BRUTE_CAP):
    """Direct enumeration oracle for connected spanning subgraphs.  Each loop
    doubles the count without affecting connectivity."""
    if G.e > cap:
        raise GraphError(f"brute-force cap exceeded: e={G.e} > {cap}")
    edges = [p for p in G.edges if p[0] != p[1]]
    nloops = G.e - len(edges)
    m = len(edges)
    total = 0
    for mask in range(1 << m):
        uf = DSU(G.n)
        comps = G.n
        for i in range(m):
            if mask >> i & 1 and uf.union(*edges[i]):
                comps -= 1
        if comps == 1:
            total += 1
    return total << nloops
