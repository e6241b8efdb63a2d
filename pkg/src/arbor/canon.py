"""Canonical keys for small multigraphs, used to memoize recursions.

Graphs up to VERTEX_CAP vertices get a key invariant under isomorphism:
iterative color refinement on (degree, loop count, neighbor multiset),
followed by an exhaustive search over labelings within refinement cells.
Larger graphs, or graphs whose cells would need too many permutations,
fall back to a label-sensitive key (still sound, just less sharing).
"""

from __future__ import annotations

import itertools
from math import factorial

VERTEX_CAP = 12
PERM_CAP = 40320


def canonical_key(G):
    if G.n <= VERTEX_CAP:
        form = _canonical_form(G)
        if form is not None:
            return ("c", G.n, form)
    return ("x", G.n, G.edges)


def _color_ids(values):
    order = {v: i for i, v in enumerate(sorted(set(values)))}
    return [order[v] for v in values]


def _canonical_form(G):
    n = G.n
    loops = [0] * n
    mult = {}
    for u, v in G.edges:
        if u == v:
            loops[u] += 1
        else:
            mult[(u, v)] = mult.get((u, v), 0) + 1
    nbrs = [[] for _ in range(n)]
    for (u, v), m in mult.items():
        nbrs[u].append((v, m))
        nbrs[v].append((u, m))

    colors = _color_ids(
        [(sum(m for _, m in nbrs[v]) + 2 * loops[v], loops[v]) for v in range(n)]
    )
    while True:
        sigs = [
            (colors[v], tuple(sorted((colors[w], m) for w, m in nbrs[v])))
            for v in range(n)
        ]
        new = _color_ids(sigs)
        if len(set(new)) == len(set(colors)):
            break
        colors = new

    cells = {}
    for v in range(n):
        cells.setdefault(colors[v], []).append(v)
    ordered_cells = [cells[c] for c in sorted(cells)]
    total = 1
    for cell in ordered_cells:
        total *= factorial(len(cell))
        if total > PERM_CAP:
            return None

    best = None
    for perms in itertools.product(*(itertools.permutations(c) for c in ordered_cells)):
        label = {}
        i = 0
        for perm in perms:
            for v in perm:
                label[v] = i
                i += 1
        lp = [0] * n
        for v in range(n):
            lp[label[v]] = loops[v]
        enc = (
            tuple(lp),
            tuple(
                sorted(
                    (label[u], label[v]) if label[u] <= label[v] else (label[v], label[u])
                    for u, v in G.edges
                    if u != v
                )
            ),
        )
        if best is None or enc < best:
            best = enc
    return best
