"""Finite strips of the seven Archimedean lattices with degree 3..6.

Each lattice is described by a translational unit cell: a site count and a
bond table of (site_i, site_j, dx, dy) entries, meaning site_i of cell
(x, y) connects to site_j of cell (x + dx, y + dy).  x runs longitudinally,
y transversely; all bonds are normalized to dx in {0, 1}.  Strips are built
cell by cell, dropping out-of-range bonds for free boundaries and wrapping
them for periodic ones.  Correctness of a cell is enforced by
verify_lattice (interior degree, regularity, edge count, girth), not by any
particular planar embedding.

Unit-cell geometry, for reference:

  sq      1 site; E and N bonds.
  tri     sq plus the NE diagonal.
  hc      2-site brick: intra A-B, B to next column's A, A to B one row up.
  kag     3-site up-triangle; inter-cell bonds close the down-triangles.
  t488    4-site square joined to E/N neighbor squares by single bonds.
  t33344  2-site vertical pair; triangle rows (with diagonals) alternate
          with square rows.
  t32434  4-site tilted square; neighboring squares are joined through the
          surrounding triangles (snub arrangement).
"""

from __future__ import annotations

from dataclasses import dataclass

from .multigraph import build_graph, stats


class LatticeError(ValueError):
    pass


@dataclass(frozen=True)
class Lattice:
    key: str          # short mnemonic
    polygon: str      # vertex configuration, e.g. "3.6.3.6"
    display: str      # table-style name
    delta: int        # vertex degree of the infinite lattice
    girth: int        # shortest cycle of the infinite lattice
    sites: int        # sites per unit cell
    bonds: tuple      # (si, sj, dx, dy), dx in {0, 1}


_LATTICE_DEFS = [
    Lattice("sq", "4.4.4.4", "(4^4) = sq", 4, 4, 1,
            ((0, 0, 1, 0), (0, 0, 0, 1))),
    Lattice("tri", "3.3.3.3.3.3", "(3^6) = tri", 6, 3, 1,
            ((0, 0, 1, 0), (0, 0, 0, 1), (0, 0, 1, 1))),
    Lattice("hc", "6.6.6", "(6^3) = hc", 3, 6, 2,
            ((0, 1, 0, 0), (1, 0, 1, 0), (0, 1, 0, 1))),
    Lattice("kag", "3.6.3.6", "(3.6.3.6) = kag", 4, 3, 3,
            ((0, 1, 0, 0), (0, 2, 0, 0), (1, 2, 0, 0),
             (0, 1, 0, -1), (2, 0, 1, 1), (2, 1, 1, 0))),
    Lattice("t488", "4.8.8", "(4.8^2)", 3, 4, 4,
            ((0, 1, 0, 0), (1, 2, 0, 0), (2, 3, 0, 0), (0, 3, 0, 0),
             (1, 3, 1, 0), (0, 2, 0, 1))),
    Lattice("t33344", "3.3.3.4.4", "(3^3.4^2)", 5, 3, 2,
            ((0, 0, 1, 0), (1, 1, 1, 0), (0, 1, 0, 0),
             (1, 0, 0, 1), (0, 1, 1, 0))),
    Lattice("t32434", "3.3.4.3.4", "(3^2.4.3.4)", 5, 3, 4,
            ((0, 1, 0, 0), (1, 2, 0, 0), (2, 3, 0, 0), (0, 3, 0, 0),
             (0, 1, 1, 0), (1, 2, 0, 1), (3, 2, 1, 0), (3, 0, 0, -1),
             (0, 2, 1, 0), (1, 3, 0, 1))),
]

LATTICES = {lat.key: lat for lat in _LATTICE_DEFS}

_ALIASES = {lat.polygon: lat.key for lat in _LATTICE_DEFS}
_ALIASES.update({
    "488": "t488", "4.8.8": "t488",
    "33344": "t33344", "3.3.3.4.4": "t33344",
    "32434": "t32434", "3.3.4.3.4": "t32434",
    "kagome": "kag", "square": "sq", "triangular": "tri", "honeycomb": "hc",
})


def get_lattice(name):
    key = name.strip().lower().replace("·", ".")
    if key in LATTICES:
        return LATTICES[key]
    if key in _ALIASES:
        return LATTICES[_ALIASES[key]]
    raise LatticeError(f"unknown lattice {name!r}; known: {sorted(LATTICES)}")


@dataclass(frozen=True)
class StripSpec:
    """Strip of `lattice`: `width` transverse cells, `length` longitudinal
    cells, each boundary free or periodic."""

    lattice: Lattice
    width: int
    length: int
    bc_t: str = "free"
    bc_l: str = "free"

    def __post_init__(self):
        for bc in (self.bc_t, self.bc_l):
            if bc not in ("free", "periodic"):
                raise LatticeError(f"boundary condition must be free or periodic, got {bc!r}")
        if self.width < 1 or self.length < 1:
            raise LatticeError("width and length must be >= 1")
        if self.bc_t == "periodic" and self.width < 2:
            raise LatticeError("periodic transverse wrap needs width >= 2")
        if self.bc_l == "periodic" and self.length < 2:
            raise LatticeError("periodic longitudinal wrap needs length >= 2")

    @property
    def nu(self):
        """Vertices per longitudinal period (one column)."""
        return self.lattice.sites * self.width


def _vid(spec, x, y, s):
    return (x * spec.width + y) * spec.lattice.sites + s


def build_strip(spec, length=None):
    """Multigraph of the strip; `length` overrides spec.length.  Vertex
    numbering is column-major: column x occupies a contiguous id block."""
    L = spec.length if length is None else length
    if L < 1 or (spec.bc_l == "periodic" and L < 2):
        raise LatticeError(f"invalid length {L}")
    W = spec.width
    n = spec.lattice.sites * W * L
    edges = []
    for x in range(L):
        for y in range(W):
            for si, sj, dx, dy in spec.lattice.bonds:
                x2, y2 = x + dx, y + dy
                if spec.bc_l == "periodic":
                    x2 %= L
                elif not 0 <= x2 < L:
                    continue
                if spec.bc_t == "periodic":
                    y2 %= W
                elif not 0 <= y2 < W:
                    continue
                u = (x * W + y) * spec.lattice.sites + si
                v = (x2 * W + y2) * spec.lattice.sites + sj
                edges.append((u, v))
    return build_graph(n, edges)


@dataclass(frozen=True)
class ColumnDecomposition:
    """One longitudinal period: `nu` fresh vertices (local ids 0..nu-1,
    local id = y * sites + s), `intra` edges within the column, `inter`
    edges (old_local, new_local) joining the previous column to this one."""

    nu: int
    intra: tuple
    inter: tuple


def column_decomposition(spec):
    W = spec.width
    s = spec.lattice.sites
    intra, inter = [], []
    for y in range(W):
        for si, sj, dx, dy in spec.lattice.bonds:
            y2 = y + dy
            if spec.bc_t == "periodic":
                y2 %= W
            elif not 0 <= y2 < W:
                continue
            a, b = y * s + si, y2 * s + sj
            if dx == 0:
                intra.append((a, b))
            else:
                inter.append((a, b))
    return ColumnDecomposition(nu=s * W, intra=tuple(intra), inter=tuple(inter))


def glue_columns(spec, length=None):
    """Rebuild the strip from its column decomposition; must match
    build_strip edge-for-edge (free or periodic longitudinal boundary)."""
    L = spec.length if length is None else length
    cd = column_decomposition(spec)
    edges = []
    for x in range(L):
        off = x * cd.nu
        edges.extend((off + a, off + b) for a, b in cd.intra)
    last = L - 1 if spec.bc_l == "free" else L
    for x in range(last):
        off, off2 = x * cd.nu, ((x + 1) % L) * cd.nu
        edges.extend((off + a, off2 + b) for a, b in cd.inter)
    return build_graph(cd.nu * L, edges)


@dataclass(frozen=True)
class LatticeCheck:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class LatticeReport:
    spec: StripSpec
    checks: tuple

    @property
    def ok(self):
        return all(c.passed for c in self.checks)


def verify_lattice(spec, G):
    """Structural checks of a built strip against the lattice's reference
    degree and girth.  Failures are reported, not raised."""
    lat = spec.lattice
    st = stats(G)
    deg = G.degrees()
    checks = []

    xs = range(spec.length) if spec.bc_l == "periodic" else range(1, spec.length - 1)
    ys = range(spec.width) if spec.bc_t == "periodic" else range(1, spec.width - 1)
    interior = [
        deg[_vid(spec, x, y, s)] for x in xs for y in ys for s in range(lat.sites)
    ]
    if interior:
        bad = [d for d in interior if d != lat.delta]
        checks.append(LatticeCheck(
            "interior_degree", not bad,
            f"{len(bad)}/{len(interior)} interior vertices off delta={lat.delta}"))
    checks.append(LatticeCheck(
        "max_degree", max(deg) <= lat.delta,
        f"max degree {max(deg)} vs delta {lat.delta}"))

    if spec.bc_t == "periodic" and spec.bc_l == "periodic":
        checks.append(LatticeCheck(
            "regular", st.delta_min == st.delta_max == lat.delta,
            f"degrees in [{st.delta_min}, {st.delta_max}], expected {lat.delta}"))
        checks.append(LatticeCheck(
            "edge_count", 2 * st.e == st.n * lat.delta,
            f"e={st.e}, n*delta/2={st.n * lat.delta // 2}"))
        checks.append(LatticeCheck(
            "girth", st.girth == lat.girth,
            f"girth {st.girth} vs reference {lat.girth}"))
    return LatticeReport(spec, tuple(checks))
