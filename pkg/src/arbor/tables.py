"""Published per-lattice growth-constant data and table reproduction.

The per-lattice values phi and phi_u are an embedded dataset: their
derivation is a separate strip-by-strip computation and is not redone
here.  Everything else in the emitted tables (the ratio column and all
degree-only bounds) is recomputed, and every cell is tagged with its
provenance ("paper" for stored values, "computed" otherwise).
"""

from __future__ import annotations

from dataclasses import dataclass

from .bounds import bound_bcl1, bound_bcl2, bound_bcl34, bound_ssg, ratio_r_phi
from .lattice import LATTICES


class DatasetError(RuntimeError):
    """Embedded dataset failed its consistency checks."""


@dataclass(frozen=True)
class LatticeRecord:
    key: str
    phi: str        # central value, printed digits
    phi_err: str    # quoted uncertainty
    phi_u: str      # upper bound, printed digits

    @property
    def lattice(self):
        return LATTICES[self.key]


# Rows in order of increasing degree, heteropolygonal first within a degree.
LATTICE_DATA = (
    LatticeRecord("t488", "2.77931", "0.00018", "2.779486"),
    LatticeRecord("hc", "2.80428", "0.00050", "2.804781"),
    LatticeRecord("kag", "3.602", "0.012", "3.614045"),
    LatticeRecord("sq", "3.687", "0.012", "3.699659"),
    LatticeRecord("t33344", "4.530", "0.024", "4.553665"),
    LatticeRecord("t32434", "4.503", "0.065", "4.568231"),
    LatticeRecord("tri", "5.444", "0.051", "5.494840"),
)


def verify_dataset():
    """Arithmetic sanity of the embedded values; raises DatasetError."""
    prev_delta = 0
    for rec in LATTICE_DATA:
        lat = rec.lattice
        phi, err, phi_u = float(rec.phi), float(rec.phi_err), float(rec.phi_u)
        if lat.delta < prev_delta:
            raise DatasetError("rows out of degree order")
        prev_delta = lat.delta
        if not phi <= phi_u + err:
            raise DatasetError(f"{rec.key}: phi exceeds its upper bound")
        if not 0.9 < phi / phi_u <= 1.0:
            raise DatasetError(f"{rec.key}: implausible ratio")


def fmt_sig(x, sig=6):
    """Paper-style cell: integers print bare, otherwise `sig` significant
    digits."""
    if abs(x - round(x)) < 1e-12:
        return str(int(round(x)))
    return f"{x:.{sig}g}"


def emit_table1():
    """Per-lattice phi, upper bound, and the recomputed ratio."""
    verify_dataset()
    rows = []
    for rec in LATTICE_DATA:
        lat = rec.lattice
        r = ratio_r_phi(float(rec.phi), float(rec.phi_u))
        rows.append({
            "lattice": lat.display,
            "key": rec.key,
            "delta": lat.delta,
            "girth": lat.girth,
            "phi": rec.phi,
            "phi_err": rec.phi_err,
            "phi_u": rec.phi_u,
            "r_phi": f"{r:.5f}",
            "source": {
                "phi": "paper", "phi_err": "paper", "phi_u": "paper",
                "delta": "paper", "girth": "paper", "r_phi": "computed",
            },
        })
    return rows


def emit_table2():
    """Per-lattice comparison of the stored upper bound with the
    degree-only bound families."""
    verify_dataset()
    rows = []
    for rec in LATTICE_DATA:
        lat = rec.lattice
        b34 = bound_bcl34(lat.delta)
        rows.append({
            "lattice": lat.display,
            "key": rec.key,
            "delta": lat.delta,
            "girth": lat.girth,
            "phi_u": rec.phi_u,
            "ssg": fmt_sig(bound_ssg(lat.delta)),
            "bcl1": fmt_sig(bound_bcl1(lat.delta)),
            "bcl2": fmt_sig(bound_bcl2(lat.delta)),
            "bcl34": f"{b34:g}" if b34 is not None else "-",
            "source": {
                "phi_u": "paper", "delta": "paper", "girth": "paper",
                "ssg": "computed", "bcl1": "computed", "bcl2": "computed",
                "bcl34": "paper",
            },
        })
    return rows


TABLE1_COLUMNS = ("lattice", "delta", "girth", "phi", "phi_err", "phi_u", "r_phi")
TABLE2_COLUMNS = ("lattice", "delta", "girth", "phi_u", "ssg", "bcl1", "bcl2", "bcl34")
