"""Closed-form upper bounds on the spanning-forest growth constant of
Delta-regular graphs, and the published per-lattice values they are
compared against.

Four bound families are evaluated for real or integer degree:

  ssg    2^(Delta/2)            (every spanning subgraph bound)
  bcl1   Delta + 1              (vertex-degree product bound, regular case)
  bcl2   closed form in eta(Delta)
  bcl34  tabulated constants for Delta = 4, 5, 6

Formulas evaluate in double precision; relative formula error is far below
the 6-8 digit targets they are compared to.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

BCL34 = {4: 3.994, 5: 5.1965, 6: 6.3367}


def bound_ssg(delta):
    if delta <= 0:
        raise ValueError("degree must be positive")
    return 2.0 ** (delta / 2.0)


def bound_bcl1(delta):
    if delta <= 0:
        raise ValueError("degree must be positive")
    return delta + 1.0


def eta(delta):
    """Auxiliary root used by the bcl2 bound; lies in (0, Delta) for
    Delta >= 2 and tends to 1 as Delta grows."""
    if delta <= 1:
        raise ValueError("eta requires degree > 1")
    return (delta + 1) * (delta + 1 - math.sqrt(delta * delta - 2 * delta + 5)) / (
        2 * (delta - 1)
    )


def bound_bcl2(delta):
    if delta < 2:
        raise ValueError("bcl2 requires degree >= 2")
    h = eta(delta)
    return ((delta + 1) / h) * ((delta - 1) / (delta - h)) ** ((delta - 2) / 2.0)


def bound_bcl34(delta):
    """Tabulated constant for Delta in {4, 5, 6}; None elsewhere."""
    return BCL34.get(delta)


def product_bound(G):
    """Exact integer product of (degree + 1) over all vertices; an upper
    bound on the spanning-forest count."""
    out = 1
    for d in G.degrees():
        out *= d + 1
    return out


def crossover_delta(tol=1e-10):
    """The degree above which Delta + 1 beats 2^(Delta/2): the unique root
    Delta* > 2 of 2^(Delta/2) = Delta + 1, by bisection."""
    lo, hi = 2.5, 8.0

    def f(d):
        return 2.0 ** (d / 2.0) - (d + 1.0)

    assert f(lo) < 0 < f(hi)
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if f(mid) < 0:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


def ratio_r_phi(phi, phi_u):
    if phi_u <= 0:
        raise ValueError("upper bound must be positive")
    return phi / phi_u


@dataclass(frozen=True)
class BoundReport:
    delta: float
    ssg: float
    bcl1: float
    eta: float
    bcl2: float
    bcl34: float | None
    best: float


def bound_report(delta):
    ssg = bound_ssg(delta)
    bcl1 = bound_bcl1(delta)
    b2 = bound_bcl2(delta)
    b34 = bound_bcl34(delta)
    candidates = [ssg, bcl1, b2] + ([b34] if b34 is not None else [])
    return BoundReport(
        delta=delta, ssg=ssg, bcl1=bcl1, eta=eta(delta), bcl2=b2, bcl34=b34,
        best=min(candidates),
    )
