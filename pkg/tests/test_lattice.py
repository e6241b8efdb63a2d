from collections import Counter

import pytest

from arbor import (
    LATTICES,
    StripSpec,
    build_strip,
    column_decomposition,
    get_lattice,
    glue_columns,
    stats,
    verify_lattice,
)
from arbor.lattice import LatticeError

ALL_KEYS = sorted(LATTICES)


def test_lattice_metadata_matches_reference():
    expected = {
        "sq": (4, 4), "tri": (6, 3), "hc": (3, 6), "kag": (4, 3),
        "t488": (3, 4), "t33344": (5, 3), "t32434": (5, 3),
    }
    for key, (delta, girth) in expected.items():
        lat = get_lattice(key)
        assert (lat.delta, lat.girth) == (delta, girth)


def test_lookup_by_polygon_string():
    assert get_lattice("4.8.8") is get_lattice("t488")
    assert get_lattice("3.3.4.3.4") is get_lattice("t32434")
    assert get_lattice("4.4.4.4") is get_lattice("sq")
    assert get_lattice("kagome") is get_lattice("kag")
    with pytest.raises(LatticeError):
        get_lattice("5.5.5")


def test_sq_free_grid():
    G = build_strip(StripSpec(get_lattice("sq"), width=2, length=3))
    assert (G.n, G.e) == (6, 7)
    assert stats(G).girth == 4


def test_sq_periodic_width2_doubles_rung():
    spec = StripSpec(get_lattice("sq"), width=2, length=3, bc_t="periodic")
    G = build_strip(spec)
    doubled = [p for p, c in Counter(G.edges).items() if c == 2]
    # one doubled transverse pair per column
    assert len(doubled) == 3
    assert stats(G).girth == 2


def test_tri_free_ladder_counts():
    tri = get_lattice("tri")
    for m in (2, 3, 5):
        G = build_strip(StripSpec(tri, width=2, length=m))
        assert (G.n, G.e) == (2 * m, 4 * m - 3)


def test_kag_column_has_three_sites():
    cd = column_decomposition(StripSpec(get_lattice("kag"), width=1, length=2))
    assert cd.nu == 3


def test_sq_column_decomposition():
    cd = column_decomposition(StripSpec(get_lattice("sq"), width=2, length=2))
    assert cd.nu == 2
    assert len(cd.intra) == 1 and len(cd.inter) == 2
    cdp = column_decomposition(
        StripSpec(get_lattice("sq"), width=2, length=2, bc_t="periodic"))
    assert len(cdp.intra) == 2 and len(cdp.inter) == 2


@pytest.mark.parametrize("key", ALL_KEYS)
@pytest.mark.parametrize("bc_t", ["free", "periodic"])
@pytest.mark.parametrize("bc_l", ["free", "periodic"])
def test_glue_matches_build(key, bc_t, bc_l):
    spec = StripSpec(get_lattice(key), width=3, length=4, bc_t=bc_t, bc_l=bc_l)
    assert glue_columns(spec) == build_strip(spec)


@pytest.mark.parametrize("key", ALL_KEYS)
def test_verify_fully_periodic(key):
    lat = get_lattice(key)
    spec = StripSpec(lat, width=4, length=4, bc_t="periodic", bc_l="periodic")
    G = build_strip(spec)
    report = verify_lattice(spec, G)
    assert report.ok, [c for c in report.checks if not c.passed]
    st = stats(G)
    assert 2 * st.e == st.n * lat.delta
    assert st.girth == lat.girth


@pytest.mark.parametrize("key", ALL_KEYS)
def test_length_scaling_is_linear(key):
    spec2 = StripSpec(get_lattice(key), width=2, length=2)
    nu = column_decomposition(spec2).nu
    for m in (1, 3, 6):
        G = build_strip(spec2, length=m)
        assert G.n == nu * m


def test_degenerate_wraps_rejected():
    sq = get_lattice("sq")
    with pytest.raises(LatticeError):
        StripSpec(sq, width=1, length=3, bc_t="periodic")
    with pytest.raises(LatticeError):
        StripSpec(sq, width=2, length=1, bc_l="periodic")
    with pytest.raises(LatticeError):
        StripSpec(sq, width=0, length=3)
