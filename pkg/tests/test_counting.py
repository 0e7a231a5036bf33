from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from origamikit import corpus
from origamikit.counting import SVConstants, cusp_spectra, format_table, sv_constants
from origamikit.cylinders import horizontal_decomposition, horizontal_saddle_segments
from origamikit.origami import relabel, singularities
from origamikit.veech import apply_sl2z, orbit

from conftest import origamis, perms

# frozen after agreeing with the orbit average below
FROZEN = {
    "mutetrahedron": (F(19, 16), F(2)),
    "mucube": (F(1), F(26, 9)),
    "muoctahedron": (F(19, 16), F(19, 4)),
    "octa4": (F(1), F(19, 4)),
    "truncated_octa8": (F(1), F(10)),
    "octa8_cover": (F(1), F(7, 4)),
    "cube_cover": (F(1), F(26, 9)),
    "tetrahedron_cover": (F(1), F(1)),
    "icosahedron_cover": (F(1), F(31, 5)),
}


def orbit_average(o, marked=None):
    """
    Average of horizontal data over every node of the orbit.

    A node in a cusp of width w is one of w shears of the cusp
    representative, so averaging over nodes weights each cusp by w/d
    without ever computing a cusp.
    """
    g = orbit(o)
    if marked is None:
        marked = not singularities(o)
    c = a = F(0)
    for x in g.nodes:
        cyl = horizontal_decomposition(x, marked)
        seg = horizontal_saddle_segments(x, marked) if singularities(x, marked) else []
        lengths = {s.m for s in seg} or {k.m for k in cyl}
        c += sum(F(1, m * m) for m in lengths)
        a += sum(F(k.h, k.m) for k in cyl)
    return c / g.index, a / g.index


@pytest.mark.parametrize("name", list(FROZEN))
def test_frozen_constants(name):
    o = corpus.get(name).origami
    k = sv_constants(o)
    assert (k.c, k.a) == FROZEN[name]
    assert k.c1 == k.c * o.n and k.a1 == k.a * o.n
    assert orbit_average(o) == FROZEN[name]


def test_torus(torus):
    k = sv_constants(torus)
    assert (k.c, k.a, k.n) == (1, 1, 1)


def test_l_origami(l_origami):
    k = sv_constants(l_origami)
    # width-2 cusp: unit segments, cylinders 2 x 1 and 1 x 1; width-1 cusp: one 3 x 1 cylinder
    assert k.c == 1
    assert k.a == F(2, 3) * (F(2, 4) + 1) + F(1, 3) * F(3, 9)
    assert (k.c, k.a) == orbit_average(l_origami)


def test_spectrum_json():
    s = cusp_spectra(corpus.get("mucube").origami)[0]
    data = s.to_json()
    assert data["width"] == 4
    assert data["segment_lengths"] == [1]
    assert data["cylinders"][0] == {"m": 4, "area": 4}


def test_constants_json():
    data = sv_constants(corpus.get("mucube").origami).to_json()
    assert data == {"c": "1", "c1": "24", "a": "26/9", "a1": "208/3", "n": 24}


def test_table():
    rows = [(n, sv_constants(corpus.get(n).origami)) for n in ("mucube", "octa4")]
    text = format_table(rows)
    lines = text.splitlines()
    assert lines[0].split() == ["surface", "n", "c", "c1", "a", "a1"]
    assert set(lines[1]) <= {"-", " "}
    assert lines[2].split() == ["mucube", "24", "1", "24", "26/9", "208/3"]
    assert lines[3].split() == ["octa4", "48", "1", "48", "19/4", "228"]


@settings(max_examples=100)
@given(origamis(max_n=6))
def test_orbit_average_agrees(o):
    k = sv_constants(o)
    assert (k.c, k.a) == orbit_average(o)


@given(origamis(min_n=2, max_n=6).flatmap(lambda o: perms(o.n).map(lambda q: (o, q))))
def test_relabel_invariance(pair):
    o, q = pair
    assert sv_constants(relabel(o, q)) == sv_constants(o)


@given(origamis(max_n=6), st.text(alphabet="TtSs", max_size=6))
def test_sl2z_invariance(o, w):
    assert sv_constants(apply_sl2z(o, w)) == sv_constants(o)


@given(origamis(max_n=6))
def test_constants_positive(o):
    k = sv_constants(o)
    assert k.c > 0 and k.a > 0
    assert isinstance(k, SVConstants)
