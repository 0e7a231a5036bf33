import json

import pytest
from hypothesis import given

from origamikit import corpus
from origamikit.origami import (
    AffineAutomorphism,
    GluingError,
    Origami,
    OrigamiFormatError,
    RotatedGluingSurface,
    automorphism_group,
    canonical_form,
    corner_labels,
    cyclic_cover,
    genus,
    is_affine_automorphism,
    is_isomorphic,
    new_origami,
    read_origami,
    relabel,
    rotate,
    rotation_automorphisms,
    singularities,
    stratum,
    vertex_map,
    vertex_permutation,
    vertices,
)
from origamikit.perm import NotTransitiveError, Permutation, SizeMismatchError, compose, cycle_type, parse_cycles
from origamikit.veech import apply_sl2z, word_matrix

from conftest import origamis, perms


def test_torus(torus):
    assert torus.n == torus.area == 1
    assert vertex_permutation(torus).is_identity()
    assert genus(torus) == 1
    assert stratum(torus) == ()
    assert automorphism_group(torus) == [Permutation.identity(1)]


def test_disconnected_rejected():
    with pytest.raises(NotTransitiveError):
        new_origami(Permutation.identity(2), Permutation.identity(2))


def test_size_mismatch_rejected():
    with pytest.raises(SizeMismatchError):
        new_origami(Permutation.identity(2), Permutation.identity(3))


def test_mucube_valid():
    o = corpus.get("mucube").origami
    assert o.n == 24
    assert genus(o) == 9


def test_vertex_permutation_types():
    assert cycle_type(vertex_permutation(corpus.get("mucube").origami)) == (3,) * 8
    assert cycle_type(vertex_permutation(corpus.get("muoctahedron").origami)) == (4,) * 12 + (1,) * 24


def test_printed_muoctahedron_listing_has_wrong_stratum():
    # the listing as printed has two cone points of angle 40 pi
    o = Origami.from_cycles(corpus.MUOCTAHEDRON_H, corpus.MUOCTAHEDRON_V_PRINTED, 72)
    assert stratum(o) != (3,) * 12
    assert max(stratum(o)) == 19


def test_genus_values():
    assert genus(corpus.get("truncated_octa8").origami) == 49
    assert stratum(corpus.get("mutetrahedron").origami) == (1,) * 8
    assert stratum(corpus.get("octa4").origami) == (3,) * 12


def test_l_origami(l_origami):
    assert genus(l_origami) == 2
    assert stratum(l_origami) == (2,)
    assert [s.cone_multiple for s in singularities(l_origami)] == [3]


def test_singularity_fields():
    o = corpus.get("mutetrahedron").origami
    sing = singularities(o)
    assert len(sing) == 8
    assert all(s.cone_multiple == 2 and s.zero_order == 1 for s in sing)
    marked = singularities(o, marked_points=True)
    assert len(marked) == 16
    labels = corner_labels(o)
    assert sum(1 for x in labels if x >= 0) == 16


def test_marked_points_auto(torus, l_origami):
    assert len(singularities(torus, None)) == 1
    assert len(singularities(torus, False)) == 0
    assert len(singularities(l_origami, None)) == 1


def test_canonical_form_l(l_origami):
    c, q = canonical_form(l_origami)
    # worked by hand: starting the search at square 2 gives the least pair
    assert c.sigma_h.images == (0, 2, 1)
    assert c.sigma_v.images == (1, 0, 2)
    assert q.images == (1, 2, 0)
    assert relabel(l_origami, q) == c


def test_text_round_trip(tmp_path):
    o = corpus.get("mucube").origami
    text = o.to_text()
    assert "h=(1,2,3,4)(5,6,7,8)" in text
    assert Origami.from_text(text) == o
    p = tmp_path / "m.txt"
    p.write_text("# a comment\n" + text)
    assert read_origami(p) == o


def test_json_round_trip(tmp_path):
    o = corpus.get("octa8_cover").origami
    data = o.to_json()
    assert data["sigma_h"] == list(o.sigma_h.images)
    p = tmp_path / "o.json"
    p.write_text(json.dumps(data))
    assert read_origami(p) == o


@pytest.mark.parametrize(
    "text",
    ["n=3\nh=(1,2)\n", "n=three\nh=\nv=\n", "just words\n"],
)
def test_text_format_errors(text):
    with pytest.raises(OrigamiFormatError):
        Origami.from_text(text)


def test_json_format_errors():
    with pytest.raises(OrigamiFormatError):
        Origami.from_json({"n": 2, "sigma_h": [0]})
    with pytest.raises(OrigamiFormatError):
        Origami.from_json({"n": 3, "sigma_h": [0, 1], "sigma_v": [1, 0]})


def test_automorphisms():
    o = corpus.get("mutetrahedron").origami
    aut = automorphism_group(o)
    assert len(aut) >= 2
    assert any(compose(z, z).is_identity() and not z.is_identity() and all(z(i) != i for i in range(o.n)) for z in aut)
    mc = corpus.get("mucube").origami
    assert any(
        compose(z, z).is_identity() and all(z(i) != i for i in range(mc.n)) for z in automorphism_group(mc)
    )


def test_automorphism_group_closed():
    o = corpus.get("octa8_cover").origami
    aut = set(automorphism_group(o))
    assert Permutation.identity(o.n) in aut
    assert all(compose(a, b) in aut for a in aut for b in aut)


def test_octa8_has_order_three_symmetries():
    o = corpus.get("octa8_cover").origami
    assert any(z.order() == 3 for z in automorphism_group(o))
    # an affine automorphism whose derivative has order three
    m = word_matrix("tS")
    assert m[0][0] + m[1][1] == -1
    q = is_isomorphic(o, apply_sl2z(o, "tS"))
    assert q is not None and q.order() == 3


def test_rotation_automorphisms_are_automorphisms():
    o = corpus.get("mucube").origami
    for k in range(4):
        for f in rotation_automorphisms(o, k):
            assert is_affine_automorphism(o, f)
    assert not is_affine_automorphism(o, AffineAutomorphism(Permutation([1, 0] + list(range(2, 24))), 0))


def test_vertex_map_preserves_cone_angles():
    o = corpus.get("mucube").origami
    vs = vertices(o)
    for k in range(4):
        for f in rotation_automorphisms(o, k)[:6]:
            vm = vertex_map(o, f)
            assert sorted(vm.values()) == list(range(len(vs)))
            assert all(len(vs[a]) == len(vs[b]) for a, b in vm.items())


def test_isomorphism(l_origami):
    assert is_isomorphic(l_origami, l_origami).is_identity()
    assert is_isomorphic(corpus.get("mucube").origami, corpus.get("mutetrahedron").origami) is None


def test_cube_cover_is_mucube():
    q = is_isomorphic(corpus.get("cube_cover").origami, corpus.get("mucube").origami)
    assert q is not None
    assert relabel(corpus.get("cube_cover").origami, q) == corpus.get("mucube").origami


# cyclic covers


def test_trivial_cover(l_origami):
    assert cyclic_cover(RotatedGluingSurface.from_origami(l_origami)) == l_origami


def test_cube_gluing_cover():
    s = corpus.cube_gluing()
    assert s.n == 6 and s.k == 4
    assert any(g.rot % 2 for g in s.gluings)
    o = cyclic_cover(s)
    assert o.n == 24
    assert genus(o) == 9
    assert stratum(o) == (2,) * 8
    # the sheet rotation is an affine automorphism turning by a quarter
    assert rotation_automorphisms(o, 1)


def test_cube_gluing_json_round_trip():
    s = corpus.cube_gluing()
    data = json.loads(json.dumps(s.to_json()))
    assert RotatedGluingSurface.from_json(data) == s
    assert data["gluings"][0].keys() == {"from", "to", "rot"}


def mucube_quotient():
    """
    The Mucube surface modulo a free half-turn, as a rotated gluing.

    Squares are the orbits of the half-turn; each orbit is represented by
    one square, the other being that square turned upside down.  The
    half-turn is chosen to fix no square and no edge.
    """
    o = corpus.get("mucube").origami
    tau = next(
        f.perm
        for f in rotation_automorphisms(o, 2)
        if compose(f.perm, f.perm).is_identity()
        and all(f.perm(i) not in (i, o.sigma_h(i), o.sigma_v(i)) for i in range(o.n))
    )
    reps = sorted({min(i, tau(i)) for i in range(o.n)})
    index = {r: k for k, r in enumerate(reps)}
    h, v = o.sigma_h, o.sigma_v
    hi, vi = h.inverse(), v.inverse()
    flip = {"R": "L", "L": "R", "T": "B", "B": "T"}
    sides = "RTLB"
    gl = {}
    for r in reps:
        for side, nb, arrive in (("R", h, "L"), ("T", v, "B"), ("L", hi, "R"), ("B", vi, "T")):
            y = nb(r)
            if y in index:
                target, tside = index[y], arrive
            else:
                target, tside = index[tau(y)], flip[arrive]
            key = frozenset([(index[r], side), (target, tside)])
            if key in gl:
                continue
            rot = (sides.index(tside) - sides.index(side) + 2) % 4
            gl[key] = ((index[r], side, target, tside, rot))
    from origamikit.origami import Gluing

    return RotatedGluingSurface(len(reps), tuple(Gluing(*g) for g in gl.values()), 2)


def test_mucube_quotient_double_cover():
    s = mucube_quotient()
    assert s.n == 12
    assert any(g.rot == 2 for g in s.gluings)
    cover = cyclic_cover(s)
    assert cover.n == 24
    assert is_isomorphic(cover, corpus.get("mucube").origami) is not None


def test_cover_errors():
    from origamikit.origami import Gluing

    # right side glued to top needs a quarter turn, not allowed for k = 2
    with pytest.raises(GluingError):
        RotatedGluingSurface(1, (Gluing(0, "R", 0, "T", 3), Gluing(0, "L", 0, "B", 3)), 2)
    # declared rotation disagrees with the sides
    with pytest.raises(GluingError):
        RotatedGluingSurface(1, (Gluing(0, "R", 0, "L", 1), Gluing(0, "T", 0, "B", 0)), 4)
    # a side left unglued
    with pytest.raises(GluingError):
        RotatedGluingSurface(1, (Gluing(0, "R", 0, "L", 0),), 1)
    # a torus with no rotations asked for a 2-fold cover is disconnected
    flat = RotatedGluingSurface(1, (Gluing(0, "R", 0, "L", 0), Gluing(0, "T", 0, "B", 0)), 2)
    with pytest.raises(GluingError, match="disconnected"):
        cyclic_cover(flat)


@given(origamis())
def test_euler_characteristic(o):
    assert sum(stratum(o)) == 2 * genus(o) - 2


@given(origamis(min_n=2).flatmap(lambda o: perms(o.n).map(lambda q: (o, q))))
def test_relabel_invariants(pair):
    o, q = pair
    r = relabel(o, q)
    assert genus(r) == genus(o)
    assert stratum(r) == stratum(o)
    assert canonical_form(r)[0] == canonical_form(o)[0]
    p = is_isomorphic(o, r)
    assert p is not None and relabel(o, p) == r


@given(origamis())
def test_canonical_form_idempotent(o):
    c, q = canonical_form(o)
    assert relabel(o, q) == c
    assert canonical_form(c)[0] == c


@given(origamis(min_n=2).flatmap(lambda o: origamis(min_n=o.n, max_n=o.n).map(lambda p: (o, p))))
def test_canonical_forms_agree_with_isomorphism(pair):
    a, b = pair
    same = canonical_form(a)[0] == canonical_form(b)[0]
    assert same == (is_isomorphic(a, b) is not None)


@given(origamis())
def test_automorphism_group_divides_n(o):
    aut = automorphism_group(o)
    assert o.n % len(aut) == 0
    cyc = vertices(o)
    blocks = sorted(map(sorted, cyc))
    for z in aut:
        assert sorted(sorted(z(x) for x in c) for c in cyc) == blocks


@given(origamis())
def test_rotate_four_times(o):
    assert rotate(rotate(o, 1), 3) == o
    assert rotate(o, 2) == rotate(rotate(o, 1), 1)


@given(origamis(max_n=5))
def test_cover_of_own_gluing(o):
    assert cyclic_cover(RotatedGluingSurface.from_origami(o)) == o
