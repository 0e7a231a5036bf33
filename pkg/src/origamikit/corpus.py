"""
Built-in surfaces.

Permutations are kept in 1-based cycle text so they can be compared with
their published listings by eye.  ``expected`` holds the published
invariants; where a published value is wrong, ``errata`` holds the value
the surface actually has together with a short reason.
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass, field
from fractions import Fraction as F
from functools import lru_cache

from .origami import SIDES, Gluing, Origami, RotatedGluingSurface, cyclic_cover

__all__ = ["CorpusEntry", "UnknownSurfaceError", "cube_gluing", "get", "names"]


class UnknownSurfaceError(KeyError):
    def __str__(self) -> str:
        return f"unknown corpus surface {self.args[0]!r}; known: {', '.join(names())}"


def _blocks(size: int, count: int) -> str:
    return "".join("(" + ",".join(str(size * b + i + 1) for i in range(size)) + ")" for b in range(count))


MUTETRAHEDRON_H = _blocks(6, 4)
MUTETRAHEDRON_V = "(1,7,13,11,3,21)(2,20,14,12,18,22)(4,10,16,8,6,24)(5,23,17,9,15,19)"

MUCUBE_H = _blocks(4, 6)
MUCUBE_V = "(1,9,14,22)(2,20,13,7)(3,24,16,11)(4,5,15,18)(6,10,17,21)(8,23,19,12)"

MUOCTAHEDRON_H = _blocks(9, 8)
# as published; the last three cycles are written backwards
MUOCTAHEDRON_V_PRINTED = (
    "(1,29,20,36,39,54,37,3,10)(2,18,46,38,53,21,28,19,11)(4,60,70,58,35,23,33,6,16)"
    "(5,15,24,34,22,71,59,69,17)(7,42,51,40,57,64,55,9,13)(8,14,50,41,52,72,56,65,12)"
    "(25,31,27,66,62,68,47,44,49)(26,32,43,48,45,61,67,63,30)"
)
MUOCTAHEDRON_V = (
    "(1,29,20,36,39,54,37,3,10)(2,18,46,38,53,21,28,19,11)(4,60,70,58,35,23,33,6,16)"
    "(5,15,24,34,22,71,59,69,17)(7,42,51,40,57,64,55,9,13)(12,65,56,72,52,41,50,14,8)"
    "(49,44,47,68,62,66,27,31,25)(30,63,67,61,45,48,43,32,26)"
)

OCTA4_H = _blocks(3, 16)
OCTA4_V = (
    "(1,6,35)(2,32,41)(3,48,7)(4,9,10)(5,38,20)(8,17,26)(11,25,30)(12,43,39)"
    "(13,18,47)(14,44,29)(15,36,19)(16,21,22)(23,37,42)(24,31,27)(28,33,34)(40,45,46)"
)

TRUNCATED_OCTA8_H = _blocks(6, 20)
TRUNCATED_OCTA8_V = (
    "(1,34,75,81,120,7)(2,20,111,80,62,25)(3,40,67,79,107,15)(4,10,117,84,78,31)"
    "(5,28,65,83,114,23)(6,18,104,82,70,37)(8,52,71,74,96,17)(9,24,86,73,64,43)"
    "(11,14,93,77,68,49)(12,46,61,76,89,21)(13,22,99,69,66,55)(16,58,63,72,102,19)"
    "(26,45,115,110,90,33)(27,38,98,109,103,56)(29,36,87,113,118,48)(30,59,106,112,101,41)"
    "(32,92,108,116,50,39)(35,42,53,119,105,95)(44,57,91,85,97,51)(47,54,100,88,94,60)"
)

# derived from triangulations of the solids, in canonical form
OCTA8_H = "(1,2,4)(3,6,10)(5,7,11)(8,9,12)"
OCTA8_V = "(1,3,7)(2,5,9)(4,8,6)(10,12,11)"

TETRAHEDRON_H = "(1,2)(3,4)"
TETRAHEDRON_V = "(1,3)(2,4)"

ICOSAHEDRON_H = (
    "(1,2,4,8,15)(3,6,12,21,32)(5,10,19,29,42)(7,13,22,34,47)(9,17,24,36,50)(11,14,23,35,49)"
    "(16,26,31,44,55)(18,20,30,43,54)(25,37,41,53,33)(27,28,40,52,46)(38,39,51,48,45)(56,57,60,59,58)"
)
ICOSAHEDRON_V = (
    "(1,3,7,14,24)(2,5,11,20,31)(4,9,18,28,41)(6,10,17,26,37)(8,16,27,39,12)(13,19,15,25,38)"
    "(21,33,46,57,22)(23,29,32,45,56)(30,36,42,47,58)(34,48,52,43,35)(40,44,50,49,59)(51,53,55,54,60)"
)


def cube_gluing() -> RotatedGluingSurface:
    """
    The cube as six unit squares with quarter-turn gluings, for its 4-fold cover.

    Each face gets a frame ``(right, up)`` with ``right x up`` the outward
    normal.  The side of a face pointing along ``d`` is glued to the face
    with normal ``d``, on the side of that face pointing back along the
    first face's normal.
    """
    axes = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    neg = lambda p: tuple(-x for x in p)
    cross = lambda a, b: (a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0])
    normals = [s for a in axes for s in (a, neg(a))]
    frames = []
    for nrm in normals:
        right = next(a for a in axes if a != nrm and a != neg(nrm))
        frames.append((right, cross(nrm, right)))

    def side_toward(face: int, d) -> int:
        right, up = frames[face]
        return [right, up, neg(right), neg(up)].index(d)

    gluings = []
    done = set()
    for f, nrm in enumerate(normals):
        right, up = frames[f]
        for a, d in enumerate([right, up, neg(right), neg(up)]):
            g = normals.index(d)
            b = side_toward(g, nrm)
            if (g, b) in done:
                continue
            done.add((f, a))
            gluings.append(Gluing(f, SIDES[a], g, SIDES[b], (b - a + 2) % 4))
    return RotatedGluingSurface(6, tuple(gluings), 4)


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    build: Callable[[], Origami] = field(repr=False)
    expected: dict
    provenance: str
    errata: dict = field(default_factory=dict)

    @property
    def origami(self) -> Origami:
        return _built(self.name)

    def corrected(self) -> dict:
        """Expected values with errata applied."""
        out = dict(self.expected)
        out.update({k: v for k, (v, _) in self.errata.items()})
        return out


def _text(name: str, h: str, v: str, n: int) -> Callable[[], Origami]:
    return lambda: Origami.from_cycles(h, v, n, name)


def _constants(c, a, n):
    return {"c": F(c), "c1": F(c) * n, "a": F(a), "a1": F(a) * n}


A_NOTE = "published a treats every cylinder as unit-area; the actual cylinder decompositions give this value"

_ENTRIES = [
    CorpusEntry(
        "mutetrahedron",
        _text("mutetrahedron", MUTETRAHEDRON_H, MUTETRAHEDRON_V, 24),
        {"n": 24, "genus": 5, "stratum": (1,) * 8, "index": 4, "widths": (1, 3), **_constants(F(19, 16), 15, 24)},
        "permutations transcribed from the published listing",
        {"a": (F(2), A_NOTE), "a1": (F(48), A_NOTE)},
    ),
    CorpusEntry(
        "mucube",
        _text("mucube", MUCUBE_H, MUCUBE_V, 24),
        {"n": 24, "genus": 9, "stratum": (2,) * 8, "index": 9, "widths": (2, 3, 4), **_constants(1, 144, 24)},
        "permutations transcribed from the published listing",
        {"a": (F(26, 9), A_NOTE), "a1": (F(208, 3), A_NOTE)},
    ),
    CorpusEntry(
        "muoctahedron",
        _text("muoctahedron", MUOCTAHEDRON_H, MUOCTAHEDRON_V, 72),
        {
            "n": 72,
            "genus": 19,
            "stratum": (3,) * 12,
            "index": 16,
            "widths": (1, 3, 3, 9),
            **_constants(F(77, 64), F(171, 4), 72),
        },
        "sigma_h transcribed; sigma_v transcribed with its last three cycles reversed, "
        "which makes the stratum H(3^12) and agrees with an independent triangulation",
        {
            "c": (F(19, 16), "segment set {1, 2} belongs to a width-3 cusp, not the width-1 cusp"),
            "c1": (F(171, 2), "follows c"),
            "a": (F(19, 4), A_NOTE),
            "a1": (F(342), A_NOTE),
            "sigma_v": (MUOCTAHEDRON_V, "published cycles 6-8 run backwards, giving cone points of angle 40 pi"),
        },
    ),
    CorpusEntry(
        "octa4",
        _text("octa4", OCTA4_H, OCTA4_V, 48),
        {"n": 48, "genus": 19, "stratum": (3,) * 12, "index": 4, "widths": (1, 3), **_constants(1, 288, 48)},
        "permutations transcribed from the published listing",
        {"a": (F(19, 4), A_NOTE), "a1": (F(228), A_NOTE)},
    ),
    CorpusEntry(
        "truncated_octa8",
        _text("truncated_octa8", TRUNCATED_OCTA8_H, TRUNCATED_OCTA8_V, 120),
        {
            "n": 120,
            "genus": 49,
            "stratum": (4,) * 24,
            "index": 15,
            "widths": (2, 3, 4, 6),
            **_constants(1, 720, 120),
        },
        "permutations transcribed from the published listing",
        {"a": (F(10), A_NOTE), "a1": (F(1200), A_NOTE)},
    ),
    CorpusEntry(
        "octa8_cover",
        _text("octa8_cover", OCTA8_H, OCTA8_V, 12),
        {"n": 12, "genus": 4, "stratum": (1,) * 6, "index": 4, "widths": (1, 3), **_constants(1, 72, 12)},
        "3-fold translation cover of the octahedron, derived from its triangulation; "
        "published a and a1 are swapped and restored here by a1 = 12 a",
        {"a": (F(7, 4), A_NOTE), "a1": (F(21), A_NOTE)},
    ),
    CorpusEntry(
        "cube_cover",
        lambda: cyclic_cover(cube_gluing(), "cube_cover"),
        {"n": 24, "genus": 9, "stratum": (2,) * 8, "index": 9, "widths": (2, 3, 4), **_constants(1, 144, 24)},
        "4-fold cyclic cover of the cube glued from six faces with quarter turns",
        {"a": (F(26, 9), A_NOTE), "a1": (F(208, 3), A_NOTE)},
    ),
    CorpusEntry(
        "tetrahedron_cover",
        _text("tetrahedron_cover", TETRAHEDRON_H, TETRAHEDRON_V, 4),
        {"n": 4, "index": 1, "widths": (1,)},
        "2-fold translation cover of the tetrahedron, derived from its triangulation",
    ),
    CorpusEntry(
        "icosahedron_cover",
        _text("icosahedron_cover", ICOSAHEDRON_H, ICOSAHEDRON_V, 60),
        {"n": 60, "index": 10, "widths": (2, 3, 5), **_constants(1, 360, 60)},
        "6-fold translation cover of the icosahedron, derived from its triangulation",
        {"a": (F(31, 5), A_NOTE), "a1": (F(372), A_NOTE)},
    ),
]

_BY_NAME = {e.name: e for e in _ENTRIES}

# the five surfaces with published permutations, in table order
PUBLISHED = ("mucube", "muoctahedron", "mutetrahedron", "octa4", "truncated_octa8")


def names() -> list[str]:
    return [e.name for e in _ENTRIES]


def get(name: str) -> CorpusEntry:
    try:
        return _BY_NAME[name]
    except KeyError:
        raise UnknownSurfaceError(name) from None


@lru_cache(maxsize=None)
def _built(name: str) -> Origami:
    return get(name).build()
