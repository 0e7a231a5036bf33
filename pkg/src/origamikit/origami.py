"""
Square-tiled surfaces.

An origami on ``n`` unit squares is a pair of permutations: the right side
of square ``i`` is glued to the left side of ``sigma_h(i)`` and the top of
square ``i`` to the bottom of ``sigma_v(i)``.

Each vertex of the square complex is recorded through the squares whose
bottom-left corner sits on it.  Going around such a point clockwise
(down, left, up, right) moves from one of these squares to the next, which
is the permutation ``commutator(sigma_h, sigma_v)``.  A cycle of length
``m`` is a cone point of angle ``2 pi m``.
"""

from __future__ import annotations

import json
from collections.abc import Sequence
from dataclasses import dataclass, field
from pathlib import Path

from .perm import (
    NotTransitiveError,
    Permutation,
    SizeMismatchError,
    centralizer,
    commutator,
    conjugate,
    cycle_type,
    extend_equivariant,
    inverse,
    is_transitive,
    parse_cycles,
    print_cycles,
)

__all__ = [
    "AffineAutomorphism",
    "Gluing",
    "GluingError",
    "Origami",
    "OrigamiFormatError",
    "RotatedGluingSurface",
    "Singularity",
    "automorphism_group",
    "canonical_form",
    "canonical_key",
    "corner_labels",
    "cyclic_cover",
    "genus",
    "is_affine_automorphism",
    "is_isomorphic",
    "new_origami",
    "read_origami",
    "relabel",
    "rotate",
    "rotation_automorphisms",
    "singularities",
    "stratum",
    "vertex_map",
    "vertex_permutation",
    "vertices",
]


class OrigamiFormatError(ValueError):
    pass


@dataclass(frozen=True)
class Origami:
    sigma_h: Permutation
    sigma_v: Permutation
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.sigma_h.n != self.sigma_v.n:
            raise SizeMismatchError(
                f"sigma_h acts on {self.sigma_h.n} squares, sigma_v on {self.sigma_v.n}"
            )
        if not is_transitive([self.sigma_h, self.sigma_v], self.sigma_h.n):
            raise NotTransitiveError("the gluing permutations do not give a connected surface")

    @classmethod
    def from_cycles(cls, h: str, v: str, n: int, name: str | None = None) -> Origami:
        return cls(parse_cycles(h, n), parse_cycles(v, n), name)

    @classmethod
    def from_images(cls, h: Sequence[int], v: Sequence[int], name: str | None = None) -> Origami:
        return cls(Permutation(h), Permutation(v), name)

    @property
    def n(self) -> int:
        return self.sigma_h.n

    @property
    def area(self) -> int:
        return self.n

    def __repr__(self) -> str:
        label = f" {self.name!r}" if self.name else ""
        return f"<Origami{label} n={self.n} h={print_cycles(self.sigma_h)} v={print_cycles(self.sigma_v)}>"

    def to_text(self) -> str:
        lines = []
        if self.name:
            lines.append(f"name={self.name}")
        lines += [f"n={self.n}", f"h={print_cycles(self.sigma_h)}", f"v={print_cycles(self.sigma_v)}"]
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        out = {"n": self.n, "sigma_h": list(self.sigma_h.images), "sigma_v": list(self.sigma_v.images)}
        if self.name:
            out["name"] = self.name
        return out

    @classmethod
    def from_text(cls, text: str) -> Origami:
        fields: dict[str, str] = {}
        for raw in text.splitlines():
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            key, sep, value = line.partition("=")
            if not sep:
                raise OrigamiFormatError(f"expected key=value, got {raw!r}")
            fields[key.strip()] = value.strip()
        missing = {"n", "h", "v"} - fields.keys()
        if missing:
            raise OrigamiFormatError(f"missing fields: {sorted(missing)}")
        try:
            n = int(fields["n"])
        except ValueError:
            raise OrigamiFormatError(f"n is not an integer: {fields['n']!r}") from None
        return cls.from_cycles(fields["h"], fields["v"], n, fields.get("name"))

    @classmethod
    def from_json(cls, data: dict | str) -> Origami:
        if isinstance(data, str):
            data = json.loads(data)
        try:
            h, v = data["sigma_h"], data["sigma_v"]
        except (KeyError, TypeError):
            raise OrigamiFormatError("JSON origami needs 'sigma_h' and 'sigma_v'") from None
        if "n" in data and not (data["n"] == len(h) == len(v)):
            raise OrigamiFormatError("'n' does not match the permutation lengths")
        return cls.from_images(h, v, data.get("name"))


def new_origami(sigma_h: Permutation, sigma_v: Permutation, name: str | None = None) -> Origami:
    return Origami(sigma_h, sigma_v, name)


def read_origami(path: str | Path) -> Origami:
    """Load either the ``n=/h=/v=`` text format or the JSON image-list format."""
    text = Path(path).read_text(encoding="utf-8")
    if text.lstrip().startswith("{"):
        return Origami.from_json(text)
    return Origami.from_text(text)


def vertex_permutation(o: Origami) -> Permutation:
    return commutator(o.sigma_h, o.sigma_v)


def vertices(o: Origami) -> list[tuple[int, ...]]:
    """Vertex classes as cycles of the vertex permutation, ordered by least square."""
    return vertex_permutation(o).cycles()


@dataclass(frozen=True)
class Singularity:
    id: int
    squares: tuple[int, ...]

    @property
    def cone_multiple(self) -> int:
        return len(self.squares)

    @property
    def zero_order(self) -> int:
        return len(self.squares) - 1


def _resolve_marked(o: Origami, marked_points: bool | None) -> bool:
    # None: a surface without zeros keeps its vertices as marked points
    if marked_points is None:
        return all(len(c) == 1 for c in vertices(o))
    return marked_points


def singularities(o: Origami, marked_points: bool | None = False) -> list[Singularity]:
    """
    Cone points of angle at least ``4 pi``.

    With ``marked_points`` every vertex is reported, regular ones included.
    ``None`` marks the vertices only when the surface has no zeros at all
    (tori), which is what the counting code uses.
    """
    marked = _resolve_marked(o, marked_points)
    cycles = [c for c in vertices(o) if marked or len(c) > 1]
    return [Singularity(k, c) for k, c in enumerate(cycles)]


def corner_labels(o: Origami, marked_points: bool | None = False) -> list[int]:
    """For each square, the singularity id of its bottom-left corner, or -1."""
    labels = [-1] * o.n
    for s in singularities(o, marked_points):
        for x in s.squares:
            labels[x] = s.id
    return labels


def genus(o: Origami) -> int:
    # V - E + F with E = 2n, F = n
    twice = 2 - len(vertices(o)) + o.n
    if twice % 2 or twice < 2:
        raise AssertionError(f"Euler characteristic parity failure on {o!r}")
    return twice // 2


def stratum(o: Origami) -> tuple[int, ...]:
    """Zero orders in decreasing order; empty for genus one."""
    return tuple(sorted((len(c) - 1 for c in vertices(o) if len(c) > 1), reverse=True))


def relabel(o: Origami, q: Permutation) -> Origami:
    """The same surface with square ``i`` renamed ``q(i)``."""
    return Origami(conjugate(o.sigma_h, q), conjugate(o.sigma_v, q), o.name)


def rotate(o: Origami, quarter_turns: int) -> Origami:
    """The surface turned counterclockwise by ``quarter_turns`` right angles."""
    h, v = o.sigma_h, o.sigma_v
    k = quarter_turns % 4
    if k == 1:
        h, v = inverse(v), h
    elif k == 2:
        h, v = inverse(h), inverse(v)
    elif k == 3:
        h, v = v, inverse(h)
    return Origami(h, v, o.name)


def automorphism_group(o: Origami) -> list[Permutation]:
    """Translation automorphisms, i.e. the centralizer of ``{sigma_h, sigma_v}``."""
    return centralizer([o.sigma_h, o.sigma_v], o.n)


@dataclass(frozen=True)
class AffineAutomorphism:
    """
    A self-map of the surface whose derivative is a rotation.

    ``perm`` sends each square to its image square; the image is turned by
    ``quarter_turns`` right angles, so ``perm`` is an isomorphism from the
    surface onto ``rotate(surface, quarter_turns)``.  Translation
    automorphisms have ``quarter_turns == 0``.
    """

    perm: Permutation
    quarter_turns: int = 0


def rotation_automorphisms(o: Origami, quarter_turns: int) -> list[AffineAutomorphism]:
    target = rotate(o, quarter_turns)
    src = [o.sigma_h, o.sigma_v]
    dst = [target.sigma_h, target.sigma_v]
    out = []
    for c in range(o.n):
        q = extend_equivariant(src, dst, c)
        if q is not None:
            out.append(AffineAutomorphism(q, quarter_turns % 4))
    return out


def is_affine_automorphism(o: Origami, f: AffineAutomorphism) -> bool:
    target = rotate(o, f.quarter_turns)
    p = f.perm
    return (
        p.n == o.n
        and conjugate(o.sigma_h, p) == target.sigma_h
        and conjugate(o.sigma_v, p) == target.sigma_v
    )


def vertex_map(o: Origami, f: AffineAutomorphism | Permutation) -> dict[int, int]:
    """
    Action on vertices, indexed by position in :func:`vertices`.

    The bottom-left corner of square ``x`` lands on the corner of square
    ``f(x)`` that the rotation brings to the bottom-left.
    """
    if isinstance(f, Permutation):
        f = AffineAutomorphism(f, 0)
    h, v = o.sigma_h, o.sigma_v
    k = f.quarter_turns % 4
    corner = {
        0: lambda y: y,
        1: lambda y: v(y),
        2: lambda y: h(v(y)),
        3: lambda y: h(y),
    }[k]
    cycles = vertices(o)
    index = [0] * o.n
    for k_, c in enumerate(cycles):
        for x in c:
            index[x] = k_
    return {k_: index[corner(f.perm(c[0]))] for k_, c in enumerate(cycles)}


def _bfs_relabel(h: tuple[int, ...], v: tuple[int, ...], start: int) -> tuple[list[int], list[int]]:
    n = len(h)
    label = [-1] * n
    label[start] = 0
    order = [start]
    k = 0
    while k < len(order):
        x = order[k]
        k += 1
        for y in (h[x], v[x]):
            if label[y] < 0:
                label[y] = len(order)
                order.append(y)
    return label, order


def canonical_form(o: Origami) -> tuple[Origami, Permutation]:
    """
    A representative of the isomorphism class of ``o`` and the relabeling onto it.

    Squares are numbered breadth-first from each possible start (``sigma_h``
    neighbour before ``sigma_v`` neighbour); the lexicographically least
    ``(sigma_h, sigma_v)`` image pair wins.  Returns ``(c, q)`` with
    ``relabel(o, q) == c``.
    """
    h, v = o.sigma_h.images, o.sigma_v.images
    best = None
    best_label = None
    for start in range(o.n):
        label, order = _bfs_relabel(h, v, start)
        cand = (
            tuple(label[h[x]] for x in order),
            tuple(label[v[x]] for x in order),
        )
        if best is None or cand < best:
            best = cand
            best_label = label
    c = Origami(Permutation._trusted(best[0]), Permutation._trusted(best[1]), o.name)
    return c, Permutation._trusted(tuple(best_label))


def canonical_key(o: Origami) -> tuple[tuple[int, ...], tuple[int, ...]]:
    c, _ = canonical_form(o)
    return c.sigma_h.images, c.sigma_v.images


def is_isomorphic(a: Origami, b: Origami) -> Permutation | None:
    """A relabeling ``q`` with ``relabel(a, q) == b``, or ``None``."""
    if a.n != b.n:
        return None
    if cycle_type(a.sigma_h) != cycle_type(b.sigma_h) or cycle_type(a.sigma_v) != cycle_type(b.sigma_v):
        return None
    src = [a.sigma_h, a.sigma_v]
    dst = [b.sigma_h, b.sigma_v]
    for c in range(b.n):
        q = extend_equivariant(src, dst, c)
        if q is not None:
            return q
    return None


SIDES = "RTLB"  # side s faces direction s quarter turns from the right


class GluingError(ValueError):
    pass


@dataclass(frozen=True)
class Gluing:
    """Side ``side`` of ``square`` glued to side ``to_side`` of ``to_square``."""

    square: int
    side: str
    to_square: int
    to_side: str
    rot: int

    def to_json(self) -> dict:
        return {"from": [self.square, self.side], "to": [self.to_square, self.to_side], "rot": self.rot}

    @classmethod
    def from_json(cls, data: dict) -> Gluing:
        (a, s), (b, t) = data["from"], data["to"]
        return cls(int(a), str(s), int(b), str(t), int(data["rot"]))


@dataclass(frozen=True)
class RotatedGluingSurface:
    """
    Unit squares glued along sides, each gluing a translation followed by
    ``rot`` counterclockwise quarter turns.

    Each gluing is listed once; the reverse crossing turns by ``-rot``.
    Crossing from side ``a`` to side ``b`` forces ``rot = b - a + 2`` mod 4
    (with R, T, L, B numbered 0..3), which is checked.  ``k`` is the cover
    degree and every ``rot`` must be a multiple of ``4 / k``.
    """

    n: int
    gluings: tuple[Gluing, ...]
    k: int = 1

    def __post_init__(self):
        if self.k not in (1, 2, 4):
            raise GluingError(f"cover degree must be 1, 2 or 4, got {self.k}")
        seen = set()
        for g in self.gluings:
            for sq, side in ((g.square, g.side), (g.to_square, g.to_side)):
                if side not in SIDES or not 0 <= sq < self.n:
                    raise GluingError(f"bad edge ({sq}, {side!r})")
                if (sq, side) in seen:
                    raise GluingError(f"edge ({sq}, {side}) glued twice")
                seen.add((sq, side))
            forced = (SIDES.index(g.to_side) - SIDES.index(g.side) + 2) % 4
            if g.rot % 4 != forced:
                raise GluingError(f"gluing {g} needs rot {forced}, got {g.rot}")
            if g.rot % (4 // self.k):
                raise GluingError(f"rotation {g.rot} of {g} does not fit a {self.k}-fold cover")
        if len(seen) != 4 * self.n:
            raise GluingError("every side of every square must be glued exactly once")

    def pairing(self) -> dict[tuple[int, int], tuple[int, int, int]]:
        """``(square, side) -> (square, side, rot)`` in both directions, sides as 0..3."""
        out = {}
        for g in self.gluings:
            a, b = SIDES.index(g.side), SIDES.index(g.to_side)
            out[(g.square, a)] = (g.to_square, b, g.rot % 4)
            out[(g.to_square, b)] = (g.square, a, -g.rot % 4)
        return out

    @classmethod
    def from_origami(cls, o: Origami) -> RotatedGluingSurface:
        gl = []
        for i in range(o.n):
            gl.append(Gluing(i, "R", o.sigma_h(i), "L", 0))
            gl.append(Gluing(i, "T", o.sigma_v(i), "B", 0))
        return cls(o.n, tuple(gl), 1)

    def to_json(self) -> dict:
        return {"n": self.n, "k": self.k, "gluings": [g.to_json() for g in self.gluings]}

    @classmethod
    def from_json(cls, data: dict | str) -> RotatedGluingSurface:
        if isinstance(data, str):
            data = json.loads(data)
        try:
            gl = tuple(Gluing.from_json(g) for g in data["gluings"])
            return cls(int(data["n"]), gl, int(data.get("k", 1)))
        except (KeyError, TypeError, ValueError) as e:
            if isinstance(e, GluingError):
                raise
            raise GluingError(f"malformed gluing record: {e}") from None


def cyclic_cover(s: RotatedGluingSurface, name: str | None = None) -> Origami:
    """
    The translation cover: ``k`` copies of the surface, copy ``j`` turned by
    ``j * 4/k`` quarter turns, with every gluing becoming a translation.

    A square of the cover is ``(i, rho)``: square ``i`` turned by ``rho``
    quarter turns, so its local side ``t`` faces direction ``t + rho``.
    Leaving it to the right crosses local side ``-rho``; arriving through
    a gluing that turns by ``r`` lands on the copy turned by ``rho - r``.
    """
    pairs = s.pairing()
    step = 4 // s.k
    sheets = range(0, 4, step)
    index = {(i, rho): len(sheets) * i + j for i in range(s.n) for j, rho in enumerate(sheets)}

    def cross(i: int, rho: int, direction: int) -> tuple[int, int]:
        j, _, r = pairs[(i, (direction - rho) % 4)]
        return j, (rho - r) % 4

    # only the component of (0, 0); it must be everything
    start = (0, 0)
    seen = {start: 0}
    order = [start]
    h_img: dict[tuple[int, int], tuple[int, int]] = {}
    v_img: dict[tuple[int, int], tuple[int, int]] = {}
    k = 0
    while k < len(order):
        x = order[k]
        k += 1
        for direction, img in ((0, h_img), (1, v_img)):
            y = cross(*x, direction)
            img[x] = y
            if y not in seen:
                seen[y] = len(order)
                order.append(y)
    if len(order) != len(index):
        raise GluingError(f"disconnected cover: component of {len(order)} squares out of {len(index)}")
    h = [0] * len(index)
    v = [0] * len(index)
    for x in order:
        h[index[x]] = index[h_img[x]]
        v[index[x]] = index[v_img[x]]
    return Origami.from_images(h, v, name)
