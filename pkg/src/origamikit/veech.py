"""
The SL(2, Z) action on origamis, orbits, and cusps.

Words are strings over ``T`` = [[1,1],[0,1]], ``S`` = [[0,-1],[1,0]] and
their inverses ``t``, ``s``.  A word stands for the left-to-right product
of its letters, so acting with ``"TS"`` on a surface applies ``S`` first.

``T`` shears horizontally: ``(h, v) -> (h, v h^-1)``.  ``S`` turns the
surface a quarter turn counterclockwise: ``(h, v) -> (v^-1, h)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import groupby
from math import gcd

from .origami import Origami, canonical_form, canonical_key, rotate
from .perm import Permutation, compose, inverse, print_cycles

__all__ = [
    "CosetGraph",
    "Cusp",
    "apply_sl2z",
    "coset_permutations",
    "cusps",
    "invert_word",
    "normalizing_word",
    "orbit",
    "word_matrix",
]

Matrix = tuple[tuple[int, int], tuple[int, int]]

GENERATORS: dict[str, Matrix] = {
    "T": ((1, 1), (0, 1)),
    "t": ((1, -1), (0, 1)),
    "S": ((0, -1), (1, 0)),
    "s": ((0, 1), (-1, 0)),
}

# right-coset generators as words in T, S
COSET_WORDS = {"s2": "S", "s3": "st", "l": "T", "r": "Sts"}


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    return (
        (a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]),
        (a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]),
    )


def mat_inv(a: Matrix) -> Matrix:
    (p, q), (r, s) = a
    return ((s, -q), (-r, p))


def mat_vec(a: Matrix, v: tuple[int, int]) -> tuple[int, int]:
    return (a[0][0] * v[0] + a[0][1] * v[1], a[1][0] * v[0] + a[1][1] * v[1])


def word_matrix(word: str) -> Matrix:
    m: Matrix = ((1, 0), (0, 1))
    for ch in word:
        try:
            m = mat_mul(m, GENERATORS[ch])
        except KeyError:
            raise ValueError(f"unknown letter {ch!r} in word {word!r}") from None
    return m


def invert_word(word: str) -> str:
    return word[::-1].swapcase()


def normalizing_word(x: int, y: int) -> str:
    """
    A word whose matrix sends the primitive vector ``(x, y)`` to ``(1, 0)``.

    Euclid's algorithm: shear by ``T^-k`` to reduce ``x`` modulo ``y``, then
    turn clockwise so the remainder becomes the new second coordinate.
    """
    if gcd(x, y) != 1:
        raise ValueError(f"direction ({x}, {y}) is not primitive")
    applied: list[str] = []
    while y != 0:
        k = x // y
        if k:
            applied.append(("t" if k > 0 else "T") * abs(k))
            x -= k * y
        applied.append("s")
        x, y = y, -x
    if x == -1:
        applied.append("SS")
    # letters applied later sit further left in the product
    return "".join(reversed(applied))


def _power(p: Permutation, k: int) -> Permutation:
    return p.power(k)


def act_with_labels(
    o: Origami, word: str, labels: list[int] | None = None
) -> tuple[Origami, list[int] | None]:
    """
    Apply ``word`` to ``o`` and carry a per-square label of bottom-left corners.

    Square names survive every move.  Shears keep each bottom-left corner
    in place; a quarter turn brings another corner of the same square to
    the bottom-left, hence the relabeling.
    """
    h, v = o.sigma_h, o.sigma_v
    for ch, run in groupby(reversed(word)):
        k = len(list(run))
        if ch == "T":
            v = compose(v, _power(h, -k))
        elif ch == "t":
            v = compose(v, _power(h, k))
        elif ch in "Ss":
            turns = (k if ch == "S" else -k) % 4
            for _ in range(turns):
                if labels is not None:
                    labels = [labels[y] for y in v.images]
                h, v = inverse(v), h
        else:
            raise ValueError(f"unknown letter {ch!r} in word {word!r}")
    return Origami(h, v, o.name), labels


def apply_sl2z(o: Origami, word: str) -> Origami:
    return act_with_labels(o, word)[0]


@dataclass(frozen=True)
class CosetGraph:
    """
    The SL(2, Z)-orbit of an origami, up to isomorphism.

    ``nodes[i]`` are canonical forms with ``nodes[0]`` the input's.  The
    maps record the left action: ``nodes[t_map(i)]`` is ``T . nodes[i]``.
    ``words[i]`` satisfies ``apply_sl2z(base, words[i]) ~ nodes[i]``.
    """

    base: Origami
    nodes: tuple[Origami, ...]
    t_map: Permutation
    s_map: Permutation
    words: tuple[str, ...]
    minus_identity_in_veech_group: bool = field(default=False)

    @property
    def index(self) -> int:
        return len(self.nodes)

    def to_json(self) -> dict:
        perms = coset_permutations(self)
        return {
            "index": self.index,
            "minus_identity_in_veech_group": self.minus_identity_in_veech_group,
            "generators": {k: print_cycles(p) for k, p in perms.items()},
            "cusps": [c.to_json() for c in cusps(self)],
        }

    def to_dot(self) -> str:
        lines = ["digraph coset_graph {"]
        for i in range(self.index):
            word = self.words[i] or "1"
            lines.append(f'  {i + 1} [label="{i + 1}: {word}"];')
        for i in range(self.index):
            lines.append(f'  {i + 1} -> {self.t_map(i) + 1} [label="T"];')
            lines.append(f'  {i + 1} -> {self.s_map(i) + 1} [label="S", style=dashed];')
        lines.append("}")
        return "\n".join(lines) + "\n"


class OrbitTooLarge(RuntimeError):
    pass


def orbit(o: Origami, max_nodes: int = 10**6) -> CosetGraph:
    start, _ = canonical_form(o)
    nodes = [start]
    keys = {canonical_key(start): 0}
    words = [""]
    t_img: list[int] = []
    s_img: list[int] = []
    k = 0
    while k < len(nodes):
        x = nodes[k]
        for letter, images in (("T", t_img), ("S", s_img)):
            y = apply_sl2z(x, letter)
            key = canonical_key(y)
            j = keys.get(key)
            if j is None:
                if len(nodes) >= max_nodes:
                    raise OrbitTooLarge(f"orbit exceeds {max_nodes} nodes")
                j = len(nodes)
                keys[key] = j
                nodes.append(Origami(Permutation._trusted(key[0]), Permutation._trusted(key[1]), o.name))
                words.append(letter + words[k])
            images.append(j)
        k += 1
    minus_i = keys.get(canonical_key(rotate(start, 2))) == 0
    return CosetGraph(
        base=o,
        nodes=tuple(nodes),
        t_map=Permutation._trusted(tuple(t_img)),
        s_map=Permutation._trusted(tuple(s_img)),
        words=tuple(words),
        minus_identity_in_veech_group=minus_i,
    )


def node_action(g: CosetGraph, word: str) -> Permutation:
    """Left action ``X -> A . X`` of the word's matrix ``A`` on nodes."""
    letters = {"T": g.t_map, "t": inverse(g.t_map), "S": g.s_map, "s": inverse(g.s_map)}
    p = Permutation.identity(g.index)
    for ch in word:
        p = compose(p, letters[ch])
    return p


def coset_action(g: CosetGraph, word: str) -> Permutation:
    """
    Right action of the word's matrix on the cosets ``Gamma \\ SL(2, Z)``.

    The coset ``Gamma g`` is the node ``g^-1 . base``, so right
    multiplication by ``A`` sends node ``X`` to ``A^-1 . X``.
    """
    return node_action(g, invert_word(word))


def coset_permutations(g: CosetGraph) -> dict[str, Permutation]:
    """Node permutations of s2, s3, l and r acting on right cosets."""
    return {name: coset_action(g, w) for name, w in COSET_WORDS.items()}


@dataclass(frozen=True)
class Cusp:
    id: int
    width: int
    node: int
    word: str
    direction: tuple[int, int]

    @property
    def matrix(self) -> Matrix:
        return word_matrix(self.word)

    @property
    def label(self) -> str:
        x, y = self.direction
        if y == 0:
            return "inf"
        f = Fraction(x, y)
        return str(f)

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "width": self.width,
            "node": self.node + 1,
            "word": self.word,
            "direction": list(self.direction),
            "label": self.label,
        }


def _upper(v: tuple[int, int]) -> tuple[int, int]:
    x, y = v
    if y < 0 or (y == 0 and x < 0):
        return (-x, -y)
    return (x, y)


def cusps(g: CosetGraph) -> list[Cusp]:
    """
    One cusp per cycle of the ``T`` action on nodes.

    The representative is the least node of the cycle; its horizontal
    direction is ``M^-1 (1, 0)`` on the base surface where ``M`` is the
    node's word.
    """
    out = []
    for k, cyc in enumerate(g.t_map.cycles()):
        node = min(cyc)
        word = g.words[node]
        direction = _upper(mat_vec(mat_inv(word_matrix(word)), (1, 0)))
        out.append(Cusp(k, len(cyc), node, word, direction))
    return out
