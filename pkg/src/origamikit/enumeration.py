"""
Brute-force enumeration of saddle connections and cylinders up to a radius.

This is the independent side of the counting code: instead of using the
Veech group it visits every primitive direction in the ball, turns it
horizontal and reads off segments and cylinders there.  All saddle
connections on a square-tiled surface have integer holonomy, so the
sweep is exhaustive.
"""

from __future__ import annotations

import csv
import io
import math
from collections.abc import Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .cylinders import Cylinder, SaddleSegment, _class_map, _decompose, _segments
from .origami import Origami, corner_labels, singularities
from .perm import Permutation, compose, inverse

__all__ = [
    "EmpiricalConstants",
    "SaddleVector",
    "brute_force_closed_check",
    "empirical_constants",
    "enumerate_saddles",
    "holonomy_set",
    "primitive_directions",
    "vectors_to_csv",
]


@dataclass(frozen=True, order=True)
class SaddleVector:
    x: int
    y: int
    start: int
    end: int
    m: int

    @property
    def holonomy(self) -> tuple[int, int]:
        return (self.x, self.y)

    @property
    def direction(self) -> tuple[int, int]:
        return (self.x // self.m, self.y // self.m)

    def to_json(self) -> dict:
        return {"holonomy": [self.x, self.y], "start": self.start, "end": self.end, "m": self.m}


def primitive_directions(R: float) -> list[tuple[int, int]]:
    """Primitive ``(p, q)`` with ``p^2 + q^2 <= R^2`` in the upper half plane, plus ``(1, 0)``."""
    r2 = R * R
    top = math.isqrt(int(r2))
    out = []
    for q in range(0, top + 1):
        for p in range(-top, top + 1):
            if p * p + q * q > r2:
                continue
            if q == 0 and p != 1:
                continue
            if math.gcd(p, q) == 1:
                out.append((p, q))
    return out


def _turn_horizontal(h: Permutation, v: Permutation, labels: list[int], p: int, q: int):
    # Euclid on (p, q), acting on the surface as we go: shear by T^-k, then
    # rotate clockwise.  Mirrors the word of veech.normalizing_word.
    x, y = p, q
    while y != 0:
        k = x // y
        if k:
            v = compose(v, h.power(k))
            x -= k * y
        labels = [labels[z] for z in h.images]
        h, v = v, inverse(h)
        x, y = y, -x
    if x == -1:
        # half turn: the old top-right corner becomes the bottom-left one
        labels = [labels[z] for z in compose(v, h).images]
        h, v = inverse(h), inverse(v)
    return h, v, labels


def _direction_data(
    h: Permutation, v: Permutation, labels: list[int], p: int, q: int
) -> tuple[list[SaddleSegment], list[Cylinder]]:
    h2, v2, lab2 = _turn_horizontal(h, v, labels, p, q)
    return _segments(h2, lab2), _decompose(h2, v2, lab2)


def _sweep_chunk(args):
    h_img, v_img, labels, dirs, R = args
    h = Permutation._trusted(h_img)
    v = Permutation._trusted(v_img)
    r2 = R * R
    out = []
    for p, q in dirs:
        seg, cyl = _direction_data(h, v, labels, p, q)
        norm2 = p * p + q * q
        seg = [(s.m, s.start, s.end) for s in seg if s.m * s.m * norm2 <= r2]
        cyl = [(c.m, c.area) for c in cyl if c.m * c.m * norm2 <= r2]
        out.append(((p, q), seg, cyl))
    return out


def _sweep(o: Origami, R: float, marked_points: bool | None, jobs: int):
    labels = corner_labels(o, marked_points)
    dirs = primitive_directions(R)
    if jobs <= 1 or len(dirs) < 64:
        return _sweep_chunk((o.sigma_h.images, o.sigma_v.images, labels, dirs, R))
    size = -(-len(dirs) // (jobs * 4))
    chunks = [dirs[i : i + size] for i in range(0, len(dirs), size)]
    payload = [(o.sigma_h.images, o.sigma_v.images, labels, c, R) for c in chunks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        # map keeps chunk order, so the merge does not depend on scheduling
        parts = list(pool.map(_sweep_chunk, payload))
    return [item for part in parts for item in part]


def enumerate_saddles(
    o: Origami, R: float, marked_points: bool | None = None, jobs: int = 1
) -> list[SaddleVector]:
    """
    Every oriented saddle connection with holonomy in the closed ball of radius ``R``.

    Each segment appears once per orientation, so a holonomy vector shared
    by several parallel segments appears several times; use
    :func:`holonomy_set` for the distinct vectors.  Output is sorted.
    """
    if R < 1:
        raise ValueError("radius must be at least 1")
    out = []
    for (p, q), seg, _ in _sweep(o, R, marked_points, jobs):
        for m, s, e in seg:
            out.append(SaddleVector(m * p, m * q, s, e, m))
            out.append(SaddleVector(-m * p, -m * q, e, s, m))
    out.sort()
    return out


def holonomy_set(vectors: Sequence[SaddleVector]) -> set[tuple[int, int]]:
    return {v.holonomy for v in vectors}


@dataclass(frozen=True)
class EmpiricalConstants:
    R: float
    N: int
    A: int
    ratio_c: float
    ratio_a: float

    def to_json(self, target_c: Fraction | None = None, target_a: Fraction | None = None) -> dict:
        out = {"R": self.R, "N": self.N, "A": self.A, "ratio_c": self.ratio_c, "ratio_a": self.ratio_a}
        if target_c is not None:
            out["target_c"] = str(target_c)
            out["rel_error_c"] = abs(self.ratio_c - float(target_c)) / float(target_c)
        if target_a is not None:
            out["target_a"] = str(target_a)
            out["rel_error_a"] = abs(self.ratio_a - float(target_a)) / float(target_a)
        return out


def empirical_constants(
    o: Origami, R: float, marked_points: bool | None = None, jobs: int = 1
) -> EmpiricalConstants:
    """
    ``N(R)``: distinct holonomy vectors of saddle connections in the ball.
    ``A(R)``: cylinder areas summed over cylinders whose core vector is in
    the ball, both orientations counted.  Ratios are ``zeta(2) X / (pi R^2)``.

    On an unmarked surface without singularities the cylinder cores take
    the place of saddle connections, as in the counting module.
    """
    if R < 1:
        raise ValueError("radius must be at least 1")
    N = 0
    A = 0
    for _, seg, cyl in _sweep(o, R, marked_points, jobs):
        lengths = {m for m, _, _ in seg} if seg or singularities(o, marked_points) else {m for m, _ in cyl}
        N += 2 * len(lengths)
        A += 2 * sum(area for _, area in cyl)
    scale = math.pi / (6 * R * R)
    return EmpiricalConstants(R, N, A, N * scale, A * scale)


def brute_force_closed_check(
    o: Origami,
    partition: Sequence[Sequence[int]] | None = None,
    R: float = 30,
    marked_points: bool | None = False,
    jobs: int = 1,
) -> list[SaddleVector]:
    """Saddle connections in the ball whose endpoints share a partition class."""
    if partition is None:
        partition = [(s.id,) for s in singularities(o, marked_points)]
    cls = _class_map(partition)
    return [
        v
        for v in enumerate_saddles(o, R, marked_points, jobs)
        if cls.get(v.start, -1 - v.start) == cls.get(v.end, -1 - v.end)
    ]


def vectors_to_csv(vectors: Sequence[SaddleVector]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["x", "y", "start", "end", "m"])
    for v in vectors:
        w.writerow([v.x, v.y, v.start, v.end, v.m])
    return buf.getvalue()
