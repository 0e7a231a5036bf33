"""
Cylinders and saddle segments in rational directions, and the closed
saddle connection report.

Everything is computed horizontally.  A rational direction is first
turned horizontal by an SL(2, Z) word (see :func:`normalizing_word`);
square names survive the action, and singularity ids are carried along
so that endpoints always refer to the input surface.
"""

from __future__ import annotations

import warnings
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from math import gcd

from .origami import (
    AffineAutomorphism,
    Origami,
    _resolve_marked,
    automorphism_group,
    corner_labels,
    is_affine_automorphism,
    singularities,
    vertex_map,
    vertices,
)
from .perm import Permutation
from .veech import CosetGraph, act_with_labels, cusps, normalizing_word, orbit

__all__ = [
    "ClosedReport",
    "CuspReport",
    "Cylinder",
    "NoSingularityWarning",
    "SaddleSegment",
    "closed_saddle_report",
    "direction_decomposition",
    "direction_segments",
    "fiber_partition",
    "horizontal_decomposition",
    "horizontal_saddle_segments",
]


class NoSingularityWarning(UserWarning):
    pass


@dataclass(frozen=True)
class Cylinder:
    m: int
    h: int
    rows: tuple[tuple[int, ...], ...]

    @property
    def area(self) -> int:
        return self.m * self.h

    def to_json(self) -> dict:
        return {"m": self.m, "h": self.h, "area": self.area}


@dataclass(frozen=True)
class SaddleSegment:
    m: int
    start: int
    end: int
    leaf: int

    @property
    def closed(self) -> bool:
        return self.start == self.end

    def to_json(self) -> dict:
        return {"m": self.m, "start": self.start, "end": self.end}


def _find(parent: list[int], x: int) -> int:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def _decompose(h: Permutation, v: Permutation, labels: Sequence[int]) -> list[Cylinder]:
    rows = h.cycles()
    row_of = [0] * h.n
    for k, r in enumerate(rows):
        for x in r:
            row_of[x] = k
    parent = list(range(len(rows)))
    # above[k]: the row sitting on top of row k, if the line between is regular
    above: dict[int, int] = {}
    for k, r in enumerate(rows):
        if all(labels[v(x)] < 0 for x in r):
            up = row_of[v(r[0])]
            above[k] = up
            parent[_find(parent, k)] = _find(parent, up)

    groups: dict[int, list[int]] = {}
    for k in range(len(rows)):
        groups.setdefault(_find(parent, k), []).append(k)

    below = {up: k for k, up in above.items()}
    out = []
    for members in groups.values():
        # start at the bottom row if there is one
        bottom = next((k for k in members if k not in below), members[0])
        ordered = [bottom]
        while len(ordered) < len(members):
            ordered.append(above[ordered[-1]])
        cyl_rows = tuple(rows[k] for k in ordered)
        out.append(Cylinder(len(cyl_rows[0]), len(cyl_rows), cyl_rows))
    out.sort(key=lambda c: min(min(r) for r in c.rows))
    return out


def _segments(h: Permutation, labels: Sequence[int]) -> list[SaddleSegment]:
    out = []
    for x in range(h.n):
        if labels[x] < 0:
            continue
        j, m = h(x), 1
        while labels[j] < 0:
            j, m = h(j), m + 1
        out.append(SaddleSegment(m, labels[x], labels[j], x))
    return out


def horizontal_decomposition(o: Origami, marked_points: bool | None = False) -> list[Cylinder]:
    """
    Horizontal cylinders.

    Rows are the cycles of ``sigma_h``.  A row and the row above it belong
    to the same cylinder when no singular vertex lies on the line between
    them, i.e. when none of the squares above the row has a singular
    bottom-left corner.
    """
    return _decompose(o.sigma_h, o.sigma_v, corner_labels(o, marked_points))


def horizontal_saddle_segments(o: Origami, marked_points: bool | None = False) -> list[SaddleSegment]:
    """
    Horizontal saddle connections, one per singular corner.

    Each starts at the bottom-left corner of a square and runs right along
    bottom edges until it meets the next singular corner.  On a surface
    without singularities the list is empty and a warning is issued.
    """
    labels = corner_labels(o, marked_points)
    if all(x < 0 for x in labels):
        warnings.warn("surface has no singularities; no saddle connections", NoSingularityWarning, stacklevel=2)
        return []
    return _segments(o.sigma_h, labels)


def _turned(o: Origami, direction: tuple[int, int], marked_points: bool | None):
    x, y = direction
    if gcd(x, y) != 1:
        raise ValueError(f"direction {direction} is not primitive")
    word = normalizing_word(x, y)
    return act_with_labels(o, word, corner_labels(o, marked_points))


def direction_decomposition(
    o: Origami, direction: tuple[int, int], marked_points: bool | None = False
) -> list[Cylinder]:
    """Cylinders in a primitive integer direction; ``m`` counts multiples of it."""
    turned, labels = _turned(o, direction, marked_points)
    return _decompose(turned.sigma_h, turned.sigma_v, labels)


def direction_segments(
    o: Origami, direction: tuple[int, int], marked_points: bool | None = False
) -> list[SaddleSegment]:
    """Saddle connections parallel to ``direction``, endpoints as ids on ``o``."""
    turned, labels = _turned(o, direction, marked_points)
    return _segments(turned.sigma_h, labels)


def _as_affine(f) -> AffineAutomorphism:
    if isinstance(f, Permutation):
        return AffineAutomorphism(f, 0)
    return f


def fiber_partition(
    o: Origami,
    deck: Iterable[Permutation | AffineAutomorphism] | None = None,
    marked_points: bool | None = False,
) -> list[tuple[int, ...]]:
    """
    Singularity ids grouped by the orbits of ``deck``.

    ``deck`` defaults to the full translation automorphism group.  Elements
    may also be affine automorphisms with rotational derivative.
    """
    if deck is None:
        deck = automorphism_group(o)
    deck = [_as_affine(f) for f in deck]
    for f in deck:
        if not is_affine_automorphism(o, f):
            raise ValueError(f"{f} is not an automorphism of the surface")

    sing = singularities(o, marked_points)
    all_vertices = vertices(o)
    id_of = {all_vertices.index(s.squares): s.id for s in sing}
    parent = list(range(len(sing)))
    for f in deck:
        for a, b in vertex_map(o, f).items():
            if a in id_of:
                if b not in id_of:
                    raise ValueError("deck element sends a singularity to a regular point")
                parent[_find(parent, id_of[a])] = _find(parent, id_of[b])
    classes: dict[int, list[int]] = {}
    for s in sing:
        classes.setdefault(_find(parent, s.id), []).append(s.id)
    return sorted(tuple(c) for c in classes.values())


@dataclass(frozen=True)
class CuspReport:
    cusp: int
    direction: tuple[int, int]
    width: int
    cylinders: tuple[Cylinder, ...]
    segments: tuple[SaddleSegment, ...]
    violations: tuple[SaddleSegment, ...]

    def to_json(self) -> dict:
        return {
            "direction": list(self.direction),
            "width": self.width,
            "cylinders": [c.to_json() for c in self.cylinders],
            "segments": [s.to_json() for s in self.segments],
            "violations": [s.to_json() for s in self.violations],
        }


@dataclass(frozen=True)
class ClosedReport:
    name: str | None
    partition: tuple[tuple[int, ...], ...]
    cusps: tuple[CuspReport, ...] = field(default=())

    @property
    def violations(self) -> list[tuple[int, SaddleSegment]]:
        return [(c.cusp, s) for c in self.cusps for s in c.violations]

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "surface": self.name,
            "partition": [list(c) for c in self.partition],
            "closed_saddle_connections": len(self.violations),
            "cusps": [c.to_json() for c in self.cusps],
        }


def _class_map(partition: Sequence[Sequence[int]]) -> dict[int, int]:
    out = {}
    for k, cls in enumerate(partition):
        for s in cls:
            out[s] = k
    return out


def closed_saddle_report(
    o: Origami,
    partition: Sequence[Sequence[int]] | None = None,
    graph: CosetGraph | None = None,
    marked_points: bool | None = False,
) -> ClosedReport:
    """
    Saddle connections whose endpoints lie in one partition class, per cusp.

    Every periodic direction is equivalent under the Veech group to one of
    the cusp representatives, so checking those directions covers all
    saddle connections.  ``partition`` defaults to the discrete one, which
    flags saddle connections from a zero to itself.
    """
    sing = singularities(o, marked_points)
    if partition is None:
        partition = [(s.id,) for s in sing]
    cls = _class_map(partition)
    if graph is None:
        graph = orbit(o)
    reports = []
    for c in cusps(graph):
        cyl = direction_decomposition(o, c.direction, marked_points)
        seg = direction_segments(o, c.direction, marked_points)
        bad = tuple(s for s in seg if cls.get(s.start, -1 - s.start) == cls.get(s.end, -1 - s.end))
        reports.append(CuspReport(c.id, c.direction, c.width, tuple(cyl), tuple(seg), bad))
    return ClosedReport(o.name, tuple(tuple(p) for p in partition), tuple(reports))


def resolve_marked(o: Origami, marked_points: bool | None) -> bool:
    return _resolve_marked(o, marked_points)
