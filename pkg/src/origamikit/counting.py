"""
Exact Siegel-Veech constants of square-tiled surfaces.

On a lattice surface every saddle connection and every cylinder core lies
in a periodic direction, and each cusp of the Veech group contributes the
orbit of one such direction.  A cusp of width ``w`` in a group of index
``d`` carries the fraction ``w/d`` of all primitive directions, so a
holonomy vector ``m`` times a primitive vector adds ``(w/d) / m^2`` to the
normalized quadratic growth rate.  This gives

    c = sum_cusps (w/d) * sum_{distinct segment lengths m} 1/m^2
    a = sum_cusps (w/d) * sum_{cylinders} area / m^2

with growth normalized as ``zeta(2) N(R) / (pi R^2)``.  Holonomy vectors
are counted as a set, so parallel segments of equal length count once;
cylinders are counted individually, each weighted by its area.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cylinders import direction_decomposition, direction_segments
from .origami import Origami
from .veech import CosetGraph, cusps, orbit

__all__ = ["CuspSpectrum", "SVConstants", "cusp_spectra", "format_table", "sv_constants"]


def frac_str(x: Fraction) -> str:
    return str(x)


@dataclass(frozen=True)
class CuspSpectrum:
    cusp: int
    width: int
    direction: tuple[int, int]
    segment_lengths: tuple[int, ...]
    cylinders: tuple[tuple[int, int], ...]  # (m, area)

    def to_json(self) -> dict:
        return {
            "cusp": self.cusp,
            "width": self.width,
            "direction": list(self.direction),
            "segment_lengths": list(self.segment_lengths),
            "cylinders": [{"m": m, "area": a} for m, a in self.cylinders],
        }


@dataclass(frozen=True)
class SVConstants:
    c: Fraction
    c1: Fraction
    a: Fraction
    a1: Fraction
    n: int

    def to_json(self) -> dict:
        return {
            "c": frac_str(self.c),
            "c1": frac_str(self.c1),
            "a": frac_str(self.a),
            "a1": frac_str(self.a1),
            "n": self.n,
        }


def cusp_spectra(
    o: Origami, graph: CosetGraph | None = None, marked_points: bool | None = None
) -> list[CuspSpectrum]:
    """
    Segment lengths and cylinders in each cusp direction.

    With ``marked_points=None`` the vertices of a surface without zeros are
    marked, so that the torus counts its lattice vectors.  On an unmarked
    surface without singularities the segment set is empty and the
    cylinder core lengths stand in for it.
    """
    if graph is None:
        graph = orbit(o)
    out = []
    for cusp in cusps(graph):
        cyl = direction_decomposition(o, cusp.direction, marked_points)
        seg = direction_segments(o, cusp.direction, marked_points)
        lengths = {s.m for s in seg} or {c.m for c in cyl}
        cylinders = tuple(sorted((c.m, c.area) for c in cyl))
        out.append(CuspSpectrum(cusp.id, cusp.width, cusp.direction, tuple(sorted(lengths)), cylinders))
    return out


def constants_from_spectra(spectra: list[CuspSpectrum], n: int) -> SVConstants:
    d = sum(s.width for s in spectra)
    c = Fraction(0)
    a = Fraction(0)
    for s in spectra:
        weight = Fraction(s.width, d)
        c += weight * sum(Fraction(1, m * m) for m in s.segment_lengths)
        a += weight * sum(Fraction(area, m * m) for m, area in s.cylinders)
    return SVConstants(c, c * n, a, a * n, n)


def sv_constants(
    o: Origami, graph: CosetGraph | None = None, marked_points: bool | None = None
) -> SVConstants:
    return constants_from_spectra(cusp_spectra(o, graph, marked_points), o.n)


def format_table(rows: list[tuple[str, SVConstants]]) -> str:
    """Text table with one surface per row and columns c, c1, a, a1."""
    header = ("surface", "n", "c", "c1", "a", "a1")
    body = [
        (name, str(k.n), frac_str(k.c), frac_str(k.c1), frac_str(k.a), frac_str(k.a1))
        for name, k in rows
    ]
    widths = [max(len(r[i]) for r in [header, *body]) for i in range(len(header))]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip() for r in [header, *body]]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"
