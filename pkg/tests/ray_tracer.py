"""
Straight-line tracing on a square-tiled surface, in exact arithmetic.

Test-side oracle for the shear-based enumerator.  Rays start at every
singular corner in every primitive direction and are followed square by
square until they hit a singular corner or run past the radius.
"""

from fractions import Fraction
from math import gcd, isqrt


def _corner_vertex(h, v, j, cx, cy):
    # square whose bottom-left corner is corner (cx, cy) of square j
    if (cx, cy) == (0, 0):
        return j
    if (cx, cy) == (1, 0):
        return h[j]
    if (cx, cy) == (0, 1):
        return v[j]
    return v[h[j]]


def _diagonal(h, v, hi, vi, j, cx, cy):
    # square across the (regular) corner (cx, cy) of square j
    j = h[j] if cx else hi[j]
    return v[j] if cy else vi[j]


def _trace_oblique(h, v, labels, p, q, limit):
    hi = [0] * len(h)
    vi = [0] * len(v)
    for i, x in enumerate(h):
        hi[x] = i
    for i, x in enumerate(v):
        vi[x] = i
    cx0, cy0 = (0 if p > 0 else 1), (0 if q > 0 else 1)
    out = []
    for j0 in range(len(h)):
        start = labels[_corner_vertex(h, v, j0, cx0, cy0)]
        if start < 0:
            continue
        j, x, y = j0, Fraction(cx0), Fraction(cy0)
        t = Fraction(0)
        while t <= limit:
            tx = (1 - x) / p if p > 0 else x / -p
            ty = (1 - y) / q if q > 0 else y / -q
            if tx == ty:
                t += tx
                cx, cy = (1 if p > 0 else 0), (1 if q > 0 else 0)
                lab = labels[_corner_vertex(h, v, j, cx, cy)]
                if lab >= 0:
                    if t <= limit:
                        out.append((int(t) * p, int(t) * q, start, lab))
                    break
                j = _diagonal(h, v, hi, vi, j, cx, cy)
                x, y = Fraction(1 - cx), Fraction(1 - cy)
            elif tx < ty:
                t += tx
                y += q * tx
                j, x = (h[j], Fraction(0)) if p > 0 else (hi[j], Fraction(1))
            else:
                t += ty
                x += p * ty
                j, y = (v[j], Fraction(0)) if q > 0 else (vi[j], Fraction(1))
    return out


def _trace_axis(h, v, labels, p, q, limit):
    # rays along edges; going right or up the next corner is the bottom-left
    # of the next square, going left or down it is the bottom-left of this one
    hi = [0] * len(h)
    vi = [0] * len(v)
    for i, x in enumerate(h):
        hi[x] = i
    for i, x in enumerate(v):
        vi[x] = i
    fwd = {(1, 0): h, (0, 1): v}
    back = {(-1, 0): (h, hi), (0, -1): (v, vi)}
    out = []
    for j0 in range(len(h)):
        if (p, q) in fwd:
            step = fwd[(p, q)]
            start = labels[j0]
            if start < 0:
                continue
            pos, m = step[j0], 1
            while labels[pos] < 0 and m <= limit:
                pos, m = step[pos], m + 1
            end = labels[pos]
        else:
            nxt, step = back[(p, q)]
            start = labels[nxt[j0]]
            if start < 0:
                continue
            pos, m = j0, 1
            while labels[pos] < 0 and m <= limit:
                pos, m = step[pos], m + 1
            end = labels[pos]
        if m <= limit:
            out.append((m * p, m * q, start, end))
    return out


def trace_saddles(h, v, labels, R):
    """All oriented saddle connections ``(x, y, start, end)`` with ``|(x, y)| <= R``."""
    out = []
    top = isqrt(int(R * R))
    for p in range(-top, top + 1):
        for q in range(-top, top + 1):
            if (p, q) == (0, 0) or gcd(p, q) != 1 or p * p + q * q > R * R:
                continue
            limit = Fraction(isqrt(int(R * R / (p * p + q * q))))
            while (limit + 1) ** 2 * (p * p + q * q) <= R * R:
                limit += 1
            if p and q:
                out += _trace_oblique(h, v, labels, p, q, limit)
            else:
                out += _trace_axis(h, v, labels, p, q, limit)
    return sorted(out)
