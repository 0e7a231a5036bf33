"""
Permutations of ``{0, ..., n-1}``.

Composition convention: ``compose(p, q)`` (also written ``p * q``) applies
``q`` first and then ``p``, so ``(p * q)(i) == p(q(i))``.  Everything
downstream (vertex permutation, SL(2, Z) action) is stated relative to
this order.

Text I/O uses 1-based cycle notation, e.g. ``"(1,2,3)(4,5)"``; internally
everything is 0-based.
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Sequence

__all__ = [
    "CycleParseError",
    "MalformedCycleError",
    "NotTransitiveError",
    "Permutation",
    "RepeatedElementError",
    "SizeMismatchError",
    "ValueOutOfRangeError",
    "centralizer",
    "commutator",
    "compose",
    "conjugate",
    "cycle_type",
    "inverse",
    "is_transitive",
    "orbit_of",
    "parse_cycles",
    "print_cycles",
]


class CycleParseError(ValueError):
    """Base class for errors raised while reading cycle notation."""


class MalformedCycleError(CycleParseError):
    pass


class RepeatedElementError(CycleParseError):
    pass


class ValueOutOfRangeError(CycleParseError):
    pass


class SizeMismatchError(ValueError):
    pass


class NotTransitiveError(ValueError):
    pass


class Permutation:
    """
    An immutable bijection on ``{0, ..., n-1}``.

    ``images[i]`` is the image of ``i``.

    >>> p = Permutation([1, 2, 0])
    >>> p(0), p.cycles()
    (1, [(0, 1, 2)])
    >>> str(p)
    '(1,2,3)'
    """

    __slots__ = ("_images",)

    def __init__(self, images: Iterable[int]):
        images = tuple(images)
        n = len(images)
        if n < 1:
            raise ValueError("a permutation needs at least one point")
        seen = [False] * n
        for x in images:
            if not isinstance(x, int) or not 0 <= x < n or seen[x]:
                raise ValueError(f"{images!r} is not a bijection on range({n})")
            seen[x] = True
        self._images = images

    @classmethod
    def _trusted(cls, images: tuple[int, ...]) -> Permutation:
        # skips validation; callers guarantee a bijection
        p = object.__new__(cls)
        p._images = images
        return p

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(range(n))

    @classmethod
    def from_cycles(cls, text: str, n: int) -> Permutation:
        return parse_cycles(text, n)

    @property
    def images(self) -> tuple[int, ...]:
        return self._images

    @property
    def n(self) -> int:
        return len(self._images)

    def __len__(self) -> int:
        return len(self._images)

    def __call__(self, i: int) -> int:
        return self._images[i]

    def __getitem__(self, i: int) -> int:
        return self._images[i]

    def __iter__(self):
        return iter(self._images)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._images == other._images

    def __lt__(self, other: Permutation) -> bool:
        return self._images < other._images

    def __hash__(self) -> int:
        return hash(self._images)

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def __pow__(self, k: int) -> Permutation:
        return self.power(k)

    def __repr__(self) -> str:
        return f"Permutation({list(self._images)!r})"

    def __str__(self) -> str:
        return print_cycles(self)

    def inverse(self) -> Permutation:
        return inverse(self)

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self._images))

    def power(self, k: int) -> Permutation:
        """``self`` composed with itself ``k`` times; negative ``k`` is allowed."""
        out = [0] * self.n
        for cyc in self.cycles():
            m = len(cyc)
            s = k % m
            for pos, x in enumerate(cyc):
                out[x] = cyc[(pos + s) % m]
        return Permutation._trusted(tuple(out))

    def cycles(self, include_fixed: bool = True) -> list[tuple[int, ...]]:
        """Cycles ordered by their least element, each starting at it."""
        seen = [False] * self.n
        out = []
        for i in range(self.n):
            if seen[i]:
                continue
            cyc = []
            j = i
            while not seen[j]:
                seen[j] = True
                cyc.append(j)
                j = self._images[j]
            if include_fixed or len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        return cycle_type(self)

    def order(self) -> int:
        from math import lcm

        return lcm(*(len(c) for c in self.cycles()))


def _check_sizes(*perms: Permutation) -> int:
    sizes = {p.n for p in perms}
    if len(sizes) != 1:
        raise SizeMismatchError(f"permutations on different sets: sizes {sorted(sizes)}")
    return sizes.pop()


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Apply ``q`` first, then ``p``."""
    _check_sizes(p, q)
    pi = p._images
    return Permutation._trusted(tuple(pi[x] for x in q._images))


def inverse(p: Permutation) -> Permutation:
    out = [0] * p.n
    for i, x in enumerate(p._images):
        out[x] = i
    return Permutation._trusted(tuple(out))


def commutator(p: Permutation, q: Permutation) -> Permutation:
    """``p q p^-1 q^-1`` under the right-acts-first order."""
    _check_sizes(p, q)
    return compose(p, compose(q, compose(inverse(p), inverse(q))))


def conjugate(p: Permutation, q: Permutation) -> Permutation:
    """``q p q^-1``: the permutation ``p`` after renaming each point ``i`` to ``q(i)``."""
    _check_sizes(p, q)
    out = [0] * p.n
    qi = q._images
    for i, x in enumerate(p._images):
        out[qi[i]] = qi[x]
    return Permutation._trusted(tuple(out))


def cycle_type(p: Permutation) -> tuple[int, ...]:
    """Lengths of all cycles, fixed points included, in decreasing order."""
    return tuple(sorted((len(c) for c in p.cycles()), reverse=True))


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, n: int) -> Permutation:
    """
    Read 1-based cycle notation.

    Omitted points are fixed.  Whitespace is ignored.

    >>> parse_cycles("(1,3)(2,4)", 4).images
    (2, 3, 0, 1)
    >>> parse_cycles("", 3).is_identity()
    True
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    compact = "".join(text.split())
    pos = 0
    cycles: list[list[int]] = []
    for match in _CYCLE_RE.finditer(compact):
        if match.start() != pos:
            raise MalformedCycleError(f"unexpected text {compact[pos:match.start()]!r}")
        pos = match.end()
        body = match.group(1)
        if not body:
            raise MalformedCycleError("empty cycle '()'")
        values = []
        for token in body.split(","):
            if not token.isdigit():
                raise MalformedCycleError(f"not a positive integer: {token!r}")
            values.append(int(token))
        cycles.append(values)
    if pos != len(compact):
        raise MalformedCycleError(f"unexpected text {compact[pos:]!r}")

    images = list(range(n))
    used = set()
    for cyc in cycles:
        for x in cyc:
            if not 1 <= x <= n:
                raise ValueOutOfRangeError(f"{x} is outside 1..{n}")
            if x in used:
                raise RepeatedElementError(f"{x} appears more than once")
            used.add(x)
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            images[a - 1] = b - 1
    return Permutation._trusted(tuple(images))


def print_cycles(p: Permutation) -> str:
    """1-based cycle notation without fixed points; the identity prints as ``""``."""
    return "".join("(" + ",".join(str(x + 1) for x in c) + ")" for c in p.cycles(include_fixed=False))


def orbit_of(gens: Sequence[Permutation], start: int) -> list[int]:
    """Points reachable from ``start``, in breadth-first order."""
    seen = {start}
    order = [start]
    k = 0
    while k < len(order):
        x = order[k]
        k += 1
        for g in gens:
            y = g._images[x]
            if y not in seen:
                seen.add(y)
                order.append(y)
    return order


def is_transitive(gens: Sequence[Permutation], n: int) -> bool:
    for g in gens:
        if g.n != n:
            raise SizeMismatchError(f"generator on {g.n} points, expected {n}")
    if not gens:
        return n == 1
    return len(orbit_of(gens, 0)) == n


def extend_equivariant(
    src: Sequence[Permutation], dst: Sequence[Permutation], image_of_zero: int
) -> Permutation | None:
    """
    The unique bijection ``q`` with ``q(0) = image_of_zero`` and
    ``q src[k] = dst[k] q`` for all ``k``, or ``None``.

    ``src`` must generate a transitive group.
    """
    n = src[0].n
    q = [-1] * n
    q[0] = image_of_zero
    hit = [False] * n
    hit[image_of_zero] = True
    stack = [0]
    while stack:
        x = stack.pop()
        qx = q[x]
        for a, b in zip(src, dst):
            y = a._images[x]
            z = b._images[qx]
            if q[y] < 0:
                if hit[z]:
                    return None
                q[y] = z
                hit[z] = True
                stack.append(y)
            elif q[y] != z:
                return None
    if min(q) < 0:
        return None
    return Permutation._trusted(tuple(q))


def centralizer(gens: Sequence[Permutation], n: int) -> list[Permutation]:
    """
    All permutations commuting with every generator of a transitive group.

    The centralizer of a transitive group acts semiregularly, so an element
    is pinned down by where it sends 0; each of the ``n`` candidates is
    extended along the generators and kept if it is consistent.
    """
    gens = list(gens)
    if not is_transitive(gens, n):
        raise NotTransitiveError("centralizer requires a transitive generating set")
    if not gens:
        return [Permutation.identity(1)]
    out = []
    for c in range(n):
        q = extend_equivariant(gens, gens, c)
        if q is not None:
            out.append(q)
    return out
