"""Diagonals, partial triangulations, central symmetry and flips of convex polygons.

Vertices of the n-gon are labelled 0..n-1 counterclockwise, vertex j sitting at
angle 2*pi*j/n.  Boundary edges are never stored; a partial triangulation is
just its set of pairwise noncrossing diagonals.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .errors import CapacityError, InputError

ENUMERATION_CAP = 16


class Diagonal(NamedTuple):
    a: int
    b: int

    def __str__(self):
        return f"{{{self.a},{self.b}}}"


def diagonal(i: int, j: int, n: int) -> Diagonal:
    """Canonical diagonal of the n-gon joining vertices i and j (taken mod n)."""
    i, j = i % n, j % n
    d = Diagonal(min(i, j), max(i, j))
    check_diagonal(d, n)
    return d


def check_diagonal(d, n: int) -> None:
    a, b = d
    if not (0 <= a < b < n):
        raise InputError(f"{tuple(d)} is not a canonical vertex pair of the {n}-gon")
    if b - a < 2 or (a == 0 and b == n - 1):
        raise InputError(f"{tuple(d)} is a boundary edge of the {n}-gon")


def crosses(d1, d2, n: int) -> bool:
    """True iff the two diagonals meet in the interior of the n-gon."""
    check_diagonal(d1, n)
    check_diagonal(d2, n)
    return _crosses(d1, d2)


def _crosses(d1, d2) -> bool:
    a, b = d1
    c, d = d2
    if a == c or a == d or b == c or b == d:
        return False
    return (a < c < b) != (a < d < b)


@dataclass(frozen=True, init=False)
class PartialTriangulation:
    n: int
    diagonals: frozenset

    def __init__(self, n: int, diagonals: Iterable = ()):
        if n < 3:
            raise InputError(f"polygon size must be at least 3, got {n}")
        diags = frozenset(Diagonal(*map(int, d)) for d in diagonals)
        for d in diags:
            check_diagonal(d, n)
        ds = sorted(diags)
        for i, d1 in enumerate(ds):
            for d2 in ds[i + 1:]:
                if _crosses(d1, d2):
                    raise InputError(f"diagonals {d1} and {d2} cross")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "diagonals", diags)

    @classmethod
    def _trusted(cls, n: int, diagonals) -> "PartialTriangulation":
        # Skips validation; only for sets produced by the enumerators below.
        obj = object.__new__(cls)
        object.__setattr__(obj, "n", n)
        object.__setattr__(obj, "diagonals", frozenset(diagonals))
        return obj

    def __len__(self):
        return len(self.diagonals)

    def __contains__(self, d):
        return tuple(d) in self.diagonals

    def __repr__(self):
        return f"PartialTriangulation({self.n}, {[tuple(d) for d in self.sorted()]})"

    def sorted(self) -> list:
        return sorted(self.diagonals)

    def key(self) -> tuple:
        """Sort key giving the lexicographic order on sorted diagonal lists."""
        return tuple(self.sorted())

    @property
    def is_triangulation(self) -> bool:
        return len(self.diagonals) == self.n - 3

    def to_dict(self) -> dict:
        return {"n": self.n, "diagonals": [[d.a, d.b] for d in self.sorted()]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "PartialTriangulation":
        return cls(int(data["n"]), [tuple(d) for d in data["diagonals"]])

    @classmethod
    def from_json(cls, text: str) -> "PartialTriangulation":
        return cls.from_dict(json.loads(text))


def _check_size(n: int) -> None:
    if n < 3:
        raise InputError(f"polygon size must be at least 3, got {n}")
    if n > ENUMERATION_CAP:
        raise CapacityError(f"exhaustive enumeration is capped at n={ENUMERATION_CAP}, got {n}")


def all_diagonals(n: int) -> list:
    return [Diagonal(a, b) for a in range(n) for b in range(a + 2, n)
            if not (a == 0 and b == n - 1)]


def _triangulate(vertices: tuple) -> list:
    """All diagonal sets triangulating the convex polygon with the given corners."""
    if len(vertices) < 4:
        return [()]
    first, last = vertices[0], vertices[-1]
    out = []
    # apex of the triangle resting on the edge (first, last)
    for k in range(1, len(vertices) - 1):
        apex = vertices[k]
        new = []
        if k > 1:
            new.append(Diagonal(first, apex))
        if k < len(vertices) - 2:
            new.append(Diagonal(apex, last))
        for left in _triangulate(vertices[:k + 1]):
            for right in _triangulate(vertices[k:]):
                out.append(tuple(new) + left + right)
    return out


def enumerate_triangulations(n: int) -> list:
    """All triangulations of the n-gon in lexicographic order."""
    _check_size(n)
    result = [PartialTriangulation._trusted(n, ds) for ds in _triangulate(tuple(range(n)))]
    result.sort(key=PartialTriangulation.key)
    return result


def enumerate_partial_triangulations(n: int) -> list:
    """All noncrossing diagonal sets of the n-gon (the empty set included)."""
    _check_size(n)
    diags = all_diagonals(n)
    out = []

    def extend(start, chosen):
        out.append(PartialTriangulation._trusted(n, chosen))
        for i in range(start, len(diags)):
            d = diags[i]
            if not any(_crosses(d, e) for e in chosen):
                chosen.append(d)
                extend(i + 1, chosen)
                chosen.pop()

    extend(0, [])
    out.sort(key=PartialTriangulation.key)
    return out


def catalan(k: int) -> int:
    return math.comb(2 * k, k) // (k + 1)


# -- central symmetry -------------------------------------------------------

def _check_even(n: int) -> None:
    if n % 2:
        raise InputError(f"central symmetry needs an even polygon, got n={n}")


def half_turn(d, n: int) -> Diagonal:
    """Image of a diagonal under the half-rotation j -> j + n/2 of the n-gon."""
    _check_even(n)
    h = n // 2
    return diagonal(d[0] + h, d[1] + h, n)


def is_central(d, n: int) -> bool:
    return d[1] - d[0] == n // 2


def orbit(d, n: int) -> frozenset:
    """The half-turn orbit of a diagonal: a diameter alone, or a pair."""
    d = Diagonal(*d)
    return frozenset({d, half_turn(d, n)})


def is_centrally_symmetric(pt: PartialTriangulation) -> bool:
    _check_even(pt.n)
    return all(half_turn(d, pt.n) in pt.diagonals for d in pt.diagonals)


def symmetric_orbits(pt: PartialTriangulation) -> list:
    """Partition the diagonals of a symmetric partial triangulation into orbits."""
    if not is_centrally_symmetric(pt):
        raise InputError("partial triangulation is not centrally symmetric")
    seen = set()
    out = []
    for d in pt.sorted():
        if d not in seen:
            o = orbit(d, pt.n)
            seen |= o
            out.append(o)
    return out


def all_orbits(n: int) -> list:
    """Every half-turn orbit of diagonals of the n-gon, ordered by smallest member."""
    _check_even(n)
    seen = set()
    out = []
    for d in all_diagonals(n):
        if d not in seen:
            o = orbit(d, n)
            seen |= o
            out.append(o)
    return out


def enumerate_symmetric_triangulations(n2: int) -> list:
    """Centrally symmetric triangulations of the n2-gon in lexicographic order.

    Every such triangulation contains exactly one diameter {a, a+n}; the rest is
    a triangulation of one half mirrored onto the other.
    """
    _check_even(n2)
    if n2 < 4:
        raise InputError(f"need an even polygon with at least 4 sides, got {n2}")
    _check_size(n2)
    h = n2 // 2
    out = []
    for a in range(h):
        side = tuple(range(a, a + h + 1))
        for ds in _triangulate(side):
            members = {Diagonal(a, a + h)}
            for d in ds:
                members.add(diagonal(d[0], d[1], n2))
                members.add(diagonal(d[0] + h, d[1] + h, n2))
            out.append(PartialTriangulation._trusted(n2, members))
    out.sort(key=PartialTriangulation.key)
    return out


def enumerate_symmetric_partial_triangulations(n2: int) -> list:
    """All centrally symmetric noncrossing diagonal sets of the n2-gon."""
    _check_even(n2)
    if n2 < 4:
        raise InputError(f"need an even polygon with at least 4 sides, got {n2}")
    _check_size(n2)
    orbits = [sorted(o) for o in all_orbits(n2)]
    out = []

    def extend(start, chosen):
        out.append(PartialTriangulation._trusted(n2, chosen))
        for i in range(start, len(orbits)):
            o = orbits[i]
            if not any(_crosses(d, e) for d in o for e in chosen):
                chosen.extend(o)
                extend(i + 1, chosen)
                del chosen[-len(o):]

    extend(0, [])
    out.sort(key=PartialTriangulation.key)
    return out


# -- regions and flips ------------------------------------------------------

def regions(pt: PartialTriangulation) -> list:
    """Complementary regions of a partial triangulation as counterclockwise vertex lists."""
    polys = [list(range(pt.n))]
    for a, b in pt.sorted():
        for idx, poly in enumerate(polys):
            if a in poly and b in poly:
                i, j = poly.index(a), poly.index(b)
                if i > j:
                    i, j = j, i
                polys[idx] = poly[i:j + 1]
                polys.append(poly[j:] + poly[:i + 1])
                break
    return [sorted(p) for p in polys]


def triangles(t: PartialTriangulation) -> list:
    """The n-2 triangles of a triangulation, each as a sorted vertex triple."""
    if not t.is_triangulation:
        raise InputError("not a full triangulation")
    return sorted(tuple(r) for r in regions(t))


def _edges(t: PartialTriangulation) -> set:
    n = t.n
    return set(t.diagonals) | {(j, j + 1) for j in range(n - 1)} | {(0, n - 1)}


def _apexes(t: PartialTriangulation, d) -> tuple:
    """The third corners of the two triangles adjacent to diagonal d."""
    edges = _edges(t)
    a, b = d

    def has(i, j):
        return (min(i, j), max(i, j)) in edges

    inner = [c for c in range(a + 1, b) if has(a, c) and has(c, b)]
    outer = [c for c in list(range(b + 1, t.n)) + list(range(a))
             if has(a, c) and has(c, b)]
    if len(inner) != 1 or len(outer) != 1:
        raise InputError(f"{d} does not bound two triangles")
    return inner[0], outer[0]


def flip(t: PartialTriangulation, d) -> PartialTriangulation:
    """Replace d by the other diagonal of the quadrilateral formed by its two triangles."""
    if not t.is_triangulation:
        raise InputError("flip needs a full triangulation")
    d = Diagonal(*d)
    if d not in t.diagonals:
        raise InputError(f"{d} is not a diagonal of the triangulation")
    c1, c2 = _apexes(t, d)
    new = diagonal(c1, c2, t.n)
    return PartialTriangulation._trusted(t.n, (t.diagonals - {d}) | {new})


def flipped_diagonal(t: PartialTriangulation, d) -> Diagonal:
    c1, c2 = _apexes(t, Diagonal(*d))
    return diagonal(c1, c2, t.n)


def symmetric_flip(t: PartialTriangulation, orb) -> PartialTriangulation:
    """Flip a diameter alone, or both members of a symmetric pair.

    Two members of a pair share no vertex, so they never bound a common
    triangle and the two flips do not interfere.
    """
    orb = frozenset(Diagonal(*d) for d in orb)
    if not orb or not orb <= t.diagonals:
        raise InputError("orbit is not contained in the triangulation")
    if not is_centrally_symmetric(t) or not t.is_triangulation:
        raise InputError("symmetric_flip needs a centrally symmetric triangulation")
    d = min(orb)
    if orb != orbit(d, t.n):
        raise InputError(f"{sorted(orb)} is not a half-turn orbit")
    out = t
    for member in sorted(orb):
        out = flip(out, member)
    return out


def share_triangle(t: PartialTriangulation, d1, d2) -> bool:
    """True iff two diagonals of a triangulation are sides of a common triangle."""
    s1, s2 = set(d1), set(d2)
    common = s1 & s2
    if len(common) != 1:
        return False
    third = tuple(sorted((s1 | s2) - common))
    return third in _edges(t)


def rotate(pt: PartialTriangulation, shift: int) -> PartialTriangulation:
    """Relabel by the rotation j -> j + shift."""
    n = pt.n
    return PartialTriangulation._trusted(n, {diagonal(a + shift, b + shift, n) for a, b in pt.diagonals})


def reflect(pt: PartialTriangulation) -> PartialTriangulation:
    """Relabel by the reflection j -> -j."""
    n = pt.n
    return PartialTriangulation._trusted(n, {diagonal(-a, -b, n) for a, b in pt.diagonals})
