"""Rational and dyadic Farey tessellations.

Rationals live on the boundary of the upper half-plane (with 1/0 = infinity);
the disc picture uses the Cayley-type map sending 0, 1, infinity to 1, i, -1.
Dyadic circle positions are ``Fraction`` values t in [0, 1), standing for the
point (cos 2*pi*t, sin 2*pi*t).  Everything except rendering is exact.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError


@dataclass(frozen=True)
class Rational:
    """Reduced p/q with q >= 0; infinity is 1/0."""

    p: int
    q: int

    def __post_init__(self):
        p, q = self.p, self.q
        if p == 0 and q == 0:
            raise InputError("0/0 is not a point of the projective line")
        if q < 0:
            p, q = -p, -q
        if q == 0:
            p = 1
        g = math.gcd(p, q)
        object.__setattr__(self, "p", p // g)
        object.__setattr__(self, "q", q // g)

    @classmethod
    def parse(cls, text: str) -> "Rational":
        text = text.strip()
        if text in ("inf", "oo", "infinity", "1/0"):
            return INFINITY
        if "/" in text:
            p, q = text.split("/")
            return cls(int(p), int(q))
        return cls(int(text), 1)

    @property
    def is_infinite(self) -> bool:
        return self.q == 0

    def to_fraction(self) -> Fraction:
        if self.is_infinite:
            raise InputError("infinity has no finite value")
        return Fraction(self.p, self.q)

    def __str__(self):
        return f"{self.p}/{self.q}"


INFINITY = Rational(1, 0)


def is_farey_neighbor(x: Rational, y: Rational) -> bool:
    return abs(x.p * y.q - y.p * x.q) == 1


def mediant(x: Rational, y: Rational) -> Rational:
    if not is_farey_neighbor(x, y):
        raise InputError(f"{x} and {y} are not Farey neighbours")
    return Rational(x.p + y.p, x.q + y.q)


def halfplane_to_disc(x: Rational) -> tuple:
    """Exact image on the unit circle of the map z -> (i - z)/(z + i).

    For real x this is ((1 - x^2), 2x) / (1 + x^2); infinity goes to (-1, 0).
    """
    if x.is_infinite:
        return (Fraction(-1), Fraction(0))
    p, q = x.p, x.q
    den = p * p + q * q
    return (Fraction(q * q - p * p, den), Fraction(2 * p * q, den))


def enumerate_rational_arcs(max_den: int, lo: Rational, hi: Rational) -> list:
    """Farey arcs inside [lo, hi] with both denominators at most max_den.

    Produced by mediant subdivision of the neighbour pair (lo, hi); the order
    is the in-order walk of the Stern-Brocot subtree.
    """
    if max_den < 1:
        raise InputError("max_den must be at least 1")
    if not is_farey_neighbor(lo, hi):
        raise InputError(f"{lo} and {hi} are not Farey neighbours")
    out = []
    stack = [(lo, hi)]
    while stack:
        a, b = stack.pop()
        if a.q > max_den or b.q > max_den:
            continue
        out.append((a, b))
        m = Rational(a.p + b.p, a.q + b.q)
        if m.q <= max_den:
            stack.append((m, b))
            stack.append((a, m))
    return out


# -- dyadic circle ----------------------------------------------------------

def dyadic(x) -> Fraction:
    """Coerce to a Fraction and check the denominator is a power of two."""
    f = Fraction(x)
    d = f.denominator
    if d & (d - 1):
        raise InputError(f"{f} is not dyadic")
    return f


def depth(x: Fraction) -> int:
    """k with denominator 2^k."""
    return dyadic(x).denominator.bit_length() - 1


def circle(x) -> Fraction:
    """Reduce a dyadic to the circle coordinate in [0, 1)."""
    return dyadic(x) % 1


def is_standard_interval(lo: Fraction, hi: Fraction) -> bool:
    """[lo, hi] = [j/2^k, (j+1)/2^k] for some k >= 1 (hi may equal 1)."""
    length = hi - lo
    if length <= 0 or length.numerator != 1:
        return False
    d = length.denominator
    if d < 2 or d & (d - 1):
        return False
    return (lo * d).denominator == 1


def is_dyadic_farey_arc(u, v) -> bool:
    u, v = circle(u), circle(v)
    if u == v:
        raise InputError("an arc needs two distinct endpoints")
    lo, hi = min(u, v), max(u, v)
    return is_standard_interval(lo, hi) or (lo == 0 and is_standard_interval(hi, Fraction(1)))


def dyadic_farey_arcs(max_depth: int) -> list:
    """Arcs of the dyadic Farey tessellation down to the given subdivision depth.

    Starts from the diameter {0, 1/2}; each level halves every boundary
    interval and adds the two new arcs.
    """
    if max_depth < 1:
        raise InputError("depth must be at least 1")
    arcs = [(Fraction(0), Fraction(1, 2))]
    intervals = [(Fraction(0), Fraction(1, 2)), (Fraction(1, 2), Fraction(1))]
    for _ in range(max_depth - 1):
        nxt = []
        for a, b in intervals:
            m = (a + b) / 2
            arcs.append((a, m))
            arcs.append((m, b % 1))
            nxt += [(a, m), (m, b)]
        intervals = nxt
    return arcs


@dataclass(frozen=True)
class DyadicPartition:
    """Sorted circle positions cutting the circle into standard dyadic intervals."""

    breakpoints: tuple

    def __init__(self, breaks):
        pts = [circle(b) for b in breaks]
        if len(set(pts)) != len(pts):
            raise InputError("duplicate breakpoints")
        if len(pts) < 2:
            raise InputError("a dyadic partition needs at least two breakpoints")
        pts.sort()
        if not _partition_ok(pts):
            raise InputError(f"{[str(p) for p in pts]} is not a standard dyadic partition")
        object.__setattr__(self, "breakpoints", tuple(pts))

    def __len__(self):
        return len(self.breakpoints)

    def intervals(self) -> list:
        pts = self.breakpoints
        return [(pts[i], pts[i + 1] if i + 1 < len(pts) else pts[0] + 1) for i in range(len(pts))]

    @property
    def depth(self) -> int:
        return max(depth(b) for b in self.breakpoints)

    def __str__(self):
        return ",".join(str(b) for b in self.breakpoints)


def _partition_ok(pts: list) -> bool:
    ends = pts[1:] + [pts[0] + 1]
    return all(is_standard_interval(a, b) for a, b in zip(pts, ends))


def validate_dyadic_partition(breaks) -> bool:
    pts = [circle(b) for b in breaks]
    if len(set(pts)) != len(pts):
        raise InputError("duplicate breakpoints")
    if len(pts) < 2:
        raise InputError("a dyadic partition needs at least two breakpoints")
    return _partition_ok(sorted(pts))


def uniform_partition(k: int) -> DyadicPartition:
    return DyadicPartition([Fraction(j, 2 ** k) for j in range(2 ** k)])


def refine_to_uniform(partition: DyadicPartition, k: int | None = None):
    """Halve intervals until the partition is uniform at depth k.

    Returns the uniform partition and the list of arcs added on the way; each
    added arc spans a standard dyadic interval.
    """
    k = partition.depth if k is None else k
    intervals = partition.intervals()
    added = []
    done = False
    while not done:
        done = True
        nxt = []
        for a, b in intervals:
            if b - a > Fraction(1, 2 ** k):
                m = (a + b) / 2
                added += [(a % 1, m % 1), (m % 1, b % 1)]
                nxt += [(a, m), (m, b)]
                done = False
            else:
                nxt.append((a, b))
        intervals = nxt
    return DyadicPartition([a for a, _ in intervals]), added


# -- rendering --------------------------------------------------------------

def circle_point(t) -> tuple:
    a = 2 * math.pi * float(t)
    return (math.cos(a), math.sin(a))


def _svg_disc_arc(p, q, scale, klein=False) -> str:
    (x1, y1), (x2, y2) = p, q
    sx1, sy1, sx2, sy2 = x1 * scale, -y1 * scale, x2 * scale, -y2 * scale
    cross = x1 * y2 - y1 * x2
    if klein or abs(cross) < 1e-12:
        return f'<path d="M {sx1:.6f} {sy1:.6f} L {sx2:.6f} {sy2:.6f}"/>'
    # circle orthogonal to the unit circle through p and q
    cos_delta = x1 * x2 + y1 * y2
    half = math.acos(max(-1.0, min(1.0, cos_delta))) / 2
    r = math.tan(half) * scale
    sweep = 1 if cross > 0 else 0
    return f'<path d="M {sx1:.6f} {sy1:.6f} A {r:.6f} {r:.6f} 0 0 {sweep} {sx2:.6f} {sy2:.6f}"/>'


def _svg_document(body: list, size: float, viewbox: str) -> str:
    head = (f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
            f'viewBox="{viewbox}">')
    return "\n".join([head, *body, "</svg>"]) + "\n"


def dyadic_disc_svg(max_depth: int, klein: bool = False, size: int = 400) -> str:
    """Dyadic Farey tessellation of the disc (Poincare arcs, or Klein chords)."""
    s = size / 2 - 10
    body = [f'<circle cx="0" cy="0" r="{s}" fill="#dde4fb" stroke="black"/>',
            '<g fill="none" stroke="black" stroke-width="0.8">']
    for u, v in dyadic_farey_arcs(max_depth):
        body.append(_svg_disc_arc(circle_point(u), circle_point(v), s, klein))
    body.append("</g>")
    return _svg_document(body, size, f"{-size / 2} {-size / 2} {size} {size}")


def rational_disc_arcs(max_den: int) -> list:
    """Rational Farey arcs with both denominators and numerators bounded by max_den."""
    arcs = []
    for k in range(-max_den, max_den):
        arcs.append((Rational(k, 1), INFINITY))
        arcs += enumerate_rational_arcs(max_den, Rational(k, 1), Rational(k + 1, 1))
    arcs.append((Rational(max_den, 1), INFINITY))
    return arcs


def rational_disc_svg(max_den: int, size: int = 400) -> str:
    s = size / 2 - 10
    body = [f'<circle cx="0" cy="0" r="{s}" fill="#dde4fb" stroke="black"/>',
            '<g fill="none" stroke="black" stroke-width="0.8">']
    for a, b in rational_disc_arcs(max_den):
        p = tuple(float(c) for c in halfplane_to_disc(a))
        q = tuple(float(c) for c in halfplane_to_disc(b))
        body.append(_svg_disc_arc(p, q, s))
    body.append("</g>")
    return _svg_document(body, size, f"{-size / 2} {-size / 2} {size} {size}")


def halfplane_svg(max_den: int, width: int = 4, unit: float = 100.0) -> str:
    """Rational Farey arcs over [0, width] in the upper half-plane."""
    height = unit * 1.2
    body = ['<g fill="none" stroke="black" stroke-width="0.8">',
            f'<line x1="0" y1="0" x2="{width * unit}" y2="0"/>']
    for k in range(width + 1):
        body.append(f'<line x1="{k * unit}" y1="0" x2="{k * unit}" y2="{-height}"/>')
    for k in range(width):
        for a, b in enumerate_rational_arcs(max_den, Rational(k, 1), Rational(k + 1, 1)):
            x1, x2 = float(a.to_fraction()) * unit, float(b.to_fraction()) * unit
            r = (x2 - x1) / 2
            body.append(f'<path d="M {x1:.6f} 0 A {r:.6f} {r:.6f} 0 0 1 {x2:.6f} 0"/>')
    body.append("</g>")
    w = width * unit
    head = (f'<svg xmlns="http://www.w3.org/2000/svg" width="{w + 20}" height="{height + 20}" '
            f'viewBox="-10 {-height - 10} {w + 20} {height + 20}">')
    return "\n".join([head, *body, "</svg>"]) + "\n"


def arcs_json(arcs, dyadic_circle: bool) -> str:
    out = []
    for a, b in arcs:
        if dyadic_circle:
            out.append({"ends": [str(a), str(b)],
                        "points": [[round(c, 12) for c in circle_point(a)],
                                   [round(c, 12) for c in circle_point(b)]]})
        else:
            out.append({"ends": [str(a), str(b)],
                        "points": [[str(c) for c in halfplane_to_disc(a)],
                                   [str(c) for c in halfplane_to_disc(b)]]})
    return json.dumps({"arcs": out}, indent=1)
