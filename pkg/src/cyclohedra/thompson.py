"""Thompson's group T as piecewise-linear maps of the circle R/Z.

An element is stored as the list of points (t, g(t)) at which its slope
changes, t in [0, 1).  Between consecutive points the map is affine, wrapping
around 1 where needed.  A map with no slope change (a rotation) is stored as
the single point (0, g(0)).  Every breakpoint and image is dyadic and every
slope is a power of two, so all arithmetic is exact with ``Fraction``.
"""

from __future__ import annotations

import bisect
import json
import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError
from .facelattice import embed_into_double
from .farey import DyadicPartition, circle, depth, is_standard_interval
from .triangulations import (
    PartialTriangulation,
    diagonal,
    enumerate_symmetric_triangulations,
    enumerate_triangulations,
    is_centrally_symmetric,
)

HALF = Fraction(1, 2)


def is_power_of_two(x: Fraction) -> bool:
    p, q = x.numerator, x.denominator
    return p > 0 and (p == 1 or q == 1) and not (p & (p - 1)) and not (q & (q - 1))


def _segments(points):
    """(t, g(t), domain length, image length) for each affine piece."""
    m = len(points)
    if m == 1:
        t, y = points[0]
        return [(t, y, Fraction(1), Fraction(1))]
    out = []
    for i, (t, y) in enumerate(points):
        t2, y2 = points[(i + 1) % m]
        out.append((t, y, (t2 - t) % 1, (y2 - y) % 1))
    return out


def _evaluate(points, x: Fraction) -> Fraction:
    ts = [t for t, _ in points]
    i = bisect.bisect_right(ts, x) - 1  # -1 wraps to the last piece
    t, y = points[i]
    t2, y2 = points[(i + 1) % len(points)]
    if len(points) == 1:
        return (y + (x - t)) % 1
    slope = ((y2 - y) % 1) / ((t2 - t) % 1)
    return (y + slope * ((x - t) % 1)) % 1


@dataclass(frozen=True, init=False)
class PLCircleMap:
    points: tuple

    def __init__(self, points):
        pts = sorted((circle(t), circle(y)) for t, y in points)
        if not pts:
            raise InputError("a circle map needs at least one point")
        if len({t for t, _ in pts}) != len(pts):
            raise InputError("repeated breakpoint")
        segs = _segments(pts)
        if sum(s[3] for s in segs) != 1 or any(s[3] == 0 for s in segs):
            raise InputError("images are not in cyclic order")
        slopes = [s[3] / s[2] for s in segs]
        if not all(is_power_of_two(s) for s in slopes):
            raise InputError("slopes must be powers of two")
        m = len(pts)
        keep = [pts[i] for i in range(m) if slopes[i] != slopes[i - 1]]
        if not keep:
            keep = [(Fraction(0), _evaluate(pts, Fraction(0)))]
        object.__setattr__(self, "points", tuple(keep))

    def __call__(self, t) -> Fraction:
        return evaluate(self, t)

    def __mul__(self, other: "PLCircleMap") -> "PLCircleMap":
        return compose(self, other)

    @property
    def breakpoints(self) -> list:
        """Points where the slope actually changes (empty for rotations)."""
        return [] if len(self.points) == 1 else [t for t, _ in self.points]

    def slopes(self) -> list:
        return [s[3] / s[2] for s in _segments(self.points)]

    def is_identity(self) -> bool:
        return self == IDENTITY

    def __str__(self):
        return format_element(self)


IDENTITY = PLCircleMap([(0, 0)])
TAU = PLCircleMap([(0, HALF)])


def rotation(a) -> PLCircleMap:
    return PLCircleMap([(0, a)])


def evaluate(g: PLCircleMap, t) -> Fraction:
    return _evaluate(g.points, circle(t))


def inverse(g: PLCircleMap) -> PLCircleMap:
    return PLCircleMap([(y, t) for t, y in g.points])


def compose(g: PLCircleMap, h: PLCircleMap) -> PLCircleMap:
    """g after h."""
    hinv = inverse(h)
    cuts = {Fraction(0)} | {t for t, _ in h.points} | {evaluate(hinv, s) for s, _ in g.points}
    return PLCircleMap([(c, evaluate(g, evaluate(h, c))) for c in cuts])


def power(g: PLCircleMap, k: int) -> PLCircleMap:
    if k < 0:
        return power(inverse(g), -k)
    out = IDENTITY
    for _ in range(k):
        out = compose(g, out)
    return out


def order(g: PLCircleMap, cap: int) -> int | None:
    """Smallest d <= cap with g^d = id, or None."""
    if cap < 1:
        raise InputError("cap must be at least 1")
    x = g
    for d in range(1, cap + 1):
        if x == IDENTITY:
            return d
        x = compose(g, x)
    return None


def commutes(g: PLCircleMap, h: PLCircleMap) -> bool:
    return compose(g, h) == compose(h, g)


# -- partition pairs ----------------------------------------------------------

@dataclass(frozen=True)
class PartitionPair:
    """Domain interval i goes affinely onto range interval i + shift (mod m)."""

    domain: DyadicPartition
    range: DyadicPartition
    shift: int

    def __post_init__(self):
        if len(self.domain) != len(self.range):
            raise InputError(f"partitions have {len(self.domain)} and {len(self.range)} intervals")
        object.__setattr__(self, "shift", self.shift % len(self.domain))

    def __str__(self):
        return f"dom={self.domain}; ran={self.range}; shift={self.shift}"

    def to_dict(self) -> dict:
        return {"dom": [str(b) for b in self.domain.breakpoints],
                "ran": [str(b) for b in self.range.breakpoints],
                "shift": self.shift}


def from_partition_pair(pp: PartitionPair) -> PLCircleMap:
    d, r, m = pp.domain.breakpoints, pp.range.breakpoints, len(pp.domain)
    return PLCircleMap([(d[i], r[(i + pp.shift) % m]) for i in range(m)])


def to_partition_pair(g: PLCircleMap) -> PartitionPair:
    """Coarsest standard dyadic domain partition whose pieces g maps onto standard intervals."""
    breaks = set(g.breakpoints)
    slopes = dict(zip((t for t, _ in g.points), g.slopes()))
    ts = sorted(slopes)

    def slope_at(a):
        i = bisect.bisect_right(ts, a) - 1
        return slopes[ts[i]]

    todo = [(Fraction(1, 2), Fraction(1)), (Fraction(0), Fraction(1, 2))]
    pieces = []
    while todo:
        a, b = todo.pop()
        inner = any(a < t < b for t in breaks)
        if not inner:
            ga = evaluate(g, a)
            if is_standard_interval(ga, ga + (b - a) * slope_at(a)):
                pieces.append((a, ga))
                continue
        m = (a + b) / 2
        todo += [(m, b), (a, m)]
    pieces.sort()
    dom = DyadicPartition([a for a, _ in pieces])
    ran = DyadicPartition([y for _, y in pieces])
    shift = ran.breakpoints.index(pieces[0][1])
    return PartitionPair(dom, ran, shift)


def _parse_list(text: str) -> list:
    return [Fraction(s.strip()) for s in text.split(",") if s.strip()]


def parse_partition_pair(text: str) -> PartitionPair:
    fields = {}
    for part in text.split(";"):
        if not part.strip():
            continue
        key, _, val = part.partition("=")
        fields[key.strip()] = val.strip()
    try:
        return PartitionPair(DyadicPartition(_parse_list(fields["dom"])),
                             DyadicPartition(_parse_list(fields["ran"])),
                             int(fields.get("shift", "0")))
    except (KeyError, ValueError, ZeroDivisionError) as exc:
        raise InputError(f"cannot parse element {text!r}: {exc}") from None


def parse_element(text: str) -> PLCircleMap:
    """Read ``dom=...; ran=...; shift=k`` or the JSON form of a partition pair."""
    text = text.strip()
    if text.startswith("{"):
        data = json.loads(text)
        text = f"dom={','.join(map(str, data['dom']))}; ran={','.join(map(str, data['ran']))}; shift={data.get('shift', 0)}"
    return from_partition_pair(parse_partition_pair(text))


def format_element(g: PLCircleMap) -> str:
    return str(to_partition_pair(g))


def element_json(g: PLCircleMap) -> str:
    return json.dumps(to_partition_pair(g).to_dict())


# -- torsion, the half-turn and the reflection ----------------------------------

def rotation_element(partition: DyadicPartition, k: int) -> PLCircleMap:
    """Rotate the Farey polygon with corners ``partition`` by m/k corners."""
    m = len(partition)
    if k < 1 or m % k:
        raise InputError(f"{k} does not divide the number of intervals {m}")
    return from_partition_pair(PartitionPair(partition, partition, m // k))


def quotient_mod_tau(g: PLCircleMap) -> PLCircleMap:
    """Image of a tau-commuting element in T under s -> 2 * (g(s/2) mod 1/2)."""
    if not commutes(g, TAU):
        raise InputError("element does not commute with the half-turn")
    cuts = {Fraction(0)} | {t % HALF for t, _ in g.points}
    return PLCircleMap([(2 * c, 2 * (evaluate(g, c) % HALF)) for c in cuts])


def lift_to_double_cover(h: PLCircleMap) -> PLCircleMap:
    """The tau-commuting lift t -> H(2t)/2, H a real lift of h with H(0) = h(0)."""
    h0 = evaluate(h, 0)
    pts = []
    for s in {Fraction(0)} | {t for t, _ in h.points}:
        lifted = h0 + (evaluate(h, s) - h0) % 1
        pts.append((s / 2, lifted / 2))
        pts.append((s / 2 + HALF, lifted / 2 + HALF))
    return PLCircleMap(pts)


def conjugate_by_reflection(g: PLCircleMap) -> PLCircleMap:
    """rho g rho with rho(t) = -t."""
    return PLCircleMap([(-t, -y) for t, y in g.points])


# -- random elements ------------------------------------------------------------

def random_partition(rng: random.Random, m: int, max_depth: int = 4) -> DyadicPartition:
    """Split random intervals of [0,1/2],[1/2,1] until there are m of them."""
    if not 2 <= m <= 2 ** max_depth:
        raise InputError(f"cannot build {m} intervals at depth <= {max_depth}")
    smallest = Fraction(1, 2 ** max_depth)
    intervals = [(Fraction(0), HALF), (HALF, Fraction(1))]
    while len(intervals) < m:
        choices = [i for i, (a, b) in enumerate(intervals) if b - a > smallest]
        i = rng.choice(choices)
        a, b = intervals.pop(i)
        mid = (a + b) / 2
        intervals[i:i] = [(a, mid), (mid, b)]
    return DyadicPartition([a for a, _ in intervals])


def random_element(rng: random.Random, max_depth: int = 4, max_pieces: int = 8) -> PLCircleMap:
    """Partition pair with m uniform in [2, max_pieces], depth <= max_depth, uniform shift."""
    m = rng.randint(2, min(max_pieces, 2 ** max_depth))
    dom = random_partition(rng, m, max_depth)
    ran = random_partition(rng, m, max_depth)
    return from_partition_pair(PartitionPair(dom, ran, rng.randrange(m)))


def enumerate_partitions(max_pieces: int) -> list:
    """Every standard dyadic partition of the circle with at most max_pieces intervals."""

    def trees(a, b, budget):
        # ways to cut [a, b] into at most budget standard pieces
        yield [a]
        if budget >= 2:
            mid = (a + b) / 2
            for left in trees(a, mid, budget - 1):
                for right in trees(mid, b, budget - len(left)):
                    yield left + right

    out = []
    for left in trees(Fraction(0), HALF, max_pieces - 1):
        for right in trees(HALF, Fraction(1), max_pieces - len(left)):
            out.append(DyadicPartition(left + right))
    return out


# -- action on finite retriangulations ------------------------------------------

@dataclass(frozen=True)
class StageVertex:
    """A triangulation of the 2^stage-gon with corner j at circle position j/2^stage.

    Outside that polygon the disc carries the dyadic Farey arcs.
    """

    stage: int
    triangulation: PartialTriangulation

    def __post_init__(self):
        if self.stage < 2:
            raise InputError("stages start at 2 (the square)")
        if self.triangulation.n != 2 ** self.stage:
            raise InputError(f"stage {self.stage} needs a {2 ** self.stage}-gon")
        if not self.triangulation.is_triangulation:
            raise InputError("stage vertices are full triangulations")

    @classmethod
    def from_triangulation(cls, t: PartialTriangulation) -> "StageVertex":
        k = t.n.bit_length() - 1
        if t.n != 2 ** k:
            raise InputError(f"{t.n} is not a power of two")
        return cls(k, t)

    def to_dict(self) -> dict:
        return {"stage": self.stage, "triangulation": self.triangulation.to_dict()}

    @property
    def is_symmetric(self) -> bool:
        return is_centrally_symmetric(self.triangulation)


def farey_vertex(stage: int = 2) -> StageVertex:
    """The unaltered dyadic Farey tessellation seen at a given stage."""
    v = StageVertex(2, PartialTriangulation(4, [(0, 2)]))
    return at_stage(v, stage)


def refine(v: StageVertex) -> StageVertex:
    return StageVertex(v.stage + 1, embed_into_double(v.triangulation))


def at_stage(v: StageVertex, k: int) -> StageVertex:
    if k < v.stage:
        raise InputError(f"cannot refine stage {v.stage} down to {k}")
    while v.stage < k:
        v = refine(v)
    return v


def canonical(v: StageVertex) -> StageVertex:
    """Coarsen while the even corners are joined by their Farey arcs."""
    while v.stage > 2:
        n = v.triangulation.n
        ring = {diagonal(2 * j, 2 * j + 2, n) for j in range(n // 2)}
        if not ring <= v.triangulation.diagonals:
            break
        rest = v.triangulation.diagonals - ring
        v = StageVertex(v.stage - 1, PartialTriangulation(n // 2, [(a // 2, b // 2) for a, b in rest]))
    return v


def _fits(g: PLCircleMap, k: int) -> bool:
    """g is affine on each depth-k interval and maps it onto a standard interval."""
    if any(depth(t) > k for t in g.breakpoints):
        return False
    step = Fraction(1, 2 ** k)
    slopes = dict(zip((t for t, _ in g.points), g.slopes()))
    ts = sorted(slopes)
    for j in range(2 ** k):
        a = j * step
        s = slopes[ts[bisect.bisect_right(ts, a) - 1]]
        ga = evaluate(g, a)
        if not is_standard_interval(ga, ga + step * s):
            return False
    return True


def act_on_vertex(g: PLCircleMap, v: StageVertex) -> StageVertex:
    """Image of a finite retriangulation under g, in canonical (minimal-stage) form."""
    k = v.stage
    while not _fits(g, k):
        k += 1
    w = at_stage(v, k)
    n = 2 ** k
    corners = [evaluate(g, Fraction(j, n)) for j in range(n)]
    k2 = max(2, max(depth(y) for y in corners))
    n2 = 2 ** k2

    def idx(y):
        return int(y * n2) % n2

    diags = {diagonal(idx(corners[a]), idx(corners[b]), n2) for a, b in w.triangulation.diagonals}
    # fill each side of the image polygon with its Farey fan
    for j in range(n):
        a = corners[j]
        length = (corners[(j + 1) % n] - a) % 1
        todo = [(a, a + length)]
        while todo:
            lo, hi = todo.pop()
            if hi - lo <= Fraction(1, n2):
                continue
            diags.add(diagonal(idx(lo), idx(hi), n2))
            mid = (lo + hi) / 2
            todo += [(lo, mid), (mid, hi)]
    t = PartialTriangulation(n2, diags)
    return canonical(StageVertex(k2, t))


def reflect_vertex(v: StageVertex) -> StageVertex:
    """Image under the reflection t -> -t (corner j -> -j)."""
    n = v.triangulation.n
    return StageVertex(v.stage, PartialTriangulation(n, [diagonal(-a, -b, n) for a, b in v.triangulation.diagonals]))


def flip_adjacent(v: StageVertex, w: StageVertex) -> bool:
    """True iff the two retriangulations differ by a single flip."""
    k = max(v.stage, w.stage)
    a = at_stage(v, k).triangulation.diagonals
    b = at_stage(w, k).triangulation.diagonals
    return len(a - b) == 1 and len(b - a) == 1


def stage_vertices(stage: int, symmetric: bool = False) -> list:
    """Every (centrally symmetric) triangulation of the 2^stage-gon as a stage vertex."""
    n = 2 ** stage
    ts = enumerate_symmetric_triangulations(n) if symmetric else enumerate_triangulations(n)
    return [StageVertex(stage, t) for t in ts]

