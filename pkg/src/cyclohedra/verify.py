"""Acceptance checks, runnable from the CLI (``cyclohedra verify``) and from pytest.

Each check returns ``(passed, detail)``; ``run`` times it and enforces the
time budget.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import numpy as np

from . import farey, thompson
from .facelattice import TwoFaceKind, build_face_lattice, classify_two_face, f_vector
from .secondary import (
    Involution,
    StandardPolygon,
    affine_dimension,
    check_embedding_isometry,
    gkz_vector,
    tau_fixed,
)
from .triangulations import (
    PartialTriangulation,
    enumerate_symmetric_triangulations,
    enumerate_triangulations,
    flip,
    is_central,
    is_centrally_symmetric,
)

SEED = 20140701
TOL = 1e-9

CATALAN_3_TO_12 = [1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796]


@dataclass
class Criterion:
    number: int
    name: str
    suite: str
    check: Callable[[], tuple]
    budget: float | None = None


@dataclass
class Outcome:
    criterion: Criterion
    passed: bool
    detail: str
    seconds: float

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        c = self.criterion
        return f"{status} C{c.number} {c.name} suite={c.suite} t={self.seconds:.3f}s {self.detail}"


def triangulation_counts():
    got = [len(enumerate_triangulations(n)) for n in range(3, 13)]
    return got == CATALAN_3_TO_12, f"counts={got}"


def symmetric_counts():
    small = [len(enumerate_symmetric_triangulations(n2)) for n2 in (4, 6, 8)]
    ok = small == [2, 6, 20]
    details = [f"small={small}"]
    for n2 in range(4, 13, 2):
        n = n2 // 2
        brute = [t for t in enumerate_triangulations(n2) if is_centrally_symmetric(t)]
        direct = enumerate_symmetric_triangulations(n2)
        expected = math.comb(2 * (n - 1), n - 1)
        ok &= len(brute) == expected and brute == direct
        details.append(f"{n2}:{len(brute)}")
    return ok, " ".join(details)


def cy3_structure():
    lattice = build_face_lattice(8, symmetric=True)
    fv = f_vector(lattice)
    kinds = {k: 0 for k in TwoFaceKind}
    hexagons = []
    for i, r in enumerate(lattice.ranks):
        if r == 2:
            kind = classify_two_face(lattice, i)
            kinds[kind] += 1
            if kind is TwoFaceKind.HEXAGON:
                hexagons.append(i)
    ok = fv == (20, 30, 12) and [kinds[k] for k in TwoFaceKind] == [4, 4, 4]

    on_hexagons = {}
    for v in (i for i, r in enumerate(lattice.ranks) if r == 0):
        hexes = [h for h in hexagons if v in lattice.below(h, rank=0)]
        on_hexagons[len(hexes)] = on_hexagons.get(len(hexes), 0) + 1
        if len(hexes) != 2:
            ok = False
            continue
        shared = set(lattice.below(hexes[0], rank=1)) & set(lattice.below(hexes[1], rank=1))
        tri = lattice.faces[v]
        diameter = [d for d in tri.diagonals if is_central(d, 8)]
        central_edge = PartialTriangulation(8, tri.diagonals - set(diameter))
        ok &= shared == {lattice.index[central_edge]}
    return ok, (f"f={fv} squares/pentagons/hexagons={[kinds[k] for k in TwoFaceKind]}"
                f" vertices_by_hexagon_count={dict(sorted(on_hexagons.items()))}")


def gkz_dimensions():
    dims = {}
    ok = True
    for n in range(4, 11):
        d = affine_dimension([gkz_vector(n, t).coords for t in enumerate_triangulations(n)], TOL)
        dims[n] = d
        ok &= d == n - 3
    sym = {}
    for n in (4, 6, 8, 10):
        d = affine_dimension([gkz_vector(n, t).coords for t in enumerate_symmetric_triangulations(n)], TOL)
        sym[n] = d
        ok &= d == n // 2 - 1
    return ok, f"assoc={dims} cyclo={sym}"


def gkz_conservation():
    worst = 0.0
    for n in range(4, 11):
        target = 3 * StandardPolygon(n).area()
        sums = np.array([sum(gkz_vector(n, t).coords) for t in enumerate_triangulations(n)])
        worst = max(worst, float(np.max(np.abs(sums - sums[0]))), float(np.max(np.abs(sums - target))))
    return worst < TOL, f"max_dev={worst:.3e}"


def tau_equivalence():
    checked = 0
    ok = True
    for n2 in (4, 6, 8, 10):
        inv = Involution(n2)
        for t in enumerate_triangulations(n2):
            ok &= tau_fixed(gkz_vector(n2, t), inv, TOL) == is_centrally_symmetric(t)
            checked += 1
    return ok, f"triangulations={checked}"


def embedding_isometry():
    ok = True
    parts = []
    for n in (4, 5, 6):
        rep = check_embedding_isometry(n, TOL)
        ok &= rep.max_translation_deviation < TOL and rep.max_distance_deviation < TOL
        parts.append(f"n={n}:shift_dev={rep.max_translation_deviation:.1e},dist_dev={rep.max_distance_deviation:.1e}")
    return ok, " ".join(parts)


def farey_disc():
    R = farey.Rational
    F = Fraction
    wanted = {
        R(0, 1): (F(1), F(0)),
        R(1, 1): (F(0), F(1)),
        farey.INFINITY: (F(-1), F(0)),
        R(1, 3): (F(3, 5), F(4, 5)),
    }
    misses = [f"{x}->({a},{b})" for x, want in wanted.items()
              for a, b in [farey.halfplane_to_disc(x)] if (a, b) != want]
    circle_ok = True
    for q in range(1, 51):
        for p in range(-50, 51):
            if math.gcd(p, q) == 1:
                a, b = farey.halfplane_to_disc(R(p, q))
                circle_ok &= a * a + b * b == 1
    ok = not misses and circle_ok
    detail = f"unit_circle={circle_ok}"
    if misses:
        detail += " mismatches=" + ",".join(misses)
    return ok, detail


def _slopes_ok(g) -> bool:
    return (all(thompson.is_power_of_two(s) for s in g.slopes())
            and all(farey.depth(t) >= 0 and farey.depth(y) >= 0 for t, y in g.points))


def group_axioms():
    rng = random.Random(SEED)
    e = thompson.IDENTITY
    ok = thompson.compose(thompson.TAU, thompson.TAU) == e
    samples = 200
    for _ in range(samples):
        g, h, k = (thompson.random_element(rng) for _ in range(3))
        gh = thompson.compose(g, h)
        ok &= thompson.compose(gh, k) == thompson.compose(g, thompson.compose(h, k))
        ok &= thompson.compose(g, e) == g == thompson.compose(e, g)
        gi = thompson.inverse(g)
        ok &= thompson.compose(g, gi) == e == thompson.compose(gi, g)
        for x in (gh, gi, thompson.conjugate_by_reflection(g)):
            ok &= _slopes_ok(x)
        t = Fraction(rng.randrange(64), 64)
        ok &= farey.depth(thompson.evaluate(gh, t)) >= 0
    torsion = 0
    for part in thompson.enumerate_partitions(6):
        m = len(part)
        for k in range(1, m + 1):
            if m % k == 0:
                d = thompson.order(thompson.rotation_element(part, k), k)
                ok &= d is not None and k % d == 0
                torsion += 1
    return ok, f"samples={samples} torsion_checks={torsion}"


def commuting_pairs(rng: random.Random, count: int) -> list:
    """Random tau-commuting pairs built as lifts of random elements of T."""
    pairs = []
    for _ in range(count):
        g = thompson.lift_to_double_cover(thompson.random_element(rng))
        h = thompson.lift_to_double_cover(thompson.random_element(rng))
        if rng.random() < 0.5:
            g = thompson.compose(thompson.TAU, g)
        if rng.random() < 0.5:
            h = thompson.compose(h, thompson.TAU)
        pairs.append((g, h))
    return pairs


def two_t_witness():
    rng = random.Random(SEED + 1)
    q = thompson.quotient_mod_tau
    e, tau = thompson.IDENTITY, thompson.TAU
    ok = q(e) == e and q(tau) == e
    kernel_hits = 0
    for g, h in commuting_pairs(rng, 50):
        ok &= thompson.commutes(g, tau) and thompson.commutes(h, tau)
        ok &= q(thompson.compose(g, h)) == thompson.compose(q(g), q(h))
        for x in (g, h):
            in_kernel = q(x) == e
            kernel_hits += in_kernel
            ok &= in_kernel == (x in (e, tau))
    # every sampled element of T lifts
    for _ in range(50):
        hbar = thompson.random_element(rng)
        ok &= q(thompson.lift_to_double_cover(hbar)) == hbar
    return ok, f"pairs=50 kernel_hits={kernel_hits}"


def random_stage_vertex(rng: random.Random, stage: int, steps: int = 40) -> thompson.StageVertex:
    t = thompson.farey_vertex(stage).triangulation
    for _ in range(steps):
        t = flip(t, rng.choice(t.sorted()))
    return thompson.StageVertex(stage, t)


def order_three_witness():
    part = farey.DyadicPartition([0, Fraction(1, 2), Fraction(3, 4)])
    return thompson.rotation_element(part, 3)


def action_coherence():
    rng = random.Random(SEED + 2)
    act = thompson.act_on_vertex
    ok = True
    pairs_checked = 0
    for _ in range(25):
        g, h = thompson.random_element(rng), thompson.random_element(rng)
        stage = rng.randint(2, 4)
        v = random_stage_vertex(rng, stage)
        ok &= act(thompson.compose(g, h), v) == act(g, act(h, v))
        d = rng.choice(v.triangulation.sorted())
        w = thompson.StageVertex(stage, flip(v.triangulation, d))
        ok &= thompson.flip_adjacent(act(g, v), act(g, w))
        pairs_checked += 1

    symmetric = [v for k in (2, 3) for v in thompson.stage_vertices(k, symmetric=True)]
    for g, h in commuting_pairs(rng, 10):
        ok &= all(act(g, v).is_symmetric for v in symmetric)
    r = order_three_witness()
    broken = sum(not act(r, v).is_symmetric for v in symmetric)
    ok &= broken > 0
    return ok, f"flip_pairs={pairs_checked} r_breaks={broken}/{len(symmetric)}"


CRITERIA = [
    Criterion(1, "triangulation-counts", "triangulations", triangulation_counts, 10),
    Criterion(2, "symmetric-counts", "triangulations", symmetric_counts, 30),
    Criterion(3, "cy3-faces", "facelattice", cy3_structure, 5),
    Criterion(4, "gkz-dimension", "secondary", gkz_dimensions, 60),
    Criterion(5, "gkz-conservation", "secondary", gkz_conservation),
    Criterion(6, "tau-fixed-equivalence", "secondary", tau_equivalence),
    Criterion(7, "embedding-isometry", "secondary", embedding_isometry),
    Criterion(8, "farey-disc-map", "farey", farey_disc),
    Criterion(9, "group-axioms", "thompson", group_axioms),
    Criterion(10, "two-t-witness", "thompson", two_t_witness),
    Criterion(11, "action-coherence", "thompson", action_coherence),
]


def select(suite: str | None = None) -> list:
    if suite is None or suite == "all":
        return list(CRITERIA)
    picked = [c for c in CRITERIA if suite in (c.suite, c.name, str(c.number), f"C{c.number}")]
    if not picked:
        raise KeyError(suite)
    return picked


def run(criterion: Criterion) -> Outcome:
    start = time.perf_counter()
    try:
        passed, detail = criterion.check()
    except Exception as exc:  # a crash is a failed criterion, reported like one
        passed, detail = False, f"error={type(exc).__name__}: {exc}"
    elapsed = time.perf_counter() - start
    if criterion.budget is not None and elapsed >= criterion.budget:
        passed = False
        detail += f" over_budget={criterion.budget}s"
    return Outcome(criterion, bool(passed), detail, elapsed)


def run_all(suite: str | None = None, echo: Callable[[str], None] | None = print) -> list:
    outcomes = []
    for c in select(suite):
        out = run(c)
        if echo:
            echo(out.line())
        outcomes.append(out)
    return outcomes
