import cmath
import itertools
import math
import xml.etree.ElementTree as ET
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from cyclohedra import farey
from cyclohedra.errors import InputError
from cyclohedra.farey import INFINITY, DyadicPartition, Rational as R


def test_rational_normalization():
    assert R(2, 4) == R(1, 2)
    assert R(1, -3) == R(-1, 3)
    assert R(-5, 0) == INFINITY
    assert R.parse("inf") == INFINITY and R.parse("3/6") == R(1, 2) and R.parse("-2") == R(-2, 1)
    with pytest.raises(InputError):
        R(0, 0)


def test_neighbours_and_mediants():
    assert farey.mediant(R(0, 1), INFINITY) == R(1, 1)
    assert farey.mediant(R(0, 1), R(1, 1)) == R(1, 2)
    assert farey.mediant(R(1, 3), R(1, 2)) == R(2, 5)
    assert farey.is_farey_neighbor(R(0, 1), INFINITY)
    assert farey.is_farey_neighbor(R(1, 3), R(1, 2))
    assert not farey.is_farey_neighbor(R(1, 3), R(2, 3))
    for n in range(-20, 20):
        assert farey.is_farey_neighbor(R(n, 1), R(n + 1, 1))
    with pytest.raises(InputError):
        farey.mediant(R(1, 3), R(2, 3))


def _mobius(x):
    """Complex-float oracle for z -> (i - z)/(z + i)."""
    if x.is_infinite:
        return complex(-1, 0)
    z = x.p / x.q
    return (1j - z) / (z + 1j)


def test_disc_map_defining_values():
    assert farey.halfplane_to_disc(R(0, 1)) == (1, 0)
    assert farey.halfplane_to_disc(R(1, 1)) == (0, 1)
    assert farey.halfplane_to_disc(INFINITY) == (-1, 0)


def test_disc_map_at_one_third():
    # the unique Moebius map with 0, 1, oo -> 1, i, -1 sends 1/3 to 4/5 + 3/5 i;
    # 3/5 + 4/5 i is the image of 1/2
    assert farey.halfplane_to_disc(R(1, 3)) == (F(4, 5), F(3, 5))
    assert farey.halfplane_to_disc(R(1, 2)) == (F(3, 5), F(4, 5))
    w = _mobius(R(1, 3))
    assert abs(w - complex(0.8, 0.6)) < 1e-12


def test_disc_map_against_complex_oracle():
    for q in range(1, 30):
        for p in range(-40, 41):
            if math.gcd(p, q) != 1:
                continue
            a, b = farey.halfplane_to_disc(R(p, q))
            assert a * a + b * b == 1
            w = _mobius(R(p, q))
            assert abs(complex(float(a), float(b)) - w) < 1e-12


@given(st.integers(-10 ** 6, 10 ** 6), st.integers(1, 10 ** 6))
def test_disc_map_lands_on_circle(p, q):
    a, b = farey.halfplane_to_disc(R(p, q))
    assert a * a + b * b == 1


def _reduced(max_den):
    return sorted({F(p, q) for q in range(1, max_den + 1) for p in range(0, q + 1)})


@pytest.mark.parametrize("max_den", [1, 2, 3, 5, 8, 13])
def test_rational_arcs_match_brute_force(max_den):
    got = {(a.to_fraction(), b.to_fraction()) for a, b in farey.enumerate_rational_arcs(max_den, R(0, 1), R(1, 1))}
    brute = {(x, y) for x, y in itertools.combinations(_reduced(max_den), 2)
             if abs(x.numerator * y.denominator - y.numerator * x.denominator) == 1}
    assert got == brute


def test_rational_arc_examples():
    assert farey.enumerate_rational_arcs(1, R(0, 1), R(1, 1)) == [(R(0, 1), R(1, 1))]
    two = set(farey.enumerate_rational_arcs(2, R(0, 1), R(1, 1)))
    assert two == {(R(0, 1), R(1, 1)), (R(0, 1), R(1, 2)), (R(1, 2), R(1, 1))}
    for a, b in farey.enumerate_rational_arcs(20, R(0, 1), R(1, 1)):
        assert abs(a.p * b.q - b.p * a.q) == 1
    with pytest.raises(InputError):
        farey.enumerate_rational_arcs(5, R(1, 3), R(2, 3))


def _dyadic_oracle(depth):
    """Arcs by recursive halving, written independently of the library."""
    arcs = set()

    def split(a, b, level):
        arcs.add(frozenset({a % 1, b % 1}))
        if level < depth:
            m = (a + b) / 2
            split(a, m, level + 1)
            split(m, b, level + 1)

    split(F(0), F(1, 2), 1)
    split(F(1, 2), F(1), 1)
    return arcs


def test_dyadic_arc_examples():
    assert farey.is_dyadic_farey_arc(0, F(1, 2))
    assert farey.is_dyadic_farey_arc(F(1, 4), F(1, 2))
    assert not farey.is_dyadic_farey_arc(F(1, 4), F(3, 4))
    assert farey.is_dyadic_farey_arc(F(3, 4), 0)
    with pytest.raises(InputError):
        farey.is_dyadic_farey_arc(F(1, 3), 0)


@pytest.mark.parametrize("depth", [1, 2, 3, 4, 5])
def test_dyadic_arcs_match_recursive_oracle(depth):
    gen = {frozenset(a) for a in farey.dyadic_farey_arcs(depth)}
    oracle = _dyadic_oracle(depth)
    assert gen == oracle
    assert len(farey.dyadic_farey_arcs(depth)) == 2 ** (depth + 1) - 3
    pts = [F(j, 2 ** depth) for j in range(2 ** depth)]
    for u, v in itertools.combinations(pts, 2):
        assert farey.is_dyadic_farey_arc(u, v) == (frozenset({u, v}) in oracle)


def test_partition_examples():
    assert farey.validate_dyadic_partition([0, F(1, 2)])
    assert farey.validate_dyadic_partition([0, F(1, 4), F(1, 2), F(3, 4)])
    assert not farey.validate_dyadic_partition([0, F(1, 4), F(3, 4)])
    assert farey.validate_dyadic_partition([0, F(1, 2), F(5, 8), F(3, 4)])
    with pytest.raises(InputError):
        DyadicPartition([0, F(1, 4), F(3, 4)])
    with pytest.raises(InputError):
        farey.validate_dyadic_partition([0, 0])


def test_refine_to_uniform():
    p = DyadicPartition([0, F(1, 2), F(5, 8), F(3, 4)])
    uni, added = farey.refine_to_uniform(p)
    assert uni == farey.uniform_partition(3)
    for a, b in added:
        assert farey.is_dyadic_farey_arc(a, b)
    # [0,1/2] is halved three times and [3/4,1] once, two arcs each
    assert len(added) == 8


def _svg_ok(text):
    root = ET.fromstring(text)
    assert root.tag.endswith("svg")
    return root


def test_svg_outputs():
    _svg_ok(farey.dyadic_disc_svg(4))
    _svg_ok(farey.dyadic_disc_svg(4, klein=True))
    _svg_ok(farey.rational_disc_svg(5))
    _svg_ok(farey.halfplane_svg(5))
    assert farey.dyadic_disc_svg(3) == farey.dyadic_disc_svg(3)
