import itertools
import math

import pytest
from hypothesis import given, strategies as st

from cyclohedra.errors import CapacityError, InputError
from cyclohedra.triangulations import (
    Diagonal,
    PartialTriangulation,
    all_diagonals,
    catalan,
    crosses,
    diagonal,
    enumerate_partial_triangulations,
    enumerate_symmetric_partial_triangulations,
    enumerate_symmetric_triangulations,
    enumerate_triangulations,
    flip,
    flipped_diagonal,
    half_turn,
    is_centrally_symmetric,
    reflect,
    rotate,
    symmetric_flip,
    symmetric_orbits,
)


def _point(j, n):
    a = 2 * math.pi * j / n
    return math.cos(a), math.sin(a)


def _segments_cross(p1, p2, q1, q2):
    """Proper intersection of two segments (shared endpoints excluded)."""
    def orient(a, b, c):
        v = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
        return 0 if abs(v) < 1e-12 else (1 if v > 0 else -1)
    return (orient(p1, p2, q1) * orient(p1, p2, q2) < 0
            and orient(q1, q2, p1) * orient(q1, q2, p2) < 0)


def test_crossing_examples():
    assert crosses((0, 2), (1, 3), 4)
    assert not crosses((0, 2), (2, 4), 5)
    assert not crosses((0, 2), (3, 5), 6)


@pytest.mark.parametrize("n", [4, 5, 6, 7, 8, 9])
def test_crossing_matches_geometry(n):
    for d1, d2 in itertools.combinations(all_diagonals(n), 2):
        geo = _segments_cross(_point(d1.a, n), _point(d1.b, n), _point(d2.a, n), _point(d2.b, n))
        assert crosses(d1, d2, n) == geo, (d1, d2)


@given(st.integers(4, 14).flatmap(lambda n: st.tuples(
    st.just(n), st.sampled_from(all_diagonals(n)), st.sampled_from(all_diagonals(n)),
    st.integers(0, n - 1))))
def test_crossing_is_symmetric_and_dihedral(args):
    n, d1, d2, k = args
    assert crosses(d1, d2, n) == crosses(d2, d1, n)
    r1 = diagonal(d1.a + k, d1.b + k, n)
    r2 = diagonal(d2.a + k, d2.b + k, n)
    assert crosses(d1, d2, n) == crosses(r1, r2, n)
    m1 = diagonal(-d1.a, -d1.b, n)
    m2 = diagonal(-d2.a, -d2.b, n)
    assert crosses(d1, d2, n) == crosses(m1, m2, n)


def test_diagonal_validation():
    assert diagonal(3, 1, 6) == Diagonal(1, 3)
    with pytest.raises(InputError):
        diagonal(0, 1, 6)
    with pytest.raises(InputError):
        diagonal(0, 5, 6)
    with pytest.raises(InputError):
        diagonal(2, 2, 6)
    with pytest.raises(InputError):
        PartialTriangulation(4, [(0, 2), (1, 3)])


def test_small_counts():
    assert len(enumerate_triangulations(3)) == 1
    assert enumerate_triangulations(3)[0].diagonals == frozenset()
    assert [len(enumerate_triangulations(n)) for n in (4, 5, 6)] == [2, 5, 14]


@pytest.mark.parametrize("n", range(3, 11))
def test_counts_are_catalan(n):
    ts = enumerate_triangulations(n)
    assert len(ts) == catalan(n - 2) == math.comb(2 * (n - 2), n - 2) // (n - 1)
    assert len(set(ts)) == len(ts)
    assert all(t.is_triangulation and len(t.diagonals) == n - 3 for t in ts)
    assert ts == sorted(ts, key=lambda t: t.key())


def _brute_partials(n):
    diags = all_diagonals(n)
    out = []
    for r in range(len(diags) + 1):
        for sub in itertools.combinations(diags, r):
            if all(not crosses(a, b, n) for a, b in itertools.combinations(sub, 2)):
                out.append(frozenset(sub))
    return out


@pytest.mark.parametrize("n", [3, 4, 5, 6, 7, 8])
def test_partials_match_subset_filter(n):
    got = {p.diagonals for p in enumerate_partial_triangulations(n)}
    brute = _brute_partials(n)
    assert got == set(brute) and len(brute) == len(got)


def test_partial_count_square():
    # empty set and the two single diagonals
    assert len(enumerate_partial_triangulations(4)) == 3


def test_enumeration_capacity():
    with pytest.raises(CapacityError):
        enumerate_triangulations(17)
    with pytest.raises(InputError):
        enumerate_triangulations(2)


def test_central_symmetry_examples():
    assert is_centrally_symmetric(PartialTriangulation(4, [(0, 2)]))
    assert is_centrally_symmetric(PartialTriangulation(4, [(1, 3)]))
    hexa = PartialTriangulation(6, [(0, 2), (2, 4)])
    assert not is_centrally_symmetric(hexa)
    assert {half_turn(d, 6) for d in hexa.diagonals} == {Diagonal(3, 5), Diagonal(1, 5)}
    for n in (4, 6, 8, 10):
        assert is_centrally_symmetric(PartialTriangulation(n))
    with pytest.raises(InputError):
        is_centrally_symmetric(PartialTriangulation(5))


@pytest.mark.parametrize("n2", [4, 6, 8, 10, 12])
def test_symmetric_enumeration_matches_filter(n2):
    brute = [t for t in enumerate_triangulations(n2) if is_centrally_symmetric(t)]
    assert enumerate_symmetric_triangulations(n2) == brute
    assert len(brute) == math.comb(n2 - 2, n2 // 2 - 1)


@pytest.mark.parametrize("n2", [4, 6, 8, 10])
def test_symmetric_partials_match_filter(n2):
    brute = {p for p in enumerate_partial_triangulations(n2) if is_centrally_symmetric(p)}
    assert set(enumerate_symmetric_partial_triangulations(n2)) == brute


def test_flip_examples():
    sq = PartialTriangulation(4, [(0, 2)])
    assert flip(sq, (0, 2)) == PartialTriangulation(4, [(1, 3)])
    pent = PartialTriangulation(5, [(0, 2), (0, 3)])
    assert flip(pent, (0, 3)) == PartialTriangulation(5, [(0, 2), (2, 4)])
    with pytest.raises(InputError):
        flip(pent, (1, 3))


@pytest.mark.parametrize("n", [4, 5, 6, 7, 8])
def test_flip_is_an_involution(n):
    for t in enumerate_triangulations(n):
        for d in t.sorted():
            u = flip(t, d)
            new = flipped_diagonal(t, d)
            assert u.is_triangulation and u != t
            assert u.diagonals ^ t.diagonals == {d, new}
            assert flip(u, new) == t


def test_symmetric_flip_examples():
    sq = PartialTriangulation(4, [(0, 2)])
    assert symmetric_flip(sq, frozenset([Diagonal(0, 2)])) == PartialTriangulation(4, [(1, 3)])
    t = PartialTriangulation(6, [(0, 3), (1, 3), (0, 4)])
    sym = enumerate_symmetric_triangulations(6)
    u = symmetric_flip(t, frozenset([Diagonal(1, 3), Diagonal(0, 4)]))
    expected = [s for s in sym if s.diagonals - t.diagonals and (0, 3) in s.diagonals and s != t]
    assert u in sym and u in expected
    for s in sym:
        assert len(symmetric_orbits(s)) == 2
        moves = {symmetric_flip(s, o) for o in symmetric_orbits(s)}
        assert len(moves) == 2 and moves <= set(sym)


def test_json_round_trip():
    t = PartialTriangulation(6, [(1, 3), (0, 3)])
    assert t.to_dict() == {"n": 6, "diagonals": [[0, 3], [1, 3]]}
    assert PartialTriangulation.from_json(t.to_json()) == t
    with pytest.raises(InputError):
        PartialTriangulation.from_dict({"n": 6, "diagonals": [[0, 1]]})
    with pytest.raises(InputError):
        PartialTriangulation(6, [(3, 0)])


def test_rotate_and_reflect_preserve_triangulations():
    for t in enumerate_triangulations(7):
        assert rotate(t, 3).is_triangulation
        assert reflect(reflect(t)) == t
        assert rotate(rotate(t, 3), 4) == t
