from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from mhproj.cone import (
    QuasiFan,
    cone_from_generators,
    cone_from_inequalities,
    contains,
    dual_cone,
    face_containing,
    faces,
    full_space,
    interior_point,
    intersect,
    is_face_of,
    is_full_dimensional,
    is_pointed,
    is_simplicial,
    is_subcone,
    primitive,
    relative_interior_point,
    relint_contains,
    zero_cone,
)

vec3 = st.tuples(*[st.integers(-3, 3)] * 3)
gens3 = st.lists(vec3, min_size=1, max_size=5)
box3 = list(product(range(-2, 3), repeat=3))


def test_quadrant():
    q = cone_from_generators([(1, 0), (0, 1)])
    assert q.rays == ((0, 1), (1, 0))
    assert q.facets == ((0, 1), (1, 0))
    assert is_pointed(q) and is_full_dimensional(q) and is_simplicial(q)
    assert dual_cone(q) == q


def test_line_and_halfplane():
    line = cone_from_generators([(1, 0), (-1, 0)])
    assert line.rays == () and line.lineality == ((1, 0),)
    assert line.equations == ((0, 1),)
    half = cone_from_generators([(1, 0), (-1, 0), (0, 1)])
    assert half.facets == ((0, 1),) and half.lineality_dim == 1
    assert is_simplicial(half)


def test_rational_cone_example():
    c = cone_from_generators([(2, 1), (1, 2)])
    assert c.facets == ((-1, 2), (2, -1))
    assert dual_cone(c) == cone_from_generators([(-1, 2), (2, -1)])


def test_intersection_example():
    a = cone_from_generators([(1, 0), (1, 2)])
    b = cone_from_generators([(0, 1), (2, 1)])
    assert intersect(a, b) == cone_from_generators([(2, 1), (1, 2)])


def test_trivial_cones():
    assert zero_cone(2).dim == 0
    assert interior_point(zero_cone(2)) == (0, 0)
    with pytest.raises(ValueError):
        relative_interior_point(zero_cone(2))
    assert full_space(2).lineality_dim == 2
    assert dual_cone(full_space(2)) == zero_cone(2)


def test_primitive():
    assert primitive((4, -6)) == (2, -3)
    assert primitive((0, 0)) == (0, 0)
    from fractions import Fraction
    assert primitive((Fraction(1, 2), Fraction(1, 3))) == (3, 2)


def test_faces_of_square_cone():
    c = cone_from_generators([(1, 0, 0), (0, 1, 0), (1, 0, 1), (0, 1, 1)])
    fs = faces(c)
    assert [f.dim for f in fs].count(1) == 4
    assert [f.dim for f in fs].count(2) == 4
    assert all(is_face_of(f, c) for f in fs)
    assert not is_face_of(cone_from_generators([(1, 1, 0)]), c)


def test_quasi_fan_violation_detected():
    a = cone_from_generators([(1, 0), (0, 1)])
    b = cone_from_generators([(1, 1), (-1, 1)])
    fan = QuasiFan((a, b), cone_from_generators([(1, 0), (-1, 1)]))
    assert fan.violations() == [(a, b)]
    ok = QuasiFan((a, cone_from_generators([(0, 1), (-1, 1)])), fan.support)
    assert ok.violations() == []


@settings(max_examples=120, deadline=None)
@given(gens3)
def test_membership_matches_caratheodory(gens):
    c = cone_from_generators(gens, 3)
    for v in box3[::3]:
        assert contains(c, v) == oracles.in_cone(gens, v)


@settings(max_examples=120, deadline=None)
@given(gens3)
def test_round_trip_and_duality(gens):
    c = cone_from_generators(gens, 3)
    assert cone_from_inequalities(c.facets, c.equations, 3) == c
    assert cone_from_generators(c.generators, 3) == c
    assert dual_cone(dual_cone(c)) == c
    assert dual_cone(c) == cone_from_inequalities(gens, (), 3)
    assert c.dim == oracles.rank_q(gens)
    assert c.lineality_dim + len(c.equations) + len(c.rays) >= c.dim


@settings(max_examples=100, deadline=None)
@given(gens3)
def test_facets_are_supporting(gens):
    c = cone_from_generators(gens, 3)
    for f in c.facets:
        tight = [g for g in c.generators if sum(a * b for a, b in zip(f, g)) == 0]
        assert all(sum(a * b for a, b in zip(f, g)) >= 0 for g in c.generators)
        assert oracles.rank_q(tight) == c.dim - 1


@settings(max_examples=100, deadline=None)
@given(gens3)
def test_relative_interior(gens):
    c = cone_from_generators(gens, 3)
    if c.dim == 0:
        return
    p = relative_interior_point(c)
    assert relint_contains(c, p)
    assert face_containing(c, p) == c
    for f in faces(c):
        assert is_subcone(f, c)
        if f.dim:
            assert face_containing(c, relative_interior_point(f)) == f


@settings(max_examples=80, deadline=None)
@given(gens3, gens3)
def test_intersection_membership(g1, g2):
    a, b = cone_from_generators(g1, 3), cone_from_generators(g2, 3)
    meet = intersect(a, b)
    assert meet == intersect(b, a)
    for v in box3[::2]:
        assert contains(meet, v) == (contains(a, v) and contains(b, v))
