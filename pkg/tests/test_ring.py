import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from mhproj.ring import (
    RingSpec,
    ZeroDegreeError,
    box_solutions,
    degree_of,
    graded_component,
    is_effective_grading,
    veronese_dims,
    veronese_generated_in_degree_one,
    weight_cone,
)

XYZ = RingSpec([(0, 1), (1, 0), (1, 0)], ["X", "Y", "Z"])


def columns(r, max_n=4, lo=-2, hi=2):
    col = st.tuples(*[st.integers(lo, hi)] * r).filter(any)
    return st.lists(col, min_size=1, max_size=max_n)


def test_ring_validation():
    with pytest.raises(ZeroDegreeError, match="A_0 = k"):
        RingSpec([(1, 0), (0, 0)])
    with pytest.raises(ValueError):
        RingSpec([(1, 0), (1,)])
    with pytest.raises(ValueError):
        RingSpec([(1,), (1,)], ["x", "x"])
    with pytest.raises(ValueError):
        RingSpec([])
    assert RingSpec([(1,), (2,)]).names == ("x1", "x2")


def test_xyz_ring_components():
    assert graded_component(XYZ, (2, -1)).monomials == ()
    comp = graded_component(XYZ, (1, 1))
    assert set(comp.monomials) == {(1, 1, 0), (1, 0, 1)} and comp.complete
    assert degree_of(XYZ, (1, 2, 0)) == (2, 1)


def test_veronese():
    assert veronese_dims(XYZ, (1, 1), 2) == ([1, 2, 3], True)
    assert veronese_generated_in_degree_one(XYZ, (1, 1), 6)
    assert not veronese_generated_in_degree_one(RingSpec([(1,), (2,)]), (1,), 4)
    with pytest.raises(ValueError):
        veronese_generated_in_degree_one(RingSpec([(1,), (-1,)]), (1,), 2)


def test_effective_and_weight_cone():
    assert is_effective_grading(XYZ)
    assert not is_effective_grading(RingSpec([(2,), (4,)]))
    assert weight_cone(RingSpec([(1,), (-1,)])).lineality == ((1,),)


def test_unbounded_component_is_flagged():
    comp = graded_component(RingSpec([(1,), (-1,)]), (0,), box=5)
    assert not comp.complete
    assert comp.monomials == tuple((k, k) for k in range(5, -1, -1))


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 2).flatmap(lambda r: st.tuples(columns(r), st.tuples(*[st.integers(-3, 3)] * r))))
def test_component_matches_brute_force(data):
    cols, d = data
    ring = RingSpec(cols)
    comp = graded_component(ring, d, box=4)
    brute = oracles.brute_graded(cols, d, 4)
    if comp.complete:
        # the bounded enumeration is exact, so it contains every box point
        assert set(brute) <= set(comp.monomials)
        assert all(degree_of(ring, a) == tuple(d) for a in comp.monomials)
        assert all(min(a) >= 0 for a in comp.monomials)
    else:
        assert sorted(comp.monomials) == brute
    assert list(comp.monomials) == sorted(comp.monomials, reverse=True)


@settings(max_examples=60, deadline=None)
@given(columns(2, max_n=4), st.tuples(st.integers(-3, 3), st.integers(-3, 3)))
def test_box_solutions_with_negative_bounds(cols, d):
    from itertools import product
    lower = [-2] * len(cols)
    upper = [2] * len(cols)
    got = sorted(box_solutions(cols, d, lower, upper))
    brute = sorted(
        a for a in product(range(-2, 3), repeat=len(cols))
        if all(sum(a[i] * cols[i][t] for i in range(len(cols))) == d[t] for t in range(2))
    )
    assert got == brute


def test_veronese_dimension_counts():
    assert veronese_dims(RingSpec([(1,)] * 3), (1,), 2) == ([1, 3, 6], True)
    # A_(2,2): X^2 times a quadric in Y, Z, so three monomials
    assert graded_component(XYZ, (2, 2)).monomials == ((2, 2, 0), (2, 1, 1), (2, 0, 2))
    assert veronese_dims(XYZ, (-1, 0), 2) == ([1, 0, 0], True)
