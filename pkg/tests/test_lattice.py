import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from mhproj.lattice import (
    INFINITE,
    adjugate,
    determinant,
    hermite_columns,
    integer_kernel,
    is_unimodular_basis,
    lattice_contains,
    lattice_index,
    lattice_intersection,
    matmul,
    rank,
    smith_normal_form,
    solve_integer,
    sublattice_from_generators,
)

small = st.integers(-6, 6)


def matrices(max_rows=4, max_cols=4, entries=small):
    return st.integers(1, max_rows).flatmap(
        lambda nr: st.integers(1, max_cols).flatmap(
            lambda nc: st.lists(st.lists(entries, min_size=nc, max_size=nc), min_size=nr, max_size=nr)
        )
    )


def test_smith_normal_form_example():
    snf = smith_normal_form([[2, 4], [6, 8]])
    assert snf.diagonal == (2, 4)
    assert matmul(matmul(snf.U, [[2, 4], [6, 8]]), snf.V) == snf.S


def test_smith_normal_form_zero_and_empty():
    assert smith_normal_form([[0, 0], [0, 0]]).rank == 0
    snf = smith_normal_form([], ncols=3)
    assert snf.V == ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def test_index_examples():
    assert lattice_index(sublattice_from_generators([(1, 0), (1, 2)])) == 2
    assert lattice_index(sublattice_from_generators([(1, 1), (2, 2)])) == INFINITE
    assert lattice_index(sublattice_from_generators([(6,), (10,), (15,)])) == 1


def test_intersection_example():
    two = sublattice_from_generators([(2, 0), (0, 2)])
    three = sublattice_from_generators([(3, 0), (0, 3)])
    assert lattice_intersection(two, three) == sublattice_from_generators([(6, 0), (0, 6)])


def test_hermite_basis_is_canonical():
    a = hermite_columns([(2, 1), (0, 3)], 2)
    b = hermite_columns([(2, 4), (2, 1), (0, 3), (4, 5)], 2)
    assert a == b


def test_unimodular():
    assert is_unimodular_basis([(1, 0), (1, 1)])
    assert not is_unimodular_basis([(1, 0), (1, 2)])
    with pytest.raises(ValueError):
        is_unimodular_basis([(1, 0)])


def test_vector_length_checked():
    with pytest.raises(ValueError):
        lattice_contains(sublattice_from_generators([(1, 0)]), (1,))
    with pytest.raises(ValueError):
        sublattice_from_generators([(1, 0), (1,)])


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_snf_invariants(m):
    snf = smith_normal_form(m)
    assert matmul(matmul(snf.U, m), snf.V) == snf.S
    assert abs(determinant(snf.U)) == 1 and abs(determinant(snf.V)) == 1
    divisors = oracles.determinantal_divisors(m)
    diag = [d for d in snf.diagonal if d]
    assert len(diag) == len(divisors) == oracles.rank_q(m)
    prods = [1]
    for d in diag:
        prods.append(prods[-1] * d)
    assert prods[1:] == divisors


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n)))
def test_determinant_and_adjugate(m):
    det = determinant(m)
    assert det == oracles.det_q(m)
    n = len(m)
    assert matmul(adjugate(m), m) == tuple(tuple(det * (i == j) for j in range(n)) for i in range(n))


@settings(max_examples=80, deadline=None)
@given(st.lists(st.tuples(st.integers(-4, 4), st.integers(-4, 4)), min_size=2, max_size=2))
def test_index_counts_cosets(gens):
    det = oracles.det_q(gens)
    lat = sublattice_from_generators(gens, 2)
    if det == 0:
        assert lattice_index(lat) == INFINITE
        return
    bound = abs(det)
    assert lattice_index(lat) == abs(det)
    if bound <= 12:
        assert oracles.coset_count(gens, bound) == abs(det)


@settings(max_examples=100, deadline=None)
@given(
    st.lists(st.tuples(small, small), min_size=2, max_size=2),
    st.tuples(st.integers(-15, 15), st.integers(-15, 15)),
)
def test_membership_matches_oracle(gens, v):
    if oracles.det_q(gens) == 0:
        return
    assert lattice_contains(sublattice_from_generators(gens, 2), v) == oracles.in_lattice(gens, v)


@settings(max_examples=60, deadline=None)
@given(
    st.lists(st.tuples(small, small), min_size=2, max_size=2),
    st.lists(st.tuples(small, small), min_size=2, max_size=2),
)
def test_intersection_membership(g1, g2):
    if oracles.det_q(g1) == 0 or oracles.det_q(g2) == 0:
        return
    meet = lattice_intersection(sublattice_from_generators(g1, 2), sublattice_from_generators(g2, 2))
    for v in [(a, b) for a in range(-8, 9, 2) for b in range(-8, 9, 3)]:
        assert lattice_contains(meet, v) == (oracles.in_lattice(g1, v) and oracles.in_lattice(g2, v))


@settings(max_examples=100, deadline=None)
@given(matrices(), st.lists(small, min_size=4, max_size=4))
def test_kernel_and_solve(m, x):
    nc = len(m[0])
    x = x[:nc]
    for k in integer_kernel(m, nc):
        assert all(sum(a * b for a, b in zip(row, k)) == 0 for row in m)
    assert len(integer_kernel(m, nc)) == nc - rank(m)
    b = [sum(a * y for a, y in zip(row, x)) for row in m]
    sol = solve_integer(m, b, nc)
    assert sol is not None
    assert [sum(a * y for a, y in zip(row, sol)) for row in m] == b
    assert solve_integer(m, b, nc) == sol


def test_solve_integer_unsolvable():
    assert solve_integer([[2, 4]], [3], 2) is None
    assert solve_integer([[1, 1], [1, 1]], [1, 2], 2) is None
