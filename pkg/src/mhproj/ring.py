"""Polynomial rings ``k[x_1, ..., x_n]`` graded by ``Z^r``.

Every graded piece of such a ring has a monomial basis, so the functions
here work purely with exponent vectors; coefficients never appear.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .cone import RationalCone, cone_from_generators, dual_cone, is_pointed, relative_interior_point
from .lattice import adjugate, determinant, lattice_index, rank, sublattice_from_generators

__all__ = [
    "DEFAULT_BOX",
    "GradedComponentBasis",
    "RingSpec",
    "ZeroDegreeError",
    "box_solutions",
    "degree_of",
    "graded_component",
    "is_effective_grading",
    "veronese_dims",
    "veronese_generated_in_degree_one",
    "weight_cone",
]

DEFAULT_BOX = 12

Exponent = tuple[int, ...]


class ZeroDegreeError(ValueError):
    """A generator of degree zero would make ``A_0`` bigger than the field."""


@dataclass(frozen=True)
class RingSpec:
    """Degrees of the variables, stored column-wise: ``degrees[i] = deg x_i``."""

    degrees: tuple[tuple[int, ...], ...]
    names: tuple[str, ...]

    def __init__(self, degrees: Sequence[Sequence[int]], names: Optional[Sequence[str]] = None):
        cols = tuple(tuple(int(x) for x in c) for c in degrees)
        if not cols:
            raise ValueError("a ring needs at least one variable")
        r = len(cols[0])
        if r < 1:
            raise ValueError("the grading group must have rank at least 1")
        for i, c in enumerate(cols):
            if len(c) != r:
                raise ValueError(f"degree of variable {i} has length {len(c)}, expected {r}")
        if names is None:
            names = tuple(f"x{i + 1}" for i in range(len(cols)))
        names = tuple(str(s) for s in names)
        if len(names) != len(cols):
            raise ValueError(f"{len(names)} names given for {len(cols)} variables")
        if len(set(names)) != len(names):
            raise ValueError("variable names must be distinct")
        zero = [names[i] for i, c in enumerate(cols) if not any(c)]
        if zero:
            raise ZeroDegreeError(
                f"variables {', '.join(zero)} have degree 0; the degree-zero part "
                "A_0 must be the ground field (A_0 = k), so no generator may have degree 0"
            )
        object.__setattr__(self, "degrees", cols)
        object.__setattr__(self, "names", names)

    @property
    def n(self) -> int:
        return len(self.degrees)

    @property
    def r(self) -> int:
        return len(self.degrees[0])

    def rows(self) -> tuple[tuple[int, ...], ...]:
        return tuple(zip(*self.degrees))


@dataclass(frozen=True)
class GradedComponentBasis:
    degree: tuple[int, ...]
    monomials: tuple[Exponent, ...]
    complete: bool

    @property
    def dimension(self) -> int:
        return len(self.monomials)


def degree_of(ring: RingSpec, a: Sequence[int]) -> tuple[int, ...]:
    if len(a) != ring.n:
        raise ValueError(f"exponent vector has length {len(a)}, expected {ring.n}")
    return tuple(sum(c[j] * x for c, x in zip(ring.degrees, a)) for j in range(ring.r))


def weight_cone(ring: RingSpec) -> RationalCone:
    return cone_from_generators(ring.degrees, ring.r)


def is_effective_grading(ring: RingSpec) -> bool:
    """The degrees generate ``Z^r`` (the torus acts effectively)."""
    return lattice_index(sublattice_from_generators(ring.degrees, ring.r)) == 1


def positive_functional(ring: RingSpec) -> Optional[tuple[int, ...]]:
    """An integer functional positive on every degree, if the weight cone is pointed."""
    omega = weight_cone(ring)
    if not is_pointed(omega):
        return None
    return relative_interior_point(dual_cone(omega))


def _sorted(sols) -> tuple[Exponent, ...]:
    return tuple(sorted(set(sols), reverse=True))


def _nonnegative_solutions(ring: RingSpec, d: Sequence[int], weights: Sequence[int]) -> list[Exponent]:
    """All ``a >= 0`` with ``deg(a) = d``, bounded by a positive functional."""
    budget = sum(w * x for w, x in zip(weights, d))
    if budget < 0:
        return []
    cw = [sum(w * x for w, x in zip(weights, c)) for c in ring.degrees]
    n = ring.n
    out: list[Exponent] = []
    a = [0] * n

    def rec(i, residual, left):
        if i == n - 1:
            q, rem = divmod(left, cw[i])
            if rem == 0 and all(x == q * y for x, y in zip(residual, ring.degrees[i])):
                a[i] = q
                out.append(tuple(a))
            return
        col = ring.degrees[i]
        for k in range(left // cw[i] + 1):
            a[i] = k
            rec(i + 1, [x - k * y for x, y in zip(residual, col)], left - k * cw[i])
        a[i] = 0

    rec(0, list(d), budget)
    return out


def box_solutions(
    degrees: Sequence[Sequence[int]],
    d: Sequence[int],
    lower: Sequence[int],
    upper: Sequence[int],
) -> list[Exponent]:
    """Integer ``a`` with ``sum a_i degrees[i] = d`` and ``lower <= a <= upper``.

    A maximal independent set of columns is solved for exactly (adjugate
    and divisibility test); the remaining coordinates are swept over their
    ranges in vectorized chunks.
    """
    n = len(degrees)
    r = len(d)
    basis: list[int] = []
    for i in range(n):
        trial = [degrees[j] for j in basis + [i]]
        if rank([list(c) for c in trial]) == len(trial):
            basis.append(i)
    rows = _independent_rows([[degrees[j][t] for j in basis] for t in range(r)], len(basis))
    m = [[degrees[j][t] for j in basis] for t in rows]
    det = determinant(m)
    adj = np.array(adjugate(m), dtype=np.int64) if basis else np.zeros((0, 0), dtype=np.int64)
    free = [i for i in range(n) if i not in basis]
    cols = np.array(degrees, dtype=np.int64).reshape(n, r)
    target = np.array(d, dtype=np.int64)
    ranges = [range(lower[i], upper[i] + 1) for i in free]
    if any(len(rg) == 0 for rg in ranges + [range(lower[i], upper[i] + 1) for i in basis]):
        return []

    # vectorize the trailing free coordinates, loop over the leading ones
    split = len(free)
    size = 1
    while split > 0 and size * len(ranges[split - 1]) <= 200_000:
        split -= 1
        size *= len(ranges[split])
    tail = [np.arange(rg.start, rg.stop, dtype=np.int64) for rg in ranges[split:]]
    if tail:
        grid = np.stack([g.ravel() for g in np.meshgrid(*tail, indexing="ij")], axis=1)
    else:
        grid = np.zeros((1, 0), dtype=np.int64)
    tail_cols = cols[free[split:]] if free[split:] else np.zeros((0, r), dtype=np.int64)
    tail_deg = grid @ tail_cols
    lo_b = np.array([lower[i] for i in basis], dtype=np.int64)
    hi_b = np.array([upper[i] for i in basis], dtype=np.int64)
    out: list[Exponent] = []
    for head in itertools.product(*ranges[:split]):
        head_deg = sum((k * cols[i] for k, i in zip(head, free[:split])), np.zeros(r, dtype=np.int64))
        residual = target - head_deg - tail_deg  # shape (points, r)
        if basis:
            num = residual[:, rows] @ adj.T
            ok = np.all(num % det == 0, axis=1)
            sol = num // det
            ok &= np.all((sol >= lo_b) & (sol <= hi_b), axis=1)
            ok &= np.all(residual == sol @ cols[basis], axis=1)
        else:
            sol = np.zeros((len(residual), 0), dtype=np.int64)
            ok = np.all(residual == 0, axis=1)
        for idx in np.nonzero(ok)[0]:
            a = [0] * n
            for i, k in zip(free[:split], head):
                a[i] = k
            for i, k in zip(free[split:], grid[idx]):
                a[i] = int(k)
            for i, k in zip(basis, sol[idx]):
                a[i] = int(k)
            out.append(tuple(a))
    return out


def _independent_rows(m: list[list[int]], k: int) -> list[int]:
    chosen: list[int] = []
    for t in range(len(m)):
        if len(chosen) == k:
            break
        if rank([m[s] for s in chosen + [t]]) == len(chosen) + 1:
            chosen.append(t)
    return chosen


def graded_component(ring: RingSpec, d: Sequence[int], box: int = DEFAULT_BOX) -> GradedComponentBasis:
    """Monomial basis of ``A_d``.

    With a pointed weight cone the piece is finite and enumerated exactly.
    Otherwise exponents are restricted to ``[0, box]`` and the result is
    marked incomplete.
    """
    d = tuple(int(x) for x in d)
    if len(d) != ring.r:
        raise ValueError(f"degree has length {len(d)}, expected {ring.r}")
    weights = positive_functional(ring)
    if weights is not None:
        return GradedComponentBasis(d, _sorted(_nonnegative_solutions(ring, d, weights)), True)
    sols = box_solutions(ring.degrees, d, [0] * ring.n, [box] * ring.n)
    return GradedComponentBasis(d, _sorted(sols), False)


def veronese_dims(ring: RingSpec, u: Sequence[int], count: int, box: int = DEFAULT_BOX) -> tuple[list[int], bool]:
    """``[dim A_0, dim A_u, ..., dim A_{count*u}]`` and whether all are exact."""
    dims, complete = [], True
    for k in range(count + 1):
        comp = graded_component(ring, [k * x for x in u], box)
        dims.append(comp.dimension)
        complete &= comp.complete
    return dims, complete


def veronese_generated_in_degree_one(ring: RingSpec, u: Sequence[int], bound: int) -> bool:
    """Monomial check that ``A_{(k+1)u} = A_u * A_{ku}`` for ``1 <= k < bound``."""
    if positive_functional(ring) is None:
        raise ValueError("the Veronese generation check needs a pointed weight cone")
    first = graded_component(ring, u).monomials
    prev = first
    for k in range(1, bound):
        nxt = graded_component(ring, [(k + 1) * x for x in u]).monomials
        products = {tuple(x + y for x, y in zip(a, b)) for a in first for b in prev}
        if products != set(nxt):
            return False
        prev = nxt
    return True
