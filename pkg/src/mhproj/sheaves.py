"""Twisted structure sheaves ``O_X(d)`` on the multihomogeneous Proj.

On the chart of a relevant monomial with support ``S`` the sections of
``O_X(d)`` are the degree-``d`` Laurent monomials whose negative exponents
sit on ``S``.  A global section is a family agreeing on overlaps; since all
localizations sit inside the Laurent ring, that is one Laurent monomial
allowed in every chart.  The maximal charts cover ``X`` (any relevant
support contains a minimal one), so the global sections are the
degree-``d`` Laurent monomials with negative exponents only on the *core*,
the intersection of all minimal relevant supports.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Optional, Sequence

from .cone import cone_from_generators, dual_cone, is_pointed, orthogonal_complement, relative_interior_point, subspace_basis
from .lattice import Sublattice, lattice_contains, lattice_intersection, rank, solve_integer
from .proj import ProjAtlas
from .ring import DEFAULT_BOX, RingSpec, box_solutions

__all__ = [
    "chart_sections",
    "core_support",
    "format_laurent",
    "global_sections",
    "global_sections_hypothesis",
    "is_line_bundle",
    "LaurentBasis",
    "local_triviality_witness",
    "ProjEmptyError",
    "twist_degree_lattice",
]

Exponent = tuple[int, ...]


class ProjEmptyError(ValueError):
    def __init__(self, msg: str = "Proj is empty: the ring has no relevant element"):
        super().__init__(msg)


@dataclass(frozen=True)
class LaurentBasis:
    twist: tuple[int, ...]
    monomials: tuple[Exponent, ...]
    complete: bool

    @property
    def dimension(self) -> int:
        return len(self.monomials)


def format_laurent(ring: RingSpec, a: Sequence[int]) -> str:
    """Render an exponent vector as e.g. ``Y*Z*X^-1`` (positive part first)."""
    pos = [(ring.names[i], e) for i, e in enumerate(a) if e > 0]
    neg = [(ring.names[i], e) for i, e in enumerate(a) if e < 0]
    factors = [name if e == 1 else f"{name}^{e}" for name, e in pos + neg]
    return "*".join(factors) if factors else "1"


def _require_nonempty(atlas: ProjAtlas) -> None:
    if not atlas.nonempty:
        raise ProjEmptyError()


def core_support(atlas: ProjAtlas) -> tuple[int, ...]:
    _require_nonempty(atlas)
    return tuple(sorted(reduce(set.intersection, (set(c.support) for c in atlas.charts))))


def _bounded_functional(ring: RingSpec, free: Sequence[int]) -> Optional[tuple[int, ...]]:
    """A functional certifying that ``{deg a = d, a_i >= 0 off free}`` is bounded.

    It vanishes on the degrees of the free variables and is positive on the
    others.  ``None`` means the polyhedron has a nonzero recession direction.
    """
    r = ring.r
    free_cols = [ring.degrees[i] for i in free]
    if rank(free_cols) < len(free_cols):
        return None
    others = [i for i in range(ring.n) if i not in free]
    eqs = orthogonal_complement(subspace_basis(free_cols, r), r) if free_cols else tuple(
        tuple(int(i == j) for j in range(r)) for i in range(r)
    )
    if not others:
        return tuple([0] * r)
    images = [tuple(sum(e[t] * ring.degrees[j][t] for t in range(r)) for e in eqs) for j in others]
    if any(not any(v) for v in images):
        return None
    cone = cone_from_generators(images, len(eqs))
    if not is_pointed(cone):
        return None
    w = relative_interior_point(dual_cone(cone))
    return tuple(sum(w[k] * eqs[k][t] for k in range(len(eqs))) for t in range(r))


def _solve_free(ring: RingSpec, free: Sequence[int], target: Sequence[int]) -> Optional[list[int]]:
    """Unique rational solution of ``sum_{i in free} a_i deg x_i = target``,
    returned only when it exists and is integral."""
    k = len(free)
    rows = [[Fraction(ring.degrees[i][t]) for i in free] + [Fraction(target[t])] for t in range(ring.r)]
    piv_rows = []
    for c in range(k):
        p = next((i for i in range(len(rows)) if i not in piv_rows and rows[i][c] != 0), None)
        if p is None:
            return None  # cannot happen for independent columns
        piv_rows.append(p)
        rows[p] = [x / rows[p][c] for x in rows[p]]
        for i in range(len(rows)):
            if i != p and rows[i][c] != 0:
                rows[i] = [x - rows[i][c] * y for x, y in zip(rows[i], rows[p])]
    if any(rows[i][k] != 0 for i in range(len(rows)) if i not in piv_rows):
        return None
    sol = [rows[p][k] for p in piv_rows]
    if any(x.denominator != 1 for x in sol):
        return None
    return [int(x) for x in sol]


def _bounded_points(ring: RingSpec, d: Sequence[int], free: Sequence[int], w: Sequence[int]) -> list[Exponent]:
    others = [i for i in range(ring.n) if i not in free]
    cw = {j: sum(x * y for x, y in zip(w, ring.degrees[j])) for j in others}
    budget = sum(x * y for x, y in zip(w, d))
    out: list[Exponent] = []
    a = [0] * ring.n

    def leaf():
        t = [x - sum(a[j] * ring.degrees[j][s] for j in others) for s, x in enumerate(d)]
        sol = _solve_free(ring, free, t) if free else ([] if not any(t) else None)
        if sol is not None:
            for i, v in zip(free, sol):
                a[i] = v
            out.append(tuple(a))
            for i in free:
                a[i] = 0

    def rec(pos, left):
        if pos == len(others):
            if left == 0:
                leaf()
            return
        j = others[pos]
        for k in range(left // cw[j] + 1):
            a[j] = k
            rec(pos + 1, left - k * cw[j])
        a[j] = 0

    if budget >= 0:
        rec(0, budget)
    return out


def laurent_points(ring: RingSpec, d: Sequence[int], free: Sequence[int], box: int = DEFAULT_BOX) -> LaurentBasis:
    """Exponents ``a`` of degree ``d`` with ``a_i >= 0`` for ``i`` not in ``free``.

    Exact when the solution polyhedron is bounded; otherwise restricted to
    ``|a_i| <= box`` and flagged incomplete.
    """
    d = tuple(int(x) for x in d)
    if len(d) != ring.r:
        raise ValueError(f"twist has length {len(d)}, expected {ring.r}")
    free = tuple(sorted(free))
    w = _bounded_functional(ring, free)
    if w is not None:
        sols, complete = _bounded_points(ring, d, free, w), True
    else:
        lower = [-box if i in free else 0 for i in range(ring.n)]
        sols, complete = box_solutions(ring.degrees, d, lower, [box] * ring.n), False
    return LaurentBasis(d, tuple(sorted(set(sols), reverse=True)), complete)


def chart_sections(atlas: ProjAtlas, support: Sequence[int], d: Sequence[int], box: int = DEFAULT_BOX) -> LaurentBasis:
    """Monomial basis of ``(A_{x^S})_d``, the sections of ``O_X(d)`` on ``D_+(x^S)``."""
    _require_nonempty(atlas)
    chart = atlas.chart(support)
    return laurent_points(atlas.ring, d, chart.support, box)


def global_sections(atlas: ProjAtlas, d: Sequence[int], box: int = DEFAULT_BOX) -> LaurentBasis:
    """Laurent monomials of degree ``d`` that are sections on every maximal chart."""
    return laurent_points(atlas.ring, d, core_support(atlas), box)


def global_sections_hypothesis(ring: RingSpec) -> bool:
    """Dropping any single variable still leaves degrees of finite index."""
    return all(
        rank([c for i, c in enumerate(ring.degrees) if i != k]) == ring.r for k in range(ring.n)
    )


def twist_degree_lattice(atlas: ProjAtlas) -> Sublattice:
    """Intersection of ``D_S`` over the maximal charts.

    ``D_S`` only grows with ``S``, so this equals the intersection over all
    relevant monomials.
    """
    _require_nonempty(atlas)
    return reduce(lattice_intersection, (c.degree_lattice for c in atlas.charts))


def is_line_bundle(atlas: ProjAtlas, d: Sequence[int]) -> bool:
    """Sufficient criterion: ``d`` lies in ``D_S`` for every chart."""
    return lattice_contains(twist_degree_lattice(atlas), d)


def local_triviality_witness(atlas: ProjAtlas, support: Sequence[int], d: Sequence[int]) -> Optional[Exponent]:
    """A Laurent monomial supported on ``S`` of degree ``d``, if ``d`` is in ``D_S``.

    On ``D_+(x^S)`` it is a unit, so multiplication by it identifies
    ``O_X(d)`` with ``O_X`` there.
    """
    ring = atlas.ring
    chart = atlas.chart(support)
    cols = chart.support
    m = [[ring.degrees[i][t] for i in cols] for t in range(ring.r)]
    sol = solve_integer(m, list(d), len(cols))
    if sol is None:
        return None
    a = [0] * ring.n
    for i, v in zip(cols, sol):
        a[i] = v
    return tuple(a)
