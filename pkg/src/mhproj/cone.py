"""Rational polyhedral cones with exact arithmetic.

A cone is stored in a canonical form that carries both descriptions:

* ``rays``: extreme rays modulo the lineality space, each projected
  orthogonally onto the complement of the lineality space;
* ``lineality``: a basis of ``C ∩ -C`` (reduced row echelon, primitive);
* ``facets``: irredundant inward normals, projected onto ``span(C)``;
* ``equations``: a basis of ``span(C)^⊥``.

All vectors are primitive integer tuples and lists are sorted, so two cones
are equal iff their canonical forms are equal.  Duality swaps
``rays <-> facets`` and ``lineality <-> equations``.

Conversion between generators and inequalities uses the double description
method with the combinatorial adjacency test; this is aimed at the small
ambient dimensions that occur for degree matrices (r <= 4 or so).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from typing import Iterable, Optional, Sequence

__all__ = [
    "QuasiFan",
    "RationalCone",
    "cone_from_generators",
    "cone_from_inequalities",
    "contains",
    "dual_cone",
    "faces",
    "intersect",
    "is_face_of",
    "is_full_dimensional",
    "is_pointed",
    "is_simplicial",
    "rays",
    "relative_interior_point",
    "relint_contains",
]

Vector = tuple[int, ...]


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def primitive(v: Iterable) -> Vector:
    """Scale a rational vector to a primitive integer vector (same direction)."""
    v = tuple(v)
    if all(type(x) is int for x in v):
        g = math.gcd(*v)
        return v if g in (0, 1) else tuple(x // g for x in v)
    v = [Fraction(x) for x in v]
    den = reduce(math.lcm, (x.denominator for x in v), 1)
    ints = [int(x * den) for x in v]
    g = reduce(math.gcd, ints, 0)
    if g == 0:
        return tuple(ints)
    return tuple(x // g for x in ints)


def _neg(v):
    return tuple(-x for x in v)


def _rref(rows: Sequence[Sequence], dim: int) -> list[list[Fraction]]:
    m = [[Fraction(x) for x in r] for r in rows]
    out = []
    col = 0
    for col in range(dim):
        piv = next((i for i, r in enumerate(m) if r[col] != 0), None)
        if piv is None:
            continue
        p = m.pop(piv)
        p = [x / p[col] for x in p]
        m = [[x - r[col] * y for x, y in zip(r, p)] for r in m]
        out = [[x - r[col] * y for x, y in zip(r, p)] for r in out]
        out.append(p)
        m = [r for r in m if any(r)]
        if not m:
            break
    return out


def subspace_basis(rows: Sequence[Sequence], dim: int) -> tuple[Vector, ...]:
    """Canonical primitive basis (row echelon) of the span of ``rows``."""
    return tuple(primitive(r) for r in _rref(rows, dim))


def orthogonal_complement(basis: Sequence[Sequence], dim: int) -> tuple[Vector, ...]:
    red = _rref(basis, dim)
    pivots = [next(j for j, x in enumerate(r) if x != 0) for r in red]
    free = [j for j in range(dim) if j not in pivots]
    out = []
    for f in free:
        v = [Fraction(0)] * dim
        v[f] = Fraction(1)
        for r, p in zip(red, pivots):
            v[p] = -r[f]
        out.append(v)
    return subspace_basis(out, dim)


def _project_away(v: Sequence[int], basis: Sequence[Sequence[int]]) -> Vector:
    """Primitive direction of ``v`` minus its orthogonal projection onto span(basis)."""
    if not basis:
        return primitive(v)
    k = len(basis)
    gram = [[Fraction(_dot(basis[i], basis[j])) for j in range(k)] for i in range(k)]
    rhs = [Fraction(_dot(basis[i], v)) for i in range(k)]
    # Gram matrices of independent vectors are positive definite: plain elimination.
    for c in range(k):
        for i in range(c + 1, k):
            f = gram[i][c] / gram[c][c]
            gram[i] = [x - f * y for x, y in zip(gram[i], gram[c])]
            rhs[i] -= f * rhs[c]
    coef = [Fraction(0)] * k
    for i in reversed(range(k)):
        coef[i] = (rhs[i] - sum(gram[i][j] * coef[j] for j in range(i + 1, k))) / gram[i][i]
    w = [Fraction(x) - sum(c * b[j] for c, b in zip(coef, basis)) for j, x in enumerate(v)]
    return primitive(w)


def _double_description(ineqs: Sequence[Vector], dim: int):
    """V-representation of ``{x : <a, x> >= 0 for a in ineqs}``.

    Returns ``(lineality_basis, extreme_rays)``; rays are representatives
    modulo the lineality space.
    """
    lin = [tuple(int(i == j) for j in range(dim)) for i in range(dim)]
    rays: list[tuple[Vector, int]] = []  # (vector, bitmask of tight inequalities)
    for k, a in enumerate(ineqs):
        if not any(a):
            continue
        bit = 1 << k
        j = next((i for i, l in enumerate(lin) if _dot(a, l)), None)
        if j is not None:
            l = lin.pop(j)
            al = _dot(a, l)
            if al < 0:
                l, al = _neg(l), -al
            lin = [primitive([al * x - _dot(a, v) * y for x, y in zip(v, l)]) for v in lin]
            rays = [
                (primitive([al * x - _dot(a, r) * y for x, y in zip(r, l)]), z | bit)
                for r, z in rays
            ]
            rays = [(r, z) for r, z in rays if any(r)]
            rays.append((l, bit - 1))
            continue
        pos, neg, new = [], [], []
        for r, z in rays:
            s = _dot(a, r)
            if s > 0:
                pos.append((r, z, s))
                new.append((r, z))
            elif s < 0:
                neg.append((r, z, s))
            else:
                new.append((r, z | bit))
        masks = [z for _, z in rays]
        for p, zp, sp in pos:
            for q, zq, sq in neg:
                common = zp & zq
                if any(z & common == common and z != zp and z != zq for z in masks):
                    continue
                # the test above compares masks; rays with equal masks are equal rays
                new.append((primitive([sp * y - sq * x for x, y in zip(p, q)]), common | bit))
        rays = new
    seen = {}
    for r, _ in rays:
        seen.setdefault(r, None)
    return lin, list(seen)


@dataclass(frozen=True)
class RationalCone:
    ambient_dim: int
    rays: tuple[Vector, ...]
    lineality: tuple[Vector, ...]
    facets: tuple[Vector, ...]
    equations: tuple[Vector, ...]

    @property
    def dim(self) -> int:
        return self.ambient_dim - len(self.equations)

    @property
    def lineality_dim(self) -> int:
        return len(self.lineality)

    @property
    def generators(self) -> tuple[Vector, ...]:
        """A generating set: rays plus both signs of the lineality basis."""
        return self.rays + self.lineality + tuple(_neg(v) for v in self.lineality)

    def sort_key(self):
        return (self.dim, self.lineality_dim, self.rays, self.lineality, self.facets, self.equations)

    def __contains__(self, v) -> bool:
        return contains(self, v)

    def __repr__(self) -> str:
        parts = [f"rays={list(self.rays)}"]
        if self.lineality:
            parts.append(f"lineality={list(self.lineality)}")
        return f"RationalCone({', '.join(parts)}, dim={self.dim}/{self.ambient_dim})"


def _canonical(dim, rays, lin, facets, eqs) -> RationalCone:
    lin_b = subspace_basis(lin, dim)
    eq_b = subspace_basis(eqs, dim)
    # projecting onto span(C) = removing the span(C)^⊥ component
    ray_set = {_project_away(r, lin_b) for r in rays}
    facet_set = {_project_away(f, eq_b) for f in facets}
    ray_set.discard(tuple([0] * dim))
    facet_set.discard(tuple([0] * dim))
    return RationalCone(dim, tuple(sorted(ray_set)), lin_b, tuple(sorted(facet_set)), eq_b)


@lru_cache(maxsize=65536)
def _from_generators(gens: tuple[Vector, ...], dim: int) -> RationalCone:
    dual_lin, dual_rays = _double_description(gens, dim)
    cons = list(dual_rays) + list(dual_lin) + [_neg(v) for v in dual_lin]
    lin, rays = _double_description(cons, dim)
    return _canonical(dim, rays, lin, dual_rays, dual_lin)


@lru_cache(maxsize=65536)
def _from_inequalities(ineqs: tuple[Vector, ...], dim: int) -> RationalCone:
    lin, rays = _double_description(ineqs, dim)
    gens = list(rays) + list(lin) + [_neg(v) for v in lin]
    dual_lin, dual_rays = _double_description(gens, dim)
    return _canonical(dim, rays, lin, dual_rays, dual_lin)


def cone_from_generators(vectors: Sequence[Sequence], ambient_dim: Optional[int] = None) -> RationalCone:
    """Cone generated by rational vectors (``ambient_dim`` needed if empty)."""
    if ambient_dim is None:
        if not vectors:
            raise ValueError("ambient_dim is required for an empty generating set")
        ambient_dim = len(vectors[0])
    gens = []
    for v in vectors:
        if len(v) != ambient_dim:
            raise ValueError(f"generator {tuple(v)} not in Q^{ambient_dim}")
        p = primitive(v)
        if any(p):
            gens.append(p)
    return _from_generators(tuple(sorted(set(gens))), ambient_dim)


def cone_from_inequalities(
    inequalities: Sequence[Sequence],
    equations: Sequence[Sequence] = (),
    ambient_dim: Optional[int] = None,
) -> RationalCone:
    """``{x : <a, x> >= 0, <e, x> = 0}``."""
    if ambient_dim is None:
        rows = list(inequalities) + list(equations)
        if not rows:
            raise ValueError("ambient_dim is required without constraints")
        ambient_dim = len(rows[0])
    cons = {primitive(a) for a in inequalities}
    for e in equations:
        p = primitive(e)
        cons.add(p)
        cons.add(_neg(p))
    cons.discard(tuple([0] * ambient_dim))
    return _from_inequalities(tuple(sorted(cons)), ambient_dim)


def zero_cone(dim: int) -> RationalCone:
    return cone_from_generators([], dim)


def full_space(dim: int) -> RationalCone:
    return cone_from_inequalities([], [], dim)


def dual_cone(cone: RationalCone) -> RationalCone:
    return RationalCone(cone.ambient_dim, cone.facets, cone.equations, cone.rays, cone.lineality)


def contains(cone: RationalCone, v: Sequence) -> bool:
    return all(_dot(e, v) == 0 for e in cone.equations) and all(_dot(f, v) >= 0 for f in cone.facets)


def relint_contains(cone: RationalCone, v: Sequence) -> bool:
    return all(_dot(e, v) == 0 for e in cone.equations) and all(_dot(f, v) > 0 for f in cone.facets)


def intersect(c1: RationalCone, c2: RationalCone) -> RationalCone:
    if c1.ambient_dim != c2.ambient_dim:
        raise ValueError("cones live in different ambient spaces")
    if c1 == c2:
        return c1
    return _intersect(*sorted((c1, c2), key=RationalCone.sort_key))


@lru_cache(maxsize=65536)
def _intersect(c1: RationalCone, c2: RationalCone) -> RationalCone:
    return cone_from_inequalities(c1.facets + c2.facets, c1.equations + c2.equations, c1.ambient_dim)


def intersect_all(cones: Sequence[RationalCone], ambient_dim: int) -> RationalCone:
    if not cones:
        return full_space(ambient_dim)
    facets = sum((c.facets for c in cones), ())
    eqs = sum((c.equations for c in cones), ())
    return cone_from_inequalities(facets, eqs, ambient_dim)


def is_pointed(cone: RationalCone) -> bool:
    return not cone.lineality


def is_full_dimensional(cone: RationalCone) -> bool:
    return not cone.equations


def is_simplicial(cone: RationalCone) -> bool:
    """Rays modulo lineality are linearly independent (for pointed cones:
    as many rays as the dimension)."""
    return len(cone.rays) == cone.dim - cone.lineality_dim


def rays(cone: RationalCone) -> tuple[Vector, ...]:
    return cone.rays


def interior_point(cone: RationalCone) -> Vector:
    """Like :func:`relative_interior_point`, but the zero cone gives 0."""
    dim = cone.ambient_dim
    return tuple(sum(v[i] for v in cone.rays + cone.lineality) for i in range(dim))


def relative_interior_point(cone: RationalCone) -> Vector:
    """Sum of the canonical rays and lineality basis vectors."""
    if cone.dim == 0:
        raise ValueError("the zero cone has no interior weight")
    return interior_point(cone)


def face_containing(cone: RationalCone, v: Sequence) -> RationalCone:
    """The smallest face of ``cone`` containing the point ``v`` of ``cone``."""
    tight = [f for f in cone.facets if _dot(f, v) == 0]
    return cone_from_inequalities(cone.facets, cone.equations + tuple(tight), cone.ambient_dim)


@lru_cache(maxsize=65536)
def is_subcone(inner: RationalCone, outer: RationalCone) -> bool:
    return all(contains(outer, g) for g in inner.generators)


@lru_cache(maxsize=65536)
def is_face_of(face: RationalCone, cone: RationalCone) -> bool:
    if face.ambient_dim != cone.ambient_dim or not is_subcone(face, cone):
        return False
    return face_containing(cone, interior_point(face)) == face


def faces(cone: RationalCone) -> list[RationalCone]:
    """All faces, sorted canonically (the lineality space is the smallest)."""
    seen = {cone}
    todo = [cone]
    while todo:
        c = todo.pop()
        for f in c.facets:
            sub = cone_from_inequalities(c.facets, c.equations + (f,), c.ambient_dim)
            if sub not in seen:
                seen.add(sub)
                todo.append(sub)
    return sorted(seen, key=RationalCone.sort_key)


@dataclass(frozen=True)
class QuasiFan:
    """Cones meeting pairwise in common faces; lineality may be shared."""

    cones: tuple[RationalCone, ...]
    support: RationalCone

    def maximal_cones(self) -> tuple[RationalCone, ...]:
        return tuple(
            c for c in self.cones
            if not any(c != d and is_subcone(c, d) for d in self.cones)
        )

    def violations(self) -> list[tuple[RationalCone, RationalCone]]:
        """Pairs whose intersection is not a face of both members."""
        bad = []
        for i, a in enumerate(self.cones):
            for b in self.cones[i + 1:]:
                meet = intersect(a, b)
                if not (is_face_of(meet, a) and is_face_of(meet, b)):
                    bad.append((a, b))
        return bad
