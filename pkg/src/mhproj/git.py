"""Torus-action side: orbit cones, GIT cones, the GIT quasi-fan, and the
comparison between the multihomogeneous Proj and the quotient ``Y``.

For a polynomial ring a point ``x`` admits a semi-invariant of degree ``m``
not vanishing at ``x`` iff ``m`` is a nonnegative combination of the degrees
of the coordinates that are nonzero at ``x``.  The orbit cone of ``x`` is
therefore the cone spanned by the degrees of its support, and all of the
constructions below are finite computations over supports.

The GIT cones are found by refining the weight cone along every facet
hyperplane of every orbit cone: orbit-cone membership is constant on the
relative interior of each cell of that refinement, so evaluating the GIT
cone at one interior point per cell finds them all.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Optional, Sequence

from .cone import (
    QuasiFan,
    RationalCone,
    cone_from_generators,
    cone_from_inequalities,
    contains,
    dual_cone,
    faces,
    interior_point,
    intersect_all,
    is_pointed,
    is_simplicial,
    is_subcone,
    primitive,
    relint_contains,
)
from .lattice import adjugate, determinant
from .relevance import SupportSet, is_relevant_support
from .ring import DEFAULT_BOX, RingSpec, graded_component, veronese_dims, veronese_generated_in_degree_one, weight_cone

__all__ = [
    "ComparisonReport",
    "GITFan",
    "OrbitConeTable",
    "QuasiFanError",
    "RayDegree",
    "RelevantWitness",
    "comparison_report",
    "git_cone",
    "git_fan",
    "orbit_cones",
    "relevant_in_relint",
    "semistable_supports",
]

DEFAULT_VERONESE_BOUND = 6
DEFAULT_RAY_MULTIPLE_BOUND = 24


class QuasiFanError(RuntimeError):
    """The computed GIT cones do not form a quasi-fan (a bug, not bad input)."""


@dataclass(frozen=True)
class OrbitConeTable:
    entries: dict[SupportSet, RationalCone]

    def distinct(self) -> list[RationalCone]:
        return sorted(set(self.entries.values()), key=RationalCone.sort_key)


@dataclass(frozen=True)
class GITFan(QuasiFan):
    @property
    def chambers(self) -> tuple[RationalCone, ...]:
        return self.cones


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def orbit_cones(ring: RingSpec) -> OrbitConeTable:
    """Cone of ``{deg x_i : i in S}`` for every support ``S``.

    The empty support belongs to the origin of ``k^n``; its orbit cone is
    ``{0}``, which makes ``lambda(0) = {0}``.
    """
    entries = {}
    for k in range(ring.n + 1):
        for s in combinations(range(ring.n), k):
            entries[s] = cone_from_generators([ring.degrees[i] for i in s], ring.r)
    return OrbitConeTable(entries)


def _require_in_weight_cone(ring: RingSpec, m: Sequence[int]) -> None:
    if len(m) != ring.r:
        raise ValueError(f"degree has length {len(m)}, expected {ring.r}")
    if not contains(weight_cone(ring), m):
        raise ValueError(f"{tuple(m)} is not in the weight cone")


def _lambda(cones: Sequence[RationalCone], m: Sequence, r: int, cache: Optional[dict] = None) -> RationalCone:
    mask = tuple(contains(c, m) for c in cones)
    if cache is not None and mask in cache:
        return cache[mask]
    result = intersect_all([c for c, inside in zip(cones, mask) if inside], r)
    if cache is not None:
        cache[mask] = result
    return result


def git_cone(ring: RingSpec, m: Sequence[int]) -> RationalCone:
    """Intersection of all orbit cones containing ``m``."""
    _require_in_weight_cone(ring, m)
    return _lambda(orbit_cones(ring).distinct(), m, ring.r)


def _sign_normalized(v):
    p = primitive(v)
    lead = next(x for x in p if x)
    return p if lead > 0 else tuple(-x for x in p)


def refinement_cells(support: RationalCone, cones: Sequence[RationalCone]) -> list[RationalCone]:
    """Faces of the subdivision of ``support`` cut out by the cones' hyperplanes."""
    hyperplanes = sorted({_sign_normalized(h) for c in cones for h in c.facets + c.equations})
    regions = [support]
    for h in hyperplanes:
        neg_h = tuple(-x for x in h)
        split = []
        for reg in regions:
            vals = [_dot(h, v) for v in reg.rays]
            if any(_dot(h, v) for v in reg.lineality) or (any(x > 0 for x in vals) and any(x < 0 for x in vals)):
                split.append(cone_from_inequalities(reg.facets + (h,), reg.equations, reg.ambient_dim))
                split.append(cone_from_inequalities(reg.facets + (neg_h,), reg.equations, reg.ambient_dim))
            else:
                split.append(reg)
        regions = split
    cells = set()
    for reg in regions:
        cells.update(faces(reg))
    return sorted(cells, key=RationalCone.sort_key)


def git_fan(ring: RingSpec) -> GITFan:
    omega = weight_cone(ring)
    cones = orbit_cones(ring).distinct()
    cache: dict = {}
    chambers = {
        _lambda(cones, interior_point(cell), ring.r, cache)
        for cell in refinement_cells(omega, cones)
    }
    chambers.add(_lambda(cones, (0,) * ring.r, ring.r, cache))
    fan = GITFan(tuple(sorted(chambers, key=RationalCone.sort_key)), omega)
    for c in fan.chambers:
        if not is_subcone(c, omega):
            raise QuasiFanError(f"GIT cone {c} leaves the weight cone {omega}")
    bad = fan.violations()
    if bad:
        a, b = bad[0]
        raise QuasiFanError(f"GIT cones {a} and {b} do not meet in a common face")
    return fan


@lru_cache(maxsize=4096)
def _cone_solvers(degrees: tuple, r: int) -> tuple:
    """For each independent subset of size at most ``r`` (by size, then
    lexicographically): its bitmask, columns, the rows of a nonzero maximal
    minor, and that minor's determinant and adjugate."""
    out = []
    for k in range(1, r + 1):
        for s in combinations(range(len(degrees)), k):
            cols = [degrees[i] for i in s]
            for rows in combinations(range(r), k):
                minor = [[c[t] for c in cols] for t in rows]
                det = determinant(minor)
                if det:
                    out.append((s, sum(1 << i for i in s), cols, rows, det, adjugate(minor)))
                    break
    return tuple(out)


def _in_cone_of(cols, rows, det, adj, m) -> bool:
    """Is ``m`` a nonnegative combination of the independent ``cols``?

    Cramer's rule gives ``det`` times the coefficients; the remaining
    coordinates are then checked directly.
    """
    rhs = [m[t] for t in rows]
    scaled = [sum(a * b for a, b in zip(row, rhs)) for row in adj]
    if any(x * det < 0 for x in scaled):
        return False
    return all(sum(x * c[t] for x, c in zip(scaled, cols)) == det * mt for t, mt in enumerate(m))


def semistable_supports(ring: RingSpec, m: Sequence[int]) -> list[SupportSet]:
    """Inclusion-minimal supports ``S`` with ``m`` in the cone of ``deg_S``.

    Such a minimal ``S`` has linearly independent degrees (Carathéodory), so
    only independent subsets of size at most ``r`` are scanned.  ``m = 0``
    gives the empty support: every point is semistable.
    """
    if len(m) != ring.r:
        raise ValueError(f"degree has length {len(m)}, expected {ring.r}")
    m = [int(x) for x in m]
    if not any(m):
        return [()]
    hits: list[SupportSet] = []
    masks: list[int] = []
    for s, bits, cols, rows, det, adj in _cone_solvers(ring.degrees, ring.r):
        if any(h & bits == h for h in masks):
            continue
        if _in_cone_of(cols, rows, det, adj, m):
            hits.append(s)
            masks.append(bits)
    return sorted(hits)


@dataclass(frozen=True)
class RayDegree:
    """Smallest degree on a ray hit by a monomial, with that monomial."""

    ray: tuple[int, ...]
    multiple: int
    monomial: tuple[int, ...]

    @property
    def degree(self) -> tuple[int, ...]:
        return tuple(self.multiple * x for x in self.ray)


@dataclass(frozen=True)
class RelevantWitness:
    support: SupportSet
    degree: tuple[int, ...]
    ray_degrees: tuple[RayDegree, ...]


def realize_ray(ring: RingSpec, ray: Sequence[int], bound: int = DEFAULT_RAY_MULTIPLE_BOUND, box: int = DEFAULT_BOX) -> RayDegree:
    """Smallest ``k <= bound`` with a monomial of degree ``k * ray``.

    Variables whose degree lies on the ray are tried first; there the
    answer is the smallest of their multiples.  Otherwise graded pieces are
    searched and the monomial with the fewest variables is kept.
    """
    ray = primitive(ray)
    on_ray = []
    for i, c in enumerate(ring.degrees):
        if primitive(c) == ray:
            mult = next(x // y for x, y in zip(c, ray) if y)
            on_ray.append((mult, i))
    if on_ray:
        mult, i = min(on_ray)
        mono = tuple(int(j == i) for j in range(ring.n))
        return RayDegree(ray, mult, mono)
    for k in range(1, bound + 1):
        monos = graded_component(ring, [k * x for x in ray], box).monomials
        if monos:
            best = min(monos, key=lambda a: (sum(1 for x in a if x), tuple(-x for x in a)))
            return RayDegree(ray, k, best)
    raise RuntimeError(f"no monomial of degree k*{ray} for k <= {bound}; raise the ray multiple bound")


def relevant_in_relint(
    ring: RingSpec,
    chamber: RationalCone,
    bound: int = DEFAULT_RAY_MULTIPLE_BOUND,
    box: int = DEFAULT_BOX,
) -> RelevantWitness:
    """A relevant monomial support whose degree lies in the relative interior
    of a full-dimensional GIT cone: the product of one monomial per ray."""
    if chamber.dim != ring.r:
        raise ValueError("the chamber must be full-dimensional")
    realized = tuple(realize_ray(ring, g, bound, box) for g in chamber.generators)
    degree = tuple(sum(rd.degree[t] for rd in realized) for t in range(ring.r))
    support = tuple(sorted({i for rd in realized for i, e in enumerate(rd.monomial) if e}))
    if not relint_contains(chamber, degree):
        raise RuntimeError(f"witness degree {degree} is not interior to {chamber}")
    if not is_relevant_support(ring, support).relevant:
        raise RuntimeError(f"witness support {support} is not relevant")
    return RelevantWitness(support, degree, realized)


@dataclass(frozen=True)
class ComparisonReport:
    applicable: bool
    diagnostic: str = ""
    chamber: Optional[RationalCone] = None
    witness: Optional[RelevantWitness] = None
    single_chamber: bool = False
    simplicial: bool = False
    ray_generated: bool = False
    veronese_degree: Optional[tuple[int, ...]] = None
    veronese_generated: Optional[bool] = None
    veronese_dims: tuple[int, ...] = ()
    tail_cone: Optional[RationalCone] = None
    maximal_chambers: tuple[RationalCone, ...] = field(default=())

    @property
    def birational(self) -> bool:
        return self.applicable

    @property
    def isomorphism_criterion(self) -> bool:
        return bool(self.single_chamber and self.simplicial and self.ray_generated and self.veronese_generated)

    @property
    def witness_support(self) -> Optional[SupportSet]:
        return self.witness.support if self.witness else None

    @property
    def witness_degree(self) -> Optional[tuple[int, ...]]:
        return self.witness.degree if self.witness else None


def comparison_report(
    ring: RingSpec,
    veronese_bound: int = DEFAULT_VERONESE_BOUND,
    ray_multiple_bound: int = DEFAULT_RAY_MULTIPLE_BOUND,
    box: int = DEFAULT_BOX,
) -> ComparisonReport:
    omega = weight_cone(ring)
    fan = git_fan(ring)
    full = [c for c in fan.chambers if c.dim == ring.r]
    if not full:
        return ComparisonReport(
            applicable=False,
            diagnostic=(
                "comparison not applicable: the weight cone is not full-dimensional, "
                "so no GIT cone is full-dimensional and no relevant degree can be "
                "placed in the interior of a chamber"
            ),
            tail_cone=dual_cone(omega),
        )
    chamber = full[0]
    witness = relevant_in_relint(ring, chamber, ray_multiple_bound, box)
    maximal = fan.maximal_cones()
    single = len(maximal) == 1
    simplicial = is_pointed(omega) and is_simplicial(omega)
    ray_generated = is_pointed(omega) and all(primitive(c) in omega.rays for c in ring.degrees)
    u_prime = None
    generated = None
    dims: tuple[int, ...] = ()
    if single and simplicial and ray_generated:
        rds = [realize_ray(ring, ray, ray_multiple_bound, box) for ray in omega.rays]
        u_prime = tuple(sum(rd.degree[t] for rd in rds) for t in range(ring.r))
        generated = veronese_generated_in_degree_one(ring, u_prime, veronese_bound)
    if is_pointed(omega):
        dims = tuple(veronese_dims(ring, witness.degree, veronese_bound, box)[0])
    return ComparisonReport(
        applicable=True,
        chamber=chamber,
        witness=witness,
        single_chamber=single,
        simplicial=simplicial,
        ray_generated=ray_generated,
        veronese_degree=u_prime,
        veronese_generated=generated,
        veronese_dims=dims,
        tail_cone=dual_cone(omega),
        maximal_chambers=maximal,
    )
