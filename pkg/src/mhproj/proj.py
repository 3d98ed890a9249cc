"""Chart atlas of the multihomogeneous Proj of a graded polynomial ring.

The charts ``D_+(x^S)`` for relevant monomials cover the space, and
``D_+(x^S)`` contains ``D_+(x^T)`` whenever ``S ⊆ T``; the charts of the
inclusion-minimal relevant supports are therefore the maximal ones.  Points
are never listed.  Whether they are honest homogeneous primes is reported
through two lattice criteria instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

from .lattice import Sublattice, determinant
from .relevance import SupportSet, is_relevant_support, minimal_relevant_supports
from .ring import RingSpec

__all__ = [
    "Chart",
    "NotRelevantError",
    "PrimePointCheck",
    "ProjAtlas",
    "all_points_prime",
    "build_atlas",
    "chart_intersection",
    "chart_prime_property",
    "make_chart",
]


class NotRelevantError(ValueError):
    pass


@dataclass(frozen=True)
class Chart:
    support: SupportSet
    degree_lattice: Sublattice
    index: int

    @property
    def prime_points(self) -> bool:
        """Unit degrees of the localization are all of ``Z^r``."""
        return self.index == 1


@dataclass(frozen=True)
class PrimePointCheck:
    holds: bool
    witness: Optional[SupportSet] = None
    witness_det: Optional[int] = None


@dataclass(frozen=True)
class ProjAtlas:
    ring: RingSpec
    charts: tuple[Chart, ...]
    prime_check: PrimePointCheck

    @property
    def nonempty(self) -> bool:
        return bool(self.charts)

    @property
    def normal(self) -> bool:
        # degree-zero parts of localizations of a normal domain are normal,
        # and a polynomial ring is a normal domain
        return True

    @property
    def all_points_prime(self) -> bool:
        return self.prime_check.holds

    def chart(self, support: Sequence[int]) -> Chart:
        s = tuple(sorted(support))
        for c in self.charts:
            if c.support == s:
                return c
        raise KeyError(f"{s} is not a chart of the atlas")


def make_chart(ring: RingSpec, support: Sequence[int]) -> Chart:
    rep = is_relevant_support(ring, support)
    if not rep.relevant:
        raise NotRelevantError(f"support {rep.support} is not relevant")
    return Chart(rep.support, rep.degree_lattice, rep.index)


def all_points_prime(ring: RingSpec) -> PrimePointCheck:
    """Every independent ``r``-subset of degrees is a basis of ``Z^r``.

    Scans the ``r``-subsets in lexicographic order; the first independent
    subset with ``|det| > 1`` is returned as witness.
    """
    for idx in combinations(range(ring.n), ring.r):
        det = determinant([ring.degrees[i] for i in idx])
        if det and abs(det) != 1:
            return PrimePointCheck(False, idx, abs(det))
    return PrimePointCheck(True)


def chart_prime_property(ring: RingSpec, support: Sequence[int]) -> bool:
    """``D_S = Z^r``: points of the chart are the homogeneous primes missing ``x^S``."""
    return make_chart(ring, support).prime_points


def build_atlas(ring: RingSpec, workers: int = 1) -> ProjAtlas:
    charts = tuple(make_chart(ring, s) for s in minimal_relevant_supports(ring, workers))
    return ProjAtlas(ring, charts, all_points_prime(ring))


def chart_intersection(ring: RingSpec, c1: Chart, c2: Chart) -> Chart:
    """``D_+(f) ∩ D_+(g) = D_+(fg)``: the chart of the union of supports."""
    return make_chart(ring, sorted(set(c1.support) | set(c2.support)))
