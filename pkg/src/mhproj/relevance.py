"""Relevant monomial supports and their degree lattices.

Localizing at a monomial with support ``S`` inverts exactly the variables
in ``S``; the homogeneous units of that localization are then the scalar
multiples of Laurent monomials in those variables.  Their degrees form the
lattice ``D_S`` spanned by ``deg x_i`` for ``i`` in ``S``, so the monomial
is relevant iff ``[Z^r : D_S]`` is finite, i.e. iff ``D_S`` has full rank.
Relevance is monotone in ``S``, so the minimal relevant supports describe
all of them.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .lattice import INFINITE, Sublattice, lattice_index, rank, sublattice_from_generators
from .ring import RingSpec

__all__ = [
    "RelevanceReport",
    "SupportSet",
    "has_relevant_element",
    "is_relevant_support",
    "minimal_relevant_supports",
    "support_degree_lattice",
]

#: Sorted tuple of 0-based variable indices.
SupportSet = tuple[int, ...]


@dataclass(frozen=True)
class RelevanceReport:
    support: SupportSet
    degree_lattice: Sublattice
    index: object  # int or INFINITE

    @property
    def relevant(self) -> bool:
        return self.index != INFINITE


def _check_support(ring: RingSpec, support: Sequence[int]) -> SupportSet:
    s = tuple(sorted(set(int(i) for i in support)))
    if not s:
        raise ValueError("support must be nonempty")
    if s[0] < 0 or s[-1] >= ring.n:
        raise ValueError(f"support {s} has indices outside 0..{ring.n - 1}")
    return s


def support_degree_lattice(ring: RingSpec, support: Sequence[int]) -> Sublattice:
    s = _check_support(ring, support)
    return sublattice_from_generators([ring.degrees[i] for i in s], ring.r)


def is_relevant_support(ring: RingSpec, support: Sequence[int]) -> RelevanceReport:
    s = _check_support(ring, support)
    lat = support_degree_lattice(ring, s)
    return RelevanceReport(s, lat, lattice_index(lat))


def _full_rank_flags(degrees, r, subsets):
    return [rank([degrees[i] for i in s]) == r for s in subsets]


def _all_supports(n: int) -> list[SupportSet]:
    return [s for k in range(1, n + 1) for s in combinations(range(n), k)]


def relevant_flags(ring: RingSpec, workers: int = 1) -> dict[SupportSet, bool]:
    """Relevance of every nonempty support (``2^n - 1`` rank checks)."""
    subsets = _all_supports(ring.n)
    if workers <= 1 or len(subsets) < 64:
        flags = _full_rank_flags(ring.degrees, ring.r, subsets)
    else:
        chunk = -(-len(subsets) // workers)
        parts = [subsets[i:i + chunk] for i in range(0, len(subsets), chunk)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = pool.map(_full_rank_flags, [ring.degrees] * len(parts), [ring.r] * len(parts), parts)
            flags = [f for part in results for f in part]
    return dict(zip(subsets, flags))


def minimal_relevant_supports(ring: RingSpec, workers: int = 1) -> list[SupportSet]:
    """Inclusion-minimal relevant supports in lexicographic order."""
    flags = relevant_flags(ring, workers)
    minimal = [
        s for s, ok in flags.items()
        if ok and not any(flags.get(s[:i] + s[i + 1:], False) for i in range(len(s)))
    ]
    return sorted(minimal)


def has_relevant_element(ring: RingSpec) -> bool:
    return rank(list(ring.degrees)) == ring.r
