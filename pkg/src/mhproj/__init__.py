"""Multihomogeneous Proj of polynomial rings graded by ``Z^r``.

Charts, point and normality criteria, twisted sheaves, and the comparison
with the GIT quotient of the associated torus action.
"""

from .cone import RationalCone, cone_from_generators, cone_from_inequalities, dual_cone
from .git import ComparisonReport, comparison_report, git_cone, git_fan, semistable_supports
from .lattice import Sublattice, lattice_index, smith_normal_form
from .proj import ProjAtlas, all_points_prime, build_atlas
from .relevance import is_relevant_support, minimal_relevant_supports
from .ring import RingSpec, graded_component, weight_cone
from .sheaves import ProjEmptyError, global_sections, is_line_bundle, twist_degree_lattice

__all__ = [
    "ComparisonReport",
    "ProjAtlas",
    "ProjEmptyError",
    "RationalCone",
    "RingSpec",
    "Sublattice",
    "all_points_prime",
    "build_atlas",
    "comparison_report",
    "cone_from_generators",
    "cone_from_inequalities",
    "dual_cone",
    "git_cone",
    "git_fan",
    "global_sections",
    "graded_component",
    "is_line_bundle",
    "is_relevant_support",
    "lattice_index",
    "minimal_relevant_supports",
    "semistable_supports",
    "smith_normal_form",
    "twist_degree_lattice",
    "weight_cone",
]
