"""Deterministic reports built from the analyses.

A report is a plain ``dict`` of JSON types (lists, never tuples), so
``json.loads(json.dumps(report)) == report``.  Every boolean claim is a
``{"value": ..., "citation": ...}`` pair naming the fact it rests on, and
every enumerated basis carries its ``complete`` flag.
"""

from __future__ import annotations

import json
from itertools import product
from typing import Any, Sequence

from .cone import RationalCone, is_pointed
from .git import ComparisonReport, git_fan, orbit_cones
from .lattice import Sublattice, lattice_index
from .proj import ProjAtlas, build_atlas
from .ring import RingSpec, graded_component, is_effective_grading, weight_cone
from .sheaves import (
    format_laurent,
    global_sections,
    global_sections_hypothesis,
    is_line_bundle,
    LaurentBasis,
    local_triviality_witness,
    twist_degree_lattice,
)

__all__ = [
    "analyze_report",
    "CITATIONS",
    "compare_report",
    "dumps",
    "gitfan_report",
    "linebundle_report",
    "linebundle_scan_report",
    "render_text",
    "sections_report",
]

CITATIONS = {
    "effective": "torus action is effective iff the degrees generate Z^r",
    "nonempty": "Proj is nonempty iff some monomial is relevant, i.e. the degrees span Q^r",
    "chart_prime": "points of a chart are homogeneous primes when its unit degrees D_S equal Z^r",
    "all_points_prime": "every point is a homogeneous prime when every linearly independent r-subset of degrees is a Z-basis",
    "normal": "degree-zero localizations of a normal domain are normal; polynomial rings are normal",
    "sections_hypothesis": "global sections of O(d) equal A_d when each variable can be dropped leaving degrees of full rank",
    "line_bundle": "O(d) is invertible when d lies in D_S for every relevant chart (sufficient condition)",
    "line_bundle_necessary": "for weighted projective space O(d) is invertible iff every weight divides d",
    "quasi_fan": "GIT cones cover the weight cone and meet pairwise in common faces",
    "birational": "a relevant monomial of degree interior to a full-dimensional GIT cone gives a chart shared with the GIT quotient",
    "single_chamber": "the GIT fan has exactly one maximal cone",
    "simplicial": "the weight cone is pointed and simplicial",
    "ray_generated": "every variable degree lies on a ray of the weight cone",
    "veronese": "the Veronese subalgebra in degree u' is generated in degree one (checked up to the bound)",
    "isomorphism": "single chamber, simplicial, ray-generated and Veronese generation together give Proj isomorphic to the GIT quotient",
    "sections_equal": "global sections coincide with the graded component",
}


def _claim(value: bool, key: str) -> dict:
    return {"value": bool(value), "citation": CITATIONS[key]}


def _vec(v) -> list[int]:
    return [int(x) for x in v]


def _vecs(vs) -> list[list[int]]:
    return [_vec(v) for v in vs]


def _index(idx) -> Any:
    return "infinite" if idx == float("inf") else int(idx)


def cone_dict(cone: RationalCone) -> dict:
    return {
        "dim": cone.dim,
        "rays": _vecs(cone.rays),
        "lineality": _vecs(cone.lineality),
        "facets": _vecs(cone.facets),
        "equations": _vecs(cone.equations),
    }


def _lattice_dict(lat: Sublattice) -> dict:
    return {"basis": _vecs(lat.basis), "index": _index(lattice_index(lat))}


def ring_dict(ring: RingSpec) -> dict:
    return {"grading_rank": ring.r, "names": list(ring.names), "degrees": _vecs(ring.degrees)}


def _support_names(ring: RingSpec, support: Sequence[int]) -> list[str]:
    return [ring.names[i] for i in support]


def _basis_dict(ring: RingSpec, monomials, complete: bool) -> dict:
    return {
        "dimension": len(monomials),
        "complete": bool(complete),
        "monomials": [format_laurent(ring, a) for a in monomials],
        "exponents": _vecs(monomials),
    }


def analyze_report(ring: RingSpec, workers: int = 1) -> dict:
    atlas = build_atlas(ring, workers)
    check = atlas.prime_check
    prime = _claim(check.holds, "all_points_prime")
    prime["witness"] = None if check.holds else {
        "support": _support_names(ring, check.witness),
        "support_indices": list(check.witness),
        "determinant": check.witness_det,
    }
    omega = weight_cone(ring)
    return {
        "command": "analyze",
        "ring": ring_dict(ring),
        "weight_cone": cone_dict(omega),
        "weight_cone_pointed": is_pointed(omega),
        "effective_grading": _claim(is_effective_grading(ring), "effective"),
        "proj_nonempty": _claim(atlas.nonempty, "nonempty"),
        "atlas": {
            "chart_count": len(atlas.charts),
            "charts": [
                {
                    "support": _support_names(ring, c.support),
                    "support_indices": list(c.support),
                    "degree_lattice": _lattice_dict(c.degree_lattice),
                    "prime_points": _claim(c.prime_points, "chart_prime"),
                }
                for c in atlas.charts
            ],
        },
        "all_points_prime": prime,
        "normal": _claim(atlas.normal, "normal"),
        "sections_hypothesis": _claim(global_sections_hypothesis(ring), "sections_hypothesis"),
    }


def sections_report(ring: RingSpec, d: Sequence[int], box: int, atlas: ProjAtlas = None) -> dict:
    atlas = atlas or build_atlas(ring)
    gs: LaurentBasis = global_sections(atlas, d, box)
    comp = graded_component(ring, d, box)
    equal = set(gs.monomials) == set(comp.monomials)
    return {
        "command": "sections",
        "ring": ring_dict(ring),
        "twist": _vec(d),
        "global_sections": _basis_dict(ring, gs.monomials, gs.complete),
        "graded_component": _basis_dict(ring, comp.monomials, comp.complete),
        "sections_equal_component": _claim(equal, "sections_equal"),
        "sections_hypothesis": _claim(global_sections_hypothesis(ring), "sections_hypothesis"),
    }


def _weighted_projective(ring: RingSpec) -> bool:
    return ring.r == 1 and all(c[0] > 0 for c in ring.degrees)


def linebundle_report(ring: RingSpec, d: Sequence[int], atlas: ProjAtlas = None) -> dict:
    atlas = atlas or build_atlas(ring)
    ok = is_line_bundle(atlas, d)
    witnesses = []
    for c in atlas.charts:
        w = local_triviality_witness(atlas, c.support, d)
        witnesses.append({
            "support": _support_names(ring, c.support),
            "twist_in_chart_lattice": w is not None,
            "unit": None if w is None else format_laurent(ring, w),
        })
    return {
        "command": "linebundle",
        "ring": ring_dict(ring),
        "twist": _vec(d),
        "criterion": _claim(ok, "line_bundle"),
        "label": "criterion satisfied" if ok else "criterion not satisfied",
        "criterion_is_necessary": _claim(_weighted_projective(ring), "line_bundle_necessary"),
        "twist_degree_lattice": _lattice_dict(twist_degree_lattice(atlas)),
        "chart_witnesses": witnesses,
    }


def linebundle_scan_report(ring: RingSpec, box: int, atlas: ProjAtlas = None) -> dict:
    atlas = atlas or build_atlas(ring)
    rows = []
    for d in product(range(-box, box + 1), repeat=ring.r):
        ok = is_line_bundle(atlas, d)
        rows.append({"twist": list(d), "criterion_satisfied": ok})
    return {
        "command": "linebundle",
        "ring": ring_dict(ring),
        "scan_box": box,
        "citation": CITATIONS["line_bundle"],
        "criterion_is_necessary": _claim(_weighted_projective(ring), "line_bundle_necessary"),
        "twist_degree_lattice": _lattice_dict(twist_degree_lattice(atlas)),
        "satisfied": [r["twist"] for r in rows if r["criterion_satisfied"]],
        "rows": rows,
    }


def gitfan_report(ring: RingSpec) -> dict:
    fan = git_fan(ring)
    return {
        "command": "gitfan",
        "ring": ring_dict(ring),
        "weight_cone": cone_dict(fan.support),
        "orbit_cones": [cone_dict(c) for c in orbit_cones(ring).distinct()],
        "cone_count": len(fan.chambers),
        "cones": [cone_dict(c) for c in fan.chambers],
        "maximal_cones": [cone_dict(c) for c in fan.maximal_cones()],
        "quasi_fan": _claim(True, "quasi_fan"),
    }


def compare_report(ring: RingSpec, rep: ComparisonReport) -> dict:
    out = {
        "command": "compare",
        "ring": ring_dict(ring),
        "applicable": rep.applicable,
        "diagnostic": rep.diagnostic,
        "tail_cone": cone_dict(rep.tail_cone) if rep.tail_cone is not None else None,
    }
    if not rep.applicable:
        out["birational"] = _claim(False, "birational")
        return out
    w = rep.witness
    out.update({
        "chamber": cone_dict(rep.chamber),
        "witness": {
            "support": _support_names(ring, w.support),
            "support_indices": list(w.support),
            "degree": _vec(w.degree),
            "ray_degrees": [
                {"ray": _vec(rd.ray), "multiple": rd.multiple, "monomial": format_laurent(ring, rd.monomial)}
                for rd in w.ray_degrees
            ],
        },
        "birational": _claim(rep.birational, "birational"),
        "single_chamber": _claim(rep.single_chamber, "single_chamber"),
        "simplicial": _claim(rep.simplicial, "simplicial"),
        "ray_generated": _claim(rep.ray_generated, "ray_generated"),
        "veronese_degree": None if rep.veronese_degree is None else _vec(rep.veronese_degree),
        "veronese_generated": None if rep.veronese_generated is None else _claim(rep.veronese_generated, "veronese"),
        "veronese_dims": list(rep.veronese_dims),
        "isomorphism_criterion": _claim(rep.isomorphism_criterion, "isomorphism"),
        "maximal_chambers": [cone_dict(c) for c in rep.maximal_chambers],
    })
    return out


def dumps(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def _flat(value) -> bool:
    return not isinstance(value, (dict, list)) or (
        isinstance(value, list) and not any(isinstance(y, (dict, list)) for y in value)
    )


def _scalar(value) -> str:
    if isinstance(value, list):
        return "(" + ",".join(map(str, value)) + ")"
    if isinstance(value, bool):
        return str(value).lower()
    return "none" if value is None else str(value)


def _render(value, indent: int, lines: list[str], key: str) -> None:
    pad = "  " * indent
    label = f"{key}: " if key else ""
    if isinstance(value, dict) and set(value) == {"value", "citation"}:
        lines.append(f"{pad}{label}{str(value['value']).lower()}  [{value['citation']}]")
    elif isinstance(value, dict):
        lines.append(f"{pad}{key}:" if key else f"{pad}-")
        for k in sorted(value):
            _render(value[k], indent + 1, lines, k)
    elif isinstance(value, list) and value and all(isinstance(x, dict) and all(_flat(y) for y in x.values()) for x in value):
        lines.append(f"{pad}{key}:")
        for x in value:
            lines.append(f"{pad}  - " + ", ".join(f"{k}={_scalar(x[k])}" for k in sorted(x)))
    elif isinstance(value, list) and value and any(isinstance(x, (dict, list)) for x in value):
        if all(isinstance(x, list) and not any(isinstance(y, (dict, list)) for y in x) for x in value):
            lines.append(f"{pad}{label}" + " ".join("(" + ",".join(map(str, x)) + ")" for x in value))
            return
        lines.append(f"{pad}{key}:")
        for x in value:
            _render(x, indent + 1, lines, "")
    elif isinstance(value, list):
        lines.append(f"{pad}{label}[" + ", ".join(map(str, value)) + "]")
    elif isinstance(value, bool):
        lines.append(f"{pad}{label}{str(value).lower()}")
    elif value is None:
        lines.append(f"{pad}{label}none")
    else:
        lines.append(f"{pad}{label}{value}")


def render_text(report: dict) -> str:
    lines: list[str] = []
    for k in sorted(report):
        _render(report[k], 0, lines, k)
    return "\n".join(lines) + "\n"
