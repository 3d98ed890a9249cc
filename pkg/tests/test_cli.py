from __future__ import annotations

import json
from pathlib import Path

import pytest

from mhproj.cli import InputError, main, parse_input
from mhproj.git import comparison_report
from mhproj.report import (
    analyze_report,
    compare_report,
    dumps,
    gitfan_report,
    linebundle_report,
    linebundle_scan_report,
    render_text,
    sections_report,
)
from mhproj.ring import RingSpec

INPUTS = Path(__file__).resolve().parents[1] / "inputs"


def _run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def _write(tmp_path: Path, payload) -> Path:
    path = tmp_path / "ring.json"
    path.write_text(payload if isinstance(payload, str) else json.dumps(payload), encoding="utf-8")
    return path


def _report(tmp_path, capsys, *argv) -> dict:
    out = tmp_path / "out.json"
    code, _, err = _run(capsys, *argv, "--json", out)
    assert code == 0, err
    return json.loads(out.read_text(encoding="utf-8"))


def test_analyze_xyz_ring(tmp_path, capsys):
    rep = _report(tmp_path, capsys, "analyze", INPUTS / "xyz_ring.json")
    assert rep["atlas"]["chart_count"] == 2
    assert [c["support"] for c in rep["atlas"]["charts"]] == [["X", "Y"], ["X", "Z"]]
    assert rep["all_points_prime"]["value"] is True
    assert rep["sections_hypothesis"]["value"] is False
    assert rep["normal"]["value"] is True and rep["normal"]["citation"]


def test_analyze_empty_proj(tmp_path, capsys):
    rep = _report(tmp_path, capsys, "analyze", INPUTS / "empty_proj.json")
    assert rep["proj_nonempty"]["value"] is False
    assert rep["atlas"]["charts"] == []


def test_analyze_p2_text(capsys):
    code, out, _ = _run(capsys, "analyze", INPUTS / "p2.json")
    assert code == 0
    assert "chart_count: 3" in out
    assert "effective_grading: true" in out


def test_sections_xyz_ring(tmp_path, capsys):
    rep = _report(tmp_path, capsys, "sections", INPUTS / "xyz_ring.json", "2,-1")
    gs = rep["global_sections"]
    assert gs["dimension"] == 3 and gs["complete"] is True
    assert "Y*Z*X^-1" in gs["monomials"]
    assert rep["graded_component"]["dimension"] == 0


def test_linebundle_scan(tmp_path, capsys):
    rep = _report(tmp_path, capsys, "linebundle", INPUTS / "wps123.json", "--scan", "12")
    assert rep["satisfied"] == [[-12], [-6], [0], [6], [12]]
    assert len(rep["rows"]) == 25
    code, out, _ = _run(capsys, "linebundle", INPUTS / "wps123.json", "-d", "-6")
    assert code == 0 and "label: criterion satisfied" in out
    code, out, _ = _run(capsys, "linebundle", INPUTS / "wps123.json", "4")
    assert code == 0 and "label: criterion not satisfied" in out


def test_gitfan_line(tmp_path, capsys):
    rep = _report(tmp_path, capsys, "gitfan", INPUTS / "line.json")
    assert rep["cone_count"] == 3
    assert len(rep["maximal_cones"]) == 2


def test_compare(tmp_path, capsys):
    rep = _report(tmp_path, capsys, "compare", INPUTS / "p1xp1.json")
    assert rep["isomorphism_criterion"]["value"] is True
    rep = _report(tmp_path, capsys, "compare", INPUTS / "empty_proj.json")
    assert rep["applicable"] is False and "not applicable" in rep["diagnostic"]


@pytest.mark.parametrize(
    "payload, needle",
    [
        ('{"grading_rank": 2,\n "degrees": [[1, 0]\n', "3:1"),
        ({"grading_rank": 0, "degrees": [[1]]}, "grading_rank"),
        ({"grading_rank": 2, "degrees": [[1, 0], [1]]}, "degrees[1]"),
        ({"grading_rank": 1, "degrees": [[1], ["a"]]}, "degrees[1]"),
        ({"grading_rank": 1, "degrees": [[1]], "names": ["a", "b"]}, "names"),
        ({"grading_rank": 1, "degrees": [[1]], "options": {"exponent_box": 0}}, "options.exponent_box"),
        ({"grading_rank": 1, "degrees": [[1]], "colour": 1}, "colour"),
        ({"grading_rank": 2, "degrees": [[1, 0], [0, 0]]}, "A_0 = k"),
    ],
)
def test_input_errors_exit_2(tmp_path, capsys, payload, needle):
    code, _, err = _run(capsys, "analyze", _write(tmp_path, payload))
    assert code == 2
    assert needle in err


def test_bad_degree_and_missing_file(tmp_path, capsys):
    code, _, err = _run(capsys, "sections", INPUTS / "xyz_ring.json", "1")
    assert code == 2 and "grading_rank" in err
    code, _, err = _run(capsys, "sections", INPUTS / "xyz_ring.json")
    assert code == 2
    code, _, err = _run(capsys, "analyze", tmp_path / "missing.json")
    assert code == 2 and "cannot read" in err


def test_analysis_errors_exit_1(capsys):
    code, _, err = _run(capsys, "sections", INPUTS / "empty_proj.json", "1,0")
    assert code == 1 and "Proj is empty" in err
    code, _, err = _run(capsys, "linebundle", INPUTS / "empty_proj.json", "1,0")
    assert code == 1


def test_parse_input_defaults():
    ring, opts = parse_input('{"grading_rank": 1, "degrees": [[1], [2]]}')
    assert ring.names == ("x1", "x2")
    assert (opts.exponent_box, opts.veronese_bound, opts.ray_multiple_bound) == (12, 6, 24)
    with pytest.raises(InputError):
        parse_input("[]")


RINGS = [
    RingSpec([(0, 1), (1, 0), (1, 0)], ["X", "Y", "Z"]),
    RingSpec([(1,), (2,), (3,)]),
    RingSpec([(1,), (-1,)]),
    RingSpec([(1, 0), (0, 1), (1, 1), (-1, 2)]),
]


@pytest.mark.parametrize("ring", RINGS)
def test_reports_round_trip(ring):
    twist = (1,) * ring.r
    reports = [
        analyze_report(ring),
        sections_report(ring, twist, 4),
        linebundle_report(ring, twist),
        linebundle_scan_report(ring, 2),
        gitfan_report(ring),
        compare_report(ring, comparison_report(ring)),
    ]
    for rep in reports:
        assert json.loads(dumps(rep)) == rep
        assert dumps(rep) == dumps(json.loads(dumps(rep)))
        assert render_text(rep) == render_text(json.loads(dumps(rep)))


def _claims(node):
    if isinstance(node, dict):
        if "value" in node and isinstance(node["value"], bool):
            yield node
        for v in node.values():
            yield from _claims(v)
    elif isinstance(node, list):
        for v in node:
            yield from _claims(v)


@pytest.mark.parametrize("ring", RINGS)
def test_every_claim_is_cited(ring):
    rep = analyze_report(ring)
    claims = list(_claims(rep))
    assert claims and all(c.get("citation") for c in claims)
    rep = sections_report(ring, (0,) * ring.r, 3)
    assert "complete" in rep["global_sections"] and "complete" in rep["graded_component"]
