"""Command-line front end.

Input is one JSON document::

    {"grading_rank": 2,
     "degrees": [[0, 1], [1, 0], [1, 0]],
     "names": ["X", "Y", "Z"],
     "options": {"exponent_box": 12, "veronese_bound": 6, "ray_multiple_bound": 24}}

Exit codes: 0 on success, 1 when an analysis cannot be carried out, 2 for
unreadable or malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

from .git import QuasiFanError, comparison_report
from .proj import build_atlas
from .report import (
    analyze_report,
    compare_report,
    dumps,
    gitfan_report,
    linebundle_report,
    linebundle_scan_report,
    render_text,
    sections_report,
)
from .ring import RingSpec, ZeroDegreeError
from .sheaves import ProjEmptyError

__all__ = ["InputError", "Options", "load_input", "main", "parse_input"]

OPTION_DEFAULTS = {"exponent_box": 12, "veronese_bound": 6, "ray_multiple_bound": 24}


class InputError(ValueError):
    pass


@dataclass(frozen=True)
class Options:
    exponent_box: int = 12
    veronese_bound: int = 6
    ray_multiple_bound: int = 24


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def parse_input(text: str, source: str = "<input>") -> tuple[RingSpec, Options]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{source}:{exc.lineno}:{exc.colno}: invalid JSON: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise InputError(f"{source}: top level must be a JSON object")
    unknown = sorted(set(doc) - {"grading_rank", "degrees", "names", "options"})
    if unknown:
        raise InputError(f"{source}: field '{unknown[0]}': unknown field")
    r = doc.get("grading_rank")
    if not _is_int(r) or r < 1:
        raise InputError(f"{source}: field 'grading_rank': expected a positive integer, got {r!r}")
    degrees = doc.get("degrees")
    if not isinstance(degrees, list) or not degrees:
        raise InputError(f"{source}: field 'degrees': expected a nonempty list of columns")
    for i, col in enumerate(degrees):
        if not isinstance(col, list) or not all(_is_int(x) for x in col):
            raise InputError(f"{source}: field 'degrees[{i}]': expected a list of integers, got {col!r}")
        if len(col) != r:
            raise InputError(f"{source}: field 'degrees[{i}]': has length {len(col)}, expected grading_rank = {r}")
    names = doc.get("names")
    if names is not None:
        if not isinstance(names, list) or not all(isinstance(s, str) and s for s in names):
            raise InputError(f"{source}: field 'names': expected a list of nonempty strings")
        if len(names) != len(degrees):
            raise InputError(f"{source}: field 'names': {len(names)} names for {len(degrees)} variables")
        if len(set(names)) != len(names):
            raise InputError(f"{source}: field 'names': names must be distinct")
    raw = doc.get("options", {})
    if not isinstance(raw, dict):
        raise InputError(f"{source}: field 'options': expected an object")
    opts = dict(OPTION_DEFAULTS)
    for key, val in raw.items():
        if key not in OPTION_DEFAULTS:
            raise InputError(f"{source}: field 'options.{key}': unknown option")
        if not _is_int(val) or val < 1:
            raise InputError(f"{source}: field 'options.{key}': expected an integer >= 1, got {val!r}")
        opts[key] = val
    try:
        ring = RingSpec(degrees, names)
    except ZeroDegreeError as exc:
        raise InputError(f"{source}: field 'degrees': {exc}") from None
    return ring, Options(**opts)


def load_input(path: str) -> tuple[RingSpec, Options]:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"{path}: cannot read input: {exc.strerror}") from None
    return parse_input(text, path)


def _parse_degree(text: Optional[str], r: int) -> tuple[int, ...]:
    if text is None:
        raise InputError("a degree is required, e.g. '2,-1'")
    try:
        d = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise InputError(f"degree {text!r}: expected comma-separated integers") from None
    if len(d) != r:
        raise InputError(f"degree {text!r}: has {len(d)} entries, expected grading_rank = {r}")
    return d


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mhproj", description="Multihomogeneous Proj of a Z^r-graded polynomial ring.")
    p.add_argument("command", choices=["analyze", "sections", "linebundle", "gitfan", "compare"])
    p.add_argument("input", help="JSON ring specification")
    p.add_argument("degree", nargs="?", help="twist as comma-separated integers (sections, linebundle)")
    p.add_argument("-d", "--degree", dest="degree_opt", metavar="D", help="twist, for degrees starting with '-'")
    p.add_argument("--json", metavar="OUT", help="write the JSON report to OUT instead of text to stdout")
    p.add_argument("--box", type=int, metavar="N", help="exponent box for unbounded enumerations")
    p.add_argument("--scan", type=int, metavar="N", help="linebundle: tabulate every twist in [-N, N]^r")
    p.add_argument("--workers", type=int, default=1, metavar="N", help="processes for the relevance scan")
    return p


def _run(args) -> dict:
    ring, opts = load_input(args.input)
    box = args.box if args.box is not None else opts.exponent_box
    if box < 1:
        raise InputError("--box must be at least 1")
    if args.workers < 1:
        raise InputError("--workers must be at least 1")
    degree = args.degree_opt if args.degree_opt is not None else args.degree
    if args.command == "analyze":
        return analyze_report(ring, args.workers)
    if args.command == "sections":
        d = _parse_degree(degree, ring.r)
        return sections_report(ring, d, box, build_atlas(ring, args.workers))
    if args.command == "linebundle":
        atlas = build_atlas(ring, args.workers)
        if args.scan is not None:
            if args.scan < 0:
                raise InputError("--scan must be nonnegative")
            return linebundle_scan_report(ring, args.scan, atlas)
        return linebundle_report(ring, _parse_degree(degree, ring.r), atlas)
    if args.command == "gitfan":
        return gitfan_report(ring)
    rep = comparison_report(ring, opts.veronese_bound, opts.ray_multiple_bound, box)
    return compare_report(ring, rep)


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        report = _run(args)
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except (ProjEmptyError, QuasiFanError, ValueError, RuntimeError) as exc:
        print(f"analysis error: {exc}", file=sys.stderr)
        return 1
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(dumps(report))
    else:
        sys.stdout.write(render_text(report))
    return 0


if __name__ == "__main__":
    sys.exit(main())
