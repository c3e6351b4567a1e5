"""Command-line interface.

Exit codes: 0 on success, 1 when a verification fails (census mismatch,
ladder violations, inadmissible arc system), 2 on usage or parse errors.
All JSON output has stable key order, so identical invocations produce
byte-identical bytes.
"""

import argparse
import json
import sys
from fractions import Fraction

from .arcs import (
    BoundaryCoordinates,
    RigidBoundaryMap,
    refined_matching,
    system_from_json,
    system_to_json,
    validate_system,
)
from .census import SYMBOLIC_FAMILIES, census_entries, census_entry, census_to_json, census_verify
from .filling import analyze_multislope, guaranteed_interval, report_to_json
from .ladders import kernel_backend, verify_ladders
from .monodromy import BoundaryOrbit, DegeneracyLocus
from .slopes import SlopeParseError, canonical_meridian, format_slope, parse_slope
from .tracks import (
    CONFIG_PRESETS,
    EndpointConfig,
    build_boundary_track,
    carried_slopes,
    track_from_json,
    track_to_json,
    weight_cone,
)

__all__ = ["main"]


def _emit(doc, args):
    if getattr(args, "output", "json") == "json":
        print(json.dumps(doc, indent=2))
    else:
        _emit_text(doc)


def _emit_text(doc, indent=0):
    pad = "  " * indent
    if isinstance(doc, dict):
        for key, val in doc.items():
            if isinstance(val, (dict, list)):
                print("%s%s:" % (pad, key))
                _emit_text(val, indent + 1)
            else:
                print("%s%s: %s" % (pad, key, val))
    elif isinstance(doc, list):
        for val in doc:
            if isinstance(val, (dict, list)):
                _emit_text(val, indent)
                print()
            else:
                print("%s- %s" % (pad, val))
    else:
        print("%s%s" % (pad, doc))


def _parse_slope_arg(text):
    s, normalized = parse_slope(text)
    if normalized:
        print(
            "warning: slope %r normalized to %s" % (text, format_slope(s)),
            file=sys.stderr,
        )
    return s


def _parse_locus(text):
    parts = text.split(",")
    if len(parts) != 2:
        raise SlopeParseError(text, 0, "expected p,q")
    try:
        p, q = int(parts[0]), int(parts[1])
    except ValueError:
        raise SlopeParseError(text, 0, "expected integers p,q") from None
    return DegeneracyLocus(p, q)


def _single_orbit(locus, c):
    return BoundaryOrbit(
        circles=tuple("C%d" % i for i in range(c)), c=c, locus=locus
    )


def _cmd_interval(args):
    interval = guaranteed_interval(_parse_locus(args.locus), args.orbit_length)
    _emit(
        {
            "schema": "interval_v1",
            "end_a": format_slope(interval.end_a),
            "end_b": format_slope(interval.end_b),
            "excluded": format_slope(interval.excluded),
        },
        args,
    )
    return 0


def _cmd_analyze(args):
    locus = _parse_locus(args.locus)
    orbit = _single_orbit(locus, args.orbit_length)
    slopes = [_parse_slope_arg(text) for text in args.slope or []]
    if slopes:
        entries = []
        verdicts = set()
        notes = []
        for s in slopes:
            report = analyze_multislope([orbit], [s])
            doc = report_to_json(report)
            entries.extend(doc["orbits"])
            verdicts.add(doc["verdict"])
            notes.extend(doc["notes"])
        verdict = verdicts.pop() if len(verdicts) == 1 else "partial"
        out = {
            "schema": "filling_report_v1",
            "orbits": entries,
            "verdict": verdict,
            "notes": notes,
        }
    else:
        interval = guaranteed_interval(locus, args.orbit_length)
        out = {
            "schema": "filling_report_v1",
            "orbits": [
                {
                    "circles": list(orbit.circles),
                    "orbit_length": orbit.c,
                    "locus": {
                        "p": locus.p,
                        "q": locus.q,
                        "multiplicity": locus.multiplicity,
                        "degeneracy_slope": format_slope(locus.delta),
                    },
                    "interval": {
                        "end_a": format_slope(interval.end_a),
                        "end_b": format_slope(interval.end_b),
                        "excluded": format_slope(interval.excluded),
                    },
                    "slope": None,
                    "guarantees": [],
                }
            ],
            "verdict": "none",
            "notes": ["no filling slopes provided"],
        }
    _emit(out, args)
    return 0


def _cmd_census(args):
    if args.census_cmd == "list":
        _emit(census_to_json(), args)
        return 0
    if args.census_cmd == "show":
        doc = census_to_json()
        entry = census_entry(args.name)  # KeyError -> handled by main
        for row in doc["entries"]:
            if row["name"] == entry.name:
                _emit(row, args)
                return 0
    # verify
    records = census_verify()
    rows = [
        {
            "name": r.name,
            "computed": {
                "end_a": format_slope(r.computed.end_a),
                "end_b": format_slope(r.computed.end_b),
                "excluded": format_slope(r.computed.excluded),
            },
            "status": r.status,
            "detail": r.detail,
        }
        for r in records
    ]
    failed = any(r.status == "Mismatch" for r in records)
    _emit({"schema": "census_verify_v1", "records": rows, "ok": not failed}, args)
    return 1 if failed else 0


def _load_json(path):
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _cmd_arcs(args):
    if args.arcs_cmd == "refine":
        doc = _load_json(args.input)
        if doc.get("schema") != "monodromy_boundary_v1":
            raise ValueError("arcs refine expects a monodromy_boundary_v1 file")
        coords = BoundaryCoordinates.build(
            {e["id"]: e["stable_sings"] for e in doc["circles"]}
        )
        # Orbit shifts live on the base circle; the other circles carry 0.
        shifts = {cid: 0 for cid in coords.ids}
        shifts.update({k: int(v) for k, v in doc["shifts"].items()})
        monodromy = RigidBoundaryMap.build(dict(doc["permutation"]), shifts)
        system = refined_matching(coords, monodromy)
        _emit(system_to_json(system), args)
        return 0
    # validate
    system = system_from_json(_load_json(args.input))
    violations = validate_system(system)
    _emit(
        {
            "schema": "arc_validation_v1",
            "admissible": not violations,
            "violations": [{"kind": v.kind, "detail": v.detail} for v in violations],
        },
        args,
    )
    return 1 if violations else 0


def _load_config(text):
    if text in CONFIG_PRESETS:
        return CONFIG_PRESETS[text]
    doc = _load_json(text)
    return EndpointConfig(
        name=doc.get("name", "custom"),
        phase=int(doc.get("phase", 0)),
        lower_out=Fraction(doc.get("lower_out", "1/4")),
        lower_in=Fraction(doc.get("lower_in", "3/4")),
        upper_nudge=Fraction(doc.get("upper_nudge", "1/8")),
    )


def _carried_doc(track):
    cone = weight_cone(track)
    cs = carried_slopes(track)
    doc = {
        "schema": "carried_slopes_v1",
        "kind": cs.kind,
        "extreme_rays": len(cone),
        "extreme_classes": [list(c) for c in cs.extreme_classes],
    }
    if cs.kind == "single":
        doc["slope"] = format_slope(cs.slope)
    if cs.kind == "arc":
        doc["arc"] = {
            "end_a": format_slope(cs.arc.end_a),
            "end_b": format_slope(cs.arc.end_b),
            "excluded": format_slope(cs.arc.excluded),
            "end_a_attained": cs.end_a_attained,
            "end_b_attained": cs.end_b_attained,
        }
    return doc


def _cmd_track(args):
    if args.track_cmd == "build":
        config = _load_config(args.config) if args.config else None
        track = build_boundary_track(
            _parse_locus(args.locus), args.orbit_length, config
        )
        _emit(track_to_json(track), args)
        return 0
    # slopes
    track = track_from_json(_load_json(args.input))
    _emit(_carried_doc(track), args)
    return 0


def _cmd_ladder(args):
    summary = verify_ladders(
        cases=args.cases,
        seed=args.seed,
        max_levels=args.levels,
        max_rungs_per_gap=args.rungs,
        alternating=not args.control,
    )
    _emit(summary, args)
    if args.control:
        return 0
    return 1 if summary["violations"] else 0


def _cmd_coords(args):
    delta = _parse_slope_arg(args.delta)
    k, new_delta = canonical_meridian(delta)
    _emit(
        {
            "schema": "canonical_meridian_v1",
            "delta": format_slope(delta),
            "k": k,
            "new_delta": format_slope(new_delta),
        },
        args,
    )
    return 0


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="dehnfill",
        description="Slope calculus, guaranteed filling intervals and "
        "train-track checks for fibered boundary tori (kernel backend: %s)"
        % kernel_backend(),
    )
    parser.add_argument("--output", choices=("json", "text"), default="json")
    # Accepted after the subcommand too; SUPPRESS keeps a sub-level absence
    # from clobbering a value given before the subcommand.
    output_parent = argparse.ArgumentParser(add_help=False)
    output_parent.add_argument(
        "--output", choices=("json", "text"), default=argparse.SUPPRESS
    )
    sub = parser.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("interval", parents=[output_parent], help="guaranteed filling interval for a locus")
    p.add_argument("--locus", required=True, metavar="p,q")
    p.add_argument("--orbit-length", type=int, required=True)
    p.set_defaults(func=_cmd_interval)

    p = sub.add_parser("analyze", parents=[output_parent], help="per-slope filling report")
    p.add_argument("--locus", required=True, metavar="p,q")
    p.add_argument("--orbit-length", type=int, required=True)
    p.add_argument("--slope", action="append", metavar="S")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("census", help="embedded worked examples")
    census_sub = p.add_subparsers(dest="census_cmd", required=True)
    census_sub.add_parser("list", parents=[output_parent])
    show = census_sub.add_parser("show", parents=[output_parent])
    show.add_argument("name")
    census_sub.add_parser("verify", parents=[output_parent])
    p.set_defaults(func=_cmd_census)

    p = sub.add_parser("arcs", help="admissible arc systems")
    arcs_sub = p.add_subparsers(dest="arcs_cmd", required=True)
    refine = arcs_sub.add_parser("refine", parents=[output_parent])
    refine.add_argument("--input", required=True)
    validate = arcs_sub.add_parser("validate", parents=[output_parent])
    validate.add_argument("--input", required=True)
    p.set_defaults(func=_cmd_arcs)

    p = sub.add_parser("track", help="boundary train tracks")
    track_sub = p.add_subparsers(dest="track_cmd", required=True)
    build = track_sub.add_parser("build", parents=[output_parent])
    build.add_argument("--locus", required=True, metavar="p,q")
    build.add_argument("--orbit-length", type=int, required=True)
    build.add_argument("--config", help="preset name or JSON file")
    slopes = track_sub.add_parser("slopes", parents=[output_parent])
    slopes.add_argument("--input", required=True)
    p.set_defaults(func=_cmd_track)

    p = sub.add_parser("ladder", help="leaf-trace ladder checks")
    ladder_sub = p.add_subparsers(dest="ladder_cmd", required=True)
    verify = ladder_sub.add_parser("verify", parents=[output_parent])
    verify.add_argument("--levels", type=int, default=8)
    verify.add_argument("--rungs", type=int, default=6)
    verify.add_argument("--cases", type=int, default=100)
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--control", action="store_true")
    p.set_defaults(func=_cmd_ladder)

    p = sub.add_parser("coords", help="canonical meridian selection")
    coords_sub = p.add_subparsers(dest="coords_cmd", required=True)
    canonical = coords_sub.add_parser("canonical", parents=[output_parent])
    canonical.add_argument("--delta", required=True, metavar="u/v")
    p.set_defaults(func=_cmd_coords)

    return parser


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SlopeParseError as err:
        print("error: %s" % err, file=sys.stderr)
        return 2
    except (ValueError, KeyError, OSError) as err:
        print("error: %s" % err, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
