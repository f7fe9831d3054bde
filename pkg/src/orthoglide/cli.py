"""Command-line front end.

Exit codes: 0 success, 1 verification failed, 2 bad arguments,
3 unsupported design requirements, 4 point out of reach, 5 empty locus.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from pathlib import Path

import numpy as np

from .design_io import design_document, dumps_design, format_point_cloud, read_design
from .errors import (
    BoundViolationError,
    DegenerateRequirementError,
    EmptyLocusError,
    OutOfReachError,
    UnsupportedRangeError,
)
from .kinematics import leg_postures
from .kinetostatics import transmission_arrays
from .model import DesignRequirements
from .singularity import classify, parallel_locus_sample
from .synthesis import joint_limits, synthesize, verify_extremality
from .workspace import AXIS_NAMES, contains, cube_inclusion, field_map

EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_REQUIREMENT = 3
EXIT_REACH = 4
EXIT_EMPTY = 5


def _floats(text: str, n: int, what: str) -> list[float]:
    try:
        vals = [float(v) for v in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"{what} must be {n} comma-separated numbers") from None
    if len(vals) != n:
        raise argparse.ArgumentTypeError(f"{what} must be {n} comma-separated numbers")
    return vals


def _point(text):
    return _floats(text, 3, "point")


def _box(text):
    return _floats(text, 6, "box")


def parse_plane(spec: str, geom) -> tuple[int, float]:
    """``"z=12.5"`` -> ``(2, 12.5)``; ``q1``/``q2`` name the cube corners."""
    axis, sep, value = spec.replace(" ", "").partition("=")
    if not sep or axis.lower() not in AXIS_NAMES:
        raise ValueError(f"bad plane spec {spec!r}, expected e.g. z=-73.2")
    named = {"q1": geom.q1, "q2": geom.q2}
    if value.lower() in named:
        return AXIS_NAMES.index(axis.lower()), named[value.lower()]
    try:
        return AXIS_NAMES.index(axis.lower()), float(value)
    except ValueError:
        raise ValueError(f"bad plane offset {value!r}") from None


def _emit(text: str, out):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_synth(args) -> int:
    try:
        req = DesignRequirements(args.workspace, args.psi_max, args.offset)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        geom = synthesize(req)
        limits = joint_limits(req.psi_max, cross_check=False)
    except (DegenerateRequirementError, UnsupportedRangeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_REQUIREMENT
    _emit(dumps_design(design_document(geom, req.psi_max, limits)), args.out)
    return 0


def analyze_point(geom, p) -> dict:
    """Analysis report at one tool point (stroke limits reported, not enforced)."""
    p = np.asarray(p, dtype=float)
    legs = leg_postures(geom, p)
    sing = classify(geom, p)
    psi, axes, kappa, xi, parallel, serial = transmission_arrays(geom, p)
    return {
        "point_mm": p.tolist(),
        "verdict": contains(geom, p).value,
        "legs": [
            {
                "rho_mm": leg.rho,
                "theta_deg": float(np.degrees(leg.theta)),
                "beta_deg": float(np.degrees(leg.beta)),
            }
            for leg in legs
        ],
        "psi": None if serial else psi.tolist(),
        "psi_axes": None if serial else axes.T.tolist(),
        "kappa": None if serial else float(kappa),
        "parallel_singular": bool(parallel),
        "serial_singular": bool(serial),
        "detA_norm": sing.detA_normalized,
        "detB_norm": sing.detB_normalized,
        "singularity": sing.kind.value,
    }


def cmd_analyze(args) -> int:
    geom, _ = read_design(args.design)
    try:
        report = analyze_point(geom, args.point)
    except OutOfReachError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_REACH
    if args.format == "text":
        lines = [f"point {report['point_mm']}  verdict {report['verdict']}"]
        for i, leg in enumerate(report["legs"], 1):
            lines.append(
                f"leg {i}: rho {leg['rho_mm']:.6f} mm  theta {leg['theta_deg']:.6f} deg  beta {leg['beta_deg']:.6f} deg"
            )
        lines.append(f"psi {report['psi']}  kappa {report['kappa']}")
        lines.append(f"detA/L^3 {report['detA_norm']:.12g}  {report['singularity']}")
        print("\n".join(lines))
    else:
        print(json.dumps(report, indent=2))
    return 0


def cmd_map(args, parser) -> int:
    geom, _ = read_design(args.design)
    try:
        axis, offset = parse_plane(args.plane, geom)
    except ValueError as exc:
        parser.error(str(exc))
    if args.grid < 2:
        parser.error("--grid must be >= 2")
    fm = field_map(geom, axis, offset, args.grid)
    _emit(fm.to_csv(), args.out)
    return 0


def cmd_singularities(args, parser) -> int:
    geom, _ = read_design(args.design)
    box = (args.box[:3], args.box[3:])
    try:
        pts = parallel_locus_sample(geom, box, args.grid)
    except EmptyLocusError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_EMPTY
    except ValueError as exc:
        parser.error(str(exc))
    _emit(format_point_cloud(pts), args.out)
    return 0


def cmd_verify(args) -> int:
    geom, psi_max = read_design(args.design)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        try:
            report = verify_extremality(geom, psi_max, args.grid)
        except BoundViolationError as exc:
            report = exc.report
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    inclusion = cube_inclusion(geom, geom.workspace_edge, geom.Q1)
    passed = report.passed and inclusion.included
    out = {
        "passed": passed,
        "grid_n": report.grid_n,
        "low_resolution": report.low_resolution,
        "bounds_ok": report.bounds_ok,
        "extrema_at_corners": report.extrema_at_corners,
        "psi_lowest": report.psi_lowest,
        "psi_highest": report.psi_highest,
        "argmin_point_mm": report.argmin_point.tolist(),
        "argmax_point_mm": report.argmax_point.tolist(),
        "worst_point_mm": None if report.worst_point is None else report.worst_point.tolist(),
        "worst_psi": None if report.worst_psi is None else report.worst_psi.tolist(),
        "cube_included": inclusion.included,
        "cube_failure_point_mm": None if inclusion.failure_point is None else inclusion.failure_point.tolist(),
        "cube_failure_verdict": None if inclusion.included else inclusion.verdict.value,
    }
    print(json.dumps(out, indent=2))
    return 0 if passed else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="orthoglide", description="Orthoglide design synthesis and analysis")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("synth", help="synthesize a design from workspace size and psi_max")
    p.add_argument("--workspace", type=float, required=True, help="cube edge length (mm)")
    p.add_argument("--psi-max", type=float, required=True, help="transmission factor bound (> 1)")
    p.add_argument("--offset", type=float, default=0.0, help="tool offset e (mm)")
    p.add_argument("--out", help="design file to write (default: stdout)")

    p = sub.add_parser("analyze", help="kinematic and kinetostatic report at one point")
    p.add_argument("design")
    p.add_argument("--point", type=_point, required=True, help="x,y,z in mm")
    p.add_argument("--format", choices=("json", "text"), default="json")

    p = sub.add_parser("map", help="CSV field map over a cross-section")
    p.add_argument("design")
    p.add_argument("--plane", required=True, help="e.g. z=-73.2 or z=q1")
    p.add_argument("--grid", type=int, default=50)
    p.add_argument("--out", help="CSV file (default: stdout)")

    p = sub.add_parser("singularities", help="sample the parallel singularity locus in a box")
    p.add_argument("design")
    p.add_argument("--box", type=_box, required=True, help="x0,y0,z0,x1,y1,z1 in mm")
    p.add_argument("--grid", type=int, default=24)
    p.add_argument("--out", help="point-cloud file (default: stdout)")

    p = sub.add_parser("verify", help="grid-check transmission bounds and cube inclusion")
    p.add_argument("design")
    p.add_argument("--grid", type=int, default=21)
    return parser


VALUE_FLAGS = ("--point", "--box", "--plane")


def _glue_values(argv):
    # "--point -73.2,0,0" would read the value as an option; glue it to the flag
    out, it = [], iter(argv)
    for tok in it:
        if tok in VALUE_FLAGS:
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def main(argv=None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    args = parser.parse_args(_glue_values(argv))
    if args.command == "synth":
        return cmd_synth(args)
    if args.command == "analyze":
        return cmd_analyze(args)
    if args.command == "map":
        return cmd_map(args, parser)
    if args.command == "singularities":
        return cmd_singularities(args, parser)
    if args.grid < 2:
        parser.error("--grid must be >= 2")
    return cmd_verify(args)


if __name__ == "__main__":
    sys.exit(main())
