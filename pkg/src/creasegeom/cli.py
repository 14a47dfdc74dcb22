"""Command-line front end: generate meshes, analyze them against the closed
forms, run verification suites, and sweep parameters to CSV.

Exit codes: 0 success, 1 verification failure, 2 usage/parameter error,
3 input-format error.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
import warnings
from pathlib import Path

from . import __version__, creases, curvature, oracle, quadrature, surfaces, verify
from .errors import InputFormatError, MeshError, ParameterError, ShallowRegimeWarning
from .trimesh import TriMesh, export_obj, load_obj

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_INPUT_FORMAT = 3

ANGLE_PARAMS = {"alpha", "mu"}


def _angle(value: float, degrees: bool) -> float:
    return math.radians(value) if degrees else value


def _write_json(path, payload) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")


# ---------------------------------------------------------------------------
# generate
# ---------------------------------------------------------------------------

def _build_mesh(shape: str, params: dict) -> TriMesh:
    nu, nv = params["nu"], params["nv"]
    if shape == "cylinder":
        spec = curvature.TubeSpec(a=params["a"], alpha=params["alpha"], h=params["h"])
        return surfaces.gen_cylinder(spec, nu, nv)
    if shape == "tube":
        spec = curvature.tube_spec_for_strips(
            params["a"], params["alpha"], params["strips"]
        )
        return surfaces.gen_twisted_prismatic_tube(spec, params["strips"], nu, nv)
    if shape == "twisted-patch":
        return surfaces.gen_twisted_patch(
            params["kxy"], params["a_len"], params["b_len"], params["mu"], nu, nv
        )
    if shape == "curved-crease":
        spec = creases.CreaseSpec(R=params["R"], mu=params["mu"])
        return surfaces.gen_curved_crease(spec, params["width"], nu, nv)
    if shape == "mudguard":
        spec = surfaces.MudguardSpec(R=params["R"], r=params["r"], mu=params["mu"])
        return surfaces.gen_mudguard(spec, nu, nv)
    if shape == "gore-sphere":
        spec = surfaces.GoreSphereSpec(R=params["radius"], n=params["n"])
        return surfaces.gen_gore_sphere(spec, nu, nv)
    raise ParameterError(f"unknown shape {shape!r}")


def cmd_generate(args) -> int:
    params = {
        key: getattr(args, key)
        for key in (
            "a", "alpha", "h", "strips", "kxy", "a_len", "b_len",
            "mu", "R", "r", "width", "radius", "n", "nu", "nv",
        )
        if getattr(args, key, None) is not None
    }
    if args.degrees:
        for key in ANGLE_PARAMS & params.keys():
            params[key] = math.radians(params[key])
    mesh = _build_mesh(args.shape, params)
    mesh.validate()
    out = Path(args.out)
    export_obj(mesh, out)
    sidecar = {
        "tool": "creasegeom",
        "version": __version__,
        "shape": args.shape,
        "params": params,
        "obj": out.name,
    }
    _write_json(out.with_suffix(out.suffix + ".json"), sidecar)
    print(
        f"wrote {out} ({mesh.num_vertices} vertices, {mesh.num_triangles} "
        f"triangles, {len(mesh.crease_polylines)} creases) and sidecar"
    )
    return EXIT_OK


# ---------------------------------------------------------------------------
# analyze
# ---------------------------------------------------------------------------

def _closed_form_summary(shape: str, params: dict) -> dict:
    """Closed-form reference values for a generated shape, for comparison
    against the mesh's discrete defects."""
    if shape in ("cylinder", "tube"):
        if shape == "tube":
            spec = curvature.tube_spec_for_strips(
                params["a"], params["alpha"], params["strips"]
            )
            state = curvature.prismatic_curvatures(spec)
        else:
            spec = curvature.TubeSpec(a=params["a"], alpha=params["alpha"], h=params["h"])
            state = curvature.cylinder_curvatures(spec)
        balance = creases.tube_balance(spec)
        return {
            "strip_gaussian_curvature": curvature.gaussian_curvature(state),
            "strip_specific_curvature": balance.strip_term,
            "crease_specific_curvature": balance.crease_term,
            "balance_residual": balance.residual,
        }
    if shape == "curved-crease":
        spec = creases.CreaseSpec(R=params["R"], mu=params["mu"])
        return {"crease_specific_curvature": creases.crease_specific_curvature(spec)}
    if shape == "mudguard":
        return {
            "total_solid_angle": quadrature.mudguard_closed_form(
                params["R"], params["r"], params["mu"]
            )
        }
    if shape == "gore-sphere":
        total = quadrature.gore_sphere_total(
            surfaces.GoreSphereSpec(R=params["radius"], n=params["n"])
        )
        return {"seam_total_solid_angle": total, "gauss_bonnet_total": 4.0 * math.pi}
    if shape == "twisted-patch":
        return {
            "pointwise_gaussian_curvature": -params["kxy"] ** 2,
        }
    return {}


def cmd_analyze(args) -> int:
    path = Path(args.input)
    shape, params = None, None
    if path.suffix == ".json":
        with open(path, "r", encoding="utf-8") as fh:
            sidecar = json.load(fh)
        try:
            shape, params = sidecar["shape"], sidecar["params"]
        except (KeyError, TypeError):
            raise InputFormatError(f"{path}: not a creasegeom sidecar") from None
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", ShallowRegimeWarning)
            mesh = _build_mesh(shape, params)
    else:
        mesh = load_obj(path)
        if not mesh.crease_polylines:
            print(
                f"error: {path} carries no crease tags; analyze the JSON "
                "sidecar written by `generate` instead",
                file=sys.stderr,
            )
            return EXIT_INPUT_FORMAT
    field = oracle.angle_defect(mesh)
    creases_out = {
        str(cid): {
            "rate": field.crease_rates[cid],
            "arc_length": mesh.crease_arc_length(cid),
            "defect_total": field.crease_defect_total(cid),
        }
        for cid in sorted(mesh.crease_polylines)
    }
    report = {
        "tool": "creasegeom",
        "version": __version__,
        "input": path.name,
        "shape": shape,
        "params": params,
        "mesh": {
            "num_vertices": mesh.num_vertices,
            "num_triangles": mesh.num_triangles,
            "euler_characteristic": mesh.euler_characteristic(),
        },
        "total_defect": field.total_defect,
        "creases": creases_out,
    }
    try:
        report["interior_defect_density"] = field.interior_defect_density()
    except MeshError:
        pass
    if shape is not None:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", ShallowRegimeWarning)
            report["closed_forms"] = _closed_form_summary(shape, params)
    if args.report:
        _write_json(args.report, report)
    else:
        json.dump(report, sys.stdout, indent=2, sort_keys=True)
        print()
    if args.csv:
        with open(args.csv, "w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["crease_id", "rate", "arc_length", "defect_total"])
            for cid, row in creases_out.items():
                writer.writerow(
                    [cid, repr(row["rate"]), repr(row["arc_length"]),
                     repr(row["defect_total"])]
                )
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def cmd_verify(args) -> int:
    reports = verify.run_suite(args.suite)
    width = max(len(r.case_name) for r in reports)
    for r in reports:
        status = "PASS" if r.passed else "FAIL"
        print(
            f"{status}  {r.case_name:<{width}}  residual {r.residual: .3e}"
            f"  tol {r.tolerance:.3e}"
        )
    failed = sum(not r.passed for r in reports)
    print(f"{len(reports) - failed}/{len(reports)} checks passed")
    if args.json:
        _write_json(
            args.json,
            {
                "tool": "creasegeom",
                "version": __version__,
                "suite": args.suite,
                "reports": [r.to_json_dict() for r in reports],
            },
        )
    return EXIT_OK if failed == 0 else EXIT_VERIFY_FAILED


# ---------------------------------------------------------------------------
# sweep
# ---------------------------------------------------------------------------

def _parse_range(text: str, integral: bool):
    try:
        lo_s, hi_s, steps_s = text.split(":")
        lo, hi, steps = float(lo_s), float(hi_s), int(steps_s)
    except ValueError:
        raise ParameterError(f"range must be lo:hi:steps, got {text!r}") from None
    if steps < 2 or hi <= lo:
        raise ParameterError(f"range needs hi > lo and steps >= 2, got {text!r}")
    values = [lo + (hi - lo) * i / (steps - 1) for i in range(steps)]
    if integral:
        values = sorted({int(round(v)) for v in values})
    return values


def _sweep_rows(param: str, values, ctx: dict):
    """One CSV row per swept value: closed forms plus the quadrature oracle
    where one exists.  Context parameters come from the command line."""
    rows = []
    if param == "alpha":
        header = ["alpha", "strip_specific_curvature", "gaussian_curvature",
                  "mohr_center", "mohr_radius"]
        for alpha in values:
            spec = curvature.TubeSpec(a=ctx["a"], alpha=alpha, h=ctx["h"])
            circle = curvature.mohr_circle(curvature.prismatic_curvatures(spec))
            rows.append([
                alpha,
                curvature.strip_specific_curvature(spec),
                curvature.gaussian_curvature(curvature.prismatic_curvatures(spec)),
                circle.center,
                circle.radius,
            ])
    elif param == "h":
        header = ["h", "strip_term", "crease_term", "residual", "relative_residual"]
        for h in values:
            rep = creases.tube_balance(curvature.TubeSpec(a=ctx["a"], alpha=ctx["alpha"], h=h))
            rows.append([h, rep.strip_term, rep.crease_term, rep.residual,
                         rep.relative_residual])
    elif param == "mu":
        header = ["mu", "crease_specific_curvature", "mudguard_closed_form",
                  "mudguard_quadrature", "residual"]
        for mu in values:
            rate = creases.crease_specific_curvature(
                creases.CreaseSpec(R=ctx["R"], mu=mu)
            )
            total = quadrature.mudguard_total(
                surfaces.MudguardSpec(R=ctx["R"], r=ctx["r"], mu=mu)
            )
            rows.append([mu, rate, total.closed_form, total.by_quadrature.value,
                         total.residual])
    elif param == "R":
        header = ["R", "crease_specific_curvature", "mudguard_closed_form",
                  "mudguard_quadrature", "residual"]
        for R in values:
            rate = creases.crease_specific_curvature(
                creases.CreaseSpec(R=R, mu=ctx["mu"])
            )
            total = quadrature.mudguard_total(
                surfaces.MudguardSpec(R=R, r=ctx["r"], mu=ctx["mu"])
            )
            rows.append([R, rate, total.closed_form, total.by_quadrature.value,
                         total.residual])
    elif param == "r":
        header = ["r", "mudguard_closed_form", "mudguard_quadrature", "residual",
                  "limit_4pi_sin_mu"]
        limit = 4.0 * math.pi * math.sin(ctx["mu"])
        for r in values:
            total = quadrature.mudguard_total(
                surfaces.MudguardSpec(R=ctx["R"], r=r, mu=ctx["mu"])
            )
            rows.append([r, total.closed_form, total.by_quadrature.value,
                         total.residual, limit])
    elif param == "n":
        header = ["n", "gore_total", "deficit_from_4pi"]
        for n in values:
            total = quadrature.gore_sphere_total(surfaces.GoreSphereSpec(R=ctx["R"], n=n))
            rows.append([n, total, 4.0 * math.pi - total])
    else:
        raise ParameterError(
            f"unknown sweep parameter {param!r}; choose from alpha, h, mu, R, r, n"
        )
    return header, rows


def cmd_sweep(args) -> int:
    if args.degrees and args.param in ANGLE_PARAMS:
        values = [math.radians(v) for v in _parse_range(args.range, integral=False)]
    else:
        values = _parse_range(args.range, integral=args.param == "n")
    ctx = {
        "a": args.a,
        "alpha": _angle(args.alpha, args.degrees),
        "h": args.h,
        "mu": _angle(args.mu, args.degrees),
        "R": args.R,
        "r": args.r,
    }
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", ShallowRegimeWarning)
        header, rows = _sweep_rows(args.param, values, ctx)
    with open(args.csv, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        for row in rows:
            writer.writerow([repr(v) if isinstance(v, float) else v for v in row])
    print(f"wrote {len(rows)} rows to {args.csv}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="creasegeom",
        description="Gaussian curvature of creased tubes: generators, "
        "discrete oracles, and verification suites.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="generate a mesh as OBJ + JSON sidecar")
    gen.add_argument("shape", choices=[
        "cylinder", "tube", "twisted-patch", "curved-crease", "mudguard", "gore-sphere",
    ])
    gen.add_argument("--a", type=float, help="tube radius")
    gen.add_argument("--alpha", type=float, help="line angle to the tube axis")
    gen.add_argument("--h", type=float, help="strip width normal to the lines")
    gen.add_argument("--strips", type=int, help="number of tube strips")
    gen.add_argument("--kxy", type=float, help="twist curvature of the patch")
    gen.add_argument("--a-len", dest="a_len", type=float, help="patch x extent")
    gen.add_argument("--b-len", dest="b_len", type=float, help="patch y extent")
    gen.add_argument("--mu", type=float, help="half fold angle")
    gen.add_argument("--R", type=float, help="crease / sweep radius")
    gen.add_argument("--r", type=float, help="mudguard transverse arc radius")
    gen.add_argument("--width", type=float, help="curved-crease strip width")
    gen.add_argument("--radius", type=float, help="gore-sphere seam radius")
    gen.add_argument("--n", type=int, help="number of gores")
    gen.add_argument("--nu", type=int, default=surfaces.DEFAULT_EXPORT_RES)
    gen.add_argument("--nv", type=int, default=surfaces.DEFAULT_EXPORT_RES)
    gen.add_argument("--degrees", action="store_true", help="angles are degrees")
    gen.add_argument("--out", required=True, help="output OBJ path")
    gen.set_defaults(func=cmd_generate)

    ana = sub.add_parser("analyze", help="angle-defect analysis of a mesh")
    ana.add_argument("--in", dest="input", required=True,
                     help="OBJ file or JSON sidecar")
    ana.add_argument("--report", help="write the JSON report here instead of stdout")
    ana.add_argument("--csv", help="also write per-crease rates as CSV")
    ana.set_defaults(func=cmd_analyze)

    ver = sub.add_parser("verify", help="run closed-form vs oracle suites")
    ver.add_argument("--suite", default="all",
                     choices=("all",) + verify.SUITE_NAMES)
    ver.add_argument("--json", help="write the report array here")
    ver.set_defaults(func=cmd_verify)

    swp = sub.add_parser("sweep", help="sweep one parameter to CSV")
    swp.add_argument("--param", required=True,
                     choices=["alpha", "h", "mu", "R", "r", "n"])
    swp.add_argument("--range", required=True, help="lo:hi:steps")
    swp.add_argument("--csv", required=True, help="output CSV path")
    swp.add_argument("--a", type=float, default=1.0)
    swp.add_argument("--alpha", type=float, default=math.pi / 4)
    swp.add_argument("--h", type=float, default=0.05)
    swp.add_argument("--mu", type=float, default=0.2)
    swp.add_argument("--R", type=float, default=10.0)
    swp.add_argument("--r", type=float, default=0.1)
    swp.add_argument("--degrees", action="store_true", help="angles are degrees")
    swp.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (InputFormatError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_FORMAT
    except MeshError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
