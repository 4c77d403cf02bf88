"""Command-line interface.

Subcommands: shear (construct maps), radius (boundary-minimum estimates),
bounds (closed-form formulas), area (series vs quadrature), export-boundary
(CSV samples), verify (the full check suite).

Output contract: JSON with sorted keys and floats printed to 17 significant
digits, so identical invocations produce byte-identical output. Exit codes:
0 success, 1 verification failure, 2 usage or input error.

Map JSON schema: {"h": [[re, im], ...], "g": [[re, im], ...]} with index =
power, or {"closed_form": "K" | "KH_1" .. "KH_4"}; an optional "meta" object
is ignored on read.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Union

from .area import area_quadrature, area_series
from .bounds import (
    ClassIndex,
    area_lower_bound,
    class_constants,
    coefficient_bound,
    one_sixth_predicate,
    heinz_lower,
    kh3_radius_interval,
    koebe_lower_bound,
    koebe_radius_lower,
)
from .errors import DivergenceError, HarmonicKoebeError
from .harmonic import DilatationSpec, HarmonicMap, closed_form_ids
from .radius import boundary_profile, closed_form_radius_estimate, koebe_radius_estimate
from .series import PowerSeries
from .shear import shear_koebe
from .verify import run_checks


class UsageError(Exception):
    """Bad flags or malformed input files; mapped to exit code 2."""


# ---------------------------------------------------------------------------
# deterministic serialization
# ---------------------------------------------------------------------------

def _format_float(x: float) -> str:
    if math.isnan(x) or math.isinf(x):
        raise UsageError(f"non-finite value {x!r} in output")
    return format(x, ".17g")


def dumps(obj, indent: int = 0) -> str:
    """JSON text with sorted keys and 17-significant-digit floats."""
    pad = " " * indent
    if obj is None:
        return "null"
    if obj is True:
        return "true"
    if obj is False:
        return "false"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return _format_float(obj)
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        items = [
            f'{pad}  {json.dumps(str(k))}: {dumps(obj[k], indent + 2)}'
            for k in sorted(obj, key=str)
        ]
        if not items:
            return "{}"
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(obj, (list, tuple)):
        items = [f"{pad}  {dumps(v, indent + 2)}" for v in obj]
        if not items:
            return "[]"
        return "[\n" + ",\n".join(items) + "\n" + pad + "]"
    raise UsageError(f"cannot serialize {type(obj).__name__}")


def _emit(obj, path: str | None) -> None:
    text = dumps(obj) + "\n"
    if path:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# map (de)serialization
# ---------------------------------------------------------------------------

def _series_to_pairs(ps: PowerSeries) -> list[list[float]]:
    return [[float(c.real), float(c.imag)] for c in ps.coeffs]


def map_to_dict(fmap: HarmonicMap) -> dict:
    return {"h": _series_to_pairs(fmap.h), "g": _series_to_pairs(fmap.g)}


def _pairs_to_series(raw, key: str) -> PowerSeries:
    try:
        coeffs = [complex(float(re), float(im)) for re, im in raw]
    except (TypeError, ValueError) as exc:
        raise UsageError(f"field {key!r} must be an array of [re, im] pairs: {exc}")
    if not coeffs:
        raise UsageError(f"field {key!r} must not be empty")
    return PowerSeries(coeffs)


def load_map(path: str) -> Union[HarmonicMap, str]:
    """Read a map file; returns a HarmonicMap or a closed-form identifier."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}")
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed JSON in {path}: {exc}")
    if not isinstance(data, dict):
        raise UsageError(f"{path}: top level must be an object")
    if "closed_form" in data:
        name = data["closed_form"]
        if name not in closed_form_ids():
            raise UsageError(f"{path}: unknown closed form {name!r}")
        return name
    if "h" not in data or "g" not in data:
        raise UsageError(f"{path}: need either 'closed_form' or both 'h' and 'g'")
    h = _pairs_to_series(data["h"], "h")
    g = _pairs_to_series(data["g"], "g")
    try:
        return HarmonicMap(h, g, normalized=True)
    except HarmonicKoebeError:
        return HarmonicMap(h, g, normalized=False)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def _cmd_shear(args: argparse.Namespace) -> int:
    spec = DilatationSpec(k=args.k, m=float(args.m), alpha=args.alpha)
    if args.order < spec.integral_order:
        raise UsageError("--order must be at least m")
    fmap = shear_koebe(spec, args.order)
    out = map_to_dict(fmap)
    out["meta"] = {"k": args.k, "m": args.m, "alpha": args.alpha, "order": args.order}
    _emit(out, args.output)
    return 0


def _cmd_radius(args: argparse.Namespace) -> int:
    if (args.map is None) == (args.closed_form is None):
        raise UsageError("give exactly one of MAP or --closed-form")
    if args.closed_form is not None:
        est = closed_form_radius_estimate(args.closed_form, n=args.n, refine=not args.no_refine)
    else:
        target = load_map(args.map)
        if isinstance(target, str):
            est = closed_form_radius_estimate(target, n=args.n, refine=not args.no_refine)
        else:
            est = koebe_radius_estimate(
                target, j_min=args.j_min, j_max=args.j_max, n=args.n, refine=not args.no_refine
            )
    _emit(est.to_dict(), args.output)
    return 0


def _need(args: argparse.Namespace, *names: str) -> None:
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"--{name.replace('_', '-')} is required for this formula")


def _cmd_bounds(args: argparse.Namespace) -> int:
    name = args.formula
    inputs: dict = {}
    if name == "koebe-lower-bound":
        _need(args, "r", "k", "m")
        spec = DilatationSpec(k=args.k, m=args.m, alpha=args.alpha or 0.0)
        inputs = {"r": args.r, "k": args.k, "m": args.m}
        value: object = koebe_lower_bound(args.r, spec)
    elif name == "koebe-radius-lower":
        _need(args, "k", "m")
        spec = DilatationSpec(k=args.k, m=args.m, alpha=args.alpha or 0.0)
        inputs = {"k": args.k, "m": args.m}
        value = koebe_radius_lower(spec)
    elif name == "one-sixth-conditions":
        _need(args, "k", "m")
        stated, exact = one_sixth_predicate(DilatationSpec(k=args.k, m=args.m))
        inputs = {"k": args.k, "m": args.m}
        value = {"stated": stated, "exact": exact}
    elif name == "class-constants":
        _need(args, "q")
        r_q, d_q = class_constants(ClassIndex(p=max(args.p or 2, 2), q=args.q))
        inputs = {"q": args.q}
        value = {"R_q": r_q, "d_q": d_q}
    elif name == "coefficient-bound":
        _need(args, "p", "q")
        inputs = {"p": args.p, "q": args.q}
        value = coefficient_bound(ClassIndex(p=args.p, q=args.q))
    elif name == "heinz-lower":
        _need(args, "r")
        inputs = {"R": args.r}
        value = heinz_lower(args.r)
    elif name == "area-lower-bound":
        _need(args, "k", "m")
        inputs = {"k": args.k, "m": args.m}
        value = area_lower_bound(DilatationSpec(k=args.k, m=args.m))
    elif name == "kh3-interval":
        lower, upper = kh3_radius_interval()
        value = {"lower": lower, "upper": upper}
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(f"unknown formula {name!r}")
    _emit({"name": name, "inputs": inputs, "value": value}, args.output)
    return 0


def _cmd_area(args: argparse.Namespace) -> int:
    target = load_map(args.map)
    if isinstance(target, str):
        raise UsageError("area needs a series map file, not a closed form")
    out: dict = {"r": args.r}
    if args.method in ("series", "both"):
        try:
            out["series"] = area_series(target, args.r)
            out["divergent"] = False
        except DivergenceError as exc:
            out["series"] = None
            out["divergent"] = True
            out["partial_sum"] = exc.partial_sum
    if args.method in ("quadrature", "both"):
        out["quadrature"] = area_quadrature(target, args.r, args.n_rad, args.n_ang)
    _emit(out, args.output)
    return 0


def _cmd_export_boundary(args: argparse.Namespace) -> int:
    if (args.map is None) == (args.closed_form is None):
        raise UsageError("give exactly one of MAP or --closed-form")
    target: Union[HarmonicMap, str]
    if args.closed_form is not None:
        target = args.closed_form
    else:
        target = load_map(args.map)
    profile = boundary_profile(target, args.r, args.n)
    lines = ["theta,re,im,modulus"]
    for theta, value, modulus in zip(profile.thetas, profile.values, profile.moduli):
        lines.append(
            ",".join(
                _format_float(float(x)) for x in (theta, value.real, value.imag, modulus)
            )
        )
    text = "\n".join(lines) + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    try:
        results = run_checks(args.only)
    except KeyError as exc:
        raise UsageError(str(exc))
    if args.json:
        _emit([res.to_dict() for res in results], args.output)
    else:
        width = max(len(res.name) for res in results)
        for res in results:
            status = "pass" if res.passed else "FAIL"
            line = (
                f"{res.name:<{width}}  {status}  got={_format_float(res.got)}"
                f"  tol={_format_float(res.tol)}  expected {res.expected}"
            )
            if res.detail:
                line += f"  [{res.detail}]"
            print(line)
        total = len(results)
        good = sum(res.passed for res in results)
        print(f"{good}/{total} checks passed")
    return 0 if all(res.passed for res in results) else 1


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="harmonic-koebe",
        description="Construct sheared harmonic maps and verify their covered-disk, "
        "coefficient, and area bounds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("shear", help="construct the shear of the Koebe map with dilatation k e^{i alpha} z^m")
    p.add_argument("--k", type=float, required=True, help="dilatation amplitude in [0, 1]")
    p.add_argument("--m", type=int, required=True, help="dilatation vanishing order (integer >= 1)")
    p.add_argument("--alpha", type=float, default=0.0, help="dilatation phase")
    p.add_argument("--order", type=int, default=128, help="series truncation order")
    p.add_argument("-o", "--output", default=None, help="output JSON path (default stdout)")
    p.set_defaults(fn=_cmd_shear)

    p = sub.add_parser("radius", help="estimate the boundary minimum modulus")
    p.add_argument("map", nargs="?", default=None, help="map JSON file")
    p.add_argument("--closed-form", choices=closed_form_ids(), default=None)
    p.add_argument("--j-min", type=int, default=4)
    p.add_argument("--j-max", type=int, default=12)
    p.add_argument("--n", type=int, default=1024, help="angular samples per circle")
    p.add_argument("--no-refine", action="store_true", help="skip golden-section refinement")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(fn=_cmd_radius)

    p = sub.add_parser("bounds", help="evaluate a closed-form bound")
    p.add_argument(
        "formula",
        choices=[
            "koebe-lower-bound",
            "koebe-radius-lower",
            "one-sixth-conditions",
            "class-constants",
            "coefficient-bound",
            "heinz-lower",
            "area-lower-bound",
            "kh3-interval",
        ],
    )
    p.add_argument("--r", type=float, default=None, help="radius argument")
    p.add_argument("--k", type=float, default=None)
    p.add_argument("--m", type=float, default=None)
    p.add_argument("--alpha", type=float, default=None)
    p.add_argument("--p", type=int, default=None)
    p.add_argument("--q", type=int, default=None)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(fn=_cmd_bounds)

    p = sub.add_parser("area", help="image area by series and quadrature")
    p.add_argument("map", help="map JSON file")
    p.add_argument("--r", type=float, default=0.9)
    p.add_argument("--method", choices=["series", "quadrature", "both"], default="both")
    p.add_argument("--n-rad", type=int, default=64)
    p.add_argument("--n-ang", type=int, default=256)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(fn=_cmd_area)

    p = sub.add_parser("export-boundary", help="CSV samples of f on a circle")
    p.add_argument("map", nargs="?", default=None, help="map JSON file")
    p.add_argument("--closed-form", choices=closed_form_ids(), default=None)
    p.add_argument("--r", type=float, default=1.0 - 1e-6)
    p.add_argument("--n", type=int, default=1024)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(fn=_cmd_export_boundary)

    p = sub.add_parser("verify", help="run the verification suite")
    p.add_argument("--only", default=None, help="run a single named check")
    p.add_argument("--json", action="store_true", help="machine-readable report")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(fn=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except HarmonicKoebeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
