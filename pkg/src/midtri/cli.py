"""Command-line front end: JSON requests in, JSON responses out.

Usage::

    midtri area        [--geometry G] [--file F] [--tol T] [--zero-tol Z]
    midtri midpoints   [--geometry G] [--file F] [--tol T]
    midtri reconstruct [--geometry G] [--file F] [--tol T] [--zero-tol Z]
    midtri classify    [--geometry G] [--file F] [--zero-tol Z]
    midtri verify      --geometry G [--count N] [--seed S] [--tol T] [--zero-tol Z]

A request is a JSON object::

    {"geometry": "sphere", "corners": [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
     "major_arc_side": "ab", "tolerances": {"zero_tol": 1e-8}}

with exactly one of ``corners`` / ``midpoints``.  Exit codes: 0 success,
1 verification failure, 2 malformed input, 3 singular or not realizable.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass, replace
from typing import Any, Optional, Sequence

from .area import Geometry
from .errors import GeometryError, InvalidInput, NotRealizable, SingularConfiguration
from .hyperbolic import (
    REALIZABLE_TOL,
    HypMidpoints,
    HypTriangle,
    hyp_area_corners,
    hyp_area_from_midpoints,
    hyp_midpoints_of,
    hyp_reconstruct,
    hyp_sine_half_area,
)
from .linalg import IDENTITY_TOL, det3, max_abs_diff
from .oracle import (
    PlanarPoint,
    planar_area,
    planar_area_from_midpoints,
    planar_midpoints,
    planar_reconstruct,
)
from .sphere import (
    ANTIPODAL_TOL,
    ZERO_TOL,
    Side,
    SphereMidpoints,
    SphereTriangle,
    sphere_area,
    sphere_area_from_midpoints,
    sphere_classify_midpoints,
    sphere_midpoints_of,
    sphere_reconstruct,
    sphere_reconstruct_closed_form,
    sphere_sine_half_area,
)
from .verify import run_suite

EXIT_OK, EXIT_FAILED, EXIT_INVALID, EXIT_SINGULAR = 0, 1, 2, 3
_REQUEST_KEYS = {"geometry", "corners", "midpoints", "major_arc_side", "tolerances"}


@dataclass(frozen=True)
class Tolerances:
    zero_tol: float = ZERO_TOL
    identity_tol: float = IDENTITY_TOL
    antipodal_tol: float = ANTIPODAL_TOL
    realizable_tol: float = REALIZABLE_TOL


@dataclass(frozen=True)
class Request:
    geometry: Geometry
    corners: Optional[tuple] = None
    midpoints: Optional[tuple] = None
    major_arc_side: Optional[Side] = None
    tolerances: Tolerances = Tolerances()


# -- serialization ----------------------------------------------------------------


def dumps(obj: Any) -> str:
    """JSON text with every float written to 17 significant digits."""
    if isinstance(obj, bool) or obj is None:
        return json.dumps(obj)
    if isinstance(obj, float):
        if not math.isfinite(obj):
            raise ValueError("non-finite number in response")
        return format(obj, ".17g")
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        return "{" + ", ".join(f"{json.dumps(str(k))}: {dumps(v)}" for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(dumps(v) for v in obj) + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _floats(v) -> list[float]:
    return [float(x) for x in v]


def _reject_constant(name: str):
    raise InvalidInput(f"non-finite number {name} in request")


# -- parsing --------------------------------------------------------------------------


def _real(x, what: str) -> float:
    if isinstance(x, bool) or not isinstance(x, (int, float)):
        raise InvalidInput(f"{what} must be a number")
    x = float(x)
    if not math.isfinite(x):
        raise InvalidInput(f"{what} must be finite")
    return x


def _points(raw, dim: int, what: str) -> tuple:
    if not isinstance(raw, list) or len(raw) != 3:
        raise InvalidInput(f"{what} must be a list of three points")
    out = []
    for i, p in enumerate(raw):
        if not isinstance(p, list) or len(p) != dim:
            raise InvalidInput(f"{what}[{i}] must be an array of {dim} numbers")
        out.append(tuple(_real(x, f"{what}[{i}]") for x in p))
    return tuple(out)


def parse_request(doc: Any, geometry: Optional[str] = None) -> Request:
    if not isinstance(doc, dict):
        raise InvalidInput("request must be a JSON object")
    unknown = set(doc) - _REQUEST_KEYS
    if unknown:
        raise InvalidInput(f"unknown request fields: {', '.join(sorted(unknown))}")
    if "geometry" not in doc:
        raise InvalidInput("geometry is required")
    try:
        geo = Geometry(doc["geometry"])
    except ValueError:
        raise InvalidInput(f"unknown geometry {doc['geometry']!r}") from None
    if geometry is not None and Geometry(geometry) is not geo:
        raise InvalidInput(f"--geometry {geometry} conflicts with request geometry {geo.value}")
    if ("corners" in doc) == ("midpoints" in doc):
        raise InvalidInput("exactly one of corners and midpoints is required")
    dim = 2 if geo is Geometry.PLANAR else 3
    corners = _points(doc["corners"], dim, "corners") if "corners" in doc else None
    midpoints = _points(doc["midpoints"], dim, "midpoints") if "midpoints" in doc else None
    side = None
    if doc.get("major_arc_side") is not None:
        if geo is not Geometry.SPHERE or corners is None:
            raise InvalidInput("major_arc_side applies to sphere corners only")
        try:
            side = Side(doc["major_arc_side"])
        except ValueError:
            raise InvalidInput(f"major_arc_side must be one of bc, ca, ab") from None
    tols = Tolerances()
    raw = doc.get("tolerances", {})
    if not isinstance(raw, dict):
        raise InvalidInput("tolerances must be an object")
    for key, value in raw.items():
        if key not in Tolerances.__dataclass_fields__:
            raise InvalidInput(f"unknown tolerance {key!r}")
        value = _real(value, key)
        if value <= 0:
            raise InvalidInput(f"{key} must be positive")
        tols = replace(tols, **{key: value})
    return Request(geo, corners, midpoints, side, tols)


# -- commands ---------------------------------------------------------------------------


def _sphere_midpoint_diagnostics(m: SphereMidpoints, zero_tol: float) -> dict:
    cls = sphere_classify_midpoints(m, zero_tol)
    return {"class": cls.kind.value, "eta": cls.eta, "products": list(cls.products), "det3": m.det3()}


def cmd_area(req: Request) -> dict:
    t = req.tolerances
    if req.geometry is Geometry.PLANAR:
        pts = [PlanarPoint(*p) for p in (req.corners or req.midpoints)]
        area = planar_area(*pts) if req.corners else planar_area_from_midpoints(*pts)
        return {"area": area}
    if req.geometry is Geometry.SPHERE:
        if req.corners:
            tri = SphereTriangle(*req.corners, req.major_arc_side)
            if tri.major_arc is None:
                s = sphere_sine_half_area(*tri.corners, tol=t.antipodal_tol)
            else:
                s = sphere_midpoints_of(tri, t.antipodal_tol).det3()
            return {"area": sphere_area(tri).value, "sine_half_area": s, "det3": det3(*tri.corners)}
        m = SphereMidpoints(*req.midpoints)
        diag = _sphere_midpoint_diagnostics(m, t.zero_tol)
        return {"area": sphere_area_from_midpoints(m, t.zero_tol).value, "sine_half_area": diag["det3"], **diag}
    if req.corners:
        tri = HypTriangle(*req.corners)
        return {
            "area": hyp_area_corners(*tri.corners).value,
            "sine_half_area": hyp_sine_half_area(*tri.corners),
            "det3": det3(*tri.corners),
        }
    m = HypMidpoints(*req.midpoints)
    d = m.det3()
    return {"area": hyp_area_from_midpoints(m, t.realizable_tol).value, "sine_half_area": d, "det3": d}


def cmd_midpoints(req: Request) -> dict:
    if req.corners is None:
        raise InvalidInput("midpoints needs corners")
    if req.geometry is Geometry.PLANAR:
        mids = planar_midpoints(*(PlanarPoint(*p) for p in req.corners))
        return {"midpoints": [_floats(p) for p in mids]}
    if req.geometry is Geometry.SPHERE:
        m = sphere_midpoints_of(SphereTriangle(*req.corners, req.major_arc_side), req.tolerances.antipodal_tol)
    else:
        m = hyp_midpoints_of(HypTriangle(*req.corners))
    return {"midpoints": [_floats(v) for v in m.vectors], "det3": m.det3()}


def cmd_reconstruct(req: Request) -> dict:
    if req.midpoints is None:
        raise InvalidInput("reconstruct needs midpoints")
    t = req.tolerances
    if req.geometry is Geometry.PLANAR:
        mids = [PlanarPoint(*p) for p in req.midpoints]
        corners = planar_reconstruct(*mids)
        back = planar_midpoints(*corners)
        residual = max(max(abs(p[0] - q[0]), abs(p[1] - q[1])) for p, q in zip(mids, back))
        return {"corners": [_floats(p) for p in corners], "residual": residual}
    if req.geometry is Geometry.SPHERE:
        m = SphereMidpoints(*req.midpoints)
        tri = sphere_reconstruct(m, t.zero_tol, t.identity_tol, t.antipodal_tol)
        alt = sphere_reconstruct_closed_form(m, t.zero_tol, t.antipodal_tol)
        back = sphere_midpoints_of(tri, t.antipodal_tol)
        return {
            "corners": [_floats(v) for v in tri.corners],
            "major_arc_side": tri.major_arc.value if tri.major_arc else None,
            "residual": max(max_abs_diff(p, q) for p, q in zip(m.vectors, back.vectors)),
            "closed_form_deviation": max(max_abs_diff(p, q) for p, q in zip(tri.corners, alt.corners)),
        }
    m = HypMidpoints(*req.midpoints)
    tri = hyp_reconstruct(m, t.realizable_tol)
    back = hyp_midpoints_of(tri)
    return {
        "corners": [_floats(v) for v in tri.corners],
        "residual": max(max_abs_diff(p, q) for p, q in zip(m.vectors, back.vectors)),
    }


def cmd_classify(req: Request) -> dict:
    if req.midpoints is None:
        raise InvalidInput("classify needs midpoints")
    if req.geometry is Geometry.SPHERE:
        return _sphere_midpoint_diagnostics(SphereMidpoints(*req.midpoints), req.tolerances.zero_tol)
    if req.geometry is Geometry.HYPERBOLIC:
        m = HypMidpoints(*req.midpoints)
        return {"realizable": m.is_realizable(req.tolerances.realizable_tol), "det3": m.det3()}
    raise InvalidInput("classify applies to sphere and hyperbolic midpoints")


COMMANDS = {
    "area": cmd_area,
    "midpoints": cmd_midpoints,
    "reconstruct": cmd_reconstruct,
    "classify": cmd_classify,
}


def _status(exc: BaseException) -> tuple[str, int]:
    if isinstance(exc, NotRealizable):
        return "not_realizable", EXIT_SINGULAR
    if isinstance(exc, SingularConfiguration):
        return "singular", EXIT_SINGULAR
    return "invalid", EXIT_INVALID


def _error(command: str, exc: BaseException, geometry: Optional[Geometry] = None) -> tuple[dict, int]:
    status, code = _status(exc)
    doc = {"status": status, "command": command}
    if geometry is not None:
        doc["geometry"] = geometry.value
    doc["error"] = type(exc).__name__
    doc["message"] = str(exc)
    return doc, code


def handle(command: str, doc: Any, geometry: Optional[str] = None,
           tol: Optional[float] = None, zero_tol: Optional[float] = None) -> tuple[dict, int]:
    """Run one data command on a decoded request; returns (response, exit code)."""
    req = None
    try:
        req = parse_request(doc, geometry)
        t = req.tolerances
        if tol is not None:
            t = replace(t, identity_tol=tol, antipodal_tol=tol, realizable_tol=tol)
        if zero_tol is not None:
            t = replace(t, zero_tol=zero_tol)
        req = replace(req, tolerances=t)
        payload = COMMANDS[command](req)
    except (GeometryError, ValueError) as exc:
        return _error(command, exc, req.geometry if req else None)
    return {"status": "ok", "command": command, "geometry": req.geometry.value, **payload}, EXIT_OK


def cmd_verify(geometry: str, count: int, seed: int, tol: Optional[float] = None,
               zero_tol: Optional[float] = None) -> tuple[dict, int]:
    try:
        geo = Geometry(geometry)
        if count < 1:
            raise InvalidInput("count must be at least 1")
        report = run_suite(geo, count, seed, tol=tol, zero_tol=ZERO_TOL if zero_tol is None else zero_tol)
    except (GeometryError, ValueError) as exc:
        return _error("verify", exc)
    checks, failures = {}, []
    for name, c in report.checks.items():
        dev = c.max_deviation if math.isfinite(c.max_deviation) else None
        checks[name] = {"bound": c.bound, "max_deviation": dev, "ok": c.ok}
        if c.failure is not None:
            # the replay values come from the same path as `midtri area`
            response, _ = handle("area", json.loads(dumps(c.failure)), zero_tol=zero_tol)
            failures.append({"check": name, "request": c.failure, "response": response})
    doc = {
        "status": "ok" if report.ok else "failed",
        "command": "verify",
        "geometry": geo.value,
        "count": count,
        "seed": seed,
        "checks": checks,
    }
    if failures:
        doc["failures"] = failures
    return doc, EXIT_OK if report.ok else EXIT_FAILED


# -- entry point -------------------------------------------------------------------------


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--geometry", choices=[g.value for g in Geometry])
    common.add_argument("--tol", type=float, help="singularity threshold (verify: agreement bound)")
    common.add_argument("--zero-tol", type=float, help="threshold for a vanishing midpoint inner product")
    parser = argparse.ArgumentParser(prog="midtri", description="Geodesic triangle areas and side midpoints.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name, parents=[common])
        p.add_argument("--file", help="request file (default: standard input)")
    p = sub.add_parser("verify", parents=[common])
    p.add_argument("--count", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = _parser().parse_args(argv)
    if args.command == "verify":
        if args.geometry is None:
            doc, code = _error("verify", InvalidInput("--geometry is required"))
        else:
            doc, code = cmd_verify(args.geometry, args.count, args.seed, args.tol, args.zero_tol)
    else:
        try:
            if args.file:
                with open(args.file, encoding="utf-8") as fh:
                    text = fh.read()
            else:
                text = sys.stdin.read()
            request = json.loads(text, parse_constant=_reject_constant)
        except (OSError, ValueError) as exc:
            doc, code = _error(args.command, InvalidInput(f"cannot read request: {exc}"))
        else:
            doc, code = handle(args.command, request, args.geometry, args.tol, args.zero_tol)
    sys.stdout.write(dumps(doc) + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
