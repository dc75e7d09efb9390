"""Command-line front end.

Exit codes: 0 pass, 1 verification failure, 2 usage or parse error,
3 domain error.
"""
from __future__ import annotations

import argparse
import json
import math
import os
import sys
from pathlib import Path
from typing import Any, Sequence

import numpy as np

from .eigen import eigenvalues
from .errors import DomainError
from .fields import ScalarField, form_from_hat_components
from .hessian import is_msh_pointwise
from .hyperbolic import garding_check, hessian_energies, in_gamma_m, mixed_det, moore_det
from .integrate import (
    Ball,
    QuadratureSpec,
    cln_bound_scan,
    coarea_check,
    comparison_check,
    fundamental_check,
    lelong_report,
    lelong_trace,
    stokes_check,
)
from .integrate.checks import fundamental_run
from .quat import QuatMatrix
from .reports import SuiteResult, VerificationReport, dumps
from .sampling import random_int_polynomial
from .suites import DEFAULT_EPS, SUITES, run_suite, stokes_field, with_tolerance

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3
DEFAULT_SEED = 0


class UsageError(Exception):
    pass


def default_seed() -> int:
    env = os.environ.get("QHESS_SEED")
    if env is None or env == "":
        return DEFAULT_SEED
    try:
        return int(env)
    except ValueError:
        raise UsageError(f"QHESS_SEED must be an integer, got {env!r}")


# input -------------------------------------------------------------------------
def _read_json(path: str) -> Any:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
        return json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}")


def load_matrix(path: str) -> QuatMatrix:
    try:
        return QuatMatrix.from_json_obj(_read_json(path))
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"{path}: not a quaternionic matrix ({exc})")


def load_field(path: str) -> ScalarField:
    try:
        return ScalarField.from_json_obj(_read_json(path))
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"{path}: not a scalar field ({exc})")


def load_fields(path: str) -> list[ScalarField]:
    obj = _read_json(path)
    items = obj if isinstance(obj, list) else [obj]
    try:
        return [ScalarField.from_json_obj(o) for o in items]
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"{path}: not a list of scalar fields ({exc})")


def _floats(text: str) -> list[float]:
    try:
        return [float(x) for x in text.replace(",", " ").split()]
    except ValueError:
        raise UsageError(f"expected a list of numbers, got {text!r}")


def _quad_spec(args, method: str = "mc") -> QuadratureSpec:
    if args.spec:
        obj = _read_json(args.spec)
        obj.setdefault("seed", args.seed)
        obj.setdefault("samples", args.samples)
        try:
            return QuadratureSpec.from_json_obj(obj)
        except (TypeError, ValueError) as exc:
            raise UsageError(f"bad quadrature spec: {exc}")
    return QuadratureSpec(getattr(args, "method", None) or method, samples=args.samples, seed=args.seed)


# output ------------------------------------------------------------------------
def _emit(args, obj: Any, text: str | None = None) -> None:
    payload = dumps(obj) + "\n"
    if args.json_out:
        Path(args.json_out).write_text(payload)
        if text is not None:
            print(text)
    else:
        print(payload if text is None else text, end="" if text is None else "\n")


def _emit_report(args, rep: VerificationReport | SuiteResult) -> int:
    if args.tol is not None and isinstance(rep, VerificationReport):
        rep = with_tolerance(rep, args.tol)
    _emit(args, rep.to_json_obj())
    return EXIT_OK if rep.passed else EXIT_FAIL


# commands ------------------------------------------------------------------------
def cmd_moore(args) -> int:
    M = load_matrix(args.matrix)
    value = moore_det(M)
    _emit(args, {"moore_det": value, "hyperhermitian": M.is_hyperhermitian()}, repr(float(value)))
    return EXIT_OK


def cmd_mixed(args) -> int:
    mats = [load_matrix(p) for p in args.matrices]
    value = mixed_det(mats)
    _emit(args, {"mixed_det": value}, repr(float(value)))
    return EXIT_OK


def cmd_eigs(args) -> int:
    spec = eigenvalues(load_matrix(args.matrix))
    _emit(args, {"eigenvalues": list(spec.eigenvalues)}, " ".join(repr(v) for v in spec.eigenvalues))
    return EXIT_OK


def cmd_hm(args) -> int:
    A = load_matrix(args.matrix)
    H = hessian_energies(eigenvalues(A))
    if args.m is not None:
        if not 1 <= args.m <= A.n:
            raise DomainError(f"need 1 <= m <= {A.n}")
        _emit(args, {"m": args.m, "H": float(H[args.m])}, repr(float(H[args.m])))
    else:
        _emit(args, {"H": [float(h) for h in H[1:]]}, " ".join(repr(float(h)) for h in H[1:]))
    return EXIT_OK


def cmd_gamma(args) -> int:
    A = load_matrix(args.matrix)
    if not 1 <= args.m <= A.n:
        raise DomainError(f"need 1 <= m <= {A.n}")
    member = in_gamma_m(A, args.m, strict=not args.closure)
    _emit(args, {"m": args.m, "strict": not args.closure, "member": member}, "true" if member else "false")
    return EXIT_OK


def cmd_garding(args) -> int:
    mats = [load_matrix(p) for p in args.matrices]
    cert = garding_check(mats, args.n)
    tol = 1e-9 if args.tol is None else args.tol
    passed = cert.gap >= -tol
    _emit(
        args,
        {"lhs": cert.lhs, "rhs": cert.rhs, "gap": cert.gap, "member_flags": cert.member_flags, "tolerance": tol, "pass": passed},
    )
    return EXIT_OK if passed else EXIT_FAIL


def cmd_msh(args) -> int:
    u = load_field(args.field)
    rng = np.random.default_rng([args.seed, 1])
    n_pts = args.points
    pts = rng.standard_normal((n_pts, u.dim))
    pts *= (args.radius * rng.random(n_pts) ** (1.0 / u.dim))[:, None] / np.linalg.norm(pts, axis=1, keepdims=True)
    if any(rp < 0.0 and eps == 0.0 for _, rp, eps in u.terms):
        pts = pts[np.linalg.norm(pts, axis=1) > 1e-6]
    tol = 1e-10 if args.tol is None else args.tol
    v = is_msh_pointwise(u, args.m, pts, tol=tol)
    _emit(
        args,
        {"m": args.m, "is_msh": v.is_msh, "worst_margin": v.worst_margin, "worst_point": list(v.worst_point or ()), "points": v.points},
        f"{'true' if v.is_msh else 'false'} {v.worst_margin!r}",
    )
    return EXIT_OK


def cmd_verify(args) -> int:
    res = run_suite(args.suite, seed=args.seed, samples=args.samples_override, tol=args.tol)
    _emit(args, res.to_json_obj())
    return EXIT_OK if res.passed else EXIT_FAIL


def _require_n(n: int) -> None:
    if not 1 <= n <= 3:
        raise UsageError("integration commands need 1 <= n <= 3")


def cmd_stokes(args) -> int:
    _require_n(args.n)
    rng = np.random.default_rng([args.seed, 21])
    h = load_field(args.h) if args.h else random_int_polynomial(args.n, rng, degree=2, terms=4)
    if args.components:
        comps = load_fields(args.components)
        T = form_from_hat_components(comps)
    else:
        T = stokes_field(args.n, rng)
    if h.n != args.n or T.n != args.n:
        raise UsageError("field dimensions do not match --n")
    return _emit_report(args, stokes_check(h, T, Ball.unit(args.n), _quad_spec(args)))


def cmd_coarea(args) -> int:
    _require_n(args.n)
    n = args.n
    us = load_fields(args.fields) if args.fields else [ScalarField.norm2(n)] * (args.k - 1) + [ScalarField.norm2(n) - (1.0 + args.r)]
    if args.k == 0:
        us = []
    rho = ScalarField.norm2(n) - 1.0
    return _emit_report(args, coarea_check(rho, us, args.r, args.m, len(us), _quad_spec(args)))


def cmd_compare(args) -> int:
    u, v = load_field(args.u), load_field(args.v)
    _require_n(u.n)
    return _emit_report(args, comparison_check(u, v, args.m, Ball.unit(u.n, args.radius), _quad_spec(args)))


def cmd_fundamental(args) -> int:
    _require_n(args.n)
    eps = _floats(args.eps) if args.eps else list(DEFAULT_EPS)
    spec = QuadratureSpec("radial", nodes=32, seed=args.seed) if args.method == "radial" else _quad_spec(args)
    rep = fundamental_check(args.n, args.m, eps, None, spec)
    if args.table:
        res = fundamental_run(args.n, args.m, eps, None, spec)
        rep.details["table"] = [{"eps": e, "pairing": p, "gap": g} for e, p, g in zip(res.eps, res.pairings, res.gaps)]
    return _emit_report(args, rep)


def cmd_lelong(args) -> int:
    u = load_field(args.field)
    _require_n(u.n)
    radii = _floats(args.radii)
    if len(radii) < 3 or any(b <= a for a, b in zip(radii, radii[1:])) or radii[0] <= 0.0:
        raise UsageError("radii must be positive and strictly ascending (at least three)")
    center = _floats(args.center) if args.center else [0.0] * u.dim
    if len(center) != u.dim:
        raise UsageError(f"center needs {u.dim} coordinates")
    m = args.m or u.n
    method = args.method or "mc"
    spec = QuadratureSpec(method, samples=args.samples, seed=args.seed, nodes=32)
    trace = lelong_trace(u, center, radii, m, spec)
    smooth = not any(rp < 0.0 and eps == 0.0 for _, rp, eps in u.terms)
    return _emit_report(args, lelong_report(trace, smooth=smooth, seed=args.seed))


def cmd_cln(args) -> int:
    us = load_fields(args.fields)
    _require_n(us[0].n)
    return _emit_report(args, cln_bound_scan(us, args.m, args.r, _quad_spec(args), M=args.M))


# parser ------------------------------------------------------------------------
def _global_flags(p: argparse.ArgumentParser, suppress: bool) -> None:
    d = argparse.SUPPRESS if suppress else None
    p.add_argument("--seed", type=int, default=d, help="RNG seed (default: QHESS_SEED or 0)")
    p.add_argument("--samples", type=int, default=d, help="Monte Carlo sample count")
    p.add_argument("--tol", type=float, default=d, help="override the pass tolerance")
    p.add_argument("--json-out", default=d, help="write the JSON result to this path")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qhess", description="Quaternionic m-Hessian computations and checks.")
    _global_flags(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, fn, help_: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_)
        _global_flags(p, suppress=True)
        p.set_defaults(func=fn)
        return p

    p = add("moore", cmd_moore, "Moore determinant of a hyperhermitian matrix")
    p.add_argument("matrix")
    p = add("mixed", cmd_mixed, "mixed determinant of n matrices")
    p.add_argument("matrices", nargs="+")
    p = add("eigs", cmd_eigs, "eigenvalues of a hyperhermitian matrix")
    p.add_argument("matrix")
    p = add("hm", cmd_hm, "elementary symmetric functions H_m of the eigenvalues")
    p.add_argument("matrix")
    p.add_argument("--m", type=int)
    p = add("gamma", cmd_gamma, "Garding cone membership")
    p.add_argument("matrix")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--closure", action="store_true")
    p = add("garding", cmd_garding, "Garding inequality for m matrices")
    p.add_argument("matrices", nargs="+")
    p.add_argument("--n", type=int)
    p = add("msh", cmd_msh, "pointwise m-subharmonicity of a field")
    p.add_argument("field")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--points", type=int, default=200)
    p.add_argument("--radius", type=float, default=1.0)
    p = add("verify", cmd_verify, "run a verification suite")
    p.add_argument("suite", choices=[*SUITES, "all"])
    p = add("stokes", cmd_stokes, "Stokes-type formula on the unit ball")
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--h")
    p.add_argument("--components", help="JSON list of the 2n components T_A")
    p.add_argument("--spec")
    p = add("coarea", cmd_coarea, "coarea estimate on the unit ball")
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--m", type=int, default=2)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--r", type=float, default=-0.5)
    p.add_argument("--fields")
    p.add_argument("--spec")
    p = add("compare", cmd_compare, "comparison principle")
    p.add_argument("--u", required=True)
    p.add_argument("--v", required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--radius", type=float, default=1.5)
    p.add_argument("--spec")
    p = add("fundamental", cmd_fundamental, "fundamental solution pairing and constant")
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--eps")
    p.add_argument("--method", choices=["radial", "mc"], default="radial")
    p.add_argument("--table", action="store_true")
    p.add_argument("--spec")
    p = add("lelong", cmd_lelong, "Lelong ratios and limit")
    p.add_argument("field")
    p.add_argument("--radii", required=True)
    p.add_argument("--center")
    p.add_argument("--m", type=int)
    p.add_argument("--method", choices=["mc", "radial"])
    p = add("cln", cmd_cln, "Chern-Levine-Nirenberg bound")
    p.add_argument("fields")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--r", type=float, default=0.5)
    p.add_argument("--M", type=float)
    p.add_argument("--spec")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.seed is None:
            args.seed = default_seed()
        args.samples_override = args.samples
        if args.samples is None:
            args.samples = 200_000
        if args.samples <= 0:
            raise UsageError("--samples must be positive")
        if args.tol is not None and (math.isnan(args.tol) or args.tol < 0.0):
            raise UsageError("--tol must be non-negative")
        return args.func(args)
    except UsageError as exc:
        print(f"qhess: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"qhess: domain error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
