"""Numerical certification of the integral identities and estimates."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from ..errors import BadExponent, DomainError, NotCompactlyContained, WrongDegree
from ..fields import FormField, ScalarField, d_alpha, hat_components, nabla
from ..hessian import hessian_form, mixed_baston
from ..reports import VerificationReport
from .quadrature import (
    Ball,
    Estimate,
    QuadratureSpec,
    SphereSurface,
    Sublevel,
    ball_volume,
    mc_ball,
    mc_sphere,
    mc_sublevel,
    radial_integral,
    sample_ball,
    sample_sphere,
    _chunk_rng,
)

STOKES_REL_TOL = 2e-2
COAREA_REL_TOL = 5e-2
FUNDAMENTAL_DENSITY_TOL = 1e-10
FUNDAMENTAL_RADIAL_TOL = 1e-6
FUNDAMENTAL_GAP_TOL = 2e-2
# accepted band for gap(eps/2)/gap(eps); the leading gap term is eps*log(1/eps)
RICHARDSON_BAND = (0.45, 0.75)
LELONG_CUTOFF = 1e-3
SIGMAS = 3.0
BOUNDARY_PROBES = 4096


def kappa(n: int, m: int) -> float:
    return 2.0 * n / m - 1.0


def fundamental_constant(n: int, m: int) -> float:
    """C_{m,n} = 8^m n! pi^{2n} kappa^m / ((2n)! m! (n-m)!)."""
    if not 1 <= m <= n:
        raise BadExponent(f"need 1 <= m <= n, got m={m}, n={n}")
    k = kappa(n, m)
    return 8.0**m * math.factorial(n) * math.pi ** (2 * n) * k**m / (
        math.factorial(2 * n) * math.factorial(m) * math.factorial(n - m)
    )


def _rel(a: complex, b: complex) -> float:
    scale = max(abs(a), abs(b))
    return abs(a - b) / scale if scale > 0.0 else 0.0


def _require_ball(region) -> Ball:
    if not isinstance(region, Ball):
        raise DomainError("this check runs on a Ball region")
    return region


# Stokes ---------------------------------------------------------------------
def stokes_terms(h: ScalarField, T: FormField, ball: Ball, alpha: int, spec: QuadratureSpec) -> tuple[Estimate, Estimate]:
    """(volume, boundary) for int h d_a T + int d_a h ^ T = int_S sum_A h T_A nabla_{A a} rho / |grad rho|.

    The volume side goes through the symbolic exterior calculus; the boundary
    side uses the components T_A with omega^A ^ omega^{hat A} = Omega directly.
    """
    n = h.n
    deg = T.degree
    if deg is not None and deg != 2 * n - 1:
        raise WrongDegree(f"T must have degree {2 * n - 1}, got {deg}")
    first = T.d(alpha).times(h)
    second = d_alpha(FormField.scalar(h), alpha).wedge(T)
    volume_form = first + second
    if volume_form.is_zero():
        vol = Estimate(0.0, 0.0, spec.samples)
    else:
        vol = mc_ball(volume_form.top_coefficient(), ball, spec, stream=0)
    # same stream, so the separate terms use the same sample points
    parts = [0.0 if F.is_zero() else mc_ball(F.top_coefficient(), ball, spec, stream=0).value for F in (first, second)]
    vol.extra["terms"] = parts
    rho = ScalarField.norm2(n, ball.center) - ball.radius**2
    comps = hat_components(T)
    flux = ScalarField.zero(n)
    for A, TA in enumerate(comps):
        if not TA.is_zero():
            flux = flux + h * TA * nabla(rho, A, alpha)
    flux = flux.scale(1.0 / (2.0 * ball.radius))
    if flux.is_zero():
        bnd = Estimate(0.0, 0.0, spec.samples)
    else:
        bnd = mc_sphere(flux, SphereSurface(ball.center, ball.radius), spec, stream=1)
    return vol, bnd


def stokes_check(h: ScalarField, T: FormField, ball: Ball, spec: QuadratureSpec, alpha: int | None = None) -> VerificationReport:
    ball = _require_ball(ball)
    alphas = (0, 1) if alpha is None else (alpha,)
    details: dict = {}
    worst_sig = 0.0
    passed_sig = True
    lhs_total = rhs_total = 0.0
    err_total = 0.0
    diff2 = scale2 = 0.0
    for a in alphas:
        vol, bnd = stokes_terms(h, T, ball, a, spec)
        diff = complex(vol.value) - complex(bnd.value)
        se = math.hypot(vol.stderr, bnd.stderr)
        scale = max(abs(complex(vol.value)), abs(complex(bnd.value)), *(abs(complex(p)) for p in vol.extra["terms"]))
        diff2 += abs(diff) ** 2
        scale2 += scale**2
        passed_sig = passed_sig and (abs(diff) <= SIGMAS * se or diff == 0.0)
        worst_sig = max(worst_sig, abs(diff) / se if se > 0 else (0.0 if diff == 0 else math.inf))
        lhs_total += abs(complex(vol.value))
        rhs_total += abs(complex(bnd.value))
        err_total = math.hypot(err_total, se)
        details[f"alpha{a}"] = {
            "volume_re": float(np.real(vol.value)),
            "volume_im": float(np.imag(vol.value)),
            "boundary_re": float(np.real(bnd.value)),
            "boundary_im": float(np.imag(bnd.value)),
            "stderr": se,
        }
    # the identity is vector-valued in alpha; one component may vanish
    worst_rel = math.sqrt(diff2 / scale2) if scale2 > 0.0 else 0.0
    passed = worst_rel <= STOKES_REL_TOL and passed_sig
    details["max_sigmas"] = worst_sig
    return VerificationReport(
        check="stokes",
        paper_ref="Stokes-type formula: int h d_a T + int d_a h ^ T = boundary flux",
        lhs=lhs_total,
        rhs=rhs_total,
        residual=worst_rel,
        tolerance=STOKES_REL_TOL,
        passed=passed,
        stderr=err_total,
        seed=spec.seed,
        details=details,
    )


# coarea ---------------------------------------------------------------------
def _density(us: Sequence[ScalarField], n: int, rho_power: int) -> ScalarField:
    """Omega-coefficient of (Delta rho)^p ^ Delta u_1 ^ ... with rho = |q|^2 - 1, i.e. 8^p beta^p."""
    F = mixed_baston(list(us), pad=rho_power) if us else None
    if F is None:
        return ScalarField.constant(n, 8.0**rho_power * math.factorial(n))
    return F.top_coefficient().scale(8.0**rho_power)


def _extremes(us: Sequence[ScalarField], radius: float, n: int, spec: QuadratureSpec) -> tuple[float, float]:
    center = np.zeros(4 * n)
    rng = _chunk_rng(spec.seed, 99, 0)
    pts = np.vstack(
        [
            center[None, :],
            sample_ball(rng, BOUNDARY_PROBES, center, radius),
            sample_sphere(rng, BOUNDARY_PROBES, center, radius),
        ]
    )
    vals = np.array([np.real(u.evaluate(pts)) for u in us])
    return float(vals.max()), float(vals.min())


def coarea_check(
    rho: ScalarField | None,
    us: Sequence[ScalarField],
    r: float,
    m: int,
    k: int,
    spec: QuadratureSpec,
    nodes: int = 32,
) -> VerificationReport:
    """Nested quadrature of int_sigma^r dt int_{rho<=t} (Delta rho)^{n-k} ^ Delta u_1 ^ ... ^ Delta u_k.

    Only rho = |q|^2 - 1 on the unit ball is supported (sigma = -1).
    """
    us = list(us)
    if len(us) != k:
        raise DomainError(f"expected {k} fields, got {len(us)}")
    n = rho.n if rho is not None else us[0].n
    if rho is not None and rho != ScalarField.norm2(n) - 1.0:
        raise DomainError("only rho = |q|^2 - 1 is certified")
    if not -1.0 < r < 0.0:
        raise DomainError("need -1 < r < 0")
    if not 0 <= k <= m <= n:
        raise DomainError(f"need 0 <= k <= m <= n, got k={k}, m={m}, n={n}")
    sigma = -1.0
    center = (0.0,) * (4 * n)
    inner = _density(us, n, n - k)
    x, w = np.polynomial.legendre.leggauss(nodes)
    ts = 0.5 * (r - sigma) * x + 0.5 * (r + sigma)
    per_node = max(spec.samples // nodes, 1)
    node_spec = QuadratureSpec("mc", per_node, spec.seed, spec.nodes)
    lhs_val = 0.0
    lhs_var = 0.0
    for i, (t, wt) in enumerate(zip(ts, w)):
        est = mc_ball(inner, Ball(center, math.sqrt(1.0 + t)), node_spec, stream=100 + i)
        c = 0.5 * (r - sigma) * wt
        lhs_val += c * est.real
        lhs_var += (c * est.stderr) ** 2
    lhs = Estimate(lhs_val, math.sqrt(lhs_var), per_node * nodes)
    R = math.sqrt(1.0 + r)
    details: dict = {"k": k, "m": m, "n": n, "r": r}
    if k == 0:
        vol = ball_volume(4 * n)
        closed = 8.0**n * math.factorial(n) * vol * (1.0 + r) ** (2 * n + 1) / (2 * n + 1)
        rel = _rel(lhs.real, closed)
        return VerificationReport(
            check="coarea",
            paper_ref="coarea estimate, k = 0: nested (Delta rho)^n volume integrals",
            lhs=lhs.real,
            rhs=closed,
            residual=rel,
            tolerance=COAREA_REL_TOL,
            passed=rel <= COAREA_REL_TOL,
            stderr=lhs.stderr,
            seed=spec.seed,
            details=details | {"mode": "closed_form"},
        )
    theta = _density(us[:-1], n, n - k + 1)
    uk = us[-1]
    ball_r = Ball(center, R)
    probe = sample_sphere(_chunk_rng(spec.seed, 98, 0), BOUNDARY_PROBES, np.zeros(4 * n), R)
    uk_scale = 1.0 + float(np.max(np.abs(uk.evaluate(np.zeros((1, 4 * n))))))
    vanishes = float(np.max(np.abs(uk.evaluate(probe)))) <= 1e-9 * uk_scale
    if vanishes:
        rhs = mc_ball(theta * uk, ball_r, spec, stream=200).scaled(-1.0)
        rel = _rel(lhs.real, rhs.real)
        return VerificationReport(
            check="coarea",
            paper_ref="coarea identity when u_k vanishes on {rho = r}",
            lhs=lhs.real,
            rhs=rhs.real,
            residual=rel,
            tolerance=COAREA_REL_TOL,
            passed=rel <= COAREA_REL_TOL,
            stderr=math.hypot(lhs.stderr, rhs.stderr),
            seed=spec.seed,
            details=details | {"mode": "equality"},
        )
    M, Mp = _extremes(us, R, n, spec)
    base = mc_ball(theta, ball_r, spec, stream=200)
    rhs_val = (M - Mp) * base.real
    se = math.hypot(lhs.stderr, (M - Mp) * base.stderr)
    slack = rhs_val - lhs.real
    return VerificationReport(
        check="coarea",
        paper_ref="coarea estimate: int dt int (Delta rho)^{n-k} ^ ... <= (M - M') int (Delta rho)^{n-k+1} ^ ...",
        lhs=lhs.real,
        rhs=rhs_val,
        residual=-slack,
        tolerance=SIGMAS * se,
        passed=slack >= -SIGMAS * se,
        stderr=se,
        seed=spec.seed,
        details=details | {"mode": "inequality", "M": M, "M_prime": Mp, "slack": slack},
    )


# comparison -----------------------------------------------------------------
def comparison_check(u: ScalarField, v: ScalarField, m: int, bounding: Ball, spec: QuadratureSpec) -> VerificationReport:
    """int_{u<v} (Delta u)^m ^ beta^{n-m} >= int_{u<v} (Delta v)^m ^ beta^{n-m}."""
    bounding = _require_ball(bounding)
    n = u.n
    probe = sample_sphere(_chunk_rng(spec.seed, 97, 0), BOUNDARY_PROBES, bounding.center, bounding.radius)
    if np.any(np.real(v.evaluate(probe) - u.evaluate(probe)) >= 0.0):
        raise NotCompactlyContained("v >= u somewhere on the bounding sphere")
    du = hessian_form(u, m).top_coefficient()
    dv = hessian_form(v, m).top_coefficient()
    region = Sublevel(u - v, 0.0, bounding)
    lhs = mc_sublevel(du, region, spec, stream=0)
    rhs = mc_sublevel(dv, region, spec, stream=0)
    diff = mc_sublevel(du - dv, region, spec, stream=0)
    gap = diff.real
    return VerificationReport(
        check="comparison",
        paper_ref="comparison principle: int_{u<v} (Delta u)^m ^ beta^{n-m} >= int_{u<v} (Delta v)^m ^ beta^{n-m}",
        lhs=lhs.real,
        rhs=rhs.real,
        residual=-gap,
        tolerance=SIGMAS * diff.stderr,
        passed=gap >= -SIGMAS * diff.stderr,
        stderr=diff.stderr,
        seed=spec.seed,
        details={"n": n, "m": m, "gap": gap, "lhs_stderr": lhs.stderr, "rhs_stderr": rhs.stderr},
    )


# fundamental solution ------------------------------------------------------
@dataclass
class FundamentalResult:
    n: int
    m: int
    constant: float
    density_residual: float
    radial_values: list[float]
    radial_target: float
    eps: list[float]
    pairings: list[float]
    target: float
    gaps: list[float]
    ratios: list[float]

    @property
    def density_ok(self) -> bool:
        return self.density_residual <= FUNDAMENTAL_DENSITY_TOL

    @property
    def radial_ok(self) -> bool:
        return all(_rel(v, self.radial_target) <= FUNDAMENTAL_RADIAL_TOL for v in self.radial_values)

    @property
    def convergence_ok(self) -> bool:
        if self.target == 0.0:
            return all(abs(p) <= 1e-12 for p in self.pairings)
        lo, hi = RICHARDSON_BAND
        final = abs(self.gaps[-1]) / abs(self.target)
        return final <= FUNDAMENTAL_GAP_TOL and all(lo <= q <= hi for q in self.ratios)


def default_test_function(n: int) -> ScalarField:
    """(1 - |q|^2)^2: radial, supported test weight on the unit ball."""
    t = ScalarField.norm2(n)
    return (ScalarField.constant(n, 1.0) - t) ** 2


def fundamental_density_residual(n: int, m: int, eps: float, points: np.ndarray) -> float:
    F = hessian_form(ScalarField.fundamental(n, m, eps), m).top_coefficient()
    k = kappa(n, m)
    t = np.einsum("ij,ij->i", points, points)
    expected = eps * 8.0**m * math.factorial(n) * k**m / (t + eps) ** (2 * n + 1)
    got = np.real(F.evaluate(points))
    return float(np.max(np.abs(got - expected) / np.abs(expected)))


def fundamental_run(
    n: int,
    m: int,
    eps_sequence: Sequence[float],
    phi: ScalarField | None,
    spec: QuadratureSpec,
    density_points: int = 100,
) -> FundamentalResult:
    if not 1 <= m <= n:
        raise BadExponent(f"need 1 <= m <= n, got m={m}, n={n}")
    eps_sequence = [float(e) for e in eps_sequence]
    if not eps_sequence or any(e <= 0.0 for e in eps_sequence):
        raise DomainError("eps values must be positive")
    phi = default_test_function(n) if phi is None else phi
    C = fundamental_constant(n, m)
    norm = math.factorial(m) * math.factorial(n - m)
    d = 4 * n
    rng = np.random.default_rng([spec.seed, 11])
    pts = rng.standard_normal((density_points, d)) * rng.uniform(0.05, 2.0, (density_points, 1)) / math.sqrt(d)
    dens = max(fundamental_density_residual(n, m, e, pts) for e in eps_sequence[:3])
    radial_target = math.pi ** (2 * n) / math.factorial(2 * n)
    radial_values = []
    for e in eps_sequence[:3]:
        g = ScalarField.radial(n, -(2 * n + 1), e, coef=e)
        est = radial_integral(g, Ball((0.0,) * d, math.inf), QuadratureSpec("radial", nodes=64, scale=math.sqrt(e), seed=spec.seed))
        radial_values.append(est.real)
    unit = Ball((0.0,) * d, 1.0)
    pairings = []
    for e in eps_sequence:
        dens_field = hessian_form(ScalarField.fundamental(n, m, e), m).top_coefficient()
        integrand = (dens_field * phi).scale(1.0 / norm)
        if spec.method == "radial":
            est = radial_integral(integrand, unit, QuadratureSpec("radial", nodes=max(spec.nodes, 32), scale=math.sqrt(e), seed=spec.seed))
        else:
            est = mc_ball(integrand, unit, spec)
        pairings.append(est.real)
    target = C * float(np.real(phi.evaluate(np.zeros((1, d)))[0]))
    gaps = [p - target for p in pairings]
    ratios = [gaps[i + 1] / gaps[i] for i in range(len(gaps) - 1) if gaps[i] != 0.0]
    return FundamentalResult(n, m, C, dens, radial_values, radial_target, eps_sequence, pairings, target, gaps, ratios)


def fundamental_check(
    n: int,
    m: int,
    eps_sequence: Sequence[float],
    phi: ScalarField | None,
    spec: QuadratureSpec,
) -> VerificationReport:
    res = fundamental_run(n, m, eps_sequence, phi, spec)
    passed = res.density_ok and res.radial_ok and res.convergence_ok
    final = abs(res.gaps[-1]) / abs(res.target) if res.target else abs(res.pairings[-1])
    return VerificationReport(
        check="fundamental",
        paper_ref="H_m(K_m) = C_{m,n} delta, C_{m,n} = 8^m n! pi^{2n} kappa^m / ((2n)! m! (n-m)!)",
        lhs=res.pairings[-1],
        rhs=res.target,
        residual=final,
        tolerance=FUNDAMENTAL_GAP_TOL,
        passed=passed,
        stderr=0.0,
        seed=spec.seed,
        details={
            "n": n,
            "m": m,
            "constant": res.constant,
            "density_residual": res.density_residual,
            "radial_values": res.radial_values,
            "radial_target": res.radial_target,
            "eps": res.eps,
            "pairings": res.pairings,
            "ratios": res.ratios,
            "richardson_band": list(RICHARDSON_BAND),
        },
    )


# Lelong ------------------------------------------------------------------------
@dataclass
class LelongTrace:
    center: tuple[float, ...]
    radii: list[float]
    sigma: list[float]
    stderr: list[float]
    ratios: list[float]
    ratio_stderr: list[float]
    limit: float
    exponent: float
    cutoff_sensitivity: float = 0.0
    details: dict = field(default_factory=dict)

    def monotone(self, sigmas: float = SIGMAS) -> bool:
        for i in range(len(self.ratios) - 1):
            se = math.hypot(self.ratio_stderr[i], self.ratio_stderr[i + 1])
            if self.ratios[i + 1] < self.ratios[i] - sigmas * se - 1e-12 * abs(self.ratios[i]):
                return False
        return True

    def to_json_obj(self) -> dict:
        return {
            "center": list(self.center),
            "radii": self.radii,
            "sigma": self.sigma,
            "stderr": self.stderr,
            "ratios": self.ratios,
            "ratio_stderr": self.ratio_stderr,
            "limit": self.limit,
            "exponent": self.exponent,
            "cutoff_sensitivity": self.cutoff_sensitivity,
            "monotone": self.monotone(),
        }


def _sigma(density: ScalarField, center: tuple[float, ...], r: float, spec: QuadratureSpec, inner: float, stream: int) -> Estimate:
    ball = Ball(center, r)
    if spec.method == "radial":
        return radial_integral(density, ball, QuadratureSpec("radial", nodes=spec.nodes, seed=spec.seed, scale=spec.scale), inner=inner)
    return mc_ball(density, ball, spec, stream=stream, inner=inner)


def lelong_trace(
    u: ScalarField,
    a: Sequence[float],
    radii: Sequence[float],
    m: int,
    spec: QuadratureSpec,
    singular: bool | None = None,
    cutoff: float = LELONG_CUTOFF,
) -> LelongTrace:
    """sigma(a, r) = int_{B(a,r)} Delta u ^ beta^{n-1} and its normalized ratios."""
    n = u.n
    radii = [float(r) for r in radii]
    if len(radii) < 3:
        raise DomainError("need at least three radii")
    if any(r <= 0.0 for r in radii) or any(b <= a_ for a_, b in zip(radii, radii[1:])):
        raise DomainError("radii must be positive and strictly ascending")
    if not 1 <= m <= n:
        raise DomainError(f"need 1 <= m <= n={n}, got {m}")
    center = tuple(float(x) for x in a)
    if len(center) != 4 * n:
        raise DomainError(f"center must have {4 * n} coordinates")
    if singular is None:
        singular = any(rp < 0.0 and eps == 0.0 for _, rp, eps in u.terms)
    density = hessian_form(u, 1).top_coefficient()
    # sigma uses beta^{n-1} without the 1/(n-1)! normalisation of H_1
    expo = 4.0 * n * (m - 1) / m
    sig, ses = [], []
    alt = []
    for i, r in enumerate(radii):
        inner = cutoff * r if singular else 0.0
        est = _sigma(density, center, r, spec, inner, stream=300 + i)
        sig.append(est.real)
        ses.append(est.stderr)
        if singular:
            alt.append(_sigma(density, center, r, spec, 2.0 * cutoff * r, stream=300 + i).real)
    ratios = [s / r**expo for s, r in zip(sig, radii)]
    rses = [e / r**expo for e, r in zip(ses, radii)]
    s = np.array([r ** (4.0 * n / m) for r in radii[:3]])
    y = np.array(ratios[:3])
    slope, intercept = np.polyfit(s, y, 1)
    sens = 0.0
    if singular:
        sens = max(abs(a_ - b) / max(abs(a_), 1e-300) for a_, b in zip(sig, alt))
    return LelongTrace(center, radii, sig, ses, ratios, rses, float(intercept), expo, sens, {"slope": float(slope)})


def lelong_report(trace: LelongTrace, smooth: bool, seed: int | None = None) -> VerificationReport:
    """Monotone ratios; for smooth fields also a limit below 1e-2 of the largest-radius ratio."""
    mono = trace.monotone()
    top = trace.ratios[-1]
    limit_ok = (abs(trace.limit) <= 1e-2 * abs(top)) if smooth else True
    return VerificationReport(
        check="lelong",
        paper_ref="sigma(a,r)/r^{4n(m-1)/m} is increasing in r; Lelong number is its limit",
        lhs=trace.limit,
        rhs=top,
        residual=abs(trace.limit) / abs(top) if top else 0.0,
        tolerance=1e-2 if smooth else math.inf,
        passed=mono and limit_ok,
        stderr=max(trace.ratio_stderr) if trace.ratio_stderr else 0.0,
        seed=seed,
        details={"monotone": mono, "trace": trace.to_json_obj()},
    )


# CLN -------------------------------------------------------------------------------
def cln_constant(n: int) -> float:
    """C = int_{|q|^2 <= 1} beta^n = n! vol(B^{4n})."""
    return math.factorial(n) * ball_volume(4 * n)


def cln_bound_scan(
    us: Sequence[ScalarField],
    m: int,
    r: float,
    spec: QuadratureSpec,
    M: float | None = None,
) -> VerificationReport:
    """int_{|q|^2<=r} Delta u_1 ^ ... ^ Delta u_k ^ beta^{n-k} <= C k! (2M)^k / (1-r)^k."""
    us = list(us)
    k = len(us)
    if not us:
        raise DomainError("need at least one field")
    n = us[0].n
    if not 0.0 < r < 1.0:
        raise DomainError("need 0 < r < 1")
    if not 1 <= k <= m <= n:
        raise DomainError(f"need 1 <= k <= m <= n, got k={k}, m={m}, n={n}")
    if M is None:
        rng = _chunk_rng(spec.seed, 96, 0)
        pts = np.vstack([np.zeros((1, 4 * n)), sample_ball(rng, BOUNDARY_PROBES, np.zeros(4 * n), 1.0)])
        M = max(float(np.max(np.abs(u.evaluate(pts)))) for u in us)
    dens = mixed_baston(us, pad=n - k).top_coefficient()
    est = mc_ball(dens, Ball((0.0,) * (4 * n), math.sqrt(r)), spec)
    bound = cln_constant(n) * math.factorial(k) * (2.0 * M) ** k / (1.0 - r) ** k
    return VerificationReport(
        check="cln",
        paper_ref="local Chern-Levine-Nirenberg estimate: int <= C k! (2M)^k / (1 - r)^k",
        lhs=est.real,
        rhs=bound,
        residual=est.real / bound,
        tolerance=1.0,
        passed=est.real <= bound + SIGMAS * est.stderr,
        stderr=est.stderr,
        seed=spec.seed,
        details={"n": n, "m": m, "k": k, "r": r, "M": M},
    )
