"""Quadrature over balls, spheres and sublevel sets in R^{4n}.

Monte Carlo runs in fixed-size chunks; chunk ``i`` of stream ``s`` draws
from ``SeedSequence([seed, s, i])``, so every chunk is reproducible on its
own and the map over chunks can run in any order.  Chunk partial sums are
reduced with numpy's pairwise summation in chunk-index order.
"""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Sequence, Union

import numpy as np

from ..errors import DomainError, NotTopDegree, RadialSymmetryViolation
from ..fields import FormField, ScalarField

CHUNK = 1 << 16
SYMMETRY_TOL = 1e-6

Integrand = Union[ScalarField, FormField, Callable[[np.ndarray], np.ndarray]]


# regions -----------------------------------------------------------------
@dataclass(frozen=True)
class Ball:
    center: tuple[float, ...]
    radius: float

    @property
    def dim(self) -> int:
        return len(self.center)

    @classmethod
    def unit(cls, n: int, radius: float = 1.0) -> "Ball":
        return cls((0.0,) * (4 * n), float(radius))


@dataclass(frozen=True)
class SphereSurface:
    center: tuple[float, ...]
    radius: float

    @property
    def dim(self) -> int:
        return len(self.center)


@dataclass(frozen=True)
class Sublevel:
    """{x in bounding : field(x) < threshold}."""

    field: ScalarField
    threshold: float
    bounding: Ball

    @property
    def dim(self) -> int:
        return self.bounding.dim


Region = Union[Ball, SphereSurface, Sublevel]


@dataclass(frozen=True)
class QuadratureSpec:
    """How to integrate: ``mc`` (ball), ``sphere`` (surface MC) or ``radial`` (Gauss)."""

    method: str = "mc"
    samples: int = 200_000
    seed: int = 0
    nodes: int = 32
    scale: float | None = None
    workers: int = 1
    target_rel_err: float = 1e-2

    def __post_init__(self):
        if self.method not in ("mc", "radial", "sphere"):
            raise DomainError(f"unknown quadrature method {self.method!r}")
        if self.samples <= 0 or self.nodes <= 0:
            raise DomainError("samples and nodes must be positive")

    @classmethod
    def from_json_obj(cls, obj: dict) -> "QuadratureSpec":
        return cls(
            method=obj.get("method", "mc"),
            samples=int(obj.get("samples", 200_000)),
            seed=int(obj.get("seed", 0)),
            nodes=int(obj.get("nodes", 32)),
            scale=obj.get("scale"),
        )

    def with_seed(self, seed: int) -> "QuadratureSpec":
        return QuadratureSpec(self.method, self.samples, seed, self.nodes, self.scale, self.workers, self.target_rel_err)

    def with_method(self, method: str) -> "QuadratureSpec":
        return QuadratureSpec(method, self.samples, self.seed, self.nodes, self.scale, self.workers, self.target_rel_err)


@dataclass
class Estimate:
    """Integral value with a Monte Carlo standard error (0 for deterministic rules)."""

    value: complex
    stderr: float = 0.0
    samples: int = 0
    extra: dict = field(default_factory=dict)

    @property
    def real(self) -> float:
        return float(np.real(self.value))

    def __add__(self, other: "Estimate") -> "Estimate":
        # independent estimates
        return Estimate(self.value + other.value, math.hypot(self.stderr, other.stderr), self.samples + other.samples)

    def __sub__(self, other: "Estimate") -> "Estimate":
        return Estimate(self.value - other.value, math.hypot(self.stderr, other.stderr), self.samples + other.samples)

    def scaled(self, s: float) -> "Estimate":
        return Estimate(self.value * s, abs(s) * self.stderr, self.samples)


# geometry -------------------------------------------------------------------
def ball_volume(d: int, radius: float = 1.0) -> float:
    return math.pi ** (d / 2) / math.gamma(d / 2 + 1) * radius**d


def sphere_area(d: int, radius: float = 1.0) -> float:
    """Area of the unit sphere S^{d-1} in R^d scaled to ``radius``."""
    return 2.0 * math.pi ** (d / 2) / math.gamma(d / 2) * radius ** (d - 1)


def _chunk_rng(seed: int, stream: int, index: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence([int(seed) & 0xFFFFFFFF, int(stream), int(index)]))


def sample_ball(rng: np.random.Generator, count: int, center: Sequence[float], radius: float) -> np.ndarray:
    d = len(center)
    g = rng.standard_normal((count, d))
    g /= np.linalg.norm(g, axis=1, keepdims=True)
    r = radius * rng.random(count) ** (1.0 / d)
    return np.asarray(center) + g * r[:, None]


def sample_sphere(rng: np.random.Generator, count: int, center: Sequence[float], radius: float) -> np.ndarray:
    d = len(center)
    g = rng.standard_normal((count, d))
    g /= np.linalg.norm(g, axis=1, keepdims=True)
    return np.asarray(center) + radius * g


def as_callable(f: Integrand) -> Callable[[np.ndarray], np.ndarray]:
    if isinstance(f, FormField):
        deg = f.degree
        if deg is not None and deg != 2 * f.n:
            raise NotTopDegree(f"expected a top-degree form (degree {2 * f.n}), got degree {deg}")
        return f.top_coefficient().evaluate
    if isinstance(f, ScalarField):
        return f.evaluate
    return f


# Monte Carlo ----------------------------------------------------------------
def _mc(
    f: Callable[[np.ndarray], np.ndarray],
    sampler: Callable[[np.random.Generator, int], np.ndarray],
    measure: float,
    spec: QuadratureSpec,
    stream: int,
) -> Estimate:
    N = int(spec.samples)
    n_chunks = (N + CHUNK - 1) // CHUNK

    def run(i: int) -> tuple[complex, float, float]:
        size = min(CHUNK, N - i * CHUNK)
        pts = sampler(_chunk_rng(spec.seed, stream, i), size)
        vals = np.asarray(f(pts))
        return complex(np.sum(vals)), float(np.sum(vals.real**2)), float(np.sum(np.imag(vals) ** 2))

    if spec.workers > 1 and n_chunks > 1:
        with ThreadPoolExecutor(spec.workers) as pool:
            parts = list(pool.map(run, range(n_chunks)))
    else:
        parts = [run(i) for i in range(n_chunks)]
    sums = np.array([p[0] for p in parts])
    sq_re = np.array([p[1] for p in parts])
    sq_im = np.array([p[2] for p in parts])
    total = complex(np.sum(sums))
    mean = total / N
    var = max(float(np.sum(sq_re)) / N - mean.real**2, 0.0) + max(float(np.sum(sq_im)) / N - mean.imag**2, 0.0)
    stderr = measure * math.sqrt(var / max(N - 1, 1))
    value = measure * mean
    if value.imag == 0.0:
        value = value.real
    return Estimate(value, stderr, N)


def mc_ball(f: Integrand, ball: Ball, spec: QuadratureSpec, stream: int = 0, inner: float = 0.0) -> Estimate:
    """Uniform-sample estimate of the integral over a ball (optionally minus an inner ball)."""
    g = as_callable(f)
    c = np.asarray(ball.center)

    def masked(pts: np.ndarray) -> np.ndarray:
        if inner <= 0.0:
            return g(pts)
        r = np.linalg.norm(pts - c, axis=1)
        keep = r >= inner
        out = np.zeros(len(pts), dtype=complex)
        if np.any(keep):
            out[keep] = g(pts[keep])
        return out if np.iscomplexobj(out) and np.any(out.imag) else out.real

    return _mc(
        masked,
        lambda rng, k: sample_ball(rng, k, ball.center, ball.radius),
        ball_volume(ball.dim, ball.radius),
        spec,
        stream,
    )


def mc_sphere(f: Integrand, sphere: SphereSurface, spec: QuadratureSpec, stream: int = 1) -> Estimate:
    return _mc(
        as_callable(f),
        lambda rng, k: sample_sphere(rng, k, sphere.center, sphere.radius),
        sphere_area(sphere.dim, sphere.radius),
        spec,
        stream,
    )


def mc_sublevel(f: Integrand, region: Sublevel, spec: QuadratureSpec, stream: int = 0) -> Estimate:
    g = as_callable(f)
    h = region.field.evaluate

    def indicator(pts: np.ndarray) -> np.ndarray:
        inside = np.real(h(pts)) < region.threshold
        out = np.zeros(len(pts))
        if np.any(inside):
            out[inside] = np.real(g(pts[inside]))
        return out

    return _mc(
        indicator,
        lambda rng, k: sample_ball(rng, k, region.bounding.center, region.bounding.radius),
        ball_volume(region.dim, region.bounding.radius),
        spec,
        stream,
    )


# radial Gauss ---------------------------------------------------------------
def _panels(lo: float, hi: float, scale: float | None) -> list[tuple[float, float]]:
    if scale is None or scale <= 0.0 or not scale < hi:
        return [(lo, hi)]
    edges = [lo]
    k = -8
    while True:
        e = scale * 2.0**k
        if e >= hi:
            break
        if e > lo:
            edges.append(e)
        k += 1
    edges.append(hi)
    return list(zip(edges[:-1], edges[1:]))


def check_radial_symmetry(
    g: Callable[[np.ndarray], np.ndarray], center: np.ndarray, radii: Sequence[float], seed: int = 0, rotations: int = 8
) -> float:
    """Worst relative deviation of g along random directions from its value on the first axis."""
    d = len(center)
    rng = np.random.default_rng([seed, 7])
    dirs = rng.standard_normal((rotations, d))
    dirs /= np.linalg.norm(dirs, axis=1, keepdims=True)
    e0 = np.zeros(d)
    e0[0] = 1.0
    worst = 0.0
    for r in radii:
        ref = np.asarray(g((center + r * e0)[None, :]))[0]
        vals = np.asarray(g(center + r * dirs))
        dev = float(np.max(np.abs(vals - ref))) / max(abs(ref), 1e-300)
        if abs(ref) < 1e-300:
            dev = float(np.max(np.abs(vals)))
        worst = max(worst, dev)
    return worst


def radial_integral(
    f: Integrand,
    ball: Ball,
    spec: QuadratureSpec,
    inner: float = 0.0,
    check_symmetry: bool = True,
) -> Estimate:
    """Integral of a radially symmetric integrand over a ball (or all space if radius is inf).

    Gauss-Legendre on geometric panels in r (finite radius) or on uniform
    panels in theta with r = scale * tan(theta) (infinite radius).
    """
    g = as_callable(f)
    c = np.asarray(ball.center, dtype=float)
    d = ball.dim
    R = ball.radius
    if check_symmetry:
        probe_hi = R if math.isfinite(R) else (spec.scale or 1.0) * 4.0
        probe_lo = max(inner, 1e-3 * probe_hi)
        probe = np.linspace(probe_lo, probe_hi, 4)[1:] if probe_hi > probe_lo else [probe_hi]
        dev = check_radial_symmetry(g, c, probe, seed=spec.seed)
        if dev > SYMMETRY_TOL:
            raise RadialSymmetryViolation(f"integrand is not radial about the center (deviation {dev:.3e})")
    x, w = np.polynomial.legendre.leggauss(spec.nodes)
    e0 = np.zeros(d)
    e0[0] = 1.0
    area = sphere_area(d)
    total = 0.0
    if math.isfinite(R):
        for a, b in _panels(inner, R, spec.scale):
            r = 0.5 * (b - a) * x + 0.5 * (a + b)
            vals = np.asarray(g(c + r[:, None] * e0))
            total = total + 0.5 * (b - a) * np.sum(w * vals * r ** (d - 1))
    else:
        s = spec.scale or 1.0
        th_lo = math.atan(inner / s)
        th_hi = 0.5 * math.pi
        edges = np.linspace(th_lo, th_hi, 9)
        for a, b in zip(edges[:-1], edges[1:]):
            th = 0.5 * (b - a) * x + 0.5 * (a + b)
            r = s * np.tan(th)
            jac = s / np.cos(th) ** 2
            vals = np.asarray(g(c + r[:, None] * e0))
            total = total + 0.5 * (b - a) * np.sum(w * vals * r ** (d - 1) * jac)
    value = area * total
    if np.iscomplexobj(value) and value.imag == 0.0:
        value = value.real
    return Estimate(value if not np.iscomplexobj(value) else complex(value), 0.0, 0)


# dispatch -------------------------------------------------------------------
def integrate(f: Integrand, region: Region, spec: QuadratureSpec, stream: int = 0, inner: float = 0.0) -> Estimate:
    if isinstance(region, SphereSurface):
        return mc_sphere(f, region, spec, stream)
    if isinstance(region, Sublevel):
        return mc_sublevel(f, region, spec, stream)
    if spec.method == "radial":
        return radial_integral(f, region, spec, inner=inner)
    if spec.method == "sphere":
        raise DomainError("sphere quadrature needs a SphereSurface region")
    return mc_ball(f, region, spec, stream, inner=inner)


def integrate_top(F: FormField, region: Region, spec: QuadratureSpec, stream: int = 0, inner: float = 0.0) -> Estimate:
    """Integral of a top-degree form: its Omega-coefficient against Lebesgue measure."""
    if not isinstance(F, FormField):
        raise NotTopDegree("integrate_top expects a FormField")
    deg = F.degree
    if deg is not None and deg != 2 * F.n:
        raise NotTopDegree(f"expected degree {2 * F.n}, got {deg}")
    return integrate(F, region, spec, stream, inner)
