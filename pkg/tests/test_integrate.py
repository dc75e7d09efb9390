import math

import numpy as np
import pytest

from qhess.errors import BadExponent, NotCompactlyContained, NotTopDegree, RadialSymmetryViolation
from qhess.exterior import beta, omega_top
from qhess.fields import FormField, ScalarField, baston
from qhess.integrate import (
    Ball,
    QuadratureSpec,
    SphereSurface,
    ball_volume,
    cln_bound_scan,
    cln_constant,
    coarea_check,
    comparison_check,
    fundamental_check,
    fundamental_constant,
    fundamental_run,
    integrate,
    integrate_top,
    lelong_trace,
    mc_ball,
    radial_integral,
    sphere_area,
    stokes_check,
)
from qhess.suites import lelong_fundamental_oracle, stokes_field

RADIAL = QuadratureSpec("radial", nodes=48)


def test_frozen_constants():
    assert ball_volume(4) == pytest.approx(math.pi**2 / 2, rel=1e-15)
    assert sphere_area(8) == pytest.approx(math.pi**4 / 3, rel=1e-15)
    # kappa = 3 and kappa^m = 3 for m = 1
    assert fundamental_constant(2, 1) == pytest.approx(2 * math.pi**4, rel=1e-14)
    assert fundamental_constant(2, 1) == pytest.approx(194.81818206800, rel=1e-12)
    assert fundamental_constant(1, 1) == pytest.approx(math.pi**2 / 2 * 8, rel=1e-14)
    assert cln_constant(2) == pytest.approx(2 * math.pi**4 / 24, rel=1e-14)
    assert lelong_fundamental_oracle(2, 2, 0.0) == pytest.approx(64.93939402266829, rel=1e-12)


def test_fundamental_constant_against_flux_oracle():
    # total mass of the m-Hessian measure of K_{m,eps}: the form density over m!(n-m)!
    for n, m in ((1, 1), (2, 1), (2, 2), (3, 2)):
        kap = 2 * n / m - 1
        base = radial_integral(ScalarField.radial(n, -(2 * n + 1), 1.0), Ball.unit(n, math.inf), RADIAL).real
        assert base == pytest.approx(sphere_area(4 * n) / (4 * n), rel=1e-10)
        mass = 8**m * math.factorial(n) * kap**m * base / (math.factorial(m) * math.factorial(n - m))
        assert mass == pytest.approx(fundamental_constant(n, m), rel=1e-10)


def test_unit_ball_volume_by_integrating_omega():
    F = FormField.from_multivector(omega_top(1))
    est = integrate_top(F, Ball.unit(1), QuadratureSpec("mc", samples=100_000, seed=3))
    assert est.real == pytest.approx(math.pi**2 / 2, rel=1e-12)
    with pytest.raises(NotTopDegree):
        integrate_top(FormField.from_multivector(beta(2)), Ball.unit(2), QuadratureSpec())


def test_mc_and_radial_agree():
    n = 2
    f = ScalarField.radial(n, -1.0, 0.5) + ScalarField.norm2(n) * 3.0
    ball = Ball.unit(n)
    a = radial_integral(f, ball, RADIAL)
    b = mc_ball(f, ball, QuadratureSpec("mc", samples=200_000, seed=1))
    assert abs(a.real - b.real) <= 3 * b.stderr


def test_sphere_area_by_mc():
    est = integrate(ScalarField.constant(2, 1.0), SphereSurface((0.0,) * 8, 1.0), QuadratureSpec("sphere", samples=10_000))
    assert est.real == pytest.approx(sphere_area(8), rel=1e-12)


def test_radial_rule_rejects_non_radial():
    with pytest.raises(RadialSymmetryViolation):
        radial_integral(ScalarField.coordinate(1, 0), Ball.unit(1), RADIAL)


def test_mc_is_deterministic_and_chunk_stable():
    f = ScalarField.norm2(2) * ScalarField.coordinate(2, 1)
    spec = QuadratureSpec("mc", samples=150_000, seed=9)
    a = mc_ball(f, Ball.unit(2), spec)
    b = mc_ball(f, Ball.unit(2), spec)
    c = mc_ball(f, Ball.unit(2), QuadratureSpec("mc", samples=150_000, seed=9, workers=2))
    assert a.value == b.value == c.value and a.stderr == c.stderr


def test_stokes_zero_and_polynomial(rng):
    n = 2
    spec = QuadratureSpec("mc", samples=100_000, seed=4)
    rep = stokes_check(ScalarField.constant(n, 1.0), FormField(n), Ball.unit(n), spec)
    assert rep.passed and rep.lhs == 0.0 and rep.rhs == 0.0
    h = ScalarField.constant(n, 1.0)
    rep = stokes_check(h, stokes_field(n, rng), Ball.unit(n), QuadratureSpec("mc", samples=400_000, seed=5))
    assert rep.residual <= 2e-2


def test_stokes_without_boundary_term(rng):
    n = 2
    t = ScalarField.norm2(n) - 1.0
    h = (ScalarField.coordinate(n, 0) + 4.0) * t
    rep = stokes_check(h, stokes_field(n, rng), Ball.unit(n), QuadratureSpec("mc", samples=400_000, seed=6))
    assert rep.residual <= 2e-2


def test_coarea_equality_and_trivial_cases():
    n, m, r = 2, 2, -0.5
    spec = QuadratureSpec("mc", samples=100_000, seed=2)
    rho = ScalarField.norm2(n) - 1.0
    uk = ScalarField.norm2(n) - (1 + r)
    rep = coarea_check(rho, [uk], r, m, 1, spec)
    assert rep.passed and rep.residual <= 5e-2
    rep = coarea_check(rho, [], r, m, 0, spec)
    assert rep.passed


def test_comparison_examples():
    n, m = 2, 1
    u = ScalarField.norm2(n)
    spec = QuadratureSpec("mc", samples=200_000, seed=7)
    bound = Ball.unit(n, 1.5)
    rep = comparison_check(u, u - 1.0, m, bound, spec)
    assert rep.lhs == 0.0 and rep.rhs == 0.0 and rep.passed
    delta, c = 0.3, 0.2
    v = u * (1 - delta) + c
    rep = comparison_check(u, v, m, bound, spec)
    assert rep.passed and rep.lhs > rep.rhs
    # (1 - delta) |q|^2 + c < |q|^2 exactly when |q|^2 > c / delta
    vol = ball_volume(4 * n, math.sqrt(c / delta))
    assert rep.lhs == pytest.approx(8**m * math.factorial(n) * vol * 1, rel=2e-2 * 3)
    with pytest.raises(NotCompactlyContained):
        comparison_check(u, u * 0.5 + 2.0, m, bound, spec)


def test_fundamental_small():
    n, m = 1, 1
    spec = QuadratureSpec("radial", nodes=48)
    res = fundamental_run(n, m, [1e-2, 5e-3, 2.5e-3, 1.25e-3], None, spec, density_points=20)
    assert res.density_ok and res.radial_ok
    assert all(0.45 <= q <= 0.75 for q in res.ratios)
    assert all(abs(b) < abs(a) for a, b in zip(res.gaps, res.gaps[1:]))
    zero = fundamental_run(n, m, [1e-2, 5e-3], ScalarField.zero(n), spec, density_points=5)
    assert all(p == 0.0 for p in zero.pairings)
    with pytest.raises(BadExponent):
        fundamental_check(2, 3, [1e-2], None, spec)


def test_lelong_examples():
    n = 2
    radii = [0.1 * 1.35**i for i in range(8)]
    zero = (0.0,) * (4 * n)
    smooth = lelong_trace(ScalarField.norm2(n), zero, radii, 2, QuadratureSpec("mc", samples=20_000))
    assert smooth.monotone() and abs(smooth.limit) <= 1e-2 * smooth.ratios[-1]
    K = lelong_trace(ScalarField.fundamental(n, 2), zero, radii, 2, QuadratureSpec("radial", nodes=48))
    assert np.allclose(K.ratios, K.ratios[0], rtol=1e-8)
    assert K.ratios[0] == pytest.approx(lelong_fundamental_oracle(n, 2, K.details.get("cutoff", 1e-3)), rel=1e-8)


def test_cln_examples():
    n, r = 2, 0.5
    spec = QuadratureSpec("mc", samples=50_000, seed=1)
    u = ScalarField.norm2(n) - 1.0
    for k in (1, 2):
        rep = cln_bound_scan([u] * k, 2, r, spec, M=1.0)
        assert rep.passed
        assert rep.lhs == pytest.approx(8**k * math.factorial(n) * ball_volume(4 * n, math.sqrt(r)), rel=1e-12)


def test_integrate_top_of_baston():
    n = 1
    F = baston(ScalarField.norm2(n))
    est = integrate_top(F, Ball.unit(n), QuadratureSpec("mc", samples=10_000))
    assert est.real == pytest.approx(8 * ball_volume(4), rel=1e-12)
