import math

import numpy as np
import pytest

from qhess.eigen import eigenvalues
from qhess.fields import ScalarField
from qhess.hessian import cf_hessian, hessian_form, hessian_top_density, is_msh_pointwise, mixed_baston, real_hessian
from qhess.hyperbolic import hessian_energy, mixed_det
from qhess.quat import QuatMatrix, qmul
from qhess.sampling import quadratic_hessian, random_int_polynomial, random_msh_quadratic, random_real_polynomial


def test_norm2_hessian_pinned_by_identity():
    for n in (1, 2, 3):
        H = cf_hessian(ScalarField.norm2(n), np.zeros(4 * n)).matrix
        for m in range(1, n + 1):
            lhs = math.factorial(m) * math.factorial(n - m) * hessian_energy(H, m)
            assert lhs == pytest.approx(8**m * math.factorial(n))
        assert np.allclose(H.data, QuatMatrix.identity(n).scale(8.0).data)


def test_linear_and_quadratic_hessians(rng):
    n = 2
    H = cf_hessian(ScalarField.coordinate(n, 3) * 2.0, rng.standard_normal(8)).matrix
    assert np.allclose(H.data, 0.0)
    u = random_msh_quadratic(n, 2, rng)
    a = cf_hessian(u, rng.standard_normal(8)).matrix.data
    b = cf_hessian(u, rng.standard_normal(8)).matrix.data
    assert np.allclose(a, b, atol=1e-12)


def test_first_hessian_is_real_laplacian(rng):
    u = random_real_polynomial(2, rng, degree=4)
    x = rng.standard_normal(8)
    H = cf_hessian(u, x).matrix
    assert hessian_energy(H, 1) == pytest.approx(np.trace(real_hessian(u, x)[0]), rel=1e-10, abs=1e-10)


def test_hessian_form_examples(rng):
    for n in (1, 2, 3):
        for m in range(1, n + 1):
            assert hessian_top_density(ScalarField.norm2(n), m) == ScalarField.constant(n, 8.0**m * math.factorial(n))
            assert hessian_form(ScalarField.coordinate(n, 0), m).is_zero()


def test_fundamental_density_formula(rng):
    n, eps = 2, 0.2
    for m in (1, 2):
        kappa = 2 * n / m - 1
        dens = hessian_top_density(ScalarField.fundamental(n, m, eps), m)
        X = rng.standard_normal((20, 4 * n))
        t = np.einsum("ij,ij->i", X, X)
        expect = eps * 8**m * math.factorial(n) * kappa**m / (t + eps) ** (2 * n + 1)
        assert np.allclose(np.real(dens.evaluate(X)), expect, rtol=1e-10)


def test_mixed_baston_examples(rng):
    n = 2
    q2 = ScalarField.norm2(n)
    assert mixed_baston([q2, q2]).top_coefficient() == ScalarField.constant(n, 8.0**n * 2)
    assert mixed_baston([q2, ScalarField.coordinate(n, 1)]).is_zero()
    for _ in range(5):
        u, v = random_msh_quadratic(n, 1, rng), random_msh_quadratic(n, 1, rng)
        val = complex(mixed_baston([u, v]).top_coefficient().evaluate(np.zeros(8))).real
        ref = 2 * mixed_det([quadratic_hessian(u), quadratic_hessian(v)])
        assert val == pytest.approx(ref, rel=1e-9)


def _assemble(u, x, table):
    n = u.n
    blocks = real_hessian(u, x)[0].reshape(n, 4, n, 4)
    return QuatMatrix(np.einsum("lakb,abc->lkc", blocks, table))


def test_unit_convention_pinned_by_cross_identity(rng):
    units = np.eye(4)
    conj = np.diag([1.0, -1.0, -1.0, -1.0])
    n, m = 2, 2
    c = math.factorial(m) * math.factorial(n - m)
    right = np.array([[qmul(conj[b], units[a]) for b in range(4)] for a in range(4)])
    unconjugated = np.array([[qmul(units[a], units[b]) for b in range(4)] for a in range(4)])
    hh_residual, gap = 0.0, 0.0
    for _ in range(5):
        u = random_int_polynomial(n, rng, degree=3, terms=6)
        x = rng.standard_normal(8)
        ref = complex(hessian_top_density(u, m).evaluate(x)).real
        assert c * hessian_energy(cf_hessian(u, x).matrix, m) == pytest.approx(ref, rel=1e-8, abs=1e-8)
        # unit order (left vs right) is invisible to the spectrum
        assert c * hessian_energy(_assemble(u, x, right).symmetrized(), m) == pytest.approx(ref, rel=1e-8, abs=1e-8)
        # the conjugation pattern is not
        bad = _assemble(u, x, unconjugated)
        hh_residual = max(hh_residual, bad.hyperhermitian_residual())
        gap = max(gap, abs(c * hessian_energy(bad.symmetrized(), m) - ref) / (1 + abs(ref)))
    assert hh_residual > 1e-3 and gap > 1e-3


def test_msh_examples(rng):
    n = 2
    P = rng.standard_normal((50, 4 * n))
    for m in (1, 2):
        assert is_msh_pointwise(ScalarField.norm2(n), m, P).is_msh
        assert not is_msh_pointwise(-ScalarField.norm2(n), m, P).is_msh
    K1 = ScalarField.fundamental(n, 1, 0.1)
    assert is_msh_pointwise(K1, 1, P).is_msh
    # kappa = 3 is outside the admissible range for the 2-Hessian
    assert not is_msh_pointwise(K1, 2, P).is_msh
    K2 = ScalarField.fundamental(n, 2, 0.1)
    assert is_msh_pointwise(K2, 2, P).is_msh and is_msh_pointwise(K2, 1, P).is_msh


def test_msh_quadratic_sampler(rng):
    for m in (1, 2, 3):
        u = random_msh_quadratic(3, m, rng)
        lam = eigenvalues(quadratic_hessian(u))
        assert all(hessian_energy(lam, k) > 0 for k in range(1, m + 1))
