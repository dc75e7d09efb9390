import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from qhess.eigen import eigenvalues, jacobi_eigvalsh
from qhess.errors import ConeViolation, DimensionMismatch, NoConvergence, NotHyperhermitian
from qhess.hyperbolic import (
    elementary_symmetric,
    garding_check,
    hessian_energies,
    hessian_energy,
    in_gamma_m,
    mixed_det,
    moore_det,
    moore_det_quaternion,
)
from qhess.quat import J, ONE, QuatMatrix, tau
from qhess.sampling import random_gamma_member, random_gamma_probe, random_hyperhermitian, shifted

OFFDIAG_J = QuatMatrix.from_quaternions([[ONE, J], [-J, ONE]])


def test_moore_examples():
    assert moore_det(QuatMatrix.real_diagonal([1.0, 2.0])) == 2.0
    assert abs(moore_det(OFFDIAG_J)) < 1e-12
    for n in range(1, 7):
        assert moore_det(QuatMatrix.identity(n)) == pytest.approx(1.0, abs=1e-12)


def test_moore_vs_complex_determinant(rng):
    # det tau(M) = det(M)^2 on hyperhermitian matrices
    for n in (2, 3, 4):
        H = random_hyperhermitian(n, rng)
        d = moore_det(H)
        ref = np.linalg.det(tau(H)).real
        assert d * d == pytest.approx(ref, rel=1e-9)
        assert d == pytest.approx(np.prod(np.linalg.eigvalsh(tau(H))[::2]), rel=1e-9)


def test_moore_sum_is_real(rng):
    H = random_hyperhermitian(4, rng)
    w, x, y, z = moore_det_quaternion(H)
    assert max(abs(x), abs(y), abs(z)) < 1e-12 * (1 + abs(w))
    with pytest.raises(NotHyperhermitian):
        moore_det(QuatMatrix.from_quaternions([[ONE, J], [J, ONE]]))


def test_mixed_det_examples(rng):
    A = random_hyperhermitian(3, rng)
    assert mixed_det([A, A, A]) == pytest.approx(moore_det(A), rel=1e-12)
    assert mixed_det([QuatMatrix.identity(4)] * 4) == pytest.approx(1.0)
    with pytest.raises(DimensionMismatch):
        mixed_det([A, A])


def test_mixed_det_finite_difference_oracle(rng):
    # f(s1, s2) = det(s1 A + s2 B) is a quadratic form; the central mixed
    # difference returns its s1 s2 coefficient exactly
    for _ in range(10):
        A, B = random_hyperhermitian(2, rng), random_hyperhermitian(2, rng)
        f = lambda s1, s2: moore_det(A.scale(s1) + B.scale(s2))
        h = 0.5
        coef = (f(h, h) - f(h, -h) - f(-h, h) + f(-h, -h)) / (4 * h * h)
        assert mixed_det([A, B]) == pytest.approx(coef / 2, rel=1e-9, abs=1e-12)


def test_eigen_examples():
    assert np.allclose(eigenvalues(QuatMatrix.real_diagonal([3.0, -1.0])).as_array(), [-1.0, 3.0])
    assert np.allclose(eigenvalues(OFFDIAG_J).as_array(), [0.0, 2.0], atol=1e-12)
    assert np.allclose(eigenvalues(QuatMatrix.identity(5)).as_array(), 1.0)


def test_jacobi_against_lapack(rng):
    for n in (1, 2, 4, 6):
        G = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
        H = G + G.conj().T
        assert np.allclose(jacobi_eigvalsh(H), np.linalg.eigvalsh(H), atol=1e-10)
    with pytest.raises(NoConvergence):
        jacobi_eigvalsh(H, max_sweeps=0)


def test_jacobi_converges_when_off_norm_is_tiny():
    # off-diagonal mass below sqrt(eps) * ||A|| must still be driven to zero
    H = np.diag([1e4, 1.0, -3.0]).astype(complex)
    H[0, 1] = H[1, 0] = 1e-5
    assert np.allclose(jacobi_eigvalsh(H), np.linalg.eigvalsh(H), rtol=1e-13)


def test_eigenvalues_come_in_pairs(rng):
    H = random_hyperhermitian(4, rng)
    full = np.linalg.eigvalsh(tau(H))
    assert np.allclose(full[::2], full[1::2], atol=1e-10)
    assert np.allclose(eigenvalues(H).as_array(), full[::2], atol=1e-10)


def test_hessian_energy_examples(rng):
    for n in (1, 3, 5):
        for m in range(1, n + 1):
            assert hessian_energy(QuatMatrix.identity(n), m) == pytest.approx(math.comb(n, m))
    A = random_hyperhermitian(4, rng)
    assert hessian_energy(A, 1) == pytest.approx(eigenvalues(A).as_array().sum(), abs=1e-12)


def test_hessian_energy_interpolation_oracle(rng):
    # moore_det(sI + A) = sum_m H_m(A) s^(n-m); fit through n+1 nodes
    n = 3
    for _ in range(10):
        A = random_hyperhermitian(n, rng)
        s = np.arange(n + 1, dtype=float) - 1.5
        vals = [moore_det(shifted(A, si)) for si in s]
        coefs = np.polyfit(s, vals, n)  # highest power first
        assert hessian_energy(A, 2) == pytest.approx(coefs[2], rel=1e-9, abs=1e-10)
        assert np.allclose(hessian_energies(A)[1:], coefs[1:], rtol=1e-9, atol=1e-10)


@settings(max_examples=100, deadline=None)
@given(st.lists(st.floats(-5, 5, allow_nan=False), min_size=1, max_size=6))
def test_elementary_symmetric_matches_polynomial_expansion(lam):
    e = elementary_symmetric(lam)
    ref = np.poly(lam) * (-1.0) ** np.arange(len(lam) + 1)
    assert np.allclose(e, ref, rtol=1e-9, atol=1e-9)


def test_gamma_examples():
    for m in (1, 2, 3):
        assert in_gamma_m(QuatMatrix.identity(3), m)
    assert not in_gamma_m(QuatMatrix.real_diagonal([-1.0, -1.0, -1.0]), 1)
    # boundary point: in the closure but not the open cone
    B = QuatMatrix.real_diagonal([1.0, 0.0])
    assert not in_gamma_m(B, 2) and in_gamma_m(B, 2, strict=False)


def test_gamma_nesting_on_probes(rng):
    for _ in range(100):
        A = random_gamma_probe(4, rng)
        inside = [in_gamma_m(A, m) for m in range(1, 5)]
        for m in range(1, 4):
            assert inside[m] <= inside[m - 1]


def test_garding_examples():
    I3, I2 = QuatMatrix.identity(3), QuatMatrix.identity(2)
    c = garding_check([I3, I3], 3)
    assert c.lhs == pytest.approx(3.0) and c.rhs == pytest.approx(3.0)
    c = garding_check([I2.scale(2.0), I2], 2)
    assert c.lhs == pytest.approx(2.0) and c.rhs == pytest.approx(2.0)
    with pytest.raises(ConeViolation):
        garding_check([QuatMatrix.real_diagonal([-1.0, -2.0, -3.0]), I3], 3)


def test_garding_random(rng):
    for _ in range(50):
        mats = [random_gamma_member(3, 2, rng) for _ in range(2)]
        assert garding_check(mats, 3).gap >= -1e-9
