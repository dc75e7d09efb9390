import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from qhess.errors import DimensionMismatch, NotHyperhermitian
from qhess.quat import I, J, K, ONE, Quaternion, QuatMatrix, tau, tau_inverse, tau_structure_residual
from qhess.sampling import random_hyperhermitian, random_quat_matrix

finite = st.floats(-10, 10, allow_nan=False)
quats = st.builds(Quaternion, finite, finite, finite, finite)


def test_unit_table():
    assert I * J == K and J * K == I and K * I == J
    assert J * I == -K
    for u in (I, J, K):
        assert u * u == -ONE


@settings(max_examples=100, deadline=None)
@given(quats, quats, quats)
def test_hamilton_product_associative(p, q, r):
    a = ((p * q) * r).as_array()
    b = (p * (q * r)).as_array()
    assert np.allclose(a, b, rtol=1e-12, atol=1e-9)


@settings(max_examples=100, deadline=None)
@given(quats, quats)
def test_conjugate_reverses_products(p, q):
    lhs = (p * q).conjugate().as_array()
    rhs = (q.conjugate() * p.conjugate()).as_array()
    assert np.allclose(lhs, rhs, atol=1e-9)
    assert abs((p * p.conjugate()).w - p.norm2()) < 1e-9 * (1 + p.norm2())


def test_tau_of_units():
    # a + b j with a = i, b = 0 embeds as diag(i, -i)
    T = tau(QuatMatrix.from_quaternions([[I]]))
    assert np.allclose(T, np.diag([1j, -1j]))
    T = tau(QuatMatrix.from_quaternions([[J]]))
    assert np.allclose(T, [[0, -1], [1, 0]])


def test_tau_is_multiplicative_and_star_preserving(rng):
    for n in (1, 2, 3):
        A, B = random_quat_matrix(n, rng), random_quat_matrix(n, rng)
        assert np.allclose(tau(A @ B), tau(A) @ tau(B), atol=1e-12)
        assert np.allclose(tau(A.conj_transpose()), tau(A).conj().T, atol=1e-12)
        assert tau_structure_residual(tau(A)) < 1e-14
        assert np.allclose(tau_inverse(tau(A)).data, A.data)


def test_hyperhermitian_and_json(rng):
    H = random_hyperhermitian(3, rng)
    assert H.is_hyperhermitian()
    assert np.allclose(tau(H), tau(H).conj().T)
    back = QuatMatrix.loads(__import__("json").dumps(H.to_json_obj()))
    assert np.array_equal(back.data, H.data)
    with pytest.raises(NotHyperhermitian):
        QuatMatrix.from_quaternions([[ONE, J], [J, ONE]]).require_hyperhermitian()


def test_shape_errors():
    with pytest.raises(DimensionMismatch):
        QuatMatrix.identity(2) @ QuatMatrix.identity(3)
