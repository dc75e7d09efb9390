import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from qhess.errors import NotReal, WrongDegree
from qhess.exterior import (
    Multivector,
    PositivityStatus,
    beta,
    is_positive_2form,
    is_positive_sampled,
    is_real,
    matrix_to_two_form,
    omega_top,
    pairing,
    rho_j,
    top_coefficient,
    two_form_to_matrix,
    wedge,
)
from qhess.quat import QuatMatrix
from qhess.sampling import random_hyperhermitian


def random_multivector(n: int, k: int, rng: np.random.Generator, terms: int = 4) -> Multivector:
    out = Multivector(n)
    for _ in range(terms):
        idx = rng.choice(2 * n, size=k, replace=False)
        c = complex(rng.standard_normal(), rng.standard_normal())
        out = out + Multivector.monomial(n, [int(i) for i in idx], c)
    return out


def test_basic_wedges():
    w0, w1 = Multivector.generator(2, 0), Multivector.generator(2, 1)
    assert wedge(w0, w1) == -wedge(w1, w0)
    assert wedge(w0, w0).is_zero()


def test_beta_power_is_factorial_omega():
    for n in (1, 2, 3, 4, 5):
        assert beta(n).power(n) == omega_top(n) * math.factorial(n)
        assert top_coefficient(beta(n).power(n)) == math.factorial(n)
        assert top_coefficient(omega_top(n)) == 1


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 3), st.integers(0, 3), st.integers(0, 3), st.integers(0, 2**31))
def test_graded_commutativity_and_associativity(n, p, q, seed):
    rng = np.random.default_rng(seed)
    p, q = min(p, 2 * n), min(q, 2 * n)
    a, b, c = random_multivector(n, p, rng), random_multivector(n, q, rng), random_multivector(n, 1, rng)
    assert wedge(a, b).allclose(wedge(b, a) * (-1) ** (p * q), 1e-12)
    assert wedge(wedge(a, b), c).allclose(wedge(a, wedge(b, c)), 1e-12)


def test_rho_j_examples(rng):
    n = 3
    assert rho_j(beta(n)) == beta(n)
    lhs = rho_j(Multivector.monomial(n, [0, 1], 1j))
    assert lhs == Multivector.monomial(n, [n, n + 1], -1j)
    a = random_multivector(n, 2, rng)
    assert rho_j(rho_j(a)).allclose(a, 1e-14)


def test_two_form_correspondence(rng):
    n = 3
    # fixed convention: beta corresponds to I / 2
    M = two_form_to_matrix(beta(n))
    assert np.allclose(M.data, QuatMatrix.identity(n).scale(0.5).data)
    assert np.allclose(two_form_to_matrix(Multivector(n)).data, 0.0)
    for _ in range(20):
        H = random_hyperhermitian(n, rng)
        w = matrix_to_two_form(H)
        assert is_real(w)
        assert np.allclose(two_form_to_matrix(w).data, H.data, atol=1e-12)
    with pytest.raises(NotReal):
        two_form_to_matrix(Multivector.monomial(n, [0, 1]))


def test_positivity_exact():
    n = 2
    assert is_positive_2form(beta(n)).status is PositivityStatus.POSITIVE_CERTIFIED
    v = is_positive_2form(beta(n) * -1)
    assert v.not_positive and v.value < 0
    v = is_positive_2form(matrix_to_two_form(QuatMatrix.real_diagonal([1.0, -1.0])))
    assert v.not_positive
    # the witness is strongly positive and pairs negatively
    assert pairing(matrix_to_two_form(QuatMatrix.real_diagonal([1.0, -1.0])), v.witness).real < 0


def test_positivity_sampled():
    n = 3
    for k in range(1, n + 1):
        assert not is_positive_sampled(beta(n).power(k), samples=300, seed=1).not_positive
    assert is_positive_sampled(omega_top(n) * -2.0).not_positive
    assert not is_positive_sampled(omega_top(n) * 3.0).not_positive


def test_top_coefficient_degree():
    with pytest.raises(WrongDegree):
        top_coefficient(beta(2))


def test_json_roundtrip(rng):
    a = random_multivector(3, 3, rng)
    assert Multivector.loads(__import__("json").dumps(a.to_json_obj())) == a
