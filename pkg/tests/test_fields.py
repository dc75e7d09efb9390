import json
import math

import numpy as np
import pytest

from qhess.errors import DomainError, IndexOutOfRange, SingularEvaluation
from qhess.exterior import beta, matrix_to_two_form, omega_top
from qhess.fields import (
    FormField,
    ScalarField,
    baston,
    beta_form,
    d0,
    d1,
    form_from_hat_components,
    hat_components,
    nabla,
)
from qhess.quat import QuatMatrix, qmul
from qhess.sampling import random_form, random_int_polynomial


def fd_gradient(f, x, h=1e-5):
    g = np.zeros(len(x), dtype=complex)
    for i in range(len(x)):
        e = np.zeros(len(x))
        e[i] = h
        g[i] = (f(x + e) - f(x - e)) / (2 * h)
    return g


def fd_hessian(f, x, h=1e-4):
    d = len(x)
    H = np.zeros((d, d))
    E = np.eye(d) * h
    for i in range(d):
        for j in range(d):
            H[i, j] = (f(x + E[i] + E[j]) - f(x + E[i] - E[j]) - f(x - E[i] + E[j]) + f(x - E[i] - E[j])) / (4 * h * h)
    return H


def test_nabla_examples():
    n = 1
    x0 = ScalarField.coordinate(n, 0)
    assert nabla(x0, 0, 0) == ScalarField.constant(n, 1.0)
    expect = ScalarField.coordinate(n, 0, 2.0) + ScalarField.coordinate(n, 1, 2j)
    assert nabla(ScalarField.norm2(n), 0, 0) == expect
    with pytest.raises(IndexOutOfRange):
        nabla(x0, 2, 0)


def test_nabla_of_radial_power_matches_finite_differences(rng):
    n = 2
    r, eps = -1.5, 0.3
    f = ScalarField.radial(n, r, eps)
    ev = lambda x: complex(f.evaluate(x))
    for _ in range(5):
        x = rng.standard_normal(4 * n) * 0.7
        g = fd_gradient(ev, x)
        for A in range(2 * n):
            for alpha in (0, 1):
                # rebuild nabla from the real gradient using the operator table
                l = A % n
                p = g[4 * l : 4 * l + 4]
                if A < n:
                    ref = p[0] + 1j * p[1] if alpha == 0 else -p[2] - 1j * p[3]
                else:
                    ref = p[2] - 1j * p[3] if alpha == 0 else p[0] - 1j * p[1]
                val = complex(nabla(f, A, alpha).evaluate(x))
                assert val == pytest.approx(ref, rel=1e-6, abs=1e-9)
                # chain rule form r (t+eps)^(r-1) nabla t
                chain = r * (x @ x + eps) ** (r - 1) * complex(nabla(ScalarField.norm2(n), A, alpha).evaluate(x))
                assert val == pytest.approx(chain, rel=1e-12)


def test_d_squares_vanish(rng):
    for n in (1, 2, 3):
        for k in (0, 1, 2):
            F = random_form(n, k, rng)
            assert d0(d0(F)).is_zero()
            assert d1(d1(F)).is_zero()
            assert (d0(d1(F)) + d1(d0(F))).is_zero()


def test_leibniz(rng):
    n = 2
    F, G = random_form(n, 1, rng), random_form(n, 1, rng)
    for alpha in (0, 1):
        lhs = F.wedge(G).d(alpha)
        rhs = F.d(alpha).wedge(G) - F.wedge(G.d(alpha))
        assert (lhs - rhs).is_zero()


def test_baston_examples():
    for n in (1, 2, 3):
        assert baston(ScalarField.norm2(n)) == FormField.from_multivector(beta(n) * 8.0)
        assert baston(ScalarField.constant(n, 4.0)).is_zero()


def test_baston_matches_finite_difference_hessian_assembly(rng):
    # independent left-multiplication assembly from a numerical real Hessian
    units = np.eye(4)
    conj = np.diag([1.0, -1.0, -1.0, -1.0])
    table = np.array([[qmul(units[a], conj[b]) for b in range(4)] for a in range(4)])
    n = 2
    u = ScalarField.monomial(n, [2] + [0] * 7) + ScalarField.monomial(n, [1, 0, 0, 0, 0, 1, 1, 0], 0.5)
    ev = lambda x: float(u.evaluate(x))
    for _ in range(3):
        x = rng.standard_normal(4 * n)
        blocks = fd_hessian(ev, x).reshape(n, 4, n, 4)
        Q = np.einsum("lakb,abc->lkc", blocks, table)
        M = QuatMatrix(Q).symmetrized()
        expect = matrix_to_two_form(M.scale(0.5))
        assert baston(u).at(x).allclose(expect, 1e-6)


def test_baston_is_real_pointwise(rng):
    from qhess.exterior import is_real

    u = random_int_polynomial(2, rng, degree=4, terms=8)
    for _ in range(5):
        assert is_real(baston(u).at(rng.standard_normal(8)))


def test_hat_components_roundtrip(rng):
    n = 2
    comps = [random_int_polynomial(n, rng) for _ in range(2 * n)]
    T = form_from_hat_components(comps)
    assert all(a == b for a, b in zip(hat_components(T), comps))
    for A in range(2 * n):
        wA = FormField.from_multivector(__import__("qhess").exterior.Multivector.generator(n, A))
        single = form_from_hat_components([ScalarField.constant(n, float(B == A)) for B in range(2 * n)])
        assert wA.wedge(single) == FormField.from_multivector(omega_top(n))


def test_evaluation_and_singularity(rng):
    n = 1
    f = ScalarField.monomial(n, [1, 2, 0, 1], 3.0) + ScalarField.radial(n, -1.0, 0.0, 2.0)
    x = rng.standard_normal(4)
    assert f.evaluate(x) == pytest.approx(3 * x[0] * x[1] ** 2 * x[3] + 2 / (x @ x))
    with pytest.raises(SingularEvaluation):
        f.evaluate(np.zeros(4))


def test_scalar_field_json(rng):
    u = random_int_polynomial(2, rng) + ScalarField.fundamental(2, 1, 0.5)
    assert ScalarField.loads(json.dumps(u.to_json_obj())) == u
    with pytest.raises(DomainError):
        random_int_polynomial(2, rng, real=False, terms=20).to_json_obj()


def test_beta_form_power():
    n = 3
    assert beta_form(n).power(n).top_coefficient() == ScalarField.constant(n, float(math.factorial(n)))
