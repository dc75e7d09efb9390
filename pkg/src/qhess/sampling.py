"""Random inputs for property checks: matrices, cone samples, polynomial fields."""
from __future__ import annotations

import numpy as np

from .eigen import eigenvalues
from .fields import FormField, ScalarField, form_from_hat_components
from .hessian import cf_hessian
from .hyperbolic import hessian_energies, in_gamma_m
from .quat import QuatMatrix


def random_quat_matrix(n: int, rng: np.random.Generator, cols: int | None = None) -> QuatMatrix:
    return QuatMatrix(rng.standard_normal((n, n if cols is None else cols, 4)))


def random_hyperhermitian(n: int, rng: np.random.Generator, scale: float = 1.0) -> QuatMatrix:
    B = random_quat_matrix(n, rng)
    return (B + B.conj_transpose()).scale(0.5 * scale)


def random_psd(n: int, rng: np.random.Generator, rank: int | None = None) -> QuatMatrix:
    B = random_quat_matrix(rank or n, rng, cols=n)
    return B.conj_transpose() @ B


def shifted(A: QuatMatrix, s: float) -> QuatMatrix:
    return A + QuatMatrix.identity(A.n).scale(s)


def random_gamma_member(n: int, m: int, rng: np.random.Generator, max_tries: int = 1000) -> QuatMatrix:
    """Rejection sample A + sI in the open cone, s drawn around the cone boundary."""
    for _ in range(max_tries):
        A = random_hyperhermitian(n, rng)
        lam = eigenvalues(A).as_array()
        s = rng.uniform(-lam[0] - 1.0, -lam[0] + 1.0)
        B = shifted(A, s)
        if in_gamma_m(B, m, strict=True):
            return B
    raise RuntimeError("rejection sampling of the cone did not succeed")


def random_gamma_probe(n: int, rng: np.random.Generator) -> QuatMatrix:
    """Hyperhermitian matrices spread on both sides of the cone boundaries."""
    A = random_hyperhermitian(n, rng)
    lam = eigenvalues(A).as_array()
    return shifted(A, rng.uniform(-lam[-1], -lam[0] + 1.0))


def random_int_polynomial(
    n: int, rng: np.random.Generator, degree: int = 3, terms: int = 5, coef: int = 3, real: bool = True
) -> ScalarField:
    """Integer coefficients keep every symbolic identity exact in floating point."""
    d = 4 * n
    f = ScalarField.zero(n)
    for _ in range(terms):
        expo = [0] * d
        for _ in range(int(rng.integers(0, degree + 1))):
            expo[int(rng.integers(d))] += 1
        c = complex(int(rng.integers(-coef, coef + 1)))
        if not real:
            c += 1j * int(rng.integers(-coef, coef + 1))
        f = f + ScalarField.monomial(n, expo, c)
    return f


def random_form(n: int, k: int, rng: np.random.Generator, terms: int = 3, **kw) -> FormField:
    """Random polynomial FormField of form degree ``k``."""
    if k == 0:
        return FormField.scalar(random_int_polynomial(n, rng, **kw))
    out: dict[int, ScalarField] = {}
    for _ in range(terms):
        idx = rng.choice(2 * n, size=k, replace=False)
        mask = int(sum(1 << int(i) for i in idx))
        out[mask] = out.get(mask, ScalarField.zero(n)) + random_int_polynomial(n, rng, real=False, **kw)
    return FormField(n, out)


def random_top_minus_one(n: int, rng: np.random.Generator, **kw) -> FormField:
    return form_from_hat_components([random_int_polynomial(n, rng, **kw) for _ in range(2 * n)])


def random_real_polynomial(n: int, rng: np.random.Generator, degree: int = 3, terms: int = 6) -> ScalarField:
    d = 4 * n
    f = ScalarField.zero(n)
    for _ in range(terms):
        expo = [0] * d
        for _ in range(int(rng.integers(1, degree + 1))):
            expo[int(rng.integers(d))] += 1
        f = f + ScalarField.monomial(n, expo, float(rng.standard_normal()))
    return f


def quadratic_hessian(u: ScalarField) -> QuatMatrix:
    return cf_hessian(u, np.zeros(u.dim)).matrix


def random_msh_quadratic(
    n: int, m: int, rng: np.random.Generator, margin: float = 0.05, linear: bool = True, max_tries: int = 1000
) -> ScalarField:
    """x^T S x + b.x with constant quaternionic Hessian in the open cone.

    A random symmetric S is shifted by a multiple of the identity drawn
    around the smallest shift that enters the cone, then rejection tested.
    """
    d = 4 * n
    unit = float(eigenvalues(quadratic_hessian(ScalarField.norm2(n))).as_array()[0])
    for _ in range(max_tries):
        G = rng.standard_normal((d, d))
        S = 0.25 * (G + G.T)
        base = quadratic_hessian(ScalarField.quadratic(S))
        lam = eigenvalues(base).as_array()
        s = rng.uniform(-lam[0] - 0.5 * (lam[-1] - lam[0]), -lam[0] + 1.0) / unit
        S2 = S + s * np.eye(d)
        b = rng.standard_normal(d) * 0.3 if linear else None
        u = ScalarField.quadratic(S2, b)
        H = hessian_energies(eigenvalues(quadratic_hessian(u)))
        if np.all(H[1 : m + 1] > margin):
            return u
    raise RuntimeError("rejection sampling of m-sh quadratics did not succeed")


__all__ = [
    "quadratic_hessian",
    "random_form",
    "random_gamma_member",
    "random_gamma_probe",
    "random_hyperhermitian",
    "random_int_polynomial",
    "random_msh_quadratic",
    "random_psd",
    "random_quat_matrix",
    "random_real_polynomial",
    "random_top_minus_one",
    "shifted",
]
