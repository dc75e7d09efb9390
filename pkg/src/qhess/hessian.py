"""Quaternionic Hessian, m-Hessian forms and pointwise m-subharmonicity."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .eigen import eigenvalues
from .errors import DimensionMismatch, DomainError, NotHyperhermitian
from .exterior import Multivector
from .fields import FormField, ScalarField, baston, beta_form, wedge_forms
from .hyperbolic import GAMMA_TOL, hessian_energies
from .quat import QuatMatrix, qmul

HESSIAN_HH_TOL = 1e-9

_UNITS = [(1.0, 0.0, 0.0, 0.0), (0.0, 1.0, 0.0, 0.0), (0.0, 0.0, 1.0, 0.0), (0.0, 0.0, 0.0, 1.0)]
_CONJ_UNITS = [(1.0, 0.0, 0.0, 0.0), (0.0, -1.0, 0.0, 0.0), (0.0, 0.0, -1.0, 0.0), (0.0, 0.0, 0.0, -1.0)]
# entry (l, k) = sum_{a,b} e_a conj(e_b) d^2 u / dx_{4l+a} dx_{4k+b}
UNIT_TABLE = np.array([[qmul(_UNITS[a], _CONJ_UNITS[b]) for b in range(4)] for a in range(4)])


@dataclass(frozen=True)
class QuaternionicHessian:
    at: tuple[float, ...]
    matrix: QuatMatrix


def real_hessian(u: ScalarField, points: np.ndarray) -> np.ndarray:
    """Second partials of ``u`` at points of shape (N, 4n) -> (N, 4n, 4n)."""
    X = np.atleast_2d(np.asarray(points, dtype=float))
    d = u.dim
    H = np.zeros((X.shape[0], d, d))
    for i in range(d):
        ui = u.partial(i)
        for j in range(i, d):
            v = np.real(ui.partial(j).evaluate(X))
            H[:, i, j] = v
            H[:, j, i] = v
    return H


def quaternionic_hessians(u: ScalarField, points: np.ndarray) -> np.ndarray:
    """Cauchy-Fueter Hessians as an (N, n, n, 4) array.

    Entry (l, k) applies d/dq_k to u, then d/dq_bar_l, with the quaternion
    units multiplying from the left in both steps.
    """
    if not u.is_real():
        raise DomainError("the quaternionic Hessian is defined for real fields")
    n = u.n
    H = real_hessian(u, points)
    N = H.shape[0]
    blocks = H.reshape(N, n, 4, n, 4)
    return np.einsum("nlakb,abc->nlkc", blocks, UNIT_TABLE)


def cf_hessian(u: ScalarField, q: Sequence[float]) -> QuaternionicHessian:
    """Quaternionic Hessian (d^2 u / dq_bar_l dq_k) at one point."""
    q = np.asarray(q, dtype=float)
    if q.shape != (u.dim,):
        raise DimensionMismatch(f"point of shape {q.shape} for a field on R^{u.dim}")
    M = QuatMatrix(quaternionic_hessians(u, q[None, :])[0])
    if not M.is_hyperhermitian(HESSIAN_HH_TOL):
        raise NotHyperhermitian("quaternionic Hessian is not hyperhermitian")
    return QuaternionicHessian(tuple(float(v) for v in q), M.symmetrized())


def hessian_form(u: ScalarField, m: int) -> FormField:
    """(Delta u)^m ^ beta^(n-m), a top-degree form."""
    n = u.n
    if not 1 <= m <= n:
        raise DomainError(f"need 1 <= m <= n={n}, got {m}")
    du = baston(u)
    return du.power(m).wedge(beta_form(n).power(n - m))


def mixed_baston(us: Sequence[ScalarField], pad: int = 0) -> FormField:
    """Delta u_1 ^ ... ^ Delta u_k ^ beta^pad."""
    if not us:
        raise DomainError("need at least one field")
    n = us[0].n
    if len(us) + pad > n:
        raise DomainError(f"k + pad = {len(us) + pad} exceeds n = {n}")
    return wedge_forms([baston(u) for u in us], n).wedge(beta_form(n).power(pad))


def msh_margins(u: ScalarField, m: int, points: np.ndarray) -> np.ndarray:
    """Per point: min over k <= m of H_k of the quaternionic Hessian."""
    n = u.n
    if not 1 <= m <= n:
        raise DomainError(f"need 1 <= m <= n={n}, got {m}")
    Hs = quaternionic_hessians(u, np.atleast_2d(points))
    out = np.empty(Hs.shape[0])
    for idx, data in enumerate(Hs):
        M = QuatMatrix(data).symmetrized()
        e = hessian_energies(eigenvalues(M))
        out[idx] = float(np.min(e[1 : m + 1]))
    return out


@dataclass
class MshVerdict:
    is_msh: bool
    worst_margin: float
    worst_point: tuple[float, ...] | None
    points: int


def is_msh_pointwise(u: ScalarField, m: int, points: np.ndarray, tol: float = GAMMA_TOL) -> MshVerdict:
    """Quaternionic Hessian in the closed Garding cone at every sample point."""
    P = np.atleast_2d(np.asarray(points, dtype=float))
    margins = msh_margins(u, m, P)
    i = int(np.argmin(margins))
    worst = float(margins[i])
    return MshVerdict(worst >= -tol, worst, tuple(float(v) for v in P[i]), len(P))


def hessian_top_density(u: ScalarField, m: int) -> ScalarField:
    """Omega-coefficient field of (Delta u)^m ^ beta^(n-m)."""
    return hessian_form(u, m).top_coefficient()


def form_at(F: FormField, q: Sequence[float]) -> Multivector:
    return F.at(q)
