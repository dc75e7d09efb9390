"""Cyclic Jacobi eigensolver and quaternionic spectra.

The spectrum of a hyperhermitian matrix is read from its complex embedding,
where every eigenvalue appears twice.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NoConvergence, PairingFailure
from .quat import QuatMatrix, tau

JACOBI_TOL = 1e-12
JACOBI_MAX_SWEEPS = 100
PAIRING_TOL = 1e-8


def jacobi_eigvalsh(H: np.ndarray, tol: float = JACOBI_TOL, max_sweeps: int = JACOBI_MAX_SWEEPS) -> np.ndarray:
    """Eigenvalues of a complex Hermitian matrix by cyclic Jacobi rotations.

    Each rotation first removes the phase of the pivot ``H[p, q]`` and then
    applies a real Givens rotation.  Convergence is declared when the
    off-diagonal Frobenius norm drops below ``tol * max(1, ||H||_F)``.
    Returns the eigenvalues in ascending order.
    """
    A = np.array(H, dtype=complex)
    n = A.shape[0]
    if n == 1:
        return np.array([A[0, 0].real])
    A = 0.5 * (A + A.conj().T)
    threshold = tol * max(1.0, float(np.linalg.norm(A)))
    offdiag = ~np.eye(n, dtype=bool)
    for _ in range(max_sweeps):
        # direct sum; ||A||^2 - ||diag||^2 cancels down to a sqrt(eps) floor
        off = math.sqrt(float(np.sum(np.abs(A[offdiag]) ** 2)))
        if off <= threshold:
            return np.sort(np.diag(A).real)
        for p in range(n - 1):
            for q in range(p + 1, n):
                beta = A[p, q]
                mag = abs(beta)
                if mag == 0.0:
                    continue
                phase = beta / mag
                alpha, gamma = A[p, p].real, A[q, q].real
                theta = 0.5 * math.atan2(2.0 * mag, gamma - alpha)
                c, s = math.cos(theta), math.sin(theta)
                # V = diag(1, conj(phase)) @ [[c, s], [-s, c]]
                V = np.array([[c, s], [-s * phase.conjugate(), c * phase.conjugate()]])
                A[:, [p, q]] = A[:, [p, q]] @ V
                A[[p, q], :] = V.conj().T @ A[[p, q], :]
                A[p, q] = A[q, p] = 0.0
                A[p, p] = A[p, p].real
                A[q, q] = A[q, q].real
    raise NoConvergence(f"Jacobi did not converge in {max_sweeps} sweeps")


@dataclass(frozen=True)
class Spectrum:
    """Ascending real eigenvalues of a hyperhermitian matrix (one per pair)."""

    eigenvalues: tuple[float, ...]

    def __len__(self) -> int:
        return len(self.eigenvalues)

    def __iter__(self):
        return iter(self.eigenvalues)

    def as_array(self) -> np.ndarray:
        return np.array(self.eigenvalues)

    @property
    def spectral_radius(self) -> float:
        return max((abs(v) for v in self.eigenvalues), default=0.0)


def eigenvalues(M: QuatMatrix) -> Spectrum:
    """Spectrum of a hyperhermitian matrix via Jacobi on its embedding."""
    M.require_hyperhermitian()
    ev = jacobi_eigvalsh(tau(M))
    first, second = ev[0::2], ev[1::2]
    radius = float(np.max(np.abs(ev), initial=0.0))
    gap = float(np.max(np.abs(first - second), initial=0.0))
    if gap > PAIRING_TOL * (1.0 + radius):
        raise PairingFailure(f"embedded eigenvalues do not pair: max gap {gap:.3e}")
    return Spectrum(tuple(float(v) for v in 0.5 * (first + second)))
