"""Moore and mixed determinants, the m-Hessian energies H_m and the Garding cone."""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

import numpy as np

from .eigen import Spectrum, eigenvalues
from .errors import ConeViolation, DimensionMismatch, DomainError, NonRealResult
from .quat import QuatMatrix, qmul

MOORE_MAX_N = 6
NONREAL_TOL = 1e-10
GAMMA_TOL = 1e-10


@lru_cache(maxsize=None)
def _moore_terms(n: int) -> tuple[tuple[int, tuple[tuple[int, int], ...]], ...]:
    """(sign, ordered index pairs) for every permutation of range(n).

    Cycles start at their smallest element and are listed with descending
    leaders, so each term is a fixed ordered product of matrix entries.
    """
    terms = []
    for perm in itertools.permutations(range(n)):
        seen = [False] * n
        cycles = []
        for start in range(n):
            if seen[start]:
                continue
            cyc = []
            i = start
            while not seen[i]:
                seen[i] = True
                cyc.append(i)
                i = perm[i]
            cycles.append(cyc)
        # start scans ascending, so each cycle is already led by its minimum
        cycles.sort(key=lambda c: -c[0])
        sign = (-1) ** sum(len(c) - 1 for c in cycles)
        pairs = []
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                pairs.append((a, b))
        terms.append((sign, tuple(pairs)))
    return tuple(terms)


def moore_det_quaternion(M: QuatMatrix) -> tuple[float, float, float, float]:
    """Full quaternion value of the cycle-ordered permutation sum."""
    n = M.n
    if n > MOORE_MAX_N:
        raise DomainError(f"Moore determinant enumeration limited to n <= {MOORE_MAX_N}, got {n}")
    entries = [[tuple(M.data[i, j]) for j in range(n)] for i in range(n)]
    acc = [0.0, 0.0, 0.0, 0.0]
    for sign, pairs in _moore_terms(n):
        prod = (1.0, 0.0, 0.0, 0.0)
        for a, b in pairs:
            prod = qmul(prod, entries[a][b])
        for c in range(4):
            acc[c] += sign * prod[c]
    return tuple(acc)  # type: ignore[return-value]


def moore_det(M: QuatMatrix, tol: float = NONREAL_TOL) -> float:
    """Moore determinant of a hyperhermitian matrix (a real number)."""
    M.require_hyperhermitian()
    w, x, y, z = moore_det_quaternion(M)
    scale = max(1.0, M.max_abs()) ** M.n
    residue = max(abs(x), abs(y), abs(z))
    if residue > tol * scale:
        raise NonRealResult(f"Moore determinant has quaternionic residue {residue:.3e}")
    return w


def _check_same_n(mats: Sequence[QuatMatrix]) -> int:
    if not mats:
        raise DimensionMismatch("need at least one matrix")
    n = mats[0].n
    for A in mats:
        if A.n != n:
            raise DimensionMismatch(f"mixed dimensions {A.n} and {n}")
    return n


def mixed_det(mats: Sequence[QuatMatrix]) -> float:
    """Mixed determinant det(M_1, ..., M_n) of n hyperhermitian matrices.

    Polarization by inclusion-exclusion: the coefficient of s_1...s_n in
    det(sum s_i M_i) is sum over nonempty S of (-1)^(n-|S|) det(sum_{i in S} M_i).
    """
    n = _check_same_n(mats)
    if len(mats) != n:
        raise DimensionMismatch(f"mixed determinant of {n}x{n} matrices needs {n} arguments, got {len(mats)}")
    for A in mats:
        A.require_hyperhermitian()
    datas = [A.data for A in mats]
    total = 0.0
    for size in range(1, n + 1):
        sign = (-1) ** (n - size)
        for subset in itertools.combinations(range(n), size):
            S = QuatMatrix(sum(datas[i] for i in subset))
            total += sign * moore_det(S)
    return total / math.factorial(n)


def elementary_symmetric(values: Sequence[float]) -> np.ndarray:
    """All elementary symmetric polynomials e_0..e_n of ``values``.

    Expands prod (s + v) one factor at a time, so e_k are exactly the
    coefficients of s^(n-k).
    """
    e = np.zeros(len(values) + 1)
    e[0] = 1.0
    for j, v in enumerate(values, start=1):
        e[1 : j + 1] = e[1 : j + 1] + v * e[0:j]
    return e


def hessian_energy(A: QuatMatrix | Spectrum, m: int) -> float:
    """H_m(A): the m-th elementary symmetric function of the eigenvalues."""
    spec = A if isinstance(A, Spectrum) else eigenvalues(A)
    n = len(spec)
    if not 1 <= m <= n:
        raise DomainError(f"m must satisfy 1 <= m <= n={n}, got {m}")
    return float(elementary_symmetric(spec.eigenvalues)[m])


def hessian_energies(A: QuatMatrix | Spectrum) -> np.ndarray:
    """Vector (H_0, H_1, ..., H_n) with H_0 = 1."""
    spec = A if isinstance(A, Spectrum) else eigenvalues(A)
    return elementary_symmetric(spec.eigenvalues)


def gamma_margin(A: QuatMatrix | Spectrum, m: int) -> float:
    """min_{1<=k<=m} H_k(A); positive inside the cone."""
    e = hessian_energies(A)
    n = len(e) - 1
    if not 1 <= m <= n:
        raise DomainError(f"m must satisfy 1 <= m <= n={n}, got {m}")
    return float(np.min(e[1 : m + 1]))


def in_gamma_m(A: QuatMatrix | Spectrum, m: int, strict: bool = True, tol: float = GAMMA_TOL) -> bool:
    """Membership in the Garding cone (strict) or its closure."""
    margin = gamma_margin(A, m)
    return margin > tol if strict else margin >= -tol


@dataclass
class GardingCertificate:
    lhs: float
    rhs: float
    member_flags: list[bool]
    n: int
    m: int
    tol: float = 1e-9
    h_values: list[float] = field(default_factory=list)

    @property
    def gap(self) -> float:
        return self.lhs - self.rhs

    @property
    def holds(self) -> bool:
        return (not all(self.member_flags)) or self.gap >= -self.tol


def garding_check(mats: Sequence[QuatMatrix], n: int | None = None, tol: float = 1e-9) -> GardingCertificate:
    """binom(n,m) det(A_1..A_m, I..I) against prod H_m(A_i)^(1/m).

    Every argument must lie in the closure of the m-th Garding cone, where
    m = len(mats).
    """
    m = len(mats)
    n = _check_same_n(mats) if n is None else n
    if _check_same_n(mats) != n:
        raise DimensionMismatch(f"matrices are {mats[0].n}x{mats[0].n}, expected n={n}")
    if not 1 <= m <= n:
        raise DomainError(f"need 1 <= m <= n, got m={m}, n={n}")
    specs = [eigenvalues(A) for A in mats]
    flags = [in_gamma_m(s, m, strict=False) for s in specs]
    if not all(flags):
        bad = [i for i, f in enumerate(flags) if not f]
        raise ConeViolation(f"arguments {bad} are outside the closed cone Gamma_{m}")
    h = [max(hessian_energy(s, m), 0.0) for s in specs]
    args = list(mats) + [QuatMatrix.identity(n)] * (n - m)
    lhs = math.comb(n, m) * mixed_det(args)
    rhs = math.prod(v ** (1.0 / m) for v in h)
    return GardingCertificate(lhs=lhs, rhs=rhs, member_flags=flags, n=n, m=m, tol=tol, h_values=h)
