"""Exterior algebra over C^{2n} with bitmask monomials.

Bit ``A`` of a mask marks the presence of the generator omega^A; a monomial
is always stored in ascending generator order.  The reference top form is
Omega = omega^0 ^ omega^n ^ omega^1 ^ omega^{n+1} ^ ...
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterable, Mapping

import numpy as np

from .eigen import eigenvalues
from .errors import DimensionMismatch, NotReal, NotSkew, WrongDegree
from .quat import QuatMatrix, tau, tau_inverse, tau_structure_residual

PRUNE_TOL = 1e-14
REAL_TOL = 1e-10
POSITIVE_TOL = 1e-10


def popcount(x: int) -> int:
    return bin(x).count("1")


def merge_sign(a: int, b: int) -> int:
    """Sign of omega^a ^ omega^b relative to the sorted monomial of a|b (a & b == 0)."""
    swaps = 0
    bb = b
    while bb:
        low = bb & -bb
        # generators of ``a`` above this generator of ``b`` must cross it
        swaps += popcount(a & ~((low << 1) - 1))
        bb ^= low
    return -1 if swaps & 1 else 1


def mask_indices(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def permutation_sign(seq: list[int]) -> int:
    """Sign of the permutation sorting ``seq`` (distinct entries)."""
    inv = 0
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                inv += 1
    return -1 if inv & 1 else 1


@lru_cache(maxsize=None)
def omega_sign(n: int) -> int:
    """Omega_{2n} = omega_sign(n) * (omega^0 ^ omega^1 ^ ... ^ omega^{2n-1})."""
    order = []
    for l in range(n):
        order += [l, n + l]
    return permutation_sign(order)


def full_mask(n: int) -> int:
    return (1 << (2 * n)) - 1


class Multivector:
    """Sparse element of the exterior algebra of C^{2n}.

    ``terms`` maps masks to complex coefficients.  Elements produced by the
    algebra are homogeneous; the zero element has no degree.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[int, complex] | None = None):
        self.n = int(n)
        limit = 1 << (2 * self.n)
        clean: dict[int, complex] = {}
        for mask, c in (terms or {}).items():
            if not 0 <= mask < limit:
                raise DimensionMismatch(f"mask {mask} outside C^{2 * self.n}")
            c = complex(c)
            if abs(c) > PRUNE_TOL:
                clean[int(mask)] = c
        self.terms = clean

    # construction -----------------------------------------------------
    @classmethod
    def generator(cls, n: int, A: int, coef: complex = 1.0) -> "Multivector":
        return cls(n, {1 << A: coef})

    @classmethod
    def monomial(cls, n: int, indices: Iterable[int], coef: complex = 1.0) -> "Multivector":
        idx = list(indices)
        if len(set(idx)) != len(idx):
            return cls(n)
        mask = 0
        for A in idx:
            mask |= 1 << A
        return cls(n, {mask: coef * permutation_sign(idx)})

    @classmethod
    def scalar(cls, n: int, value: complex = 1.0) -> "Multivector":
        return cls(n, {0: value})

    # structure --------------------------------------------------------
    @property
    def degree(self) -> int | None:
        degs = {popcount(m) for m in self.terms}
        if not degs:
            return None
        if len(degs) > 1:
            raise WrongDegree(f"inhomogeneous multivector with degrees {sorted(degs)}")
        return degs.pop()

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, mask: int) -> complex:
        return self.terms.get(mask, 0.0)

    def _check(self, other: "Multivector") -> None:
        if self.n != other.n:
            raise DimensionMismatch(f"ambient C^{2 * self.n} vs C^{2 * other.n}")

    def __add__(self, other: "Multivector") -> "Multivector":
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0.0) + c
        return Multivector(self.n, out)

    def __neg__(self) -> "Multivector":
        return Multivector(self.n, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "Multivector") -> "Multivector":
        return self + (-other)

    def __mul__(self, s: complex) -> "Multivector":
        return Multivector(self.n, {m: c * s for m, c in self.terms.items()})

    __rmul__ = __mul__

    def wedge(self, other: "Multivector") -> "Multivector":
        return wedge(self, other)

    __xor__ = wedge

    def power(self, k: int) -> "Multivector":
        out = Multivector.scalar(self.n)
        for _ in range(k):
            out = wedge(out, self)
        return out

    def max_abs(self) -> float:
        return max((abs(c) for c in self.terms.values()), default=0.0)

    def allclose(self, other: "Multivector", tol: float = 1e-12) -> bool:
        return (self - other).max_abs() <= tol

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Multivector) and self.n == other.n and self.terms == other.terms

    def __repr__(self) -> str:
        inner = ", ".join(f"{mask_indices(m)}: {c:.6g}" for m, c in sorted(self.terms.items()))
        return f"Multivector(n={self.n}, {{{inner}}})"

    # serialisation ----------------------------------------------------
    def to_json_obj(self) -> dict:
        return {
            "n": self.n,
            "terms": [{"mask": m, "re": c.real, "im": c.imag} for m, c in sorted(self.terms.items())],
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> "Multivector":
        return cls(int(obj["n"]), {int(t["mask"]): complex(t["re"], t.get("im", 0.0)) for t in obj["terms"]})

    @classmethod
    def loads(cls, text: str) -> "Multivector":
        return cls.from_json_obj(json.loads(text))


def wedge(a: Multivector, b: Multivector) -> Multivector:
    a._check(b)
    out: dict[int, complex] = {}
    for ma, ca in a.terms.items():
        for mb, cb in b.terms.items():
            if ma & mb:
                continue
            m = ma | mb
            out[m] = out.get(m, 0.0) + merge_sign(ma, mb) * ca * cb
    return Multivector(a.n, out)


def wedge_all(items: Iterable[Multivector], n: int) -> Multivector:
    out = Multivector.scalar(n)
    for it in items:
        out = wedge(out, it)
    return out


def beta(n: int) -> Multivector:
    """Fundamental 2-form sum_l omega^l ^ omega^{n+l}."""
    return Multivector(n, {(1 << l) | (1 << (n + l)): 1.0 for l in range(n)})


def omega_top(n: int) -> Multivector:
    return Multivector(n, {full_mask(n): float(omega_sign(n))})


def top_coefficient(w: Multivector) -> complex:
    """Coefficient of Omega_{2n} in a top-degree element."""
    deg = w.degree
    if deg is not None and deg != 2 * w.n:
        raise WrongDegree(f"expected degree {2 * w.n}, got {deg}")
    return w.coefficient(full_mask(w.n)) * omega_sign(w.n)


@lru_cache(maxsize=None)
def _j_image(n: int, mask: int) -> tuple[int, int]:
    """J applied generator-wise to a sorted monomial: (image mask, sign)."""
    idx = mask_indices(mask)
    sign = 1
    image = []
    for A in idx:
        if A < n:
            image.append(A + n)
        else:
            image.append(A - n)
            sign = -sign
    sign *= permutation_sign(image)
    out = 0
    for A in image:
        out |= 1 << A
    return out, sign


def rho_j(a: Multivector) -> Multivector:
    """Antilinear quaternionic structure: z omega^A -> conj(z) J.omega^A, multiplicatively."""
    out = {}
    for m, c in a.terms.items():
        img, sign = _j_image(a.n, m)
        out[img] = out.get(img, 0.0) + sign * c.conjugate()
    return Multivector(a.n, out)


def reality_residual(a: Multivector) -> float:
    return (rho_j(a) - a).max_abs()


def is_real(a: Multivector, tol: float = REAL_TOL) -> bool:
    return reality_residual(a) <= tol * max(1.0, a.max_abs())


def J_matrix(n: int) -> np.ndarray:
    Z = np.zeros((n, n))
    Id = np.eye(n)
    return np.block([[Z, Id], [-Id, Z]])


def matrix_to_two_form(M: QuatMatrix) -> Multivector:
    """sum_{A,B} C_{AB} omega^A ^ omega^B with C = tau(M) J (all ordered pairs)."""
    n = M.n
    C = tau(M) @ J_matrix(n)
    out = {}
    for A in range(2 * n):
        for B in range(A + 1, 2 * n):
            out[(1 << A) | (1 << B)] = C[A, B] - C[B, A]
    return Multivector(n, out)


def two_form_matrix(w: Multivector) -> np.ndarray:
    """Skew coefficient matrix C with w = sum_{A,B} C_{AB} omega^A ^ omega^B."""
    n = w.n
    C = np.zeros((2 * n, 2 * n), dtype=complex)
    for m, c in w.terms.items():
        A, B = mask_indices(m)
        C[A, B] = 0.5 * c
        C[B, A] = -0.5 * c
    return C


def two_form_to_matrix(w: Multivector, tol: float = REAL_TOL) -> QuatMatrix:
    """The hyperhermitian matrix M with matrix_to_two_form(M) == w."""
    deg = w.degree
    if deg not in (None, 2):
        raise WrongDegree(f"expected a 2-form, got degree {deg}")
    scale = max(1.0, w.max_abs())
    if reality_residual(w) > tol * scale:
        raise NotReal(f"2-form is not real (residual {reality_residual(w):.3e})")
    n = w.n
    C = two_form_matrix(w)
    # C = tau(M) J and J^{-1} = -J
    T = -C @ J_matrix(n)
    if tau_structure_residual(T) > tol * scale:
        raise NotSkew(f"coefficient matrix is not of the form tau(M) J (residual {tau_structure_residual(T):.3e})")
    M = tau_inverse(T)
    if M.hyperhermitian_residual() > tol * scale:
        raise NotSkew("recovered matrix is not hyperhermitian")
    return M.symmetrized()


class PositivityStatus(str, Enum):
    POSITIVE_CERTIFIED = "PositiveCertified"
    NOT_POSITIVE = "NotPositive"
    UNDETERMINED = "Undetermined"


@dataclass
class PositivityVerdict:
    status: PositivityStatus
    witness: Multivector | None = None
    value: float | None = None
    samples: int = 0

    @property
    def not_positive(self) -> bool:
        return self.status is PositivityStatus.NOT_POSITIVE


def is_positive_2form(w: Multivector, tol: float = POSITIVE_TOL) -> PositivityVerdict:
    """Exact decision through the spectrum of the associated hyperhermitian matrix."""
    M = two_form_to_matrix(w)
    spec = eigenvalues(M)
    lowest = spec.eigenvalues[0]
    if lowest >= -tol * max(1.0, spec.spectral_radius):
        return PositivityVerdict(PositivityStatus.POSITIVE_CERTIFIED, value=lowest)
    eta = _complement_witness(M)
    return PositivityVerdict(PositivityStatus.NOT_POSITIVE, witness=eta, value=pairing(w, eta).real)


def _complement_witness(M: QuatMatrix) -> Multivector:
    """(n-1)-th power of the 2-form of I - v v*, v a unit eigenvector for the lowest eigenvalue.

    This is strongly positive, and its pairing with the 2-form of M is a
    positive multiple of the lowest eigenvalue.
    """
    n = M.n
    _, vecs = np.linalg.eigh(tau(M))
    x = vecs[:, 0]
    a, b = x[:n], x[n:].conj()
    v = QuatMatrix(np.stack([a.real, a.imag, b.real, b.imag], axis=-1)[:, None, :])
    P = QuatMatrix.identity(n) - v @ v.conj_transpose()
    return matrix_to_two_form(P.symmetrized()).power(n - 1)


def random_rank_one_form(n: int, rng: np.random.Generator) -> Multivector:
    """2-form of v v* for a random quaternionic column v (strongly positive)."""
    v = QuatMatrix(rng.normal(size=(n, 1, 4)))
    return matrix_to_two_form(v @ v.conj_transpose())


def random_elementary_positive(n: int, k: int, rng: np.random.Generator) -> Multivector:
    """Wedge of k random rank-one strongly positive 2-forms."""
    return wedge_all((random_rank_one_form(n, rng) for _ in range(k)), n)


def pairing(w: Multivector, eta: Multivector) -> complex:
    return top_coefficient(wedge(w, eta))


def is_positive_sampled(w: Multivector, samples: int = 1000, seed: int = 0, tol: float = POSITIVE_TOL) -> PositivityVerdict:
    """Semi-decision of positivity by pairing with random strongly positive elements."""
    n = w.n
    deg = w.degree
    if deg is None:
        return PositivityVerdict(PositivityStatus.POSITIVE_CERTIFIED, value=0.0)
    if deg % 2:
        raise WrongDegree(f"positivity needs even degree, got {deg}")
    k = deg // 2
    if not 1 <= k <= n:
        raise WrongDegree(f"degree {deg} outside 2..{2 * n}")
    scale = max(1.0, w.max_abs())
    if k == n:
        value = top_coefficient(w).real
        if value >= -tol * scale:
            return PositivityVerdict(PositivityStatus.POSITIVE_CERTIFIED, value=value)
        return PositivityVerdict(PositivityStatus.NOT_POSITIVE, witness=Multivector.scalar(n), value=value)
    rng = np.random.default_rng(seed)
    worst = math.inf
    for _ in range(samples):
        eta = random_elementary_positive(n, n - k, rng)
        value = pairing(w, eta).real
        worst = min(worst, value)
        if value < -tol * scale * max(1.0, eta.max_abs()):
            return PositivityVerdict(PositivityStatus.NOT_POSITIVE, witness=eta, value=value, samples=samples)
    return PositivityVerdict(PositivityStatus.UNDETERMINED, value=worst, samples=samples)
