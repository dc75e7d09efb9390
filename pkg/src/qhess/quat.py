"""Quaternion scalars, quaternionic matrices and the complex embedding tau.

A quaternion ``w + x i + y j + z k`` is stored as four real coefficients.
Matrices are stored as real arrays of shape ``(rows, cols, 4)`` so that the
heavy lifting (conjugate transpose, products, embedding) stays vectorised.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import DimensionMismatch, NotHyperhermitian

HYPERHERMITIAN_TOL = 1e-9


@dataclass(frozen=True)
class Quaternion:
    w: float = 0.0
    x: float = 0.0
    y: float = 0.0
    z: float = 0.0

    @classmethod
    def from_array(cls, a: Sequence[float]) -> "Quaternion":
        return cls(float(a[0]), float(a[1]), float(a[2]), float(a[3]))

    def as_array(self) -> np.ndarray:
        return np.array([self.w, self.x, self.y, self.z], dtype=float)

    def conjugate(self) -> "Quaternion":
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def norm2(self) -> float:
        return self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z

    def __abs__(self) -> float:
        return self.norm2() ** 0.5

    def __add__(self, other: "Quaternion | float") -> "Quaternion":
        o = _as_quaternion(other)
        return Quaternion(self.w + o.w, self.x + o.x, self.y + o.y, self.z + o.z)

    __radd__ = __add__

    def __neg__(self) -> "Quaternion":
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def __sub__(self, other: "Quaternion | float") -> "Quaternion":
        return self + (-_as_quaternion(other))

    def __rsub__(self, other: "Quaternion | float") -> "Quaternion":
        return _as_quaternion(other) - self

    def __mul__(self, other: "Quaternion | float") -> "Quaternion":
        o = _as_quaternion(other)
        return Quaternion(*qmul((self.w, self.x, self.y, self.z), (o.w, o.x, o.y, o.z)))

    def __rmul__(self, other: float) -> "Quaternion":
        return _as_quaternion(other) * self


def _as_quaternion(v: "Quaternion | float") -> Quaternion:
    if isinstance(v, Quaternion):
        return v
    return Quaternion(float(v))


ONE = Quaternion(1.0)
I = Quaternion(0.0, 1.0)
J = Quaternion(0.0, 0.0, 1.0)
K = Quaternion(0.0, 0.0, 0.0, 1.0)


def qmul(p, q):
    """Hamilton product of two 4-sequences (w, x, y, z); returns a tuple."""
    a1, b1, c1, d1 = p
    a2, b2, c2, d2 = q
    return (
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    )


def qmul_array(p: np.ndarray, q: np.ndarray) -> np.ndarray:
    """Hamilton product broadcast over leading axes of ``(..., 4)`` arrays."""
    a1, b1, c1, d1 = np.moveaxis(p, -1, 0)
    a2, b2, c2, d2 = np.moveaxis(q, -1, 0)
    return np.stack(
        [
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        ],
        axis=-1,
    )


_CONJ = np.array([1.0, -1.0, -1.0, -1.0])


class QuatMatrix:
    """A rows x cols quaternionic matrix (immutable by convention)."""

    __slots__ = ("data",)

    def __init__(self, data: np.ndarray | Iterable):
        arr = np.array(data, dtype=float)
        if arr.ndim != 3 or arr.shape[2] != 4:
            raise DimensionMismatch(f"expected an array of shape (r, c, 4), got {arr.shape}")
        arr.setflags(write=False)
        self.data = arr

    @property
    def shape(self) -> tuple[int, int]:
        return self.data.shape[0], self.data.shape[1]

    @property
    def n(self) -> int:
        r, c = self.shape
        if r != c:
            raise DimensionMismatch(f"matrix is {r}x{c}, not square")
        return r

    def __getitem__(self, ij: tuple[int, int]) -> Quaternion:
        return Quaternion.from_array(self.data[ij])

    def __repr__(self) -> str:
        return f"QuatMatrix(shape={self.shape})"

    # constructors -----------------------------------------------------
    @classmethod
    def identity(cls, n: int) -> "QuatMatrix":
        return cls.real_diagonal([1.0] * n)

    @classmethod
    def zeros(cls, n: int, cols: int | None = None) -> "QuatMatrix":
        return cls(np.zeros((n, n if cols is None else cols, 4)))

    @classmethod
    def real_diagonal(cls, values: Sequence[float]) -> "QuatMatrix":
        n = len(values)
        arr = np.zeros((n, n, 4))
        arr[np.arange(n), np.arange(n), 0] = values
        return cls(arr)

    @classmethod
    def from_quaternions(cls, rows: Sequence[Sequence[Quaternion | float]]) -> "QuatMatrix":
        arr = np.array([[_as_quaternion(q).as_array() for q in row] for row in rows])
        return cls(arr)

    # algebra ----------------------------------------------------------
    def conj_transpose(self) -> "QuatMatrix":
        return QuatMatrix(np.transpose(self.data, (1, 0, 2)) * _CONJ)

    def __add__(self, other: "QuatMatrix") -> "QuatMatrix":
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} + {other.shape}")
        return QuatMatrix(self.data + other.data)

    def __sub__(self, other: "QuatMatrix") -> "QuatMatrix":
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} - {other.shape}")
        return QuatMatrix(self.data - other.data)

    def scale(self, s: float) -> "QuatMatrix":
        """Multiply by a real scalar (central, so the side does not matter)."""
        return QuatMatrix(self.data * float(s))

    def __matmul__(self, other: "QuatMatrix") -> "QuatMatrix":
        r, k = self.shape
        k2, c = other.shape
        if k != k2:
            raise DimensionMismatch(f"{self.shape} @ {other.shape}")
        # out[i, j] = sum_l self[i, l] * other[l, j]
        prod = qmul_array(self.data[:, :, None, :], other.data[None, :, :, :])
        return QuatMatrix(prod.sum(axis=1))

    def hyperhermitian_residual(self) -> float:
        return float(np.max(np.abs(self.data - self.conj_transpose().data), initial=0.0))

    def is_hyperhermitian(self, tol: float = HYPERHERMITIAN_TOL) -> bool:
        r, c = self.shape
        return r == c and self.hyperhermitian_residual() <= tol * (1.0 + self.max_abs())

    def max_abs(self) -> float:
        return float(np.max(np.abs(self.data), initial=0.0))

    def require_hyperhermitian(self, tol: float = HYPERHERMITIAN_TOL) -> "QuatMatrix":
        if not self.is_hyperhermitian(tol):
            raise NotHyperhermitian(
                f"matrix {self.shape} is not hyperhermitian (residual {self.hyperhermitian_residual():.3e})"
            )
        return self

    def symmetrized(self) -> "QuatMatrix":
        """Hyperhermitian part (M + M*)/2."""
        return QuatMatrix(0.5 * (self.data + self.conj_transpose().data))

    # serialisation ----------------------------------------------------
    def to_json_obj(self) -> dict:
        return {"n": self.n, "entries": self.data.tolist()}

    @classmethod
    def from_json_obj(cls, obj: dict) -> "QuatMatrix":
        n = int(obj["n"])
        m = cls(obj["entries"])
        if m.shape != (n, n):
            raise DimensionMismatch(f"declared n={n} but entries have shape {m.shape}")
        return m

    @classmethod
    def loads(cls, text: str) -> "QuatMatrix":
        return cls.from_json_obj(json.loads(text))


def tau(M: QuatMatrix) -> np.ndarray:
    """Complex embedding: writing M = a + b j, returns [[a, -b], [conj b, conj a]]."""
    d = M.data
    a = d[..., 0] + 1j * d[..., 1]
    b = d[..., 2] + 1j * d[..., 3]
    return np.block([[a, -b], [b.conj(), a.conj()]])


def tau_inverse(T: np.ndarray) -> QuatMatrix:
    """Inverse of :func:`tau` on its image, read off from the top block row."""
    rows, cols = T.shape
    p, r = rows // 2, cols // 2
    a = T[:p, :r]
    b = -T[:p, r:]
    return QuatMatrix(np.stack([a.real, a.imag, b.real, b.imag], axis=-1))


def tau_structure_residual(T: np.ndarray) -> float:
    """How far a 2p x 2r complex matrix is from the image of :func:`tau`."""
    rows, cols = T.shape
    p, r = rows // 2, cols // 2
    a, mb = T[:p, :r], T[:p, r:]
    return float(
        max(
            np.max(np.abs(T[p:, :r] - (-mb).conj()), initial=0.0),
            np.max(np.abs(T[p:, r:] - a.conj()), initial=0.0),
        )
    )
