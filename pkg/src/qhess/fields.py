"""Exactly differentiable fields on R^{4n} and form-valued fields.

A :class:`ScalarField` is a finite sum of terms

    coef * x^expo * (t + eps)^rpow,      t = sum_i x_i^2,

with complex ``coef``.  The class is closed under partial differentiation,
so d_0, d_1 and the Baston operator act symbolically and the algebraic
identities between them hold at the coefficient level.

The quaternionic coordinates are q_l = x_{4l} + x_{4l+1} i + x_{4l+2} j + x_{4l+3} k.
"""
from __future__ import annotations

import json
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import DimensionMismatch, DomainError, IndexOutOfRange, SingularEvaluation, WrongDegree
from .exterior import Multivector, beta, full_mask, merge_sign, omega_sign, popcount

PRUNE_TOL = 1e-14

Key = tuple  # (expo: tuple[int, ...], rpow: float, eps: float)


def _key(expo: tuple[int, ...], rpow: float, eps: float) -> Key:
    rpow = float(rpow)
    return (expo, rpow, float(eps) if rpow != 0.0 else 0.0)


class ScalarField:
    """Complex-coefficient polynomial-times-radial-power field on R^{4n}."""

    __slots__ = ("n", "terms", "_partials")

    def __init__(self, n: int, terms: Mapping[Key, complex] | None = None):
        self.n = int(n)
        d = 4 * self.n
        clean: dict[Key, complex] = {}
        for (expo, rpow, eps), c in (terms or {}).items():
            if len(expo) != d:
                raise DimensionMismatch(f"exponent vector of length {len(expo)} on R^{d}")
            if abs(c) > PRUNE_TOL:
                k = _key(tuple(int(e) for e in expo), rpow, eps)
                clean[k] = clean.get(k, 0.0) + c
        self.terms = {k: c for k, c in clean.items() if abs(c) > PRUNE_TOL}
        self._partials: dict[int, ScalarField] = {}

    # constructors -----------------------------------------------------
    @property
    def dim(self) -> int:
        return 4 * self.n

    @classmethod
    def zero(cls, n: int) -> "ScalarField":
        return cls(n)

    @classmethod
    def constant(cls, n: int, c: complex) -> "ScalarField":
        return cls(n, {((0,) * (4 * n), 0.0, 0.0): c})

    @classmethod
    def coordinate(cls, n: int, i: int, c: complex = 1.0) -> "ScalarField":
        if not 0 <= i < 4 * n:
            raise IndexOutOfRange(f"coordinate x_{i} on R^{4 * n}")
        expo = [0] * (4 * n)
        expo[i] = 1
        return cls(n, {(tuple(expo), 0.0, 0.0): c})

    @classmethod
    def monomial(cls, n: int, expo: Sequence[int], c: complex = 1.0) -> "ScalarField":
        return cls(n, {(tuple(expo), 0.0, 0.0): c})

    @classmethod
    def norm2(cls, n: int, center: Sequence[float] | None = None) -> "ScalarField":
        """|q - center|^2 as a polynomial."""
        d = 4 * n
        out = cls(n)
        for i in range(d):
            xi = cls.coordinate(n, i)
            if center is not None and center[i] != 0.0:
                xi = xi - float(center[i])
            out = out + xi * xi
        return out

    @classmethod
    def radial(cls, n: int, rpow: float, eps: float = 0.0, coef: complex = 1.0) -> "ScalarField":
        """coef * (|q|^2 + eps)^rpow."""
        return cls(n, {((0,) * (4 * n), rpow, eps): coef})

    @classmethod
    def fundamental(cls, n: int, m: int, eps: float = 0.0) -> "ScalarField":
        """-(|q|^2 + eps)^(-kappa) with kappa = 2n/m - 1."""
        kappa = 2.0 * n / m - 1.0
        return cls.radial(n, -kappa, eps, coef=-1.0)

    @classmethod
    def quadratic(cls, S: np.ndarray, b: np.ndarray | None = None, c: float = 0.0) -> "ScalarField":
        """x^T S x + b.x + c for a symmetric real S of size 4n."""
        d = S.shape[0]
        n = d // 4
        terms: dict[Key, complex] = {}
        for i in range(d):
            for j in range(d):
                expo = [0] * d
                expo[i] += 1
                expo[j] += 1
                k = (tuple(expo), 0.0, 0.0)
                terms[k] = terms.get(k, 0.0) + float(S[i, j])
        if b is not None:
            for i in range(d):
                expo = [0] * d
                expo[i] = 1
                terms[(tuple(expo), 0.0, 0.0)] = float(b[i])
        terms[((0,) * d, 0.0, 0.0)] = terms.get(((0,) * d, 0.0, 0.0), 0.0) + c
        return cls(n, terms)

    # structure --------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_real(self) -> bool:
        return all(complex(c).imag == 0.0 for c in self.terms.values())

    @property
    def real(self) -> "ScalarField":
        return ScalarField(self.n, {k: complex(c).real for k, c in self.terms.items()})

    @property
    def imag(self) -> "ScalarField":
        return ScalarField(self.n, {k: complex(c).imag for k, c in self.terms.items()})

    def max_abs_coef(self) -> float:
        return max((abs(c) for c in self.terms.values()), default=0.0)

    def is_polynomial(self) -> bool:
        return all(r == 0.0 for (_, r, _) in self.terms)

    def __repr__(self) -> str:
        return f"ScalarField(n={self.n}, terms={len(self.terms)})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ScalarField) and self.n == other.n and self.terms == other.terms

    __hash__ = None  # type: ignore[assignment]

    # arithmetic -------------------------------------------------------
    def _coerce(self, other) -> "ScalarField":
        if isinstance(other, ScalarField):
            if other.n != self.n:
                raise DimensionMismatch(f"fields on R^{self.dim} and R^{other.dim}")
            return other
        return ScalarField.constant(self.n, other)

    def __add__(self, other) -> "ScalarField":
        o = self._coerce(other)
        out = dict(self.terms)
        for k, c in o.terms.items():
            out[k] = out.get(k, 0.0) + c
        return ScalarField(self.n, out)

    __radd__ = __add__

    def __neg__(self) -> "ScalarField":
        return ScalarField(self.n, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other) -> "ScalarField":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "ScalarField":
        return self._coerce(other) - self

    def scale(self, s: complex) -> "ScalarField":
        return ScalarField(self.n, {k: c * s for k, c in self.terms.items()})

    def __mul__(self, other) -> "ScalarField":
        if not isinstance(other, ScalarField):
            return self.scale(other)
        o = self._coerce(other)
        out: dict[Key, complex] = {}
        for (e1, r1, eps1), c1 in self.terms.items():
            for (e2, r2, eps2), c2 in o.terms.items():
                if r1 == 0.0:
                    r, eps = r2, eps2
                elif r2 == 0.0:
                    r, eps = r1, eps1
                elif eps1 == eps2:
                    r, eps = r1 + r2, eps1
                else:
                    raise DimensionMismatch("cannot multiply radial powers with different eps shifts")
                k = _key(tuple(a + b for a, b in zip(e1, e2)), r, eps)
                out[k] = out.get(k, 0.0) + c1 * c2
        return ScalarField(self.n, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "ScalarField":
        out = ScalarField.constant(self.n, 1.0)
        for _ in range(int(k)):
            out = out * self
        return out

    # calculus ---------------------------------------------------------
    def partial(self, i: int) -> "ScalarField":
        """Exact partial derivative with respect to x_i."""
        if not 0 <= i < self.dim:
            raise IndexOutOfRange(f"d/dx_{i} on R^{self.dim}")
        cached = self._partials.get(i)
        if cached is not None:
            return cached
        out: dict[Key, complex] = {}
        for (expo, r, eps), c in self.terms.items():
            e = expo[i]
            if e:
                lowered = expo[:i] + (e - 1,) + expo[i + 1 :]
                k = _key(lowered, r, eps)
                out[k] = out.get(k, 0.0) + c * e
            if r != 0.0:
                raised = expo[:i] + (e + 1,) + expo[i + 1 :]
                k = _key(raised, r - 1.0, eps)
                out[k] = out.get(k, 0.0) + c * (2.0 * r)
        result = ScalarField(self.n, out)
        self._partials[i] = result
        return result

    def gradient(self) -> list["ScalarField"]:
        return [self.partial(i) for i in range(self.dim)]

    # evaluation -------------------------------------------------------
    def evaluate(self, points: np.ndarray) -> np.ndarray:
        """Values at an array of points of shape (N, 4n) (or a single point)."""
        X = np.asarray(points, dtype=float)
        single = X.ndim == 1
        if single:
            X = X[None, :]
        if X.shape[1] != self.dim:
            raise DimensionMismatch(f"points of dimension {X.shape[1]} for a field on R^{self.dim}")
        N = X.shape[0]
        complex_out = not self.is_real()
        out = np.zeros(N, dtype=complex if complex_out else float)
        if not self.terms:
            return out[0] if single else out
        t = np.einsum("ij,ij->i", X, X)
        max_e = np.zeros(self.dim, dtype=int)
        for expo, _, _ in self.terms:
            max_e = np.maximum(max_e, expo)
        powers: dict[tuple[int, int], np.ndarray] = {}
        for i in range(self.dim):
            p = np.ones(N)
            for e in range(1, int(max_e[i]) + 1):
                p = p * X[:, i]
                powers[(i, e)] = p
        radial_cache: dict[tuple[float, float], np.ndarray] = {}
        for (expo, r, eps), c in self.terms.items():
            val = np.full(N, 1.0)
            for i, e in enumerate(expo):
                if e:
                    val = val * powers[(i, e)]
            if r != 0.0:
                rad = radial_cache.get((r, eps))
                if rad is None:
                    base = t + eps
                    if r < 0.0 and np.any(base <= 0.0):
                        raise SingularEvaluation("radial power with negative exponent evaluated at its singular point")
                    rad = base**r
                    radial_cache[(r, eps)] = rad
                val = val * rad
            out = out + (c if complex_out else complex(c).real) * val
        return out[0] if single else out

    __call__ = evaluate

    # serialisation ----------------------------------------------------
    def to_json_obj(self) -> dict:
        if not self.is_real():
            raise DomainError("only real fields are serialisable")
        return {
            "n": self.n,
            "terms": [
                {"coef": complex(c).real, "expo": list(expo), "rpow": r, "eps": eps}
                for (expo, r, eps), c in sorted(self.terms.items())
            ],
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> "ScalarField":
        n = int(obj["n"])
        terms: dict[Key, complex] = {}
        for t in obj["terms"]:
            k = _key(tuple(int(e) for e in t["expo"]), float(t.get("rpow", 0.0)), float(t.get("eps", 0.0)))
            terms[k] = terms.get(k, 0.0) + float(t["coef"])
        return cls(n, terms)

    @classmethod
    def loads(cls, text: str) -> "ScalarField":
        return cls.from_json_obj(json.loads(text))


def nabla(f: ScalarField, A: int, alpha: int) -> ScalarField:
    """First-order operator nabla_{A alpha} applied to a (complex) field."""
    n = f.n
    if not 0 <= A < 2 * n or alpha not in (0, 1):
        raise IndexOutOfRange(f"nabla_({A},{alpha}) for n={n}")
    l = A % n
    x0, x1, x2, x3 = 4 * l, 4 * l + 1, 4 * l + 2, 4 * l + 3
    p = f.partial
    if A < n:
        if alpha == 0:
            return p(x0) + p(x1).scale(1j)
        return -p(x2) - p(x3).scale(1j)
    if alpha == 0:
        return p(x2) - p(x3).scale(1j)
    return p(x0) - p(x1).scale(1j)


class FormField:
    """Homogeneous form whose coefficients are ScalarFields."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[int, ScalarField] | None = None):
        self.n = int(n)
        clean = {}
        degs = set()
        for mask, f in (terms or {}).items():
            if f.n != self.n:
                raise DimensionMismatch("coefficient field lives on a different space")
            if not f.is_zero():
                clean[int(mask)] = f
                degs.add(popcount(mask))
        if len(degs) > 1:
            raise WrongDegree(f"inhomogeneous form with degrees {sorted(degs)}")
        self.terms = clean

    @classmethod
    def scalar(cls, f: ScalarField) -> "FormField":
        return cls(f.n, {0: f})

    @classmethod
    def from_multivector(cls, w: Multivector) -> "FormField":
        return cls(w.n, {m: ScalarField.constant(w.n, c) for m, c in w.terms.items()})

    @property
    def degree(self) -> int | None:
        if not self.terms:
            return None
        return popcount(next(iter(self.terms)))

    def is_zero(self) -> bool:
        return not self.terms

    def __repr__(self) -> str:
        return f"FormField(n={self.n}, degree={self.degree}, masks={len(self.terms)})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FormField) and self.n == other.n and self.terms == other.terms

    __hash__ = None  # type: ignore[assignment]

    def __add__(self, other: "FormField") -> "FormField":
        out = dict(self.terms)
        for m, f in other.terms.items():
            out[m] = out[m] + f if m in out else f
        return FormField(self.n, out)

    def __neg__(self) -> "FormField":
        return FormField(self.n, {m: -f for m, f in self.terms.items()})

    def __sub__(self, other: "FormField") -> "FormField":
        return self + (-other)

    def scale(self, s: complex) -> "FormField":
        return FormField(self.n, {m: f.scale(s) for m, f in self.terms.items()})

    def times(self, h: ScalarField) -> "FormField":
        """Multiply every coefficient by the scalar field ``h``."""
        return FormField(self.n, {m: f * h for m, f in self.terms.items()})

    def wedge(self, other: "FormField") -> "FormField":
        if self.n != other.n:
            raise DimensionMismatch("forms on different spaces")
        out: dict[int, ScalarField] = {}
        for ma, fa in self.terms.items():
            for mb, fb in other.terms.items():
                if ma & mb:
                    continue
                prod = fa * fb
                if merge_sign(ma, mb) < 0:
                    prod = -prod
                m = ma | mb
                out[m] = out[m] + prod if m in out else prod
        return FormField(self.n, out)

    __xor__ = wedge

    def power(self, k: int) -> "FormField":
        out = FormField.scalar(ScalarField.constant(self.n, 1.0))
        for _ in range(k):
            out = out.wedge(self)
        return out

    def d(self, alpha: int) -> "FormField":
        """d_alpha F = sum_I sum_A nabla_{A alpha} f_I omega^A ^ omega^I."""
        return d_alpha(self, alpha)

    def coefficient(self, mask: int) -> ScalarField:
        return self.terms.get(mask, ScalarField.zero(self.n))

    def top_coefficient(self) -> ScalarField:
        deg = self.degree
        if deg is not None and deg != 2 * self.n:
            raise WrongDegree(f"expected degree {2 * self.n}, got {deg}")
        f = self.coefficient(full_mask(self.n))
        return f if omega_sign(self.n) > 0 else -f

    def at(self, point: Sequence[float]) -> Multivector:
        """Pointwise value as a Multivector."""
        x = np.asarray(point, dtype=float)
        return Multivector(self.n, {m: complex(f.evaluate(x)) for m, f in self.terms.items()})

    def max_abs_coef(self) -> float:
        return max((f.max_abs_coef() for f in self.terms.values()), default=0.0)


def d_alpha(F: FormField, alpha: int) -> FormField:
    n = F.n
    out: dict[int, ScalarField] = {}
    for mask, f in F.terms.items():
        for A in range(2 * n):
            bit = 1 << A
            if mask & bit:
                continue
            g = nabla(f, A, alpha)
            if g.is_zero():
                continue
            if merge_sign(bit, mask) < 0:
                g = -g
            m = mask | bit
            out[m] = out[m] + g if m in out else g
    return FormField(n, out)


def d0(F: FormField | ScalarField) -> FormField:
    return d_alpha(_as_form(F), 0)


def d1(F: FormField | ScalarField) -> FormField:
    return d_alpha(_as_form(F), 1)


def _as_form(F: FormField | ScalarField) -> FormField:
    return F if isinstance(F, FormField) else FormField.scalar(F)


def baston(u: ScalarField) -> FormField:
    """Delta u = d_0 d_1 u."""
    return d0(d1(u))


def beta_form(n: int) -> FormField:
    return FormField.from_multivector(beta(n))


def wedge_forms(forms: Iterable[FormField], n: int) -> FormField:
    out = FormField.scalar(ScalarField.constant(n, 1.0))
    for f in forms:
        out = out.wedge(f)
    return out


def hat_sign(n: int, A: int) -> int:
    """Sign s_A with omega^A ^ (s_A * sorted monomial without A) = Omega_{2n}."""
    rest = full_mask(n) ^ (1 << A)
    return merge_sign(1 << A, rest) * omega_sign(n)


def form_from_hat_components(components: Sequence[ScalarField]) -> FormField:
    """T = sum_A T_A omega^{hat A}, with omega^A ^ omega^{hat A} = Omega_{2n}."""
    n = components[0].n
    if len(components) != 2 * n:
        raise DimensionMismatch(f"need {2 * n} components, got {len(components)}")
    full = full_mask(n)
    out = {}
    for A, T in enumerate(components):
        out[full ^ (1 << A)] = T if hat_sign(n, A) > 0 else -T
    return FormField(n, out)


def hat_components(T: FormField) -> list[ScalarField]:
    """Inverse of :func:`form_from_hat_components`."""
    n = T.n
    deg = T.degree
    if deg is not None and deg != 2 * n - 1:
        raise WrongDegree(f"expected degree {2 * n - 1}, got {deg}")
    full = full_mask(n)
    comps = []
    for A in range(2 * n):
        f = T.coefficient(full ^ (1 << A))
        comps.append(f if hat_sign(n, A) > 0 else -f)
    return comps
