"""Quaternionic m-Hessian operators: linear algebra, exterior calculus and numerical checks."""
from .eigen import Spectrum, eigenvalues, jacobi_eigvalsh
from .errors import DomainError, QHessError
from .exterior import Multivector, beta, omega_top, rho_j, top_coefficient, two_form_to_matrix, matrix_to_two_form, wedge
from .fields import FormField, ScalarField, baston, d0, d1, nabla
from .hessian import cf_hessian, hessian_form, is_msh_pointwise, mixed_baston
from .hyperbolic import garding_check, hessian_energy, in_gamma_m, mixed_det, moore_det
from .quat import Quaternion, QuatMatrix, tau
from .reports import SuiteResult, VerificationReport

__version__ = "0.1.0"

__all__ = [
    "DomainError",
    "FormField",
    "Multivector",
    "QHessError",
    "QuatMatrix",
    "Quaternion",
    "ScalarField",
    "Spectrum",
    "SuiteResult",
    "VerificationReport",
    "baston",
    "beta",
    "cf_hessian",
    "d0",
    "d1",
    "eigenvalues",
    "garding_check",
    "hessian_energy",
    "hessian_form",
    "in_gamma_m",
    "is_msh_pointwise",
    "jacobi_eigvalsh",
    "matrix_to_two_form",
    "mixed_baston",
    "mixed_det",
    "moore_det",
    "nabla",
    "omega_top",
    "rho_j",
    "tau",
    "top_coefficient",
    "two_form_to_matrix",
    "wedge",
]
