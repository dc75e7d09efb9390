from .checks import (
    FundamentalResult,
    LelongTrace,
    cln_bound_scan,
    cln_constant,
    coarea_check,
    comparison_check,
    fundamental_check,
    fundamental_constant,
    fundamental_run,
    kappa,
    lelong_report,
    lelong_trace,
    stokes_check,
    stokes_terms,
)
from .quadrature import (
    Ball,
    Estimate,
    QuadratureSpec,
    SphereSurface,
    Sublevel,
    ball_volume,
    integrate,
    integrate_top,
    mc_ball,
    mc_sphere,
    mc_sublevel,
    radial_integral,
    sphere_area,
)

__all__ = [
    "Ball",
    "Estimate",
    "FundamentalResult",
    "LelongTrace",
    "QuadratureSpec",
    "SphereSurface",
    "Sublevel",
    "ball_volume",
    "cln_bound_scan",
    "cln_constant",
    "coarea_check",
    "comparison_check",
    "fundamental_check",
    "fundamental_constant",
    "fundamental_run",
    "integrate",
    "integrate_top",
    "kappa",
    "lelong_report",
    "lelong_trace",
    "mc_ball",
    "mc_sphere",
    "mc_sublevel",
    "radial_integral",
    "sphere_area",
    "stokes_check",
    "stokes_terms",
]
