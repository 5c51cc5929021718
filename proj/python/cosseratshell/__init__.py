"""Cosserat shell curvature measures, energies and homogenized densities."""

from cosseratshell._core import (
    EnergyBreakdown,
    MaterialParams,
    Surface,
    SurfaceFrame,
    anti,
    axl,
    bending_strain,
    convergence_study,
    curvature_energy_hom,
    curvature_energy_hom_plate,
    dev_sym,
    documented_ansatz_names,
    lift_flat,
    membrane_energy_hom,
    membrane_strain,
    minimize_quadratic,
    nye_alpha_to_gamma,
    nye_gamma_to_alpha,
    optimal_curvature_completion,
    optimal_director,
    rotation_exp,
    skew,
    sym,
    verify_suites,
    w_curv_alpha,
    w_curv_devsym,
    w_curv_gamma,
    w_mp,
)

__all__ = [
    "EnergyBreakdown",
    "MaterialParams",
    "Surface",
    "SurfaceFrame",
    "anti",
    "axl",
    "bending_strain",
    "convergence_study",
    "curvature_energy_hom",
    "curvature_energy_hom_plate",
    "dev_sym",
    "documented_ansatz_names",
    "lift_flat",
    "membrane_energy_hom",
    "membrane_strain",
    "minimize_quadratic",
    "nye_alpha_to_gamma",
    "nye_gamma_to_alpha",
    "optimal_curvature_completion",
    "optimal_director",
    "rotation_exp",
    "skew",
    "sym",
    "verify_suites",
    "w_curv_alpha",
    "w_curv_devsym",
    "w_curv_gamma",
    "w_mp",
]
