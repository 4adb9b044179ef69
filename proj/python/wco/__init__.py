"""Weighted composition operators on discrete measure spaces.

Thin wrapper over the C++ core: densities, conditional expectations, Aluthge
transforms, operator-property verdicts and a dense-matrix oracle.
"""

from ._core import *  # noqa: F401,F403

__all__ = [
    "PointSpace",
    "build_space",
    "space_from_json",
    "load_space",
    "radon_nikodym",
    "cond_exp",
    "cond_exp_pullback",
    "aluthge_weight",
    "aluthge_rn",
    "partial_isometry_weight",
    "apply_operator",
    "apply_adjoint",
    "apply_modulus_power",
    "apply_adjoint_modulus_power",
    "projection",
    "is_densely_defined",
    "is_bounded",
    "aluthge_domain_perp",
    "aluthge_closed_criterion",
    "serwis_conditions",
    "is_p_hyponormal",
    "in_class_Q",
    "is_quasinormal",
    "aluthge_fixed_point",
    "improvement_report",
    "ups_inequality",
    "pq_monotonicity",
    "stages_feasible",
    "matrix_of",
    "aluthge_matrix",
    "polar",
    "gallery_window",
    "gallery_list",
    "random_space",
]
