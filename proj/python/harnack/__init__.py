"""Sharpened Harnack bounds for positive harmonic functions on the unit disc.

Thin wrapper over the C++ core: hyperbolic geometry of the disc and the
right half-plane, atomic Herglotz measures, the classical and sharpened
Harnack intervals, and the property-verification harness.
"""

import json as _json

from ._core import (
    HerglotzMeasure,
    InequalitySlack,
    artanh,
    beardon_carne_rhs,
    beardon_carne_slack,
    cayley_to_disc,
    cayley_to_halfplane,
    classical_harnack,
    density_disc,
    density_halfplane,
    disc_automorphism,
    dist_disc,
    dist_halfplane,
    eval_f,
    eval_f_prime,
    eval_u,
    extremal_u1,
    extremal_u2,
    grad_u,
    grad_u_fd,
    gradient_norm_extremal,
    halfplane_disc_image,
    halfplane_disc_re_interval,
    hyperbolic_derivative_zero,
    lemma2_identity_gap,
    lemma2_radius,
    markovic_slack,
    mean_value_check,
    schwarz_pick_gradient_slack,
    stronger_harnack,
    suite_names,
    verify_report_json,
)

__all__ = [
    "HerglotzMeasure",
    "InequalitySlack",
    "artanh",
    "beardon_carne_rhs",
    "beardon_carne_slack",
    "cayley_to_disc",
    "cayley_to_halfplane",
    "classical_harnack",
    "density_disc",
    "density_halfplane",
    "disc_automorphism",
    "dist_disc",
    "dist_halfplane",
    "eval_f",
    "eval_f_prime",
    "eval_u",
    "extremal_u1",
    "extremal_u2",
    "grad_u",
    "grad_u_fd",
    "gradient_norm_extremal",
    "halfplane_disc_image",
    "halfplane_disc_re_interval",
    "hyperbolic_derivative_zero",
    "lemma2_identity_gap",
    "lemma2_radius",
    "markovic_slack",
    "mean_value_check",
    "schwarz_pick_gradient_slack",
    "stronger_harnack",
    "suite_names",
    "verify",
    "verify_report_json",
]

__version__ = "0.1.0"


def verify(**kwargs):
    """Run the verification campaign, returning the report as a dict.

    Accepts the keyword arguments of ``verify_report_json``: seed, trials,
    max_atoms, rmax, workers, tolerances.
    """
    return _json.loads(verify_report_json(**kwargs))
