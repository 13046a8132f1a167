"""Hyperbolic and complex structure of a once-punctured annulus.

The annulus ``1/R < |z| < R`` with a puncture at ``a`` carries two natural
descriptions.  On the complex-analytic side, the extremal lengths of the two
curve families separating the puncture from each boundary circle are computed
through elliptic integrals and Jacobi functions (:mod:`punctann.extremal`).
On the hyperbolic side, a Fuchsian covering group generated by one hyperbolic
and one parabolic transformation yields geodesic lengths and maximal collar
angles in closed form (:mod:`punctann.hyperbolic`).  The two views are linked
by inequalities between geodesic and extremal lengths, and both degenerate in
controlled ways as the annulus is pinched or stretched
(:mod:`punctann.degeneration`).
"""

from .degeneration import (
    CASE_TAGS,
    ConvergenceRow,
    ConvergenceTable,
    LimitScenario,
    conjugator_h,
    conjugator_h1,
    default_scenario,
    limit_jacobi_values,
    limit_p1,
    limit_sn_value,
    run_scenario,
)
from .elliptic import (
    EllipticPair,
    JacobiTriple,
    ModulusReal,
    agm,
    ellip_k,
    elliptic_pair,
    jacobi,
    jacobi_complex_sn,
    mu,
    mu_inverse,
)
from .errors import (
    ClassificationError,
    ConsistencyError,
    ConvergenceError,
    DomainError,
    PoleError,
)
from .extremal import (
    AnnulusParams,
    ExtremalReport,
    consistency_check,
    extremal_lengths,
    length_bounds,
    omega_map,
    sigma_map,
    slit_extremal_length,
    solve_q,
    symmetric_p,
)
from .hyperbolic import (
    GroupParams,
    HyperbolicReport,
    angles_from_lengths,
    build_group,
    collar_angles,
    collar_lemma_angle,
    equal_length_scale,
    geodesic_lengths,
    hyperbolic_generator,
    midpoint_group,
    pants_separation,
    parabolic_generator,
    trichotomy,
    width_to_distance,
)
from .moebius import INFINITY, MapClass, MoebiusMap, classify, conjugate, fixed_points, translation_length
from .render import (
    Arc,
    FundamentalDomain,
    build_domain,
    circle_through,
    domain_contains,
    orbit_words,
    render_svg,
    word_to_map,
)

__version__ = "0.1.0"

__all__ = [
    "AnnulusParams",
    "Arc",
    "CASE_TAGS",
    "ClassificationError",
    "ConsistencyError",
    "ConvergenceError",
    "ConvergenceRow",
    "ConvergenceTable",
    "DomainError",
    "EllipticPair",
    "ExtremalReport",
    "FundamentalDomain",
    "GroupParams",
    "HyperbolicReport",
    "INFINITY",
    "JacobiTriple",
    "LimitScenario",
    "MapClass",
    "ModulusReal",
    "MoebiusMap",
    "PoleError",
    "agm",
    "angles_from_lengths",
    "build_domain",
    "build_group",
    "circle_through",
    "classify",
    "collar_angles",
    "collar_lemma_angle",
    "conjugate",
    "conjugator_h",
    "conjugator_h1",
    "consistency_check",
    "default_scenario",
    "domain_contains",
    "ellip_k",
    "elliptic_pair",
    "equal_length_scale",
    "extremal_lengths",
    "fixed_points",
    "geodesic_lengths",
    "hyperbolic_generator",
    "jacobi",
    "jacobi_complex_sn",
    "length_bounds",
    "limit_jacobi_values",
    "limit_p1",
    "limit_sn_value",
    "midpoint_group",
    "mu",
    "mu_inverse",
    "omega_map",
    "orbit_words",
    "pants_separation",
    "parabolic_generator",
    "render_svg",
    "run_scenario",
    "sigma_map",
    "slit_extremal_length",
    "solve_q",
    "symmetric_p",
    "translation_length",
    "trichotomy",
    "width_to_distance",
    "word_to_map",
]
