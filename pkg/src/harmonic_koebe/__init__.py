"""Univalent harmonic mappings of the unit disk: shearing construction,
generalized harmonic Koebe maps, and verification of their covered-disk,
coefficient, and area bounds."""

from .area import AREA_DIVERGENCE_LIMIT, area_quadrature, area_series, extremal_map
from .bounds import (
    ClassIndex,
    area_lower_bound,
    class_constants,
    coefficient_bound,
    one_sixth_predicate,
    heinz_lower,
    kh3_radius_interval,
    koebe_lower_bound,
    koebe_radius_lower,
)
from .errors import (
    DivergenceError,
    DivisionByNonUnit,
    DomainError,
    HarmonicKoebeError,
    InvalidSpec,
    NormalizationError,
    PoleError,
)
from .extremal import (
    ModulusCheck,
    annulus_modulus,
    radial_modulus_integral,
    slit_map_check,
    slit_modulus_asymptotic,
    modulus_chain_check,
)
from .harmonic import (
    DilatationSpec,
    HarmonicMap,
    check_class,
    closed_form_ids,
    closed_form_parts,
    eval_closed_form,
)
from .radius import (
    BoundaryProfile,
    RadiusEstimate,
    boundary_profile,
    closed_form_radius_estimate,
    koebe_radius_estimate,
    min_modulus,
)
from .reports import BoundReport
from .series import ZERO_TOL, PowerSeries
from .shear import koebe_series, monomial_dilatation, shear, shear_koebe

__version__ = "0.1.0"

__all__ = [
    "AREA_DIVERGENCE_LIMIT",
    "BoundReport",
    "BoundaryProfile",
    "ClassIndex",
    "DilatationSpec",
    "DivergenceError",
    "DivisionByNonUnit",
    "DomainError",
    "HarmonicKoebeError",
    "HarmonicMap",
    "InvalidSpec",
    "ModulusCheck",
    "NormalizationError",
    "PoleError",
    "PowerSeries",
    "RadiusEstimate",
    "ZERO_TOL",
    "annulus_modulus",
    "area_lower_bound",
    "area_quadrature",
    "area_series",
    "boundary_profile",
    "check_class",
    "class_constants",
    "closed_form_ids",
    "closed_form_parts",
    "closed_form_radius_estimate",
    "coefficient_bound",
    "one_sixth_predicate",
    "eval_closed_form",
    "extremal_map",
    "heinz_lower",
    "kh3_radius_interval",
    "koebe_lower_bound",
    "koebe_radius_estimate",
    "koebe_radius_lower",
    "koebe_series",
    "min_modulus",
    "monomial_dilatation",
    "radial_modulus_integral",
    "shear",
    "shear_koebe",
    "slit_map_check",
    "slit_modulus_asymptotic",
    "modulus_chain_check",
]
