"""Optimal polynomial approximants to ``1/f`` in Dirichlet-type spaces."""

__version__ = "0.1.0"

from .approx import (
    Approximant,
    Family,
    build_approximant,
    closed_form_one_minus_z,
    optimal_approximant,
    power_lift,
    product_approximant,
    residual,
    riesz_family,
)
from .decay import comparability_stats, decay_table
from .estimator import DecayProfile, PolynomialApproximant
from .roots import find_roots, zero_set_sweep
from .series import FactoredPoly, Poly
from .space import WeightKind, weight_sequence

__all__ = [
    "Approximant",
    "DecayProfile",
    "FactoredPoly",
    "Family",
    "Poly",
    "PolynomialApproximant",
    "WeightKind",
    "build_approximant",
    "closed_form_one_minus_z",
    "comparability_stats",
    "decay_table",
    "find_roots",
    "optimal_approximant",
    "power_lift",
    "product_approximant",
    "residual",
    "riesz_family",
    "weight_sequence",
    "zero_set_sweep",
]
