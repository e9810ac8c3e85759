"""Euler series of restricted Chow varieties of smooth complete toric varieties."""

from .builtins import gen_blowup_pn, gen_hirzebruch, gen_pn, gen_product_pn_pm
from .cohomology import (
    ClassVector,
    CohomologyPresentation,
    build_presentation,
    cohomology_rank,
    orbit_class,
    orbit_class_table,
)
from .fan import Fan, enumerate_cones, is_cone_of_fan, make_fan, parse_fan, validate_fan
from .series import (
    FiniteSupportFunction,
    RationalSeriesExpr,
    TruncatedSeries,
    WeightFunctional,
    convolve,
    equivariant_series,
    euler_from_classes,
    expand_product,
    find_positive_functional,
    pushforward_J,
)

__version__ = "0.1.0"
