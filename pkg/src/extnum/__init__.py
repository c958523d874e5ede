"""Exact coset arithmetic over the ordered field of rational functions."""

from .ratfun import NEG_INF, Poly, Q, RatFun, X, x_power
from .magnitude import BOUNDED, INFINITESIMALS, MAG_ALL, MAG_ZERO, Magnitude, ox
from .external import (
    EN_ONE,
    EN_ZERO,
    ExternalNumber,
    RelationClass,
    distributivity_defect,
    magnitude_coset,
    precise,
)

__all__ = [
    "NEG_INF",
    "Poly",
    "Q",
    "RatFun",
    "X",
    "x_power",
    "BOUNDED",
    "INFINITESIMALS",
    "MAG_ALL",
    "MAG_ZERO",
    "Magnitude",
    "ox",
    "EN_ONE",
    "EN_ZERO",
    "ExternalNumber",
    "RelationClass",
    "distributivity_defect",
    "magnitude_coset",
    "precise",
]

__version__ = "0.1.0"
