"""Exact and asymptotic tools for the inversion-count (Mahonian) distribution on words."""

from .errors import DegenerateDistribution, InvalidArgument, NotDivisible, SizeLimitExceeded
from .mahonian import Composition, MahonianDistribution, build, canonicalize, netto_coeffs
from .qpoly import ExactPolynomial, gaussian_binomial, q_multinomial

__all__ = [
    "Composition",
    "DegenerateDistribution",
    "ExactPolynomial",
    "InvalidArgument",
    "MahonianDistribution",
    "NotDivisible",
    "SizeLimitExceeded",
    "build",
    "canonicalize",
    "gaussian_binomial",
    "netto_coeffs",
    "q_multinomial",
]

__version__ = "0.1.0"
