"""Exact algebra for the parameterization proofs."""

from .poly import Poly, variables
from .proofs import STEPS, Certificate, prove
from .radical import RadElem, Tower
from .univariate import RatFunc

__all__ = ["Poly", "variables", "RadElem", "Tower", "RatFunc", "Certificate", "STEPS", "prove"]
