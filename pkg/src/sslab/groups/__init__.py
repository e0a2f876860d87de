"""Finitely presented groups: words, abelianization, fillings, finite quotients."""
from .alexander import LaurentPolynomial, alexander_polynomial, fox_derivative
from .homs import FiniteGroup, hom_count, hom_count_abelian
from .presentation import (
    AbelianGroup,
    H1Map,
    PeripheralPair,
    Presentation,
    abelianization,
    cokernel,
    fill_quotient,
    peripheral_commutes_in_h1,
    rational_longitude,
)
from .snf import IntMatrixSNF, smith_normal_form

__all__ = [
    "AbelianGroup",
    "FiniteGroup",
    "H1Map",
    "IntMatrixSNF",
    "LaurentPolynomial",
    "PeripheralPair",
    "Presentation",
    "abelianization",
    "alexander_polynomial",
    "cokernel",
    "fill_quotient",
    "fox_derivative",
    "hom_count",
    "hom_count_abelian",
    "peripheral_commutes_in_h1",
    "rational_longitude",
    "smith_normal_form",
]
