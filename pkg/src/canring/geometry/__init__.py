"""Varieties, Q-divisors and the graded pieces of their section rings."""

from .divisor import (
    Component,
    QDivisor,
    basis_size,
    degree_of,
    floor_degree,
    floor_divisor,
    ghost_complete,
    ghost_forms,
    is_ghost_complete,
    proportional,
    ring_shape,
)
from .sections import (
    GradedBasis,
    basis_hirz,
    basis_numerator,
    basis_proj,
    graded_basis,
    h0_hirz,
    h0_proj,
    section_dimension,
)
from .variety import Degree, Variety

__all__ = [
    "Component",
    "Degree",
    "GradedBasis",
    "QDivisor",
    "Variety",
    "basis_hirz",
    "basis_numerator",
    "basis_proj",
    "basis_size",
    "degree_of",
    "floor_degree",
    "floor_divisor",
    "ghost_complete",
    "ghost_forms",
    "graded_basis",
    "h0_hirz",
    "h0_proj",
    "is_ghost_complete",
    "proportional",
    "ring_shape",
    "section_dimension",
]
