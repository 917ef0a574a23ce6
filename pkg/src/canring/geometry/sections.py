"""Dimensions and explicit monomial bases of the graded pieces H^0(X, floor(dD))."""

from __future__ import annotations

import math
from dataclasses import dataclass

from ..algebra.polynomial import (
    Monomial,
    Polynomial,
    monomials_of_bidegree,
    monomials_of_degree,
    power_product,
)
from ..errors import DependentBasisError
from .divisor import QDivisor, basis_size, floor_degree, floor_divisor, is_ghost_complete


def h0_proj(m: int, e: int) -> int:
    """h^0(P^m, O(e))."""
    if e < 0:
        return 0
    return math.comb(m + e, m)


def h0_hirz(m: int, a_deg: int, b_deg: int) -> int:
    """Number of monomials of bi-degree (A, B) on F_m."""
    if b_deg < 0:
        return 0
    return sum(max(0, a_deg - m * c + 1) for c in range(b_deg + 1))


@dataclass(frozen=True)
class GradedBasis:
    """Basis of the degree-d piece.

    Each element (c_0, ..., c_n) stands for u^d * prod f_i^{c_i}. ``twist`` holds
    floor(d * alpha_i), so c_i + twist_i >= 0 and prod f_i^{c_i + twist_i} is the
    numerator over the common denominator prod f_i^{twist_i}.
    """

    degree: int
    elements: tuple[Monomial, ...]
    twist: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.elements)

    def numerator_exponents(self, element: Monomial) -> tuple[int, ...]:
        return tuple(c + t for c, t in zip(element, self.twist))


def _require_complete(divisor: QDivisor) -> None:
    if not is_ghost_complete(divisor):
        raise DependentBasisError(
            f"Divisor on {divisor.variety.describe()} is not ghost-completed: the first "
            f"{basis_size(divisor.variety)} components must hold the basis forms"
        )


def _basis(divisor: QDivisor, d: int, exponents: tuple[Monomial, ...]) -> GradedBasis:
    twist = floor_divisor(divisor, d)
    size = basis_size(divisor.variety)
    elements = tuple(
        tuple((e[i] if i < size else 0) - twist[i] for i in range(divisor.n))
        for e in exponents
    )
    return GradedBasis(d, elements, twist)


def basis_proj(divisor: QDivisor, d: int) -> GradedBasis:
    """All tuples with sum c_i a_i = 0, c_i >= -floor(d alpha_i), fixed for i > m.

    Raises:
        DependentBasisError: when the divisor is not ghost-completed
    """
    if not divisor.variety.is_projective:
        raise ValueError("basis_proj needs a divisor on P^m")
    if d < 0:
        raise ValueError(f"Invalid degree {d}: must be >= 0")
    _require_complete(divisor)
    e = floor_degree(divisor, d)
    assert isinstance(e, int)
    return _basis(divisor, d, monomials_of_degree(divisor.variety.m + 1, e))


def basis_hirz(divisor: QDivisor, d: int) -> GradedBasis:
    """Hirzebruch analogue of basis_proj, balanced in both bi-degree rows.

    Raises:
        DependentBasisError: when the divisor is not ghost-completed
    """
    if divisor.variety.is_projective:
        raise ValueError("basis_hirz needs a divisor on F_m")
    if d < 0:
        raise ValueError(f"Invalid degree {d}: must be >= 0")
    _require_complete(divisor)
    degree = floor_degree(divisor, d)
    assert isinstance(degree, tuple)
    return _basis(divisor, d, monomials_of_bidegree(divisor.variety.m, *degree))


def graded_basis(divisor: QDivisor, d: int) -> GradedBasis:
    """basis_proj or basis_hirz by variety."""
    if divisor.variety.is_projective:
        return basis_proj(divisor, d)
    return basis_hirz(divisor, d)


def basis_numerator(divisor: QDivisor, basis: GradedBasis, element: Monomial) -> Polynomial:
    """Numerator of a basis element over prod f_i^{floor(d alpha_i)}."""
    return power_product(
        divisor.variety.ring, divisor.polys, basis.numerator_exponents(element)
    )


def section_dimension(divisor: QDivisor, d: int) -> int:
    """h^0(X, floor(dD)) from the closed forms."""
    degree = floor_degree(divisor, d)
    if isinstance(degree, int):
        return h0_proj(divisor.variety.m, degree)
    return h0_hirz(divisor.variety.m, *degree)
