"""Projective spaces P^m and Hirzebruch surfaces F_m."""

from __future__ import annotations

from dataclasses import dataclass

from sympy.polys.rings import PolyRing

from ..algebra.polynomial import (
    Monomial,
    Polynomial,
    bidegree,
    hirzebruch_ring,
    monomial,
    monomial_bidegree,
    projective_ring,
    total_degree,
    variable_names,
)
from ..models.enums import VarietyKind

Degree = int | tuple[int, int]


@dataclass(frozen=True)
class Variety:
    """P^m (m >= 1) or F_m (m >= 0)."""

    kind: VarietyKind
    m: int

    def __post_init__(self) -> None:
        kind = VarietyKind(self.kind)
        object.__setattr__(self, "kind", kind)
        if kind is VarietyKind.PROJECTIVE and self.m < 1:
            raise ValueError(f"Invalid projective dimension {self.m}: must be >= 1")
        if kind is VarietyKind.HIRZEBRUCH and self.m < 0:
            raise ValueError(f"Invalid Hirzebruch type {self.m}: must be >= 0")

    @classmethod
    def projective(cls, m: int) -> Variety:
        return cls(VarietyKind.PROJECTIVE, m)

    @classmethod
    def hirzebruch(cls, m: int) -> Variety:
        return cls(VarietyKind.HIRZEBRUCH, m)

    @property
    def is_projective(self) -> bool:
        return self.kind is VarietyKind.PROJECTIVE

    @property
    def ring(self) -> PolyRing:
        """Coordinate ring: x0..xm, or u, v, z, w."""
        return projective_ring(self.m) if self.is_projective else hirzebruch_ring()

    @property
    def variables(self) -> tuple[str, ...]:
        return variable_names(self.ring)

    def coordinate(self, index: int) -> Polynomial:
        exponents = [0] * self.ring.ngens
        exponents[index] = 1
        return monomial(self.ring, exponents)

    def grade(self, exponents: Monomial) -> Degree:
        """Degree (P^m) or bi-degree (F_m) of a monomial."""
        if self.is_projective:
            return sum(exponents)
        return monomial_bidegree(exponents, self.m)

    def degree_of_poly(self, f: Polynomial) -> Degree:
        """Degree of a homogeneous (resp. bi-homogeneous) polynomial."""
        return total_degree(f) if self.is_projective else bidegree(f, self.m)

    def describe(self) -> str:
        return f"P^{self.m}" if self.is_projective else f"F_{self.m}"
