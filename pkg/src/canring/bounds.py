"""Degree bounds for generators and relations of R_D.

- effective divisors on P^m: (max k_i, 2 max k_i)
- general divisors on P^m: (sum l_i a_i, max(2 sum l_i a_i, max a_i / deg D + sum l_i a_i))
- divisors on F_m: (rho, 2 rho), with tau and the box bound as diagnostics
"""

from __future__ import annotations

import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra.linalg import RationalMatrix, inverse
from .algebra.polynomial import (
    Polynomial,
    format_polynomial,
    polynomial_ring,
    substitute,
    terms_of,
    to_domain,
    total_degree,
)
from .algebra.rational import floor_rational, lcm_all
from .cones import ell, extremal_rays, t_partition
from .errors import DegreeError, DependentBasisError, NonEffectiveError
from .geometry.divisor import QDivisor, basis_size, degree_of, is_ghost_complete, ring_shape
from .models.enums import RingShape

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BoundReport:
    """Generator and relation bounds with the data they are computed from.

    ``generator_bound`` and ``relation_bound`` are the primary bounds: the effective
    ones on effective input, else the general ones. They are None when the ring shape
    makes them meaningless.
    """

    shape: RingShape
    source: str
    degree: Fraction | tuple[Fraction, Fraction]
    generator_bound: int | None = None
    relation_bound: Fraction | None = None
    univariate_degree: int | None = None
    ells: tuple[int, ...] = ()
    ell_pairs: dict[tuple[int, int], int] = field(default_factory=dict)
    ray_degrees: tuple[int, ...] = ()
    chi: int | None = None
    psi: Fraction | None = None
    rho: int | None = None
    tau: int | None = None
    effective: tuple[int, int] | None = None
    projective: tuple[int, Fraction] | None = None
    rewrites: dict[int, str] = field(default_factory=dict)

    @property
    def relation_floor(self) -> int | None:
        return None if self.relation_bound is None else floor_rational(self.relation_bound)

    def claims(self) -> tuple[int, int] | None:
        """(generator, relation) degrees the oracle must respect, or None when unproven."""
        if self.shape == RingShape.TRIVIAL:
            return 0, 0
        if self.shape == RingShape.UNIVARIATE:
            assert self.univariate_degree is not None
            return self.univariate_degree, 0
        if self.generator_bound is None or self.relation_floor is None:
            return None
        return self.generator_bound, self.relation_floor


def _require_complete(divisor: QDivisor) -> None:
    if not is_ghost_complete(divisor):
        raise DependentBasisError("Bounds need a ghost-completed divisor")


def _require_positive_projective(divisor: QDivisor) -> Fraction:
    if not divisor.variety.is_projective:
        raise ValueError("Projective bounds need a divisor on P^m")
    degree = degree_of(divisor)
    assert isinstance(degree, Fraction)
    if degree <= 0:
        raise DegreeError(f"Projective bounds need deg D > 0, got {degree}")
    return degree


def effective_bounds(divisor: QDivisor) -> tuple[int, int]:
    """(max k_i, 2 max k_i) for an effective divisor on P^m.

    Raises:
        NonEffectiveError: on a negative coefficient
        DegreeError: when every coefficient is zero
    """
    if not divisor.variety.is_projective:
        raise ValueError("Effective bounds need a divisor on P^m")
    if not divisor.is_effective():
        raise NonEffectiveError("Effective bounds need all coefficients >= 0")
    if all(alpha == 0 for alpha in divisor.alphas):
        raise DegreeError("Effective bounds need a positive coefficient")
    top = max(divisor.ks)
    return top, 2 * top


def chi_bound(degrees: Sequence[int]) -> int:
    """2 (sum of ray degrees - 1)."""
    if not degrees:
        raise ValueError("chi_bound needs at least one ray")
    return 2 * (sum(degrees) - 1)


def psi_bound_proj(divisor: QDivisor) -> Fraction:
    """max a_i / deg D + sum l_i a_i."""
    degree = _require_positive_projective(divisor)
    ks = divisor.ks
    total = sum(ell(ks, [i]) * c.a for i, c in enumerate(divisor.components))
    return Fraction(max(c.a for c in divisor.components)) / degree + total


def combine_bounds(chi: Fraction | int, psi: Fraction | int) -> Fraction:
    return Fraction(max(chi, psi))


def proj_bounds(divisor: QDivisor) -> tuple[int, Fraction]:
    """(sum l_i a_i, max(2 sum l_i a_i, psi)) for a ghost-completed divisor with deg D > 0.

    Raises:
        DegreeError: when deg D <= 0
        DependentBasisError: when the divisor is not ghost-completed
    """
    _require_positive_projective(divisor)
    _require_complete(divisor)
    ks = divisor.ks
    generator = sum(ell(ks, [i]) * c.a for i, c in enumerate(divisor.components))
    return generator, combine_bounds(2 * generator, psi_bound_proj(divisor))


def rewrite_in_basis(f: Polynomial, basis: Sequence[Polynomial]) -> Polynomial:
    """The polynomial beta in z_0..z_m with beta(basis) = f.

    Raises:
        DependentBasisError: when the basis is not m + 1 independent linear forms
    """
    r = f.ring
    size = r.ngens
    if len(basis) != size:
        raise DependentBasisError(f"Need {size} linear forms, got {len(basis)}")
    units = [tuple(1 if k == j else 0 for k in range(size)) for j in range(size)]
    rows: list[list[Fraction]] = []
    for form in basis:
        if form.ring != r or not form or total_degree(form) != 1:
            raise DependentBasisError(f"{format_polynomial(form)} is not a linear form")
        coefficients = terms_of(form)
        rows.append([Fraction(coefficients.get(unit, 0)) for unit in units])
    inv = inverse(RationalMatrix.from_rows(rows))
    if inv is None:
        raise DependentBasisError("The linear forms are dependent")
    slots = polynomial_ring(tuple(f"z{i}" for i in range(size)))
    images = [
        sum(
            (slots.gens[i] * to_domain(inv.entries[j][i]) for i in range(size)),
            slots.zero,
        )
        for j in range(size)
    ]
    return substitute(f, images)


def _pair_degree(divisor: QDivisor, i: int, j: int) -> int:
    comps = divisor.components
    return ell(divisor.ks, [i, j]) * (comps[i].a * comps[j].b - comps[j].a * comps[i].b)


def _eq_degree(divisor: QDivisor, i: int) -> int:
    comp = divisor.components[i]
    return ell(divisor.ks, [i]) * math.gcd(comp.a, comp.b)


def _hirzebruch_degrees(divisor: QDivisor) -> list[int]:
    parts = t_partition(divisor)
    degrees = [_eq_degree(divisor, i) for i in parts.t_eq]
    degrees += [_pair_degree(divisor, i, j) for i in parts.t_plus for j in parts.t_minus]
    return degrees


def _require_positive_hirzebruch(divisor: QDivisor) -> None:
    if divisor.variety.is_projective:
        raise ValueError("Hirzebruch bounds need a divisor on F_m")
    degree = degree_of(divisor)
    assert isinstance(degree, tuple)
    if degree[0] <= 0 or degree[1] <= 0:
        raise DegreeError(f"Hirzebruch bounds need both bi-degrees positive, got {degree}")


def hirz_rho(divisor: QDivisor) -> int:
    """Sum of the extremal ray degrees."""
    _require_positive_hirzebruch(divisor)
    return sum(_hirzebruch_degrees(divisor))


def hirz_tau(divisor: QDivisor) -> int:
    """rho plus the largest ray degree."""
    _require_positive_hirzebruch(divisor)
    degrees = _hirzebruch_degrees(divisor)
    return sum(degrees) + max(degrees)


def hirz_bounds(divisor: QDivisor) -> tuple[int, int]:
    """(rho, 2 rho)."""
    rho = hirz_rho(divisor)
    return rho, 2 * rho


def _degree_coords(degree: Fraction | tuple[Fraction, Fraction]) -> list[Fraction]:
    return [degree] if isinstance(degree, Fraction) else list(degree)


def compute_bounds(divisor: QDivisor) -> BoundReport:
    """Every bound that applies to a ghost-completed divisor, picked by ring shape."""
    _require_complete(divisor)
    shape, generator_degree = ring_shape(divisor)
    degree = degree_of(divisor)
    if shape == RingShape.TRIVIAL:
        return BoundReport(shape, "trivial", degree)
    if shape == RingShape.UNIVARIATE:
        return BoundReport(
            shape,
            "univariate",
            degree,
            generator_bound=generator_degree,
            univariate_degree=generator_degree,
        )
    if shape == RingShape.PROJECTIVE_LINE:
        logger.warning(
            "Bi-degree %s has a zero coordinate: no bounds apply",
            tuple(map(str, _degree_coords(degree))),
        )
        return BoundReport(shape, "projective_line", degree)

    ks = divisor.ks
    rays = extremal_rays(divisor)
    ray_degrees = tuple(r.degree for r in rays)
    chi = chi_bound(ray_degrees)
    if divisor.variety.is_projective:
        ells = tuple(ell(ks, [i]) for i in range(divisor.n))
        generator, relation = proj_bounds(divisor)
        size = basis_size(divisor.variety)
        rewrites = {
            i: format_polynomial(rewrite_in_basis(c.poly, divisor.polys[:size]))
            for i, c in enumerate(divisor.components)
            if i >= size
        }
        effective = effective_bounds(divisor) if divisor.is_effective() else None
        primary = (effective[0], Fraction(effective[1])) if effective else (generator, relation)
        return BoundReport(
            shape,
            "effective" if effective else "projective",
            degree,
            generator_bound=primary[0],
            relation_bound=primary[1],
            ells=ells,
            ray_degrees=ray_degrees,
            chi=chi,
            psi=psi_bound_proj(divisor),
            effective=effective,
            projective=(generator, relation),
            rewrites=rewrites,
        )
    parts = t_partition(divisor)
    rho, relation_bound = hirz_bounds(divisor)
    return BoundReport(
        shape,
        "hirzebruch",
        degree,
        generator_bound=rho,
        relation_bound=Fraction(relation_bound),
        ells=tuple(ell(ks, [i]) for i in parts.t_eq),
        ell_pairs={(i, j): ell(ks, [i, j]) for i in parts.t_plus for j in parts.t_minus},
        ray_degrees=ray_degrees,
        chi=chi,
        rho=rho,
        tau=hirz_tau(divisor),
    )


__all__ = [
    "BoundReport",
    "chi_bound",
    "combine_bounds",
    "compute_bounds",
    "effective_bounds",
    "hirz_bounds",
    "hirz_rho",
    "hirz_tau",
    "lcm_all",
    "proj_bounds",
    "psi_bound_proj",
    "rewrite_in_basis",
]
