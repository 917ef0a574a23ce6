"""Q-divisors, their degrees and floors, and ghost completion."""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from ..algebra.linalg import EchelonBasis
from ..algebra.polynomial import Polynomial, format_polynomial, terms_of
from ..algebra.rational import floor_rational, lcm_all
from ..errors import (
    NonHomogeneousError,
    ParseError,
    ProportionalComponentsError,
    VariableMismatchError,
)
from ..models.enums import RingShape
from .variety import Degree, Variety

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Component:
    """alpha * V(f) with alpha in lowest terms and the (bi-)degree of f."""

    coefficient: Fraction
    poly: Polynomial
    degree: Degree

    @classmethod
    def create(cls, coefficient: Fraction | int, poly: Polynomial, variety: Variety) -> Component:
        """Validate f against the variety and record its degree."""
        if poly.ring != variety.ring:
            raise VariableMismatchError(
                f"Polynomial over {', '.join(str(s) for s in poly.ring.symbols)} "
                f"does not live on {variety.describe()}"
            )
        if not poly:
            raise ParseError("A divisor component needs a nonzero polynomial")
        degree = variety.degree_of_poly(poly)
        if degree == 0 or degree == (0, 0):
            raise NonHomogeneousError(
                format_polynomial(poly), "A constant polynomial does not define a divisor"
            )
        return cls(Fraction(coefficient), poly, degree)

    @property
    def k(self) -> int:
        """Denominator of the coefficient."""
        return self.coefficient.denominator

    @property
    def a(self) -> int:
        return self.degree if isinstance(self.degree, int) else self.degree[0]

    @property
    def b(self) -> int:
        return 0 if isinstance(self.degree, int) else self.degree[1]


def proportional(f: Polynomial, g: Polynomial) -> bool:
    """Exact test for f = c * g with c a nonzero constant."""
    if f.keys() != g.keys():
        return False
    lead_f = f.LC
    lead_g = g.LC
    return bool(f * lead_g == g * lead_f)


@dataclass(frozen=True)
class QDivisor:
    """Formal sum of alpha_i V(f_i) on a variety."""

    variety: Variety
    components: tuple[Component, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "components", tuple(self.components))
        for comp in self.components:
            if comp.poly.ring != self.variety.ring:
                raise VariableMismatchError(
                    f"Component {format_polynomial(comp.poly)} is not over the "
                    f"coordinates of {self.variety.describe()}"
                )
        for i, first in enumerate(self.components):
            for j in range(i + 1, len(self.components)):
                if proportional(first.poly, self.components[j].poly):
                    raise ProportionalComponentsError(
                        f"Components {i} and {j} are proportional: "
                        f"{format_polynomial(first.poly)} ~ "
                        f"{format_polynomial(self.components[j].poly)}"
                    )

    @classmethod
    def build(
        cls, variety: Variety, pairs: Sequence[tuple[Fraction | int, Polynomial]]
    ) -> QDivisor:
        """Build from (coefficient, polynomial) pairs."""
        return cls(variety, tuple(Component.create(c, f, variety) for c, f in pairs))

    @property
    def n(self) -> int:
        """Number of components."""
        return len(self.components)

    @property
    def alphas(self) -> tuple[Fraction, ...]:
        return tuple(c.coefficient for c in self.components)

    @property
    def ks(self) -> tuple[int, ...]:
        return tuple(c.k for c in self.components)

    @property
    def polys(self) -> tuple[Polynomial, ...]:
        return tuple(c.poly for c in self.components)

    def is_effective(self) -> bool:
        return all(c.coefficient >= 0 for c in self.components)


def degree_of(divisor: QDivisor) -> Fraction | tuple[Fraction, Fraction]:
    """sum alpha_i a_i, or the pair (sum alpha_i a_i, sum alpha_i b_i) on F_m."""
    deg_a = sum((c.coefficient * c.a for c in divisor.components), Fraction(0))
    if divisor.variety.is_projective:
        return deg_a
    deg_b = sum((c.coefficient * c.b for c in divisor.components), Fraction(0))
    return (deg_a, deg_b)


def floor_divisor(divisor: QDivisor, d: int) -> tuple[int, ...]:
    """Coefficients floor(d * alpha_i) of the integral divisor floor(dD)."""
    return tuple(floor_rational(d * c.coefficient) for c in divisor.components)


def floor_degree(divisor: QDivisor, d: int) -> Degree:
    """Degree (or bi-degree) of floor(dD)."""
    twist = floor_divisor(divisor, d)
    deg_a = sum(t * c.a for t, c in zip(twist, divisor.components))
    if divisor.variety.is_projective:
        return deg_a
    deg_b = sum(t * c.b for t, c in zip(twist, divisor.components))
    return (deg_a, deg_b)


def ring_shape(divisor: QDivisor) -> tuple[RingShape, int | None]:
    """Shape of R_D, plus the generator degree when R_D is univariate."""
    degree = degree_of(divisor)
    coords = [degree] if isinstance(degree, Fraction) else list(degree)
    if any(x < 0 for x in coords):
        return RingShape.TRIVIAL, None
    zeros = sum(1 for x in coords if x == 0)
    if zeros == len(coords):
        # floor(dD) is principal of degree 0 exactly when every d*alpha_i is integral
        return RingShape.UNIVARIATE, lcm_all(divisor.ks)
    if zeros:
        return RingShape.PROJECTIVE_LINE, None
    return RingShape.GENERAL, None



def _unit(size: int, index: int) -> tuple[int, ...]:
    return tuple(1 if i == index else 0 for i in range(size))


def _coefficients(comp: Component, positions: Sequence[tuple[int, ...]]) -> list[Fraction]:
    terms = terms_of(comp.poly)
    return [terms.get(p, Fraction(0)) for p in positions]


def _fill_slots(
    variety: Variety,
    comps: Sequence[Component],
    degree: Degree,
    coordinates: Sequence[int],
) -> list[int | Component]:
    """Greedy rank fill: independent components of the given degree, then coordinates."""
    size = variety.ring.ngens
    positions = [_unit(size, j) for j in coordinates]
    slots: list[int | Component] = []
    basis = EchelonBasis()
    for index, comp in enumerate(comps):
        if len(slots) == len(coordinates):
            break
        if comp.degree == degree and basis.add(_coefficients(comp, positions)) is None:
            slots.append(index)
    for offset, j in enumerate(coordinates):
        if len(slots) == len(coordinates):
            break
        if basis.add(_unit(len(coordinates), offset)) is None:
            slots.append(Component(Fraction(0), variety.coordinate(j), degree))
    return slots


def _hirzebruch_fibre_slots(variety: Variety, comps: Sequence[Component]) -> list[int | Component]:
    m = variety.m
    if m == 0:
        return _fill_slots(variety, comps, (0, 1), [2, 3])
    # on F_m with m > 0, z has bi-degree (m, 1) and w has bi-degree (0, 1)
    z_term = _unit(4, 2)
    z_slot: int | Component = next(
        (
            i
            for i, c in enumerate(comps)
            if c.degree == (m, 1) and terms_of(c.poly).get(z_term, 0) != 0
        ),
        Component(Fraction(0), variety.coordinate(2), (m, 1)),
    )
    w_slot: int | Component = next(
        (i for i, c in enumerate(comps) if c.degree == (0, 1)),
        Component(Fraction(0), variety.coordinate(3), (0, 1)),
    )
    return [z_slot, w_slot]


def _basis_slots(divisor: QDivisor) -> list[int | Component]:
    variety = divisor.variety
    comps = divisor.components
    if variety.is_projective:
        return _fill_slots(variety, comps, 1, list(range(variety.m + 1)))
    return _fill_slots(variety, comps, (1, 0), [0, 1]) + _hirzebruch_fibre_slots(variety, comps)


def ghost_forms(divisor: QDivisor) -> list[Polynomial]:
    """Polynomials ghost_complete would append, in slot order."""
    return [s.poly for s in _basis_slots(divisor) if isinstance(s, Component)]


def ghost_complete(divisor: QDivisor) -> QDivisor:
    """Reorder and pad D so the basis forms occupy the leading slots.

    Projective: m + 1 independent linear forms at indices 0..m. Hirzebruch: two
    independent (1, 0)-forms at 0, 1 and the fibre pair at 2, 3. Missing forms are
    coordinate hyperplanes with coefficient 0; the remaining components keep their
    order after the basis slots.
    """
    slots = _basis_slots(divisor)
    used = {s for s in slots if isinstance(s, int)}
    leading = [divisor.components[s] if isinstance(s, int) else s for s in slots]
    rest = [c for i, c in enumerate(divisor.components) if i not in used]
    appended = [s for s in slots if isinstance(s, Component)]
    if appended:
        logger.info(
            "Appended ghost components: %s",
            ", ".join(f"0*V({format_polynomial(c.poly)})" for c in appended),
        )
    return QDivisor(divisor.variety, tuple(leading + rest))


def basis_size(variety: Variety) -> int:
    """Number of leading basis slots after ghost completion."""
    return variety.m + 1 if variety.is_projective else 4


def is_ghost_complete(divisor: QDivisor) -> bool:
    """Whether the leading slots already hold the basis forms."""
    slots = _basis_slots(divisor)
    return all(isinstance(s, int) for s in slots) and list(slots) == list(range(len(slots)))
