"""Presentation of R_D for D = alpha * V(f), f a hypersurface of degree p on P^m.

R_D is a Veronese-type subring: the generator family of convergent c_i/d_i has
numerators g ranging over a complement of f * Sym^{(c_i - 1)p} in Sym^{c_i p}. The
complement is spanned by the monomials of degree c_i p not divisible by the leading
monomial of f, which are exactly the monomials left unchanged by reduction mod f.
"""

from __future__ import annotations

import logging
from fractions import Fraction

from ..algebra.polynomial import (
    Polynomial,
    monomial,
    monomials_of_degree,
    poly_divmod_by,
    total_degree,
)
from ..config import Config, get_config
from ..convergents import lower_convergents
from ..errors import CapacityExceededError
from ..geometry.divisor import QDivisor
from ..geometry.variety import Variety
from .search import SectionRing, find_relations
from .types import Generator, Presentation

logger = logging.getLogger(__name__)


def reduced_monomials(f: Polynomial, degree: int) -> list[Polynomial]:
    """Monomials of the given degree that are their own remainder mod f."""
    r = f.ring
    found = []
    for e in monomials_of_degree(r.ngens, degree):
        mono = monomial(r, e)
        _, remainder = poly_divmod_by(mono, f)
        if remainder == mono:
            found.append(mono)
    return found


def veronese_presentation(
    alpha: Fraction | int,
    f: Polynomial,
    m: int,
    config: Config | None = None,
    relations: bool = True,
) -> Presentation:
    """Generators u^{d_i} g / f^{c_i} and the relations among them up to degree 2q.

    With ``relations=False`` only the generators are built.

    Raises:
        NonHomogeneousError: when f is not homogeneous
        CapacityExceededError: when the relation search hits the word cap
    """
    config = config or get_config()
    alpha = Fraction(alpha)
    if alpha <= 0:
        raise ValueError(f"Invalid alpha {alpha}: must be > 0")
    variety = Variety.projective(m)
    p = total_degree(f)
    divisor = QDivisor.build(variety, [(alpha, f)])
    seq = lower_convergents(alpha)
    generators = [
        Generator(
            degree=d,
            numerator=g,
            poles=(c,),
            component=0,
            convergent=i,
            exponent=tuple(g.monoms()[0]),
        )
        for i, (c, d) in enumerate(seq)
        for g in reduced_monomials(f, c * p)
    ]
    if not relations:
        return Presentation(divisor, tuple(generators), convergents=seq)
    bound = 2 * alpha.denominator
    search = find_relations(SectionRing(divisor), generators, bound, config=config)
    if search.capped:
        raise CapacityExceededError("words", config.max_words)
    logger.info(
        "alpha=%s, degree %d hypersurface on P^%d: %d generators, %d relations",
        alpha,
        p,
        m,
        len(generators),
        len(search.relations),
    )
    return Presentation(divisor, tuple(generators), search.relations, convergents=seq)
