"""Brute-force minimal generator and relation degrees of R_D.

Runs the degree-by-degree searches of :mod:`canring.presentation.search` on the full
numerator space of every graded piece, with no seeds, so the result is independent of
every bound formula.
"""

from __future__ import annotations

import logging
from collections import Counter
from collections.abc import Sequence
from dataclasses import dataclass

from .algebra.polynomial import Polynomial, monomial
from .bounds import BoundReport
from .config import Config, get_config
from .geometry.divisor import QDivisor
from .models.enums import Verdict
from .presentation.search import SectionRing, find_generators, find_relations
from .presentation.types import Generator, Relation

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GradedPiece:
    """Numerator basis of (R_D)_d over prod f_i^{floor(d alpha_i)}."""

    degree: int
    twist: tuple[int, ...]
    numerators: tuple[Polynomial, ...]

    @property
    def dimension(self) -> int:
        return len(self.numerators)


@dataclass(frozen=True)
class OracleReport:
    """New minimal generators and relations per degree up to ``d_max``."""

    d_max: int
    generators: tuple[Generator, ...]
    relations: tuple[Relation, ...] = ()
    relations_searched: bool = False
    capped: bool = False

    @property
    def generator_degrees(self) -> dict[int, int]:
        return dict(sorted(Counter(g.degree for g in self.generators).items()))

    @property
    def relation_degrees(self) -> dict[int, int]:
        return dict(sorted(Counter(r.degree for r in self.relations).items()))

    @property
    def max_generator_degree(self) -> int:
        return max((g.degree for g in self.generators), default=0)

    @property
    def max_relation_degree(self) -> int:
        return max((r.degree for r in self.relations), default=0)


@dataclass(frozen=True)
class Verification:
    """Verdict of an oracle run against claimed bounds."""

    verdict: Verdict
    oracle: OracleReport
    claims: tuple[int, int] | None
    witness: int | None = None
    violated: str | None = None
    warnings: tuple[str, ...] = ()


def graded_piece(divisor: QDivisor, d: int) -> GradedPiece:
    section_ring = SectionRing(divisor)
    numerators = tuple(monomial(section_ring.ring, e) for e in section_ring.monomials(d))
    return GradedPiece(d, section_ring.twist(d), numerators)


def graded_dimension(divisor: QDivisor, d: int) -> int:
    """dim H^0(X, floor(dD)); 1 at d = 0."""
    if d < 0:
        raise ValueError(f"Invalid degree {d}: must be >= 0")
    return SectionRing(divisor).dimension(d)


def _clamp(d_max: int, config: Config, warnings: list[str]) -> tuple[int, bool]:
    if d_max < 1:
        raise ValueError(f"Invalid d_max {d_max}: must be >= 1")
    if d_max > config.max_degree:
        message = (
            f"d_max={d_max} exceeds dmax={config.max_degree}; searching to {config.max_degree}"
        )
        logger.warning(message)
        warnings.append(message)
        return config.max_degree, True
    return d_max, False


def minimal_generator_degrees(
    divisor: QDivisor, d_max: int, config: Config | None = None
) -> OracleReport:
    """Minimal generators of R_D in degrees 1..d_max.

    A d_max above the ``dmax`` cap is clamped to the cap and the report is marked capped.
    """
    config = config or get_config()
    bound, capped = _clamp(d_max, config, [])
    generators = find_generators(SectionRing(divisor), bound)
    return OracleReport(bound, tuple(generators), capped=capped)


def minimal_relation_degrees(
    divisor: QDivisor,
    d_max: int,
    generators: Sequence[Generator] | None = None,
    config: Config | None = None,
) -> OracleReport:
    """Minimal generators and the minimal relations among them in degrees 1..d_max.

    When ``generators`` is omitted they are computed first. The report is capped when
    either the ``dmax`` or the ``words`` cap stopped the search.
    """
    config = config or get_config()
    bound, capped = _clamp(d_max, config, [])
    section_ring = SectionRing(divisor)
    if generators is None:
        generators = find_generators(section_ring, bound)
    search = find_relations(section_ring, generators, bound, config=config)
    return OracleReport(
        search.searched_to if search.capped else bound,
        tuple(generators),
        search.relations,
        relations_searched=True,
        capped=capped or search.capped,
    )


def verify_bounds(
    divisor: QDivisor,
    report: BoundReport,
    d_max: int,
    relations: bool = True,
    config: Config | None = None,
) -> Verification:
    """Check the oracle's minimal degrees against the claims of a bound report.

    FAIL as soon as a degree exceeds its bound, even when a cap cut the search short.
    INCONCLUSIVE when there are no proven bounds or d_max stops short of the bound
    being checked. A cap hit without a violation is INCONCLUSIVE too.
    """
    config = config or get_config()
    warnings: list[str] = []
    claims = report.claims()
    short = False
    if claims is None:
        warnings.append(f"No proven bounds for ring shape {report.shape.value}")
    else:
        needed = max(claims) if relations else claims[0]
        short = d_max < needed
        if short:
            message = f"d_max={d_max} is below the bound {needed}; degrees above it are unchecked"
            logger.warning(message)
            warnings.append(message)
    bound, capped = _clamp(d_max, config, warnings)
    section_ring = SectionRing(divisor)
    generators = find_generators(section_ring, bound)
    oracle = OracleReport(bound, tuple(generators), capped=capped)
    if relations:
        search = find_relations(section_ring, generators, bound, config=config)
        if search.capped:
            warnings.append(
                f"Relation search stopped after degree {search.searched_to}: "
                f"words={config.max_words} exceeded"
            )
        oracle = OracleReport(
            bound,
            tuple(generators),
            search.relations,
            relations_searched=True,
            capped=capped or search.capped,
        )
    logger.debug(
        "oracle: generators %s, relations %s",
        oracle.generator_degrees,
        oracle.relation_degrees,
    )

    def result(
        verdict: Verdict, witness: int | None = None, violated: str | None = None
    ) -> Verification:
        return Verification(verdict, oracle, claims, witness, violated, tuple(warnings))

    if claims is not None:
        generator_bound, relation_bound = claims
        if oracle.max_generator_degree > generator_bound:
            return result(Verdict.FAIL, oracle.max_generator_degree, "generator")
        if oracle.max_relation_degree > relation_bound:
            return result(Verdict.FAIL, oracle.max_relation_degree, "relation")
    if claims is None or short or oracle.capped:
        return result(Verdict.INCONCLUSIVE)
    return result(Verdict.PASS)


__all__ = [
    "GradedPiece",
    "OracleReport",
    "Verification",
    "graded_dimension",
    "graded_piece",
    "minimal_generator_degrees",
    "minimal_relation_degrees",
    "verify_bounds",
]
