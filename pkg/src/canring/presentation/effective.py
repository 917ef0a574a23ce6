"""Presentation of R_D for an effective Q-divisor on P^m, assembled over its components."""

from __future__ import annotations

import logging
from collections import Counter, defaultdict
from dataclasses import replace

from ..config import Config, get_config
from ..errors import CapacityExceededError, NonEffectiveError
from ..geometry.divisor import Component, QDivisor, ghost_complete, is_ghost_complete
from .hyperplane import one_hyperplane_presentation
from .hypersurface import veronese_presentation
from .search import SectionRing, find_generators, find_relations
from .types import Generator, Presentation, Relation

logger = logging.getLogger(__name__)


def _coordinate_index(component: Component) -> int | None:
    """k when the component polynomial is a multiple of x_k."""
    if len(component.poly) != 1 or component.a != 1:
        return None
    (exponents,) = component.poly.monoms()
    return exponents.index(1)


def component_presentation(
    divisor: QDivisor, index: int, config: Config | None = None, relations: bool = True
) -> Presentation:
    """Presentation of R(P^m, alpha_i D_i) for one component with alpha_i > 0.

    ``relations=False`` skips the kernel search of a hypersurface component; the
    closed-form hyperplane relations are always included.
    """
    component = divisor.components[index]
    m = divisor.variety.m
    k = _coordinate_index(component)
    if k is not None:
        return one_hyperplane_presentation(component.coefficient, k, m)
    return veronese_presentation(component.coefficient, component.poly, m, config, relations)


def _transport(generator: Generator, index: int, size: int) -> Generator:
    poles = [0] * size
    poles[index] = generator.poles[0]
    return replace(generator, poles=tuple(poles), component=index)


def _same_element(ring: SectionRing, first: Generator, second: Generator) -> bool:
    return first.degree == second.degree and ring.lift(first) == ring.lift(second)


def effective_presentation(divisor: QDivisor, config: Config | None = None) -> Presentation:
    """Minimal generators in degrees <= max k_i and minimal relations in degrees <= 2 max k_i.

    Each component contributes the generators of its own presentation as seeds;
    seeds already in the span of products are dropped, and the remaining gap in a
    degree is closed with monomial numerators. Closed-form hyperplane relations whose
    generators all survive seed the relation search. Hypersurface components seed
    generators only.

    Raises:
        NonEffectiveError: on a negative coefficient or a divisor on F_m
    """
    config = config or get_config()
    if not divisor.variety.is_projective:
        raise NonEffectiveError("Effective presentations are only built on P^m")
    negative = [i for i, c in enumerate(divisor.components) if c.coefficient < 0]
    if negative:
        raise NonEffectiveError(
            f"Components {negative} have negative coefficients; use the bounds instead"
        )
    completed = divisor if is_ghost_complete(divisor) else ghost_complete(divisor)
    ring = SectionRing(completed)
    max_k = max(completed.ks)
    local: list[tuple[int, Presentation]] = [
        (i, component_presentation(completed, i, config, relations=False))
        for i, c in enumerate(completed.components)
        if c.coefficient > 0
    ]
    seeds: dict[int, list[Generator]] = defaultdict(list)
    for i, pres in local:
        for g in pres.generators:
            seeds[g.degree].append(_transport(g, i, completed.n))
    if not local:
        # D = 0: R_D = k[u]
        seeds[1].append(Generator(1, completed.variety.ring.one, (0,) * completed.n))
    generators = find_generators(ring, max_k, seeds)

    seed_relations: list[Relation] = []
    for i, pres in local:
        mapping: dict[int, int] = {}
        for position, g in enumerate(pres.generators):
            moved = _transport(g, i, completed.n)
            match = next(
                (j for j, h in enumerate(generators) if _same_element(ring, moved, h)), None
            )
            if match is not None:
                mapping[position] = match
        for relation in pres.relations:
            if all(g in mapping for w in relation.words() for g in w):
                seed_relations.append(
                    Relation(
                        relation.kind,
                        tuple(
                            (c, tuple(sorted(mapping[g] for g in w))) for c, w in relation.terms
                        ),
                        relation.degree,
                    )
                )
    search = find_relations(ring, generators, 2 * max_k, seed_relations, config)
    if search.capped:
        raise CapacityExceededError("words", config.max_words)
    kinds = Counter(r.kind.value for r in search.relations)
    logger.info(
        "Effective presentation: %d generators up to degree %d, relations %s",
        len(generators),
        max_k,
        dict(kinds),
    )
    convergents = local[0][1].convergents if len(local) == 1 else None
    return Presentation(completed, tuple(generators), search.relations, convergents)

