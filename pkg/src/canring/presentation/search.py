"""Degree-by-degree search for generators and relations of R_D by exact linear algebra.

Every element of degree d is written as N / prod f_i^{floor(d alpha_i)} with N a form
of the degree (resp. bi-degree) of floor(dD); the graded piece is the full space of
such forms, indexed by its monomials. Multiplying pieces of degrees e and e' multiplies
numerators and the correction prod f_i^{floor((e+e') alpha_i) - floor(e alpha_i) -
floor(e' alpha_i)}.
"""

from __future__ import annotations

import logging
from collections.abc import Iterator, Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction

from ..algebra.linalg import EchelonBasis
from ..algebra.polynomial import (
    Monomial,
    Polynomial,
    coordinates,
    monomial,
    monomials_of_bidegree,
    monomials_of_degree,
    power_product,
)
from ..config import Config, get_config
from ..geometry.divisor import QDivisor, floor_degree, floor_divisor
from ..models.enums import RelationKind
from .types import Generator, Relation, Word, word_product

logger = logging.getLogger(__name__)


class SectionRing:
    """Graded pieces of R_D in the numerator model."""

    def __init__(self, divisor: QDivisor) -> None:
        self.divisor = divisor
        self.variety = divisor.variety
        self.ring = divisor.variety.ring
        self._monomials: dict[int, tuple[Monomial, ...]] = {}
        self._index: dict[int, dict[Monomial, int]] = {}

    def twist(self, d: int) -> tuple[int, ...]:
        return floor_divisor(self.divisor, d)

    def monomials(self, d: int) -> tuple[Monomial, ...]:
        """Monomial basis of the numerators in degree d."""
        if d not in self._monomials:
            degree = floor_degree(self.divisor, d)
            if isinstance(degree, int):
                found = monomials_of_degree(self.variety.m + 1, degree)
            else:
                found = monomials_of_bidegree(self.variety.m, *degree)
            self._monomials[d] = found
            self._index[d] = {e: i for i, e in enumerate(found)}
        return self._monomials[d]

    def dimension(self, d: int) -> int:
        return len(self.monomials(d))

    def vector(self, numerator: Polynomial, d: int) -> dict[int, Fraction]:
        """Coordinates of a degree-d numerator over the monomial basis."""
        self.monomials(d)
        return coordinates(numerator, self._index[d])

    def correction_exponents(self, first: int, second: int) -> tuple[int, ...]:
        total = self.twist(first + second)
        exponents = tuple(
            t - a - b for t, a, b in zip(total, self.twist(first), self.twist(second))
        )
        assert all(e >= 0 for e in exponents), "floor is superadditive"
        return exponents

    def correction(self, first: int, second: int) -> Polynomial:
        return power_product(
            self.ring, self.divisor.polys, self.correction_exponents(first, second)
        )

    def lift(self, generator: Generator) -> Polynomial:
        """Numerator of a generator over prod f_i^{floor(d alpha_i)}."""
        shift = [t - p for t, p in zip(self.twist(generator.degree), generator.poles)]
        if any(s < 0 for s in shift):
            raise ValueError(
                f"Generator of degree {generator.degree} has poles {generator.poles} "
                f"beyond floor(dD) = {self.twist(generator.degree)}"
            )
        return generator.numerator * power_product(self.ring, self.divisor.polys, shift)

    def oracle_generator(self, numerator: Polynomial, d: int) -> Generator:
        return Generator(d, numerator, self.twist(d))


class WordEvaluator:
    """Numerators of generator words, memoized by prefix."""

    def __init__(self, section_ring: SectionRing, generators: Sequence[Generator]) -> None:
        self.section_ring = section_ring
        self.generators = tuple(generators)
        self._lifts = [section_ring.lift(g) for g in self.generators]
        self._cache: dict[Word, Polynomial] = {(): section_ring.ring.one}

    def degree(self, word: Word) -> int:
        return sum(self.generators[g].degree for g in word)

    def image(self, word: Word) -> Polynomial:
        cached = self._cache.get(word)
        if cached is not None:
            return cached
        prefix, last = word[:-1], word[-1]
        prefix_degree = self.degree(prefix)
        result = (
            self.image(prefix)
            * self._lifts[last]
            * self.section_ring.correction(prefix_degree, self.generators[last].degree)
        )
        self._cache[word] = result
        return result

    def vector(self, word: Word) -> dict[int, Fraction]:
        return self.section_ring.vector(self.image(word), self.degree(word))


def count_words(degrees: Sequence[int], d_max: int) -> list[int]:
    """ways[d] = number of generator multisets of total degree d."""
    ways = [1] + [0] * d_max
    for g in degrees:
        for d in range(g, d_max + 1):
            ways[d] += ways[d - g]
    return ways


def iter_words(degrees: Sequence[int], d: int, start: int = 0) -> Iterator[Word]:
    """Sorted words of total degree d in generators with the given degrees."""
    if d == 0:
        yield ()
        return
    for g in range(start, len(degrees)):
        if 0 < degrees[g] <= d:
            for rest in iter_words(degrees, d - degrees[g], g):
                yield (g, *rest)


def find_generators(
    section_ring: SectionRing,
    d_max: int,
    seeds: Mapping[int, Sequence[Generator]] | None = None,
) -> list[Generator]:
    """Minimal generators of R_D in degrees 1..d_max.

    In each degree the span of products of earlier generators is formed first. Seed
    elements of that degree are kept when they enlarge it, and the remaining gap is
    closed greedily with monomial numerators in descending graded-lex order.
    """
    seeds = seeds or {}
    generators: list[Generator] = []
    for d in range(1, d_max + 1):
        dim = section_ring.dimension(d)
        if dim == 0:
            continue
        span = EchelonBasis()
        for g in generators:
            if span.rank == dim:
                break
            base = section_ring.lift(g) * section_ring.correction(g.degree, d - g.degree)
            for e in section_ring.monomials(d - g.degree):
                span.add(section_ring.vector(base * monomial(section_ring.ring, e), d))
                if span.rank == dim:
                    break
        decomposable = span.rank
        for seed in seeds.get(d, ()):
            if span.rank == dim:
                break
            if span.add(section_ring.vector(section_ring.lift(seed), d)) is None:
                generators.append(seed)
        for position, e in enumerate(section_ring.monomials(d)):
            if span.rank == dim:
                break
            if span.add({position: 1}) is None:
                numerator = monomial(section_ring.ring, e)
                generators.append(section_ring.oracle_generator(numerator, d))
        logger.debug(
            "degree %d: dim %d, decomposable %d, new generators %d",
            d,
            dim,
            decomposable,
            dim - decomposable,
        )
    return generators


@dataclass(frozen=True)
class RelationSearch:
    """Minimal relations found up to ``searched_to``; ``capped`` when a cap stopped it."""

    relations: tuple[Relation, ...]
    searched_to: int
    capped: bool


def _relation_vector(
    relation: Relation, shift: Word, position: Mapping[Word, int]
) -> dict[int, int]:
    vector: dict[int, int] = {}
    for coefficient, word in relation.terms:
        key = position[word_product(word, shift)]
        vector[key] = vector.get(key, 0) + coefficient
    return {k: v for k, v in vector.items() if v}


def find_relations(
    section_ring: SectionRing,
    generators: Sequence[Generator],
    d_max: int,
    seeds: Sequence[Relation] = (),
    config: Config | None = None,
) -> RelationSearch:
    """Minimal relations among the generators in degrees 1..d_max.

    In degree d the kernel of words -> graded piece is computed, and a kernel vector
    counts as a new minimal relation when it is independent of the lower relations
    multiplied by all words of complementary degree. Seed relations of degree d are
    taken first when independent of that span.
    """
    config = config or get_config()
    degrees = [g.degree for g in generators]
    ways = count_words(degrees, d_max)
    evaluator = WordEvaluator(section_ring, generators)
    words_by_degree: dict[int, list[Word]] = {}
    minimal: list[Relation] = []
    searched_to = 0

    def words_of(d: int) -> list[Word]:
        if d not in words_by_degree:
            words_by_degree[d] = list(iter_words(degrees, d))
        return words_by_degree[d]

    for d in range(1, d_max + 1):
        if ways[d] > config.max_words:
            logger.warning(
                "Relation search stopped at degree %d: %d words exceed words=%d",
                d,
                ways[d],
                config.max_words,
            )
            return RelationSearch(tuple(minimal), searched_to, True)
        words = words_of(d)
        position = {w: i for i, w in enumerate(words)}
        span = EchelonBasis()
        for relation in minimal:
            for shift in words_of(d - relation.degree):
                span.add(_relation_vector(relation, shift, position))
        for seed in seeds:
            if seed.degree == d:
                if span.add(_relation_vector(seed, (), position)) is None:
                    minimal.append(seed)
                else:
                    logger.debug("Seed relation in degree %d is not minimal", d)
        kernel = EchelonBasis(track=True)
        found = 0
        for i, word in enumerate(words):
            dependency = kernel.add(evaluator.vector(word), label=i)
            if dependency is None:
                continue
            if span.add(dependency) is None:
                minimal.append(_kernel_relation(dependency, words, d))
                found += 1
        logger.debug("degree %d: %d words, %d new kernel relations", d, len(words), found)
        searched_to = d
    return RelationSearch(tuple(minimal), searched_to, False)


def _kernel_relation(dependency: Mapping[int, int], words: Sequence[Word], d: int) -> Relation:
    ordered = sorted(dependency.items())
    sign = 1 if ordered[0][1] > 0 else -1
    return Relation(
        RelationKind.KERNEL,
        tuple((sign * c, words[i]) for i, c in ordered),
        d,
    )
