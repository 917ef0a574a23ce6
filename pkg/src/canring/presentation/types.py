"""Generators, relations and presentations of section rings."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from ..algebra.polynomial import Monomial, Polynomial
from ..convergents import ConvergentSequence
from ..geometry.divisor import QDivisor
from ..models.enums import RelationKind

# Sorted tuple of generator indices, one entry per factor.
Word = tuple[int, ...]


def make_word(indices: list[int] | tuple[int, ...]) -> Word:
    return tuple(sorted(indices))


def word_product(first: Word, second: Word) -> Word:
    return tuple(sorted(first + second))


@dataclass(frozen=True)
class Generator:
    """The element u^degree * numerator / prod f_i^{poles_i} of R_D.

    ``component``, ``convergent`` and ``exponent`` record where a presentation
    generator came from (the v of F_i^v); oracle generators leave them unset.
    """

    degree: int
    numerator: Polynomial
    poles: tuple[int, ...]
    component: int | None = None
    convergent: int | None = None
    exponent: Monomial | None = None

    def label(self, index: int) -> str:
        if self.convergent is None:
            return f"g{index}"
        vector = "" if self.exponent is None else "^" + ",".join(map(str, self.exponent))
        prefix = "F" if self.component is None else f"F{self.component}_"
        return f"{prefix}{self.convergent}{vector}"


@dataclass(frozen=True)
class Relation:
    """sum coefficient * word = 0 among generators, all words of one degree."""

    kind: RelationKind
    terms: tuple[tuple[int, Word], ...]
    degree: int

    def __post_init__(self) -> None:
        if not self.terms:
            raise ValueError("A relation needs at least one term")

    @classmethod
    def binomial(cls, kind: RelationKind, left: Word, right: Word, degree: int) -> Relation:
        """left - right."""
        return cls(kind, ((1, make_word(left)), (-1, make_word(right))), degree)

    @property
    def is_binomial(self) -> bool:
        return len(self.terms) == 2 and {self.terms[0][0], self.terms[1][0]} == {1, -1}

    @property
    def left(self) -> Word:
        if not self.is_binomial:
            raise ValueError("Only binomial relations have a left word")
        return next(w for c, w in self.terms if c == 1)

    @property
    def right(self) -> Word:
        if not self.is_binomial:
            raise ValueError("Only binomial relations have a right word")
        return next(w for c, w in self.terms if c == -1)

    def words(self) -> tuple[Word, ...]:
        return tuple(w for _, w in self.terms)


@dataclass(frozen=True)
class Presentation:
    """Generators and relations of R_D, relations referencing generator indices.

    ``convergents`` is set for single-component presentations, whose generators are
    indexed by convergent.
    """

    divisor: QDivisor
    generators: tuple[Generator, ...]
    relations: tuple[Relation, ...] = field(default_factory=tuple)
    convergents: ConvergentSequence | None = None

    def __post_init__(self) -> None:
        count = len(self.generators)
        for relation in self.relations:
            for word in relation.words():
                if any(not 0 <= g < count for g in word):
                    raise ValueError(f"Relation word {word} references an unknown generator")

    def generator_degrees(self) -> dict[int, int]:
        """degree -> number of generators."""
        return dict(sorted(Counter(g.degree for g in self.generators).items()))

    def relation_degrees(self) -> dict[int, int]:
        return dict(sorted(Counter(r.degree for r in self.relations).items()))

    @property
    def max_generator_degree(self) -> int:
        return max((g.degree for g in self.generators), default=0)

    @property
    def max_relation_degree(self) -> int:
        return max((r.degree for r in self.relations), default=0)
