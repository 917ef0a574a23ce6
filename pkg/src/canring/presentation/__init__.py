"""Explicit presentations of section rings of effective Q-divisors on P^m."""

from .effective import component_presentation, effective_presentation
from .hyperplane import (
    class_S,
    one_hyperplane_presentation,
    precede,
    sorted_split,
    two_convergent_decompose,
)
from .hypersurface import reduced_monomials, veronese_presentation
from .rewriting import (
    RingElement,
    canonical_form,
    evaluate_word,
    normal_form,
    relation_holds,
)
from .search import SectionRing, find_generators, find_relations
from .types import Generator, Presentation, Relation, Word

__all__ = [
    "Generator",
    "Presentation",
    "Relation",
    "RingElement",
    "SectionRing",
    "Word",
    "canonical_form",
    "class_S",
    "component_presentation",
    "effective_presentation",
    "evaluate_word",
    "find_generators",
    "find_relations",
    "normal_form",
    "one_hyperplane_presentation",
    "precede",
    "reduced_monomials",
    "relation_holds",
    "sorted_split",
    "two_convergent_decompose",
    "veronese_presentation",
]
