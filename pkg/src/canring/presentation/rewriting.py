"""Evaluating generator words and rewriting them to normal form."""

from __future__ import annotations

import logging
import random
from collections import Counter
from dataclasses import dataclass

from ..algebra.polynomial import Polynomial, power_product
from ..config import Config, get_config
from ..errors import NormalFormError
from ..models.enums import RelationKind
from .hyperplane import two_convergent_decompose
from .types import Presentation, Relation, Word, make_word

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RingElement:
    """u^degree * numerator / prod f_i^{poles_i}."""

    degree: int
    poles: tuple[int, ...]
    numerator: Polynomial


def evaluate_word(word: Word, presentation: Presentation) -> RingElement:
    """Product of the generators in word."""
    divisor = presentation.divisor
    poles = [0] * divisor.n
    numerator = divisor.variety.ring.one
    degree = 0
    for index in word:
        generator = presentation.generators[index]
        degree += generator.degree
        numerator = numerator * generator.numerator
        for i, p in enumerate(generator.poles):
            poles[i] += p
    return RingElement(degree, tuple(poles), numerator)


def relation_holds(relation: Relation, presentation: Presentation) -> bool:
    """Exact check of sum c * word = 0 after clearing denominators."""
    elements = [(c, evaluate_word(w, presentation)) for c, w in relation.terms]
    if any(e.degree != relation.degree for _, e in elements):
        return False
    divisor = presentation.divisor
    common = [max(e.poles[i] for _, e in elements) for i in range(divisor.n)]
    ring = divisor.variety.ring
    total = ring.zero
    for c, e in elements:
        shift = [p - q for p, q in zip(common, e.poles)]
        total += e.numerator * power_product(ring, divisor.polys, shift) * c
    return not total


def _contains(word: Counter[int], part: Counter[int]) -> bool:
    return all(word[g] >= n for g, n in part.items())


def _rules(presentation: Presentation) -> list[tuple[Counter[int], Counter[int]]]:
    return [
        (Counter(r.left), Counter(r.right))
        for r in presentation.relations
        if r.kind in (RelationKind.G, RelationKind.L) and r.is_binomial
    ]


def normal_form(
    word: Word,
    presentation: Presentation,
    rng: random.Random | None = None,
    config: Config | None = None,
) -> Word:
    """Rewrite word with the G and L relations, left word to right word, until stable.

    Without ``rng`` the first applicable relation is used at each step; with it, a
    random applicable relation.

    Raises:
        NormalFormError: on a cycle or when the step cap is exceeded
    """
    config = config or get_config()
    rules = _rules(presentation)
    current = Counter(word)
    seen: set[Word] = set()
    for _ in range(config.rewrite_steps):
        key = make_word(list(current.elements()))
        if key in seen:
            raise NormalFormError(f"Rewriting cycled at {key}")
        seen.add(key)
        applicable = [rule for rule in rules if _contains(current, rule[0])]
        if not applicable:
            return key
        left, right = rng.choice(applicable) if rng is not None else applicable[0]
        current = current - left + right
    raise NormalFormError(
        f"Rewriting of {make_word(list(word))} exceeded steps={config.rewrite_steps}"
    )


def canonical_form(word: Word, presentation: Presentation) -> Word:
    """The normal form of a word in a single-component presentation, computed directly.

    The total (d, c) is split over two adjacent convergents and the merged numerator
    indices are dealt out in sorted order.
    """
    seq = presentation.convergents
    if seq is None:
        raise ValueError("canonical_form needs a single-component presentation")
    families: list[tuple[int, tuple[int, ...]]] = []
    for g in presentation.generators:
        if g.convergent is None or g.exponent is None or sum(g.exponent) != seq[g.convergent][0]:
            raise ValueError("canonical_form needs a one-hyperplane presentation")
        families.append((g.convergent, g.exponent))
    lookup = {family: i for i, family in enumerate(families)}
    total_d = sum(presentation.generators[g].degree for g in word)
    total_c = sum(seq[families[g][0]][0] for g in word)
    merged = sorted(i for g in word for i, x in enumerate(families[g][1]) for _ in range(x))
    h, (k1, k2) = two_convergent_decompose((total_d, total_c), seq)
    pieces: list[int] = []
    cursor = 0
    size = presentation.divisor.variety.m + 1
    for index, count in ((h, k1), (h + 1, k2)):
        width = seq[index][0] if count else 0
        for _ in range(count):
            v = [0] * size
            for i in merged[cursor : cursor + width]:
                v[i] += 1
            cursor += width
            pieces.append(lookup[(index, tuple(v))])
    return make_word(pieces)
